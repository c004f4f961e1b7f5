//! Human and JSON renderings of each subcommand's result.

use std::fmt::Write as _;

use ec3_core::oracle::{self, POINT_BOUND};
use ec3_core::poly::division_polynomial;
use ec3_core::torsion3::{
    classify as classify_curve, cyclic_representatives, ga_action, ga_maps, ga_orbit, ga_orbits, noncyclic_curve,
    twist_representatives, FamilyCoords, FamilyKind, IsoReading, StableSubgroup,
};
use ec3_core::{Curve, Error, Fp, Fp2, Point, PrimeField, Result};
use serde_json::{json, Value};

use crate::conformance::{self, Conventions, Verdict};

/// A command's output in both forms.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub text: String,
    pub json: Value,
    /// Whether the result contains a conformance mismatch.
    pub mismatch: bool,
}

impl Rendered {
    fn new(field: &PrimeField, command: &str, body: String, mut json: Value) -> Rendered {
        let obj = json.as_object_mut().expect("object");
        obj.insert("schema_version".into(), json!(1));
        obj.insert("command".into(), json!(command));
        obj.insert("conventions".into(), Conventions::of(field).to_json());
        Rendered { text: format!("{}\n{body}", Conventions::of(field)), json, mismatch: false }
    }

    /// Pretty-printed JSON with sorted keys and a trailing newline.
    pub fn json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
        s.push('\n');
        s
    }
}

/// Families accepted by `enumerate`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Cyclic,
    Noncyclic,
    TwistCyclic,
    TwistNoncyclic,
    Q2mod3,
}

pub fn curve_json(e: &Curve) -> Value {
    let (a, b, _) = e.to_short();
    json!({
        "p": e.p(),
        "short": [a.value(), b.value()],
        "general": e.coefficients().map(|c| c.value()),
    })
}

fn fp2_json(z: Fp2) -> Value {
    json!([z.c0().value(), z.c1().value()])
}

fn point_json(pt: &Point<Fp2>) -> Value {
    match pt {
        Point::Infinity => Value::Null,
        Point::Affine { x, y } => json!({ "x": fp2_json(*x), "y": fp2_json(*y) }),
    }
}

fn coords_json(c: &FamilyCoords) -> Value {
    json!({ "kind": c.kind.name(), "i": c.i, "a": c.a.value() })
}

fn subgroup_json(g: &StableSubgroup) -> Value {
    json!({
        "generator": point_json(&g.generator),
        "abscissa": g.abscissa.map_or(Value::Null, |x| json!(x.value())),
        "pointwise_rational": g.pointwise_rational,
    })
}

fn group_name(n1: u64, n2: u64) -> String {
    if n2 == 1 {
        format!("Z/{n1}")
    } else {
        format!("Z/{n1} × Z/{n2}")
    }
}

pub fn classify(e: &Curve) -> Result<Rendered> {
    let field = e.field();
    let r = classify_curve(e)?;
    let mut t = String::new();
    writeln!(t, "curve: {e}").unwrap();
    writeln!(t, "short form: {}  (A, B) = ({}, {})", e.short_model(), r.short.0, r.short.1).unwrap();
    writeln!(t, "Δ = {}, j = {}", r.discriminant, r.j_invariant).unwrap();
    writeln!(t, "#E(F_p) = {}, t = {}, #E(F_p²) = {}", r.point_count, r.trace, r.point_count_ext).unwrap();
    writeln!(t, "group: {}", group_name(r.group.n1, r.group.n2)).unwrap();
    writeln!(t, "rational 3-torsion: {} points", r.rational_3torsion_order).unwrap();
    writeln!(t, "ψ₃ pattern: {}", r.psi3_pattern).unwrap();
    writeln!(t, "stable order-3 subgroups: {} ({} pointwise rational)", r.stable_count(), r.pointwise_rational_count())
        .unwrap();
    for g in &r.stable_subgroups {
        let x = g.abscissa.map_or("irrational".to_string(), |x| x.to_string());
        let kind = if g.pointwise_rational { "pointwise rational" } else { "twisted" };
        writeln!(t, "  x = {x}: generator {}, {kind}", g.generator).unwrap();
    }
    match &r.family {
        Some(c) => write!(t, "family: {c}").unwrap(),
        None => write!(t, "family: none").unwrap(),
    }

    let json = json!({
        "curve": curve_json(e),
        "discriminant": r.discriminant.value(),
        "j_invariant": r.j_invariant.value(),
        "point_count": r.point_count,
        "trace": r.trace,
        "point_count_ext": r.point_count_ext,
        "group": [r.group.n1, r.group.n2],
        "rational_3torsion_order": r.rational_3torsion_order,
        "psi3_pattern": r.psi3_pattern.degrees(),
        "stable_subgroups": r.stable_subgroups.iter().map(subgroup_json).collect::<Vec<_>>(),
        "family": r.family.as_ref().map_or(Value::Null, coords_json),
    });
    Ok(Rendered::new(&field, "classify", t, json))
}

pub fn enumerate(field: &PrimeField, family: Family) -> Result<Rendered> {
    let p = field.p();
    if family == Family::Q2mod3 {
        if p % 3 != 2 {
            return Err(Error::WrongFieldClass { p, required: 2 });
        }
    } else {
        field.require_rho()?;
    }

    let (coords, name, expr, formula): (Vec<FamilyCoords>, &str, &str, u64) = match family {
        Family::Cyclic | Family::Q2mod3 => {
            let reps = cyclic_representatives(field, IsoReading::RhoOrbit).representatives;
            if family == Family::Cyclic {
                (reps, "cyclic", "(2q+4)/3", (2 * p + 4) / 3)
            } else {
                (reps, "q2mod3", "q−1", p - 1)
            }
        }
        Family::Noncyclic => {
            let reps = ga_orbits(field)?
                .into_iter()
                .map(|orbit| FamilyCoords { kind: FamilyKind::NonCyclicFamily, i: 0, a: orbit[0] })
                .collect();
            (reps, "noncyclic", "(q+12−(q mod 12))/12", (p + 12 - p % 12) / 12)
        }
        Family::TwistCyclic => {
            let reps = twist_representatives(field, FamilyKind::TwistCyclic)?.into_iter().map(|r| r.coords).collect();
            (reps, "twist-cyclic", "(2q+4)/3", (2 * p + 4) / 3)
        }
        Family::TwistNoncyclic => {
            let reps =
                twist_representatives(field, FamilyKind::TwistNonCyclic)?.into_iter().map(|r| r.coords).collect();
            (reps, "twist-noncyclic", "(q+12−(q mod 12))/12", (p + 12 - p % 12) / 12)
        }
    };

    let mut t = String::new();
    let mut items = Vec::with_capacity(coords.len());
    for c in &coords {
        let e = c.curve(field)?;
        let (a, b, _) = e.to_short();
        writeln!(t, "{c}: {e}  short ({a}, {b})").unwrap();
        items.push(json!({ "coords": coords_json(c), "curve": curve_json(&e) }));
    }
    let verdict = if coords.len() as u64 == formula { Verdict::Match } else { Verdict::Mismatch };
    write!(t, "{} representatives; formula {expr} = {formula}; {}", coords.len(), verdict.name()).unwrap();

    let json = json!({
        "family": name,
        "representatives": items,
        "count": coords.len(),
        "formula": { "expression": expr, "value": formula },
        "verdict": verdict.name(),
    });
    Ok(Rendered::new(field, "enumerate", t, json))
}

pub fn divpoly(field: &PrimeField, a: Fp, b: Fp, n: i64) -> Result<Rendered> {
    let psi = division_polynomial(a, b, n)?;
    let coeffs: Vec<u64> = psi.x_part.coeffs().iter().map(|c| c.value()).collect();
    let json = json!({
        "curve": { "p": field.p(), "short": [a.value(), b.value()] },
        "n": n,
        "x_part": coeffs,
        "y_factor": psi.y_factor,
        "text": psi.to_string(),
    });
    Ok(Rendered::new(field, "divpoly", psi.to_string(), json))
}

pub fn orbit(field: &PrimeField, a: Fp) -> Result<Rendered> {
    let base = noncyclic_curve(field, a)?;
    let maps = ga_maps(field)?;
    let images = ga_action(field, a)?;
    let orbit = ga_orbit(field, a)?;

    let mut t = String::new();
    writeln!(t, "E_{a}: {base}").unwrap();
    let mut rows = Vec::new();
    for (g, img) in maps.iter().zip(&images) {
        let value = img.value.map_or("undefined".to_string(), |v| v.to_string());
        let flag = if img.in_domain { "in domain" } else { "excluded" };
        writeln!(t, "{:>2}  {g}  ->  {value}  {flag}", img.index).unwrap();
        rows.push(json!({
            "index": img.index,
            "map": g.to_string(),
            "value": img.value.map_or(Value::Null, |v| json!(v.value())),
            "in_domain": img.in_domain,
        }));
    }
    let members: Vec<String> = orbit.iter().map(|v| v.to_string()).collect();
    write!(t, "orbit {{{}}}", members.join(",")).unwrap();

    let json = json!({
        "a": a.value(),
        "curve": curve_json(&base),
        "images": rows,
        "orbit": orbit.iter().map(|v| v.value()).collect::<Vec<_>>(),
    });
    Ok(Rendered::new(field, "orbit", t, json))
}

/// Integers with a true minus sign, parenthesized when negative.
fn signed(v: i64) -> String {
    if v < 0 {
        format!("(−{})", -v)
    } else {
        v.to_string()
    }
}

pub fn fermat(field: &PrimeField) -> Result<Rendered> {
    oracle::check_bound(field.p(), POINT_BOUND)?;
    let cm = oracle::cm_decompose(field)?;
    let count = oracle::fermat_cubic_count(field);
    let text = format!("{count} solutions; 4q = {}^2 + 27·{}^2", signed(cm.a), cm.b);
    let json = json!({
        "solutions": count,
        "cm_decomposition": { "a": cm.a, "b": cm.b },
        "formula": { "expression": "q−2+A", "value": field.p() as i64 - 2 + cm.a },
    });
    Ok(Rendered::new(field, "fermat", text, json))
}

pub fn verify(p: u64) -> Result<Rendered> {
    let report = conformance::verify(p)?;
    let field = PrimeField::new(p)?;
    let body = report.to_string();
    let mut r = Rendered::new(&field, "verify", String::new(), report.to_json());
    // the report prints its own conventions line
    r.text = body;
    r.mismatch = report.has_mismatch();
    Ok(r)
}
