//! Every published count and criterion, recomputed by brute force.
//!
//! A [`ConformanceReport`] holds one [`Claim`] per entry of [`CATALOGUE`], in
//! catalogue order. The printed value is evaluated from its formula and the
//! oracle value is counted directly. The verdict is their comparison, so a
//! claim can only match by agreeing with the enumeration.

use std::fmt;

use ec3_core::oracle::{self, CensusClass, CmDecomposition};
use ec3_core::poly::monic_3div;
use ec3_core::torsion3::{
    burnside_count, cyclic_family_curve, cyclic_representatives, ga_action, ga_group, is_cyclic, noncyclic_curve,
    noncyclic_domain, printed_cyclic_short, printed_noncyclic_short, skolem_pattern, skolem_pattern_printed,
    twist_representatives, FamilyKind, IsoReading, SkolemRootChoice,
};
use ec3_core::{Curve, Fp, Poly, PrimeField, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// Claim ids and where each claim comes from, in report order.
pub const CATALOGUE: [(&str, &str); 32] = [
    ("q2mod3-class-count", "q ≡ 2 mod 3: q − 1 classes of curves with a rational 3-point"),
    ("q2mod3-subgroups", "q ≡ 2 mod 3: one pointwise-rational and one twisted stable subgroup"),
    ("cyclic-criterion", "E^i_a has cyclic rational 3-torsion iff χ(27·b0^i − a³) ≠ 1"),
    ("cyclic-class-count", "(2q+4)/3 classes with cyclic rational 3-torsion"),
    ("cube-successor-count", "(q+10+A)/9 cube values c with c − 1 a cube"),
    ("cube-nonsuccessor-count", "(2q−4+A)/9 cube values c with c − 1 not a cube"),
    ("cyclic-count-twisted-index", "(4q+16+A)/9 cyclic classes with i ∈ {1, 2}"),
    ("iso-reading-rho-orbit", "isomorphism lemma read as the orbit {a, ρa, ρ²a}"),
    ("iso-reading-printed", "isomorphism lemma read literally as {a, ρa, (ρ+1)a}"),
    ("fermat-count", "x³ + y³ = 1 has q − 2 + A affine solutions"),
    ("noncube-pair-count", "(q−1)(2q−4−A)/3 pairs with x³ + y³ not a cube"),
    ("zero-sum-count", "x³ + y³ = 0 has 3q − 2 affine solutions"),
    ("cm-decomposition", "4q = A² + 27B² with A ≡ 1 mod 3"),
    ("noncyclic-class-count", "(q+12−(q mod 12))/12 classes with full rational 3-torsion"),
    ("burnside-total", "Burnside average over the tabulated fixed points"),
    ("fixed-point-table", "fixed points of the twelve parameter maps"),
    ("ga-group", "the twelve parameter maps form Z/2 × Z/6"),
    ("ga-orbit-isomorphism", "each parameter map sends E_a to an isomorphic curve"),
    ("j-invariant-flex", "j(y² + ∛a·xy + y = x³) = −16·a(a−24)³/(a−27)"),
    ("weil-cardinality", "#E(F_q²) = q² + 1 − t² + 2q"),
    ("frobenius-sign", "σ(P) = −P on stable subgroups without rational points"),
    ("twist-pattern-invariance", "ψ₃ factors alike over E and its quadratic twist"),
    ("skolem-printed-canonical", "splits completely iff y0 + 16A/3 and ρy0 + 16A/3 are squares (smallest cube root)"),
    ("skolem-printed-any-root", "splits completely iff y0 + 16A/3 and ρy0 + 16A/3 are squares (some cube root)"),
    ("skolem-resolvent", "splits completely iff every ρ^k·y0 − 4A/3 is a square"),
    ("leonard-parity", "degree ≡ number of factors mod 2 iff the discriminant is a square"),
    ("twist-correspondence-cyclic", "cyclic classes ↔ classes with one twisted stable subgroup"),
    ("twist-correspondence-noncyclic", "full-torsion classes ↔ classes with four twisted stable subgroups"),
    ("twist-family-cyclic", "twists of cyclic representatives have one stable subgroup, none rational"),
    ("twist-family-noncyclic", "twists of E_a have four stable subgroups, none rational"),
    ("twist-formula-cyclic", "short form of y² + a³·xy + b0^i·y = x³ by closed formulas"),
    ("twist-formula-noncyclic", "short form of E_a by closed formulas"),
];

/// Random squarefree polynomials sampled per degree for the parity claim.
pub const LEONARD_SAMPLES: usize = 500;

/// A value on either side of a claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quantity {
    Int(i64),
    /// Reduced, with denominator greater than 1.
    Ratio(i64, i64),
    Text(String),
    Absent,
}

impl Quantity {
    /// `num/den` in lowest terms; an `Int` when it divides evenly.
    pub fn ratio(num: i64, den: i64) -> Quantity {
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        let (n, d) = if den < 0 { (-num / g, -den / g) } else { (num / g, den / g) };
        if d == 1 {
            Quantity::Int(n)
        } else {
            Quantity::Ratio(n, d)
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Quantity::Int(v) => json!(v),
            Quantity::Ratio(..) | Quantity::Text(_) => json!(self.to_string()),
            Quantity::Absent => Value::Null,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Int(v) => write!(f, "{v}"),
            Quantity::Ratio(n, d) => write!(f, "{n}/{d}"),
            Quantity::Text(s) => write!(f, "{s}"),
            Quantity::Absent => write!(f, "-"),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl From<u64> for Quantity {
    fn from(v: u64) -> Self {
        Quantity::Int(v as i64)
    }
}

impl From<usize> for Quantity {
    fn from(v: usize) -> Self {
        Quantity::Int(v as i64)
    }
}

impl From<i64> for Quantity {
    fn from(v: i64) -> Self {
        Quantity::Int(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Match,
    Mismatch,
    NotApplicable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub id: &'static str,
    pub locus: &'static str,
    pub claimed: Quantity,
    pub oracle: Quantity,
    pub verdict: Verdict,
    pub note: String,
}

impl Claim {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "locus": self.locus,
            "claimed": self.claimed.to_json(),
            "oracle": self.oracle.to_json(),
            "verdict": self.verdict.name(),
            "note": self.note,
        })
    }
}

/// The fixed choices every computation depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conventions {
    pub p: u64,
    pub rho: Option<Fp>,
    pub b0: Option<Fp>,
    pub t: Fp,
    pub d: Fp,
}

impl Conventions {
    pub fn of(field: &PrimeField) -> Conventions {
        Conventions { p: field.p(), rho: field.rho(), b0: field.b0(), t: field.t(), d: field.d() }
    }

    pub fn to_json(&self) -> Value {
        let opt = |x: Option<Fp>| x.map_or(Value::Null, |v| json!(v.value()));
        json!({ "p": self.p, "rho": opt(self.rho), "b0": opt(self.b0), "t": self.t.value(), "d": self.d.value() })
    }
}

impl fmt::Display for Conventions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |x: Option<Fp>| x.map_or("none".to_string(), |v| v.to_string());
        write!(
            f,
            "F_{}: ρ = {}, b0 = {}, t = {}, F_p² = F_p(√{}), χ(x) = x^((p−1)/3)",
            self.p,
            opt(self.rho),
            opt(self.b0),
            self.t,
            self.d
        )
    }
}

#[derive(Debug, Clone)]
pub struct ConformanceReport {
    pub prime: u64,
    pub conventions: Conventions,
    pub cm: Option<CmDecomposition>,
    pub claims: Vec<Claim>,
}

impl ConformanceReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.claims.iter().filter(|c| c.verdict == verdict).count()
    }

    pub fn has_mismatch(&self) -> bool {
        self.count(Verdict::Mismatch) > 0
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": 1,
            "command": "verify",
            "prime": self.prime,
            "conventions": self.conventions.to_json(),
            "cm_decomposition": self.cm.map_or(Value::Null, |d| json!({ "a": d.a, "b": d.b })),
            "claims": self.claims.iter().map(Claim::to_json).collect::<Vec<_>>(),
            "summary": {
                "match": self.count(Verdict::Match),
                "mismatch": self.count(Verdict::Mismatch),
                "not_applicable": self.count(Verdict::NotApplicable),
            },
        })
    }
}

impl fmt::Display for ConformanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.conventions)?;
        writeln!(f, "{:<31} {:>10} {:>10}  verdict", "claim", "claimed", "oracle")?;
        for c in &self.claims {
            writeln!(
                f,
                "{:<31} {:>10} {:>10}  {}",
                c.id,
                c.claimed.to_string(),
                c.oracle.to_string(),
                c.verdict.name()
            )?;
            writeln!(f, "    {}", c.locus)?;
            if !c.note.is_empty() {
                writeln!(f, "    note: {}", c.note)?;
            }
        }
        write!(
            f,
            "{} match, {} mismatch, {} not applicable",
            self.count(Verdict::Match),
            self.count(Verdict::Mismatch),
            self.count(Verdict::NotApplicable)
        )
    }
}

/// Collects claims by id and lays them out in catalogue order.
struct Builder {
    claims: Vec<Claim>,
}

impl Builder {
    fn locus(id: &str) -> &'static str {
        CATALOGUE.iter().find(|(k, _)| *k == id).map(|(_, l)| *l).expect("id is in the catalogue")
    }

    fn push(&mut self, id: &'static str, claimed: impl Into<Quantity>, oracle: impl Into<Quantity>, note: String) {
        let (claimed, oracle) = (claimed.into(), oracle.into());
        let verdict = if claimed == oracle { Verdict::Match } else { Verdict::Mismatch };
        self.claims.push(Claim { id, locus: Self::locus(id), claimed, oracle, verdict, note });
    }

    fn skip(&mut self, id: &'static str, reason: &str) {
        self.claims.push(Claim {
            id,
            locus: Self::locus(id),
            claimed: Quantity::Absent,
            oracle: Quantity::Absent,
            verdict: Verdict::NotApplicable,
            note: reason.to_string(),
        });
    }

    fn finish(mut self) -> Vec<Claim> {
        let order = |id: &str| CATALOGUE.iter().position(|(k, _)| *k == id).expect("catalogue id");
        self.claims.sort_by_key(|c| order(c.id));
        debug_assert_eq!(self.claims.len(), CATALOGUE.len());
        self.claims
    }
}

/// Builds the full report for `p`. Needs the census, so `p` is limited to
/// the census bound.
pub fn verify(p: u64) -> Result<ConformanceReport> {
    let field = PrimeField::new(p)?;
    let classes = oracle::census(&field)?;
    let mut b = Builder { claims: Vec::new() };
    let cm = oracle::cm_decompose(&field).ok();

    general_claims(&field, &classes, &mut b);
    if p % 3 == 2 {
        q2mod3_claims(p, &classes, &mut b);
        for (id, _) in CATALOGUE.iter() {
            if !b.claims.iter().any(|c| c.id == *id) {
                b.skip(id, "requires q ≡ 1 mod 3");
            }
        }
    } else {
        for id in ["q2mod3-class-count", "q2mod3-subgroups"] {
            b.skip(id, "requires q ≡ 2 mod 3");
        }
        let cm = cm.expect("q ≡ 1 mod 3 has a decomposition");
        cubic_count_claims(&field, cm, &mut b);
        class_count_claims(&field, &classes, &mut b)?;
        noncyclic_claims(&field, &classes, &mut b)?;
        skolem_claims(&field, &mut b)?;
        twist_claims(&field, &classes, &mut b)?;
    }

    Ok(ConformanceReport { prime: p, conventions: Conventions::of(&field), cm, claims: b.finish() })
}

fn short_pairs(field: &PrimeField) -> Vec<(Fp, Fp)> {
    let all: Vec<(Fp, Fp)> = field.elements().flat_map(|a| field.elements().map(move |b| (a, b))).collect();
    all.into_iter().filter(|&(a, b)| Curve::short(*field, a, b).is_ok()).collect()
}

fn count_where<T>(items: &[T], pred: impl Fn(&T) -> bool) -> usize {
    items.iter().filter(|x| pred(x)).count()
}

/// Claims that make sense for every prime.
fn general_claims(field: &PrimeField, classes: &[CensusClass], b: &mut Builder) {
    let p = field.p();

    // cyclicity criterion against enumeration, over every valid (a, i)
    let indices: &[u8] = if field.rho().is_some() { &[0, 1, 2] } else { &[0] };
    let (mut total, mut agree) = (0usize, 0usize);
    for &i in indices {
        for a in field.elements() {
            let Ok(e) = cyclic_family_curve(field, a, i) else { continue };
            total += 1;
            let torsion = oracle::rational_3torsion(&e).expect("within bound").len();
            agree += usize::from(is_cyclic(field, a, i).expect("nonsingular") == (torsion == 3));
        }
    }
    b.push("cyclic-criterion", total, agree, format!("{total} nonsingular (a, i) checked against E(F_p)[3]"));

    let mut total = 0usize;
    let mut agree = 0usize;
    for c in field.elements() {
        let Ok(e) = Curve::origin_flex(*field, c, field.one()) else { continue };
        let a = c.pow(3);
        let printed = -(field.elem(16) * a * (a - field.elem(24)).pow(3)) / (a - field.elem(27));
        total += 1;
        agree += usize::from(e.j_invariant().expect("nonsingular") == printed);
    }
    let unscaled = field
        .elements()
        .filter_map(|c| Curve::origin_flex(*field, c, field.one()).ok().map(|e| (c.pow(3), e)))
        .filter(|(a, e)| e.j_invariant().unwrap() == *a * (*a - field.elem(24)).pow(3) / (*a - field.elem(27)))
        .count();
    b.push(
        "j-invariant-flex",
        total,
        agree,
        format!("c4³/Δ = a(a−24)³/(a−27) holds for {unscaled} of {total}; the factor −16 only agrees when −16 = 1"),
    );

    let weil = count_where(classes, |c| {
        let r = &c.report;
        r.point_count_ext as i64 == (p * p) as i64 + 1 - r.trace * r.trace + 2 * p as i64
    });
    b.push("weil-cardinality", classes.len(), weil, "one curve per isomorphism class".to_string());

    let mut twisted = 0usize;
    let mut negated = 0usize;
    for c in classes {
        let e = c.curve();
        for g in c.report.stable_subgroups.iter().filter(|g| !g.pointwise_rational) {
            twisted += 1;
            let image = g.generator.frobenius();
            negated += usize::from(g.abscissa.is_some() && image == e.neg(&g.generator));
        }
    }
    b.push("frobenius-sign", twisted, negated, "stable subgroups with irrational points, all classes".to_string());

    let pairs = short_pairs(field);
    let invariant = count_where(&pairs, |&(a, bb)| {
        let e = Curve::short(*field, a, bb).unwrap();
        let (ta, tb, _) = e.quadratic_twist().to_short();
        monic_3div(a, bb).factor_pattern().ok() == monic_3div(ta, tb).factor_pattern().ok()
    });
    b.push("twist-pattern-invariance", pairs.len(), invariant, "all nonsingular (A, B)".to_string());

    let (sampled, holds) = leonard_sample(field);
    b.push(
        "leonard-parity",
        sampled,
        holds,
        format!("{LEONARD_SAMPLES} random squarefree monic cubics and quartics each, seed = p"),
    );
}

/// Random squarefree monic cubics and quartics; returns (sampled, obeying).
fn leonard_sample(field: &PrimeField) -> (usize, usize) {
    let p = field.p();
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let (mut sampled, mut holds) = (0, 0);
    for deg in [3usize, 4] {
        let mut found = 0;
        while found < LEONARD_SAMPLES {
            let mut c: Vec<Fp> = (0..deg).map(|_| Fp::new(rng.gen_range(0..p), p)).collect();
            c.push(field.one());
            let f = Poly::new(p, c);
            if !f.is_squarefree() {
                continue;
            }
            found += 1;
            sampled += 1;
            let r = f.factor_pattern().expect("squarefree").len();
            let disc = f.discriminant().expect("degree 3 or 4");
            holds += usize::from((deg - r).is_multiple_of(2) == disc.is_square());
        }
    }
    (sampled, holds)
}

fn q2mod3_claims(p: u64, classes: &[CensusClass], b: &mut Builder) {
    let with_point: Vec<&CensusClass> = classes.iter().filter(|c| c.report.point_count % 3 == 0).collect();
    b.push("q2mod3-class-count", p - 1, with_point.len(), "census classes with 3 | #E".to_string());
    let split =
        with_point.iter().filter(|c| c.report.stable_count() == 2 && c.report.pointwise_rational_count() == 1).count();
    b.push("q2mod3-subgroups", with_point.len(), split, "classes with 3 | #E".to_string());
}

fn cubic_count_claims(field: &PrimeField, cm: CmDecomposition, b: &mut Builder) {
    let q = field.p() as i64;
    let a = cm.a;
    let fermat = oracle::fermat_cubic_count(field);
    b.push("fermat-count", q - 2 + a, fermat as i64, format!("A = {a}"));
    b.push(
        "noncube-pair-count",
        Quantity::ratio((q - 1) * (2 * q - 4 - a), 3),
        oracle::noncube_pair_count(field) as i64,
        String::new(),
    );
    b.push("zero-sum-count", 3 * q - 2, oracle::zero_sum_cube_count(field) as i64, String::new());
    b.push(
        "cm-decomposition",
        4 * q,
        a * a + 27 * cm.b * cm.b,
        format!("A = {}, B = {} (unique with A ≡ 1 mod 3, B ≥ 0)", cm.a, cm.b),
    );
    b.push(
        "cube-successor-count",
        Quantity::ratio(q + 10 + a, 9),
        oracle::cube_successor_count(field) as i64,
        String::new(),
    );
    let nonsucc = oracle::noncube_successor_count(field) as i64;
    let corrected = Quantity::ratio(2 * q - 4 - a, 9);
    b.push("cube-nonsuccessor-count", Quantity::ratio(2 * q - 4 + a, 9), nonsucc, format!("(2q−4−A)/9 = {corrected}"));
    let twisted_index =
        oracle::cyclic_class_count_by_twist_index(field, 1) + oracle::cyclic_class_count_by_twist_index(field, 2);
    b.push(
        "cyclic-count-twisted-index",
        Quantity::ratio(4 * q + 16 + a, 9),
        twisted_index as i64,
        format!("i = 0 contributes {}", oracle::cyclic_class_count_by_twist_index(field, 0)),
    );
}

/// Whether any two of the curves are isomorphic.
fn isomorphic_pairs(curves: &[Curve]) -> usize {
    let keys: Vec<(Fp, Fp)> = curves
        .iter()
        .map(|e| {
            let (a, b, _) = e.to_short();
            oracle::short_class_key(&e.field(), a, b)
        })
        .collect();
    let mut n = 0;
    for i in 0..keys.len() {
        n += keys[i + 1..].iter().filter(|k| **k == keys[i]).count();
    }
    n
}

fn class_count_claims(field: &PrimeField, classes: &[CensusClass], b: &mut Builder) -> Result<()> {
    let q = field.p() as i64;
    let cyclic = count_where(classes, |c| c.report.has_cyclic_rational_3torsion());
    b.push(
        "cyclic-class-count",
        Quantity::ratio(2 * q + 4, 3),
        cyclic as i64,
        "census classes with E(F_p)[3] = Z/3".to_string(),
    );

    for (id, reading) in [("iso-reading-rho-orbit", IsoReading::RhoOrbit), ("iso-reading-printed", IsoReading::Printed)]
    {
        let reps = cyclic_representatives(field, reading).representatives;
        let curves: Vec<Curve> = reps.iter().map(|c| c.curve(field)).collect::<Result<_>>()?;
        let dup = isomorphic_pairs(&curves);
        b.push(id, reps.len(), cyclic, format!("{} representatives, {dup} isomorphic pairs among them", reps.len()));
    }
    Ok(())
}

fn noncyclic_claims(field: &PrimeField, classes: &[CensusClass], b: &mut Builder) -> Result<()> {
    let burnside = burnside_count(field)?;
    let full = count_where(classes, |c| c.report.has_full_rational_3torsion());
    b.push(
        "noncyclic-class-count",
        burnside.formula,
        full,
        format!(
            "orbits {}, Burnside {}, scanned Burnside {}",
            burnside.orbits, burnside.burnside, burnside.burnside_direct
        ),
    );
    b.push("burnside-total", burnside.burnside, burnside.orbits, "orbits by direct enumeration".to_string());
    let rows: Vec<String> = burnside.table_mismatches.iter().map(|k| k.to_string()).collect();
    b.push(
        "fixed-point-table",
        12usize,
        12 - burnside.table_mismatches.len(),
        if rows.is_empty() { String::new() } else { format!("wrong rows: {}", rows.join(", ")) },
    );

    let group = ga_group(field)?;
    let structure = if group.matches_z2_x_z6() {
        "Z/2 × Z/6".to_string()
    } else if group.matches_a4() {
        "A4".to_string()
    } else {
        "other".to_string()
    };
    let mut orders = group.element_orders.clone();
    orders.sort();
    b.push(
        "ga-group",
        Quantity::Text("Z/2 × Z/6".to_string()),
        Quantity::Text(structure),
        format!(
            "closed: {}, abelian: {}, exponent {}, element orders {:?}",
            group.closed, group.abelian, group.exponent, orders
        ),
    );

    let (mut images, mut isomorphic) = (0usize, 0usize);
    for a in noncyclic_domain(field)? {
        let base = noncyclic_curve(field, a)?;
        for img in ga_action(field, a)?.into_iter().filter(|g| g.in_domain) {
            images += 1;
            let other = noncyclic_curve(field, img.value.expect("in domain"))?;
            isomorphic += usize::from(base.are_isomorphic(&other).is_some());
        }
    }
    b.push("ga-orbit-isomorphism", images, isomorphic, "all (a, g) with g(a) in the domain".to_string());
    Ok(())
}

fn skolem_claims(field: &PrimeField, b: &mut Builder) -> Result<()> {
    let pairs = short_pairs(field);
    let mut agree = [0usize; 3];
    for &(a, bb) in &pairs {
        let actual = monic_3div(a, bb).factor_pattern()?;
        let predicted = [
            skolem_pattern_printed(field, a, bb, SkolemRootChoice::Canonical)?,
            skolem_pattern_printed(field, a, bb, SkolemRootChoice::AnyRoot)?,
            skolem_pattern(field, a, bb)?,
        ];
        for (k, pred) in predicted.iter().enumerate() {
            agree[k] += usize::from(*pred == actual);
        }
    }
    let n = pairs.len();
    b.push("skolem-printed-canonical", n, agree[0], "curves where the prediction equals the factorization".to_string());
    b.push("skolem-printed-any-root", n, agree[1], "curves where the prediction equals the factorization".to_string());
    b.push(
        "skolem-resolvent",
        n,
        agree[2],
        "y0 uses the smallest cube root; the test is the same for every choice".to_string(),
    );
    Ok(())
}

fn twist_claims(field: &PrimeField, classes: &[CensusClass], b: &mut Builder) -> Result<()> {
    let cyclic = count_where(classes, |c| c.report.has_cyclic_rational_3torsion());
    let full = count_where(classes, |c| c.report.has_full_rational_3torsion());
    let twisted_with = |k: usize| {
        count_where(classes, |c| c.report.pointwise_rational_count() == 0 && c.report.stable_nonpointwise_count() == k)
    };
    b.push("twist-correspondence-cyclic", cyclic, twisted_with(1), "census counts".to_string());
    b.push("twist-correspondence-noncyclic", full, twisted_with(4), "census counts".to_string());

    for (id, kind, stable) in
        [("twist-family-cyclic", FamilyKind::TwistCyclic, 1), ("twist-family-noncyclic", FamilyKind::TwistNonCyclic, 4)]
    {
        let reps = twist_representatives(field, kind)?;
        let mut good = 0usize;
        for rep in &reps {
            let subs = oracle::stable_order3_subgroups(&rep.curve())?;
            good += usize::from(subs.len() == stable && subs.iter().all(|g| !g.pointwise_rational));
        }
        b.push(id, reps.len(), good, format!("each should have {stable} stable subgroup(s)"));
    }

    let (mut total, mut agree) = (0usize, 0usize);
    for i in 0..3 {
        for a in field.elements() {
            let Ok(e) = Curve::origin_flex(*field, a.pow(3), field.b0_power(i)) else { continue };
            let (sa, sb, _) = e.to_short();
            total += 1;
            agree += usize::from(printed_cyclic_short(field, a, i) == (sa, sb));
        }
    }
    b.push("twist-formula-cyclic", total, agree, "compared with to_short on every nonsingular (a, i)".to_string());

    let domain = noncyclic_domain(field)?;
    let mut agree = 0usize;
    for &a in &domain {
        let (sa, sb, _) = noncyclic_curve(field, a)?.to_short();
        agree += usize::from(printed_noncyclic_short(field, a)? == (sa, sb));
    }
    b.push("twist-formula-noncyclic", domain.len(), agree, "compared with to_short on the whole domain".to_string());
    Ok(())
}
