//! Curves with an order-3 point or an order-3 Frobenius-stable subgroup.
//!
//! A rational point of order 3 moved to the origin gives
//! `y² + a·xy + b·y = x³`; rescaling by a cube root of `b/b0^i` reaches
//!
//! ```text
//! E^i_a : y² + a·xy + b0^i·y = x³      (i = 0, 1, 2)
//! ```
//!
//! whose 3-torsion is cyclic exactly when `χ(27·b0^i - a³) ≠ 1`. Curves with
//! full rational 3-torsion form the family
//!
//! ```text
//! E_a : y² + (3a - 1)·xy + a(ρ - 1)(a - (ρ + 1)/3)·y = x³
//! ```
//!
//! on which a 12-element group of Möbius maps acts by isomorphisms. Quadratic
//! twists of both families carry stable order-3 subgroups without rational
//! points.

mod noncyclic;
mod skolem;
mod twist;

pub use noncyclic::{
    burnside_count, ga_action, ga_group, ga_maps, ga_orbit, ga_orbits, noncyclic_curve, noncyclic_domain,
    noncyclic_parameter, BurnsideCount, GaGroup, GaImage, MobiusMap,
};
pub use skolem::{skolem_pattern, skolem_pattern_printed, SkolemRootChoice};
pub use twist::{printed_cyclic_short, printed_noncyclic_short, twist_representatives, TwistRepresentative};

use std::fmt;

use crate::curve::{Curve, IsoWitness, Point};
use crate::error::{Error, Result};
use crate::ff::{CubicClass, Fp, PrimeField};
use crate::oracle::{self, GroupStructure, Order3Subgroup};
use crate::poly::{monic_3div, FactorPattern};

/// Which normal-form family a set of coordinates refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// `E^i_a` with cyclic rational 3-torsion.
    CyclicFamily,
    /// `E_a` with full rational 3-torsion.
    NonCyclicFamily,
    /// Quadratic twist of a `CyclicFamily` member.
    TwistCyclic,
    /// Quadratic twist of a `NonCyclicFamily` member.
    TwistNonCyclic,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::CyclicFamily => "cyclic",
            FamilyKind::NonCyclicFamily => "noncyclic",
            FamilyKind::TwistCyclic => "twist-cyclic",
            FamilyKind::TwistNonCyclic => "twist-noncyclic",
        }
    }

    pub fn is_twist(self) -> bool {
        matches!(self, FamilyKind::TwistCyclic | FamilyKind::TwistNonCyclic)
    }
}

/// Parameters locating a curve in one of the families. `i` is always 0 for
/// the non-cyclic kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyCoords {
    pub kind: FamilyKind,
    pub i: u8,
    pub a: Fp,
}

impl FamilyCoords {
    /// The untwisted family member `E^i_a` or `E_a`.
    pub fn family_curve(&self, field: &PrimeField) -> Result<Curve> {
        match self.kind {
            FamilyKind::CyclicFamily | FamilyKind::TwistCyclic => cyclic_family_curve(field, self.a, self.i),
            FamilyKind::NonCyclicFamily | FamilyKind::TwistNonCyclic => noncyclic_curve(field, self.a),
        }
    }

    /// The curve these coordinates describe; twists come back in short form.
    pub fn curve(&self, field: &PrimeField) -> Result<Curve> {
        let base = self.family_curve(field)?;
        Ok(if self.kind.is_twist() { base.quadratic_twist() } else { base })
    }
}

impl fmt::Display for FamilyCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::CyclicFamily | FamilyKind::TwistCyclic => {
                write!(f, "{} a={} i={}", self.kind.name(), self.a, self.i)
            }
            _ => write!(f, "{} a={}", self.kind.name(), self.a),
        }
    }
}

/// `E^i_a : y² + a·xy + b0^i·y = x³`. Only `i = 0` exists when p ≡ 2 (mod 3).
pub fn cyclic_family_curve(field: &PrimeField, a: Fp, i: u8) -> Result<Curve> {
    let max_i = if field.rho().is_some() { 2 } else { 0 };
    if i > max_i {
        return Err(Error::BadIndex(i as i64));
    }
    Curve::origin_flex(*field, a, field.b0_power(i))
}

/// Normal-form coordinates of a curve with a chosen rational order-3 point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reduction {
    pub a: Fp,
    pub i: u8,
    /// Takes the input curve to `E^i_a`, sending the chosen point to `(0, 0)`.
    pub witness: IsoWitness,
}

/// Moves `pt` to the origin and normalizes `a3` to `b0^i`.
pub fn reduce_to_family(e: &Curve, pt: &Point<Fp>) -> Result<Reduction> {
    let field = e.field();
    let (flex, to_origin) = e.translate_to_origin(pt)?;
    let b = flex.a3();
    let i = match field.cubic_character(b) {
        CubicClass::One => 0,
        CubicClass::Rho => 1,
        CubicClass::RhoSq => 2,
        CubicClass::Zero => return Err(Error::SingularCurve),
    };
    let alpha = field.cube_roots(b / field.b0_power(i))[0];
    let witness = to_origin.then(&IsoWitness::scaling(alpha));
    let a = flex.a1() / alpha;
    debug_assert_eq!(e.transform(&witness), cyclic_family_curve(&field, a, i)?);
    Ok(Reduction { a, i, witness })
}

/// `χ(27·b0^i - a³) ≠ 1`: the rational 3-torsion of `E^i_a` is `Z/3`.
/// Always true when p ≡ 2 (mod 3), where `E[3]` is never fully rational.
pub fn is_cyclic(field: &PrimeField, a: Fp, i: u8) -> Result<bool> {
    cyclic_family_curve(field, a, i)?;
    if field.rho().is_none() {
        return Ok(true);
    }
    let v = field.elem(27) * field.b0_power(i) - a.pow(3);
    Ok(field.cubic_character(v) != CubicClass::One)
}

/// How to read the triple used to pick one `a` per isomorphism class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsoReading {
    /// `{a, ρa, ρ²a}`: the orbit of `a` under `(x, y) ↦ (ρ²x, y)`.
    RhoOrbit,
    /// `{a, ρa, (ρ + 1)a}` taken literally. Since `ρ + 1 = -ρ²`, this mixes
    /// `ρ²a` with its negative.
    Printed,
}

/// `min` of the reading's triple, by canonical representative. The identity
/// when p ≡ 2 (mod 3).
pub fn m_a(field: &PrimeField, a: Fp, reading: IsoReading) -> Fp {
    let Some(rho) = field.rho() else { return a };
    let third = match reading {
        IsoReading::RhoOrbit => rho * rho,
        IsoReading::Printed => rho + field.one(),
    };
    a.min(rho * a).min(third * a)
}

/// Output of [`cyclic_representatives`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicRepresentatives {
    pub reading: IsoReading,
    pub representatives: Vec<FamilyCoords>,
    /// `(a, i)` with `a³ = 27·b0^i`, which are singular and left out.
    pub skipped_singular: Vec<(Fp, u8)>,
}

/// One `E^i_a` per isomorphism class of curves with cyclic rational
/// 3-torsion, sorted by `(i, a)`.
pub fn cyclic_representatives(field: &PrimeField, reading: IsoReading) -> CyclicRepresentatives {
    let indices: &[u8] = if field.rho().is_some() { &[0, 1, 2] } else { &[0] };
    let mut representatives = Vec::new();
    let mut skipped_singular = Vec::new();
    for &i in indices {
        for a in field.elements() {
            match is_cyclic(field, a, i) {
                Err(_) => skipped_singular.push((a, i)),
                Ok(true) if m_a(field, a, reading) == a => {
                    representatives.push(FamilyCoords { kind: FamilyKind::CyclicFamily, i, a })
                }
                Ok(_) => {}
            }
        }
    }
    CyclicRepresentatives { reading, representatives, skipped_singular }
}

/// A Galois-stable order-3 subgroup as reported by [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StableSubgroup {
    pub generator: Point<crate::ff::Fp2>,
    pub abscissa: Option<Fp>,
    pub pointwise_rational: bool,
}

impl From<Order3Subgroup> for StableSubgroup {
    fn from(g: Order3Subgroup) -> Self {
        StableSubgroup { generator: g.generator, abscissa: g.abscissa, pointwise_rational: g.pointwise_rational }
    }
}

/// Everything [`classify`] learns about one curve.
#[derive(Debug, Clone)]
pub struct Torsion3Report {
    pub curve: Curve,
    pub short: (Fp, Fp),
    pub discriminant: Fp,
    pub j_invariant: Fp,
    pub point_count: u64,
    pub trace: i64,
    pub point_count_ext: u64,
    pub group: GroupStructure,
    /// Number of rational points `P` with `3P = O`: 1, 3 or 9.
    pub rational_3torsion_order: u64,
    pub psi3_pattern: FactorPattern,
    pub stable_subgroups: Vec<StableSubgroup>,
    pub family: Option<FamilyCoords>,
}

impl Torsion3Report {
    pub fn p(&self) -> u64 {
        self.curve.p()
    }

    pub fn stable_count(&self) -> usize {
        self.stable_subgroups.len()
    }

    pub fn pointwise_rational_count(&self) -> usize {
        self.stable_subgroups.iter().filter(|g| g.pointwise_rational).count()
    }

    pub fn stable_nonpointwise_count(&self) -> usize {
        self.stable_count() - self.pointwise_rational_count()
    }

    pub fn has_full_rational_3torsion(&self) -> bool {
        self.rational_3torsion_order == 9
    }

    pub fn has_cyclic_rational_3torsion(&self) -> bool {
        self.rational_3torsion_order == 3
    }
}

/// Full 3-torsion classification by enumeration over `F_p` and `F_{p²}`.
pub fn classify(e: &Curve) -> Result<Torsion3Report> {
    let field = e.field();
    let j_invariant = e.j_invariant()?;
    let (sa, sb, _) = e.to_short();
    let point_count = oracle::count_points(e)?;
    let point_count_ext = oracle::count_points_ext(e)?;
    let group = oracle::group_structure(e)?;
    let torsion = oracle::rational_3torsion(e)?;
    let psi3_pattern = monic_3div(sa, sb).factor_pattern()?;
    let stable_subgroups: Vec<StableSubgroup> =
        oracle::stable_order3_subgroups(e)?.into_iter().map(StableSubgroup::from).collect();

    let family = if torsion.len() > 1 {
        Some(family_of_torsion_curve(e, &torsion)?)
    } else if !stable_subgroups.is_empty() {
        let twisted = e.quadratic_twist();
        let twisted_torsion = oracle::rational_3torsion(&twisted)?;
        let inner = family_of_torsion_curve(&twisted, &twisted_torsion)?;
        let kind = match inner.kind {
            FamilyKind::CyclicFamily => FamilyKind::TwistCyclic,
            _ => FamilyKind::TwistNonCyclic,
        };
        Some(FamilyCoords { kind, ..inner })
    } else {
        None
    };

    Ok(Torsion3Report {
        curve: *e,
        short: (sa, sb),
        discriminant: e.discriminant(),
        j_invariant,
        point_count,
        trace: field.p() as i64 + 1 - point_count as i64,
        point_count_ext,
        group,
        rational_3torsion_order: torsion.len() as u64,
        psi3_pattern,
        stable_subgroups,
        family,
    })
}

/// Family coordinates of a curve with rational 3-torsion `torsion` (which
/// includes `O`).
fn family_of_torsion_curve(e: &Curve, torsion: &[Point<Fp>]) -> Result<FamilyCoords> {
    let field = e.field();
    if torsion.len() == 9 {
        let a = noncyclic_parameter(e)?;
        return Ok(FamilyCoords { kind: FamilyKind::NonCyclicFamily, i: 0, a });
    }
    let pt = torsion.iter().find(|pt| !pt.is_infinity()).ok_or(Error::WrongOrder { expected: 3, found: 1 })?;
    let r = reduce_to_family(e, pt)?;
    Ok(FamilyCoords { kind: FamilyKind::CyclicFamily, i: r.i, a: m_a(&field, r.a, IsoReading::RhoOrbit) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn reduction_examples() {
        let f = field(11);
        let e = Curve::origin_flex(f, f.elem(2), f.elem(8)).unwrap();
        let r = reduce_to_family(&e, &Point::new(f.zero(), f.zero())).unwrap();
        assert_eq!((r.a, r.i), (f.one(), 0));

        for p in [5, 7, 13] {
            let f = field(p);
            let e = cyclic_family_curve(&f, f.zero(), 0).unwrap();
            let r = reduce_to_family(&e, &Point::new(f.zero(), f.zero())).unwrap();
            assert_eq!((r.a, r.i), (f.zero(), 0));
            assert!(r.witness.is_identity());
        }

        let f = field(7);
        let e = Curve::origin_flex(f, f.one(), f.elem(3)).unwrap();
        let r = reduce_to_family(&e, &Point::new(f.zero(), f.zero())).unwrap();
        assert_eq!((r.a, r.i), (f.one(), 1));
    }

    #[test]
    fn reduction_from_short_form() {
        let f = field(7);
        let e = Curve::short(f, f.zero(), f.elem(2)).unwrap();
        let pt = Point::new(f.zero(), f.elem(3));
        let r = reduce_to_family(&e, &pt).unwrap();
        assert_eq!(e.transform(&r.witness), cyclic_family_curve(&f, r.a, r.i).unwrap());
        assert_eq!(r.witness.map_point(&f, &pt), Point::new(f.zero(), f.zero()));
    }

    #[test]
    fn reduction_rejects_bad_points() {
        let f = field(7);
        let e = Curve::short(f, f.zero(), f.elem(6)).unwrap();
        assert_eq!(
            reduce_to_family(&e, &Point::new(f.one(), f.zero())),
            Err(Error::WrongOrder { expected: 3, found: 2 })
        );
    }

    #[test]
    fn cyclicity_examples() {
        let f = field(7);
        assert!(!is_cyclic(&f, f.zero(), 0).unwrap());
        assert!(is_cyclic(&f, f.one(), 0).unwrap());
        assert_eq!(is_cyclic(&f, f.elem(3), 0), Err(Error::SingularCurve));
        let g = field(11);
        for a in g.elements() {
            if let Ok(c) = is_cyclic(&g, a, 0) {
                assert!(c);
            }
        }
        assert_eq!(is_cyclic(&g, g.one(), 1), Err(Error::BadIndex(1)));
    }

    #[test]
    fn representatives_for_p5() {
        let f = field(5);
        let reps = cyclic_representatives(&f, IsoReading::RhoOrbit);
        let a: Vec<u64> = reps.representatives.iter().map(|c| c.a.value()).collect();
        assert_eq!(a, vec![0, 1, 2, 4]);
        assert_eq!(reps.skipped_singular, vec![(f.elem(3), 0)]);
        let curves: Vec<Curve> = reps.representatives.iter().map(|c| c.curve(&f).unwrap()).collect();
        for (k, e1) in curves.iter().enumerate() {
            for e2 in &curves[k + 1..] {
                assert!(e1.are_isomorphic(e2).is_none());
            }
        }
    }

    #[test]
    fn representative_counts_for_p7() {
        let f = field(7);
        let orbit = cyclic_representatives(&f, IsoReading::RhoOrbit);
        assert_eq!(orbit.representatives.len(), 6);
        let printed = cyclic_representatives(&f, IsoReading::Printed);
        assert_eq!(printed.representatives.len(), 8);
    }

    #[test]
    fn classify_examples() {
        let f = field(7);
        let e = Curve::new(f, [f.zero(), f.zero(), f.one(), f.zero(), f.zero()]).unwrap();
        let r = classify(&e).unwrap();
        assert_eq!(r.point_count, 9);
        assert_eq!(r.rational_3torsion_order, 9);
        assert_eq!(r.psi3_pattern.to_string(), "{1,1,1,1}");
        assert_eq!((r.stable_count(), r.pointwise_rational_count()), (4, 4));
        assert_eq!(r.trace, -1);
        assert_eq!(r.family.unwrap().kind, FamilyKind::NonCyclicFamily);

        let t = Curve::short(f, f.zero(), f.elem(5)).unwrap();
        let r = classify(&t).unwrap();
        assert_eq!(r.point_count, 7);
        assert_eq!(r.rational_3torsion_order, 1);
        assert_eq!((r.stable_count(), r.pointwise_rational_count()), (4, 0));
        assert_eq!(r.family.unwrap().kind, FamilyKind::TwistNonCyclic);

        let g = field(5);
        let e = Curve::new(g, [g.one(), g.zero(), g.one(), g.zero(), g.zero()]).unwrap();
        let r = classify(&e).unwrap();
        assert_eq!((r.stable_count(), r.pointwise_rational_count()), (2, 1));
        let fam = r.family.unwrap();
        assert_eq!((fam.kind, fam.a, fam.i), (FamilyKind::CyclicFamily, g.one(), 0));
    }

    #[test]
    fn classify_rejects_singular_curves() {
        let f = field(7);
        let s = Curve::from_coeffs(f, [f.elem(3), f.zero(), f.one(), f.zero(), f.zero()]);
        assert_eq!(classify(&s).unwrap_err(), Error::SingularCurve);
    }

    #[test]
    fn attached_family_is_isomorphic_to_the_curve() {
        for p in [7, 13] {
            let f = field(p);
            for a in f.elements() {
                for b in f.elements() {
                    let Ok(e) = Curve::short(f, a, b) else { continue };
                    let r = classify(&e).unwrap();
                    if let Some(fam) = r.family {
                        assert!(fam.curve(&f).unwrap().are_isomorphic(&e).is_some(), "{e:?} vs {fam}");
                    }
                }
            }
        }
    }
}
