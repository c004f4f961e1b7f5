//! Elliptic curves `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6` over `F_p`.

mod point;

pub use point::{factorize, Point};

use std::fmt;

use crate::error::{Error, Result};
use crate::ff::{FieldOps, Fp, PrimeField};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Curve {
    field: PrimeField,
    a1: Fp,
    a2: Fp,
    a3: Fp,
    a4: Fp,
    a6: Fp,
}

/// Change of variables `x = u²x' + r`, `y = u³y' + s·u²x' + w` taking a
/// source model to a target model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IsoWitness {
    pub u: Fp,
    pub r: Fp,
    pub s: Fp,
    pub w: Fp,
}

impl IsoWitness {
    pub fn identity(p: u64) -> Self {
        IsoWitness::scaling(Fp::one(p))
    }

    pub fn scaling(u: Fp) -> Self {
        let z = Fp::zero(u.modulus());
        IsoWitness { u, r: z, s: z, w: z }
    }

    pub fn translation(r: Fp, s: Fp, w: Fp) -> Self {
        IsoWitness { u: Fp::one(r.modulus()), r, s, w }
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one() && self.r.is_zero() && self.s.is_zero() && self.w.is_zero()
    }

    /// Apply `self` first, then `next`.
    pub fn then(&self, next: &IsoWitness) -> IsoWitness {
        let (u1, r1, s1, w1) = (self.u, self.r, self.s, self.w);
        let (u2, r2, s2, w2) = (next.u, next.r, next.s, next.w);
        IsoWitness { u: u1 * u2, r: u1 * u1 * r2 + r1, s: u1 * s2 + s1, w: u1.pow(3) * w2 + s1 * u1 * u1 * r2 + w1 }
    }

    pub fn inverse(&self) -> IsoWitness {
        let ui = self.u.inv().expect("u is a unit");
        IsoWitness { u: ui, r: -self.r * ui * ui, s: -self.s * ui, w: (self.s * self.r - self.w) * ui.pow(3) }
    }

    /// Image of a source-model point on the target model.
    pub fn map_point<K: FieldOps>(&self, field: &PrimeField, pt: &Point<K>) -> Point<K> {
        let Point::Affine { x, y } = *pt else { return Point::Infinity };
        let emb = |c: Fp| K::from_base(field, c);
        let ui = emb(self.u.inv().expect("u is a unit"));
        let xr = x - emb(self.r);
        let x2 = xr * ui * ui;
        let y2 = (y - emb(self.s) * xr - emb(self.w)) * ui * ui * ui;
        Point::Affine { x: x2, y: y2 }
    }
}

impl Curve {
    /// A nonsingular curve from `[a1, a2, a3, a4, a6]`.
    pub fn new(field: PrimeField, a: [Fp; 5]) -> Result<Curve> {
        let e = Curve::from_coeffs(field, a);
        if e.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(e)
    }

    /// No nonsingularity check; use for discriminant computations only.
    pub fn from_coeffs(field: PrimeField, a: [Fp; 5]) -> Curve {
        let [a1, a2, a3, a4, a6] = a;
        Curve { field, a1, a2, a3, a4, a6 }
    }

    /// `y² = x³ + Ax + B`.
    pub fn short(field: PrimeField, a: Fp, b: Fp) -> Result<Curve> {
        let z = field.zero();
        Curve::new(field, [z, z, z, a, b])
    }

    /// `y² + a·xy + b·y = x³`, the shape of a curve with an order-3 point at the origin.
    pub fn origin_flex(field: PrimeField, a: Fp, b: Fp) -> Result<Curve> {
        let z = field.zero();
        Curve::new(field, [a, z, b, z, z])
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn coefficients(&self) -> [Fp; 5] {
        [self.a1, self.a2, self.a3, self.a4, self.a6]
    }

    pub fn a1(&self) -> Fp {
        self.a1
    }

    pub fn a3(&self) -> Fp {
        self.a3
    }

    pub fn is_short(&self) -> bool {
        self.a1.is_zero() && self.a2.is_zero() && self.a3.is_zero()
    }

    /// `(A, B)` if the model is already short.
    pub fn short_coefficients(&self) -> Option<(Fp, Fp)> {
        self.is_short().then_some((self.a4, self.a6))
    }

    pub fn b_invariants(&self) -> [Fp; 4] {
        let f = &self.field;
        let (a1, a2, a3, a4, a6) = (self.a1, self.a2, self.a3, self.a4, self.a6);
        let b2 = a1 * a1 + f.elem(4) * a2;
        let b4 = f.elem(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + f.elem(4) * a6;
        let b8 = a1 * a1 * a6 + f.elem(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        [b2, b4, b6, b8]
    }

    pub fn c4(&self) -> Fp {
        let [b2, b4, _, _] = self.b_invariants();
        b2 * b2 - self.field.elem(24) * b4
    }

    pub fn c6(&self) -> Fp {
        let f = &self.field;
        let [b2, b4, b6, _] = self.b_invariants();
        -(b2 * b2 * b2) + f.elem(36) * b2 * b4 - f.elem(216) * b6
    }

    pub fn discriminant(&self) -> Fp {
        let f = &self.field;
        let [b2, b4, b6, b8] = self.b_invariants();
        -(b2 * b2 * b8) - f.elem(8) * b4.pow(3) - f.elem(27) * b6 * b6 + f.elem(9) * b2 * b4 * b6
    }

    pub fn j_invariant(&self) -> Result<Fp> {
        let disc = self.discriminant().inv().ok_or(Error::SingularCurve)?;
        Ok(self.c4().pow(3) * disc)
    }

    /// The model obtained by substituting the witness's change of variables.
    pub fn transform(&self, w: &IsoWitness) -> Curve {
        let f = &self.field;
        let (u, r, s, t) = (w.u, w.r, w.s, w.w);
        let (a1, a2, a3, a4, a6) = (self.a1, self.a2, self.a3, self.a4, self.a6);
        let ui = u.inv().expect("u is a unit");
        let (two, three) = (f.elem(2), f.elem(3));
        Curve {
            field: self.field,
            a1: (a1 + two * s) * ui,
            a2: (a2 - s * a1 + three * r - s * s) * ui.pow(2),
            a3: (a3 + r * a1 + two * t) * ui.pow(3),
            a4: (a4 - s * a3 + two * r * a2 - (t + r * s) * a1 + three * r * r - two * s * t) * ui.pow(4),
            a6: (a6 + r * a4 + r * r * a2 + r.pow(3) - t * a3 - t * t - r * t * a1) * ui.pow(6),
        }
    }

    /// Completes the square and depresses the cubic: `A = -c4/48`, `B = -c6/864`.
    pub fn to_short(&self) -> (Fp, Fp, IsoWitness) {
        let f = &self.field;
        let [b2, _, _, _] = self.b_invariants();
        let half = f.elem(2).inv().expect("p > 2");
        let s = -self.a1 * half;
        let r = -b2 / f.elem(12);
        let w = -(self.a3 + r * self.a1) * half;
        let wit = IsoWitness { u: f.one(), r, s, w };
        let short = self.transform(&wit);
        debug_assert!(short.is_short());
        debug_assert_eq!(short.a4, -self.c4() / f.elem(48));
        debug_assert_eq!(short.a6, -self.c6() / f.elem(864));
        (short.a4, short.a6, wit)
    }

    pub fn short_model(&self) -> Curve {
        let (a, b, _) = self.to_short();
        Curve::from_coeffs(self.field, [self.field.zero(), self.field.zero(), self.field.zero(), a, b])
    }

    /// `y² = x³ + t²A·x + t³B` for the field's canonical non-square `t`.
    pub fn quadratic_twist(&self) -> Curve {
        let (a, b, _) = self.to_short();
        let (ta, tb) = twist_coefficients(&self.field, a, b);
        let z = self.field.zero();
        Curve::from_coeffs(self.field, [z, z, z, ta, tb])
    }

    /// A witness taking `self` to `other`, if the curves are isomorphic over `F_p`.
    pub fn are_isomorphic(&self, other: &Curve) -> Option<IsoWitness> {
        let (a1, b1, w1) = self.to_short();
        let (a2, b2, w2) = other.to_short();
        let u = scaling_between(&self.field, (a1, b1), (a2, b2))?;
        let wit = w1.then(&IsoWitness::scaling(u)).then(&w2.inverse());
        debug_assert_eq!(self.transform(&wit), *other);
        Some(wit)
    }

    /// Moves a rational order-3 point to `(0, 0)` with a horizontal tangent
    /// there, which forces the shape `y² + a1·xy + a3·y = x³`.
    pub fn translate_to_origin<K: FieldOps>(&self, pt: &Point<K>) -> Result<(Curve, IsoWitness)> {
        if !self.contains(pt) {
            return Err(Error::PointNotOnCurve);
        }
        let base = pt.to_base().ok_or(Error::PointNotRational)?;
        let Point::Affine { x, y } = base else {
            return Err(Error::WrongOrder { expected: 3, found: 1 });
        };
        if !self.scalar_mul(3, &base).is_infinity() {
            let found = self.point_order(&base)?;
            return Err(Error::WrongOrder { expected: 3, found });
        }
        let shift = IsoWitness::translation(x, self.field.zero(), y);
        let moved = self.transform(&shift);
        // order 3, so the tangent at the origin is not vertical: a3 ≠ 0
        let slope = moved.a4 / moved.a3;
        let shear = IsoWitness::translation(self.field.zero(), slope, self.field.zero());
        let flex = moved.transform(&shear);
        debug_assert!(flex.a2.is_zero() && flex.a4.is_zero() && flex.a6.is_zero());
        Ok((flex, shift.then(&shear)))
    }
}

/// `(t²A, t³B)` with `t` the field's canonical non-square.
pub fn twist_coefficients(field: &PrimeField, a: Fp, b: Fp) -> (Fp, Fp) {
    let t = field.t();
    (t * t * a, t.pow(3) * b)
}

/// Smallest `u` with `A2 = A1/u⁴` and `B2 = B1/u⁶`.
fn scaling_between(field: &PrimeField, (a1, b1): (Fp, Fp), (a2, b2): (Fp, Fp)) -> Option<Fp> {
    if a1.is_zero() != a2.is_zero() || b1.is_zero() != b2.is_zero() {
        return None;
    }
    let u2_candidates: Vec<Fp> = if !a1.is_zero() && !b1.is_zero() {
        // u⁶/u⁴ ratio pins u² down
        vec![(b1 * a2) / (b2 * a1)]
    } else if a1.is_zero() {
        field.cube_roots(b1 / b2)
    } else {
        match field.sqrt(a1 / a2) {
            Some(s) => vec![s, -s],
            None => Vec::new(),
        }
    };
    u2_candidates
        .into_iter()
        .filter_map(|u2| field.sqrt(u2))
        .flat_map(|u| [u, -u])
        .filter(|&u| !u.is_zero() && u.pow(4) * a2 == a1 && u.pow(6) * b2 == b1)
        .min()
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over F_{}", self, self.p())
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |c: Fp, mon: &str| -> Option<String> {
            if c.is_zero() {
                None
            } else if c.is_one() && !mon.is_empty() {
                Some(mon.to_string())
            } else {
                Some(format!("{c}{mon}"))
            }
        };
        let lhs: Vec<String> =
            [Some("y^2".to_string()), term(self.a1, "xy"), term(self.a3, "y")].into_iter().flatten().collect();
        let rhs: Vec<String> = [Some("x^3".to_string()), term(self.a2, "x^2"), term(self.a4, "x"), term(self.a6, "")]
            .into_iter()
            .flatten()
            .collect();
        write!(f, "{} = {}", lhs.join(" + "), rhs.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn special_family_discriminant() {
        let f = field(7);
        let z = f.zero();
        let e = Curve::from_coeffs(f, [z, z, f.one(), z, z]);
        assert_eq!(e.discriminant().value(), 1); // -27 mod 7
        let s = Curve::from_coeffs(f, [f.elem(3), z, f.one(), z, z]);
        assert!(s.discriminant().is_zero());
        assert_eq!(Curve::new(f, s.coefficients()), Err(Error::SingularCurve));
        assert_eq!(s.j_invariant(), Err(Error::SingularCurve));
    }

    #[test]
    fn discriminant_matches_closed_form_on_flex_family() {
        let f = field(13);
        for a in f.elements() {
            for b in f.elements() {
                let e = Curve::from_coeffs(f, [a, f.zero(), b, f.zero(), f.zero()]);
                assert_eq!(e.discriminant(), (a.pow(3) - f.elem(27) * b) * b.pow(3));
            }
        }
    }

    #[test]
    fn short_curve_invariants() {
        let f = field(7);
        let e = Curve::short(f, f.elem(5), f.elem(2)).unwrap();
        let expected = -(f.elem(16)) * (f.elem(4) * f.elem(125) + f.elem(27) * f.elem(4));
        assert_eq!(e.discriminant(), expected);
        assert_eq!(f.elem(1728) * e.discriminant(), e.c4().pow(3) - e.c6().pow(2));
        assert_eq!(e.j_invariant().unwrap(), e.c4().pow(3) / e.discriminant());
    }

    #[test]
    fn to_short_examples() {
        let f = field(7);
        let z = f.zero();
        let e = Curve::new(f, [z, z, f.one(), z, z]).unwrap();
        let (a, b, _) = e.to_short();
        assert_eq!((a.value(), b.value()), (0, 2));

        let s = Curve::short(f, f.elem(5), f.elem(2)).unwrap();
        let (a, b, w) = s.to_short();
        assert_eq!((a, b), (f.elem(5), f.elem(2)));
        assert!(w.is_identity());
    }

    #[test]
    fn to_short_matches_closed_form_on_cube_normal_family() {
        let f = field(13);
        for a in f.elements() {
            let e = Curve::from_coeffs(f, [a, f.zero(), f.one(), f.zero(), f.zero()]);
            let (sa, sb, _) = e.to_short();
            assert_eq!(sa, -(a * (a.pow(3) - f.elem(24))) / f.elem(48));
            assert_eq!(sb, a.pow(6) / f.elem(864) - a.pow(3) / f.elem(24) + f.elem(4).inv().unwrap());
        }
    }

    #[test]
    fn twist_example() {
        let f = field(7);
        assert_eq!(twist_coefficients(&f, f.zero(), f.elem(2)), (f.zero(), f.elem(5)));
        let e = Curve::short(f, f.zero(), f.elem(2)).unwrap();
        let twice = e.quadratic_twist().quadratic_twist();
        let w = e.are_isomorphic(&twice).expect("twisting twice is trivial");
        assert_eq!((w.u * f.t()).pow(6), f.one());
    }

    #[test]
    fn isomorphism_examples() {
        let f = field(7);
        let e = Curve::short(f, f.zero(), f.elem(2)).unwrap();
        assert!(e.are_isomorphic(&e).unwrap().is_identity());
        let t = Curve::short(f, f.zero(), f.elem(5)).unwrap();
        assert!(e.are_isomorphic(&t).is_none());

        let g = field(101);
        let e1 = Curve::short(g, g.zero(), g.one()).unwrap();
        let e2 = Curve::short(g, g.zero(), g.elem(64)).unwrap();
        let w = e1.are_isomorphic(&e2).unwrap();
        // x = u²x' maps B to B/u⁶, so u is ±1/2 and the reverse map has u = ±2
        let back = w.inverse().u;
        assert!(back == g.elem(2) || back == g.elem(-2));
        assert_eq!(w.u.pow(6), g.elem(64).inv().unwrap());
    }

    #[test]
    fn witness_inverse_and_composition() {
        let f = field(11);
        let w = IsoWitness { u: f.elem(3), r: f.elem(5), s: f.elem(7), w: f.elem(2) };
        assert!(w.then(&w.inverse()).is_identity());
        assert!(w.inverse().then(&w).is_identity());
        let e = Curve::from_coeffs(f, [f.elem(1), f.elem(2), f.elem(3), f.elem(4), f.elem(6)]);
        let v = IsoWitness { u: f.elem(2), r: f.elem(1), s: f.elem(9), w: f.elem(4) };
        assert_eq!(e.transform(&w).transform(&v), e.transform(&w.then(&v)));
    }

    #[test]
    fn translate_examples() {
        let f = field(7);
        let z = f.zero();
        let e = Curve::new(f, [f.elem(2), z, f.elem(5), z, z]).unwrap();
        let (moved, w) = e.translate_to_origin(&Point::new(z, z)).unwrap();
        assert_eq!(moved, e);
        assert!(w.is_identity());

        let s = Curve::short(f, z, f.elem(2)).unwrap();
        let pt = Point::new(z, f.elem(3));
        assert_eq!(s.point_order(&pt).unwrap(), 3);
        let (moved, w) = s.translate_to_origin(&pt).unwrap();
        let [_, a2, a3, a4, a6] = moved.coefficients();
        assert!(a2.is_zero() && a4.is_zero() && a6.is_zero() && !a3.is_zero());
        assert_eq!(w.map_point(&f, &pt), Point::new(z, z));
        assert_eq!(s.transform(&w), moved);
    }

    #[test]
    fn translate_rejects_wrong_orders() {
        let f = field(7);
        // y² = x³ + 6: x³ = -6 = 1 → x ∈ {1, 2, 4} give order-2 points (x, 0)
        let e = Curve::short(f, f.zero(), f.elem(6)).unwrap();
        let two_torsion = Point::new(f.one(), f.zero());
        assert_eq!(e.translate_to_origin(&two_torsion), Err(Error::WrongOrder { expected: 3, found: 2 }));
        assert_eq!(e.translate_to_origin(&Point::<Fp>::Infinity), Err(Error::WrongOrder { expected: 3, found: 1 }));
        // y² = 6 has no root in F_7, so (0, √6) is an order-3 point over F_49 only
        let y = f.embed(f.elem(6)).sqrt().unwrap();
        let irrational = Point::new(f.embed(f.zero()), y);
        assert_eq!(e.point_order(&irrational).unwrap(), 3);
        assert_eq!(e.translate_to_origin(&irrational), Err(Error::PointNotRational));
        let off = Point::new(f.ext(f.zero(), f.one()), f.ext(f.zero(), f.one()));
        assert_eq!(e.translate_to_origin(&off), Err(Error::PointNotOnCurve));
    }
}
