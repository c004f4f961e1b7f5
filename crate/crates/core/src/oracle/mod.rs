//! Brute-force ground truth. Everything here enumerates; nothing relies on
//! the closed formulas it is used to check.

mod census;
mod cubics;

pub use census::{census, census_filtered, short_class_key, CensusClass};
pub use cubics::{
    cm_decompose, cube_successor_count, cyclic_class_count_by_twist_index, fermat_cubic_count, noncube_pair_count,
    noncube_successor_count, zero_sum_cube_count, CmDecomposition,
};

use crate::curve::{Curve, Point};
use crate::error::{Error, Result};
use crate::ff::{Fp, Fp2, PrimeField};

/// Largest `p` for enumerating `E(F_p)`.
pub const POINT_BOUND: u64 = 10_000;
/// Largest `p` for enumerating over `F_{p²}`.
pub const EXT_POINT_BOUND: u64 = 300;
/// Largest `p` for the all-curves census.
pub const CENSUS_BOUND: u64 = 100;

/// `FieldTooLarge` when `p` is above `bound`.
pub fn check_bound(p: u64, bound: u64) -> Result<()> {
    if p > bound {
        Err(Error::FieldTooLarge { p, bound })
    } else {
        Ok(())
    }
}

/// `#E(F_p)`, the group type `(n1, n2)` with `E(F_p) ≅ Z/n1 × Z/n2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupStructure {
    pub n1: u64,
    pub n2: u64,
}

impl GroupStructure {
    pub fn order(&self) -> u64 {
        self.n1 * self.n2
    }
}

/// An order-3 subgroup `{O, P, -P}` of `E[3]`, found over `F_{p²}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Order3Subgroup {
    /// The smaller of `±P`.
    pub generator: Point<Fp2>,
    /// The common abscissa of `±P` when it lies in `F_p`.
    pub abscissa: Option<Fp>,
    /// Mapped to itself by Frobenius.
    pub stable: bool,
    /// Every point lies in `E(F_p)`.
    pub pointwise_rational: bool,
}

fn line_coeff<K>(field: &PrimeField, e: &Curve, x: K) -> (K, K)
where
    K: crate::ff::FieldOps,
{
    // y² + h(x)·y = f(x); the discriminant in y is h² + 4f
    let [a1, a2, a3, a4, a6] = e.coefficients().map(|c| K::from_base(field, c));
    let h = a1 * x + a3;
    let f = x * x * x + a2 * x * x + a4 * x + a6;
    let four = K::from_base(field, field.elem(4));
    (h, h * h + four * f)
}

/// All points of `E(F_p)` in canonical order, `O` first.
pub fn rational_points(e: &Curve) -> Result<Vec<Point<Fp>>> {
    let field = e.field();
    check_bound(field.p(), POINT_BOUND)?;
    let half = field.elem(2).inv().expect("p > 2");
    let mut out = vec![Point::Infinity];
    for x in field.elements() {
        let (h, disc) = line_coeff(&field, e, x);
        if let Some(s) = field.sqrt(disc) {
            out.push(Point::new(x, (-h - s) * half));
            if !s.is_zero() {
                out.push(Point::new(x, (-h + s) * half));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All points of `E(F_{p²})` in canonical order, `O` first.
pub fn quadratic_points(e: &Curve) -> Result<Vec<Point<Fp2>>> {
    let field = e.field();
    check_bound(field.p(), EXT_POINT_BOUND)?;
    let half = field.embed(field.elem(2).inv().expect("p > 2"));
    let mut out = vec![Point::Infinity];
    for c0 in field.elements() {
        for c1 in field.elements() {
            let x = field.ext(c0, c1);
            let (h, disc) = line_coeff(&field, e, x);
            if let Some(s) = disc.sqrt() {
                out.push(Point::new(x, (-h - s) * half));
                if !s.is_zero() {
                    out.push(Point::new(x, (-h + s) * half));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `#E(F_p)` by summing Legendre symbols.
pub fn count_points(e: &Curve) -> Result<u64> {
    let field = e.field();
    check_bound(field.p(), POINT_BOUND)?;
    let total: i64 = field.elements().map(|x| 1 + line_coeff(&field, e, x).1.legendre() as i64).sum();
    Ok(total as u64 + 1)
}

/// `#E(F_{p²})` by summing quadratic characters of `F_{p²}`.
pub fn count_points_ext(e: &Curve) -> Result<u64> {
    let field = e.field();
    check_bound(field.p(), EXT_POINT_BOUND)?;
    let mut total: i64 = 1;
    for c0 in field.elements() {
        for c1 in field.elements() {
            let disc = line_coeff(&field, e, field.ext(c0, c1)).1;
            total += 1 + disc.legendre() as i64;
        }
    }
    Ok(total as u64)
}

/// Frobenius trace `t = p + 1 - #E(F_p)`.
pub fn trace(e: &Curve) -> Result<i64> {
    Ok(e.p() as i64 + 1 - count_points(e)? as i64)
}

/// Group type from element orders: `n1` is the exponent, `n2 = #E / n1`.
pub fn group_structure(e: &Curve) -> Result<GroupStructure> {
    let pts = rational_points(e)?;
    let n = pts.len() as u64;
    let n1 = pts.iter().map(|pt| e.order_dividing(pt, n)).max().unwrap_or(1);
    Ok(GroupStructure { n1, n2: n / n1 })
}

/// Rational points `P` with `3P = O`, including `O`.
pub fn rational_3torsion(e: &Curve) -> Result<Vec<Point<Fp>>> {
    Ok(rational_points(e)?.into_iter().filter(|pt| e.scalar_mul(3, pt).is_infinity()).collect())
}

/// Order-3 subgroups whose points lie in `E(F_{p²})`, located by scanning
/// `F_{p²}` for roots of `3x⁴ + b2·x³ + 3b4·x² + 3b6·x + b8`. Every
/// Frobenius-stable subgroup is among them: `σ(P) = ±P` forces `x ∈ F_p` and
/// `y^p = ±y`.
pub fn quadratic_order3_subgroups(e: &Curve) -> Result<Vec<Order3Subgroup>> {
    let field = e.field();
    check_bound(field.p(), EXT_POINT_BOUND)?;
    let [b2, b4, b6, b8] = e.b_invariants().map(|c| field.embed(c));
    let three = field.embed(field.elem(3));
    let half = field.embed(field.elem(2).inv().expect("p > 2"));
    let mut out = Vec::new();
    for c0 in field.elements() {
        for c1 in field.elements() {
            let x = field.ext(c0, c1);
            let psi = (((three * x + b2) * x + three * b4) * x + three * b6) * x + b8;
            if !psi.is_zero() {
                continue;
            }
            let (h, disc) = line_coeff(&field, e, x);
            let Some(s) = disc.sqrt() else { continue };
            let p1 = Point::new(x, (-h - s) * half);
            let p2 = Point::new(x, (-h + s) * half);
            let gen = p1.min(p2);
            assert!(e.contains(&gen) && e.scalar_mul(3, &gen).is_infinity() && !gen.is_infinity());
            let sigma = gen.frobenius();
            out.push(Order3Subgroup {
                generator: gen,
                abscissa: x.to_base(),
                stable: sigma == gen || sigma == e.neg(&gen),
                pointwise_rational: gen.to_base().is_some(),
            });
        }
    }
    out.sort_by_key(|g| g.generator);
    Ok(out)
}

/// The Frobenius-stable order-3 subgroups.
pub fn stable_order3_subgroups(e: &Curve) -> Result<Vec<Order3Subgroup>> {
    Ok(quadratic_order3_subgroups(e)?.into_iter().filter(|g| g.stable).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn y2_plus_y(f: PrimeField) -> Curve {
        Curve::new(f, [f.zero(), f.zero(), f.one(), f.zero(), f.zero()]).unwrap()
    }

    #[test]
    fn point_counts() {
        let f = field(7);
        let e = y2_plus_y(f);
        assert_eq!(rational_points(&e).unwrap().len(), 9);
        assert_eq!(count_points(&e).unwrap(), 9);
        assert_eq!(trace(&e).unwrap(), -1);
        let t = Curve::short(f, f.zero(), f.elem(5)).unwrap();
        assert_eq!(count_points(&t).unwrap(), 7);
        assert_eq!(quadratic_points(&e).unwrap().len(), 63);
        assert_eq!(count_points_ext(&e).unwrap(), 63);
        let s = Curve::short(f, f.zero(), f.elem(2)).unwrap();
        assert_eq!(count_points(&s).unwrap(), 9);
    }

    #[test]
    fn every_enumerated_point_is_on_the_curve() {
        let f = field(11);
        let e = Curve::from_coeffs(f, [f.elem(1), f.elem(2), f.elem(3), f.elem(4), f.elem(5)]);
        for pt in rational_points(&e).unwrap() {
            assert!(e.contains(&pt));
        }
        for pt in quadratic_points(&e).unwrap() {
            assert!(e.contains(&pt));
        }
    }

    #[test]
    fn group_structures() {
        let f = field(7);
        assert_eq!(group_structure(&y2_plus_y(f)).unwrap(), GroupStructure { n1: 3, n2: 3 });
        let t = Curve::short(f, f.zero(), f.elem(5)).unwrap();
        assert_eq!(group_structure(&t).unwrap(), GroupStructure { n1: 7, n2: 1 });

        let g = field(5);
        let e = Curve::new(g, [g.one(), g.zero(), g.one(), g.zero(), g.zero()]).unwrap();
        let gs = group_structure(&e).unwrap();
        assert_eq!(gs.order(), count_points(&e).unwrap());
        assert_eq!(gs.n1 % 3, 0);
        assert_ne!(gs.n2 % 3, 0);
    }

    #[test]
    fn stable_subgroup_examples() {
        let f = field(7);
        let full = stable_order3_subgroups(&y2_plus_y(f)).unwrap();
        assert_eq!(full.len(), 4);
        assert!(full.iter().all(|g| g.pointwise_rational));

        let twist = Curve::short(f, f.zero(), f.elem(5)).unwrap();
        let subs = stable_order3_subgroups(&twist).unwrap();
        assert_eq!(subs.len(), 4);
        assert!(subs.iter().all(|g| !g.pointwise_rational));
        let xs: Vec<u64> = subs.iter().map(|g| g.abscissa.unwrap().value()).collect();
        // ψ3 = 3x(x³ + 20) and x³ = -20 = 1 has roots 1, 2, 4
        assert_eq!(xs, vec![0, 1, 2, 4]);

        let g5 = field(5);
        let e = Curve::new(g5, [g5.one(), g5.zero(), g5.one(), g5.zero(), g5.zero()]).unwrap();
        let subs = stable_order3_subgroups(&e).unwrap();
        assert_eq!(subs.len(), 2);
        assert_eq!(subs.iter().filter(|g| g.pointwise_rational).count(), 1);
    }

    #[test]
    fn trace_divisible_by_three_means_no_stable_subgroup() {
        let f = field(13);
        let mut seen = 0;
        for a in f.elements() {
            for b in f.elements() {
                let Ok(e) = Curve::short(f, a, b) else { continue };
                if trace(&e).unwrap() % 3 == 0 {
                    assert!(stable_order3_subgroups(&e).unwrap().is_empty());
                    seen += 1;
                }
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn bounds() {
        let f = field(307);
        let e = Curve::short(f, f.one(), f.one()).unwrap();
        assert_eq!(quadratic_points(&e), Err(Error::FieldTooLarge { p: 307, bound: EXT_POINT_BOUND }));
        assert!(count_points(&e).is_ok());
        let big = field(10_007);
        let e = Curve::short(big, big.one(), big.one()).unwrap();
        assert_eq!(count_points(&e), Err(Error::FieldTooLarge { p: 10_007, bound: POINT_BOUND }));
    }
}
