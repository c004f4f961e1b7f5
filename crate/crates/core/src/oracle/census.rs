//! Isomorphism classes of all nonsingular short curves over `F_p`.

use std::collections::BTreeSet;

use super::{check_bound, CENSUS_BOUND};
use crate::curve::Curve;
use crate::error::Result;
use crate::ff::{Fp, PrimeField};
use crate::torsion3::{classify, Torsion3Report};

/// One isomorphism class: its smallest short model, how many `(A, B)`
/// pairs it contains and the classification of the representative.
#[derive(Debug, Clone)]
pub struct CensusClass {
    pub a: Fp,
    pub b: Fp,
    pub size: usize,
    pub report: Torsion3Report,
}

impl CensusClass {
    pub fn curve(&self) -> Curve {
        self.report.curve
    }
}

/// The orbit of `(A, B)` under `(A, B) ↦ (u⁴A, u⁶B)`.
fn scaling_orbit(field: &PrimeField, a: Fp, b: Fp) -> BTreeSet<(Fp, Fp)> {
    field.elements().skip(1).map(|u| (u.pow(4) * a, u.pow(6) * b)).collect()
}

/// Smallest member of the scaling orbit of `(A, B)`; two short curves are
/// isomorphic exactly when their keys agree.
pub fn short_class_key(field: &PrimeField, a: Fp, b: Fp) -> (Fp, Fp) {
    *scaling_orbit(field, a, b).first().expect("orbit contains (A, B)")
}

/// Every class of nonsingular curves `y² = x³ + Ax + B`, ordered by
/// representative.
pub fn census(field: &PrimeField) -> Result<Vec<CensusClass>> {
    census_filtered(field, |_| true)
}

/// The classes whose representative's report satisfies `keep`.
pub fn census_filtered(field: &PrimeField, keep: impl Fn(&Torsion3Report) -> bool) -> Result<Vec<CensusClass>> {
    check_bound(field.p(), CENSUS_BOUND)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in field.elements() {
        for b in field.elements() {
            if seen.contains(&(a, b)) {
                continue;
            }
            let Ok(curve) = Curve::short(*field, a, b) else { continue };
            let orbit = scaling_orbit(field, a, b);
            // scanning in order means (a, b) is the orbit minimum
            debug_assert_eq!(orbit.first(), Some(&(a, b)));
            let size = orbit.len();
            seen.extend(orbit);
            let report = classify(&curve)?;
            if keep(&report) {
                out.push(CensusClass { a, b, size, report });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_sizes_cover_all_nonsingular_pairs() {
        for p in [5, 7, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            let classes = census(&f).unwrap();
            let total: usize = classes.iter().map(|c| c.size).sum();
            let nonsingular = f
                .elements()
                .flat_map(|a| f.elements().map(move |b| (a, b)))
                .filter(|&(a, b)| Curve::short(f, a, b).is_ok())
                .count();
            assert_eq!(total, nonsingular);
            assert_eq!(nonsingular as u64, p * p - p);
        }
    }

    #[test]
    fn keys_agree_with_isomorphism_testing() {
        let f = PrimeField::new(7).unwrap();
        let curves: Vec<Curve> = f
            .elements()
            .flat_map(|a| f.elements().map(move |b| (a, b)))
            .filter_map(|(a, b)| Curve::short(f, a, b).ok())
            .collect();
        for e1 in &curves {
            for e2 in &curves {
                let (a1, b1) = e1.short_coefficients().unwrap();
                let (a2, b2) = e2.short_coefficients().unwrap();
                let same = short_class_key(&f, a1, b1) == short_class_key(&f, a2, b2);
                assert_eq!(same, e1.are_isomorphic(e2).is_some());
            }
        }
    }
}
