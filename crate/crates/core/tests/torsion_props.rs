use ec3_core::oracle::{self, census};
use ec3_core::poly::monic_3div;
use ec3_core::torsion3::{
    burnside_count, classify, cyclic_family_curve, cyclic_representatives, ga_orbits, is_cyclic, noncyclic_curve,
    reduce_to_family, skolem_pattern, twist_representatives, FamilyKind, IsoReading,
};
use ec3_core::{Curve, Fp, Point, PrimeField};
use proptest::prelude::*;

const P1: [u64; 4] = [7, 13, 19, 31];
const P2: [u64; 3] = [5, 11, 17];

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn short_curves(f: PrimeField) -> Vec<Curve> {
    let pairs: Vec<(Fp, Fp)> = f.elements().flat_map(|a| f.elements().map(move |b| (a, b))).collect();
    pairs.into_iter().filter_map(|(a, b)| Curve::short(f, a, b).ok()).collect()
}

#[test]
fn p_2_mod_3_has_one_rational_and_one_twisted_subgroup() {
    for p in P2 {
        for e in short_curves(field(p)) {
            let n = oracle::count_points(&e).unwrap();
            let subs = oracle::stable_order3_subgroups(&e).unwrap();
            let rational = subs.iter().filter(|g| g.pointwise_rational).count();
            if n.is_multiple_of(3) {
                assert_eq!((subs.len(), rational), (2, 1), "p={p} {e}");
            } else {
                assert_eq!(rational, 0);
            }
            assert_ne!(oracle::rational_3torsion(&e).unwrap().len(), 9);
        }
    }
}

#[test]
fn cyclicity_test_matches_enumeration() {
    for p in P1.into_iter().chain(P2) {
        let f = field(p);
        let indices = if f.rho().is_some() { 0..3 } else { 0..1 };
        for i in indices {
            for a in f.elements() {
                let Ok(e) = cyclic_family_curve(&f, a, i) else { continue };
                let torsion = oracle::rational_3torsion(&e).unwrap().len();
                assert!(e.contains(&Point::new(f.zero(), f.zero())));
                assert_eq!(is_cyclic(&f, a, i).unwrap(), torsion == 3, "p={p} a={a} i={i}");
            }
        }
    }
}

#[test]
fn reduction_sends_the_point_to_the_origin() {
    for p in [7, 13, 11] {
        let f = field(p);
        for e in short_curves(f).into_iter().step_by(3) {
            for pt in oracle::rational_3torsion(&e).unwrap().iter().filter(|pt| !pt.is_infinity()) {
                let r = reduce_to_family(&e, pt).unwrap();
                let target = cyclic_family_curve(&f, r.a, r.i).unwrap();
                assert_eq!(e.transform(&r.witness), target);
                assert_eq!(r.witness.map_point(&f, pt), Point::new(f.zero(), f.zero()));
            }
        }
    }
}

#[test]
fn twisting_preserves_the_3_division_pattern() {
    for p in P1 {
        let f = field(p);
        for e in short_curves(f) {
            let (a, b, _) = e.to_short();
            let (ta, tb, _) = e.quadratic_twist().to_short();
            let pattern = monic_3div(a, b).factor_pattern().unwrap();
            assert_eq!(monic_3div(ta, tb).factor_pattern().unwrap(), pattern, "p={p} {e}");
            assert_eq!(skolem_pattern(&f, a, b).unwrap(), pattern);
        }
    }
}

#[test]
fn frobenius_negates_twisted_subgroups() {
    for p in [7, 11, 13] {
        let f = field(p);
        for e in short_curves(f) {
            for g in oracle::quadratic_order3_subgroups(&e).unwrap() {
                let image = g.generator.frobenius();
                assert_eq!(g.stable, image == g.generator || image == e.neg(&g.generator));
                if g.stable && !g.pointwise_rational {
                    assert_eq!(image, e.neg(&g.generator));
                }
            }
        }
    }
}

#[test]
fn three_divides_the_quadratic_count_by_trace() {
    for p in P1.into_iter().chain(P2) {
        for e in short_curves(field(p)).into_iter().step_by(2) {
            let t = oracle::trace(&e).unwrap();
            let divisible = oracle::count_points_ext(&e).unwrap().is_multiple_of(3);
            let expected = if p % 3 == 1 { t.rem_euclid(3) != 0 } else { t.rem_euclid(3) == 0 };
            assert_eq!(divisible, expected, "p={p} t={t}");
            // a stable subgroup is fixed by Frobenius squared, so it lies in E(F_p²)
            let stable = !oracle::stable_order3_subgroups(&e).unwrap().is_empty();
            assert!(!stable || divisible);
            if p % 3 == 2 {
                assert_eq!(stable, divisible);
            }
        }
    }
}

#[test]
fn classification_reports_are_consistent() {
    for p in [7, 13] {
        for class in census(&field(p)).unwrap() {
            let r = &class.report;
            let full = r.has_full_rational_3torsion();
            assert!([0, 1, 2, 4].contains(&r.stable_count()));
            assert_eq!(full, r.pointwise_rational_count() == 4);
            assert_eq!(r.has_cyclic_rational_3torsion(), r.pointwise_rational_count() == 1);
            assert_eq!(r.point_count % 3 == 0, r.rational_3torsion_order > 1);
            match r.family {
                Some(c) => {
                    let family = c.curve(&r.curve.field()).unwrap();
                    assert!(family.are_isomorphic(&r.curve).is_some(), "p={p} {c}");
                }
                None => assert_eq!(r.stable_count(), 0),
            }
        }
    }
}

#[test]
fn census_agrees_with_the_normal_forms() {
    for p in P1 {
        let f = field(p);
        let classes = census(&f).unwrap();
        assert_eq!(classes.iter().map(|c| c.size).sum::<usize>() as u64, p * p - p);

        let count = |kind: FamilyKind| classes.iter().filter(|c| c.report.family.map(|x| x.kind) == Some(kind)).count();
        let cyclic = cyclic_representatives(&f, IsoReading::RhoOrbit).representatives;
        let orbits = ga_orbits(&f).unwrap();
        assert_eq!(count(FamilyKind::CyclicFamily), cyclic.len());
        assert_eq!(cyclic.len() as u64, (2 * p + 4) / 3);
        assert_eq!(count(FamilyKind::NonCyclicFamily), orbits.len());
        assert_eq!(orbits.len(), burnside_count(&f).unwrap().burnside);
        assert_eq!(count(FamilyKind::TwistCyclic), cyclic.len());
        assert_eq!(count(FamilyKind::TwistNonCyclic), orbits.len());

        // one representative per class, each landing on itself
        let mut keys: Vec<(Fp, Fp)> = Vec::new();
        for c in &cyclic {
            let e = c.curve(&f).unwrap();
            let (a, b, _) = e.to_short();
            keys.push(oracle::short_class_key(&f, a, b));
            assert_eq!(classify(&e).unwrap().family, Some(*c));
        }
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), cyclic.len());

        for orbit in &orbits {
            let base = noncyclic_curve(&f, orbit[0]).unwrap();
            for &a in orbit {
                assert!(noncyclic_curve(&f, a).unwrap().are_isomorphic(&base).is_some());
            }
        }
        for rep in twist_representatives(&f, FamilyKind::TwistCyclic).unwrap() {
            let report = classify(&rep.curve()).unwrap();
            assert_eq!(report.family.map(|c| c.kind), Some(FamilyKind::TwistCyclic));
            assert_eq!(report.rational_3torsion_order, 1);
        }
    }
}

#[test]
fn p_2_mod_3_census_has_q_minus_1_torsion_classes() {
    for p in P2 {
        let f = field(p);
        let with_torsion = census(&f).unwrap().into_iter().filter(|c| c.report.rational_3torsion_order == 3).count();
        assert_eq!(with_torsion as u64, p - 1);
        assert_eq!(cyclic_representatives(&f, IsoReading::RhoOrbit).representatives.len() as u64, p - 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn skolem_criterion_matches_factorization(p in prop::sample::select(vec![37u64, 43, 61, 67, 73, 79, 97, 10_009]), a in any::<u64>(), b in any::<u64>()) {
        let f = field(p);
        let (a, b) = (Fp::new(a % p, p), Fp::new(b % p, p));
        prop_assume!(Curve::short(f, a, b).is_ok());
        prop_assert_eq!(skolem_pattern(&f, a, b).unwrap(), monic_3div(a, b).factor_pattern().unwrap());
    }
}
