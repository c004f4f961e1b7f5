//! The full-3-torsion family `E_a` and the Möbius group acting on `a`.

use std::collections::BTreeSet;
use std::fmt;

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::ff::{Fp, PrimeField};

/// `E_a : y² + (3a - 1)·xy + a(ρ - 1)(a - (ρ + 1)/3)·y = x³`.
pub fn noncyclic_curve(field: &PrimeField, a: Fp) -> Result<Curve> {
    let rho = field.require_rho()?;
    if excluded(field, rho, a) {
        return Err(Error::ExcludedParameter(a.value()));
    }
    let three = field.elem(3);
    let a1 = three * a - field.one();
    let a3 = a * (rho - field.one()) * (a - (rho + field.one()) / three);
    Curve::origin_flex(*field, a1, a3)
}

fn excluded(field: &PrimeField, rho: Fp, a: Fp) -> bool {
    let three = field.elem(3);
    a.is_zero() || a == rho / three || a == (rho + field.one()) / three
}

/// `F_p` minus `{0, ρ/3, (ρ + 1)/3}`, where `E_a` is nonsingular.
pub fn noncyclic_domain(field: &PrimeField) -> Result<Vec<Fp>> {
    let rho = field.require_rho()?;
    Ok(field.elements().filter(|&a| !excluded(field, rho, a)).collect())
}

/// `a ↦ (αa + β)/(γa + δ)`, compared up to a common scalar.
#[derive(Debug, Clone, Copy)]
pub struct MobiusMap {
    pub alpha: Fp,
    pub beta: Fp,
    pub gamma: Fp,
    pub delta: Fp,
}

impl MobiusMap {
    pub fn new(alpha: Fp, beta: Fp, gamma: Fp, delta: Fp) -> Self {
        MobiusMap { alpha, beta, gamma, delta }
    }

    pub fn identity(field: &PrimeField) -> Self {
        MobiusMap::new(field.one(), field.zero(), field.zero(), field.one())
    }

    /// `None` where the denominator vanishes.
    pub fn apply(&self, a: Fp) -> Option<Fp> {
        let den = self.gamma * a + self.delta;
        den.inv().map(|d| (self.alpha * a + self.beta) * d)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        MobiusMap {
            alpha: self.alpha * other.alpha + self.beta * other.gamma,
            beta: self.alpha * other.beta + self.beta * other.delta,
            gamma: self.gamma * other.alpha + self.delta * other.gamma,
            delta: self.gamma * other.beta + self.delta * other.delta,
        }
    }

    fn entries(&self) -> [Fp; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }

    /// Scaled so the first nonzero entry is 1.
    pub fn normalized(&self) -> MobiusMap {
        let lead = self.entries().into_iter().find(|c| !c.is_zero()).expect("nonzero matrix");
        let k = lead.inv().expect("nonzero");
        MobiusMap::new(self.alpha * k, self.beta * k, self.gamma * k, self.delta * k)
    }

    pub fn is_identity(&self) -> bool {
        let n = self.normalized();
        n.alpha.is_one() && n.beta.is_zero() && n.gamma.is_zero() && n.delta.is_one()
    }

    /// Smallest `k ≥ 1` with `self^k` the identity.
    pub fn order(&self) -> u64 {
        let mut acc = *self;
        let mut k = 1;
        while !acc.is_identity() {
            acc = self.compose(&acc);
            k += 1;
            assert!(k <= 1000, "map of unexpectedly large order");
        }
        k
    }
}

impl PartialEq for MobiusMap {
    fn eq(&self, other: &Self) -> bool {
        self.normalized().entries() == other.normalized().entries()
    }
}

impl Eq for MobiusMap {}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}a + {})/({}a + {})", self.alpha, self.beta, self.gamma, self.delta)
    }
}

/// The twelve maps, in the order
///
/// ```text
/// a,  a(1+ρ)/(3a-ρ),  aρ/(3a-1-ρ),  -1/(9a),  -(1+ρ)(3a-1-ρ)/3,  ρ(3a-ρ)/(9a),
/// ρ(3a-1-ρ)/(3(3a-ρ)),  -ρ/(3(3a-1-ρ)),  (1+ρ)(3a-ρ)/(3(3a-1-ρ)),
/// (1+ρ)(3a-1-ρ)/(9a),  (1+ρ)/(3(3a-ρ)),  ρ(3a-ρ)/3
/// ```
pub fn ga_maps(field: &PrimeField) -> Result<[MobiusMap; 12]> {
    let r = field.require_rho()?;
    let c = |v: i64| field.elem(v);
    let s = r + c(1);
    let m = |a, b, g, d| MobiusMap::new(a, b, g, d);
    Ok([
        MobiusMap::identity(field),
        m(s, c(0), c(3), -r),
        m(r, c(0), c(3), -s),
        m(c(0), -c(1), c(9), c(0)),
        m(-s, s * s / c(3), c(0), c(1)),
        m(c(3) * r, -(r * r), c(9), c(0)),
        m(c(3) * r, -(r * s), c(9), -(c(3) * r)),
        m(c(0), -r, c(9), -(c(3) * s)),
        m(c(3) * s, -(s * r), c(9), -(c(3) * s)),
        m(c(3) * s, -(s * s), c(9), c(0)),
        m(c(0), s, c(9), -(c(3) * r)),
        m(c(3) * r, -(r * r), c(0), c(3)),
    ])
}

/// The image of `a` under one map, with its domain status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaImage {
    /// 1-based position in [`ga_maps`].
    pub index: usize,
    /// `None` when the denominator vanishes at `a`.
    pub value: Option<Fp>,
    pub in_domain: bool,
}

/// Images of `a` under all twelve maps.
pub fn ga_action(field: &PrimeField, a: Fp) -> Result<Vec<GaImage>> {
    let rho = field.require_rho()?;
    if excluded(field, rho, a) {
        return Err(Error::ExcludedParameter(a.value()));
    }
    Ok(ga_maps(field)?
        .iter()
        .enumerate()
        .map(|(k, g)| {
            let value = g.apply(a);
            let in_domain = value.is_some_and(|v| !excluded(field, rho, v));
            GaImage { index: k + 1, value, in_domain }
        })
        .collect())
}

/// The valid images of `a`, sorted and deduplicated.
pub fn ga_orbit(field: &PrimeField, a: Fp) -> Result<Vec<Fp>> {
    let set: BTreeSet<Fp> = ga_action(field, a)?.into_iter().filter(|g| g.in_domain).filter_map(|g| g.value).collect();
    Ok(set.into_iter().collect())
}

/// The domain split into orbits, each sorted, ordered by smallest member.
pub fn ga_orbits(field: &PrimeField) -> Result<Vec<Vec<Fp>>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in noncyclic_domain(field)? {
        if seen.contains(&a) {
            continue;
        }
        let orbit = ga_orbit(field, a)?;
        seen.extend(orbit.iter().copied());
        out.push(orbit);
    }
    Ok(out)
}

/// The smallest `a` with `E_a ≅ e`.
pub fn noncyclic_parameter(e: &Curve) -> Result<Fp> {
    let field = e.field();
    noncyclic_domain(&field)?
        .into_iter()
        .find(|&a| noncyclic_curve(&field, a).is_ok_and(|ea| ea.are_isomorphic(e).is_some()))
        .ok_or(Error::WrongOrder { expected: 9, found: 3 })
}

/// Closure and element orders of the twelve maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaGroup {
    /// Every composition of two maps is again one of the twelve.
    pub closed: bool,
    pub element_orders: Vec<u64>,
    pub exponent: u64,
    pub abelian: bool,
}

impl GaGroup {
    /// Whether the element orders match those of `Z/2 × Z/6`.
    pub fn matches_z2_x_z6(&self) -> bool {
        let mut orders = self.element_orders.clone();
        orders.sort();
        self.closed && self.abelian && orders == [1, 2, 2, 2, 3, 3, 6, 6, 6, 6, 6, 6]
    }

    /// Whether the element orders match those of the alternating group `A4`.
    pub fn matches_a4(&self) -> bool {
        let mut orders = self.element_orders.clone();
        orders.sort();
        self.closed && !self.abelian && orders == [1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]
    }
}

pub fn ga_group(field: &PrimeField) -> Result<GaGroup> {
    let maps = ga_maps(field)?;
    let closed = maps.iter().all(|g| maps.iter().all(|h| maps.contains(&g.compose(h))));
    let abelian = maps.iter().all(|g| maps.iter().all(|h| g.compose(h) == h.compose(g)));
    let element_orders: Vec<u64> = maps.iter().map(MobiusMap::order).collect();
    let exponent = element_orders.iter().fold(1, |acc, &o| lcm(acc, o));
    Ok(GaGroup { closed, element_orders, exponent, abelian })
}

fn lcm(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// Orbit counts for the action on the domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideCount {
    /// Orbits found by direct enumeration.
    pub orbits: usize,
    /// `Σ |fixed points| / 12` using the tabulated fixed points.
    pub burnside: usize,
    /// `Σ |fixed points| / 12` with fixed points found by scanning.
    pub burnside_direct: usize,
    /// Tabulated fixed points lying in the domain, per map (1-based).
    pub fixed_points: Vec<(usize, Vec<Fp>)>,
    /// Maps (1-based) whose tabulated fixed points differ from the scanned ones.
    pub table_mismatches: Vec<usize>,
    /// `(p + 12 - (p mod 12))/12`.
    pub formula: u64,
}

impl BurnsideCount {
    pub fn consistent(&self) -> bool {
        self.orbits == self.burnside && self.orbits == self.burnside_direct && self.burnside as u64 == self.formula
    }
}

/// Fixed points per map as tabulated: `(1+2ρ)/3`, `±√-1/3`, `1/3`, `-1/3`,
/// `(ρ ± √-ρ)/3`, `(ρ + 1 ± ρ√-1)/3`, `(1 + 2ρ)/9`. Square roots that do not
/// exist in `F_p` contribute nothing.
fn tabulated_fixed_points(field: &PrimeField, rho: Fp) -> Vec<Vec<Fp>> {
    let c = |v: i64| field.elem(v);
    let third = c(3).inv().expect("p > 3");
    let pm = |base: Fp, root: Option<Fp>, k: Fp| -> Vec<Fp> {
        root.map(|s| vec![(base + k * s) * third, (base - k * s) * third]).unwrap_or_default()
    };
    let i = field.sqrt(-c(1));
    let j = field.sqrt(-rho);
    let w = (c(1) + c(2) * rho) * third;
    vec![
        Vec::new(), // identity: the whole domain, handled by the caller
        vec![w],
        vec![w],
        pm(c(0), i, c(1)),
        vec![third],
        vec![-third],
        pm(rho, j, c(1)),
        vec![third],
        pm(rho + c(1), i, rho),
        vec![third],
        vec![-third],
        vec![(c(1) + c(2) * rho) / c(9)],
    ]
}

/// Counts isomorphism classes of `E_a` by orbit enumeration and by
/// Burnside's lemma over the fixed-point table.
pub fn burnside_count(field: &PrimeField) -> Result<BurnsideCount> {
    let rho = field.require_rho()?;
    let domain = noncyclic_domain(field)?;
    let orbits = ga_orbits(field)?.len();
    let table = tabulated_fixed_points(field, rho);
    let mut fixed_points = vec![(1, domain.clone())];
    for (k, pts) in table.into_iter().enumerate().skip(1) {
        let set: BTreeSet<Fp> = pts.into_iter().filter(|&v| !excluded(field, rho, v)).collect();
        fixed_points.push((k + 1, set.into_iter().collect()));
    }
    let total: usize = fixed_points.iter().map(|(_, v)| v.len()).sum();

    let maps = ga_maps(field)?;
    let scanned: Vec<Vec<Fp>> =
        maps.iter().map(|g| domain.iter().copied().filter(|&a| g.apply(a) == Some(a)).collect()).collect();
    let direct_total: usize = scanned.iter().map(Vec::len).sum();
    let table_mismatches = fixed_points
        .iter()
        .zip(&scanned)
        .filter(|((_, listed), actual)| listed != *actual)
        .map(|((k, _), _)| *k)
        .collect();

    let p = field.p();
    Ok(BurnsideCount {
        orbits,
        burnside: total / 12,
        burnside_direct: direct_total / 12,
        fixed_points,
        table_mismatches,
        formula: (p + 12 - p % 12) / 12,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn domain_and_exclusions() {
        let f = field(7);
        let vals: Vec<u64> = noncyclic_domain(&f).unwrap().iter().map(|v| v.value()).collect();
        assert_eq!(vals, vec![2, 4, 5, 6]);
        assert_eq!(noncyclic_curve(&f, f.elem(3)), Err(Error::ExcludedParameter(3)));
        assert_eq!(noncyclic_curve(&f, f.elem(0)), Err(Error::ExcludedParameter(0)));
        let g = field(5);
        assert_eq!(noncyclic_curve(&g, g.one()), Err(Error::WrongFieldClass { p: 5, required: 1 }));
    }

    #[test]
    fn family_members_have_full_rational_3torsion() {
        for p in [7, 13, 19] {
            let f = field(p);
            for a in noncyclic_domain(&f).unwrap() {
                let e = noncyclic_curve(&f, a).unwrap();
                assert_eq!(oracle::rational_3torsion(&e).unwrap().len(), 9);
                assert_eq!(oracle::group_structure(&e).unwrap().n2 % 3, 0);
            }
        }
    }

    #[test]
    fn singular_exactly_at_the_excluded_values() {
        let f = field(13);
        let rho = f.rho().unwrap();
        let three = f.elem(3);
        for a in f.elements() {
            let a1 = three * a - f.one();
            let a3 = a * (rho - f.one()) * (a - (rho + f.one()) / three);
            let disc = Curve::from_coeffs(f, [a1, f.zero(), a3, f.zero(), f.zero()]).discriminant();
            assert_eq!(disc.is_zero(), excluded(&f, rho, a));
        }
    }

    #[test]
    fn second_map_fixes_its_tabulated_point() {
        let f = field(7);
        let g2 = ga_maps(&f).unwrap()[1];
        assert_eq!(g2.apply(f.elem(4)), Some(f.elem(4)));
    }

    #[test]
    fn orbits_at_small_primes() {
        let f = field(7);
        let orbits = ga_orbits(&f).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].iter().map(|v| v.value()).collect::<Vec<_>>(), vec![2, 4, 5, 6]);
        assert_eq!(ga_orbit(&f, f.elem(4)).unwrap().len(), 4);
        assert_eq!(ga_orbits(&field(13)).unwrap().len(), 2);
    }

    #[test]
    fn orbit_members_are_isomorphic() {
        for p in [7, 13] {
            let f = field(p);
            for a in noncyclic_domain(&f).unwrap() {
                let ea = noncyclic_curve(&f, a).unwrap();
                for b in ga_orbit(&f, a).unwrap() {
                    assert!(ea.are_isomorphic(&noncyclic_curve(&f, b).unwrap()).is_some());
                }
            }
        }
    }

    #[test]
    fn burnside_examples() {
        let b7 = burnside_count(&field(7)).unwrap();
        assert_eq!((b7.orbits, b7.burnside, b7.formula), (1, 1, 1));
        let b13 = burnside_count(&field(13)).unwrap();
        assert_eq!((b13.orbits, b13.burnside, b13.formula), (2, 2, 2));
        for p in [19, 31, 37, 43, 61, 67, 73, 79, 97] {
            assert!(burnside_count(&field(p)).unwrap().consistent(), "p = {p}");
        }
        assert!(matches!(burnside_count(&field(11)), Err(Error::WrongFieldClass { .. })));
    }

    #[test]
    fn tabulated_fixed_points_are_actual_fixed_points() {
        for p in [7, 13, 19, 31, 37] {
            let f = field(p);
            let rho = f.rho().unwrap();
            let maps = ga_maps(&f).unwrap();
            let table = tabulated_fixed_points(&f, rho);
            for (k, g) in maps.iter().enumerate().skip(1) {
                let in_domain = |a: &Fp| !excluded(&f, rho, *a);
                let actual: BTreeSet<Fp> = f.elements().filter(in_domain).filter(|&a| g.apply(a) == Some(a)).collect();
                let listed: BTreeSet<Fp> = table[k].iter().copied().filter(in_domain).collect();
                if k + 1 == 5 {
                    // listed as 1/3; the actual fixed point is (1 + 2ρ)/9
                    let w = (f.one() + f.elem(2) * rho) / f.elem(9);
                    assert_eq!(actual, BTreeSet::from([w]), "p = {p}");
                    assert_eq!(listed, BTreeSet::from([f.elem(3).inv().unwrap()]));
                } else {
                    assert_eq!(actual, listed, "p = {p}, map {}", k + 1);
                }
            }
            assert_eq!(burnside_count(&f).unwrap().table_mismatches, vec![5]);
        }
    }

    #[test]
    fn group_of_maps() {
        let g = ga_group(&field(13)).unwrap();
        assert!(g.closed);
        assert_eq!(g.exponent, 6);
        assert!(g.matches_a4());
        assert!(!g.matches_z2_x_z6());
    }
}
