//! Prime fields `F_p` (p > 3), the quadratic extension `F_{p²}`, and the
//! quadratic/cubic character machinery used by every classification criterion.

mod fp;
mod fp2;
pub(crate) mod roots;

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

pub use fp::Fp;
pub use fp2::Fp2;

use crate::error::{Error, Result};

/// Arithmetic shared by `F_p` and `F_{p²}`, so that points and the group law
/// can be written once for both coordinate fields.
pub trait FieldOps:
    Copy
    + Eq
    + Ord
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Div<Output = Self>
{
    fn from_base(field: &PrimeField, x: Fp) -> Self;
    fn to_base(self) -> Option<Fp>;
    fn is_zero(self) -> bool;
    fn inv(self) -> Option<Self>;
    fn pow(self, e: u64) -> Self;
    fn one_like(self) -> Self;
    fn frobenius(self) -> Self;
    fn sqrt(self) -> Option<Self>;
}

impl FieldOps for Fp {
    fn from_base(_: &PrimeField, x: Fp) -> Self {
        x
    }
    fn to_base(self) -> Option<Fp> {
        Some(self)
    }
    fn is_zero(self) -> bool {
        Fp::is_zero(self)
    }
    fn inv(self) -> Option<Self> {
        Fp::inv(self)
    }
    fn pow(self, e: u64) -> Self {
        Fp::pow(self, e)
    }
    fn one_like(self) -> Self {
        Fp::one(self.modulus())
    }
    fn frobenius(self) -> Self {
        self
    }
    fn sqrt(self) -> Option<Self> {
        let p = self.modulus();
        if self.is_zero() {
            return Some(self);
        }
        let non_square = (2..p).map(|v| Fp::new(v, p)).find(|v| !v.is_square())?;
        let r = roots::prime_root(self, 2, p - 1, non_square)?;
        Some(r.min(-r))
    }
}

impl FieldOps for Fp2 {
    fn from_base(field: &PrimeField, x: Fp) -> Self {
        Fp2::from_base(x, field.d())
    }
    fn to_base(self) -> Option<Fp> {
        Fp2::to_base(self)
    }
    fn is_zero(self) -> bool {
        Fp2::is_zero(self)
    }
    fn inv(self) -> Option<Self> {
        Fp2::inv(self)
    }
    fn pow(self, e: u64) -> Self {
        Fp2::pow(self, e)
    }
    fn one_like(self) -> Self {
        Fp2::one(self.nonresidue())
    }
    fn frobenius(self) -> Self {
        Fp2::frobenius(self)
    }
    fn sqrt(self) -> Option<Self> {
        Fp2::sqrt(self)
    }
}

/// Value of the cubic character `χ(x) = x^((p-1)/3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CubicClass {
    Zero,
    One,
    Rho,
    RhoSq,
}

impl CubicClass {
    /// Exponent `k` with `χ(x) = ρ^k`, or `None` for zero.
    pub fn exponent(self) -> Option<u8> {
        match self {
            CubicClass::Zero => None,
            CubicClass::One => Some(0),
            CubicClass::Rho => Some(1),
            CubicClass::RhoSq => Some(2),
        }
    }
}

/// A prime field together with its fixed conventions:
///
/// * `ρ`: smallest primitive cube root of unity (p ≡ 1 mod 3 only),
/// * `b0`: smallest non-cube with `χ(b0) = ρ` (p ≡ 1 mod 3 only),
/// * `t`: smallest quadratic non-residue, used for twists,
/// * `d = t`: the non-square adjoined to build `F_{p²} = F_p(√d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
    rho: Option<Fp>,
    b0: Option<Fp>,
    t: Fp,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p <= 3 {
            return Err(Error::PrimeTooSmall(p));
        }
        let t = (2..p).map(|v| Fp::new(v, p)).find(|v| !v.is_square()).expect("odd primes have non-residues");
        let (rho, b0) = if p % 3 == 1 {
            let e = (p - 1) / 3;
            let rho = (2..p)
                .map(|v| Fp::new(v, p))
                .find(|v| v.pow(3).is_one())
                .expect("p ≡ 1 (mod 3) has primitive cube roots of unity");
            let b0 = (2..p).map(|v| Fp::new(v, p)).find(|v| v.pow(e) == rho).expect("the cubic character is onto");
            (Some(rho), Some(b0))
        } else {
            (None, None)
        };
        Ok(PrimeField { p, rho, b0, t })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `p mod 3`, either 1 or 2.
    pub fn residue_class_mod3(&self) -> u64 {
        self.p % 3
    }

    pub fn rho(&self) -> Option<Fp> {
        self.rho
    }

    pub fn b0(&self) -> Option<Fp> {
        self.b0
    }

    pub fn t(&self) -> Fp {
        self.t
    }

    pub fn d(&self) -> Fp {
        self.t
    }

    /// `ρ`, or `WrongFieldClass` when p ≡ 2 (mod 3).
    pub fn require_rho(&self) -> Result<Fp> {
        self.rho.ok_or(Error::WrongFieldClass { p: self.p, required: 1 })
    }

    pub fn b0_power(&self, i: u8) -> Fp {
        match self.b0 {
            Some(b0) => b0.pow(i as u64),
            None => self.one(),
        }
    }

    pub fn elem(&self, v: i64) -> Fp {
        Fp::from_i64(v, self.p)
    }

    pub fn zero(&self) -> Fp {
        Fp::zero(self.p)
    }

    pub fn one(&self) -> Fp {
        Fp::one(self.p)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fp> + '_ {
        (0..self.p).map(move |v| Fp::new(v, self.p))
    }

    pub fn ext(&self, c0: Fp, c1: Fp) -> Fp2 {
        Fp2::new(c0, c1, self.d())
    }

    pub fn embed(&self, x: Fp) -> Fp2 {
        Fp2::from_base(x, self.d())
    }

    pub fn cubic_character(&self, x: Fp) -> CubicClass {
        if x.is_zero() {
            return CubicClass::Zero;
        }
        let Some(rho) = self.rho else {
            // every element is a cube when p ≡ 2 (mod 3)
            return CubicClass::One;
        };
        let c = x.pow((self.p - 1) / 3);
        if c.is_one() {
            CubicClass::One
        } else if c == rho {
            CubicClass::Rho
        } else {
            debug_assert_eq!(c, rho * rho);
            CubicClass::RhoSq
        }
    }

    pub fn is_cube(&self, x: Fp) -> bool {
        matches!(self.cubic_character(x), CubicClass::Zero | CubicClass::One)
    }

    /// The smaller of the two square roots, if `x` is a square.
    pub fn sqrt(&self, x: Fp) -> Option<Fp> {
        FieldOps::sqrt(x)
    }

    /// All cube roots of `x`, sorted by canonical representative.
    pub fn cube_roots(&self, x: Fp) -> Vec<Fp> {
        if x.is_zero() {
            return vec![x];
        }
        match (self.rho, self.b0) {
            (Some(rho), Some(b0)) => {
                let Some(r) = roots::prime_root(x, 3, self.p - 1, b0) else {
                    return Vec::new();
                };
                let mut out = vec![r, r * rho, r * rho * rho];
                out.sort();
                out
            }
            _ => {
                // cubing is a bijection; its inverse is x ↦ x^((2p-1)/3)
                vec![x.pow((2 * self.p - 1) / 3)]
            }
        }
    }

    pub fn frobenius(&self, z: Fp2) -> Fp2 {
        z.frobenius()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut k = 3;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions_for_seven() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.rho().unwrap().value(), 2);
        assert_eq!(f.b0().unwrap().value(), 3);
        assert_eq!(f.t().value(), 3);
        assert_eq!(f.d().value(), 3);
        assert_eq!(f.residue_class_mod3(), 1);
    }

    #[test]
    fn conventions_for_five() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.residue_class_mod3(), 2);
        assert!(f.rho().is_none());
        assert!(f.b0().is_none());
        assert_eq!(f.t().value(), 2);
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(3), Err(Error::PrimeTooSmall(3)));
        assert_eq!(PrimeField::new(2), Err(Error::PrimeTooSmall(2)));
        assert_eq!(PrimeField::new(1 << 32), Err(Error::PrimeTooLarge(1 << 32)));
    }

    #[test]
    fn cubic_character_examples() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.cubic_character(f.elem(1)), CubicClass::One);
        assert_eq!(f.cubic_character(f.elem(6)), CubicClass::One);
        assert_eq!(f.cubic_character(f.elem(3)), CubicClass::Rho);
        assert_eq!(f.cubic_character(f.elem(0)), CubicClass::Zero);
    }

    #[test]
    fn root_examples() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.sqrt(f7.elem(4)), Some(f7.elem(2)));
        assert_eq!(f7.sqrt(f7.elem(3)), None);
        let roots: Vec<u64> = f7.cube_roots(f7.elem(6)).iter().map(|r| r.value()).collect();
        assert_eq!(roots, vec![3, 5, 6]);
        assert!(f7.cube_roots(f7.elem(3)).is_empty());

        let f5 = PrimeField::new(5).unwrap();
        let roots: Vec<u64> = f5.cube_roots(f5.elem(2)).iter().map(|r| r.value()).collect();
        assert_eq!(roots, vec![3]);
    }

    #[test]
    fn frobenius_examples() {
        let f = PrimeField::new(7).unwrap();
        let four = f.embed(f.elem(4));
        assert_eq!(f.frobenius(four), four);
        let sqrt_d = f.ext(f.zero(), f.one());
        assert_eq!(f.frobenius(sqrt_d), -sqrt_d);
        let z = f.ext(f.one(), f.one());
        assert_eq!(f.frobenius(z), f.ext(f.one(), f.elem(-1)));
        assert_eq!(z.pow(7), f.frobenius(z));
    }

    #[test]
    fn works_at_a_million_scale() {
        let f = PrimeField::new(1_000_037).unwrap();
        assert_eq!(f.residue_class_mod3(), 2);
        let x = f.elem(123_456);
        let r = f.cube_roots(x);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].pow(3), x);
        let s = f.sqrt(x * x).unwrap();
        assert_eq!(s * s, x * x);

        let g = PrimeField::new(1_000_033).unwrap();
        assert_eq!(g.residue_class_mod3(), 1);
        let y = g.elem(987_654).pow(3);
        let roots = g.cube_roots(y);
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(|r| r.pow(3) == y));
    }
}
