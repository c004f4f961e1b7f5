use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::Fp;

/// An element `c0 + c1·√d` of the quadratic extension `F_p(√d)`, where `d` is
/// a fixed non-square of `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp2 {
    c0: Fp,
    c1: Fp,
    d: Fp,
}

impl Fp2 {
    pub fn new(c0: Fp, c1: Fp, d: Fp) -> Self {
        Fp2 { c0, c1, d }
    }

    /// Embeds a base field element.
    pub fn from_base(x: Fp, d: Fp) -> Self {
        Fp2 { c0: x, c1: Fp::zero(x.modulus()), d }
    }

    pub fn c0(self) -> Fp {
        self.c0
    }

    pub fn c1(self) -> Fp {
        self.c1
    }

    pub fn nonresidue(self) -> Fp {
        self.d
    }

    pub fn modulus(self) -> u64 {
        self.c0.modulus()
    }

    pub fn zero(d: Fp) -> Self {
        Fp2::from_base(Fp::zero(d.modulus()), d)
    }

    pub fn one(d: Fp) -> Self {
        Fp2::from_base(Fp::one(d.modulus()), d)
    }

    pub fn is_zero(self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    /// `Some(c0)` when the element lies in the base field.
    pub fn to_base(self) -> Option<Fp> {
        self.c1.is_zero().then_some(self.c0)
    }

    /// The Frobenius automorphism `z ↦ z^p`, which conjugates `√d ↦ -√d`.
    pub fn frobenius(self) -> Self {
        Fp2 { c1: -self.c1, ..self }
    }

    pub fn norm(self) -> Fp {
        self.c0 * self.c0 - self.d * self.c1 * self.c1
    }

    pub fn trace(self) -> Fp {
        self.c0 + self.c0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp2::one(self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(Fp2 { c0: self.c0 * n, c1: -self.c1 * n, d: self.d })
    }

    /// `z` is a square in `F_{p²}` exactly when its norm is a square in `F_p`.
    pub fn is_square(self) -> bool {
        self.norm().is_square()
    }

    /// Quadratic character over `F_{p²}`, computed through the norm.
    pub fn legendre(self) -> i8 {
        self.norm().legendre()
    }

    /// A square root, canonicalized as the smaller of `±r` in (c0, c1) order.
    pub fn sqrt(self) -> Option<Self> {
        let p = self.modulus();
        let d = self.d;
        let root = if self.is_zero() {
            Some(self)
        } else if self.c1.is_zero() {
            let a = self.c0;
            match sqrt_fp(a) {
                Some(r) => Some(Fp2::from_base(r, d)),
                // a and d are both non-squares, so a/d is a square
                None => sqrt_fp(a / d).map(|c| Fp2::new(Fp::zero(p), c, d)),
            }
        } else {
            let n = sqrt_fp(self.norm())?;
            let half = Fp::new(2, p).inv().expect("p > 2");
            let x2 =
                [(self.c0 + n) * half, (self.c0 - n) * half].into_iter().find(|v| v.is_square() && !v.is_zero())?;
            let x = sqrt_fp(x2)?;
            let y = self.c1 / (x + x);
            Some(Fp2::new(x, y, d))
        }?;
        debug_assert_eq!(root * root, self);
        Some(std::cmp::min(root, -root))
    }

    /// All cube roots, sorted. `F_{p²}^*` always has order divisible by 3, so
    /// a nonzero element has either zero or three cube roots.
    pub fn cube_roots(self) -> Vec<Self> {
        if self.is_zero() {
            return vec![self];
        }
        let p = self.modulus();
        let order = p * p - 1;
        let non_cube = first_non_residue_fp2(self.d, 3);
        let Some(r) = super::roots::prime_root(self, 3, order, non_cube) else {
            return Vec::new();
        };
        let zeta = non_cube.pow(order / 3);
        let mut out = vec![r, r * zeta, r * zeta * zeta];
        out.sort();
        out
    }
}

fn sqrt_fp(x: Fp) -> Option<Fp> {
    super::FieldOps::sqrt(x)
}

/// Smallest element `k + √d` (k ascending) that is not an `r`-th power.
fn first_non_residue_fp2(d: Fp, r: u64) -> Fp2 {
    let p = d.modulus();
    let exp = (p * p - 1) / r;
    (0..p)
        .map(|k| Fp2::new(Fp::new(k, p), Fp::one(p), d))
        .find(|z| z.pow(exp) != Fp2::one(d))
        .expect("F_{p^2}^* has non-residues for r | p^2 - 1")
}

impl fmt::Debug for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1.is_zero() {
            write!(f, "{}", self.c0)
        } else {
            write!(f, "{} + {}·√{}", self.c0, self.c1, self.d)
        }
    }
}

impl Add for Fp2 {
    type Output = Fp2;
    fn add(self, rhs: Fp2) -> Fp2 {
        Fp2 { c0: self.c0 + rhs.c0, c1: self.c1 + rhs.c1, d: self.d }
    }
}

impl Sub for Fp2 {
    type Output = Fp2;
    fn sub(self, rhs: Fp2) -> Fp2 {
        Fp2 { c0: self.c0 - rhs.c0, c1: self.c1 - rhs.c1, d: self.d }
    }
}

impl Mul for Fp2 {
    type Output = Fp2;
    fn mul(self, rhs: Fp2) -> Fp2 {
        debug_assert_eq!(self.d, rhs.d);
        Fp2 { c0: self.c0 * rhs.c0 + self.d * self.c1 * rhs.c1, c1: self.c0 * rhs.c1 + self.c1 * rhs.c0, d: self.d }
    }
}

impl Div for Fp2 {
    type Output = Fp2;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp2) -> Fp2 {
        self * rhs.inv().expect("division by zero in F_p^2")
    }
}

impl Neg for Fp2 {
    type Output = Fp2;
    fn neg(self) -> Fp2 {
        Fp2 { c0: -self.c0, c1: -self.c1, d: self.d }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(a: u64, b: u64) -> Fp2 {
        Fp2::new(Fp::new(a, 7), Fp::new(b, 7), Fp::new(3, 7))
    }

    #[test]
    fn frobenius_matches_pth_power() {
        let z = el(1, 1);
        assert_eq!(z.frobenius(), el(1, 6));
        assert_eq!(z.pow(7), z.frobenius());
    }

    #[test]
    fn every_element_of_f49_has_expected_square_root_behaviour() {
        let mut squares = 0;
        for a in 0..7 {
            for b in 0..7 {
                let z = el(a, b);
                match z.sqrt() {
                    Some(r) => {
                        assert_eq!(r * r, z);
                        squares += 1;
                    }
                    None => assert!(!z.is_square()),
                }
            }
        }
        // zero plus half of the 48 units
        assert_eq!(squares, 25);
    }

    #[test]
    fn base_field_elements_are_squares_in_the_extension() {
        for a in 1..7 {
            let z = el(a, 0);
            assert!(z.sqrt().is_some());
        }
    }

    #[test]
    fn cube_roots_in_f49() {
        let mut with_roots = 0;
        for a in 0..7 {
            for b in 0..7 {
                let z = el(a, b);
                let roots = z.cube_roots();
                for r in &roots {
                    assert_eq!(r.pow(3), z);
                }
                if !z.is_zero() && !roots.is_empty() {
                    assert_eq!(roots.len(), 3);
                    with_roots += 1;
                }
            }
        }
        assert_eq!(with_roots, 48 / 3);
    }
}
