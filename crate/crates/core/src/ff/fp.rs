use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of a prime field, stored as its canonical residue in `[0, p)`.
///
/// The modulus travels with the value so that elements can be combined with
/// ordinary operators. Ordering is by canonical representative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    /// Reduces `v` modulo `p`.
    pub fn new(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }

    pub fn from_i64(v: i64, p: u64) -> Self {
        let r = v.rem_euclid(p as i64) as u64;
        Fp { v: r, p }
    }

    pub fn zero(p: u64) -> Self {
        Fp { v: 0, p }
    }

    pub fn one(p: u64) -> Self {
        Fp { v: 1, p }
    }

    pub fn value(self) -> u64 {
        self.v
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.v == 0
    }

    pub fn is_one(self) -> bool {
        self.v == 1
    }

    /// Signed representative in `(-p/2, p/2]`.
    pub fn centered(self) -> i64 {
        if self.v > self.p / 2 {
            self.v as i64 - self.p as i64
        } else {
            self.v as i64
        }
    }

    pub fn square(self) -> Self {
        self * self
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        // extended Euclid on (v, p)
        let (mut r0, mut r1) = (self.p as i64, self.v as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(Fp::from_i64(t0, self.p))
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(self) -> bool {
        self.v == 0 || self.pow((self.p - 1) / 2).is_one()
    }

    /// Legendre symbol (self / p) in {-1, 0, 1}.
    pub fn legendre(self) -> i8 {
        if self.v == 0 {
            0
        } else if self.pow((self.p - 1) / 2).is_one() {
            1
        } else {
            -1
        }
    }

    #[inline]
    fn check(self, other: Self) {
        debug_assert_eq!(self.p, other.p, "mixing elements of different prime fields");
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(rhs);
        let s = self.v + rhs.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(rhs);
        let v = if self.v >= rhs.v { self.v - rhs.v } else { self.v + self.p - rhs.v };
        Fp { v, p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(rhs);
        // p < 2^32, so the product fits in a u64
        Fp { v: self.v * rhs.v % self.p, p: self.p }
    }
}

impl Div for Fp {
    type Output = Fp;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.v == 0 {
            self
        } else {
            Fp { v: self.p - self.v, p: self.p }
        }
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, rhs: Fp) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fp {
    fn sub_assign(&mut self, rhs: Fp) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fp {
    fn mul_assign(&mut self, rhs: Fp) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_every_unit_mod_13() {
        for v in 1..13 {
            let x = Fp::new(v, 13);
            assert!((x * x.inv().unwrap()).is_one());
        }
        assert!(Fp::zero(13).inv().is_none());
    }

    #[test]
    fn negative_reduction() {
        assert_eq!(Fp::from_i64(-1, 7).value(), 6);
        assert_eq!(Fp::from_i64(-15, 7).value(), 6);
        assert_eq!(Fp::new(6, 7).centered(), -1);
    }

    #[test]
    fn large_modulus_does_not_overflow() {
        let p = 4_294_967_291; // largest prime below 2^32
        let x = Fp::new(p - 1, p);
        assert!((x * x).is_one());
        assert_eq!(x.pow(p - 1), Fp::one(p));
    }
}
