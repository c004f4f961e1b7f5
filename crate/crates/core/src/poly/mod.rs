//! Dense univariate polynomials over `F_p`.

mod divpoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ff::{FieldOps, Fp, PrimeField};

pub use divpoly::{division_polynomial, monic_3div, DivPoly};

/// Seed for the randomized root splitting; fixed so that all output is
/// reproducible.
const SPLIT_SEED: u64 = 0x0e3c_5eed;

/// Polynomial with coefficients lowest degree first and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u64,
    c: Vec<Fp>,
}

/// Sorted multiset of the degrees of the irreducible factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorPattern(Vec<usize>);

impl FactorPattern {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        FactorPattern(degrees)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    /// Number of irreducible factors.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for FactorPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Poly {
    pub fn new(p: u64, mut c: Vec<Fp>) -> Self {
        debug_assert!(c.iter().all(|x| x.modulus() == p));
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { p, c }
    }

    /// Builds a polynomial from signed integer coefficients, lowest degree first.
    pub fn from_i64s(p: u64, coeffs: &[i64]) -> Self {
        Poly::new(p, coeffs.iter().map(|&v| Fp::from_i64(v, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        Poly { p, c: Vec::new() }
    }

    pub fn constant(c: Fp) -> Self {
        Poly::new(c.modulus(), vec![c])
    }

    pub fn one(p: u64) -> Self {
        Poly::constant(Fp::one(p))
    }

    /// The monomial `x`.
    pub fn x(p: u64) -> Self {
        Poly::monomial(Fp::one(p), 1)
    }

    pub fn monomial(c: Fp, k: usize) -> Self {
        let p = c.modulus();
        let mut v = vec![Fp::zero(p); k + 1];
        v[k] = c;
        Poly::new(p, v)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Fp] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Fp {
        self.c.get(i).copied().unwrap_or(Fp::zero(self.p))
    }

    pub fn leading(&self) -> Option<Fp> {
        self.c.last().copied()
    }

    pub fn scale(&self, k: Fp) -> Poly {
        Poly::new(self.p, self.c.iter().map(|&x| x * k).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(lc) => self.scale(lc.inv().expect("leading coefficient is nonzero")),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Poly {
        let c = self.c.iter().enumerate().skip(1).map(|(i, &x)| x * Fp::new(i as u64, self.p)).collect();
        Poly::new(self.p, c)
    }

    pub fn eval(&self, x: Fp) -> Fp {
        self.c.iter().rev().fold(Fp::zero(self.p), |acc, &k| acc * x + k)
    }

    /// Evaluates at a point of `F_p` or `F_{p²}`.
    pub fn eval_in<K: FieldOps>(&self, field: &PrimeField, x: K) -> K {
        let zero = K::from_base(field, field.zero());
        self.c.iter().rev().fold(zero, |acc, &k| acc * x + K::from_base(field, k))
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv_lc = divisor.leading().and_then(Fp::inv).expect("nonzero leading coefficient");
        let mut rem = self.c.clone();
        if rem.len() <= dd {
            return (Poly::zero(self.p), self.clone());
        }
        let mut quot = vec![Fp::zero(self.p); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd] * inv_lc;
            quot[i] = q;
            if q.is_zero() {
                continue;
            }
            for (j, &dc) in divisor.c.iter().enumerate() {
                rem[i + j] -= q * dc;
            }
        }
        rem.truncate(dd);
        (Poly::new(self.p, quot), Poly::new(self.p, rem))
    }

    pub fn rem(&self, m: &Poly) -> Poly {
        self.div_rem(m).1
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m);
            }
            base = (&base * &base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Distinct roots in `F_p`, sorted by canonical representative.
    pub fn roots(&self) -> Result<Vec<Fp>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let x = Poly::x(self.p);
        let frob = x.pow_mod(self.p, &self.monic());
        let linear_part = self.gcd(&(&frob - &x));
        let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED ^ self.p);
        let mut out = Vec::new();
        split_linear(&linear_part, &mut rng, &mut out);
        out.sort();
        Ok(out)
    }

    /// Degrees of the irreducible factors by distinct-degree factorization.
    pub fn factor_pattern(&self) -> Result<FactorPattern> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(FactorPattern::new(Vec::new()));
        }
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let x = Poly::x(self.p);
        let mut f = self.monic();
        let mut h = x.clone();
        let mut degrees = Vec::new();
        let mut i = 1;
        while let Some(deg) = f.degree() {
            if deg < 2 * i {
                if deg > 0 {
                    degrees.push(deg);
                }
                break;
            }
            h = h.pow_mod(self.p, &f);
            let g = f.gcd(&(&h - &x));
            let gd = g.degree().unwrap_or(0);
            if gd > 0 {
                degrees.extend(std::iter::repeat_n(i, gd / i));
                f = f.div_rem(&g).0;
                h = h.rem(&f);
            }
            i += 1;
        }
        Ok(FactorPattern::new(degrees))
    }

    /// Resultant via the Sylvester determinant.
    pub fn resultant(&self, other: &Poly) -> Fp {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return Fp::zero(self.p);
        };
        let size = m + n;
        if size == 0 {
            return Fp::one(self.p);
        }
        let mut rows = vec![vec![Fp::zero(self.p); size]; size];
        for (r, row) in rows.iter_mut().enumerate().take(n) {
            for (j, &c) in self.c.iter().rev().enumerate() {
                row[r + j] = c;
            }
        }
        for (r, row) in rows.iter_mut().skip(n).enumerate() {
            for (j, &c) in other.c.iter().rev().enumerate() {
                row[r + j] = c;
            }
        }
        determinant(rows, self.p)
    }

    /// `(-1)^(n(n-1)/2) · Res(f, f') / lc(f)` for degrees 2 through 4.
    pub fn discriminant(&self) -> Result<Fp> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        if !(2..=4).contains(&n) {
            return Err(Error::UnsupportedDegree(n));
        }
        let res = self.resultant(&self.derivative());
        let lc = self.leading().expect("nonzero");
        let sign = if (n * (n - 1) / 2) % 2 == 0 { res } else { -res };
        Ok(sign / lc)
    }
}

fn split_linear(g: &Poly, rng: &mut ChaCha8Rng, out: &mut Vec<Fp>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(-g.coeff(0) / g.coeff(1)),
        Some(deg) => {
            let p = g.p;
            let one = Poly::one(p);
            loop {
                let a = Fp::new(rng.gen_range(0..p), p);
                let shifted = Poly::new(p, vec![a, Fp::one(p)]);
                let h = shifted.pow_mod((p - 1) / 2, g);
                let d = g.gcd(&(&h - &one));
                if let Some(dd) = d.degree() {
                    if dd > 0 && dd < deg {
                        split_linear(&d, rng, out);
                        split_linear(&g.div_rem(&d).0, rng, out);
                        return;
                    }
                }
            }
        }
    }
}

fn determinant(mut m: Vec<Vec<Fp>>, p: u64) -> Fp {
    let n = m.len();
    let mut det = Fp::one(p);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Fp::zero(p);
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col];
        det *= pv;
        let inv = pv.inv().expect("pivot is nonzero");
        for r in col + 1..n {
            let factor = m[r][col] * inv;
            if factor.is_zero() {
                continue;
            }
            #[allow(clippy::needless_range_loop)]
            for c in col..n {
                let v = m[col][c];
                m[r][c] -= factor * v;
            }
        }
    }
    det
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self, self.p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && k > 0 { String::new() } else { c.to_string() };
            let term = match k {
                0 => coeff,
                1 => format!("{coeff}x"),
                _ => format!("{coeff}x^{k}"),
            };
            terms.push(term);
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        Poly::new(self.p, (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        Poly::new(self.p, (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.p);
        }
        let mut out = vec![Fp::zero(self.p); self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(self.p, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.p, self.c.iter().map(|&x| -x).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}
