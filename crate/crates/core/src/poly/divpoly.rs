//! Division polynomials of short Weierstrass curves `y² = x³ + Ax + B`.
//!
//! Every `ψ_n` is stored as `x_part · (2y)^y_factor` with `y²` eliminated, so
//! odd indices are pure polynomials in `x` and even ones carry one `2y`.
//! Writing `g_n` for the x-part and `F = x³ + Ax + B`, the standard
//! recurrences become
//!
//! ```text
//! g_{2k}   = g_k (g_{k+2} g_{k-1}² - g_{k-2} g_{k+1}²)
//! g_{2k+1} = 16F² g_{k+2} g_k³ - g_{k-1} g_{k+1}³        (k even)
//! g_{2k+1} = g_{k+2} g_k³ - 16F² g_{k-1} g_{k+1}³        (k odd)
//! ```
//!
//! since `(2y)² = 4F`. The recurrence needs `ψ_1 … ψ_4` as base cases.

use std::fmt;

use super::Poly;
use crate::error::{Error, Result};
use crate::ff::{FieldOps, Fp, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivPoly {
    pub x_part: Poly,
    /// 1 when the polynomial carries a factor `2y`, else 0.
    pub y_factor: u8,
}

impl DivPoly {
    /// Value of `ψ_n` at an affine point `(x, y)`.
    pub fn eval<K: FieldOps>(&self, field: &PrimeField, x: K, y: K) -> K {
        let v = self.x_part.eval_in(field, x);
        if self.y_factor == 1 {
            v * (y + y)
        } else {
            v
        }
    }
}

impl fmt::Display for DivPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y_factor == 1 {
            write!(f, "2y·({})", self.x_part)
        } else {
            write!(f, "{}", self.x_part)
        }
    }
}

/// `ψ_n` for the curve `y² = x³ + Ax + B`.
pub fn division_polynomial(a: Fp, b: Fp, n: i64) -> Result<DivPoly> {
    let p = a.modulus();
    if n < 1 {
        return Err(Error::BadIndex(n));
    }
    let c = |v: i64| Fp::from_i64(v, p);
    if (c(4) * a.pow(3) + c(27) * b.square()).is_zero() {
        return Err(Error::SingularCurve);
    }

    let n = n as usize;
    let mut g: Vec<Poly> = Vec::with_capacity(n.max(4) + 1);
    g.push(Poly::zero(p));
    g.push(Poly::one(p));
    g.push(Poly::one(p));
    // 3x^4 + 6Ax^2 + 12Bx - A^2
    g.push(Poly::new(p, vec![-a.square(), c(12) * b, c(6) * a, Fp::zero(p), c(3)]));
    // 2(x^6 + 5Ax^4 + 20Bx^3 - 5A^2x^2 - 4ABx - 8B^2 - A^3)
    g.push(
        Poly::new(
            p,
            vec![
                -(c(8) * b.square() + a.pow(3)),
                -(c(4) * a * b),
                -(c(5) * a.square()),
                c(20) * b,
                c(5) * a,
                Fp::zero(p),
                Fp::one(p),
            ],
        )
        .scale(c(2)),
    );

    let cubic = Poly::new(p, vec![b, a, Fp::zero(p), Fp::one(p)]);
    let sixteen_f2 = (&cubic * &cubic).scale(c(16));

    for m in 5..=n {
        let next = if m % 2 == 0 {
            let k = m / 2;
            let t1 = &g[k + 2] * &(&g[k - 1] * &g[k - 1]);
            let t2 = &g[k - 2] * &(&g[k + 1] * &g[k + 1]);
            &g[k] * &(&t1 - &t2)
        } else {
            let k = (m - 1) / 2;
            let cube = |q: &Poly| &(q * q) * q;
            let t1 = &g[k + 2] * &cube(&g[k]);
            let t2 = &g[k - 1] * &cube(&g[k + 1]);
            if k % 2 == 0 {
                &(&sixteen_f2 * &t1) - &t2
            } else {
                &t1 - &(&sixteen_f2 * &t2)
            }
        };
        g.push(next);
    }

    Ok(DivPoly { x_part: g.swap_remove(n), y_factor: n.is_multiple_of(2) as u8 })
}

/// The monic 3-division quartic `x⁴ + 2Ax² + 4Bx - A²/3`.
pub fn monic_3div(a: Fp, b: Fp) -> Poly {
    let p = a.modulus();
    let c = |v: i64| Fp::from_i64(v, p);
    Poly::new(p, vec![-a.square() / c(3), c(4) * b, c(2) * a, Fp::zero(p), Fp::one(p)])
}
