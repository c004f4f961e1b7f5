//! Tonelli–Shanks style extraction of `r`-th roots for prime `r`, generic over
//! any finite field whose multiplicative group order is known.
//!
//! With `|F^*| = r^s · m`, `gcd(m, r) = 1`: the candidate `x^e` with
//! `r·e ≡ 1 (mod m)` is off by an element of the Sylow `r`-subgroup. That
//! error is identified by a base-`r` discrete logarithm against a generator
//! of the Sylow subgroup and divided out.

use super::FieldOps;

/// Returns one `r`-th root of `x`, or `None` if `x` is not an `r`-th power.
///
/// `non_residue` must not be an `r`-th power; `order` is `|F^*|` and must be
/// divisible by `r`.
pub(crate) fn prime_root<F: FieldOps>(x: F, r: u64, order: u64, non_residue: F) -> Option<F> {
    if x.is_zero() {
        return Some(x);
    }
    let one = x.one_like();
    debug_assert_eq!(order % r, 0);
    if x.pow(order / r) != one {
        return None;
    }

    let mut s = 0u32;
    let mut m = order;
    while m.is_multiple_of(r) {
        m /= r;
        s += 1;
    }

    let e = if m == 1 { 0 } else { inverse_mod(r % m, m) };
    let candidate = x.pow(e);
    let error = candidate.pow(r) * x.inv()?;

    let g = non_residue.pow(m);
    let gamma = g.pow(r.pow(s - 1));

    // base-r digits of log_g(error)
    let mut log = 0u64;
    for j in 0..s {
        let residual = error * g.pow(log).inv()?;
        let h = residual.pow(r.pow(s - 1 - j));
        let digit = (0..r).find(|&k| gamma.pow(k) == h)?;
        log += digit * r.pow(j);
    }
    debug_assert_eq!(log % r, 0, "x is an r-th power, so its error is too");

    let root = candidate * g.pow(log / r).inv()?;
    (root.pow(r) == x).then_some(root)
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(m as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::Fp;

    #[test]
    fn square_roots_mod_41_agree_with_scan() {
        let p = 41; // p - 1 = 2^3 · 5
        let z = Fp::new(3, p);
        for v in 0..p {
            let x = Fp::new(v, p);
            let scan = (0..p).any(|y| Fp::new(y * y, p) == x);
            let root = prime_root(x, 2, p - 1, z);
            assert_eq!(root.is_some(), scan, "x = {v}");
            if let Some(r) = root {
                assert_eq!(r * r, x);
            }
        }
    }

    #[test]
    fn cube_roots_with_deep_sylow_subgroup() {
        // p - 1 = 108 = 4 · 27, so the Sylow 3-subgroup has order 27
        let p = 109;
        let z = (2..p).map(|v| Fp::new(v, p)).find(|v| v.pow(36) != Fp::one(p)).unwrap();
        for v in 1..p {
            let x = Fp::new(v, p);
            let scan = (0..p).any(|y| Fp::new(y, p).pow(3) == x);
            let root = prime_root(x, 3, p - 1, z);
            assert_eq!(root.is_some(), scan, "x = {v}");
            if let Some(r) = root {
                assert_eq!(r.pow(3), x);
            }
        }
    }
}
