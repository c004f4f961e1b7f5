//! Predicting how `x⁴ + 2Ax² + 4Bx - A²/3` factors when p ≡ 1 (mod 3).
//!
//! Its resolvent cubic has roots `θ_k = ρ^k·y0 - 4A/3` with
//! `y0 = 2∛(2(27B² + 4A³))/3`. The quartic has a single rational root when
//! `2(27B² + 4A³)` is not a cube; otherwise it splits completely when all
//! three `θ_k` are squares and into two quadratics when they are not.

use crate::error::{Error, Result};
use crate::ff::{CubicClass, Fp, PrimeField};
use crate::poly::FactorPattern;

fn checked(field: &PrimeField, a: Fp, b: Fp) -> Result<(Fp, Fp)> {
    let rho = field.require_rho()?;
    let d = field.elem(4) * a.pow(3) + field.elem(27) * b * b;
    if d.is_zero() {
        return Err(Error::SingularCurve);
    }
    Ok((rho, field.elem(2) * d))
}

/// Factor pattern of the monic 3-division quartic from characters alone.
pub fn skolem_pattern(field: &PrimeField, a: Fp, b: Fp) -> Result<FactorPattern> {
    let (rho, d) = checked(field, a, b)?;
    if field.cubic_character(d) != CubicClass::One {
        return Ok(FactorPattern::new(vec![1, 3]));
    }
    let y0 = field.elem(2) * field.cube_roots(d)[0] / field.elem(3);
    let shift = field.elem(4) * a / field.elem(3);
    let splits = (0..3).all(|k| (rho.pow(k) * y0 - shift).is_square());
    Ok(FactorPattern::new(if splits { vec![1, 1, 1, 1] } else { vec![2, 2] }))
}

/// Which cube root enters `y0` in [`skolem_pattern_printed`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SkolemRootChoice {
    /// The smallest canonical cube root.
    Canonical,
    /// Complete splitting if any of the three cube roots passes the test.
    AnyRoot,
}

/// The criterion read literally: split completely iff `y0 + 16A/3` and
/// `ρ·y0 + 16A/3` are both squares.
pub fn skolem_pattern_printed(field: &PrimeField, a: Fp, b: Fp, choice: SkolemRootChoice) -> Result<FactorPattern> {
    let (rho, d) = checked(field, a, b)?;
    if field.cubic_character(d) != CubicClass::One {
        return Ok(FactorPattern::new(vec![1, 3]));
    }
    let shift = field.elem(16) * a / field.elem(3);
    let passes = |root: Fp| {
        let y0 = field.elem(2) * root / field.elem(3);
        (y0 + shift).is_square() && (rho * y0 + shift).is_square()
    };
    let roots = field.cube_roots(d);
    let splits = match choice {
        SkolemRootChoice::Canonical => passes(roots[0]),
        SkolemRootChoice::AnyRoot => roots.into_iter().any(passes),
    };
    Ok(FactorPattern::new(if splits { vec![1, 1, 1, 1] } else { vec![2, 2] }))
}
