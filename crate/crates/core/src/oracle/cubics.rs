//! Exhaustive counts around the Fermat cubic `x³ + y³ = c`.

use crate::error::{Error, Result};
use crate::ff::{CubicClass, PrimeField};

/// `4p = A² + 27B²` with `A ≡ 1 (mod 3)` and `B ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CmDecomposition {
    pub a: i64,
    pub b: i64,
}

/// Scans `B = 0, 1, …` for `4p - 27B²` a perfect square.
pub fn cm_decompose(field: &PrimeField) -> Result<CmDecomposition> {
    let p = field.p();
    if p % 3 != 1 {
        return Err(Error::NoDecomposition(p));
    }
    let four_p = 4 * p as i64;
    let mut found = None;
    let mut b = 0i64;
    while 27 * b * b <= four_p {
        let rest = four_p - 27 * b * b;
        let s = (rest as u64).isqrt() as i64;
        if s * s == rest && s % 3 != 0 {
            let a = if s % 3 == 1 { s } else { -s };
            debug_assert!(found.is_none(), "decomposition is unique");
            found.get_or_insert(CmDecomposition { a, b });
        }
        b += 1;
    }
    found.ok_or(Error::NoDecomposition(p))
}

/// `counts[v]` is the number of `x` with `x³ = v`.
fn cube_multiplicities(field: &PrimeField) -> Vec<u64> {
    let mut counts = vec![0u64; field.p() as usize];
    for x in field.elements() {
        counts[x.pow(3).value() as usize] += 1;
    }
    counts
}

/// Affine solutions of `x³ + y³ = c`.
fn fermat_count_at(field: &PrimeField, c: u64) -> u64 {
    let p = field.p();
    let cubes = cube_multiplicities(field);
    (0..p).map(|v| cubes[v as usize] * cubes[((c + p - v) % p) as usize]).sum()
}

/// Affine solutions of `x³ + y³ = 1`.
pub fn fermat_cubic_count(field: &PrimeField) -> u64 {
    fermat_count_at(field, 1)
}

/// Affine solutions of `x³ + y³ = 0`.
pub fn zero_sum_cube_count(field: &PrimeField) -> u64 {
    fermat_count_at(field, 0)
}

/// Pairs `(x, y)` for which `x³ + y³` is not a cube.
pub fn noncube_pair_count(field: &PrimeField) -> u64 {
    let p = field.p();
    let cubes = cube_multiplicities(field);
    let mut total = 0;
    for u in 0..p {
        for v in 0..p {
            let s = (u + v) % p;
            if cubes[s as usize] == 0 {
                total += cubes[u as usize] * cubes[v as usize];
            }
        }
    }
    total
}

/// Distinct cube values `c` (zero included) for which `c - 1` is a cube.
pub fn cube_successor_count(field: &PrimeField) -> u64 {
    let cubes = cube_multiplicities(field);
    let p = field.p();
    (0..p).filter(|&c| cubes[c as usize] > 0 && cubes[((c + p - 1) % p) as usize] > 0).count() as u64
}

/// Distinct cube values `c` (zero included) for which `c - 1` is not a cube.
pub fn noncube_successor_count(field: &PrimeField) -> u64 {
    let cubes = cube_multiplicities(field);
    let p = field.p();
    (0..p).filter(|&c| cubes[c as usize] > 0 && cubes[((c + p - 1) % p) as usize] == 0).count() as u64
}

/// Distinct cube values `c = a³` with `χ(27·b0^i - c)` a nontrivial cube
/// root of unity, i.e. the cyclic members `y² + a·xy + b0^i·y = x³` up to
/// `a ↦ ρa`.
pub fn cyclic_class_count_by_twist_index(field: &PrimeField, i: u8) -> u64 {
    let cubes = cube_multiplicities(field);
    let target = field.elem(27) * field.b0_power(i);
    field
        .elements()
        .filter(|c| cubes[c.value() as usize] > 0)
        .filter(|&c| matches!(field.cubic_character(target - c), CubicClass::Rho | CubicClass::RhoSq))
        .count() as u64
}
