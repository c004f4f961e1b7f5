//! Quadratic twists of the two families: curves whose stable order-3
//! subgroups have no rational points besides `O`.

use super::{cyclic_representatives, ga_orbits, noncyclic_curve, FamilyCoords, FamilyKind, IsoReading};
use crate::curve::{twist_coefficients, Curve};
use crate::error::Result;
use crate::ff::{Fp, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistRepresentative {
    pub coords: FamilyCoords,
    /// The untwisted family member.
    pub family_curve: Curve,
    /// `(t²A, t³B)` for the short form `(A, B)` of `family_curve`.
    pub short: (Fp, Fp),
}

impl TwistRepresentative {
    pub fn curve(&self) -> Curve {
        let f = self.family_curve.field();
        Curve::short(f, self.short.0, self.short.1).expect("twists of nonsingular curves are nonsingular")
    }
}

/// One twist per class: of each cyclic representative, or of the smallest
/// member of each `E_a` orbit. Computed as `to_short` followed by the twist.
/// Untwisted kinds are treated as their twisted counterparts.
pub fn twist_representatives(field: &PrimeField, kind: FamilyKind) -> Result<Vec<TwistRepresentative>> {
    field.require_rho()?;
    let coords: Vec<FamilyCoords> = match kind {
        FamilyKind::CyclicFamily | FamilyKind::TwistCyclic => cyclic_representatives(field, IsoReading::RhoOrbit)
            .representatives
            .into_iter()
            .map(|c| FamilyCoords { kind: FamilyKind::TwistCyclic, ..c })
            .collect(),
        FamilyKind::NonCyclicFamily | FamilyKind::TwistNonCyclic => ga_orbits(field)?
            .into_iter()
            .map(|orbit| FamilyCoords { kind: FamilyKind::TwistNonCyclic, i: 0, a: orbit[0] })
            .collect(),
    };
    coords
        .into_iter()
        .map(|c| {
            let family_curve = c.family_curve(field)?;
            let (a, b, _) = family_curve.to_short();
            Ok(TwistRepresentative { coords: c, family_curve, short: twist_coefficients(field, a, b) })
        })
        .collect()
}

/// Short form of `y² + a³·xy + b0^i·y = x³` by the closed formulas
/// `A = -a³(a⁹ - 24b0^i)/48`, `B = b0^{2i}/4 + a¹⁸/864 - a⁹b0^i/24`.
pub fn printed_cyclic_short(field: &PrimeField, a: Fp, i: u8) -> (Fp, Fp) {
    let c = |v: i64| field.elem(v);
    let b = field.b0_power(i);
    let a3 = a.pow(3);
    let a9 = a.pow(9);
    (-(a3 * (a9 - c(24) * b)) / c(48), b * b / c(4) + a.pow(18) / c(864) - a9 * b / c(24))
}

/// Short form of `E_a` by the closed formulas
///
/// ```text
/// A = -(9a - 1 - 2ρ)(3a - 1 - 2ρ)(3a - 1)(3a + 1)/144
/// B = (1 + 9a²)(9a² - 6a - 6ρa - 1)(9a² - 6ρa - 1)/864
/// ```
pub fn printed_noncyclic_short(field: &PrimeField, a: Fp) -> Result<(Fp, Fp)> {
    let r = field.require_rho()?;
    noncyclic_curve(field, a)?;
    let c = |v: i64| field.elem(v);
    let big_a =
        -((c(9) * a - c(1) - c(2) * r) * (c(3) * a - c(1) - c(2) * r) * (c(3) * a - c(1)) * (c(3) * a + c(1))) / c(144);
    let a2 = a * a;
    let big_b =
        (c(1) + c(9) * a2) * (c(9) * a2 - c(6) * a - c(6) * r * a - c(1)) * (c(9) * a2 - c(6) * r * a - c(1)) / c(864);
    Ok((big_a, big_b))
}
