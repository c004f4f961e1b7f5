//! Exact arithmetic for classifying elliptic curves over small prime fields
//! by their order-3 rational subgroups.
//!
//! The crate is split into:
//!
//! * [`ff`]: `F_p`, `F_{p²}`, square/cube roots and the cubic character;
//! * [`poly`]: dense polynomials over `F_p`, factorization patterns,
//!   discriminants and division polynomials;
//! * [`curve`]: general Weierstrass curves, the group law, coordinate
//!   changes, quadratic twists and isomorphism testing;
//! * [`torsion3`]: the normal-form families, cyclic/non-cyclic criteria,
//!   class representatives, the parameter group acting on the non-cyclic
//!   family, the factorization-pattern classifier and the twist families;
//! * [`oracle`]: brute-force ground truth (point enumeration, group
//!   structure, Frobenius-stable subgroups, Fermat-cubic counts, census).

pub mod curve;
pub mod error;
pub mod ff;
pub mod oracle;
pub mod poly;
pub mod torsion3;

pub use curve::{Curve, IsoWitness, Point};
pub use error::{Error, Result};
pub use ff::{CubicClass, FieldOps, Fp, Fp2, PrimeField};
pub use poly::{DivPoly, FactorPattern, Poly};
