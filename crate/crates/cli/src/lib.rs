//! Library half of the `ec3` command: the conformance catalogue and the
//! renderings shared by the binary and its tests.

pub mod conformance;
pub mod render;

pub use conformance::{verify, Claim, ConformanceReport, Conventions, Quantity, Verdict, CATALOGUE};
pub use render::{Family, Rendered};
