//! Bundles on `P¹` and on an elliptic curve, and their classification.

pub mod atiyah;
pub mod classify;
pub mod descriptor;
pub mod grammar;
pub mod pic;

pub use classify::{classify_elliptic, classify_p1, Citation, Outcome, Verdict};
pub use descriptor::{BundleError, EllipticBundle, GZeroBundle, Indecomposable};
pub use grammar::{parse_elliptic, parse_gzero, parse_p1_twist, parse_twist, ParseError};
pub use pic::PicPoint;
