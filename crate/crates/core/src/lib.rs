//! Exact computations around twisted very stable and wobbly bundles on
//! curves of genus 0 and 1.
//!
//! The crate is organised in five layers:
//!
//! - [`cohom`]: the integral cohomology ring of `Sym^n X` for an elliptic
//!   curve `X`, in a fixed normal form, with a brute-force oracle over
//!   `H*(X^n)`.
//! - [`betti`]: Poincaré polynomials of symmetric products, Künneth products,
//!   projective bundles over `X`, and the rank-2 genus ≥ 2 wobbly class
//!   evaluator.
//! - [`bundles`]: bundle and twist descriptors, the Atiyah algebra of
//!   indecomposable bundles, and the very stable / wobbly classifier.
//! - [`strata`]: the partition-indexed stratification of `Sym^h X`, its
//!   containment order and fundamental classes.
//! - [`cli`]: the command line front end and a small ring-expression parser.
//!
//! Every value is exact: integers are arbitrary precision and Picard offsets
//! are exact rationals.

pub mod betti;
pub mod bundles;
pub mod cli;
pub mod cohom;
pub mod strata;
