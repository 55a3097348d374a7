//! Exact-arithmetic combinatorics of regular nilpotent partial Hessenberg
//! varieties.
//!
//! The crate builds finite root systems from Cartan data, recognizes and
//! enumerates lower ideals and Θ-ideals, enumerates Weyl groups and their
//! parabolic quotients, and computes the Poincaré polynomial of the variety
//! attached to a Θ-ideal by several independent routes:
//!
//! * a cell summation over admissible minimal coset representatives,
//! * a summation over Weyl-type subsets,
//! * a product over the roots of `I \ Φ⁺_Θ`,
//! * a product read off the height distribution,
//! * and, in type A, a product of q-binomial coefficients.
//!
//! All arithmetic is exact (arbitrary-precision integer coefficients), so
//! equality of two routes is a theorem check, not an approximation.

pub mod error;
pub mod ideal;
pub mod poincare;
pub mod qpoly;
pub mod root_system;
pub mod weyl;
pub mod weyltype;

pub use error::Error;
pub use ideal::{IdealSet, PartialHessenbergFunction};
pub use poincare::{HeightDistribution, IdentityCheck, IdentityReport};
pub use qpoly::{qbinomial, QPolynomial};
pub use root_system::{CartanMatrix, Family, Root, RootSystem, ThetaSet};
pub use weyl::{WeylElement, WeylGroup};

/// Default cap on Weyl-group elements materialized as integer matrices.
pub const DEFAULT_MATRIX_CAP: usize = 1_000_000;

/// Default cap for the type-A one-line-permutation fast path.
pub const DEFAULT_PERMUTATION_CAP: usize = 10_000_000;

/// Default cap on enumerated ideals.
pub const DEFAULT_IDEAL_CAP: usize = 1_000_000;

/// Largest ideal size for which Weyl-type subsets are found by scanning all
/// 2^|I| subsets; above this the bijection route through the Weyl group is
/// used instead.
pub const SUBSET_SCAN_LIMIT: usize = 20;
