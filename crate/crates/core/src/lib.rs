//! Exact-arithmetic kernels for symmetric functions and the Temperley-Lieb
//! diagram algebra, with exhaustive Schur-positivity checkers on top.
//!
//! The layers, bottom up:
//!
//! * [`partition`] — partitions, skew shapes, index sets and every
//!   shape-level operation (∨/∧, sorting, strides, midpoints, shifts).
//! * [`schur`] — sparse Schur-basis vectors, Littlewood-Richardson
//!   products, the h-basis with Jacobi-Trudi determinants, and a
//!   tableau-monomial oracle kept independent of the main code paths.
//! * [`perm`] / [`tl`] / [`kl`] — permutations, the Temperley-Lieb algebra
//!   TL_n(ξ) over noncrossing matchings, the θ homomorphism, and an
//!   optional Kazhdan-Lusztig table for small n.
//! * [`immanant`] — Temperley-Lieb immanants of integer and generalized
//!   Jacobi-Trudi matrices, and the minor-product decomposition identity.
//! * [`positivity`] — the statement checkers and sweep drivers that turn
//!   shape families into machine-checked positivity certificates.

pub mod enumerate;
pub mod error;
pub mod immanant;
pub mod kl;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod positivity;
pub mod report;
pub mod schur;
pub mod tl;

pub use error::{Error, Result};
pub use partition::{IndexSet, Partition, ShapePair, SkewShape};
pub use schur::{HVector, SchurVector};
