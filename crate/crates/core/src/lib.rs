//! Exact UMVUE structure for finite categorical models.
//!
//! A model assigns a polynomial probability `p_k(θ)` to each of `N` support
//! points. Because the parameter set is a box with non-empty interior, every
//! "for all θ" statement reduces to exact linear algebra on coefficient
//! vectors. From that the crate computes:
//!
//! - the maximal MVE partition: statistics constant on its blocks are exactly
//!   the UMVUEs ([`matroid::mve_partition`]);
//! - the zero-mean statistics and the UMVUE criterion ([`analysis`]);
//! - the parametric functions that admit a UMVUE, and the UMVUE of a given
//!   target ([`analysis::umvue_for`]);
//! - minimal sufficiency and completeness of partitions;
//! - products of independent models and parameter slices ([`algebra`]).
//!
//! See `examples/` for one runnable program per capability, and the `umvue`
//! binary for the command-line interface.

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod matroid;
pub mod model;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
pub use model::{CategoricalModel, Statistic};
pub use partition::Partition;
pub use poly::{Monomial, Polynomial};
pub use rational::Rational;
