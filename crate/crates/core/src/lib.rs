//! Additive degree-Kirchhoff index `R⁺(G) = Σ_{i<j} (d_i + d_j) R_ij` of a
//! simple connected graph, computed exactly from effective resistances, and
//! a catalog of closed-form lower and upper bounds on it.
//!
//! The crate is organized bottom-up:
//!
//! - [`graph`], [`generators`], [`edgelist`]: validated graphs, the families
//!   the bounds are studied on, and a plain-text edge-list format.
//! - [`linalg`], [`spectral`]: a cyclic Jacobi eigensolver, the Laplacian
//!   pseudoinverse and the spectrum of the simple random walk.
//! - [`exact`], [`enumerate`]: resistances, `R`, `R*`, `R⁺`, hitting times,
//!   checks of the identities linking them, and an exhaustive search over
//!   small labeled graphs.
//! - [`bounds`]: every bound as a standalone formula plus a catalog runner.
//! - [`report`]: what the `kirchhoff` binary prints.

pub mod bounds;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod report;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::Graph;
