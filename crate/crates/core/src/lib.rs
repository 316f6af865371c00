//! Deterministic compressed-sensing matrices and certificates of their
//! restricted isometry property.
//!
//! The crate is organised bottom-up:
//!
//! - [`linalg`]: dense complex kernels (Gram products, Jacobi spectra,
//!   operator norms, trace powers, semidefinite Cholesky).
//! - [`constructions`]: Steiner systems, Hadamard matrices, Steiner and Paley
//!   equiangular tight frames, real rotations of complex frames, seeded
//!   Gaussian/Bernoulli ensembles.
//! - [`certification`]: coherence, Welch bound, exact and power-method
//!   restricted isometry constants, restricted orthogonality, flat restricted
//!   orthogonality, the bound chain between them, and spark.
//! - [`graphs`]: Seidel matrices, flipping, strongly regular graphs, Paley
//!   graphs, exact clique numbers and the graph-side identities.
//! - [`montecarlo`]: seeded trial runners for the probabilistic statements.

pub mod certification;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graphs;
pub mod linalg;
pub mod montecarlo;
pub mod parallel;

pub use constructions::{Frame, SteinerSystem};
pub use error::{Error, Result};
pub use linalg::{DenseMatrix, Spectrum};
