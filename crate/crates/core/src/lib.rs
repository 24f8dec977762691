//! Numerical laboratory for strong zero modes at the boundary between two
//! coupled one-dimensional spin/fermion chains.
//!
//! The crate is organized around the objects it manipulates:
//!
//! - [`operator_algebra`]: exact sparse Pauli / Majorana string algebra and
//!   both Jordan-Wigner conventions;
//! - [`models`]: every Hamiltonian built from a single [`models::ChainSpec`];
//! - [`szm_solver`]: order-by-order construction of the boundary strong zero
//!   mode with resonance detection;
//! - [`gaussian_dynamics`]: free-fermion propagators, Pfaffians and
//!   infinite-temperature string autocorrelators;
//! - [`closed_forms`]: the analytic single-spin and N-spin boundary
//!   solutions, localization conditions and counting bounds;
//! - [`ed_engine`]: exact diagonalization and Krylov time evolution for the
//!   interacting chains.

pub mod closed_forms;
pub mod ed_engine;
pub mod gaussian_dynamics;
pub(crate) mod linalg;
pub mod models;
pub mod operator_algebra;
pub mod szm_solver;

use thiserror::Error as ThisError;

pub use operator_algebra::{Site, Window};

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("parse error: {0:?}")]
    Parse(String),
    #[error("site {site} outside the lattice window")]
    SupportOverflow { site: Site },
    #[error("operation requires variant {expected}, spec has {found}")]
    VariantMismatch { expected: String, found: String },
    #[error("{what} requires K = 0 (got K = {k})")]
    NotQuadratic { what: &'static str, k: f64 },
    #[error("matrix dimension {dim} is odd; Pfaffian needs an even dimension")]
    OddDimension { dim: usize },
    #[error("resonance detected at order {order}: smallest needed singular value {sigma:.3e}")]
    ResonanceDetected { order: usize, sigma: f64 },
    #[error("couplings outside the convergence region: {0}")]
    OutOfConvergenceRegion(String),
    #[error("string is not a Hermitian involution")]
    NotInvolution,
    #[error("Krylov subspace cap {cap} exceeded")]
    SubspaceCapExceeded { cap: usize },
    #[error("Hilbert space dimension 2^{l} too large for {what}")]
    DimensionTooLarge { l: usize, what: &'static str },
    #[error("fixed point did not converge after {iters} iterations (residual {residual:.3e})")]
    NoConvergence { iters: usize, residual: f64 },
    #[error("empty window or grid: {0}")]
    EmptyInput(String),
    #[error("no crossing found: {0}")]
    NoCrossing(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
