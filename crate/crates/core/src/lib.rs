//! Entanglement measures for small multi-qubit registers.
//!
//! - [`statekit`]: pure states, density operators, partial trace, von Neumann
//!   entropy and Schmidt decomposition.
//! - [`phasespace`]: Bell and diagram bases, the Hadamard pairing between
//!   site states and entangled states, and the bitwise translation operator.
//! - [`measures`]: translation and Wootters concurrences, entanglement of
//!   formation, entropic distance and superposition classification.
//! - [`formation`]: emergent qubits, chain superpositions and formation
//!   counting for multipartite chains.
//!
//! Entropies are in bits. Basis indices are big-endian: qubit 0 is the
//! leftmost character of a bitstring.

pub mod error;
pub mod formation;
pub mod measures;
pub mod phasespace;
pub mod statekit;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Largest register handled by the toolkit.
pub const MAX_QUBITS: usize = 12;

/// Tolerance for structural checks: normalization, Hermiticity, trace, ray equality.
pub const STRUCTURAL_TOL: f64 = 1e-10;

/// Tolerance for spectral comparisons.
pub const SPECTRAL_TOL: f64 = 1e-9;

/// Eigenvalues at or below this contribute nothing to an entropy.
pub const EIGEN_CUTOFF: f64 = 1e-12;
