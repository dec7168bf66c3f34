//! Simulation toolkit for a driven superconducting flux qubit strongly coupled
//! to a microwave cavity.
//!
//! The crate covers the full ladder of descriptions used for such a device:
//!
//! * closed-form dispersive response ([`dispersive`]),
//! * rotating-frame and dressed-state Hamiltonians with eigenvalue overlays
//!   ([`hamiltonian`]),
//! * semiclassical Bloch equations, fixed points and bistability boundaries
//!   ([`semiclassical`]),
//! * Lindblad master equation, sparse Liouvillians and steady states
//!   ([`lindblad`]),
//! * quantum-jump Monte Carlo trajectories and metastable-state statistics
//!   ([`trajectories`]),
//! * Wigner-function analysis of the cavity state ([`wigner`]).
//!
//! All frequencies are angular (rad/s) internally; constructors on the
//! parameter types accept cyclic values (Hz) and convert once at the boundary.
//! Core math is generic over the scalar type through [`scalar::Real`]; the
//! crate root exports `f64` aliases for the common types.

pub mod scalar;
pub mod error;
pub mod linalg;
pub mod model;
pub mod hilbert;
pub mod hamiltonian;
pub mod dispersive;
pub mod semiclassical;
pub mod lindblad;
pub mod trajectories;
pub mod wigner;
pub mod oracles;

pub use error::CqedError;
pub use scalar::Real;

/// Default float scalar used by the concrete aliases below.
pub type R64 = f64;
/// Complex scalar over [`R64`].
pub type C64 = num_complex::Complex<f64>;

/// `f64` operator on the truncated qubit⊗cavity space.
pub type Operator = hilbert::Operator<R64>;
/// `f64` density matrix.
pub type DensityMatrix = hilbert::DensityMatrix<R64>;
/// `f64` pure state.
pub type KetState = hilbert::KetState<R64>;
/// `f64` device parameter set.
pub type SystemParams = model::SystemParams<R64>;
/// `f64` drive parameter set.
pub type DriveParams = model::DriveParams<R64>;
/// `f64` Liouvillian superoperator.
pub type Liouvillian = lindblad::Liouvillian<R64>;
