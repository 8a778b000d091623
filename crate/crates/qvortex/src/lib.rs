//! Analytic machinery for two mode bosonic fields evolving under the
//! number-conserving SU(2) Hamiltonian
//!
//! ```text
//! H = g (a†b e^{iφ} + a b† e^{−iφ}) + Ω (a†a − b†b)
//! ```
//!
//! The Heisenberg evolution of the mode operators is a 2×2 special-unitary
//! transfer matrix `V`, and every fixed-`N` Fock sector `{ |N−q, q⟩ }`
//! evolves under the unitary induced by `V`.  This crate evaluates those
//! induced amplitudes in closed form (a finite Leibniz expansion of a
//! generating-function derivative), together with everything the amplitudes
//! feed:
//!
//! * [`su2`] — transfer matrices, Fock evolution coefficients `C⁽q⁾_{Nj}`,
//!   induced sector unitaries, reduced single-mode spectra and entanglement
//!   entropy;
//! * [`specfun`] — Hermite, Laguerre and Jacobi evaluations plus
//!   Hermite–Gauss and Laguerre–Gauss transverse modes and the unitary
//!   change of basis between them;
//! * [`vortex`] — quadrature wavefunctions `ψ(x, y)`, their expansion over
//!   Laguerre–Gauss modes, single-vortex detection and the special
//!   evolution conditions (revival, eigenstate, charge conjugation);
//! * [`coherence`] — reduced-mode position correlations `⟨x|ρ⁽ᵃ⁾|y⟩` and the
//!   normalized spatial coherence function `γ(l)`;
//! * [`oracle`] — an independent dense matrix-exponential evolution used to
//!   cross-check every analytic path;
//! * [`linalg`] — the small complex-matrix and Hermitian eigensolver kernel
//!   backing the oracle.
//!
//! The crate is `no_std` (with `alloc`); the `std` feature (default) only
//! adds `std::error::Error` for [`Error`].

#![no_std]

extern crate alloc;

#[cfg(any(feature = "std", test))]
extern crate std;

mod combin;
mod error;
mod fmath;

pub mod coherence;
pub mod linalg;
pub mod oracle;
pub mod specfun;
pub mod su2;
pub mod vortex;

pub use error::{Error, Result};
pub use su2::{ReducedSpectrum, SU2Params, TransferMatrix, TwoModeState};

/// Re-export of the complex-number crate whose [`Complex64`]
/// (`num_complex::Complex64`) appears throughout the public API.
pub use num_complex;
