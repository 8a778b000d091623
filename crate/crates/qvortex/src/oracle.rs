//! Brute-force reference evolution on the number-conserving subspace
//!
//! The Hamiltonian `H = g(a†b e^{iφ} + a b† e^{−iφ}) + Ω(a†a − b†b)`
//! conserves the total quanta, so on the sector spanned by |N−q, q⟩ it is
//! the exact (N+1)×(N+1) tridiagonal Hermitian block
//!
//! ```text
//! H[q][q]   = Ω (N − 2q)
//! H[q−1][q] = g e^{iφ}  √((N−q+1) q)        (a†b ladder)
//! H[q+1][q] = g e^{−iφ} √((N−q)(q+1))       (a b† ladder)
//! ```
//!
//! Evolution is realized literally as `exp(−iHt)` through a Hermitian
//! eigendecomposition — unitary to roundoff, no truncation, no series —
//! which makes it a trustworthy independent oracle for every analytic
//! evolution formula in this crate.  Nothing here knows about transfer
//! matrices or generating functions.

use alloc::vec::Vec;

use num_complex::Complex64 as C64;

use crate::fmath::sqrt;
use crate::linalg::{eigh, CMatrix};
use crate::su2::{SU2Params, TwoModeState};
use crate::{Error, Result};

/// The Hamiltonian restricted to the total-quanta-`N` sector, stored as a
/// dense Hermitian matrix in the |N−q, q⟩ basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceHamiltonian {
    n_total: u32,
    matrix: CMatrix,
}

impl SubspaceHamiltonian {
    pub fn n_total(&self) -> u32 {
        self.n_total
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Largest deviation from Hermiticity, `max |H − H†|` — zero up to
    /// roundoff by construction.
    pub fn hermiticity_defect(&self) -> f64 {
        self.matrix.max_abs_diff(&self.matrix.adjoint())
    }
}

/// Assembles the sector Hamiltonian from the ladder-operator actions
/// `a†b|N−q,q⟩ = √((N−q+1)q) |N−q+1,q−1⟩` and
/// `ab†|N−q,q⟩ = √((N−q)(q+1)) |N−q−1,q+1⟩`.
pub fn hamiltonian_matrix(n_total: u32, params: &SU2Params) -> SubspaceHamiltonian {
    let n = n_total as usize;
    let g = params.g();
    let omega = params.omega();
    let phase = C64::from_polar(1.0, params.phi());
    let mut h = CMatrix::zeros(n + 1);
    for q in 0..=n {
        h.set(q, q, C64::new(omega * (n as f64 - 2.0 * q as f64), 0.0));
        if q > 0 {
            let ladder = g * sqrt(((n - q + 1) * q) as f64);
            h.set(q - 1, q, ladder * phase);
            h.set(q, q - 1, ladder * phase.conj());
        }
    }
    SubspaceHamiltonian {
        n_total,
        matrix: h,
    }
}

/// Applies `exp(−iHt)` to the state through the eigendecomposition
/// `H = Q Λ Q†`: the amplitudes are rotated into the eigenbasis, phased by
/// `e^{−iλt}`, and rotated back.
pub fn expm_evolve(h: &SubspaceHamiltonian, t: f64, state: &TwoModeState) -> Result<TwoModeState> {
    let dim = h.matrix.dim();
    if state.amps().len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: state.amps().len(),
        });
    }
    let (evals, q) = eigh(&h.matrix);
    let rotated = q.adjoint().mul_vec(state.amps())?;
    let phased: Vec<C64> = rotated
        .iter()
        .zip(evals.iter())
        .map(|(c, &lam)| c * C64::from_polar(1.0, -lam * t))
        .collect();
    let amps = q.mul_vec(&phased)?;
    TwoModeState::new(state.n_total(), amps)
}
