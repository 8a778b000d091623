//! Correlation and spatial-coherence functions of the reduced mode
//!
//! Tracing out mode b leaves mode a in the diagonal mixture ρ⁽ᵃ⁾ =
//! Σ_q p_q |q⟩⟨q|, whose position-space kernel is
//!
//! ```text
//! ⟨x| ρ⁽ᵃ⁾ |y⟩ = Σ_q p_q e^{−(x²+y²)/2} H_q(x) H_q(y)/(2^q q! √π)
//!             = Σ_q p_q ϕ_q(x) ϕ_q(y),
//! ```
//!
//! the quantum analogue of the mutual coherence function of a partially
//! coherent source.  Its normalized antidiagonal average collapses to the
//! closed form
//!
//! ```text
//! γ(l) = ∫ ⟨x| ρ⁽ᵃ⁾ |x+l⟩ dx = Σ_q p_q e^{−l²/4} L_q(l²/2),
//! ```
//!
//! with L_q the Laguerre polynomials — γ(0) = 1 and |γ(l)| ≤ 1 always.
//! Prepared (vortex) systems use the same formulas verbatim: only the
//! spectrum fed in changes.

use alloc::vec::Vec;

use crate::fmath::exp;
use crate::specfun::{laguerre, qho_eigenfunctions};
use crate::su2::ReducedSpectrum;

/// Sampled spatial-coherence curve: `values[i] = γ(separations[i])`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoherenceProfile {
    separations: Vec<f64>,
    values: Vec<f64>,
}

impl CoherenceProfile {
    pub fn separations(&self) -> &[f64] {
        &self.separations
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Position-space kernel `⟨x| ρ⁽ᵃ⁾ |y⟩` of the reduced density operator —
/// real and symmetric in `(x, y)`.
pub fn correlation(spectrum: &ReducedSpectrum, x: f64, y: f64) -> f64 {
    let n = spectrum.n_total();
    let phi_x = qho_eigenfunctions(n, x);
    let phi_y = qho_eigenfunctions(n, y);
    spectrum
        .probs()
        .iter()
        .enumerate()
        .map(|(q, &p)| p * phi_x[q] * phi_y[q])
        .sum()
}

/// Spatial coherence `γ(l) = Σ_q p_q e^{−l²/4} L_q(l²/2)`, the closed form
/// of `∫ ⟨x| ρ⁽ᵃ⁾ |x+l⟩ dx`.
pub fn spatial_coherence(spectrum: &ReducedSpectrum, l: f64) -> f64 {
    let gauss = exp(-0.25 * l * l);
    let arg = 0.5 * l * l;
    spectrum
        .probs()
        .iter()
        .enumerate()
        .map(|(q, &p)| p * gauss * laguerre(q as u32, 0, arg))
        .sum()
}

/// [`spatial_coherence`] sampled on a uniform grid of `count` separations
/// from `0` to `l_max` inclusive (a single point at `l = 0` when
/// `count == 1`).
pub fn coherence_profile(spectrum: &ReducedSpectrum, l_max: f64, count: usize) -> CoherenceProfile {
    let count = count.max(1);
    let mut separations = Vec::with_capacity(count);
    let mut values = Vec::with_capacity(count);
    for i in 0..count {
        let l = if count == 1 {
            0.0
        } else {
            l_max * i as f64 / (count - 1) as f64
        };
        separations.push(l);
        values.push(spatial_coherence(spectrum, l));
    }
    CoherenceProfile {
        separations,
        values,
    }
}
