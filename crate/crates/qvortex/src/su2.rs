//! Two-mode evolution under the number-conserving SU(2) Hamiltonian
//!
//! ```text
//! H = g (a†b e^{iφ} + a b† e^{−iφ}) + Ω (a†a − b†b)
//! ```
//!
//! The Heisenberg mode operators evolve by a 2×2 transfer matrix
//!
//! ```text
//! V = [ cos σt − i cosΘ sin σt        −i e^{iφ} sinΘ sin σt ]
//!     [ −i e^{−iφ} sinΘ sin σt        cos σt + i cosΘ sin σt ]
//! ```
//!
//! with σ = √(Ω² + g²), cos Θ = Ω/σ, sin Θ = g/σ.  Acting on the Fock state
//! |N−j, j⟩ the evolution stays inside the (N+1)-dimensional total-number
//! sector and produces amplitudes
//!
//! ```text
//! C⁽q⁾_Nj = √((N−j)! j! / ((N−q)! q!)) · (1/j!) ∂_τʲ [(v₁₁+v₁₂τ)^{N−q} (v₂₁+v₂₂τ)^q ]|_{τ=0},
//! ```
//!
//! evaluated here through the exact finite Leibniz sum (no differentiation)
//! with big-integer combinatorics.  That alternating sum is exact term by
//! term but cancels catastrophically as the sector grows (error ~ε·√(C(N,q)
//! C(N,j))), so beyond `N = 32` the same quantity is evaluated through its
//! Jacobi-polynomial form
//!
//! ```text
//! |C⁽q⁾| = √((N−j)!j!/((N−q)!q!)) R^{μ/2} (1−R)^{ν/2} |P_s^{(μ,ν)}(1−2R)|,
//! μ = |q−j|,  ν = |N−q−j|,  s = (N−μ−ν)/2,  R = |v21|²,
//! ```
//!
//! whose degree recurrence is stable, with the phase attached analytically
//! (it is a pure function of `arg v11`, `arg v21` and the indices).
//! Everything downstream — reduced spectra, entanglement entropy, coherence
//! functions — depends on the matrix only through R, for which the
//! phase-free closed form [`coeff_prob`] is provided as an independent route.

use alloc::vec::Vec;

use num_complex::Complex64 as C64;

use crate::combin;
use crate::fmath::{atan2, cos, cpowi, exp, hypot, ln, log2, powi, sin, sqrt};
use crate::linalg::CMatrix;
use crate::{Error, Result};

/// Largest supported total quanta.
pub const MAX_TOTAL_QUANTA: u32 = 200;

/// Largest sector evaluated by direct summation of the Leibniz expansion.
/// The alternating sum loses ~√(C(N,q)C(N,j))·ε absolutely; at `N = 32` that
/// is still below 1e−11, beyond it the Jacobi-recurrence route takes over.
const DIRECT_SUM_LIMIT: u32 = 32;

/// Tolerance on structural invariants accepted when *constructing* values
/// from user input (matches the CLI's custom-matrix gate).  Library-built
/// values satisfy the same invariants to ~1e−15.
pub(crate) const CONSTRUCTION_TOL: f64 = 1e-9;

pub(crate) fn require_sector(n_total: u32) -> Result<()> {
    if n_total > MAX_TOTAL_QUANTA {
        return Err(Error::TotalQuantaTooLarge {
            n_total,
            max: MAX_TOTAL_QUANTA,
        });
    }
    Ok(())
}

pub(crate) fn require_mode_index(index: u32, n_total: u32) -> Result<()> {
    if index > n_total {
        return Err(Error::ModeIndexOutOfRange { index, n_total });
    }
    Ok(())
}

/// Physical parameters of the Hamiltonian: coupling `g`, detuning `Ω`,
/// coupling phase `φ` and evolution time `t`, plus the derived precession
/// rate σ = √(Ω² + g²) and mixing angle Θ = atan2(g, Ω).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SU2Params {
    g: f64,
    omega: f64,
    phi: f64,
    t: f64,
}

impl SU2Params {
    pub fn new(g: f64, omega: f64, phi: f64, t: f64) -> Result<Self> {
        for (name, value) in [("g", g), ("omega", omega), ("phi", phi), ("t", t)] {
            if !value.is_finite() {
                return Err(Error::ParameterOutOfRange { name, value });
            }
        }
        Ok(Self { g, omega, phi, t })
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// σ = √(Ω² + g²).
    pub fn sigma(&self) -> f64 {
        hypot(self.omega, self.g)
    }

    /// Θ = atan2(g, Ω); zero when σ = 0.
    pub fn theta(&self) -> f64 {
        if self.sigma() == 0.0 {
            0.0
        } else {
            atan2(self.g, self.omega)
        }
    }

    /// The dimensionless evolution angle σt.
    pub fn sigma_t(&self) -> f64 {
        self.sigma() * self.t
    }
}

/// 2×2 unitary relating mode operators at time t to those at time 0.
///
/// Structure: `v22 = conj(v11)`, `v12 = −conj(v21)`, `|v21|² + |v22|² = 1`
/// — i.e. an element of SU(2).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransferMatrix {
    v11: C64,
    v12: C64,
    v21: C64,
    v22: C64,
}

impl TransferMatrix {
    /// Validates the SU(2) structure to within 1e−9 (the gate applied to
    /// user-supplied matrices; see [`TransferMatrix::structure_defect`]).
    pub fn new(v11: C64, v12: C64, v21: C64, v22: C64) -> Result<Self> {
        let m = Self { v11, v12, v21, v22 };
        let defect = m.structure_defect();
        if !defect.is_finite() || defect > CONSTRUCTION_TOL {
            return Err(Error::InvalidTransferMatrix { defect });
        }
        Ok(m)
    }

    pub(crate) fn raw(v11: C64, v12: C64, v21: C64, v22: C64) -> Self {
        Self { v11, v12, v21, v22 }
    }

    pub fn identity() -> Self {
        Self::raw(
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
        )
    }

    pub fn v11(&self) -> C64 {
        self.v11
    }

    pub fn v12(&self) -> C64 {
        self.v12
    }

    pub fn v21(&self) -> C64 {
        self.v21
    }

    pub fn v22(&self) -> C64 {
        self.v22
    }

    /// Entries in row-major order `(v11, v12, v21, v22)`.
    pub fn entries(&self) -> (C64, C64, C64, C64) {
        (self.v11, self.v12, self.v21, self.v22)
    }

    /// Largest violation of the three structural identities
    /// `v22 = conj(v11)`, `v12 = −conj(v21)`, `|v21|² + |v22|² = 1`.
    pub fn structure_defect(&self) -> f64 {
        let conj_pair = (self.v22 - self.v11.conj()).norm();
        let anti_pair = (self.v12 + self.v21.conj()).norm();
        let row_norm = (self.v21.norm_sqr() + self.v22.norm_sqr() - 1.0).abs();
        conj_pair.max(anti_pair).max(row_norm)
    }

    /// R = |v21|², the population fraction transferred between the modes.
    pub fn reflectivity(&self) -> f64 {
        self.v21.norm_sqr()
    }
}

/// Closed-form transfer matrix of the Hamiltonian; σ = 0 gives the identity
/// (free evolution of decoupled, undetuned modes).
pub fn transfer_matrix(params: &SU2Params) -> TransferMatrix {
    let sigma = params.sigma();
    if sigma == 0.0 {
        return TransferMatrix::identity();
    }
    let (cos_th, sin_th) = (params.omega / sigma, params.g / sigma);
    let st = sigma * params.t;
    let (c, s) = (cos(st), sin(st));
    let v11 = C64::new(c, -cos_th * s);
    // −i e^{±iφ} sinΘ sinσt = sinΘ sinσt (±sin φ − i cos φ)
    let v12 = sin_th * s * C64::new(sin(params.phi), -cos(params.phi));
    let v21 = sin_th * s * C64::new(-sin(params.phi), -cos(params.phi));
    TransferMatrix::raw(v11, v12, v21, v11.conj())
}

/// The fixed preparation unitary `W = (1/√2) [[1, i], [i, 1]]` that turns a
/// Fock input into a vortex initial state (a balanced mode mixer with a
/// quarter-wave phase).
pub fn prep_matrix_vortex() -> TransferMatrix {
    let s = core::f64::consts::FRAC_1_SQRT_2;
    TransferMatrix::raw(
        C64::new(s, 0.0),
        C64::new(0.0, s),
        C64::new(0.0, s),
        C64::new(s, 0.0),
    )
}

/// Matrix product `V·W` — the effective matrix of evolution-after-preparation.
/// SU(2) structure is closed under multiplication, so no revalidation occurs.
pub fn compose(v: &TransferMatrix, w: &TransferMatrix) -> TransferMatrix {
    TransferMatrix::raw(
        v.v11 * w.v11 + v.v12 * w.v21,
        v.v11 * w.v12 + v.v12 * w.v22,
        v.v21 * w.v11 + v.v22 * w.v21,
        v.v21 * w.v12 + v.v22 * w.v22,
    )
}

/// Normalized state of the total-number-`N` sector; `amps[q]` multiplies
/// `|N−q, q⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoModeState {
    n_total: u32,
    amps: Vec<C64>,
}

impl TwoModeState {
    pub fn new(n_total: u32, amps: Vec<C64>) -> Result<Self> {
        require_sector(n_total)?;
        if amps.len() != n_total as usize + 1 {
            return Err(Error::DimensionMismatch {
                expected: n_total as usize + 1,
                got: amps.len(),
            });
        }
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if !norm.is_finite() || (norm - 1.0).abs() > CONSTRUCTION_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { n_total, amps })
    }

    /// The Fock state `|N−j, j⟩`.
    pub fn fock(n_total: u32, j: u32) -> Result<Self> {
        require_sector(n_total)?;
        require_mode_index(j, n_total)?;
        let mut amps = alloc::vec![C64::new(0.0, 0.0); n_total as usize + 1];
        amps[j as usize] = C64::new(1.0, 0.0);
        Ok(Self { n_total, amps })
    }

    pub(crate) fn from_amps_unchecked(n_total: u32, amps: Vec<C64>) -> Self {
        debug_assert_eq!(amps.len(), n_total as usize + 1);
        Self { n_total, amps }
    }

    pub fn n_total(&self) -> u32 {
        self.n_total
    }

    pub fn amps(&self) -> &[C64] {
        &self.amps
    }

    pub fn amp(&self, q: u32) -> C64 {
        self.amps[q as usize]
    }
}

/// Probabilities `p_q = ⟨q| ρ⁽ᵃ⁾ |q⟩` of the mode-a reduced density operator
/// (which is exactly diagonal in the number basis for these states).
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedSpectrum {
    probs: Vec<f64>,
}

impl ReducedSpectrum {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        require_sector(probs.len() as u32 - 1)?;
        for &p in &probs {
            if !p.is_finite() || p < -CONSTRUCTION_TOL {
                return Err(Error::ParameterOutOfRange {
                    name: "probability",
                    value: p,
                });
            }
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > CONSTRUCTION_TOL {
            return Err(Error::NotNormalized { norm: total });
        }
        Ok(Self { probs })
    }

    pub(crate) fn from_probs_unchecked(probs: Vec<f64>) -> Self {
        Self { probs }
    }

    pub fn n_total(&self) -> u32 {
        self.probs.len() as u32 - 1
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Spectrum of the *other* mode: the same vector with `q ↔ N−q`.
    pub fn mode_b(&self) -> ReducedSpectrum {
        let mut rev = self.probs.clone();
        rev.reverse();
        Self { probs: rev }
    }
}

/// `√((N−j)! j! / ((N−q)! q!))`, the sector prefactor of the coefficient
/// formulas.  Bounded by `√C(N, N/2)`, so it never overflows.
fn sector_prefactor(n: u32, j: u32, q: u32) -> f64 {
    if n <= combin::EXACT_LIMIT {
        let num = combin::factorial_big(n - j) * combin::factorial_big(j);
        let den = combin::factorial_big(n - q) * combin::factorial_big(q);
        sqrt(combin::big_ratio_f64(&num, &den))
    } else {
        exp(0.5
            * (combin::ln_factorial(n - j) + combin::ln_factorial(j)
                - combin::ln_factorial(n - q)
                - combin::ln_factorial(q)))
    }
}

/// The signed real amplitude `T(N, j, q, R)` with `|T| = |C⁽q⁾_Nj|`,
/// evaluated through the Jacobi-polynomial form (stable at any sector size).
///
/// In the canonical index region `j ≤ q`, `q + j ≤ N`:
///
/// ```text
/// T = √((N−j)!j!/((N−q)!q!)) · (√R)^{q−j} (√(1−R))^{N−q−j} · P_j^{(q−j, N−q−j)}(1−2R),
/// ```
///
/// and the remaining regions reduce to it through the exact symmetries
/// `T(N,j,q) = (−1)^{q−j} T(N,q,j)` and `T(N,j,q,R) = (−1)^j T(N,j,N−q,1−R)`.
pub(crate) fn signed_prob_amplitude(n: u32, mut j: u32, mut q: u32, mut r: f64) -> f64 {
    let mut sign = 1.0;
    loop {
        if q < j {
            if (j - q) % 2 == 1 {
                sign = -sign;
            }
            core::mem::swap(&mut j, &mut q);
        } else if q + j > n {
            if j % 2 == 1 {
                sign = -sign;
            }
            q = n - q;
            r = 1.0 - r;
        } else {
            break;
        }
    }
    let mu = q - j;
    let nu = n - q - j;
    let powers = powi(sqrt(r), mu) * powi(sqrt(1.0 - r), nu);
    sign * sector_prefactor(n, j, q) * (powers * crate::specfun::jacobi(j, mu, nu, 1.0 - 2.0 * r))
}

/// Shared coefficient engine.
///
/// For linear forms `A(τ) = a₀ + a₁τ` and `B(τ) = b₀ + b₁τ` returns, for
/// each `q = 0..=N`,
///
/// ```text
/// scale · √((N−j)!/((N−q)! q! j!)) · Σ_k C(j,k) ff(N−q,k) ff(q,j−k)
///         · a₀^{N−q−k} a₁^k b₀^{q−j+k} b₁^{j−k},
/// ```
///
/// the exact Leibniz expansion of `(1/j!) ∂_τʲ [A^{N−q} B^q]` times the
/// sector prefactor (`ff` is the falling factorial).  With `(a₀,a₁)` and
/// `(b₀,b₁)` the transfer-matrix rows this yields the Fock coefficients
/// `C⁽q⁾`; with the vortex linear forms `γ±` it yields the modal
/// coefficients `b⁽ⁿ⁾`.  Sectors beyond [`DIRECT_SUM_LIMIT`] dispatch to
/// the cancellation-free Jacobi route instead.
pub(crate) fn sector_coefficients(
    n_total: u32,
    j: u32,
    first: (C64, C64),
    second: (C64, C64),
    scale: f64,
) -> Vec<C64> {
    if n_total <= DIRECT_SUM_LIMIT {
        leibniz_sector(n_total, j, first, second, scale)
    } else {
        jacobi_sector(n_total, j, first, second, scale)
    }
}

/// Direct summation of the Leibniz expansion with exact big-integer
/// combinatorics; one floating rounding per combinatorial factor.
pub(crate) fn leibniz_sector(
    n_total: u32,
    j: u32,
    first: (C64, C64),
    second: (C64, C64),
    scale: f64,
) -> Vec<C64> {
    let n = n_total;
    let mut out = Vec::with_capacity(n as usize + 1);
    for q in 0..=n {
        let k_lo = j.saturating_sub(q);
        let k_hi = j.min(n - q);
        let mut acc = C64::new(0.0, 0.0);
        for k in k_lo..=k_hi {
            let comb = combin::binomial_big(j, k)
                * combin::falling_big(n - q, k)
                * combin::falling_big(q, j - k);
            acc += combin::big_to_f64(&comb)
                * cpowi(first.0, n - q - k)
                * cpowi(first.1, k)
                * cpowi(second.0, q + k - j)
                * cpowi(second.1, j - k);
        }
        let num = combin::factorial_big(n - j);
        let den =
            combin::factorial_big(n - q) * combin::factorial_big(q) * combin::factorial_big(j);
        out.push(acc * sqrt(combin::big_ratio_f64(&num, &den)) * scale);
    }
    out
}

/// Large-sector evaluation: factor the linear forms as `λ·S` with `S` in
/// SU(2) (λ² is the determinant of the form matrix, so the reduction is
/// generic — λ = 1 for a transfer matrix), then assemble each coefficient
/// as `scale·λᴺ · e^{i(arg s₁₁ (N−q−j) + arg s₂₁ (q−j))} · T(N,j,q,|s₂₁|²)`
/// with the Jacobi-route amplitude `T` of [`signed_prob_amplitude`].
pub(crate) fn jacobi_sector(
    n_total: u32,
    j: u32,
    first: (C64, C64),
    second: (C64, C64),
    scale: f64,
) -> Vec<C64> {
    let n = n_total;
    let det = first.0 * second.1 - first.1 * second.0;
    let lambda = det.sqrt();
    // branch choice is immaterial: (−λ)^N · C(−S) = λ^N · C(S)
    let s11 = first.0 / lambda;
    let s21 = second.0 / lambda;
    let r = s21.norm_sqr().clamp(0.0, 1.0);
    let alpha = if s11.norm() > 0.0 { s11.arg() } else { 0.0 };
    let delta = if s21.norm() > 0.0 { s21.arg() } else { 0.0 };
    let global = cpowi(lambda, n) * scale;
    let mut out = Vec::with_capacity(n as usize + 1);
    for q in 0..=n {
        let t = signed_prob_amplitude(n, j, q, r);
        let phase = alpha * ((i64::from(n) - i64::from(q) - i64::from(j)) as f64)
            + delta * ((i64::from(q) - i64::from(j)) as f64);
        out.push(global * C64::from_polar(t, phase));
    }
    out
}

/// Evolution amplitudes `C⁽q⁾_Nj` of the Fock state `|N−j, j⟩` under the
/// matrix `m` — the column-`j` action of the induced sector unitary.
pub fn fock_coefficients(n_total: u32, j: u32, m: &TransferMatrix) -> Result<TwoModeState> {
    require_sector(n_total)?;
    require_mode_index(j, n_total)?;
    let amps = sector_coefficients(n_total, j, (m.v11, m.v12), (m.v21, m.v22), 1.0);
    Ok(TwoModeState::from_amps_unchecked(n_total, amps))
}

/// `|C⁽q⁾_Nj|²` as a function of `R = |v21|²` alone.
///
/// Up to the direct-sum limit this is the phase-free closed form
///
/// ```text
/// |C⁽q⁾| = √((N−j)! j! (N−q)! q!) · | Σ_k (−1)^k (√R)^{q−j+2k} (√(1−R))^{N−q+j−2k}
///           / (k! (j−k)! (N−q−k)! (q−j+k)!) |,
/// ```
///
/// restructured so that every exponent is a non-negative integer (no
/// `(R/(1−R))` ratios) and every coefficient is an exact integer ratio —
/// a summation genuinely independent of the amplitude engine.  Larger
/// sectors square the Jacobi-route amplitude instead; there the
/// independent cross-check is the matrix-exponential oracle.  The
/// endpoints short-circuit to the exact limits `δ_{q,j}` at `R = 0` and
/// `δ_{q,N−j}` at `R = 1`.
pub fn coeff_prob(n_total: u32, j: u32, q: u32, r: f64) -> Result<f64> {
    require_sector(n_total)?;
    require_mode_index(j, n_total)?;
    require_mode_index(q, n_total)?;
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::ParameterOutOfRange {
            name: "reflectivity",
            value: r,
        });
    }
    let n = n_total;
    if r == 0.0 {
        return Ok(if q == j { 1.0 } else { 0.0 });
    }
    if r == 1.0 {
        return Ok(if q == n - j { 1.0 } else { 0.0 });
    }
    if n > DIRECT_SUM_LIMIT {
        let t = signed_prob_amplitude(n, j, q, r);
        return Ok(t * t);
    }
    let sr = sqrt(r);
    let cr = sqrt(1.0 - r);
    let k_lo = j.saturating_sub(q);
    let k_hi = j.min(n - q);
    let a = combin::factorial_big(n - j)
        * combin::factorial_big(j)
        * combin::factorial_big(n - q)
        * combin::factorial_big(q);
    let mut sum = 0.0f64;
    for k in k_lo..=k_hi {
        let d = combin::factorial_big(k)
            * combin::factorial_big(j - k)
            * combin::factorial_big(n - q - k)
            * combin::factorial_big(q + k - j);
        let c = sqrt(combin::big_ratio_f64(&a, &(&d * &d)));
        let term = c * powi(sr, q + 2 * k - j) * powi(cr, n - q + j - 2 * k);
        sum += if k % 2 == 0 { term } else { -term };
    }
    Ok(sum * sum)
}

/// Full reduced spectrum at reflectivity `r`, assembled from [`coeff_prob`].
pub fn prob_spectrum(n_total: u32, j: u32, r: f64) -> Result<ReducedSpectrum> {
    require_sector(n_total)?;
    require_mode_index(j, n_total)?;
    let mut probs = Vec::with_capacity(n_total as usize + 1);
    for q in 0..=n_total {
        probs.push(coeff_prob(n_total, j, q, r)?);
    }
    Ok(ReducedSpectrum::from_probs_unchecked(probs))
}

/// The `(N+1) × (N+1)` unitary representation of `m` on the sector: column
/// `j` holds the amplitudes of the evolved `|N−j, j⟩`.
pub fn induced_unitary(n_total: u32, m: &TransferMatrix) -> Result<CMatrix> {
    require_sector(n_total)?;
    let dim = n_total as usize + 1;
    let mut cols = Vec::with_capacity(dim);
    for j in 0..=n_total {
        cols.push(fock_coefficients(n_total, j, m)?.amps().to_vec());
    }
    CMatrix::from_columns(&cols)
}

/// Action of the matrix on coherent-state amplitudes `(α, β)`.  Coherent
/// inputs stay product coherent states — no entanglement is generated — and
/// `|α|² + |β|²` is conserved.
pub fn coherent_evolution(alpha: C64, beta: C64, m: &TransferMatrix) -> (C64, C64) {
    (
        m.v11 * alpha + m.v12 * beta,
        m.v21 * alpha + m.v22 * beta,
    )
}

/// Partial trace over mode b: `p_q = |amps[q]|²`.
pub fn reduced_spectrum(state: &TwoModeState) -> ReducedSpectrum {
    ReducedSpectrum::from_probs_unchecked(state.amps.iter().map(|a| a.norm_sqr()).collect())
}

/// von Neumann entanglement entropy in bits, `S = −Σ p log₂ p` with
/// `0·log 0 := 0`.  Bounded by `log₂(N+1)`; equal for both modes.
pub fn entropy(spectrum: &ReducedSpectrum) -> f64 {
    // + 0.0 turns the −0.0 of a pure spectrum into +0.0.
    -spectrum
        .probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * log2(p))
        .sum::<f64>()
        + 0.0
}

/// The same entropy in nats, `−Σ p ln p`.
pub fn entropy_nats(spectrum: &ReducedSpectrum) -> f64 {
    -spectrum
        .probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * ln(p))
        .sum::<f64>()
        + 0.0
}

/// Closed form for `|ṽ21|²` of the composed matrix `Ṽ = V·W`:
///
/// ```text
/// |ṽ21|² = 1/2 − sinΘ sinσt (cosφ cosσt − sinφ cosΘ sinσt)
/// ```
///
/// Constant 1/2 when Θ = 0, when sinσt = 0, and when Θ = φ = π/2.
pub fn tilde_v21_sq(theta: f64, phi: f64, sigma_t: f64) -> f64 {
    let v = 0.5
        - sin(theta)
            * sin(sigma_t)
            * (cos(phi) * cos(sigma_t) - sin(phi) * cos(theta) * sin(sigma_t));
    v.clamp(0.0, 1.0)
}
