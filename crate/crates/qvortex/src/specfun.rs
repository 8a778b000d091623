//! Orthogonal polynomials and transverse optical modes.
//!
//! Polynomial values come from the standard three-term recurrences rather
//! than coefficient expansions — stable over the whole range used here
//! (degrees up to 200).  The mode functions are
//!
//! ```text
//! Φ_n(x, w)      = (√2 / (√π 2ⁿ w n!))^{1/2} H_n(√2 x / w) e^{−x²/w²}
//! u^{HG}_{nm}    = Φ_n(x, w) Φ_m(y, w)
//! u^{LG}_{mn}    = √(2/(πw²)) (−1)^p p!/√(m!n!) e^{−iθ(m−n)} (r√2/w)^{|m−n|}
//!                  · L_p^{|m−n|}(2r²/w²) e^{−r²/w²},    p = min(m, n)
//! ```
//!
//! with θ = atan2(y, x) (taken as 0 at the origin).  At waist `w = √2` the
//! Hermite–Gauss mode coincides with the harmonic-oscillator eigenfunction
//! `⟨x|n⟩`, which is what ties these modes to the two-mode Fock sectors.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64 as C64;

use crate::combin;
use crate::fmath::{atan2, exp, ln, powi, sqrt};

/// Physicists' Hermite polynomial `H_n(x)`.
///
/// `H₀ = 1`, `H₁ = 2x`, `H_{k+1} = 2x H_k − 2k H_{k−1}`.
pub fn hermite(n: u32, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Associated Laguerre polynomial `L_p^α(x)` for integer `α ≥ 0`.
///
/// `(k+1) L_{k+1}^α = (2k + 1 + α − x) L_k^α − (k + α) L_{k−1}^α`.
pub fn laguerre(p: u32, alpha: u32, x: f64) -> f64 {
    let a = f64::from(alpha);
    if p == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + a - x;
    for k in 1..p {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0 + a - x) * cur - (kf + a) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalized binomial coefficient `C(a, k)` for integer `a` of either sign.
fn genbinom_big(a: i64, k: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..i64::from(k) {
        acc *= a - i;
    }
    acc / BigInt::from(combin::factorial_big(k))
}

/// Exact series value `P_n^{(α,β)}(0) = 2^{−n} Σ_s (−1)^s C(n+α, n−s) C(n+β, s)`,
/// total in the (possibly negative) integer parameters.
fn jacobi_zero_series(n: u32, alpha: i32, beta: i32) -> f64 {
    let mut sum = BigInt::from(0);
    for s in 0..=n {
        let term = genbinom_big(i64::from(alpha) + i64::from(n), n - s)
            * genbinom_big(i64::from(beta) + i64::from(n), s);
        if s % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (sign, mag) = match sum.sign() {
        num_bigint::Sign::Minus => (-1.0, (-sum).to_biguint().unwrap()),
        _ => (1.0, sum.to_biguint().unwrap()),
    };
    sign * combin::big_to_f64(&mag) / powi(2.0, n)
}

/// Jacobi polynomial `P_n^{(α,β)}(x)` for non-negative integer parameters,
/// by the three-term recurrence in the degree
///
/// ```text
/// c₁ P_k = (c₂ + c₃x) P_{k−1} − c₄ P_{k−2},
/// c₁ = 2k(k+α+β)(2k+α+β−2),   c₂ = (2k+α+β−1)(α²−β²),
/// c₃ = (2k+α+β−2)(2k+α+β−1)(2k+α+β),   c₄ = 2(k+α−1)(k+β−1)(2k+α+β).
/// ```
///
/// For α, β ≥ 0 the leading coefficient never vanishes and the recurrence is
/// numerically stable on x ∈ [−1, 1] — this is the evaluation kernel behind
/// the large-sector evolution coefficients, where the equivalent explicit
/// sums cancel catastrophically.
pub fn jacobi(n: u32, alpha: u32, beta: u32, x: f64) -> f64 {
    let (a, b) = (f64::from(alpha), f64::from(beta));
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = (a + 1.0) + (a + b + 2.0) * 0.5 * (x - 1.0);
    for k in 2..=n {
        let kf = f64::from(k);
        let t = 2.0 * kf + a + b;
        let c1 = 2.0 * kf * (kf + a + b) * (t - 2.0);
        let c2 = (t - 1.0) * (a * a - b * b);
        let c3 = (t - 2.0) * (t - 1.0) * t;
        let c4 = 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * t;
        let next = ((c2 + c3 * x) * cur - c4 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi polynomial at the origin, `P_n^{(α,β)}(0)`, for integer parameters
/// of either sign.
///
/// Uses the three-term recurrence specialized to argument 0.  For negative
/// integer parameters the leading recurrence coefficient `2k(k+α+β)(2k+α+β−2)`
/// can vanish; those degenerate cases fall back to the exact binomial series.
pub fn jacobi_at_zero(n: u32, alpha: i32, beta: i32) -> f64 {
    let (a, b) = (f64::from(alpha), f64::from(beta));
    if n == 0 {
        return 1.0;
    }
    if n == 1 {
        return 0.5 * (a - b);
    }
    let s = i64::from(alpha) + i64::from(beta);
    for k in 2..=i64::from(n) {
        if k + s == 0 || 2 * k + s - 2 == 0 {
            return jacobi_zero_series(n, alpha, beta);
        }
    }
    let sf = a + b;
    let mut prev = 1.0;
    let mut cur = 0.5 * (a - b);
    for k in 2..=n {
        let kf = f64::from(k);
        let c1 = 2.0 * kf * (kf + sf) * (2.0 * kf + sf - 2.0);
        let c2 = (2.0 * kf + sf - 1.0) * (a * a - b * b);
        let c3 = -2.0 * (kf + a - 1.0) * (kf + b - 1.0) * (2.0 * kf + sf);
        let next = (c2 * cur + c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

/// Harmonic-oscillator eigenfunctions `⟨z|k⟩` for `k = 0..=n_max`, evaluated
/// by the unit-normalized recurrence (no overflow for any degree).
pub(crate) fn qho_eigenfunctions(n_max: u32, z: f64) -> Vec<f64> {
    let mut vals = Vec::with_capacity(n_max as usize + 1);
    let phi0 = exp(-0.5 * z * z) / sqrt(sqrt(PI));
    vals.push(phi0);
    if n_max == 0 {
        return vals;
    }
    vals.push(sqrt(2.0) * z * phi0);
    for k in 1..n_max {
        let kf = f64::from(k);
        let next = sqrt(2.0 / (kf + 1.0)) * z * vals[k as usize]
            - sqrt(kf / (kf + 1.0)) * vals[k as usize - 1];
        vals.push(next);
    }
    vals
}

/// Hermite–Gauss mode `Φ_n(x, w)`.
///
/// Evaluated through the unit-normalized oscillator recurrence, which keeps
/// every intermediate bounded; the textbook prefactor `(2ⁿ n!)^{−1/2}` would
/// overflow beyond `n ≈ 150` (and `H_n` itself overflows well before that at
/// large `|x|`).
pub fn hg_mode(n: u32, x: f64, w: f64) -> f64 {
    assert!(w > 0.0 && w.is_finite(), "waist must be positive and finite");
    let u = sqrt(2.0) * x / w;
    let phi = qho_eigenfunctions(n, u);
    sqrt(sqrt(2.0) / w) * phi[n as usize]
}

/// `p! / √(m! n!)` with `p = min(m, n)`, exact for small indices.
fn lg_norm_ratio(m: u32, n: u32) -> f64 {
    let p = m.min(n);
    if m.max(n) <= combin::EXACT_LIMIT {
        let pf = combin::factorial_big(p);
        let num = &pf * &pf;
        let den = combin::factorial_big(m) * combin::factorial_big(n);
        sqrt(combin::big_ratio_f64(&num, &den))
    } else {
        exp(combin::ln_factorial(p) - 0.5 * (combin::ln_factorial(m) + combin::ln_factorial(n)))
    }
}

/// Laguerre–Gauss mode `u^{LG}_{mn}(x, y, w)`, carrying the azimuthal phase
/// `e^{−iθ(m−n)}`.
pub fn lg_mode(m: u32, n: u32, x: f64, y: f64, w: f64) -> C64 {
    assert!(w > 0.0 && w.is_finite(), "waist must be positive and finite");
    let r2 = x * x + y * y;
    let r = sqrt(r2);
    let theta = atan2(y, x); // 0 at the origin
    let p = m.min(n);
    let l = m.abs_diff(n);
    let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
    let radial = sqrt(2.0 / (PI * w * w))
        * sign
        * lg_norm_ratio(m, n)
        * powi(r * sqrt(2.0) / w, l)
        * laguerre(p, l, 2.0 * r2 / (w * w))
        * exp(-r2 / (w * w));
    let az = -(f64::from(m) - f64::from(n)) * theta;
    radial * C64::from_polar(1.0, az)
}

/// Coefficients `b(n, m, k)` of the Laguerre–Gauss mode `u^{LG}_{n,m}` over
/// the Hermite–Gauss family:
///
/// ```text
/// u^{LG}_{n,m} = Σ_k iᵏ b(n, m, k) u^{HG}_{m+n−k, k}
/// b(n, m, k)   = √((n+m−k)! k! / (2^{n+m} n! m!)) · (1/k!) dᵏ/dtᵏ[(1−t)ⁿ(1+t)ᵐ]|_{t=0}
/// ```
///
/// The derivative term is the exact binomial convolution
/// `Σ_a (−1)^a C(n, a) C(m, k−a)`.  The rows of `b` form a unitary change of
/// basis: `Σ_k b(n, m, k)² = 1`.
pub fn lg_from_hg_coeffs(n: u32, m: u32) -> Vec<f64> {
    let total = n + m;
    let mut out = Vec::with_capacity(total as usize + 1);
    for k in 0..=total {
        // convolution coefficient of t^k in (1−t)^n (1+t)^m, exact
        let mut conv = BigInt::from(0);
        let a_min = k.saturating_sub(m);
        let a_max = k.min(n);
        for a in a_min..=a_max {
            let term = BigInt::from(combin::binomial_big(n, a))
                * BigInt::from(combin::binomial_big(m, k - a));
            if a % 2 == 0 {
                conv += term;
            } else {
                conv -= term;
            }
        }
        let (sign, mag) = match conv.sign() {
            num_bigint::Sign::Minus => (-1.0, (-conv).to_biguint().unwrap()),
            _ => (1.0, conv.to_biguint().unwrap()),
        };
        let conv_f = sign * combin::big_to_f64(&mag);
        let norm = if total <= combin::EXACT_LIMIT {
            let num = combin::factorial_big(total - k) * combin::factorial_big(k);
            let den = (BigUint::from(1u32) << total)
                * combin::factorial_big(n)
                * combin::factorial_big(m);
            sqrt(combin::big_ratio_f64(&num, &den))
        } else {
            exp(0.5
                * (combin::ln_factorial(total - k) + combin::ln_factorial(k)
                    - f64::from(total) * ln(2.0)
                    - combin::ln_factorial(n)
                    - combin::ln_factorial(m)))
        };
        out.push(norm * conv_f);
    }
    out
}

/// A Hermite–Gauss mode with fixed index and waist.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HGModeParams {
    n: u32,
    w: f64,
}

impl HGModeParams {
    pub fn new(n: u32, w: f64) -> Self {
        assert!(w > 0.0 && w.is_finite(), "waist must be positive and finite");
        Self { n, w }
    }

    pub fn index(&self) -> u32 {
        self.n
    }

    pub fn waist(&self) -> f64 {
        self.w
    }

    pub fn eval(&self, x: f64) -> f64 {
        hg_mode(self.n, x, self.w)
    }
}

/// A Laguerre–Gauss mode with fixed indices and waist.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LGModeParams {
    m: u32,
    n: u32,
    w: f64,
}

impl LGModeParams {
    pub fn new(m: u32, n: u32, w: f64) -> Self {
        assert!(w > 0.0 && w.is_finite(), "waist must be positive and finite");
        Self { m, n, w }
    }

    pub fn indices(&self) -> (u32, u32) {
        (self.m, self.n)
    }

    /// Azimuthal index `m − n` (the coefficient of `−θ` in the phase).
    pub fn azimuthal_index(&self) -> i64 {
        i64::from(self.m) - i64::from(self.n)
    }

    /// Radial index `p = min(m, n)`.
    pub fn radial_index(&self) -> u32 {
        self.m.min(self.n)
    }

    pub fn eval(&self, x: f64, y: f64) -> C64 {
        lg_mode(self.m, self.n, x, y, self.w)
    }
}
