//! Factorial-ratio combinatorics shared by the coefficient evaluators.
//!
//! Two regimes, switched on the total quanta `N`:
//!
//! * `N ≤ EXACT_LIMIT` — factorials, falling factorials and binomials are
//!   carried exactly as arbitrary-precision integers and only the final
//!   ratio is rounded to `f64` (a single rounding per coefficient);
//! * `N > EXACT_LIMIT` — everything moves to the log-Γ domain.  The log-Γ
//!   differences involved stay below ~10³, so the relative error of the
//!   exponentiated ratios is ≤ 1e−13.

use num_bigint::BigUint;

use crate::fmath::{exp2, lgamma};

/// Largest total quanta for which exact big-integer combinatorics are used.
pub(crate) const EXACT_LIMIT: u32 = 64;

pub(crate) fn factorial_big(n: u32) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// Falling factorial `n · (n−1) ⋯ (n−k+1) = n!/(n−k)!`; requires `k ≤ n`.
pub(crate) fn falling_big(n: u32, k: u32) -> BigUint {
    debug_assert!(k <= n);
    let mut acc = BigUint::from(1u32);
    for i in (u64::from(n - k) + 1)..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// Exact binomial coefficient C(n, k); zero when `k > n`.
pub(crate) fn binomial_big(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    // Falling product over k! divides exactly.
    falling_big(n, k) / factorial_big(k)
}

pub(crate) fn big_to_f64(x: &BigUint) -> f64 {
    // `TryFrom`-style conversion: BigUint -> f64 saturates to infinity far
    // beyond the ranges reached under EXACT_LIMIT (≤ (64!)³ ≈ 2e267).
    let mut acc = 0.0f64;
    for digit in x.to_u64_digits().iter().rev() {
        acc = acc * 1.8446744073709552e19 + (*digit as f64);
    }
    acc
}

/// Ratio of two exact big integers, rounded once at the end.
///
/// Works even when numerator or denominator individually exceed `f64::MAX`
/// (factorial products do so well inside `EXACT_LIMIT`): the numerator is
/// shifted so the integer quotient keeps ~96 significant bits, and the shift
/// is undone in floating point.
pub(crate) fn big_ratio_f64(num: &BigUint, den: &BigUint) -> f64 {
    debug_assert!(*den != BigUint::from(0u32), "denominator must be nonzero");
    if *num == BigUint::from(0u32) {
        return 0.0;
    }
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift = (db - nb + 96).max(0) as u64;
    let q = (num << shift) / den;
    big_to_f64(&q) * exp2(-(shift as f64))
}

pub(crate) fn ln_factorial(n: u32) -> f64 {
    lgamma(f64::from(n) + 1.0)
}
