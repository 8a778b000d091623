//! Thin floating-point shims so the crate builds without `std`.
//!
//! Everything routes through `libm`; call sites import the bare names
//! (`sin`, `sqrt`, …) so formulas read like ordinary math.

pub(crate) use libm::{atan2, cos, exp, exp2, hypot, lgamma, log as ln, log2, sin, sqrt};

/// Integer power of a complex number by binary exponentiation.
pub(crate) fn cpowi(base: num_complex::Complex64, exp: u32) -> num_complex::Complex64 {
    let mut acc = num_complex::Complex64::new(1.0, 0.0);
    let mut b = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= b;
        }
        b *= b;
        e >>= 1;
    }
    acc
}

/// Integer power by binary exponentiation.
pub(crate) fn powi(base: f64, exp: u32) -> f64 {
    let mut acc = 1.0;
    let mut b = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= b;
        }
        b *= b;
        e >>= 1;
    }
    acc
}
