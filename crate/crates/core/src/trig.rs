//! Sine and cosine that are exact on multiples of a quarter turn.
//!
//! A 2π rotation must produce exactly `-I` and a Wigner angle of exactly 2π
//! must produce a phase of exactly one; libm's `sin(π)` is 1.2e-16.

use core::f64::consts::FRAC_PI_2;
use num_complex::Complex64;

/// Returns `(sin x, cos x)`.
pub(crate) fn sin_cos(x: f64) -> (f64, f64) {
    let q = x / FRAC_PI_2;
    if q == q.round() && q.abs() < 9.0e15 {
        match (q as i64).rem_euclid(4) {
            0 => (0.0, 1.0),
            1 => (1.0, 0.0),
            2 => (0.0, -1.0),
            _ => (-1.0, 0.0),
        }
    } else {
        (x.sin(), x.cos())
    }
}

/// `e^{ix}`.
pub(crate) fn cis(x: f64) -> Complex64 {
    let (s, c) = sin_cos(x);
    Complex64::new(c, s)
}
