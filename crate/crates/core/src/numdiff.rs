//! Central differences with one level of Richardson extrapolation.
//!
//! Both stencils combine step `h` and `2h`, which cancels the `h^2` error term
//! and leaves an `O(h^4)` truncation error.

/// First derivative from samples at `u ± h` and `u ± 2h`.
pub fn richardson_d1(f_m2: f64, f_m1: f64, f_p1: f64, f_p2: f64, h: f64) -> f64 {
    let d_h = (f_p1 - f_m1) / (2.0 * h);
    let d_2h = (f_p2 - f_m2) / (4.0 * h);
    (4.0 * d_h - d_2h) / 3.0
}

/// Second derivative from samples at `u`, `u ± h` and `u ± 2h`.
pub fn richardson_d2(f_m2: f64, f_m1: f64, f_0: f64, f_p1: f64, f_p2: f64, h: f64) -> f64 {
    let d_h = (f_p1 - 2.0 * f_0 + f_m1) / (h * h);
    let d_2h = (f_p2 - 2.0 * f_0 + f_m2) / (4.0 * h * h);
    (4.0 * d_h - d_2h) / 3.0
}

/// Derivatives of a scalar function at `u` via [`richardson_d1`] and [`richardson_d2`].
pub fn derivatives<E>(mut f: impl FnMut(f64) -> Result<f64, E>, u: f64, h: f64) -> Result<(f64, f64), E> {
    let s = [f(u - 2.0 * h)?, f(u - h)?, f(u)?, f(u + h)?, f(u + 2.0 * h)?];
    Ok((
        richardson_d1(s[0], s[1], s[3], s[4], h),
        richardson_d2(s[0], s[1], s[2], s[3], s[4], h),
    ))
}
