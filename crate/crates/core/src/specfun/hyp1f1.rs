//! Kummer's confluent hypergeometric function `1F1(n, alpha; z)`.

use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_TERMS: usize = 20_000;
/// Largest tolerated ratio of the biggest series term to the sum; beyond it
/// the value is recomputed through Kummer's transformation or by analytic
/// continuation.
const MAX_CANCELLATION: f64 = 1e3;

pub fn hyp1f1(n: f64, alpha: f64, z: f64) -> Result<f64> {
    hyp1f1_with_derivative(n, alpha, z).map(|(v, _)| v)
}

/// `1F1(n, alpha; z)` and its `z`-derivative.
pub fn hyp1f1_with_derivative(n: f64, alpha: f64, z: f64) -> Result<(f64, f64)> {
    let (v, d) = hyp1f1_complex(Complex64::new(n, 0.0), alpha, Complex64::new(z, 0.0))?;
    Ok((v.re, d.re))
}

/// Complex-parameter, complex-argument `1F1` with real `alpha`, with its
/// `z`-derivative.
///
/// A non-positive integer `alpha` is a pole unless `n` is a non-positive
/// integer with `n >= alpha`, in which case the series terminates first.
pub fn hyp1f1_complex(n: Complex64, alpha: f64, z: Complex64) -> Result<(Complex64, Complex64)> {
    if !(n.re.is_finite()
        && n.im.is_finite()
        && alpha.is_finite()
        && z.re.is_finite()
        && z.im.is_finite())
    {
        return Err(Error::Domain {
            what: "hyp1f1",
            detail: "non-finite input".into(),
        });
    }
    if is_nonpositive_integer(alpha)
        && !(n.im == 0.0 && is_nonpositive_integer(n.re) && n.re >= alpha)
    {
        return Err(Error::Pole(alpha));
    }
    let direct = series(n, alpha, z)?;
    let mut out = (direct.value, direct.deriv);
    if direct.cancellation > MAX_CANCELLATION {
        let mut resolved = false;
        if z.re < 0.0 {
            // M(n, a; z) = e^z M(a - n, a; -z)
            let t = series(Complex64::new(alpha, 0.0) - n, alpha, -z)?;
            if t.cancellation <= MAX_CANCELLATION {
                let e = z.exp();
                out = (e * t.value, e * (t.value - t.deriv));
                resolved = true;
            }
        }
        if !resolved {
            out = continue_along_ray(n, alpha, z)?;
        }
    }
    if out.0.is_finite() && out.1.is_finite() {
        Ok(out)
    } else {
        Err(Error::NumericRange("hyp1f1"))
    }
}

/// Radius of the well-conditioned start disc and the largest Taylor step.
const RAY_START: f64 = 1.0;
const MAX_STEP: f64 = 1.0;

/// Evaluates `M` at `z` by solving Kummer's equation
/// `z w'' + (alpha - z) w' - n w = 0` along the ray from the origin:
/// the power series supplies `(w, w')` at `|z| = RAY_START`, then local
/// Taylor expansions carry it outwards. Each step is at most half the
/// distance to the singular point at the origin and at most `MAX_STEP`,
/// which bounds the cancellation of every local sum by about `e^MAX_STEP`.
fn continue_along_ray(n: Complex64, alpha: f64, z: Complex64) -> Result<(Complex64, Complex64)> {
    let r_end = z.norm();
    let dir = z / r_end;
    let mut r = RAY_START.min(r_end);
    let start = series(n, alpha, dir * r)?;
    let (mut w, mut dw) = (start.value, start.deriv);
    while r < r_end {
        let step = (0.5 * r).min(MAX_STEP).min(r_end - r);
        let z0 = dir * r;
        let t = dir * step;
        (w, dw) = taylor_step(n, alpha, z0, w, dw, t)?;
        r = if r_end - r <= step { r_end } else { r + step };
    }
    Ok((w, dw))
}

/// `(w, w')` at `z0 + t` from `(w, w')` at `z0`, for `|t| <= |z0| / 2`.
fn taylor_step(
    n: Complex64,
    alpha: f64,
    z0: Complex64,
    w: Complex64,
    dw: Complex64,
    t: Complex64,
) -> Result<(Complex64, Complex64)> {
    // (k+2)(k+1) z0 c_{k+2} = (k + n) c_k - (k+1)(k + alpha - z0) c_{k+1}
    let (mut c0, mut c1) = (w, dw);
    let mut tp = t; // t^(k+1)
    let mut value = c0 + c1 * t;
    let mut deriv = c1;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let c2 = ((n + kf) * c0 - (kf + 1.0) * (kf + alpha - z0) * c1)
            / (z0 * ((kf + 1.0) * (kf + 2.0)));
        let dterm = c2 * (kf + 2.0) * tp;
        tp *= t;
        let term = c2 * tp;
        value += term;
        deriv += dterm;
        if k > 2
            && term.norm() <= 0.1 * f64::EPSILON * value.norm()
            && dterm.norm() <= 0.1 * f64::EPSILON * deriv.norm()
        {
            return Ok((value, deriv));
        }
        c0 = c1;
        c1 = c2;
    }
    Err(Error::NumericRange("hyp1f1 continuation did not converge"))
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

struct SeriesSum {
    value: Complex64,
    deriv: Complex64,
    /// Largest term magnitude over the magnitude of the sum.
    cancellation: f64,
}

fn series(n: Complex64, alpha: f64, z: Complex64) -> Result<SeriesSum> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut dsum = Complex64::new(0.0, 0.0);
    let mut biggest = 1.0f64;
    let min_terms = (n.norm() + z.norm()) as usize + 2;
    let done = |sum: Complex64, dsum: Complex64, biggest: f64| SeriesSum {
        value: sum,
        deriv: dsum,
        cancellation: biggest / sum.norm(),
    };
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let num = n + kf;
        if num == Complex64::new(0.0, 0.0) {
            return Ok(done(sum, dsum, biggest));
        }
        let ratio = num / ((alpha + kf) * (kf + 1.0));
        // d/dz of c_{k+1} z^{k+1} is (k+1) c_{k+1} z^k = (k+1) ratio * term
        let dterm = ratio * term * (kf + 1.0);
        term *= ratio * z;
        sum += term;
        dsum += dterm;
        biggest = biggest.max(term.norm());
        if k > min_terms
            && term.norm() <= f64::EPSILON * 0.1 * sum.norm()
            && dterm.norm() <= f64::EPSILON * 0.1 * dsum.norm()
        {
            return Ok(done(sum, dsum, biggest));
        }
    }
    Err(Error::NumericRange("hyp1f1 series did not converge"))
}
