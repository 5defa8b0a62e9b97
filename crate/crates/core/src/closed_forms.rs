//! Analytic solutions of the WDW equation in the special cases where it
//! reduces to a Bessel or confluent hypergeometric equation.
//!
//! Each evaluator returns `(u, du/dA)` with the derivative obtained by the
//! chain rule, so the output can seed the numerical integrator directly.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::sampled::{Grid, SampledFunction};
use crate::specfun::{bessel_with_derivative, hyp1f1_complex, Bessel, BesselKind};

/// Closest approach to the turning point `m^2 A^2 = kappa`.
pub const TURNING_POINT_MARGIN: f64 = 1e-6;
const ZERO_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosedFormKind {
    /// Vacuum-energy dominated, `q = 1`, `m^2 > 0`: `J_{+-1/3}`.
    InflationMPos,
    /// Vacuum-energy dominated, `q = 1`, `m^2 < 0`: `I_{1/3}`, `K_{1/3}`.
    InflationMNeg,
    /// `m^2 = 0`, closed universe: `I_nu`, `K_nu` of `6 A^2`.
    InflationMZeroClosed,
    /// `m^2 = 0`, open universe: `J_nu`, `Y_nu` of `6 A^2`.
    InflationMZeroOpen,
    /// `m^2 = 0`, flat: the potential vanishes and `u = c1 + c2 A^(1+q)`.
    InflationMZeroFlat,
    /// Flat dust: Kummer functions.
    DustFlat,
    /// Flat stiff fluid: Bessel functions of `A^3`.
    StiffFlat,
}

impl ClosedFormKind {
    pub const ALL: [ClosedFormKind; 7] = [
        Self::InflationMPos,
        Self::InflationMNeg,
        Self::InflationMZeroClosed,
        Self::InflationMZeroOpen,
        Self::InflationMZeroFlat,
        Self::DustFlat,
        Self::StiffFlat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::InflationMPos => "inflation-mpos",
            Self::InflationMNeg => "inflation-mneg",
            Self::InflationMZeroClosed => "inflation-mzero-closed",
            Self::InflationMZeroOpen => "inflation-mzero-open",
            Self::InflationMZeroFlat => "inflation-mzero-flat",
            Self::DustFlat => "dust-flat",
            Self::StiffFlat => "stiff-flat",
        }
    }
}

impl std::str::FromStr for ClosedFormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Self::ALL.iter().map(|k| k.name()).collect();
                Error::Config(format!(
                    "unknown closed-form case {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

impl std::fmt::Display for ClosedFormKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A closed-form solution: which case, for which model, with which
/// superposition coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormCase {
    pub kind: ClosedFormKind,
    pub params: ModelParams,
    pub coeffs: (f64, f64),
}

fn requirement(ok: bool, kind: ClosedFormKind, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Config(format!("{kind} requires {what}")))
    }
}

impl ClosedFormCase {
    pub fn new(kind: ClosedFormKind, params: ModelParams, coeffs: (f64, f64)) -> Result<Self> {
        params.validate()?;
        use ClosedFormKind::*;
        let msq = params.msq();
        let inflation = params.gamma == -1.0;
        match kind {
            InflationMPos => requirement(
                inflation && params.q == 1.0 && msq > ZERO_TOL,
                kind,
                "gamma = -1, q = 1, m^2 > 0",
            )?,
            InflationMNeg => requirement(
                inflation && params.q == 1.0 && msq < -ZERO_TOL,
                kind,
                "gamma = -1, q = 1, m^2 < 0",
            )?,
            InflationMZeroClosed | InflationMZeroOpen | InflationMZeroFlat => {
                let k = match kind {
                    InflationMZeroClosed => 1,
                    InflationMZeroOpen => -1,
                    _ => 0,
                };
                requirement(
                    inflation && msq.abs() <= ZERO_TOL && params.kappa == k,
                    kind,
                    &format!("gamma = -1, m^2 = 0, kappa = {k}"),
                )?;
                requirement(params.q > -1.0 || k == 0, kind, "q > -1")?;
            }
            DustFlat => requirement(
                params.gamma == 0.0 && params.kappa == 0 && params.cc != 0.0,
                kind,
                "gamma = 0, kappa = 0, cc != 0",
            )?,
            StiffFlat => requirement(
                params.gamma == 1.0 && params.kappa == 0 && params.cc != 0.0,
                kind,
                "gamma = 1, kappa = 0, cc != 0",
            )?,
        }
        if !(coeffs.0.is_finite() && coeffs.1.is_finite()) {
            return Err(Error::Config(
                "closed-form coefficients must be finite".into(),
            ));
        }
        Ok(Self {
            kind,
            params,
            coeffs,
        })
    }

    /// The unique closed-form case matching `params`, if any.
    pub fn detect(params: ModelParams, coeffs: (f64, f64)) -> Result<Self> {
        ClosedFormKind::ALL
            .iter()
            .find_map(|k| Self::new(*k, params, coeffs).ok())
            .ok_or_else(|| Error::Config(format!("no closed-form solution for {params:?}")))
    }

    /// Smallest admissible `A` (zero where the evaluator is valid down to
    /// the origin).
    pub fn domain_start(&self) -> f64 {
        let msq = self.params.msq();
        let k = f64::from(self.params.kappa);
        match self.kind {
            ClosedFormKind::InflationMPos => ((k + TURNING_POINT_MARGIN) / msq).max(0.0).sqrt(),
            ClosedFormKind::InflationMNeg => {
                ((TURNING_POINT_MARGIN - k) / msq.abs()).max(0.0).sqrt()
            }
            _ => 0.0,
        }
    }

    pub fn eval(&self, a: f64) -> Result<(f64, f64)> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::Domain {
                what: "scale factor",
                detail: format!("closed forms need A > 0, got {a}"),
            });
        }
        let (p, c) = (&self.params, self.coeffs);
        match self.kind {
            ClosedFormKind::InflationMPos => inflation_mpos(p, c, a),
            ClosedFormKind::InflationMNeg => inflation_mneg(p, c, a),
            ClosedFormKind::InflationMZeroClosed
            | ClosedFormKind::InflationMZeroOpen
            | ClosedFormKind::InflationMZeroFlat => inflation_mzero(p, c, a),
            ClosedFormKind::DustFlat => dust_flat(p, c, a),
            ClosedFormKind::StiffFlat => stiff_flat(p, c, a),
        }
    }

    pub fn sample(&self, grid: &Grid) -> Result<SampledFunction> {
        SampledFunction::try_from_fn(grid, |a| self.eval(a))
    }
}

fn pair(
    kinds: (BesselKind, BesselKind),
    orders: (f64, f64),
    coeffs: (f64, f64),
    z: f64,
) -> Result<(f64, f64)> {
    let mut v = 0.0;
    let mut d = 0.0;
    for (kind, order, c) in [(kinds.0, orders.0, coeffs.0), (kinds.1, orders.1, coeffs.1)] {
        if c != 0.0 {
            let (f, df) = bessel_with_derivative(Bessel::new(kind, order), z)?;
            v += c * f;
            d += c * df;
        }
    }
    Ok((v, d))
}

/// `u = s^(1/2) Z(z)`, `s = |m^2| A^2 -+ kappa`, `z = (4/|m^2|) s^(3/2)`.
fn inflation_q1(
    m2: f64,
    s: f64,
    a: f64,
    kinds: (BesselKind, BesselKind),
    orders: (f64, f64),
    coeffs: (f64, f64),
) -> Result<(f64, f64)> {
    if !(s > TURNING_POINT_MARGIN) {
        return Err(Error::Domain {
            what: "turning point",
            detail: format!("A = {a} lies at or below the turning point (s = {s:e})"),
        });
    }
    let rs = s.sqrt();
    let z = 4.0 / m2 * s * rs;
    let (f, df) = pair(kinds, orders, coeffs, z)?;
    // ds/dA = 2 m2 A, dz/dA = 12 A sqrt(s)
    Ok((rs * f, m2 * a / rs * f + 12.0 * a * s * df))
}

/// `m^2 > 0`: `u = (m^2 A^2 - kappa)^(1/2) [c1 J_{1/3}(z) + c2 J_{-1/3}(z)]`.
pub fn inflation_mpos(params: &ModelParams, coeffs: (f64, f64), a: f64) -> Result<(f64, f64)> {
    let m2 = params.msq();
    let s = m2 * a * a - f64::from(params.kappa);
    inflation_q1(
        m2,
        s,
        a,
        (BesselKind::J, BesselKind::J),
        (1.0 / 3.0, -1.0 / 3.0),
        coeffs,
    )
}

/// `m^2 < 0`: `u = (|m^2| A^2 + kappa)^(1/2) [c1 I_{1/3}(z) + c2 K_{1/3}(z)]`.
pub fn inflation_mneg(params: &ModelParams, coeffs: (f64, f64), a: f64) -> Result<(f64, f64)> {
    let m2 = params.msq().abs();
    let s = m2 * a * a + f64::from(params.kappa);
    inflation_q1(
        m2,
        s,
        a,
        (BesselKind::I, BesselKind::K),
        (1.0 / 3.0, 1.0 / 3.0),
        coeffs,
    )
}

/// `m^2 = 0`: `u = A^(2 nu) Z_nu(6 A^2)` with `nu = (1 + q)/4`; modified
/// Bessel functions for `kappa = 1`, ordinary ones for `kappa = -1`. For
/// `kappa = 0` the potential vanishes and `u = c1 + c2 A^(1+q)`.
pub fn inflation_mzero(params: &ModelParams, coeffs: (f64, f64), a: f64) -> Result<(f64, f64)> {
    let q = params.q;
    let kinds = match params.kappa {
        1 => (BesselKind::I, BesselKind::K),
        -1 => (BesselKind::J, BesselKind::Y),
        _ => {
            let p = a.powf(q);
            return Ok((coeffs.0 + coeffs.1 * p * a, coeffs.1 * (1.0 + q) * p));
        }
    };
    let nu = 0.25 * (1.0 + q);
    let (f, df) = pair(kinds, (nu, nu), coeffs, 6.0 * a * a)?;
    let pre = a.powf(2.0 * nu);
    Ok((pre * f, 2.0 * nu * pre / a * f + pre * 12.0 * a * df))
}

/// Flat dust: `u = e^(-z/2) [c1 M(n, alpha; z) + c2 z^(1-alpha) M(n-alpha+1, 2-alpha; z)]`
/// with `z = (8/3) sqrt(3 cc) A^3`, `alpha = (2 - q)/3` and
/// `n = (2 - q)/6 - 16 matter / sqrt(3 cc)`.
///
/// The root is the principal complex square root. For `cc < 0`, `z` is
/// imaginary and `e^(-z/2) M(n, alpha; z)` is real by Kummer's
/// transformation; the second branch then uses the real prefactor
/// `|z|^(1-alpha)` (a constant multiple of `z^(1-alpha)`).
pub fn dust_flat(params: &ModelParams, coeffs: (f64, f64), a: f64) -> Result<(f64, f64)> {
    let q = params.q;
    let root = Complex64::new(3.0 * params.cc, 0.0).sqrt();
    let c = 8.0 / 3.0 * root;
    let z = c * a.powi(3);
    let dz = 3.0 * c * a * a;
    let alpha = (2.0 - q) / 3.0;
    let n = (2.0 - q) / 6.0 - 16.0 * params.matter / root;
    if (alpha - 1.0).abs() < 1e-12 && coeffs.1 != 0.0 {
        return Err(Error::DegenerateBasis(
            "alpha = 1: the two Kummer branches coincide".into(),
        ));
    }
    let to_basis = |e: Error| match e {
        Error::Pole(x) => Error::DegenerateBasis(format!(
            "Kummer function with non-positive integer lower parameter {x}"
        )),
        other => other,
    };
    let half = (-0.5 * z).exp();
    let mut u = 0.0;
    let mut du = 0.0;
    if coeffs.0 != 0.0 {
        let (m, dm) = hyp1f1_complex(n, alpha, z).map_err(to_basis)?;
        let h = half * m;
        let dh = half * (dm - 0.5 * m) * dz;
        u += coeffs.0 * h.re;
        du += coeffs.0 * dh.re;
    }
    if coeffs.1 != 0.0 {
        let (m, dm) = hyp1f1_complex(n - alpha + 1.0, 2.0 - alpha, z).map_err(to_basis)?;
        let h = half * m;
        let dh = half * (dm - 0.5 * m) * dz;
        let rho = c.norm() * a.powi(3);
        let pre = rho.powf(1.0 - alpha);
        let dpre = 3.0 * (1.0 - alpha) * pre / a;
        u += coeffs.1 * pre * h.re;
        du += coeffs.1 * (dpre * h.re + pre * dh.re);
    }
    Ok((u, du))
}

/// Order of the stiff-fluid Bessel functions, returned as `mu^2` so that
/// the imaginary-order regime can be reported.
pub fn stiff_order_squared(params: &ModelParams) -> f64 {
    let h = 0.5 * (1.0 + params.q);
    (h * h - 384.0 * params.matter) / 9.0
}

/// Flat stiff fluid: `u = A^((1+q)/2) Z_mu(b A^3)`, `b = (4/3) sqrt(3 |cc|)`,
/// `mu = (1/3) sqrt(((1+q)/2)^2 - 384 matter)`. `J`, `Y` for `cc < 0`,
/// `I`, `K` for `cc > 0`.
pub fn stiff_flat(params: &ModelParams, coeffs: (f64, f64), a: f64) -> Result<(f64, f64)> {
    let mu2 = stiff_order_squared(params);
    if mu2 < 0.0 {
        return Err(Error::ImaginaryOrder(mu2));
    }
    let mu = mu2.sqrt();
    let b = 4.0 / 3.0 * (3.0 * params.cc.abs()).sqrt();
    let kinds = if params.cc < 0.0 {
        (BesselKind::J, BesselKind::Y)
    } else {
        (BesselKind::I, BesselKind::K)
    };
    let (f, df) = pair(kinds, (mu, mu), coeffs, b * a.powi(3))?;
    let h = 0.5 * (1.0 + params.q);
    let pre = a.powf(h);
    Ok((pre * f, h * pre / a * f + pre * 3.0 * b * a * a * df))
}
