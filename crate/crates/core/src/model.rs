//! The minisuperspace Wheeler-DeWitt problem: parameters, potential and the
//! two second-order operators acting on sampled functions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sampled::{max_scaled_ratio, SampledFunction};

/// Physical and factor-ordering parameters of one WDW problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// Barotropic index.
    pub gamma: f64,
    /// Curvature index, one of -1, 0, +1.
    pub kappa: i8,
    /// Cosmological constant.
    pub cc: f64,
    /// The product pi * G * M_gamma.
    pub matter: f64,
    /// Factor-ordering parameter.
    pub q: f64,
}

impl ModelParams {
    pub fn new(gamma: f64, kappa: i8, cc: f64, matter: f64, q: f64) -> Result<Self> {
        let p = Self {
            gamma,
            kappa,
            cc,
            matter,
            q,
        };
        p.validate()?;
        Ok(p)
    }

    /// Vacuum, flat, no cosmological term: `V = 0`.
    pub fn free(q: f64) -> Self {
        Self {
            gamma: 0.0,
            kappa: 0,
            cc: 0.0,
            matter: 0.0,
            q,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !matches!(self.kappa, -1..=1) {
            return Err(Error::Config(format!(
                "kappa must be -1, 0 or 1, got {}",
                self.kappa
            )));
        }
        if !(self.matter >= 0.0) {
            return Err(Error::Config(format!(
                "matter coupling must be >= 0, got {}",
                self.matter
            )));
        }
        if ![self.gamma, self.cc, self.matter, self.q]
            .iter()
            .all(|x| x.is_finite())
        {
            return Err(Error::Config("model parameters must be finite".into()));
        }
        Ok(())
    }

    /// `m^2 = -cc/3 + (8/3) matter`, the inflationary mass parameter.
    pub fn msq(&self) -> f64 {
        -self.cc / 3.0 + 8.0 / 3.0 * self.matter
    }

    /// Matter coupling giving `msq()` equal to `msq` at the current `cc`.
    pub fn matter_for_msq(cc: f64, msq: f64) -> f64 {
        3.0 / 8.0 * (msq + cc / 3.0)
    }

    /// Exponent of the matter term in the potential, `2 - 3 gamma`.
    pub fn matter_exponent(&self) -> f64 {
        2.0 - 3.0 * self.gamma
    }

    /// The potential as a list of `(coefficient, exponent)` monomials with
    /// non-zero coefficients.
    pub fn potential_terms(&self) -> Vec<(f64, f64)> {
        let mut terms = Vec::with_capacity(3);
        if self.kappa != 0 {
            terms.push((144.0 * f64::from(self.kappa), 3.0));
        }
        if self.cc != 0.0 {
            terms.push((48.0 * self.cc, 5.0));
        }
        if self.matter != 0.0 {
            let e = self.matter_exponent();
            let c = -384.0 * self.matter;
            match terms.iter_mut().find(|(_, x)| *x == e) {
                Some(t) => t.0 += c,
                None => terms.push((c, e)),
            }
        }
        terms.retain(|(c, _)| *c != 0.0);
        terms
    }
}

/// `V(A) = 144 kappa A^3 + 48 cc A^5 - 384 matter A^(2 - 3 gamma)`.
pub fn potential(params: &ModelParams, a: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::Domain {
            what: "potential",
            detail: format!("A must be positive, got {a}"),
        });
    }
    let v = 144.0 * f64::from(params.kappa) * a.powi(3) + 48.0 * params.cc * a.powi(5)
        - 384.0 * params.matter * a.powf(params.matter_exponent());
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NumericRange("potential"))
    }
}

/// Potential sampled on the grid of `f`.
pub fn potential_samples(params: &ModelParams, points: &[f64]) -> Result<Vec<f64>> {
    points.iter().map(|&a| potential(params, a)).collect()
}

/// The three terms `(-A f'', q f', V f)` of `H0 f`, pointwise.
pub(crate) fn h0_terms(params: &ModelParams, f: &SampledFunction) -> Result<Vec<[f64; 3]>> {
    let f2 = f.second_derivative();
    let v = potential_samples(params, f.points())?;
    Ok(f.points()
        .iter()
        .enumerate()
        .map(|(i, &a)| [-a * f2[i], params.q * f.derivs()[i], v[i] * f.values()[i]])
        .collect())
}

/// `H0 f = -A f'' + q f' + V f`.
pub fn apply_h0(params: &ModelParams, f: &SampledFunction) -> Result<SampledFunction> {
    let values = h0_terms(params, f)?
        .iter()
        .map(|t| t[0] + t[1] + t[2])
        .collect();
    SampledFunction::from_values(f.grid().clone(), values)
}

/// `H+ f = -A^(-2q) f'' + q A^(-1-2q) f' + A^(-1-2q) V f`, evaluated as
/// `A^(-1-2q) H0 f` from the same stencil values.
pub fn apply_hplus(params: &ModelParams, f: &SampledFunction) -> Result<SampledFunction> {
    let h0 = apply_h0(params, f)?;
    let values = f
        .points()
        .iter()
        .zip(h0.values())
        .map(|(&a, h)| a.powf(-1.0 - 2.0 * params.q) * h)
        .collect();
    SampledFunction::from_values(f.grid().clone(), values)
}

/// Max over the interior of `|H0 f| / (|A f''| + |q f'| + |V f|)`.
pub fn relative_residual(params: &ModelParams, f: &SampledFunction) -> Result<f64> {
    let terms = h0_terms(params, f)?;
    let res: Vec<f64> = terms.iter().map(|t| t[0] + t[1] + t[2]).collect();
    let scale: Vec<f64> = terms
        .iter()
        .map(|t| t[0].abs() + t[1].abs() + t[2].abs())
        .collect();
    Ok(max_scaled_ratio(&res, &scale, f.grid().interior()))
}

/// Max-norm difference over the interior between the two sides of the
/// ordering expansion `A^(-1+q) d/dA (A^-q f') = A^-1 (f'' - q A^-1 f')`.
pub fn ordering_identity_check(params: &ModelParams, f: &SampledFunction) -> f64 {
    let q = params.q;
    let grid = f.grid();
    let pts = grid.points();
    let inner: Vec<f64> = pts
        .iter()
        .zip(f.derivs())
        .map(|(&a, d)| a.powf(-q) * d)
        .collect();
    let inner_d = grid.differentiate(&inner);
    let f2 = f.second_derivative();
    grid.interior()
        .map(|i| {
            let a = pts[i];
            let lhs = a.powf(q) * inner_d[i] / a;
            let rhs = (f2[i] - q * f.derivs()[i] / a) / a;
            (lhs - rhs).abs()
        })
        .fold(0.0, f64::max)
}

/// [`ordering_identity_check`] divided by the interior max of the
/// right-hand side.
pub fn ordering_identity_relative(params: &ModelParams, f: &SampledFunction) -> f64 {
    let q = params.q;
    let f2 = f.second_derivative();
    let scale = f
        .grid()
        .interior()
        .map(|i| {
            let a = f.points()[i];
            ((f2[i] - q * f.derivs()[i] / a) / a).abs()
        })
        .fold(0.0, f64::max);
    let d = ordering_identity_check(params, f);
    if scale > 0.0 {
        d / scale
    } else {
        d
    }
}
