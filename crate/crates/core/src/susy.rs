//! Factorization of the WDW operator, `H+ = A+ A-`, with
//! `A-+ = +-A^-q d/dA + W` and the superpotential `W = -A^-q u'/u` built
//! from a seed solution `u`.
//!
//! Derivative columns of operator outputs come from the product rule with
//! the analytic `W'`, so functions with poles at the ends of a node-free
//! interval are never differentiated numerically.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::ops::Range;

use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::sampled::{max_scaled_ratio, Grid, SampledFunction, MIN_GRID_POINTS};

/// A seed value is treated as a node when `|u| <= NODE_TOL * max |u|`.
pub const NODE_TOL: f64 = 1e-10;

/// `W` and `W'` on a node-free interval of a seed.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperpotentialField {
    grid: Grid,
    values: Vec<f64>,
    derivs: Vec<f64>,
    seed_fingerprint: u64,
}

impl SuperpotentialField {
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn points(&self) -> &[f64] {
        self.grid.points()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn derivs(&self) -> &[f64] {
        &self.derivs
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Identifies the seed the field was built from.
    pub fn seed_fingerprint(&self) -> u64 {
        self.seed_fingerprint
    }

    /// Returns a copy with `W` and `W'` shifted by the given columns.
    pub fn shifted(&self, dw: &[f64], ddw: &[f64]) -> Self {
        Self {
            grid: self.grid.clone(),
            values: self.values.iter().zip(dw).map(|(w, d)| w + d).collect(),
            derivs: self.derivs.iter().zip(ddw).map(|(w, d)| w + d).collect(),
            seed_fingerprint: self.seed_fingerprint,
        }
    }

    /// `W` as a sampled function (analytic derivative column).
    pub fn as_sampled(&self) -> Result<SampledFunction> {
        SampledFunction::new(self.grid.clone(), self.values.clone(), self.derivs.clone())
    }

    fn check_grid(&self, f: &SampledFunction) -> Result<()> {
        if f.grid() != &self.grid {
            return Err(Error::Config(
                "function and superpotential live on different grids".into(),
            ));
        }
        Ok(())
    }
}

/// Hash of the sampled values and derivatives.
pub fn fingerprint(u: &SampledFunction) -> u64 {
    let mut h = DefaultHasher::new();
    for x in u.points().iter().chain(u.values()).chain(u.derivs()) {
        x.to_bits().hash(&mut h);
    }
    h.finish()
}

fn is_node(u: &[f64], i: usize, tol: f64) -> bool {
    u[i].abs() <= tol
}

/// Grid brackets of each node: `(i, i + 1)` for a sign change between
/// neighbours and `(i, i)` for a value that is numerically zero.
pub fn node_brackets(u: &SampledFunction) -> Vec<(usize, usize)> {
    let v = u.values();
    let tol = NODE_TOL * u.sup_norm();
    let mut out = Vec::new();
    for i in 0..v.len() {
        if is_node(v, i, tol) {
            out.push((i, i));
        } else if i + 1 < v.len() && !is_node(v, i + 1, tol) && (v[i] > 0.0) != (v[i + 1] > 0.0) {
            out.push((i, i + 1));
        }
    }
    out
}

/// Maximal index ranges on which `u` keeps one sign and stays away from
/// zero. Ranges shorter than the minimum grid size are dropped.
pub fn node_free_intervals(u: &SampledFunction) -> Vec<Range<usize>> {
    let v = u.values();
    let tol = NODE_TOL * u.sup_norm();
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for i in 0..=v.len() {
        let breaks = i == v.len()
            || is_node(v, i, tol)
            || start.is_some_and(|s| (v[s] > 0.0) != (v[i] > 0.0));
        if breaks {
            if let Some(s) = start.take() {
                if i - s >= MIN_GRID_POINTS {
                    out.push(s..i);
                }
            }
            if i < v.len() && !is_node(v, i, tol) {
                start = Some(i);
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    out
}

/// `W = -A^-q u'/u` and
/// `W' = A^-q [q u'/(A u) - u''/u + (u'/u)^2]`, with `u''` from the
/// derivative column of `u`.
pub fn superpotential_from_seed(
    params: &ModelParams,
    u: &SampledFunction,
) -> Result<SuperpotentialField> {
    let brackets = node_brackets(u);
    if !brackets.is_empty() {
        return Err(Error::NodeInDomain { brackets });
    }
    let q = params.q;
    let u2 = u.second_derivative();
    let mut values = Vec::with_capacity(u.len());
    let mut derivs = Vec::with_capacity(u.len());
    for (i, &a) in u.points().iter().enumerate() {
        let aq = a.powf(-q);
        let l = u.derivs()[i] / u.values()[i];
        values.push(-aq * l);
        derivs.push(aq * (q * l / a - u2[i] / u.values()[i] + l * l));
    }
    if values.iter().chain(&derivs).any(|x| !x.is_finite()) {
        return Err(Error::NumericRange("superpotential"));
    }
    Ok(SuperpotentialField {
        grid: u.grid().clone(),
        values,
        derivs,
        seed_fingerprint: fingerprint(u),
    })
}

fn sampled_from_columns(grid: &Grid, values: Vec<f64>) -> Result<SampledFunction> {
    SampledFunction::from_values(grid.clone(), values)
}

/// `V+ = A^(1+2q) W^2 - A^(1+q) W'`.
pub fn riccati_potential(params: &ModelParams, w: &SuperpotentialField) -> Result<SampledFunction> {
    let q = params.q;
    let values = w
        .points()
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            a.powf(1.0 + 2.0 * q) * w.values[i] * w.values[i] - a.powf(1.0 + q) * w.derivs[i]
        })
        .collect();
    sampled_from_columns(&w.grid, values)
}

/// `V- = A^(1+2q) W^2 + A^(1+q) W'`, cross-checked against
/// `V+ + 2 A^(1+q) W'`.
pub fn partner_potential(params: &ModelParams, w: &SuperpotentialField) -> Result<SampledFunction> {
    let q = params.q;
    let vplus = riccati_potential(params, w)?;
    let mut values = Vec::with_capacity(w.len());
    let mut worst = 0.0f64;
    for (i, &a) in w.points().iter().enumerate() {
        let sq = a.powf(1.0 + 2.0 * q) * w.values[i] * w.values[i];
        let lin = a.powf(1.0 + q) * w.derivs[i];
        let direct = sq + lin;
        let via_plus = vplus.values()[i] + 2.0 * lin;
        worst = worst.max((direct - via_plus).abs() / (sq.abs() + lin.abs() + f64::MIN_POSITIVE));
        values.push(direct);
    }
    const AGREEMENT: f64 = 1e-12;
    if worst > AGREEMENT {
        return Err(Error::InternalConsistency {
            check: "partner potential",
            value: worst,
            threshold: AGREEMENT,
        });
    }
    sampled_from_columns(&w.grid, values)
}

/// `sign A^-q f' + W f` with the product-rule derivative.
fn first_order(
    params: &ModelParams,
    w: &SuperpotentialField,
    f: &SampledFunction,
    sign: f64,
) -> Result<SampledFunction> {
    w.check_grid(f)?;
    let q = params.q;
    let f2 = f.second_derivative();
    let mut values = Vec::with_capacity(f.len());
    let mut derivs = Vec::with_capacity(f.len());
    for (i, &a) in f.points().iter().enumerate() {
        let aq = a.powf(-q);
        let (fv, fd) = (f.values()[i], f.derivs()[i]);
        values.push(sign * aq * fd + w.values[i] * fv);
        derivs.push(sign * (aq * f2[i] - q * aq / a * fd) + w.derivs[i] * fv + w.values[i] * fd);
    }
    SampledFunction::new(f.grid().clone(), values, derivs)
}

/// `A- f = A^-q f' + W f`.
pub fn apply_aminus(
    params: &ModelParams,
    w: &SuperpotentialField,
    f: &SampledFunction,
) -> Result<SampledFunction> {
    first_order(params, w, f, 1.0)
}

/// `A+ f = -A^-q f' + W f`.
pub fn apply_aplus(
    params: &ModelParams,
    w: &SuperpotentialField,
    f: &SampledFunction,
) -> Result<SampledFunction> {
    first_order(params, w, f, -1.0)
}

/// `H- f = A- (A+ f)`; the partner operator exists only as this product.
pub fn apply_hminus(
    params: &ModelParams,
    w: &SuperpotentialField,
    f: &SampledFunction,
) -> Result<SampledFunction> {
    apply_aminus(params, w, &apply_aplus(params, w, f)?)
}

/// The terms `(-A^-2q f'', q A^(-1-2q) f', A^(-1-2q) V f)` of `H+ f` for
/// an arbitrary sampled potential.
fn hplus_terms(params: &ModelParams, potential: &[f64], f: &SampledFunction) -> Vec<[f64; 3]> {
    let q = params.q;
    let f2 = f.second_derivative();
    f.points()
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let s = a.powf(-1.0 - 2.0 * q);
            [
                -a * s * f2[i],
                q * s * f.derivs()[i],
                s * potential[i] * f.values()[i],
            ]
        })
        .collect()
}

/// `H+ f` with the given potential in place of the model's.
pub fn apply_hplus_with_potential(
    params: &ModelParams,
    potential: &SampledFunction,
    f: &SampledFunction,
) -> Result<SampledFunction> {
    if potential.grid() != f.grid() {
        return Err(Error::Config(
            "potential and function live on different grids".into(),
        ));
    }
    let values = hplus_terms(params, potential.values(), f)
        .iter()
        .map(|t| t[0] + t[1] + t[2])
        .collect();
    SampledFunction::from_values(f.grid().clone(), values)
}

/// Interior max of `|A+(A- f) - H+ f|` over the term scale of `H+ f`, with
/// `V+` from the Riccati equation.
pub fn factorization_residual(
    params: &ModelParams,
    w: &SuperpotentialField,
    f: &SampledFunction,
) -> Result<f64> {
    let vplus = riccati_potential(params, w)?;
    let composed = apply_aplus(params, w, &apply_aminus(params, w, f)?)?;
    let terms = hplus_terms(params, vplus.values(), f);
    let diff: Vec<f64> = terms
        .iter()
        .zip(composed.values())
        .map(|(t, c)| c - (t[0] + t[1] + t[2]))
        .collect();
    let scale: Vec<f64> = terms
        .iter()
        .map(|t| t[0].abs() + t[1].abs() + t[2].abs())
        .collect();
    Ok(max_scaled_ratio(&diff, &scale, f.grid().interior()))
}

/// `max |A- u| / max(|A^-q u'| + |W u|)` for the seed itself.
pub fn seed_annihilation_residual(
    params: &ModelParams,
    w: &SuperpotentialField,
    u: &SampledFunction,
) -> Result<f64> {
    first_order_residual(params, w, u, 1.0)
}

/// `max |A+ (1/u)| / max(|A^-q (1/u)'| + |W/u|)`: `1/u` is the zero mode
/// of the partner operator.
pub fn partner_zero_mode_residual(
    params: &ModelParams,
    w: &SuperpotentialField,
    u: &SampledFunction,
) -> Result<f64> {
    first_order_residual(params, w, &u.reciprocal()?, -1.0)
}

fn first_order_residual(
    params: &ModelParams,
    w: &SuperpotentialField,
    f: &SampledFunction,
    sign: f64,
) -> Result<f64> {
    w.check_grid(f)?;
    let q = params.q;
    let mut res = Vec::with_capacity(f.len());
    let mut scale = Vec::with_capacity(f.len());
    for (i, &a) in f.points().iter().enumerate() {
        let d = sign * a.powf(-q) * f.derivs()[i];
        let m = w.values[i] * f.values()[i];
        res.push(d + m);
        scale.push(d.abs() + m.abs());
    }
    Ok(max_scaled_ratio(&res, &scale, 0..f.len()))
}

/// Interior max of `|V+ - V|` over `max |V|` on the interval.
pub fn riccati_closure_residual(params: &ModelParams, w: &SuperpotentialField) -> Result<f64> {
    let vplus = riccati_potential(params, w)?;
    let v = crate::model::potential_samples(params, w.points())?;
    let range = w.grid.interior();
    let scale = v[range.clone()].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let diff = range
        .map(|i| (vplus.values()[i] - v[i]).abs())
        .fold(0.0, f64::max);
    Ok(if scale > 0.0 { diff / scale } else { diff })
}
