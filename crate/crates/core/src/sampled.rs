//! Discretized scale-factor axis and functions sampled on it.
//!
//! Derivatives of sampled data are estimated with 9-point Fornberg stencils
//! (8th order on any strictly increasing grid). Points closer than
//! [`STENCIL_HALF`] to either end use off-centred stencils of the same width.

use std::ops::Range;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Number of points in every finite-difference stencil.
pub const STENCIL_WIDTH: usize = 9;
/// Points on each side of a centred stencil.
pub const STENCIL_HALF: usize = STENCIL_WIDTH / 2;
/// Minimum number of grid points.
pub const MIN_GRID_POINTS: usize = 16;

/// Strictly increasing, strictly positive sample points of the scale factor `A`.
#[derive(Debug, Clone)]
pub struct Grid {
    points: Arc<[f64]>,
}

impl PartialEq for Grid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.points, &other.points) || self.points[..] == other.points[..]
    }
}

impl Grid {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.len() < MIN_GRID_POINTS {
            return Err(Error::Config(format!(
                "grid needs at least {MIN_GRID_POINTS} points, got {}",
                points.len()
            )));
        }
        if !points.iter().all(|p| p.is_finite()) {
            return Err(Error::Config("grid points must be finite".into()));
        }
        if points[0] <= 0.0 {
            return Err(Error::Config(format!(
                "grid must start at A > 0 (the origin is singular), got {}",
                points[0]
            )));
        }
        if let Some(i) = points.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::Config(format!(
                "grid is not strictly increasing at index {}",
                i + 1
            )));
        }
        Ok(Self {
            points: points.into(),
        })
    }

    /// `n` equally spaced points on `[a_min, a_max]`, both ends included.
    pub fn uniform(a_min: f64, a_max: f64, n: usize) -> Result<Self> {
        if !(a_max > a_min) {
            return Err(Error::Config(format!(
                "need a_max > a_min, got [{a_min}, {a_max}]"
            )));
        }
        if n < 2 {
            return Err(Error::Config("grid needs at least 2 points".into()));
        }
        let h = (a_max - a_min) / (n - 1) as f64;
        let mut pts: Vec<f64> = (0..n).map(|i| a_min + h * i as f64).collect();
        pts[n - 1] = a_max;
        Self::new(pts)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> f64 {
        self.points[0]
    }

    pub fn last(&self) -> f64 {
        self.points[self.points.len() - 1]
    }

    /// Indices whose derivative stencil is centred.
    pub fn interior(&self) -> Range<usize> {
        STENCIL_HALF..self.len() - STENCIL_HALF
    }

    pub fn restrict(&self, range: Range<usize>) -> Result<Self> {
        Self::new(self.points[range].to_vec())
    }

    /// First derivative of `values` sampled on this grid.
    pub fn differentiate(&self, values: &[f64]) -> Vec<f64> {
        assert_eq!(values.len(), self.len(), "values do not match grid");
        let n = self.len();
        let pts = &self.points;
        (0..n)
            .map(|i| {
                let start = i.saturating_sub(STENCIL_HALF).min(n - STENCIL_WIDTH);
                let nodes = &pts[start..start + STENCIL_WIDTH];
                let w = first_derivative_weights(pts[i], nodes);
                w.iter()
                    .zip(&values[start..start + STENCIL_WIDTH])
                    .map(|(wk, vk)| wk * vk)
                    .sum()
            })
            .collect()
    }
}

/// Fornberg weights for the first derivative at `x0` from `nodes`.
fn first_derivative_weights(x0: f64, nodes: &[f64]) -> [f64; STENCIL_WIDTH] {
    // c[j][k]: weight of node j for the k-th derivative, k in {0, 1}.
    let mut c = [[0.0f64; 2]; STENCIL_WIDTH];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - x0;
    for i in 1..STENCIL_WIDTH {
        let mn = i.min(1);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - x0;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    let mut w = [0.0; STENCIL_WIDTH];
    for (wj, cj) in w.iter_mut().zip(&c) {
        *wj = cj[1];
    }
    w
}

/// A function of `A` sampled on a [`Grid`] together with its first derivative.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    grid: Grid,
    values: Vec<f64>,
    derivs: Vec<f64>,
}

impl SampledFunction {
    pub fn new(grid: Grid, values: Vec<f64>, derivs: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() || derivs.len() != grid.len() {
            return Err(Error::Config(format!(
                "sampled function length mismatch: grid {}, values {}, derivs {}",
                grid.len(),
                values.len(),
                derivs.len()
            )));
        }
        if values
            .iter()
            .zip(&derivs)
            .any(|(v, d)| !v.is_finite() || !d.is_finite())
        {
            return Err(Error::NumericRange("sampled function"));
        }
        Ok(Self {
            grid,
            values,
            derivs,
        })
    }

    /// Builds the derivative column by finite differences.
    pub fn from_values(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Config("values do not match grid".into()));
        }
        let derivs = grid.differentiate(&values);
        Self::new(grid, values, derivs)
    }

    /// Samples an analytic `(value, derivative)` pair at every grid point.
    pub fn from_fn(grid: &Grid, f: impl Fn(f64) -> (f64, f64)) -> Result<Self> {
        Self::try_from_fn(grid, |a| Ok(f(a)))
    }

    pub fn try_from_fn(grid: &Grid, f: impl Fn(f64) -> Result<(f64, f64)>) -> Result<Self> {
        let mut values = Vec::with_capacity(grid.len());
        let mut derivs = Vec::with_capacity(grid.len());
        for &a in grid.points() {
            let (v, d) = f(a)?;
            values.push(v);
            derivs.push(d);
        }
        Self::new(grid.clone(), values, derivs)
    }

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

    /// Second derivative, from a stencil applied to the derivative column.
    pub fn second_derivative(&self) -> Vec<f64> {
        self.grid.differentiate(&self.derivs)
    }

    pub fn restrict(&self, range: Range<usize>) -> Result<Self> {
        let grid = self.grid.restrict(range.clone())?;
        Self::new(
            grid,
            self.values[range.clone()].to_vec(),
            self.derivs[range].to_vec(),
        )
    }

    /// `1/f` with the exact chain-rule derivative `-f'/f^2`.
    pub fn reciprocal(&self) -> Result<Self> {
        let values: Vec<f64> = self.values.iter().map(|v| 1.0 / v).collect();
        let derivs = self
            .values
            .iter()
            .zip(&self.derivs)
            .map(|(v, d)| -d / (v * v))
            .collect();
        Self::new(self.grid.clone(), values, derivs)
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| c * v).collect(),
            derivs: self.derivs.iter().map(|d| c * d).collect(),
        }
    }

    /// `a * self + b * other` on a shared grid.
    pub fn linear_combination(&self, a: f64, other: &Self, b: f64) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::Config("functions live on different grids".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(x, y)| a * x + b * y)
            .collect();
        let derivs = self
            .derivs
            .iter()
            .zip(&other.derivs)
            .map(|(x, y)| a * x + b * y)
            .collect();
        Self::new(self.grid.clone(), values, derivs)
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// `max |x - y| / max |y|` over two equal-length slices.
pub fn sup_relative_difference(x: &[f64], y: &[f64]) -> f64 {
    let scale = y.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let diff = x
        .iter()
        .zip(y)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// Largest pointwise ratio `|residual| / (scale + eps)` over `range`, where
/// `eps` is a tiny fraction of the largest scale so that points where every
/// term vanishes do not dominate.
pub fn max_scaled_ratio(residual: &[f64], scale: &[f64], range: Range<usize>) -> f64 {
    let smax = scale[range.clone()].iter().fold(0.0f64, |m, s| m.max(*s));
    let eps = 1e-14 * smax + f64::MIN_POSITIVE;
    range.fold(0.0f64, |m, i| m.max(residual[i].abs() / (scale[i] + eps)))
}
