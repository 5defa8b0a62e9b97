//! Numerical solution of `A u'' - q u' - V(A) u = 0` (the WDW equation
//! `-A u'' + q u' + V u = 0` written as an initial-value problem).
//!
//! The origin is a regular singular point. Solutions are never started at
//! `A = 0`; the two local behaviours are seeded from the indicial roots with
//! a first correction per potential monomial.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::sampled::{Grid, SampledFunction};

/// Start point used when the caller's grid begins far from the origin.
pub const FROBENIUS_SEED_A: f64 = 1e-3;
/// Magnitude cap; anything larger is reported as an integration failure.
pub const MAX_MAGNITUDE: f64 = 1e300;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorOptions {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
}

impl Default for IntegratorOptions {
    fn default() -> Self {
        Self {
            rtol: 1e-9,
            atol: 1e-12,
            max_steps: 2_000_000,
        }
    }
}

/// Roots of the indicial polynomial at `A = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndicialRoots {
    Real(f64, f64),
    /// `re +- i im`; the real solutions are `A^re cos(im ln A)` and
    /// `A^re sin(im ln A)`.
    Complex {
        re: f64,
        im: f64,
    },
}

impl IndicialRoots {
    fn as_complex(&self) -> (Complex64, Complex64) {
        match *self {
            Self::Real(a, b) => (a.into(), b.into()),
            Self::Complex { re, im } => (Complex64::new(re, -im), Complex64::new(re, im)),
        }
    }
}

/// Constant added to the indicial polynomial when `A V(A)` tends to a
/// constant at the origin (the stiff fluid, `gamma = 1`).
fn indicial_shift(params: &ModelParams) -> Result<f64> {
    if params.matter == 0.0 {
        return Ok(0.0);
    }
    let e = params.matter_exponent();
    if (e + 1.0).abs() < 1e-12 {
        Ok(384.0 * params.matter)
    } else if e < -1.0 {
        Err(Error::TooSingular(format!(
            "matter term ~ A^{e} with gamma = {} dominates the derivative terms",
            params.gamma
        )))
    } else {
        Ok(0.0)
    }
}

fn indicial_polynomial(params: &ModelParams, shift: f64, s: Complex64) -> Complex64 {
    s * (s - 1.0 - params.q) + shift
}

/// Indicial exponents of the equation at `A = 0`: `{0, 1 + q}` in general,
/// `r^2 - (1 + q) r + 384 matter = 0` for the stiff fluid.
pub fn frobenius_exponents(params: &ModelParams) -> Result<IndicialRoots> {
    let shift = indicial_shift(params)?;
    let b = 1.0 + params.q;
    let disc = b * b - 4.0 * shift;
    if disc >= 0.0 {
        let s = disc.sqrt();
        Ok(IndicialRoots::Real(0.5 * (b - s), 0.5 * (b + s)))
    } else {
        Ok(IndicialRoots::Complex {
            re: 0.5 * b,
            im: 0.5 * (-disc).sqrt(),
        })
    }
}

/// Local solution `A^r (1 + sum_j d_j A^(e_j + 1))` as a list of
/// `(coefficient, exponent)` monomials.
fn frobenius_expansion(params: &ModelParams, r: Complex64) -> Result<Vec<(Complex64, Complex64)>> {
    let shift = indicial_shift(params)?;
    let mut terms = vec![(Complex64::new(1.0, 0.0), r)];
    for (coef, e) in params.potential_terms() {
        if shift != 0.0 && (e + 1.0).abs() < 1e-12 {
            continue;
        }
        let p = indicial_polynomial(params, shift, r + e + 1.0);
        if p.norm() < 1e-10 * (1.0 + r.norm_sqr()) {
            // resonance: the true solution carries a logarithm here
            continue;
        }
        terms.push((coef / p, r + e + 1.0));
    }
    Ok(terms)
}

fn frobenius_local(params: &ModelParams, r: Complex64, a: f64) -> Result<(Complex64, Complex64)> {
    let x = Complex64::new(a, 0.0);
    Ok(frobenius_expansion(params, r)?.iter().fold(
        (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
        |(v, d), (c, p)| {
            let t = c * x.powc(*p);
            (v + t, d + p * t / a)
        },
    ))
}

/// `int_0^a x^q u^2 dx` for the solution with `(u, u')` at a small `a`,
/// from the two-term local expansion integrated monomial by monomial.
pub(crate) fn head_weighted_norm(params: &ModelParams, a: f64, u: f64, du: f64) -> Result<f64> {
    let q = params.q;
    if !(q > -1.0) {
        return Err(Error::Integrability(q));
    }
    let roots = frobenius_exponents(params)?;
    if let IndicialRoots::Real(r1, r2) = roots {
        if (r1 - r2).abs() < 1e-9 {
            return Err(Error::DegenerateIndicial { r1, r2 });
        }
    }
    let [(v1, d1), (v2, d2)] = frobenius_seeds(params, a)?;
    let det = v1 * d2 - v2 * d1;
    if !(det.abs() > 1e-300) {
        return Err(Error::DegenerateBasis(
            "local expansions are dependent".into(),
        ));
    }
    let c1 = (u * d2 - v2 * du) / det;
    let c2 = (v1 * du - u * d1) / det;
    // u as a sum of complex monomials
    let mut mono: Vec<(Complex64, Complex64)> = Vec::new();
    match roots {
        IndicialRoots::Real(r1, r2) => {
            for (c, r) in [(c1, r1), (c2, r2)] {
                for (b, p) in frobenius_expansion(params, r.into())? {
                    mono.push((c * b, p));
                }
            }
        }
        IndicialRoots::Complex { .. } => {
            // c1 Re(phi) + c2 Im(phi) = (C phi + conj(C phi)) / 2, C = c1 - i c2
            let (_, r) = roots.as_complex();
            let cc = Complex64::new(c1, -c2);
            for (b, p) in frobenius_expansion(params, r)? {
                mono.push((0.5 * cc * b, p));
                mono.push((0.5 * (cc * b).conj(), p.conj()));
            }
        }
    }
    let x = Complex64::new(a, 0.0);
    let mut total = Complex64::new(0.0, 0.0);
    for (bm, pm) in &mono {
        for (bn, pn) in &mono {
            let e = pm + pn + q + 1.0;
            if !(e.re > 0.0) {
                return Err(Error::Integrability(q));
            }
            total += bm * bn * x.powc(e) / e;
        }
    }
    Ok(total.re)
}

/// Initial data `[(u, u'); 2]` of the two Frobenius solutions at `a`.
pub fn frobenius_seeds(params: &ModelParams, a: f64) -> Result<[(f64, f64); 2]> {
    let roots = frobenius_exponents(params)?;
    match roots {
        IndicialRoots::Real(r1, r2) => {
            let (u1, d1) = frobenius_local(params, r1.into(), a)?;
            let (u2, d2) = frobenius_local(params, r2.into(), a)?;
            Ok([(u1.re, d1.re), (u2.re, d2.re)])
        }
        IndicialRoots::Complex { .. } => {
            let (_, r) = roots.as_complex();
            let (u, d) = frobenius_local(params, r, a)?;
            Ok([(u.re, d.re), (u.im, d.im)])
        }
    }
}

/// Fast potential used inside the right-hand side; non-finite values are
/// caught by the integrator's magnitude check.
fn potential_terms_eval(terms: &[(f64, f64)], a: f64) -> f64 {
    terms.iter().map(|(c, e)| c * a.powf(*e)).sum()
}

// Dormand-Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A2: [f64; 1] = [0.2];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [
    19372.0 / 6561.0,
    -25360.0 / 2187.0,
    64448.0 / 6561.0,
    -212.0 / 729.0,
];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
const B: [f64; 6] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
];
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

fn axpy<const N: usize>(y: &[f64; N], h: f64, ks: &[[f64; N]], coefs: &[f64]) -> [f64; N] {
    let mut out = *y;
    for (k, c) in ks.iter().zip(coefs) {
        if *c != 0.0 {
            for i in 0..N {
                out[i] += h * c * k[i];
            }
        }
    }
    out
}

/// Integrates `y' = rhs(a, y)` from `(a0, y0)` and returns the state at each
/// station. Stations must be monotone in the direction of integration;
/// every station is hit exactly by the step sequence.
pub(crate) fn dopri5<const N: usize>(
    rhs: impl Fn(f64, &[f64; N]) -> [f64; N],
    a0: f64,
    y0: [f64; N],
    stations: &[f64],
    opts: &IntegratorOptions,
) -> Result<Vec<[f64; N]>> {
    let mut out = Vec::with_capacity(stations.len());
    let Some(&end) = stations.last() else {
        return Ok(out);
    };
    let dir = if end >= a0 { 1.0 } else { -1.0 };
    let span = (end - a0).abs();
    let mut a = a0;
    let mut y = y0;
    let mut k1 = rhs(a, &y);
    let mut h = (1e-4 * span).max(1e-6 * a0.abs()).max(f64::MIN_POSITIVE);
    let mut steps = 0usize;
    let fail = |a: f64, reason: String| Error::IntegrationFailure {
        last_good_a: a,
        reason,
    };
    for &station in stations {
        if (station - a) * dir < 0.0 {
            return Err(Error::Config(
                "integration stations are not monotone".into(),
            ));
        }
        while a != station {
            steps += 1;
            if steps > opts.max_steps {
                return Err(fail(a, "maximum number of steps exceeded".into()));
            }
            let remaining = (station - a).abs();
            let landing = h >= remaining * (1.0 - 1e-12);
            let hs = if landing { remaining } else { h } * dir;

            let k2 = rhs(a + C[1] * hs, &axpy(&y, hs, &[k1], &A2));
            let k3 = rhs(a + C[2] * hs, &axpy(&y, hs, &[k1, k2], &A3));
            let k4 = rhs(a + C[3] * hs, &axpy(&y, hs, &[k1, k2, k3], &A4));
            let k5 = rhs(a + C[4] * hs, &axpy(&y, hs, &[k1, k2, k3, k4], &A5));
            let k6 = rhs(a + C[5] * hs, &axpy(&y, hs, &[k1, k2, k3, k4, k5], &A6));
            let y_new = axpy(&y, hs, &[k1, k2, k3, k4, k5, k6], &B);
            let a_new = if landing { station } else { a + hs };
            let k7 = rhs(a_new, &y_new);

            let ks = [k1, k2, k3, k4, k5, k6, k7];
            let mut err = 0.0f64;
            for i in 0..N {
                let e: f64 = ks.iter().zip(&E).map(|(k, c)| c * k[i]).sum::<f64>() * hs;
                let sc = opts.atol + opts.rtol * y[i].abs().max(y_new[i].abs());
                err = err.max((e / sc).abs());
            }
            if !err.is_finite()
                || y_new
                    .iter()
                    .any(|v| !v.is_finite() || v.abs() > MAX_MAGNITUDE)
            {
                if y.iter().any(|v| v.abs() > 1e-3 * MAX_MAGNITUDE) {
                    return Err(fail(
                        a,
                        format!("solution magnitude exceeds {MAX_MAGNITUDE:e}"),
                    ));
                }
                h *= 0.2;
            } else if err <= 1.0 {
                a = a_new;
                y = y_new;
                k1 = k7;
                let factor = if err == 0.0 {
                    5.0
                } else {
                    (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
                };
                if !landing || factor < 1.0 {
                    h = (hs.abs() * factor).max(if landing { 0.0 } else { h * 0.2 });
                }
                continue;
            } else {
                h = hs.abs() * (0.9 * err.powf(-0.2)).clamp(0.2, 1.0);
            }
            if h < 1e-14 * a.abs().max(1e-300) {
                return Err(fail(a, format!("step size underflow (h = {h:e})")));
            }
        }
        out.push(y);
    }
    Ok(out)
}

fn wdw_rhs(params: &ModelParams) -> impl Fn(f64, &[f64; 2]) -> [f64; 2] {
    let terms = params.potential_terms();
    let q = params.q;
    move |a, y| {
        [
            y[1],
            (q * y[1] + potential_terms_eval(&terms, a) * y[0]) / a,
        ]
    }
}

/// Solution with `u(grid[0]) = init_value`, `u'(grid[0]) = init_deriv`.
pub fn integrate(
    params: &ModelParams,
    grid: &Grid,
    init_value: f64,
    init_deriv: f64,
) -> Result<SampledFunction> {
    integrate_with(
        params,
        grid,
        init_value,
        init_deriv,
        &IntegratorOptions::default(),
    )
}

pub fn integrate_with(
    params: &ModelParams,
    grid: &Grid,
    init_value: f64,
    init_deriv: f64,
    opts: &IntegratorOptions,
) -> Result<SampledFunction> {
    params.validate()?;
    let states = dopri5(
        wdw_rhs(params),
        grid.first(),
        [init_value, init_deriv],
        &grid.points()[1..],
        opts,
    )?;
    let mut values = Vec::with_capacity(grid.len());
    let mut derivs = Vec::with_capacity(grid.len());
    values.push(init_value);
    derivs.push(init_deriv);
    for s in states {
        values.push(s[0]);
        derivs.push(s[1]);
    }
    SampledFunction::new(grid.clone(), values, derivs)
}

/// Carries `(u, u')` from `from` to `to` (either direction) together with
/// the signed integral `int_from^to x^q u^2 dx`.
pub(crate) fn carry_with_weighted_norm(
    params: &ModelParams,
    from: f64,
    state: (f64, f64),
    to: f64,
) -> Result<(f64, f64, f64)> {
    let base = wdw_rhs(params);
    let q = params.q;
    let rhs = move |a: f64, y: &[f64; 3]| {
        let [du, d2u] = base(a, &[y[0], y[1]]);
        [du, d2u, a.powf(q) * y[0] * y[0]]
    };
    let opts = IntegratorOptions {
        rtol: 1e-11,
        atol: 1e-14,
        ..IntegratorOptions::default()
    };
    let s = dopri5(rhs, from, [state.0, state.1, 0.0], &[to], &opts)?;
    Ok((s[0][0], s[0][1], s[0][2]))
}

/// Two independent solutions and superposition coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionBasis {
    pub u1: SampledFunction,
    pub u2: SampledFunction,
    pub c1: f64,
    pub c2: f64,
}

impl SolutionBasis {
    pub fn new(u1: SampledFunction, u2: SampledFunction, c1: f64, c2: f64) -> Result<Self> {
        if u1.grid() != u2.grid() {
            return Err(Error::Config("basis functions on different grids".into()));
        }
        Ok(Self { u1, u2, c1, c2 })
    }

    pub fn with_coefficients(mut self, c1: f64, c2: f64) -> Self {
        self.c1 = c1;
        self.c2 = c2;
        self
    }

    /// `c1 u1 + c2 u2`.
    pub fn combination(&self) -> SampledFunction {
        self.u1
            .linear_combination(self.c1, &self.u2, self.c2)
            .expect("basis shares one grid")
    }

    /// `A^-q (u1 u2' - u1' u2)` at every grid point.
    pub fn generalized_wronskian(&self, q: f64) -> Vec<f64> {
        self.u1
            .points()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                a.powf(-q)
                    * (self.u1.values()[i] * self.u2.derivs()[i]
                        - self.u1.derivs()[i] * self.u2.values()[i])
            })
            .collect()
    }

    /// Least-squares coefficients reproducing `target` at `indices`.
    pub fn fit(&self, target: &SampledFunction, indices: &[usize]) -> Result<Self> {
        let (mut s11, mut s12, mut s22, mut t1, mut t2) = (0.0, 0.0, 0.0, 0.0, 0.0);
        for &i in indices {
            let (x, y, t) = (self.u1.values()[i], self.u2.values()[i], target.values()[i]);
            s11 += x * x;
            s12 += x * y;
            s22 += y * y;
            t1 += x * t;
            t2 += y * t;
        }
        let det = s11 * s22 - s12 * s12;
        if !(det.abs() > 1e-300) || det.abs() < 1e-14 * s11 * s22 {
            return Err(Error::DegenerateBasis(
                "singular least-squares system".into(),
            ));
        }
        Ok(self
            .clone()
            .with_coefficients((t1 * s22 - t2 * s12) / det, (s11 * t2 - s12 * t1) / det))
    }
}

/// Two solutions seeded by the Frobenius behaviours at the origin, carried
/// from `min(grid[0], FROBENIUS_SEED_A)` onto the grid. Coefficients start
/// as `(1, 0)`.
pub fn solve_basis(params: &ModelParams, grid: &Grid) -> Result<SolutionBasis> {
    params.validate()?;
    if let IndicialRoots::Real(r1, r2) = frobenius_exponents(params)? {
        if (r1 - r2).abs() < 1e-9 {
            return Err(Error::DegenerateIndicial { r1, r2 });
        }
    }
    let a_seed = grid.first().min(FROBENIUS_SEED_A);
    let seeds = frobenius_seeds(params, a_seed)?;
    let opts = IntegratorOptions::default();
    let mut sols = Vec::with_capacity(2);
    for (v, d) in seeds {
        let (v0, d0) = if a_seed < grid.first() {
            let s = dopri5(wdw_rhs(params), a_seed, [v, d], &[grid.first()], &opts)?;
            (s[0][0], s[0][1])
        } else {
            (v, d)
        };
        sols.push(integrate_with(params, grid, v0, d0, &opts)?);
    }
    let u2 = sols.pop().expect("two solutions");
    let u1 = sols.pop().expect("two solutions");
    let basis = SolutionBasis::new(u1, u2, 1.0, 0.0)?;
    let w = basis.generalized_wronskian(params.q)[0];
    let a = grid.first().powf(-params.q);
    let scale = a
        * (basis.u1.values()[0] * basis.u2.derivs()[0])
            .abs()
            .max((basis.u1.derivs()[0] * basis.u2.values()[0]).abs());
    if !(w.abs() > 1e-10 * scale) {
        return Err(Error::DegenerateBasis(format!(
            "generalized Wronskian {w:e} vanishes relative to {scale:e}"
        )));
    }
    Ok(basis)
}
