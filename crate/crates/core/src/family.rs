//! The strictly isospectral family generated by the general Riccati
//! solution: `W^ = W + u^2/(I + lambda)`, the family potential `V^+` and
//! the family wavefunction `u^ = g(lambda) u/(I + lambda)`, where
//! `I(A) = int_0^A x^q u^2 dx` and `g = sqrt(lambda (lambda + 1))`.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::model::{self, ModelParams};
use crate::odesolve::{carry_with_weighted_norm, head_weighted_norm, FROBENIUS_SEED_A};
use crate::sampled::{max_scaled_ratio, SampledFunction};
use crate::susy::{self, SuperpotentialField};

/// Agreement required between the two evaluations of `V^+`.
pub const POTENTIAL_ROUTE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LambdaPolicy {
    /// Admit `lambda <= -1 - I(A_max)`, where `I + lambda` is negative on
    /// the whole grid.
    pub allow_negative: bool,
}

/// `I(A) = int_0^A x^q u^2 dx` for a solution `u` of the model.
///
/// The segment `[0, A_min]` is handled by carrying `(u, u', I)` back to a
/// small `A` with the ODE and integrating the local two-term expansion
/// there exactly. On the grid each panel uses the quintic Hermite rule
/// with the integrand's first and second derivatives.
pub fn cumulative_integral(params: &ModelParams, u: &SampledFunction) -> Result<SampledFunction> {
    let q = params.q;
    if !(q > -1.0) {
        return Err(Error::Integrability(q));
    }
    let a0 = u.points()[0];
    let (u0, d0) = (u.values()[0], u.derivs()[0]);
    let head = if a0 > FROBENIUS_SEED_A {
        let (uh, dh, back) = carry_with_weighted_norm(params, a0, (u0, d0), FROBENIUS_SEED_A)?;
        head_weighted_norm(params, FROBENIUS_SEED_A, uh, dh)? - back
    } else {
        head_weighted_norm(params, a0, u0, d0)?
    };
    let pts = u.points();
    let f: Vec<f64> = pts
        .iter()
        .zip(u.values())
        .map(|(a, v)| a.powf(q) * v * v)
        .collect();
    let df: Vec<f64> = pts
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let (v, d) = (u.values()[i], u.derivs()[i]);
            q * a.powf(q - 1.0) * v * v + 2.0 * a.powf(q) * v * d
        })
        .collect();
    let d2f = u.grid().differentiate(&df);
    let mut values = Vec::with_capacity(pts.len());
    let mut acc = head.max(0.0);
    values.push(acc);
    for k in 1..pts.len() {
        let h = pts[k] - pts[k - 1];
        let panel = 0.5 * h * (f[k - 1] + f[k])
            + h * h / 10.0 * (df[k - 1] - df[k])
            + h * h * h / 120.0 * (d2f[k - 1] + d2f[k]);
        acc += panel.max(0.0);
        values.push(acc);
    }
    SampledFunction::new(u.grid().clone(), values, f)
}

/// `g(lambda) = sqrt(lambda (lambda + 1))`.
pub fn normalization(lambda: f64) -> Result<f64> {
    let p = lambda * (lambda + 1.0);
    if !(p >= 0.0) || !lambda.is_finite() {
        return Err(Error::GDomain(lambda));
    }
    Ok(p.sqrt())
}

/// Admissibility of `lambda` for a seed with cumulative integral `i`.
pub fn check_lambda(lambda: f64, i: &SampledFunction, policy: LambdaPolicy) -> Result<()> {
    normalization(lambda)?;
    if lambda < 0.0 {
        if !policy.allow_negative {
            return Err(Error::LambdaDomain(lambda));
        }
        let i_max = i.values().last().copied().unwrap_or(0.0);
        if lambda > -1.0 - i_max {
            return Err(Error::ParameterDomain { lambda });
        }
    }
    check_shift(lambda, i)
}

/// `I + lambda` must keep one sign and stay away from zero.
fn check_shift(lambda: f64, i: &SampledFunction) -> Result<()> {
    let s = i.values()[0] + lambda;
    let ok = i
        .values()
        .iter()
        .all(|x| (x + lambda) * s.signum() > 1e-300 && (x + lambda).is_finite());
    if ok {
        Ok(())
    } else {
        Err(Error::ParameterDomain { lambda })
    }
}

fn check_pair(u: &SampledFunction, i: &SampledFunction) -> Result<()> {
    if u.grid() != i.grid() {
        return Err(Error::Config(
            "seed and integral live on different grids".into(),
        ));
    }
    Ok(())
}

/// `y = (I + lambda)/u^2`, the solution of `y' - 2 W A^q y = A^q`, with
/// the exact derivative `A^q - 2 (I + lambda) u'/u^3`.
pub fn bernoulli_solution(
    params: &ModelParams,
    u: &SampledFunction,
    i: &SampledFunction,
    lambda: f64,
) -> Result<SampledFunction> {
    check_pair(u, i)?;
    let brackets = susy::node_brackets(u);
    if !brackets.is_empty() {
        return Err(Error::NodeInDomain { brackets });
    }
    check_shift(lambda, i)?;
    let mut values = Vec::with_capacity(u.len());
    let mut derivs = Vec::with_capacity(u.len());
    for (k, a) in u.points().iter().enumerate() {
        let (v, d, s) = (u.values()[k], u.derivs()[k], i.values()[k] + lambda);
        values.push(s / (v * v));
        derivs.push(a.powf(params.q) - 2.0 * s * d / (v * v * v));
    }
    SampledFunction::new(u.grid().clone(), values, derivs)
}

/// Interior residual of the Bernoulli equation, checked through the
/// reciprocal `z = 1/y` (smooth at the interval ends, where `y` has double
/// poles): `z' + 2 A^q W z + A^q z^2 = 0`, with `z'` by finite differences.
pub fn bernoulli_residual(
    params: &ModelParams,
    w: &SuperpotentialField,
    y: &SampledFunction,
) -> Result<f64> {
    if w.grid() != y.grid() {
        return Err(Error::Config(
            "superpotential and y live on different grids".into(),
        ));
    }
    let z: Vec<f64> = y.values().iter().map(|v| 1.0 / v).collect();
    let dz = y.grid().differentiate(&z);
    let mut res = Vec::with_capacity(z.len());
    let mut scale = Vec::with_capacity(z.len());
    for (k, a) in y.points().iter().enumerate() {
        let aq = a.powf(params.q);
        let t = [dz[k], 2.0 * aq * w.values()[k] * z[k], aq * z[k] * z[k]];
        res.push(t[0] + t[1] + t[2]);
        scale.push(t[0].abs() + t[1].abs() + t[2].abs());
    }
    Ok(max_scaled_ratio(&res, &scale, y.grid().interior()))
}

/// `W^ = W + u^2/(I + lambda)` with
/// `W^' = W' + [2 u u' (I + lambda) - A^q u^4]/(I + lambda)^2`.
pub fn shifted_superpotential(
    params: &ModelParams,
    w: &SuperpotentialField,
    u: &SampledFunction,
    i: &SampledFunction,
    lambda: f64,
) -> Result<SuperpotentialField> {
    check_pair(u, i)?;
    if w.grid() != u.grid() {
        return Err(Error::Config(
            "superpotential and seed live on different grids".into(),
        ));
    }
    check_shift(lambda, i)?;
    let mut dw = Vec::with_capacity(u.len());
    let mut ddw = Vec::with_capacity(u.len());
    for (k, a) in u.points().iter().enumerate() {
        let (v, d, s) = (u.values()[k], u.derivs()[k], i.values()[k] + lambda);
        dw.push(v * v / s);
        ddw.push((2.0 * v * d * s - a.powf(params.q) * v.powi(4)) / (s * s));
    }
    Ok(w.shifted(&dw, &ddw))
}

/// The correction terms of the expanded family potential,
/// `V^+ - V = -4 A^(1+q) u u'/(I + lambda) + 2 A^(1+2q) u^4/(I + lambda)^2`.
fn expansion_terms(
    params: &ModelParams,
    u: &SampledFunction,
    i: &SampledFunction,
    lambda: f64,
) -> Vec<[f64; 2]> {
    let q = params.q;
    u.points()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let (v, d, s) = (u.values()[k], u.derivs()[k], i.values()[k] + lambda);
            [
                -4.0 * a.powf(1.0 + q) * v * d / s,
                2.0 * a.powf(1.0 + 2.0 * q) * v.powi(4) / (s * s),
            ]
        })
        .collect()
}

/// The family potential from the model potential and the seed alone. It is
/// smooth across nodes of `u`, so it is valid on the full grid.
pub fn family_potential_expansion(
    params: &ModelParams,
    u: &SampledFunction,
    i: &SampledFunction,
    lambda: f64,
) -> Result<SampledFunction> {
    check_pair(u, i)?;
    check_shift(lambda, i)?;
    let v = model::potential_samples(params, u.points())?;
    let values = expansion_terms(params, u, i, lambda)
        .iter()
        .zip(&v)
        .map(|(t, v)| v + t[0] + t[1])
        .collect();
    SampledFunction::from_values(u.grid().clone(), values)
}

/// Interior max of the term-scaled difference between `V^+` from `W^`
/// and `V^+` expanded around the model potential.
pub fn potential_route_residual(
    params: &ModelParams,
    w_hat: &SuperpotentialField,
    u: &SampledFunction,
    i: &SampledFunction,
    lambda: f64,
) -> Result<f64> {
    let direct = susy::riccati_potential(params, w_hat)?;
    route_difference(params, w_hat, &direct, u, i, lambda)
}

fn route_difference(
    params: &ModelParams,
    w_hat: &SuperpotentialField,
    direct: &SampledFunction,
    u: &SampledFunction,
    i: &SampledFunction,
    lambda: f64,
) -> Result<f64> {
    check_pair(u, i)?;
    if w_hat.grid() != u.grid() {
        return Err(Error::Config(
            "superpotential and seed live on different grids".into(),
        ));
    }
    let q = params.q;
    let v = model::potential_samples(params, u.points())?;
    let terms = expansion_terms(params, u, i, lambda);
    let mut diff = Vec::with_capacity(u.len());
    let mut scale = Vec::with_capacity(u.len());
    for (k, a) in u.points().iter().enumerate() {
        let wh = w_hat.values()[k];
        diff.push(direct.values()[k] - (v[k] + terms[k][0] + terms[k][1]));
        scale.push(
            (a.powf(1.0 + 2.0 * q) * wh * wh).abs()
                + (a.powf(1.0 + q) * w_hat.derivs()[k]).abs()
                + v[k].abs()
                + terms[k][0].abs()
                + terms[k][1].abs(),
        );
    }
    Ok(max_scaled_ratio(&diff, &scale, u.grid().interior()))
}

/// `V^+ = A^(1+2q) W^2 - A^(1+q) W^'`, cross-checked pointwise against the
/// expansion around the model potential.
pub fn family_potential(
    params: &ModelParams,
    w_hat: &SuperpotentialField,
    u: &SampledFunction,
    i: &SampledFunction,
    lambda: f64,
) -> Result<SampledFunction> {
    check_shift(lambda, i)?;
    let direct = susy::riccati_potential(params, w_hat)?;
    let worst = route_difference(params, w_hat, &direct, u, i, lambda)?;
    if !(worst <= POTENTIAL_ROUTE_TOL) {
        return Err(Error::InternalConsistency {
            check: "family potential routes",
            value: worst,
            threshold: POTENTIAL_ROUTE_TOL,
        });
    }
    Ok(direct)
}

/// `u^ = g(lambda) u/(I + lambda)` with
/// `u^' = g [u' (I + lambda) - A^q u^3]/(I + lambda)^2`.
pub fn family_wavefunction(
    params: &ModelParams,
    u: &SampledFunction,
    i: &SampledFunction,
    lambda: f64,
) -> Result<SampledFunction> {
    check_pair(u, i)?;
    let g = normalization(lambda)?;
    check_shift(lambda, i)?;
    let mut values = Vec::with_capacity(u.len());
    let mut derivs = Vec::with_capacity(u.len());
    for (k, a) in u.points().iter().enumerate() {
        let (v, d, s) = (u.values()[k], u.derivs()[k], i.values()[k] + lambda);
        values.push(g * v / s);
        derivs.push(g * (d * s - a.powf(params.q) * v * v * v) / (s * s));
    }
    SampledFunction::new(u.grid().clone(), values, derivs)
}

/// Interior max of the term-scaled difference between `V-` computed from
/// `W^` and from `W`; the two coincide for every `lambda`.
pub fn partner_invariance_residual(
    params: &ModelParams,
    w: &SuperpotentialField,
    w_hat: &SuperpotentialField,
) -> Result<f64> {
    let q = params.q;
    let mut diff = Vec::with_capacity(w.len());
    let mut scale = Vec::with_capacity(w.len());
    for (k, a) in w.points().iter().enumerate() {
        let s2 = a.powf(1.0 + 2.0 * q);
        let s1 = a.powf(1.0 + q);
        let t = [
            s2 * w_hat.values()[k].powi(2),
            s1 * w_hat.derivs()[k],
            s2 * w.values()[k].powi(2),
            s1 * w.derivs()[k],
        ];
        diff.push(t[0] + t[1] - t[2] - t[3]);
        scale.push(t.iter().map(|x| x.abs()).sum());
    }
    Ok(max_scaled_ratio(&diff, &scale, w.grid().interior()))
}

/// One member of the family on one node-free interval of the seed.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyMember {
    pub lambda_param: f64,
    /// Index range of the interval within the seed's grid.
    pub range: Range<usize>,
    pub w_hat: SuperpotentialField,
    pub v_hat: SampledFunction,
    pub u_hat: SampledFunction,
    pub i_gamma: SampledFunction,
}

impl FamilyMember {
    /// Builds the member on `seed[range]`; `i_gamma` is the cumulative
    /// integral of the whole seed.
    pub fn build(
        params: &ModelParams,
        seed: &SampledFunction,
        i_gamma: &SampledFunction,
        range: Range<usize>,
        lambda: f64,
        policy: LambdaPolicy,
    ) -> Result<Self> {
        check_pair(seed, i_gamma)?;
        check_lambda(lambda, i_gamma, policy)?;
        let u = seed.restrict(range.clone())?;
        let i = i_gamma.restrict(range.clone())?;
        let w = susy::superpotential_from_seed(params, &u)?;
        let w_hat = shifted_superpotential(params, &w, &u, &i, lambda)?;
        let v_hat = family_potential(params, &w_hat, &u, &i, lambda)?;
        let u_hat = family_wavefunction(params, &u, &i, lambda)?;
        Ok(Self {
            lambda_param: lambda,
            range,
            w_hat,
            v_hat,
            u_hat,
            i_gamma: i,
        })
    }
}

/// Members for every node-free interval of `seed`.
pub fn build_members(
    params: &ModelParams,
    seed: &SampledFunction,
    i_gamma: &SampledFunction,
    lambda: f64,
    policy: LambdaPolicy,
) -> Result<Vec<FamilyMember>> {
    susy::node_free_intervals(seed)
        .into_iter()
        .map(|r| FamilyMember::build(params, seed, i_gamma, r, lambda, policy))
        .collect()
}

/// Interior max of `|-A u^'' + q u^' + V^+ u^|` over the term scale.
pub fn verify_family_member(params: &ModelParams, member: &FamilyMember) -> Result<f64> {
    wavefunction_residual(params, &member.v_hat, &member.u_hat)
}

/// `-A f'' + q f' + V f` for a sampled potential, term-scaled, interior max.
pub fn wavefunction_residual(
    params: &ModelParams,
    potential: &SampledFunction,
    f: &SampledFunction,
) -> Result<f64> {
    if potential.grid() != f.grid() {
        return Err(Error::Config(
            "potential and function live on different grids".into(),
        ));
    }
    let f2 = f.second_derivative();
    let mut res = Vec::with_capacity(f.len());
    let mut scale = Vec::with_capacity(f.len());
    for (k, a) in f.points().iter().enumerate() {
        let t = [
            -a * f2[k],
            params.q * f.derivs()[k],
            potential.values()[k] * f.values()[k],
        ];
        res.push(t[0] + t[1] + t[2]);
        scale.push(t[0].abs() + t[1].abs() + t[2].abs());
    }
    Ok(max_scaled_ratio(&res, &scale, f.grid().interior()))
}
