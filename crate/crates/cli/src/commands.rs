//! The three subcommands.

use rayon::prelude::*;
use wdw_core::family::{
    self, bernoulli_residual, bernoulli_solution, build_members, check_lambda, cumulative_integral,
    family_potential_expansion, family_wavefunction, partner_invariance_residual,
    potential_route_residual, shifted_superpotential, verify_family_member, wavefunction_residual,
    LambdaPolicy,
};
use wdw_core::model::{ordering_identity_relative, relative_residual};
use wdw_core::odesolve::{integrate, solve_basis};
use wdw_core::susy::{
    factorization_residual, node_free_intervals, partner_zero_mode_residual,
    riccati_closure_residual, seed_annihilation_residual, superpotential_from_seed,
};
use wdw_core::{ClosedFormCase, Grid, SampledFunction};

use crate::config::{RunConfig, SeedSpec};
use crate::error::CliError;
use crate::output::{self, Check, Table};

pub const SEED_RESIDUAL_TOL: f64 = 1e-5;
pub const ORDERING_TOL: f64 = 1e-6;
pub const FACTORIZATION_TOL: f64 = 1e-6;
pub const ANNIHILATION_TOL: f64 = 1e-6;
pub const RICCATI_TOL: f64 = 1e-5;
pub const BERNOULLI_TOL: f64 = 1e-6;
pub const INVARIANCE_TOL: f64 = 1e-6;
pub const MEMBER_TOL: f64 = 1e-5;

pub fn build_grid(cfg: &RunConfig) -> Result<Grid, CliError> {
    Ok(Grid::uniform(cfg.a_min, cfg.a_max, cfg.n_points)?)
}

pub fn build_seed(cfg: &RunConfig, grid: &Grid) -> Result<SampledFunction, CliError> {
    let p = &cfg.model;
    Ok(match cfg.seed {
        SeedSpec::Numeric { value, deriv } => integrate(p, grid, value, deriv)?,
        SeedSpec::Frobenius { c1, c2 } => solve_basis(p, grid)?
            .with_coefficients(c1, c2)
            .combination(),
        SeedSpec::ClosedForm { case, c1, c2 } => {
            ClosedFormCase::new(case, *p, (c1, c2))?.sample(grid)?
        }
    })
}

fn policy(cfg: &RunConfig) -> LambdaPolicy {
    LambdaPolicy {
        allow_negative: cfg.allow_negative_lambda,
    }
}

/// Rejects the whole run if any lambda is inadmissible, naming all of them.
fn check_lambdas(cfg: &RunConfig, i: &SampledFunction) -> Result<(), CliError> {
    let bad: Vec<String> = cfg
        .lambdas
        .iter()
        .filter_map(|&l| {
            check_lambda(l, i, policy(cfg))
                .err()
                .map(|e| format!("{l} ({e})"))
        })
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(CliError::LambdaDomain(format!(
            "inadmissible lambda: {}",
            bad.join("; ")
        )))
    }
}

fn fail_if_any(checks: &[Check]) -> Result<(), CliError> {
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "failed checks: {}",
            failed.join(", ")
        )))
    }
}

fn print_checks(checks: &[Check]) {
    for c in checks {
        eprintln!(
            "{} {:<40} {:.3e} (< {:.0e})",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.residual,
            c.threshold
        );
    }
}

pub fn cmd_solve(cfg: &RunConfig) -> Result<(), CliError> {
    let grid = build_grid(cfg)?;
    let u = build_seed(cfg, &grid)?;
    let mut t = Table::default();
    t.push("A", grid.points().to_vec());
    t.push("u", u.values().to_vec());
    t.push("du", u.derivs().to_vec());
    output::write_table(cfg, "solve", &t)
}

struct LambdaOutput {
    u_hat: Vec<f64>,
    v_hat: Vec<f64>,
    checks: Vec<Check>,
}

fn lambda_key(l: f64) -> String {
    format!("{l}")
}

fn family_for_lambda(
    cfg: &RunConfig,
    u: &SampledFunction,
    i: &SampledFunction,
    lambda: f64,
) -> Result<LambdaOutput, CliError> {
    let p = &cfg.model;
    let u_hat = family_wavefunction(p, u, i, lambda)?;
    let v_hat = family_potential_expansion(p, u, i, lambda)?;
    let members = build_members(p, u, i, lambda, policy(cfg))?;
    let key = lambda_key(lambda);
    let mut member_res = 0.0f64;
    let mut route_res = 0.0f64;
    for m in &members {
        member_res = member_res.max(verify_family_member(p, m)?);
        let us = u.restrict(m.range.clone())?;
        route_res = route_res.max(potential_route_residual(
            p, &m.w_hat, &us, &m.i_gamma, lambda,
        )?);
    }
    let full = wavefunction_residual(p, &v_hat, &u_hat)?;
    Ok(LambdaOutput {
        u_hat: u_hat.values().to_vec(),
        v_hat: v_hat.values().to_vec(),
        checks: vec![
            Check::new(
                format!("family_member[lambda={key}]"),
                member_res,
                MEMBER_TOL,
            ),
            Check::new(
                format!("potential_routes[lambda={key}]"),
                route_res,
                family::POTENTIAL_ROUTE_TOL,
            ),
            Check::new(format!("family_full_grid[lambda={key}]"), full, MEMBER_TOL),
        ],
    })
}

pub fn cmd_family(cfg: &RunConfig) -> Result<(), CliError> {
    let grid = build_grid(cfg)?;
    let u = build_seed(cfg, &grid)?;
    let i = cumulative_integral(&cfg.model, &u)?;
    check_lambdas(cfg, &i)?;
    let outs: Vec<LambdaOutput> = cfg
        .lambdas
        .par_iter()
        .map(|&l| family_for_lambda(cfg, &u, &i, l))
        .collect::<Result<_, _>>()?;
    let mut t = Table::default();
    t.push("A", grid.points().to_vec());
    t.push("u", u.values().to_vec());
    t.push("I_gamma", i.values().to_vec());
    let mut checks = Vec::new();
    for (l, o) in cfg.lambdas.iter().zip(outs) {
        let key = lambda_key(*l);
        t.push(format!("u_hat[lambda={key}]"), o.u_hat);
        t.push(format!("V_hat[lambda={key}]"), o.v_hat);
        checks.extend(o.checks);
    }
    output::write_table(cfg, "family", &t)?;
    match &cfg.output_path {
        Some(p) => output::write_report(Some(&output::sidecar_path(p)), cfg, &checks)?,
        None => print_checks(&checks),
    }
    fail_if_any(&checks)
}

fn smooth_probes(grid: &Grid) -> Result<Vec<SampledFunction>, CliError> {
    Ok(vec![
        SampledFunction::from_fn(grid, |a| (2.0 + (3.0 * a).sin(), 3.0 * (3.0 * a).cos()))?,
        SampledFunction::from_fn(grid, |a| {
            (a * a * (-a).exp(), (2.0 * a - a * a) * (-a).exp())
        })?,
        SampledFunction::from_fn(grid, |a| {
            ((5.0 * a + 0.3).cos(), -5.0 * (5.0 * a + 0.3).sin())
        })?,
    ])
}

/// Alternating perturbation of size `1e-3` used by the negative control.
fn corruption(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| if k % 2 == 0 { 1e-3 } else { -1e-3 })
        .collect()
}

pub fn verification_checks(cfg: &RunConfig) -> Result<Vec<Check>, CliError> {
    let p = &cfg.model;
    let grid = build_grid(cfg)?;
    let u = build_seed(cfg, &grid)?;
    let i = cumulative_integral(p, &u)?;
    check_lambdas(cfg, &i)?;
    let intervals = node_free_intervals(&u);
    if intervals.is_empty() {
        return Err(CliError::Config(
            "the seed has no node-free interval of usable length".into(),
        ));
    }

    let mut checks = vec![
        Check::new(
            "seed_residual",
            relative_residual(p, &u)?,
            SEED_RESIDUAL_TOL,
        ),
        Check::new(
            "ordering_identity",
            ordering_identity_relative(p, &u),
            ORDERING_TOL,
        ),
    ];
    let (mut fact, mut ann, mut zero, mut ric) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for r in &intervals {
        let us = u.restrict(r.clone())?;
        let w = superpotential_from_seed(p, &us)?;
        for f in smooth_probes(us.grid())? {
            fact = fact.max(factorization_residual(p, &w, &f)?);
        }
        ann = ann.max(seed_annihilation_residual(p, &w, &us)?);
        zero = zero.max(partner_zero_mode_residual(p, &w, &us)?);
        ric = ric.max(riccati_closure_residual(p, &w)?);
    }
    checks.push(Check::new(
        "factorization_identity",
        fact,
        FACTORIZATION_TOL,
    ));
    checks.push(Check::new("seed_annihilation", ann, ANNIHILATION_TOL));
    checks.push(Check::new("partner_zero_mode", zero, ANNIHILATION_TOL));
    checks.push(Check::new("riccati_closure", ric, RICCATI_TOL));

    let per_lambda: Vec<Vec<Check>> = cfg
        .lambdas
        .par_iter()
        .map(|&l| -> Result<Vec<Check>, CliError> {
            let (mut bern, mut route, mut inv, mut member) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
            for r in &intervals {
                let us = u.restrict(r.clone())?;
                let is = i.restrict(r.clone())?;
                let w = superpotential_from_seed(p, &us)?;
                let y = bernoulli_solution(p, &us, &is, l)?;
                bern = bern.max(bernoulli_residual(p, &w, &y)?);
                let mut w_hat = shifted_superpotential(p, &w, &us, &is, l)?;
                if cfg.corrupt_w_hat {
                    w_hat = w_hat.shifted(&corruption(us.len()), &vec![0.0; us.len()]);
                }
                route = route.max(potential_route_residual(p, &w_hat, &us, &is, l)?);
                inv = inv.max(partner_invariance_residual(p, &w, &w_hat)?);
                if !cfg.corrupt_w_hat {
                    let m = family::FamilyMember::build(p, &u, &i, r.clone(), l, policy(cfg))?;
                    member = member.max(verify_family_member(p, &m)?);
                }
            }
            let key = lambda_key(l);
            let mut out = vec![
                Check::new(format!("bernoulli[lambda={key}]"), bern, BERNOULLI_TOL),
                Check::new(
                    format!("potential_routes[lambda={key}]"),
                    route,
                    family::POTENTIAL_ROUTE_TOL,
                ),
                Check::new(
                    format!("partner_invariance[lambda={key}]"),
                    inv,
                    INVARIANCE_TOL,
                ),
            ];
            if !cfg.corrupt_w_hat {
                out.push(Check::new(
                    format!("family_member[lambda={key}]"),
                    member,
                    MEMBER_TOL,
                ));
            }
            Ok(out)
        })
        .collect::<Result<_, _>>()?;
    checks.extend(per_lambda.into_iter().flatten());
    Ok(checks)
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<(), CliError> {
    let checks = verification_checks(cfg)?;
    output::write_report(cfg.output_path.as_deref(), cfg, &checks)?;
    if cfg.output_path.is_some() {
        print_checks(&checks);
    }
    fail_if_any(&checks)
}
