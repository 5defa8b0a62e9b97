//! Command-line flags and their resolution into a [`RunConfig`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use wdw_core::{ClosedFormKind, ModelParams};

use crate::error::CliError;

pub const FIG1_LAMBDAS: [f64; 5] = [1.0, 11.0, 61.0, 161.0, 411.0];

#[derive(Debug, Parser)]
#[command(
    name = "wdw",
    version,
    about = "Wheeler-DeWitt solutions and their isospectral families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the WDW equation and write A, u, du.
    Solve(CommonArgs),
    /// Build the isospectral family for one or more lambda values.
    Family(FamilyArgs),
    /// Run the invariant checks and write a JSON report.
    Verify(FamilyArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Barotropic index gamma.
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    /// Curvature index (-1, 0 or 1).
    #[arg(long, allow_negative_numbers = true)]
    pub kappa: Option<i8>,
    /// Cosmological constant.
    #[arg(long, allow_negative_numbers = true)]
    pub cc: Option<f64>,
    /// Matter coupling pi G M_gamma.
    #[arg(long, allow_negative_numbers = true)]
    pub matter: Option<f64>,
    /// Set the matter coupling so that m^2 = -cc/3 + 8 matter/3 takes this value (gamma = -1 only).
    #[arg(long, allow_negative_numbers = true, conflicts_with = "matter")]
    pub msq: Option<f64>,
    /// Factor-ordering parameter.
    #[arg(long, allow_negative_numbers = true)]
    pub q: Option<f64>,

    #[arg(long = "a-min")]
    pub a_min: Option<f64>,
    #[arg(long = "a-max")]
    pub a_max: Option<f64>,
    /// Number of grid points.
    #[arg(long)]
    pub n: Option<usize>,

    /// Use a closed-form seed; the case is detected from the model unless named.
    #[arg(long = "closed-form", num_args = 0..=1, value_name = "CASE")]
    pub closed_form: Option<Option<String>>,
    /// First superposition coefficient (closed form, or the Frobenius basis without --closed-form).
    #[arg(long, allow_negative_numbers = true)]
    pub c1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c2: Option<f64>,
    /// u at a-min for a numerically integrated seed.
    #[arg(long = "init-value", allow_negative_numbers = true)]
    pub init_value: Option<f64>,
    /// u' at a-min for a numerically integrated seed.
    #[arg(long = "init-deriv", allow_negative_numbers = true)]
    pub init_deriv: Option<f64>,

    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Preset: gamma = -1, kappa = 1, q = 1, m^2 = 4, c1 = c2 = 1 on [0.6, 3].
    #[arg(long)]
    pub fig1: bool,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Family parameter; repeat for a sweep.
    #[arg(long = "lam", allow_negative_numbers = true)]
    pub lam: Vec<f64>,
    /// Accept lambda <= -1 - I(a-max).
    #[arg(long = "allow-negative-lambda")]
    pub allow_negative_lambda: bool,
    /// Perturb the shifted superpotential (negative control for verify).
    #[arg(long = "corrupt-w-hat", hide = true)]
    pub corrupt_w_hat: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SeedSpec {
    /// Integrate from `(value, deriv)` at `a_min`.
    Numeric { value: f64, deriv: f64 },
    /// `c1 u1 + c2 u2` of the Frobenius basis.
    Frobenius { c1: f64, c2: f64 },
    ClosedForm {
        case: ClosedFormKind,
        c1: f64,
        c2: f64,
    },
}

impl std::fmt::Display for SeedSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Numeric { value, deriv } => write!(f, "numeric(u={value},du={deriv})"),
            Self::Frobenius { c1, c2 } => write!(f, "frobenius(c1={c1},c2={c2})"),
            Self::ClosedForm { case, c1, c2 } => write!(f, "{case}(c1={c1},c2={c2})"),
        }
    }
}

/// A fully resolved run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub model: ModelParams,
    pub a_min: f64,
    pub a_max: f64,
    pub n_points: usize,
    pub lambdas: Vec<f64>,
    pub seed: SeedSpec,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub allow_negative_lambda: bool,
    #[serde(skip)]
    pub corrupt_w_hat: bool,
}

impl RunConfig {
    pub fn from_common(args: &CommonArgs) -> Result<Self, CliError> {
        let fig1 = args.fig1;
        let pick =
            |v: Option<f64>, fig: f64, plain: f64| v.unwrap_or(if fig1 { fig } else { plain });
        let gamma = pick(args.gamma, -1.0, 0.0);
        let kappa = args.kappa.unwrap_or(if fig1 { 1 } else { 0 });
        let cc = pick(args.cc, 0.0, 0.0);
        let q = pick(args.q, 1.0, 0.0);
        let msq = args.msq.or(if fig1 && args.matter.is_none() {
            Some(4.0)
        } else {
            None
        });
        let matter = match msq {
            Some(m) => {
                if gamma != -1.0 {
                    return Err(CliError::Config(format!(
                        "--msq applies to gamma = -1 only (gamma = {gamma})"
                    )));
                }
                let matter = ModelParams::matter_for_msq(cc, m);
                if matter < 0.0 {
                    return Err(CliError::Config(format!(
                        "m^2 = {m} with cc = {cc} needs negative matter coupling {matter}"
                    )));
                }
                matter
            }
            None => args.matter.unwrap_or(0.0),
        };
        let model = ModelParams::new(gamma, kappa, cc, matter, q)?;

        let a_min = pick(args.a_min, 0.6, 0.5);
        let a_max = pick(args.a_max, 3.0, 2.0);
        let n_points = args.n.unwrap_or(if fig1 { 4000 } else { 400 });
        if !(a_min > 0.0 && a_max > a_min && a_max.is_finite()) {
            return Err(CliError::Config(format!(
                "need 0 < a-min < a-max, got [{a_min}, {a_max}]"
            )));
        }
        if n_points < wdw_core::sampled::MIN_GRID_POINTS {
            return Err(CliError::Config(format!(
                "need at least {} grid points, got {n_points}",
                wdw_core::sampled::MIN_GRID_POINTS
            )));
        }

        let init_given = args.init_value.is_some() || args.init_deriv.is_some();
        let coeffs_given = args.c1.is_some() || args.c2.is_some();
        let closed = args
            .closed_form
            .clone()
            .or(if fig1 && !init_given && !coeffs_given {
                Some(None)
            } else {
                None
            });
        let seed = if let Some(name) = closed {
            if init_given {
                return Err(CliError::Config(
                    "--init-value/--init-deriv conflict with --closed-form".into(),
                ));
            }
            let (c1, c2) = if fig1 {
                (args.c1.unwrap_or(1.0), args.c2.unwrap_or(1.0))
            } else {
                (args.c1.unwrap_or(1.0), args.c2.unwrap_or(0.0))
            };
            let case = match name {
                Some(n) => {
                    let kind: ClosedFormKind = n.parse()?;
                    wdw_core::ClosedFormCase::new(kind, model, (c1, c2))?.kind
                }
                None => wdw_core::ClosedFormCase::detect(model, (c1, c2))?.kind,
            };
            SeedSpec::ClosedForm { case, c1, c2 }
        } else if coeffs_given {
            if init_given {
                return Err(CliError::Config(
                    "--init-value/--init-deriv conflict with --c1/--c2".into(),
                ));
            }
            SeedSpec::Frobenius {
                c1: args.c1.unwrap_or(0.0),
                c2: args.c2.unwrap_or(0.0),
            }
        } else {
            SeedSpec::Numeric {
                value: args.init_value.unwrap_or(1.0),
                deriv: args.init_deriv.unwrap_or(0.0),
            }
        };

        Ok(Self {
            model,
            a_min,
            a_max,
            n_points,
            lambdas: if fig1 {
                FIG1_LAMBDAS.to_vec()
            } else {
                vec![1.0]
            },
            seed,
            output_path: args.out.clone(),
            format: args.format,
            allow_negative_lambda: false,
            corrupt_w_hat: false,
        })
    }

    pub fn from_family(args: &FamilyArgs) -> Result<Self, CliError> {
        let mut cfg = Self::from_common(&args.common)?;
        if !args.lam.is_empty() {
            cfg.lambdas = args.lam.clone();
        }
        if let Some(bad) = cfg.lambdas.iter().find(|l| !l.is_finite()) {
            return Err(CliError::Config(format!(
                "lambda must be finite, got {bad}"
            )));
        }
        cfg.allow_negative_lambda = args.allow_negative_lambda;
        cfg.corrupt_w_hat = args.corrupt_w_hat;
        Ok(cfg)
    }

    /// `key=value` pairs written as comment lines ahead of the data.
    pub fn provenance(&self, command: &str) -> Vec<(String, String)> {
        let m = &self.model;
        let lambdas: Vec<String> = self.lambdas.iter().map(|l| l.to_string()).collect();
        vec![
            ("version".into(), env!("CARGO_PKG_VERSION").into()),
            ("command".into(), command.into()),
            ("gamma".into(), m.gamma.to_string()),
            ("kappa".into(), m.kappa.to_string()),
            ("cc".into(), m.cc.to_string()),
            ("matter".into(), m.matter.to_string()),
            ("msq".into(), m.msq().to_string()),
            ("q".into(), m.q.to_string()),
            ("a_min".into(), self.a_min.to_string()),
            ("a_max".into(), self.a_max.to_string()),
            ("n".into(), self.n_points.to_string()),
            ("seed".into(), self.seed.to_string()),
            ("lambdas".into(), lambdas.join(" ")),
            (
                "allow_negative_lambda".into(),
                self.allow_negative_lambda.to_string(),
            ),
        ]
    }
}
