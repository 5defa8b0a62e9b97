use thiserror::Error;

/// Errors produced anywhere in the core pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("argument outside the domain of {what}: {detail}")]
    Domain { what: &'static str, detail: String },

    #[error("result out of floating-point range in {0}")]
    NumericRange(&'static str),

    #[error("integration failed after A = {last_good_a}: {reason}")]
    IntegrationFailure { last_good_a: f64, reason: String },

    #[error("potential too singular at the origin: {0}")]
    TooSingular(String),

    #[error(
        "indicial roots are degenerate ({r1} vs {r2}); logarithmic solutions are not supported"
    )]
    DegenerateIndicial { r1: f64, r2: f64 },

    #[error("seed has nodes inside the interval (sign changes between grid indices {brackets:?})")]
    NodeInDomain { brackets: Vec<(usize, usize)> },

    #[error("pole of 1F1: alpha = {0} is a non-positive integer")]
    Pole(f64),

    #[error("degenerate solution basis: {0}")]
    DegenerateBasis(String),

    #[error("I + lambda vanishes or changes sign on the grid (lambda = {lambda})")]
    ParameterDomain { lambda: f64 },

    #[error("g(lambda) = sqrt(lambda (lambda + 1)) is not real for lambda = {0}")]
    GDomain(f64),

    #[error("lambda = {0} is outside the admissible family range")]
    LambdaDomain(f64),

    #[error("integrability requires q > -1 (got q = {0})")]
    Integrability(f64),

    #[error("imaginary Bessel order (mu^2 = {0}); use the numeric solver for this case")]
    ImaginaryOrder(f64),

    #[error("internal consistency check {check} failed: {value:.3e} > {threshold:.1e}")]
    InternalConsistency {
        check: &'static str,
        value: f64,
        threshold: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
