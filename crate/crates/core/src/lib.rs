//! Supersymmetric factorization of the minisuperspace Wheeler-DeWitt equation
//! for a barotropic FRW universe with cosmological constant and arbitrary
//! factor ordering, and the strictly isospectral one-parameter family built
//! from the general Riccati solution.

// `!(x > y)` is used on purpose so that NaN lands in the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod closed_forms;
pub mod error;
pub mod family;
pub mod model;
pub mod odesolve;
pub mod sampled;
pub mod specfun;
pub mod susy;

pub use closed_forms::{ClosedFormCase, ClosedFormKind};
pub use error::{Error, Result};
pub use family::{FamilyMember, LambdaPolicy};
pub use model::ModelParams;
pub use odesolve::SolutionBasis;
pub use sampled::{Grid, SampledFunction};
pub use susy::SuperpotentialField;
