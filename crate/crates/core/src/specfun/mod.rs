//! Special functions used by the closed-form solutions.

mod bessel;
mod gamma;
mod hyp1f1;

pub use bessel::{bessel, bessel_derivative, bessel_with_derivative, Bessel, BesselKind};
pub use gamma::{cos_pi, gamma, rgamma, sin_pi};
pub use hyp1f1::{hyp1f1, hyp1f1_complex, hyp1f1_with_derivative};
