//! Exact number-theoretic kernels: continued fractions, Dirichlet
//! approximation, and truncated estimators for the exponent of irrationality
//! and the Lagrange function.
//!
//! Values that decide anything (convergents, best approximations, ratio
//! comparisons against rationals) are computed exactly — for quadratic
//! irrationals through `QuadValue`, which compares a + b√D against rationals
//! by sign analysis and squaring. Logs and roots appear only in *report*
//! enclosures, produced by `interval`.

pub mod cf;
pub mod descriptor;
pub mod diagnostic;
pub mod dirichlet;
pub mod enumerate;
pub mod estimate;
pub mod interval;
pub mod minden;

pub use cf::{continued_fraction, convergents, CfExpansion};
pub use descriptor::{QuadValue, RealDescriptor};
pub use diagnostic::{s_membership_diagnostic, SDiagnostic};
pub use dirichlet::{dirichlet_approx, BestApproximation};
pub use enumerate::stern_brocot_unit;
pub use estimate::{lagrange_estimate, omega_estimate, OmegaEstimate};
pub use interval::Interval;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DioError {
    #[error("D must be a positive non-square, got {0}")]
    BadDiscriminant(num_bigint::BigInt),
    #[error("Q must be nonzero in (P + sqrt(D))/Q")]
    ZeroDenominator,
    #[error("partial quotients after the first must be positive")]
    BadQuotient,
    #[error("empty quotient list")]
    EmptyQuotients,
    #[error("estimators need Qmax >= 1")]
    BadQmax,
    #[error("enclosure precision exhausted at {0} bits")]
    PrecisionExhausted(u32),
    #[error("descriptor does not support this operation: {0}")]
    Unsupported(String),
}
