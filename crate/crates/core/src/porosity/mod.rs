//! Set oracles, porosity certificates, and the K_m sampler.

mod cantor;
mod certificate;
mod km;
mod oracles;
pub mod registry;

pub use cantor::{cantor_certificate, cantor_oracle, cantor_witness, CantorSet};
pub use certificate::{
    affine_certificate, finite_set_certificate, verify_certificate, CertificateReport,
    PorosityCertificate, WitnessError,
};
pub use km::{km_estimate, KmError, KmReport};
pub use oracles::{
    AffineImage, CoCountableComplement, Complement, FinitePointSet, UnionOracle,
};

use crate::geom::{FormalBall, RationalPoint};

/// Three-valued answer of a sound oracle: never wrong, possibly unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl Answer {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }
}

/// Decision interface for a target set T ⊆ ℚ^d (conceptually ⊆ ℝ^d with the
/// oracle answering exactly on rational data).
///
/// Soundness contract: a Yes/No answer is always correct; Unknown is allowed
/// whenever the oracle cannot decide.
pub trait SetOracle: Send + Sync {
    /// Registry name / description for evidence strings.
    fn tag(&self) -> String;

    fn dimension(&self) -> usize;

    /// Is p ∈ T?
    fn point_member(&self, p: &RationalPoint) -> Answer;

    /// Is B ∩ T = ∅? `closed` selects the closed or open ball of the pair.
    fn ball_disjoint(&self, b: &FormalBall, closed: bool) -> Answer;

    /// Is the closed ball of B contained in T?
    fn ball_inside(&self, b: &FormalBall) -> Answer;

    /// For co-countable targets: the enumerated prefix of the countable
    /// exceptional set X ∖ T.
    fn exceptional_points(&self) -> Option<Vec<RationalPoint>> {
        None
    }
}
