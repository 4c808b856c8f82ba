//! Porosity certificates: (β, r₀, witness, oracle) bundles testifying that a
//! set is uniformly β-porous, and their verification.

use super::{Answer, SetOracle};
use crate::geom::rational::Rational;
use crate::geom::{shrink_leq, FormalBall, RationalPoint};
use num_traits::{Signed, Zero};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("queried radius {r} exceeds the certificate scale r0 = {r0}")]
    RadiusAboveScale { r: Rational, r0: Rational },
    #[error("zoom recursion exceeded depth cap {0}")]
    DepthExceeded(usize),
    #[error("witness expects a different dimension")]
    WrongDimension,
    #[error("no witness ball exists for this query: {0}")]
    NoWitness(String),
}

pub type WitnessFn =
    Arc<dyn Fn(&FormalBall) -> Result<RationalPoint, WitnessError> + Send + Sync>;

/// A uniform-porosity certificate for the set described by `oracle`:
/// for every ball B(x, r) with r ≤ r₀, `witness` returns y with
/// (y, β·r) ≤ₛ (x, r) and B°(y, β·r) disjoint from the set.
#[derive(Clone)]
pub struct PorosityCertificate {
    beta: Rational,
    r0: Rational,
    oracle: Arc<dyn SetOracle>,
    witness: WitnessFn,
}

impl PorosityCertificate {
    pub fn new(beta: Rational, r0: Rational, oracle: Arc<dyn SetOracle>, witness: WitnessFn) -> Self {
        Self {
            beta,
            r0,
            oracle,
            witness,
        }
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn r0(&self) -> &Rational {
        &self.r0
    }

    pub fn oracle(&self) -> &Arc<dyn SetOracle> {
        &self.oracle
    }

    pub fn witness(&self, ball: &FormalBall) -> Result<RationalPoint, WitnessError> {
        if ball.radius() > &self.r0 {
            return Err(WitnessError::RadiusAboveScale {
                r: ball.radius().clone(),
                r0: self.r0.clone(),
            });
        }
        (self.witness)(ball)
    }

    /// A certificate for the same set with a different claimed β (used to
    /// exhibit verification failures of too-greedy porosity constants).
    pub fn with_beta(&self, beta: Rational) -> Self {
        Self {
            beta,
            ..self.clone()
        }
    }
}

impl std::fmt::Debug for PorosityCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PorosityCertificate")
            .field("beta", &self.beta.to_string())
            .field("r0", &self.r0.to_string())
            .field("set", &self.oracle.tag())
            .finish()
    }
}

/// One verification failure: which ball, and which Definition clause broke.
#[derive(Debug, Clone)]
pub struct CertificateFailure {
    pub ball: FormalBall,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct CertificateReport {
    pub checked: usize,
    pub failures: Vec<CertificateFailure>,
}

impl CertificateReport {
    pub fn all_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check both clauses of the uniform-porosity definition on each sample
/// ball: (y, βr) ≤ₛ (x, r), and B°(y, βr) disjoint from the certified set.
pub fn verify_certificate(
    cert: &PorosityCertificate,
    samples: &[FormalBall],
) -> CertificateReport {
    let mut report = CertificateReport::default();
    for ball in samples {
        report.checked += 1;
        let y = match cert.witness(ball) {
            Ok(y) => y,
            Err(e) => {
                report.failures.push(CertificateFailure {
                    ball: ball.clone(),
                    detail: format!("witness failed: {e}"),
                });
                continue;
            }
        };
        let witness_ball = match FormalBall::new(y, cert.beta() * ball.radius()) {
            Ok(b) => b,
            Err(e) => {
                report.failures.push(CertificateFailure {
                    ball: ball.clone(),
                    detail: format!("degenerate witness ball: {e}"),
                });
                continue;
            }
        };
        match shrink_leq(&witness_ball, ball) {
            Ok(true) => {}
            Ok(false) => {
                report.failures.push(CertificateFailure {
                    ball: ball.clone(),
                    detail: format!("{witness_ball} does not shrink into {ball}"),
                });
                continue;
            }
            Err(e) => {
                report.failures.push(CertificateFailure {
                    ball: ball.clone(),
                    detail: e.to_string(),
                });
                continue;
            }
        }
        match cert.oracle().ball_disjoint(&witness_ball, false) {
            Answer::Yes => {}
            Answer::No => report.failures.push(CertificateFailure {
                ball: ball.clone(),
                detail: format!("open ball of {witness_ball} meets the set"),
            }),
            Answer::Unknown => report.failures.push(CertificateFailure {
                ball: ball.clone(),
                detail: format!("oracle cannot decide disjointness for {witness_ball}"),
            }),
        }
    }
    report
}

/// Porosity is affine-invariant: a certificate for E yields one for a·E + b
/// (d = 1), with r₀ scaled by |a| and the witness conjugated by the map.
pub fn affine_certificate(
    cert: &PorosityCertificate,
    a: Rational,
    b: Rational,
) -> PorosityCertificate {
    assert!(!a.is_zero(), "affine scale must be nonzero");
    let oracle = Arc::new(super::oracles::AffineImage::new(
        cert.oracle().clone(),
        a.clone(),
        b.clone(),
    ));
    let inner = cert.clone();
    let (fa, fb) = (a.clone(), b.clone());
    let witness: WitnessFn = Arc::new(move |ball: &FormalBall| {
        let x = ball.center().as_scalar().ok_or(WitnessError::WrongDimension)?;
        let pre_center = (x - &fb) / &fa;
        let pre_radius = ball.radius() / fa.abs();
        let pre = FormalBall::new(RationalPoint::scalar(pre_center), pre_radius)
            .map_err(|e| WitnessError::NoWitness(e.to_string()))?;
        let y = inner.witness(&pre)?;
        let y = y.as_scalar().ok_or(WitnessError::WrongDimension)?;
        Ok(RationalPoint::scalar(&fa * y + &fb))
    });
    PorosityCertificate::new(
        cert.beta().clone(),
        cert.r0() * a.abs(),
        oracle,
        witness,
    )
}

/// Nearest-gap witness certificate for a finite point set E ⊂ ℚ (d = 1).
/// Validity of the (β, r₀) pair is established by the verifier, not assumed.
pub fn finite_set_certificate(
    points: Vec<Rational>,
    beta: Rational,
    r0: Rational,
) -> PorosityCertificate {
    let mut sorted = points.clone();
    sorted.sort();
    let oracle = Arc::new(super::oracles::FinitePointSet::new_1d(points));
    let pts = Arc::new(sorted);
    let wbeta = beta.clone();
    let witness: WitnessFn = Arc::new(move |ball: &FormalBall| {
        let x = ball.center().as_scalar().ok_or(WitnessError::WrongDimension)?;
        let r = ball.radius();
        let reach = r - &(&wbeta * r); // |y - x| ≤ (1-β)r keeps (y, βr) ≤ₛ (x, r)
        let radius = &wbeta * r;
        // candidates: both extremes, the center, and clipped gap midpoints
        let mut candidates = vec![x - &reach, x + &reach, x.clone()];
        for w in pts.windows(2) {
            let mid = (&w[0] + &w[1]) / crate::geom::rational::rat(2, 1);
            candidates.push(clamp(&mid, &(x - &reach), &(x + &reach)));
        }
        candidates
            .into_iter()
            .find(|y| pts.iter().all(|e| (e - y).abs() >= radius))
            .map(RationalPoint::scalar)
            .ok_or_else(|| WitnessError::NoWitness("no gap candidate clears the set".into()))
    });
    PorosityCertificate::new(beta, r0, oracle, witness)
}

fn clamp(x: &Rational, lo: &Rational, hi: &Rational) -> Rational {
    if x < lo {
        lo.clone()
    } else if x > hi {
        hi.clone()
    } else {
        x.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational::rat;
    use crate::porosity::cantor::cantor_certificate;

    fn ball1(c: Rational, r: Rational) -> FormalBall {
        FormalBall::new(RationalPoint::scalar(c), r).unwrap()
    }

    #[test]
    fn cantor_certificate_on_triadic_grid() {
        let cert = cantor_certificate();
        let mut samples = Vec::new();
        for k in -27..=54i64 {
            for r in [rat(1, 27), rat(1, 9), rat(1, 3), rat(1, 1)] {
                samples.push(ball1(rat(k, 27), r));
            }
        }
        let report = verify_certificate(&cert, &samples);
        assert!(report.all_valid(), "failures: {:?}", report.failures);
    }

    #[test]
    fn degenerate_witness_fails_verification() {
        // witness ≡ center for E = {0} with β = 1/2 fails on B(0, 1)
        let oracle = Arc::new(super::super::oracles::FinitePointSet::new_1d(vec![rat(
            0, 1,
        )]));
        let witness: WitnessFn =
            Arc::new(|ball: &FormalBall| Ok(ball.center().clone()));
        let cert = PorosityCertificate::new(rat(1, 2), rat(1, 1), oracle, witness);
        let report = verify_certificate(&cert, &[ball1(rat(0, 1), rat(1, 1))]);
        assert_eq!(report.failures.len(), 1);
    }

    #[test]
    fn finite_set_certificate_valid_at_quarter() {
        let cert = finite_set_certificate(vec![rat(0, 1), rat(1, 1)], rat(1, 4), rat(1, 4));
        let mut samples = Vec::new();
        for k in -8..=16i64 {
            for r in [rat(1, 16), rat(1, 8), rat(1, 4)] {
                samples.push(ball1(rat(k, 8), r));
            }
        }
        let report = verify_certificate(&cert, &samples);
        assert!(report.all_valid(), "failures: {:?}", report.failures);
    }

    #[test]
    fn cantor_certificate_on_random_balls() {
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let cert = cantor_certificate();
        let mut samples = Vec::with_capacity(10_000);
        for _ in 0..10_000 {
            let den = rng.gen_range(1..=600i64);
            let num = rng.gen_range(-2 * den..=3 * den);
            let rden = rng.gen_range(2..=600i64);
            let rnum = rng.gen_range(1..=rden);
            samples.push(ball1(rat(num, den), rat(rnum, rden)));
        }
        let report = verify_certificate(&cert, &samples);
        assert!(
            report.all_valid(),
            "{} failures, first: {:?}",
            report.failures.len(),
            report.failures.first()
        );
    }

    #[test]
    fn shifted_cantor_certificate_valid() {
        let cert = affine_certificate(&cantor_certificate(), rat(1, 1), rat(2, 1));
        let mut samples = Vec::new();
        for k in 54..=81i64 {
            for r in [rat(1, 27), rat(1, 3), rat(1, 1)] {
                samples.push(ball1(rat(k, 27), r));
            }
        }
        let report = verify_certificate(&cert, &samples);
        assert!(report.all_valid(), "failures: {:?}", report.failures);
    }
}
