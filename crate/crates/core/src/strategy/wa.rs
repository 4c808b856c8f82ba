//! Alice's BMS strategy for the well-approximable set L(x) ≤ ε, with
//! β = (ε/3)^{d+1}: approach a fresh Dirichlet rational of Bob's current
//! ball, separate from it, then wait until Bob's radius is small enough that
//! the next Dirichlet step must produce a new rational — repeat.
//!
//! Stages, with Bob at B(x, r) and e = any coordinate direction:
//!
//! - APPROACH: Q = the largest integer with r^d·Q^{d+1} ≤ 2^d·(3/ε)^{d²}
//!   (the exact-power form of r ≤ 2(3/ε)^d/Q^{1+1/d}); p/q from the
//!   Dirichlet kernel at Q. If ‖x − p/q‖ ≤ r/2, play (p/q, βr) — the chain
//!   β^d r^d q^{d+1} ≤ (2ε/3)^d ≤ ε^d makes the played ball land inside
//!   B(p/q, ε/q^{1+1/d}). Otherwise verify (‖x − p/q‖ + r)^d·q^{d+1} ≤ ε^d
//!   exactly and play concentric; with an integer Q the verification can
//!   fail marginally, in which case the strategy defers one round (r shrinks
//!   by β per round, restoring the paper's real-Q slack).
//! - SEPARATE: shift maximally away from the approached rational,
//!   y = x + (1−β)r·e; then dist(y, p/q) ≥ (1−β)r > βr, so p/q is formally
//!   excluded from the played ball and stays excluded down the chain. The
//!   degenerate x = p/q starts with a quarter-radius sidestep (β < 1/4
//!   always, since β ≤ (1/3)^{d+1}).
//! - WAIT: concentric dummies until r < 2(3/ε)^w·(q·dist(B, p/q))^{d+1},
//!   with w = d by default (configurable to the printed 3).

use super::{Strategy, StrategyError, StrategyMove};
use crate::dio::dirichlet::dirichlet_approx;
use crate::game::{GameKind, GameState};
use crate::geom::rational::{floor_nth_root, pow_i, rat, Rational};
use crate::geom::{dist, FormalBall, RationalPoint};
use num_bigint::BigInt;
use num_traits::{One, Signed};

#[derive(Debug, Clone)]
pub struct ApproachRecord {
    pub point: RationalPoint,
    pub q: BigInt,
    pub case1: bool,
    /// Bob's ball the approach responded to.
    pub bob_ball: FormalBall,
    /// The ball Alice played on the approach.
    pub played: FormalBall,
}

enum Stage {
    Approach,
    Separate { target: RationalPoint, q: BigInt },
    Wait { target: RationalPoint, q: BigInt },
}

pub struct WaAlice {
    epsilon: Rational,
    dim: usize,
    wait_exp: u32,
    beta: Rational,
    stage: Stage,
    approaches: Vec<ApproachRecord>,
    name: String,
    /// r^d·Q^{d+1} ≤ approach_bound defines Q; approach_bound = 2^d(3/ε)^{d²}.
    approach_bound: Rational,
}

/// β the strategy needs the BMS game to be dealt: (ε/3)^{d+1}.
pub fn wa_beta(epsilon: &Rational, dim: usize) -> Rational {
    pow_i(&(epsilon / rat(3, 1)), (dim + 1) as i64)
}

pub fn alice_wa(
    epsilon: Rational,
    dim: usize,
    wait_exp: Option<u32>,
) -> Result<WaAlice, StrategyError> {
    if !epsilon.is_positive() || epsilon >= Rational::one() {
        return Err(StrategyError::BadParameter(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    if dim == 0 {
        return Err(StrategyError::BadParameter("dimension must be positive".into()));
    }
    let beta = wa_beta(&epsilon, dim);
    let d = dim as i64;
    let approach_bound =
        pow_i(&rat(2, 1), d) * pow_i(&(rat(3, 1) / &epsilon), d * d);
    Ok(WaAlice {
        name: format!("wa[eps={epsilon}, d={dim}]"),
        wait_exp: wait_exp.unwrap_or(dim as u32),
        stage: Stage::Approach,
        approaches: Vec::new(),
        epsilon,
        dim,
        beta,
        approach_bound,
    })
}

impl WaAlice {
    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn approaches(&self) -> &[ApproachRecord] {
        &self.approaches
    }

    /// The containment radius ε/q^{1+1/d} in its exact d-power test:
    /// value^d · q^{d+1} ≤ ε^d.
    pub fn within_containment(&self, value: &Rational, q: &BigInt) -> bool {
        let d = self.dim as i64;
        pow_i(value, d) * pow_i(&Rational::from_integer(q.clone()), d + 1)
            <= pow_i(&self.epsilon, d)
    }

    /// Largest Q ≥ 1 with r^d·Q^{d+1} ≤ 2^d(3/ε)^{d²}, or None when even
    /// Q = 1 fails (Bob's ball is too large; dummy until it shrinks).
    fn dirichlet_scale(&self, r: &Rational) -> Option<BigInt> {
        let d = self.dim as i64;
        let cap = &self.approach_bound / pow_i(r, d);
        let q = floor_nth_root(&cap, (self.dim + 1) as u32);
        if q < BigInt::one() {
            None
        } else {
            Some(q)
        }
    }

    fn dummy(&self, bob: &FormalBall) -> StrategyMove {
        StrategyMove::Play(
            bob.with_radius(&self.beta * bob.radius())
                .expect("beta·r positive"),
        )
    }

    fn approach(&mut self, bob: &FormalBall) -> StrategyMove {
        let r = bob.radius();
        let Some(big_q) = self.dirichlet_scale(r) else {
            return self.dummy(bob); // ball too large for any Dirichlet scale
        };
        let approx = dirichlet_approx(bob.center(), &big_q);
        let q = approx.q.clone();
        let point = approx.point();
        let half_r = r / rat(2, 1);
        let my_radius = &self.beta * r;
        if approx.err <= half_r {
            // Case 1: the played ball is (p/q, βr); the containment chain is
            // unconditional, so a failure here is an engine bug
            debug_assert!(self.within_containment(&my_radius, &q));
            let played = match FormalBall::new(point.clone(), my_radius) {
                Ok(b) => b,
                Err(e) => return StrategyMove::Resign(e.to_string()),
            };
            self.approaches.push(ApproachRecord {
                point: point.clone(),
                q: q.clone(),
                case1: true,
                bob_ball: bob.clone(),
                played: played.clone(),
            });
            self.stage = Stage::Separate { target: point, q };
            StrategyMove::Play(played)
        } else {
            // Case 2: Bob is already deep inside B(p/q, ε/q^{1+1/d}) —
            // verify exactly, defer a round when the integer floor ate the
            // slack
            let reach = &approx.err + r;
            if !self.within_containment(&reach, &q) {
                return self.dummy(bob);
            }
            let played = bob.with_radius(my_radius.clone()).expect("positive");
            self.approaches.push(ApproachRecord {
                point: point.clone(),
                q: q.clone(),
                case1: false,
                bob_ball: bob.clone(),
                played: played.clone(),
            });
            // err > r/2 > βr: the rational is formally excluded already
            debug_assert!(approx.err > my_radius);
            self.stage = Stage::Wait { target: point, q };
            StrategyMove::Play(played)
        }
    }

    fn separate(&mut self, bob: &FormalBall, target: RationalPoint, q: BigInt) -> StrategyMove {
        let r = bob.radius();
        let my_radius = &self.beta * r;
        let x = bob.center();
        let center = if x == &target {
            // quarter-radius sidestep; β < 1/4 makes it separating
            x.translated(0, &(r / rat(4, 1)))
        } else {
            // maximal shift along the axis of largest separation
            let (axis, diff) = (0..self.dim)
                .map(|i| (i, x.coord(i) - target.coord(i)))
                .max_by(|(_, a), (_, b)| a.abs().cmp(&b.abs()))
                .expect("positive dimension");
            let sigma = if diff.is_negative() { rat(-1, 1) } else { rat(1, 1) };
            x.translated(axis, &((Rational::one() - &self.beta) * r * sigma))
        };
        let separated = dist(&center, &target).expect("same dimension") > my_radius;
        if !separated {
            return StrategyMove::Resign(
                "separation shift failed to exclude the approached rational".into(),
            );
        }
        let played = match FormalBall::new(center, my_radius) {
            Ok(b) => b,
            Err(e) => return StrategyMove::Resign(e.to_string()),
        };
        self.stage = Stage::Wait { target, q };
        StrategyMove::Play(played)
    }

    fn wait_done(&self, bob: &FormalBall, target: &RationalPoint, q: &BigInt) -> bool {
        let d = dist(bob.center(), target).expect("same dimension");
        let gap = &d - bob.radius();
        if !gap.is_positive() {
            return false;
        }
        let w = self.wait_exp as i64;
        let threshold = rat(2, 1)
            * pow_i(&(rat(3, 1) / &self.epsilon), w)
            * pow_i(
                &(Rational::from_integer(q.clone()) * &gap),
                (self.dim + 1) as i64,
            );
        *bob.radius() < threshold
    }
}

impl Strategy for WaAlice {
    fn name(&self) -> &str {
        &self.name
    }

    fn next_move(&mut self, state: &GameState) -> StrategyMove {
        let GameKind::Bms { beta } = &state.config().kind else {
            return StrategyMove::Resign(format!(
                "wa strategy plays BMS only, got {}",
                state.config().kind.name()
            ));
        };
        if beta != &self.beta {
            return StrategyMove::Resign(format!(
                "wa strategy needs beta = (eps/3)^(d+1) = {}, game has {beta}",
                self.beta
            ));
        }
        if state.config().dimension != self.dim {
            return StrategyMove::Resign(format!(
                "wa strategy built for dimension {}, game is {}-dimensional",
                self.dim,
                state.config().dimension
            ));
        }
        let Some(bob) = state.last_ball() else {
            return StrategyMove::Resign("Alice cannot open".into());
        };
        let bob = bob.clone();
        match std::mem::replace(&mut self.stage, Stage::Approach) {
            Stage::Approach => self.approach(&bob),
            Stage::Separate { target, q } => self.separate(&bob, target, q),
            Stage::Wait { target, q } => {
                if self.wait_done(&bob, &target, &q) {
                    self.approach(&bob)
                } else {
                    self.stage = Stage::Wait { target, q };
                    self.dummy(&bob)
                }
            }
        }
    }
}
