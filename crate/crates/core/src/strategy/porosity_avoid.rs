//! Alice's BMS strategy from porosity certificates: for each certified set
//! in turn, make dummy (concentric) moves until Bob's radius falls under the
//! certificate scale, play the witness ball, then one strictly-interior
//! clearing move so every later ball stays inside the *open* witness ball —
//! after which that set can never be met again.

use super::{Strategy, StrategyError, StrategyMove};
use crate::game::{GameKind, GameState};
use crate::geom::rational::Rational;
use crate::geom::{dist, FormalBall, RationalPoint};
use crate::porosity::PorosityCertificate;

enum Phase {
    /// Waiting for Bob's radius to reach the certificate scale of target n.
    Seeking(usize),
    /// Witness ball for target n played as (y, β·r); one clearing move due.
    Clearing {
        next_target: usize,
        y: RationalPoint,
        avoid_radius: Rational,
    },
    /// All targets cleared; dummy moves forever.
    Done,
}

pub struct PorosityAvoidAlice {
    certs: Vec<PorosityCertificate>,
    phase: Phase,
    name: String,
    /// (target index, open ball the play is now committed to)
    cleared: Vec<(usize, FormalBall)>,
}

/// Build the avoidance strategy. All certificates must share β; the game
/// must be BMS with that same β (checked on the first move).
pub fn alice_bms_porosity(
    certs: Vec<PorosityCertificate>,
) -> Result<PorosityAvoidAlice, StrategyError> {
    if let Some(first) = certs.first() {
        for c in &certs[1..] {
            if c.beta() != first.beta() {
                return Err(StrategyError::MixedBeta(
                    first.beta().to_string(),
                    c.beta().to_string(),
                ));
            }
        }
    }
    let name = format!("porosity[{} targets]", certs.len());
    Ok(PorosityAvoidAlice {
        certs,
        phase: Phase::Seeking(0),
        name,
        cleared: Vec::new(),
    })
}

/// The Corollary's countable-intersection combinator: avoiding each target
/// list in sequence wins the intersection of the individual target sets.
pub fn intersect_strategies(
    cert_lists: Vec<Vec<PorosityCertificate>>,
) -> Result<PorosityAvoidAlice, StrategyError> {
    alice_bms_porosity(cert_lists.into_iter().flatten().collect())
}

impl PorosityAvoidAlice {
    /// Open balls the strategy has committed the play into, for transcript
    /// verification by tests.
    pub fn cleared_targets(&self) -> &[(usize, FormalBall)] {
        &self.cleared
    }

    fn beta_checked(&self, state: &GameState) -> Result<Rational, StrategyError> {
        let GameKind::Bms { beta } = &state.config().kind else {
            return Err(StrategyError::WrongGame {
                name: self.name.clone(),
                expected: "bms".into(),
                got: state.config().kind.name().into(),
            });
        };
        if let Some(c) = self.certs.first() {
            if c.beta() != beta {
                return Err(StrategyError::WrongGame {
                    name: self.name.clone(),
                    expected: format!("bms(beta = {})", c.beta()),
                    got: format!("bms(beta = {beta})"),
                });
            }
        }
        Ok(beta.clone())
    }
}

impl Strategy for PorosityAvoidAlice {
    fn name(&self) -> &str {
        &self.name
    }

    fn next_move(&mut self, state: &GameState) -> StrategyMove {
        let beta = match self.beta_checked(state) {
            Ok(b) => b,
            Err(e) => return StrategyMove::Resign(e.to_string()),
        };
        let Some(bob) = state.last_ball() else {
            return StrategyMove::Resign("Alice cannot open".into());
        };
        let my_radius = &beta * bob.radius();
        match &self.phase {
            Phase::Done => StrategyMove::Play(
                bob.with_radius(my_radius).expect("beta·r positive"),
            ),
            Phase::Seeking(n) => {
                let n = *n;
                if n >= self.certs.len() {
                    self.phase = Phase::Done;
                    return self.next_move(state);
                }
                let cert = &self.certs[n];
                if bob.radius() > cert.r0() {
                    // dummy move until the scale is reached
                    return StrategyMove::Play(
                        bob.with_radius(my_radius).expect("beta·r positive"),
                    );
                }
                let y = match cert.witness(bob) {
                    Ok(y) => y,
                    Err(e) => {
                        return StrategyMove::Resign(format!(
                            "certificate {n} witness invalid on {bob}: {e}"
                        ))
                    }
                };
                let ball = match FormalBall::new(y.clone(), my_radius.clone()) {
                    Ok(b) => b,
                    Err(e) => return StrategyMove::Resign(e.to_string()),
                };
                // sanity: the witness must hand back a legal avoidance ball
                if state.legal_move(state.to_move(), &ball).is_err()
                    || !cert
                        .oracle()
                        .ball_disjoint(&ball, false)
                        .is_yes()
                {
                    return StrategyMove::Resign(format!(
                        "certificate {n} produced an invalid witness {ball} for {bob}"
                    ));
                }
                self.phase = Phase::Clearing {
                    next_target: n + 1,
                    y,
                    avoid_radius: my_radius.clone(),
                };
                StrategyMove::Play(ball)
            }
            Phase::Clearing {
                next_target,
                y,
                avoid_radius,
            } => {
                // Bob is nested in (y, βr); the concentric reply (x₊, β·r₊)
                // is strictly inside the open ball: βr₊ + d(y, x₊) < r₊ +
                // d(y, x₊) ≤ βr.
                let n = *next_target;
                let y = y.clone();
                let avoid_radius = avoid_radius.clone();
                let strict = &my_radius
                    + &dist(&y, bob.center()).expect("dims match")
                    < avoid_radius;
                if !strict {
                    // unreachable when Bob played legally; resign honestly
                    return StrategyMove::Resign(
                        "clearing move is not strictly interior (opponent ball out of chain?)"
                            .into(),
                    );
                }
                let ball = bob.with_radius(my_radius).expect("beta·r positive");
                self.cleared.push((
                    n - 1,
                    FormalBall::new(y, avoid_radius).expect("positive radius"),
                ));
                self.phase = Phase::Seeking(n);
                StrategyMove::Play(ball)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{play, GameConfig, PlaySetup};
    use crate::geom::rational::rat;
    use crate::geom::shrink_leq;
    use crate::porosity::{cantor_certificate, Answer, SetOracle};
    use crate::strategy::bob_random;

    #[test]
    fn empty_cert_list_is_pure_dummy() {
        let mut alice = alice_bms_porosity(vec![]).unwrap();
        let mut bob = bob_random(3);
        let t = play(PlaySetup {
            config: GameConfig::new(GameKind::Bms { beta: rat(1, 5) }, 1).unwrap(),
            max_rounds: 8,
            bob: &mut bob,
            alice: &mut alice,
        });
        assert_eq!(t.rounds(), 8);
        // Alice's moves are all concentric with Bob's preceding ball
        for w in t.moves.windows(2) {
            if w[1].0 == crate::game::Player::Alice {
                assert_eq!(w[1].1.center(), w[0].1.center());
            }
        }
    }

    #[test]
    fn avoids_cantor_against_random_bob() {
        let oracle = cantor_certificate();
        for seed in 0..10u64 {
            let mut alice = alice_bms_porosity(vec![cantor_certificate()]).unwrap();
            let mut bob = bob_random(seed);
            let t = play(PlaySetup {
                config: GameConfig::new(GameKind::Bms { beta: rat(1, 5) }, 1).unwrap(),
                max_rounds: 30,
                bob: &mut bob,
                alice: &mut alice,
            });
            assert_eq!(t.rounds(), 30, "seed {seed}: {:?}", t.termination);
            let final_ball = t.final_bob_ball().unwrap();
            assert_eq!(
                oracle.oracle().ball_disjoint(final_ball, true),
                Answer::Yes,
                "seed {seed}: final ball {final_ball} meets C"
            );
            // committed-ball bookkeeping: final ball inside the cleared ball
            let (_, committed) = &alice.cleared_targets()[0];
            assert!(shrink_leq(final_ball, committed).unwrap());
        }
    }

    #[test]
    fn duplicate_certificates_still_win() {
        let mut alice =
            alice_bms_porosity(vec![cantor_certificate(), cantor_certificate()]).unwrap();
        let mut bob = bob_random(11);
        let t = play(PlaySetup {
            config: GameConfig::new(GameKind::Bms { beta: rat(1, 5) }, 1).unwrap(),
            max_rounds: 20,
            bob: &mut bob,
            alice: &mut alice,
        });
        assert_eq!(alice.cleared_targets().len(), 2);
        let final_ball = t.final_bob_ball().unwrap();
        assert!(cantor_certificate()
            .oracle()
            .ball_disjoint(final_ball, true)
            .is_yes());
    }

    #[test]
    fn intersection_avoids_both_sets() {
        use crate::porosity::{affine_certificate, cantor_oracle, AffineImage, UnionOracle};
        use std::sync::Arc;
        let shifted = affine_certificate(&cantor_certificate(), rat(1, 1), rat(2, 1));
        for seed in [3u64, 17, 29] {
            let mut alice =
                intersect_strategies(vec![vec![cantor_certificate()], vec![shifted.clone()]])
                    .unwrap();
            let mut bob = bob_random(seed);
            let t = play(PlaySetup {
                config: GameConfig::new(GameKind::Bms { beta: rat(1, 5) }, 1).unwrap(),
                max_rounds: 25,
                bob: &mut bob,
                alice: &mut alice,
            });
            assert_eq!(alice.cleared_targets().len(), 2, "seed {seed}");
            let final_ball = t.final_bob_ball().unwrap();
            let union = UnionOracle::new(vec![
                cantor_oracle(),
                Arc::new(AffineImage::new(cantor_oracle(), rat(1, 1), rat(2, 1))),
            ]);
            assert_eq!(
                union.ball_disjoint(final_ball, true),
                Answer::Yes,
                "seed {seed}: {final_ball} meets C ∪ (C+2)"
            );
        }
    }

    #[test]
    fn mixed_beta_rejected() {
        let c1 = cantor_certificate();
        let c2 = cantor_certificate().with_beta(rat(1, 3));
        assert!(matches!(
            alice_bms_porosity(vec![c1, c2]),
            Err(StrategyError::MixedBeta(..))
        ));
    }
}
