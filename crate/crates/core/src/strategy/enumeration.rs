//! Alice's BMM strategy for co-countable targets: delete the enumerated
//! exceptional points one per turn. Formal disjointness of Bob's replies
//! then excludes each point from every later Bob ball, with the played
//! radius as a persistent margin.

use super::{Strategy, StrategyError, StrategyMove};
use crate::game::{GameKind, GameState};
use crate::geom::rational::{rat, Rational};
use crate::geom::{FormalBall, RationalPoint};

pub struct EnumerationAlice {
    points: Vec<RationalPoint>,
    next: usize,
    name: String,
    /// (point, radius) pairs actually played, for exclusion checks.
    played: Vec<(RationalPoint, Rational)>,
}

pub fn alice_bmm_enumeration(points: Vec<RationalPoint>) -> EnumerationAlice {
    EnumerationAlice {
        name: format!("enumeration[{} points]", points.len()),
        points,
        next: 0,
        played: Vec::new(),
    }
}

impl EnumerationAlice {
    pub fn played(&self) -> &[(RationalPoint, Rational)] {
        &self.played
    }
}

impl Strategy for EnumerationAlice {
    fn name(&self) -> &str {
        &self.name
    }

    fn next_move(&mut self, state: &GameState) -> StrategyMove {
        let GameKind::Bmm { beta } = &state.config().kind else {
            return StrategyMove::Resign(
                StrategyError::WrongGame {
                    name: self.name.clone(),
                    expected: "bmm".into(),
                    got: state.config().kind.name().into(),
                }
                .to_string(),
            );
        };
        let Some(bob) = state.last_ball() else {
            return StrategyMove::Resign("Alice cannot open".into());
        };
        let radius = beta * bob.radius();
        let center = if self.next < self.points.len() {
            let p = self.points[self.next].clone();
            self.next += 1;
            self.played.push((p.clone(), radius.clone()));
            p
        } else {
            // list exhausted: any legal deletion works; step outside Bob's
            // ball so the move deletes nothing that matters
            bob.center().translated(0, &(rat(2, 1) * bob.radius()))
        };
        match FormalBall::new(center, radius) {
            Ok(b) => StrategyMove::Play(b),
            Err(e) => StrategyMove::Resign(e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{outcome, play, GameConfig, PlaySetup, Player, Winner};
    use crate::geom::{ball_contains_point, dist};
    use crate::porosity::CoCountableComplement;
    use crate::strategy::bob_random;

    fn run(points: Vec<RationalPoint>, seed: u64, rounds: usize) -> (crate::game::Transcript, EnumerationAlice) {
        let mut alice = alice_bmm_enumeration(points);
        let mut bob = bob_random(seed);
        let t = play(PlaySetup {
            config: GameConfig::new(GameKind::Bmm { beta: rat(1, 3) }, 1).unwrap(),
            max_rounds: rounds,
            bob: &mut bob,
            alice: &mut alice,
        });
        (t, alice)
    }

    #[test]
    fn played_points_formally_excluded_from_later_bob_balls() {
        let pts: Vec<RationalPoint> = crate::dio::stern_brocot_unit(10)
            .into_iter()
            .map(RationalPoint::scalar)
            .collect();
        let (t, alice) = run(pts, 5, 20);
        assert_eq!(t.rounds(), 20);
        // against each played (point, margin): every Bob ball after the move
        // satisfies d(center, point) ≥ radius + margin
        for (i, (p, margin)) in alice.played().iter().enumerate() {
            let mut bob_index = 0usize;
            for (mover, ball) in &t.moves {
                if *mover != Player::Bob {
                    continue;
                }
                bob_index += 1;
                if bob_index <= i + 1 {
                    continue; // Bob balls before (and including) the deleted round
                }
                let d = dist(ball.center(), p).unwrap();
                assert!(
                    d >= ball.radius() + margin,
                    "point {p} not excluded from {ball}"
                );
                assert!(!ball_contains_point(ball, p, true).unwrap());
            }
        }
    }

    #[test]
    fn empty_list_still_wins_cocountable_target() {
        let (t, _) = run(vec![], 9, 12);
        let target = CoCountableComplement::new("co-rationals", vec![]);
        let o = outcome(&t, &target);
        assert_eq!(o.winner, Winner::Alice);
    }

    #[test]
    fn deleting_bobs_center_is_legal() {
        // Alice's position is unrestricted in BMM, even on Bob's center
        let pts = vec![RationalPoint::scalar(rat(0, 1))];
        let (t, _) = run(pts, 1, 6);
        assert_eq!(t.rounds(), 6, "termination: {:?}", t.termination);
    }
}
