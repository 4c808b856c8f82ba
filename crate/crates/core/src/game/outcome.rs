//! Judging a finished play against a target-set oracle, at ball level.
//!
//! The verdict is only ever decided by a sound oracle query on the final Bob
//! ball F (the bottom of the nested chain): F disjoint from the target means
//! Bob won, F inside the target means Alice won, and for the games whose
//! intersection can have positive radius a co-countable target certifies
//! Alice once every enumerated exceptional point is formally excluded from
//! F. Anything else stays Undecided — no limit point is ever guessed.

use super::{GameKind, Player, Termination, Transcript};
use crate::geom::{ball_contains_point, FormalBall};
use crate::porosity::{Answer, SetOracle};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    Alice,
    Bob,
    Undecided,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub winner: Winner,
    pub final_ball: FormalBall,
    pub evidence: String,
}

/// Judge a transcript against a target-set oracle.
pub fn outcome(t: &Transcript, target: &dyn SetOracle) -> Outcome {
    let Some(final_ball) = t.final_bob_ball().cloned() else {
        // Bob never moved: he is stuck before the game started
        return Outcome {
            winner: Winner::Alice,
            final_ball: FormalBall::unit(t.header.config.dimension),
            evidence: "Bob made no move; a player without a legal move loses".into(),
        };
    };
    // a stuck Bob loses outright, whatever the oracle would say
    if matches!(
        t.termination,
        Termination::NoLegalMove {
            player: Player::Bob,
            ..
        }
    ) {
        return Outcome {
            winner: Winner::Alice,
            final_ball,
            evidence: "Bob had no legal move; Alice is declared the winner".into(),
        };
    }
    if target.dimension() != t.header.config.dimension {
        return Outcome {
            winner: Winner::Undecided,
            final_ball,
            evidence: format!(
                "oracle {} is {}-dimensional, game is {}-dimensional",
                target.tag(),
                target.dimension(),
                t.header.config.dimension
            ),
        };
    }
    match target.ball_disjoint(&final_ball, true) {
        Answer::Yes => {
            return Outcome {
                winner: Winner::Bob,
                final_ball: final_ball.clone(),
                evidence: format!(
                    "oracle {}: final ball {} is disjoint from the target",
                    target.tag(),
                    final_ball
                ),
            }
        }
        Answer::No | Answer::Unknown => {}
    }
    match target.ball_inside(&final_ball) {
        Answer::Yes => {
            return Outcome {
                winner: Winner::Alice,
                final_ball: final_ball.clone(),
                evidence: format!(
                    "oracle {}: final ball {} is contained in the target",
                    target.tag(),
                    final_ball
                ),
            }
        }
        Answer::No | Answer::Unknown => {}
    }
    // positive-radius intersection vs a co-countable target
    let countable_games = matches!(
        t.header.config.kind,
        GameKind::Bmm { .. } | GameKind::BanachMazur
    );
    if countable_games {
        if let Some(points) = target.exceptional_points() {
            let all_excluded = points.iter().all(|p| {
                // formal exclusion: the point lies strictly outside F
                !ball_contains_point(&final_ball, p, true).unwrap_or(true)
            });
            if all_excluded {
                return Outcome {
                    winner: Winner::Alice,
                    final_ball: final_ball.clone(),
                    evidence: format!(
                        "oracle {}: all {} enumerated exceptional points are formally \
                         excluded from {}; a positive-radius ball minus a countable set \
                         is nonempty (confidence {})",
                        target.tag(),
                        points.len(),
                        final_ball,
                        points.len()
                    ),
                };
            }
        }
    }
    Outcome {
        winner: Winner::Undecided,
        final_ball: final_ball.clone(),
        evidence: format!(
            "oracle {} can decide neither disjointness nor containment for {}",
            target.tag(),
            final_ball
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{GameConfig, TranscriptHeader};
    use crate::geom::rational::rat;
    use crate::geom::RationalPoint;
    use crate::porosity::{cantor_oracle, CoCountableComplement, Complement};

    fn transcript_with(kind: GameKind, moves: Vec<(Player, FormalBall)>) -> Transcript {
        Transcript {
            header: TranscriptHeader {
                schema_version: crate::game::SCHEMA_VERSION,
                engine: crate::ENGINE_VERSION.into(),
                config: GameConfig::new(kind, 1).unwrap(),
                max_rounds: 1,
            },
            moves,
            termination: Termination::RoundBound,
            outcome: None,
        }
    }

    fn ball1(c: (i64, i64), r: (i64, i64)) -> FormalBall {
        FormalBall::new(RationalPoint::scalar(rat(c.0, c.1)), rat(r.0, r.1)).unwrap()
    }

    #[test]
    fn gap_ball_wins_for_alice_on_cantor_complement() {
        // F = B(1/2, 1/10) ⊂ (2/5, 3/5), disjoint from C
        let t = transcript_with(
            GameKind::Bms { beta: rat(1, 5) },
            vec![(Player::Bob, ball1((1, 2), (1, 10)))],
        );
        let o = outcome(&t, &Complement::new(cantor_oracle()));
        assert_eq!(o.winner, Winner::Alice);
    }

    #[test]
    fn straddling_ball_stays_undecided() {
        // F = B(1/3, 1/100) straddles the Cantor point 1/3
        let t = transcript_with(
            GameKind::Bms { beta: rat(1, 5) },
            vec![(Player::Bob, ball1((1, 3), (1, 100)))],
        );
        let o = outcome(&t, &Complement::new(cantor_oracle()));
        assert_eq!(o.winner, Winner::Undecided);
    }

    #[test]
    fn cocountable_target_certifies_alice_at_prefix_confidence() {
        let excluded: Vec<RationalPoint> = (1..=20)
            .map(|k| RationalPoint::scalar(rat(k, 21)))
            .collect();
        let target = CoCountableComplement::new("co-rationals", excluded);
        // a ball avoiding the whole prefix
        let t = transcript_with(
            GameKind::Bmm { beta: rat(1, 3) },
            vec![(Player::Bob, ball1((5, 1), (1, 1)))],
        );
        let o = outcome(&t, &target);
        assert_eq!(o.winner, Winner::Alice);
        assert!(o.evidence.contains("confidence 20"), "{}", o.evidence);
        // the positive-radius path is reserved for the deletion/BM games
        let t = transcript_with(
            GameKind::Bms { beta: rat(1, 3) },
            vec![(Player::Bob, ball1((5, 1), (1, 1)))],
        );
        assert_eq!(outcome(&t, &target).winner, Winner::Undecided);
    }

    #[test]
    fn stuck_bob_loses() {
        let mut t = transcript_with(
            GameKind::Bmm { beta: rat(1, 3) },
            vec![
                (Player::Bob, ball1((0, 1), (1, 1))),
                (Player::Alice, ball1((0, 1), (1, 3))),
            ],
        );
        t.termination = Termination::NoLegalMove {
            player: Player::Bob,
            reason: "trapped".into(),
        };
        let o = outcome(&t, &Complement::new(cantor_oracle()));
        assert_eq!(o.winner, Winner::Alice);
    }
}
