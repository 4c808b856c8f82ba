//! The play loop: strategy vs strategy to a round bound.

use super::{GameConfig, GameState, Player, Termination, Transcript, TranscriptHeader};
use crate::strategy::{Strategy, StrategyMove};

pub struct PlaySetup<'a> {
    pub config: GameConfig,
    pub max_rounds: usize,
    pub bob: &'a mut dyn Strategy,
    pub alice: &'a mut dyn Strategy,
}

/// Run a play until the round bound, a resignation, or a reported lack of a
/// legal move. A strategy emitting an illegal move is recorded as resigning
/// with the violated rule as the reason. Every move in the returned
/// transcript was validated by the referee when applied.
///
/// `max_rounds` counts completed (Bob, Alice) exchanges after which Bob
/// plays one closing reply, so the transcript's deepest ball is Bob's and a
/// Schmidt play of N rounds ends at radius exactly r₁·(αβ)^N.
pub fn play(setup: PlaySetup<'_>) -> Transcript {
    let PlaySetup {
        config,
        max_rounds,
        bob,
        alice,
    } = setup;
    let mut state = GameState::new(config.clone());
    let termination = loop {
        let mover = state.to_move();
        if mover == Player::Alice && state.round_index() > max_rounds {
            break Termination::RoundBound;
        }
        let strategy: &mut dyn Strategy = match mover {
            Player::Bob => &mut *bob,
            Player::Alice => &mut *alice,
        };
        match strategy.next_move(&state) {
            StrategyMove::Play(ball) => {
                if let Err(violation) = state.apply(mover, ball) {
                    break Termination::Resigned {
                        player: mover,
                        reason: format!("illegal move: {violation}"),
                    };
                }
            }
            StrategyMove::Resign(reason) => {
                break Termination::Resigned {
                    player: mover,
                    reason,
                }
            }
            StrategyMove::NoLegalMove(reason) => {
                break Termination::NoLegalMove {
                    player: mover,
                    reason,
                }
            }
        }
    };
    Transcript {
        header: TranscriptHeader {
            schema_version: super::transcript::SCHEMA_VERSION,
            engine: crate::ENGINE_VERSION.to_string(),
            config,
            max_rounds,
        },
        moves: state.history().to_vec(),
        termination,
        outcome: None,
    }
}
