//! Executable strategies: the constructive plays behind the winning-set
//! theorems, plus baseline opponents for testing and tournaments.

mod baseline;
mod bob_s;
mod enumeration;
mod porosity_avoid;
pub mod psi;
pub mod spec;
mod wa;

pub use baseline::{
    alice_dummy, bob_random, constructive_deletion_move, suggest_legal_move, AdversarialAlice,
    AdversarialMode, DummyAlice, RandomBob,
};
pub use bob_s::{
    ball_is_good_1d, bob_s_strategy, meeting_psi_bounded_1d, BobSConfig, ChaseRecord, Q0Mode,
    RationalChaserBob,
};
pub use enumeration::{alice_bmm_enumeration, EnumerationAlice};
pub use porosity_avoid::{alice_bms_porosity, intersect_strategies, PorosityAvoidAlice};
pub use psi::PsiFunction;
pub use wa::{alice_wa, ApproachRecord, WaAlice};

use crate::game::GameState;
use crate::geom::FormalBall;
use thiserror::Error;

/// What a strategy wants to do on its turn.
#[derive(Debug, Clone)]
pub enum StrategyMove {
    Play(FormalBall),
    Resign(String),
    NoLegalMove(String),
}

/// A strategy owns its stage state and is driven by one play at a time.
/// It must emit only legal moves as long as the opponent has played legally.
pub trait Strategy {
    fn name(&self) -> &str;
    fn next_move(&mut self, state: &GameState) -> StrategyMove;
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("strategy {name} requires game {expected}, got {got}")]
    WrongGame {
        name: String,
        expected: String,
        got: String,
    },
    #[error("certificates disagree on beta: {0} vs {1}")]
    MixedBeta(String, String),
    #[error("{0}")]
    BadParameter(String),
}
