//! Referee and play loop for the five nested-ball games.
//!
//! Rule sets, with Bob's ball written (x, r) and Alice's (x', r'):
//!
//! - Schmidt(α, β): Alice plays ω' ≤ₛ ω with r' = α·r; Bob plays ω₊ ≤ₛ ω'
//!   with r₊ = β·r'. Both radius laws are exact equalities.
//! - Absolute(β): Alice's position is unrestricted with r' ≤ β·r; Bob plays
//!   into his own previous ball (ω₊ ≤ₛ ω), formally disjoint from Alice's
//!   deletion, with r₊ ≥ β·r.
//! - Banach–Mazur: plain ≤ₛ chain, any positive radii.
//! - BMS(β): Bob as in Banach–Mazur; Alice ≤ₛ with r' = β·r exactly.
//! - BMM(β): Bob into his own last ball and formally disjoint from Alice's
//!   last, any positive radius; Alice unrestricted in position with r' ≤ β·r.
//!
//! Bob opens every game with an arbitrary formal ball. All inequalities are
//! non-strict exactly as printed; ties are legal moves.

mod engine;
mod outcome;
mod rules;
mod transcript;

pub use engine::{play, PlaySetup};
pub use outcome::{outcome, Outcome, Winner};
pub use transcript::{
    verify_transcript, Termination, Transcript, TranscriptHeader, TranscriptParseError,
    VerifyError, VerifyReport, SCHEMA_VERSION,
};

use crate::geom::rational::Rational;
use crate::geom::FormalBall;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Player::Alice => "alice",
            Player::Bob => "bob",
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which game is being played, with its contraction parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameKind {
    Schmidt { alpha: Rational, beta: Rational },
    Absolute { beta: Rational },
    BanachMazur,
    Bms { beta: Rational },
    Bmm { beta: Rational },
}

impl GameKind {
    pub fn name(&self) -> &'static str {
        match self {
            GameKind::Schmidt { .. } => "schmidt",
            GameKind::Absolute { .. } => "absolute",
            GameKind::BanachMazur => "banach-mazur",
            GameKind::Bms { .. } => "bms",
            GameKind::Bmm { .. } => "bmm",
        }
    }

    pub fn alpha(&self) -> Option<&Rational> {
        match self {
            GameKind::Schmidt { alpha, .. } => Some(alpha),
            _ => None,
        }
    }

    pub fn beta(&self) -> Option<&Rational> {
        match self {
            GameKind::Schmidt { beta, .. }
            | GameKind::Absolute { beta }
            | GameKind::Bms { beta }
            | GameKind::Bmm { beta } => Some(beta),
            GameKind::BanachMazur => None,
        }
    }

    fn params_valid(&self) -> bool {
        let in_unit = |r: &Rational| r > &Rational::zero() && r < &Rational::one();
        match self {
            GameKind::Schmidt { alpha, beta } => in_unit(alpha) && in_unit(beta),
            GameKind::Absolute { beta } | GameKind::Bms { beta } | GameKind::Bmm { beta } => {
                in_unit(beta)
            }
            GameKind::BanachMazur => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameConfig {
    pub kind: GameKind,
    pub dimension: usize,
}

impl GameConfig {
    pub fn new(kind: GameKind, dimension: usize) -> Result<Self, RuleViolation> {
        if dimension == 0 {
            return Err(RuleViolation::BadConfig("dimension must be positive".into()));
        }
        if !kind.params_valid() {
            return Err(RuleViolation::BadConfig(
                "game parameters must lie strictly between 0 and 1".into(),
            ));
        }
        Ok(Self { kind, dimension })
    }
}

/// A move found illegal, carrying the violated constraint with its exact
/// instantiated values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleViolation {
    #[error("invalid game config: {0}")]
    BadConfig(String),
    #[error("it is {expected}'s turn")]
    WrongMover { expected: Player },
    #[error("move has dimension {got}, game is in dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("radius must equal {rule} = {required}, got {got}")]
    RadiusNotEqual {
        rule: &'static str,
        required: Rational,
        got: Rational,
    },
    #[error("radius must be at most {rule} = {max}, got {got}")]
    RadiusTooLarge {
        rule: &'static str,
        max: Rational,
        got: Rational,
    },
    #[error("radius must be at least {rule} = {min}, got {got}")]
    RadiusTooSmall {
        rule: &'static str,
        min: Rational,
        got: Rational,
    },
    #[error(
        "ball not nested into {target}: radius + distance = {lhs} > {rhs} (needs r + d(x_prev, x) <= r_prev)"
    )]
    NotNested {
        target: FormalBall,
        lhs: Rational,
        rhs: Rational,
    },
    #[error(
        "ball not formally disjoint from {other}: distance {dist} < radius sum {required} (needs d >= r + r')"
    )]
    NotFormallyDisjoint {
        other: FormalBall,
        dist: Rational,
        required: Rational,
    },
}

/// The position of a play in progress. The history alternates strictly,
/// starting with Bob; every recorded move was legal when made.
#[derive(Debug, Clone)]
pub struct GameState {
    config: GameConfig,
    history: Vec<(Player, FormalBall)>,
}

impl GameState {
    pub fn new(config: GameConfig) -> Self {
        Self {
            config,
            history: Vec::new(),
        }
    }

    pub fn config(&self) -> &GameConfig {
        &self.config
    }

    pub fn history(&self) -> &[(Player, FormalBall)] {
        &self.history
    }

    pub fn to_move(&self) -> Player {
        if self.history.len() % 2 == 0 {
            Player::Bob
        } else {
            Player::Alice
        }
    }

    /// Completed Bob moves; increments when Bob moves.
    pub fn round_index(&self) -> usize {
        self.history.len().div_ceil(2)
    }

    pub fn last_ball(&self) -> Option<&FormalBall> {
        self.history.last().map(|(_, b)| b)
    }

    pub fn last_ball_of(&self, player: Player) -> Option<&FormalBall> {
        self.history
            .iter()
            .rev()
            .find(|(p, _)| *p == player)
            .map(|(_, b)| b)
    }

    /// Judge a move by `mover` in the current position.
    pub fn legal_move(&self, mover: Player, mv: &FormalBall) -> Result<(), RuleViolation> {
        rules::judge(self, mover, mv)
    }

    /// Apply a move after judging it.
    pub fn apply(&mut self, mover: Player, mv: FormalBall) -> Result<(), RuleViolation> {
        self.legal_move(mover, &mv)?;
        self.history.push((mover, mv));
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational::rat;
    use crate::geom::RationalPoint;

    fn ball1(c: Rational, r: Rational) -> FormalBall {
        FormalBall::new(RationalPoint::scalar(c), r).unwrap()
    }

    fn bms_state() -> GameState {
        GameState::new(GameConfig::new(GameKind::Bms { beta: rat(1, 3) }, 1).unwrap())
    }

    #[test]
    fn bms_alice_example_legal() {
        // Bob at B(0,1); Alice plays B(1/2, 1/3): radius 1/3 = β·1 and
        // 1/3 + 1/2 ≤ 1.
        let mut st = bms_state();
        st.apply(Player::Bob, ball1(rat(0, 1), rat(1, 1))).unwrap();
        st.legal_move(Player::Alice, &ball1(rat(1, 2), rat(1, 3)))
            .unwrap();
    }

    #[test]
    fn bmm_tangent_bob_is_legal() {
        // Alice last B(0,1/3), Bob's own last B(0,1); Bob plays B(2/3,1/3):
        // nested (1/3 + 2/3 ≤ 1) and tangency d = 2/3 = 1/3 + 1/3.
        let mut st =
            GameState::new(GameConfig::new(GameKind::Bmm { beta: rat(1, 3) }, 1).unwrap());
        st.apply(Player::Bob, ball1(rat(0, 1), rat(1, 1))).unwrap();
        st.apply(Player::Alice, ball1(rat(0, 1), rat(1, 3))).unwrap();
        st.legal_move(Player::Bob, &ball1(rat(2, 3), rat(1, 3)))
            .unwrap();
    }

    #[test]
    fn schmidt_radius_is_an_equality() {
        let mut st = GameState::new(
            GameConfig::new(
                GameKind::Schmidt {
                    alpha: rat(1, 2),
                    beta: rat(1, 2),
                },
                1,
            )
            .unwrap(),
        );
        st.apply(Player::Bob, ball1(rat(0, 1), rat(1, 1))).unwrap();
        let err = st
            .legal_move(Player::Alice, &ball1(rat(0, 1), rat(1, 3)))
            .unwrap_err();
        match err {
            RuleViolation::RadiusNotEqual { required, .. } => assert_eq!(required, rat(1, 2)),
            other => panic!("wrong violation: {other:?}"),
        }
    }

    #[test]
    fn wrong_mover_rejected() {
        let mut st = bms_state();
        let b = ball1(rat(0, 1), rat(1, 1));
        assert!(matches!(
            st.legal_move(Player::Alice, &b),
            Err(RuleViolation::WrongMover {
                expected: Player::Bob
            })
        ));
        st.apply(Player::Bob, b.clone()).unwrap();
        assert!(st.apply(Player::Bob, b).is_err());
    }

    #[test]
    fn round_index_counts_bob_moves() {
        let mut st = bms_state();
        assert_eq!(st.round_index(), 0);
        st.apply(Player::Bob, ball1(rat(0, 1), rat(1, 1))).unwrap();
        assert_eq!(st.round_index(), 1);
        st.apply(Player::Alice, ball1(rat(0, 1), rat(1, 3))).unwrap();
        assert_eq!(st.round_index(), 1);
        st.apply(Player::Bob, ball1(rat(0, 1), rat(1, 6))).unwrap();
        assert_eq!(st.round_index(), 2);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let st = bms_state();
        let b2 = FormalBall::new(
            RationalPoint::new(vec![rat(0, 1), rat(0, 1)]).unwrap(),
            rat(1, 1),
        )
        .unwrap();
        assert!(matches!(
            st.legal_move(Player::Bob, &b2),
            Err(RuleViolation::DimensionMismatch { .. })
        ));
    }
}
