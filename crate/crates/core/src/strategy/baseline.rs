//! Baseline opponents: the concentric dummy Alice, the seeded random Bob,
//! and adversarial Alice variants for stress-testing Bob strategies.

use super::{Strategy, StrategyMove};
use crate::game::{GameKind, GameState, Player};
use crate::geom::rational::{rat, Rational};
use crate::geom::{dist, formally_disjoint, shrink_leq, FormalBall, RationalPoint};
use num_traits::{One, Signed};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Alice playing concentric contractions at the maximal legal radius
/// (α·r, β·r, or r/2 where the rules leave the radius free).
#[derive(Debug, Default)]
pub struct DummyAlice;

pub fn alice_dummy() -> DummyAlice {
    DummyAlice
}

/// The concentric radius a dummy Alice plays on top of `last`.
pub fn dummy_alice_radius(kind: &GameKind, last: &FormalBall) -> Rational {
    match kind {
        GameKind::Schmidt { alpha, .. } => alpha * last.radius(),
        GameKind::BanachMazur => last.radius() / rat(2, 1),
        GameKind::Absolute { beta } | GameKind::Bms { beta } | GameKind::Bmm { beta } => {
            beta * last.radius()
        }
    }
}

impl Strategy for DummyAlice {
    fn name(&self) -> &str {
        "dummy"
    }

    fn next_move(&mut self, state: &GameState) -> StrategyMove {
        let Some(last) = state.last_ball() else {
            return StrategyMove::Resign("dummy Alice cannot open (Bob starts)".into());
        };
        let radius = dummy_alice_radius(&state.config().kind, last);
        match last.with_radius(radius) {
            Ok(b) => StrategyMove::Play(b),
            Err(e) => StrategyMove::Resign(e.to_string()),
        }
    }
}

/// Bob picking uniformly among a rational grid of legal centers and a
/// geometric ladder of legal radii. Deterministic per seed.
pub struct RandomBob {
    rng: ChaCha8Rng,
    name: String,
    /// grid subdivisions per axis
    grid: i64,
}

pub fn bob_random(seed: u64) -> RandomBob {
    RandomBob {
        rng: ChaCha8Rng::seed_from_u64(seed),
        name: format!("random:seed={seed}"),
        grid: 8,
    }
}

impl RandomBob {
    /// Random lattice point of the box around `center` with the given reach.
    fn grid_center(&mut self, center: &RationalPoint, reach: &Rational) -> RationalPoint {
        let coords = center
            .coords()
            .iter()
            .map(|c| {
                let k = self.rng.gen_range(-self.grid..=self.grid);
                c + reach * rat(k, self.grid)
            })
            .collect();
        RationalPoint::new(coords).expect("same dimension as center")
    }

    fn ladder_radius(&mut self, top: &Rational) -> Rational {
        let k = self.rng.gen_range(1..=4u32);
        let mut r = top.clone();
        for _ in 0..k {
            r = r / rat(2, 1);
        }
        r
    }

    fn opening(&mut self, dim: usize) -> FormalBall {
        // unit radius, center jittered on the quarter grid of [-1, 1]^d
        let center = self.grid_center(&RationalPoint::origin(dim), &Rational::one());
        FormalBall::new(center, Rational::one()).expect("unit radius")
    }
}

impl Strategy for RandomBob {
    fn name(&self) -> &str {
        &self.name
    }

    fn next_move(&mut self, state: &GameState) -> StrategyMove {
        let dim = state.config().dimension;
        let Some(last) = state.last_ball() else {
            return StrategyMove::Play(self.opening(dim));
        };
        match &state.config().kind {
            GameKind::Schmidt { beta, .. } => {
                let radius = beta * last.radius();
                let reach = last.radius() - &radius;
                let center = self.grid_center(last.center(), &reach);
                StrategyMove::Play(FormalBall::new(center, radius).expect("positive"))
            }
            GameKind::BanachMazur | GameKind::Bms { .. } => {
                let radius = self.ladder_radius(last.radius());
                let reach = last.radius() - &radius;
                let center = self.grid_center(last.center(), &reach);
                StrategyMove::Play(FormalBall::new(center, radius).expect("positive"))
            }
            GameKind::Absolute { beta } => {
                let own = state
                    .last_ball_of(Player::Bob)
                    .expect("Bob moved before Alice")
                    .clone();
                self.deletion_game_move(state, &own, last, Some(beta.clone()))
            }
            GameKind::Bmm { .. } => {
                let own = state
                    .last_ball_of(Player::Bob)
                    .expect("Bob moved before Alice")
                    .clone();
                self.deletion_game_move(state, &own, last, None)
            }
        }
    }
}

impl RandomBob {
    /// Move for the deletion games: nested into `own`, formally disjoint
    /// from Alice's `deleted` ball, radius ≥ β·own (absolute) or free (BMM).
    /// Rejection-samples the grid, then falls back to the constructive
    /// away-from-Alice move that always exists in ℝ^d (BMM) or exists for
    /// small β (absolute).
    fn deletion_game_move(
        &mut self,
        state: &GameState,
        own: &FormalBall,
        deleted: &FormalBall,
        min_beta: Option<Rational>,
    ) -> StrategyMove {
        let min_radius = min_beta.as_ref().map(|b| b * own.radius());
        for _ in 0..24 {
            let top = match &min_radius {
                // absolute game: sample in [β·r, r) low so nesting has room
                Some(minr) => minr + (own.radius() - minr) / rat(4, 1),
                None => own.radius() / rat(2, 1),
            };
            let radius = match &min_radius {
                Some(minr) => {
                    let r = self.ladder_radius(&top);
                    if &r < minr {
                        minr.clone()
                    } else {
                        r
                    }
                }
                None => self.ladder_radius(&top),
            };
            let reach = own.radius() - &radius;
            if !reach.is_positive() {
                continue;
            }
            let center = self.grid_center(own.center(), &reach);
            let cand = FormalBall::new(center, radius).expect("positive");
            if state.legal_move(Player::Bob, &cand).is_ok() {
                return StrategyMove::Play(cand);
            }
        }
        match constructive_deletion_move(own, deleted, min_radius.as_ref()) {
            Some(b) if state.legal_move(Player::Bob, &b).is_ok() => StrategyMove::Play(b),
            _ => StrategyMove::NoLegalMove(format!(
                "no ball inside {own} clears the deletion {deleted}"
            )),
        }
    }
}

/// The constructive existence move for the deletion games: step away from
/// the deleted ball along the coordinate of largest separation. With
/// s ≤ (dist(x, x') + r − r')/2 the ball (x + (r − s)·e, s) is nested in
/// (x, r) (tie) and formally disjoint from (x', r').
pub fn constructive_deletion_move(
    own: &FormalBall,
    deleted: &FormalBall,
    min_radius: Option<&Rational>,
) -> Option<FormalBall> {
    let d = dist(own.center(), deleted.center()).ok()?;
    let s_max = (&d + own.radius() - deleted.radius()) / rat(2, 1);
    if !s_max.is_positive() {
        return None;
    }
    let s_cap = if &s_max < own.radius() {
        s_max
    } else {
        own.radius().clone()
    };
    let s = match min_radius {
        Some(minr) => {
            if minr > &s_cap {
                return None; // absolute game with β too large: genuinely stuck
            }
            minr.clone()
        }
        None => s_cap / rat(2, 1),
    };
    // axis of largest separation, sign pointing away from the deletion
    let (axis, sign) = (0..own.dim())
        .map(|i| {
            let diff = own.center().coord(i) - deleted.center().coord(i);
            (i, diff)
        })
        .max_by(|(_, a), (_, b)| a.abs().cmp(&b.abs()))
        .map(|(i, diff)| {
            (
                i,
                if diff.is_negative() {
                    rat(-1, 1)
                } else {
                    rat(1, 1)
                },
            )
        })?;
    let step = (own.radius() - &s) * sign;
    let center = own.center().translated(axis, &step);
    let cand = FormalBall::new(center, s).ok()?;
    let nested = shrink_leq(&cand, own).ok()?;
    let disjoint = formally_disjoint(&cand, deleted).ok()?;
    (nested && disjoint).then_some(cand)
}

/// Some legal move in the current position, when one exists: the concentric
/// radius-law move for Alice, and for Bob the concentric half/exact-ratio
/// move or the constructive away-step in the deletion games. Used for REPL
/// hints and as a liveness probe.
pub fn suggest_legal_move(state: &GameState) -> Option<FormalBall> {
    let mover = state.to_move();
    let Some(last) = state.last_ball() else {
        return Some(FormalBall::unit(state.config().dimension));
    };
    let candidate = match (&state.config().kind, mover) {
        (_, Player::Alice) => {
            last.with_radius(dummy_alice_radius(&state.config().kind, last)).ok()
        }
        (GameKind::Schmidt { beta, .. }, Player::Bob) => {
            last.with_radius(beta * last.radius()).ok()
        }
        (GameKind::BanachMazur, Player::Bob) | (GameKind::Bms { .. }, Player::Bob) => {
            last.with_radius(last.radius() / rat(2, 1)).ok()
        }
        (GameKind::Absolute { beta }, Player::Bob) => {
            let own = state.last_ball_of(Player::Bob)?;
            constructive_deletion_move(own, last, Some(&(beta * own.radius())))
        }
        (GameKind::Bmm { .. }, Player::Bob) => {
            let own = state.last_ball_of(Player::Bob)?;
            constructive_deletion_move(own, last, None)
        }
    };
    candidate.filter(|b| state.legal_move(mover, b).is_ok())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdversarialMode {
    /// Center each move on the small-denominator rational nearest to Bob's
    /// center (forces the simplex hyperplane through Alice's center).
    SmallDenominator,
    /// Push toward a corner of the allowed box.
    Corner,
}

/// Legal-but-hostile Alice for the Schmidt-style games.
pub struct AdversarialAlice {
    mode: AdversarialMode,
    rng: ChaCha8Rng,
    name: String,
}

impl AdversarialAlice {
    pub fn new(mode: AdversarialMode, seed: u64) -> Self {
        Self {
            mode,
            rng: ChaCha8Rng::seed_from_u64(seed),
            name: format!("adversarial:{mode:?}:seed={seed}"),
        }
    }
}

impl Strategy for AdversarialAlice {
    fn name(&self) -> &str {
        &self.name
    }

    fn next_move(&mut self, state: &GameState) -> StrategyMove {
        let Some(last) = state.last_ball() else {
            return StrategyMove::Resign("Alice cannot open".into());
        };
        let radius = dummy_alice_radius(&state.config().kind, last);
        let reach = last.radius() - &radius;
        if !reach.is_positive() {
            return match last.with_radius(radius) {
                Ok(b) => StrategyMove::Play(b),
                Err(e) => StrategyMove::Resign(e.to_string()),
            };
        }
        let center = match self.mode {
            AdversarialMode::SmallDenominator => {
                // nearest fraction within reach, smallest denominator first
                let coords = last
                    .center()
                    .coords()
                    .iter()
                    .map(|c| {
                        let (p, q) = crate::dio::minden::min_denominator_in(
                            &(c - &reach),
                            &(c + &reach),
                        );
                        Rational::new(p, q)
                    })
                    .collect();
                RationalPoint::new(coords).expect("dimension preserved")
            }
            AdversarialMode::Corner => {
                let coords = last
                    .center()
                    .coords()
                    .iter()
                    .map(|c| {
                        if self.rng.gen_bool(0.5) {
                            c + &reach
                        } else {
                            c - &reach
                        }
                    })
                    .collect();
                RationalPoint::new(coords).expect("dimension preserved")
            }
        };
        StrategyMove::Play(FormalBall::new(center, radius).expect("positive radius"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{GameConfig, GameState};

    fn cfg(kind: GameKind, d: usize) -> GameConfig {
        GameConfig::new(kind, d).unwrap()
    }

    #[test]
    fn random_bob_deterministic_per_seed() {
        for kind in [
            GameKind::Schmidt {
                alpha: rat(1, 2),
                beta: rat(1, 2),
            },
            GameKind::Bms { beta: rat(1, 5) },
            GameKind::Bmm { beta: rat(1, 3) },
        ] {
            let run = |seed: u64| {
                let mut st = GameState::new(cfg(kind.clone(), 1));
                let mut bob = bob_random(seed);
                let mut alice = alice_dummy();
                for _ in 0..10 {
                    let mover = st.to_move();
                    let mv = match mover {
                        Player::Bob => bob.next_move(&st),
                        Player::Alice => alice.next_move(&st),
                    };
                    let StrategyMove::Play(b) = mv else { panic!("baselines always move") };
                    st.apply(mover, b).unwrap();
                }
                st.history().to_vec()
            };
            assert_eq!(run(7), run(7));
            assert_ne!(run(7), run(8));
        }
    }

    #[test]
    fn dummy_alice_bms_radius_law() {
        let mut st = GameState::new(cfg(GameKind::Bms { beta: rat(1, 3) }, 1));
        st.apply(Player::Bob, FormalBall::unit(1)).unwrap();
        let mut alice = alice_dummy();
        let StrategyMove::Play(b) = alice.next_move(&st) else {
            panic!()
        };
        assert_eq!(*b.radius(), rat(1, 3));
        st.apply(Player::Alice, b).unwrap();
    }

    #[test]
    fn bmm_bob_always_has_constructive_move() {
        // Alice plays the hardest legal deletion (concentric, max radius);
        // Bob's constructive move must stay legal
        let beta = rat(1, 3);
        let mut st = GameState::new(cfg(GameKind::Bmm { beta: beta.clone() }, 2));
        st.apply(Player::Bob, FormalBall::unit(2)).unwrap();
        for _ in 0..12 {
            let own = st.last_ball_of(Player::Bob).unwrap().clone();
            let deletion = own.with_radius(&beta * own.radius()).unwrap();
            st.apply(Player::Alice, deletion.clone()).unwrap();
            let mv = constructive_deletion_move(&own, &deletion, None).expect("must exist");
            st.apply(Player::Bob, mv).unwrap();
        }
    }

    #[test]
    fn random_bob_fuzz_legality() {
        // bob_random never emits an illegal move across many rounds/games
        for (kind, d) in [
            (
                GameKind::Schmidt {
                    alpha: rat(2, 5),
                    beta: rat(1, 3),
                },
                1usize,
            ),
            (GameKind::Bms { beta: rat(1, 5) }, 1),
            (GameKind::Bms { beta: rat(1, 5) }, 2),
            (GameKind::Bmm { beta: rat(1, 3) }, 1),
            (GameKind::BanachMazur, 2),
            (GameKind::Absolute { beta: rat(1, 4) }, 1),
        ] {
            for seed in 0..5u64 {
                let mut st = GameState::new(cfg(kind.clone(), d));
                let mut bob = bob_random(seed);
                let mut alice = alice_dummy();
                for _ in 0..30 {
                    let mover = st.to_move();
                    let mv = match mover {
                        Player::Bob => bob.next_move(&st),
                        Player::Alice => alice.next_move(&st),
                    };
                    match mv {
                        StrategyMove::Play(b) => {
                            st.apply(mover, b).expect("baseline move must be legal")
                        }
                        _ => panic!("baselines should always find a move here"),
                    }
                }
            }
        }
    }
}
