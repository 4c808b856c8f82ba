//! The move-legality predicate, one arm per (game, mover).

use super::{GameKind, GameState, Player, RuleViolation};
use crate::geom::{dist, FormalBall};
use crate::Rational;

pub(super) fn judge(
    state: &GameState,
    mover: Player,
    mv: &FormalBall,
) -> Result<(), RuleViolation> {
    let expected = state.to_move();
    if mover != expected {
        return Err(RuleViolation::WrongMover { expected });
    }
    if mv.dim() != state.config().dimension {
        return Err(RuleViolation::DimensionMismatch {
            expected: state.config().dimension,
            got: mv.dim(),
        });
    }
    let Some(last) = state.last_ball() else {
        return Ok(()); // Bob's opening ball is unconstrained
    };
    match (&state.config().kind, mover) {
        (GameKind::Schmidt { alpha, .. }, Player::Alice) => {
            require_radius_eq(mv, &(alpha * last.radius()), "alpha * r")?;
            require_nested(mv, last)
        }
        (GameKind::Schmidt { beta, .. }, Player::Bob) => {
            require_radius_eq(mv, &(beta * last.radius()), "beta * r'")?;
            require_nested(mv, last)
        }
        (GameKind::BanachMazur, _) => require_nested(mv, last),
        (GameKind::Bms { beta }, Player::Alice) => {
            require_radius_eq(mv, &(beta * last.radius()), "beta * r")?;
            require_nested(mv, last)
        }
        (GameKind::Bms { .. }, Player::Bob) => require_nested(mv, last),
        (GameKind::Absolute { beta }, Player::Alice) => {
            // deletion: position free, radius capped
            require_radius_le(mv, &(beta * last.radius()), "beta * r")
        }
        (GameKind::Absolute { beta }, Player::Bob) => {
            let own = state
                .last_ball_of(Player::Bob)
                .expect("Bob has moved before Alice");
            require_radius_ge(mv, &(beta * own.radius()), "beta * r")?;
            require_nested(mv, own)?;
            require_disjoint(mv, last)
        }
        (GameKind::Bmm { beta }, Player::Alice) => {
            require_radius_le(mv, &(beta * last.radius()), "beta * r")
        }
        (GameKind::Bmm { .. }, Player::Bob) => {
            let own = state
                .last_ball_of(Player::Bob)
                .expect("Bob has moved before Alice");
            require_nested(mv, own)?;
            require_disjoint(mv, last)
        }
    }
}

fn require_radius_eq(
    mv: &FormalBall,
    required: &Rational,
    rule: &'static str,
) -> Result<(), RuleViolation> {
    if mv.radius() != required {
        return Err(RuleViolation::RadiusNotEqual {
            rule,
            required: required.clone(),
            got: mv.radius().clone(),
        });
    }
    Ok(())
}

fn require_radius_le(
    mv: &FormalBall,
    max: &Rational,
    rule: &'static str,
) -> Result<(), RuleViolation> {
    if mv.radius() > max {
        return Err(RuleViolation::RadiusTooLarge {
            rule,
            max: max.clone(),
            got: mv.radius().clone(),
        });
    }
    Ok(())
}

fn require_radius_ge(
    mv: &FormalBall,
    min: &Rational,
    rule: &'static str,
) -> Result<(), RuleViolation> {
    if mv.radius() < min {
        return Err(RuleViolation::RadiusTooSmall {
            rule,
            min: min.clone(),
            got: mv.radius().clone(),
        });
    }
    Ok(())
}

fn require_nested(mv: &FormalBall, outer: &FormalBall) -> Result<(), RuleViolation> {
    let d = dist(mv.center(), outer.center()).expect("dimensions already checked");
    let lhs = mv.radius() + &d;
    if lhs > *outer.radius() {
        return Err(RuleViolation::NotNested {
            target: outer.clone(),
            lhs,
            rhs: outer.radius().clone(),
        });
    }
    Ok(())
}

fn require_disjoint(mv: &FormalBall, other: &FormalBall) -> Result<(), RuleViolation> {
    let d = dist(mv.center(), other.center()).expect("dimensions already checked");
    let required = mv.radius() + other.radius();
    if d < required {
        return Err(RuleViolation::NotFormallyDisjoint {
            other: other.clone(),
            dist: d,
            required,
        });
    }
    Ok(())
}
