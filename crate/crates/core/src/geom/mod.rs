//! Exact rational geometry of ℚ^d under the sup norm.
//!
//! The norm is fixed to the sup norm so that every distance between rational
//! points is itself rational and every predicate below is exactly decidable.
//! Dirichlet's theorem, which the `dio` module relies on, holds verbatim in
//! this norm.

mod ball;
mod point;
pub mod rational;

pub use ball::FormalBall;
pub use point::RationalPoint;
pub use rational::{parse_rational, rat, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("a point needs at least one coordinate")]
    EmptyPoint,
    #[error("ball radius must be positive, got {0}")]
    NonPositiveRadius(Rational),
    #[error("cannot parse {0:?} as a rational (use \"p/q\" or \"p\"; floats are rejected)")]
    BadRational(String),
}

/// Sup-norm distance `max_i |p_i - q_i|`. Exact and symmetric.
pub fn dist(p: &RationalPoint, q: &RationalPoint) -> Result<Rational, GeomError> {
    p.check_same_dim(q)?;
    let mut best = Rational::from_integer(0.into());
    for (a, b) in p.coords().iter().zip(q.coords()) {
        let d = rational::abs(&(a - b));
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

/// The shrink order on formal balls: `inner ≤ outer` iff
/// `inner.radius + dist(outer.center, inner.center) ≤ outer.radius`.
///
/// This is stronger than set inclusion of the corresponding balls (concentric
/// balls compare by radius alone). The inequality is non-strict; ties are
/// legal moves.
pub fn shrink_leq(inner: &FormalBall, outer: &FormalBall) -> Result<bool, GeomError> {
    let d = dist(inner.center(), outer.center())?;
    Ok(inner.radius() + &d <= *outer.radius())
}

/// Formal disjointness: `dist(a.center, b.center) ≥ a.radius + b.radius`
/// (non-strict, so tangent balls count as disjoint).
pub fn formally_disjoint(a: &FormalBall, b: &FormalBall) -> Result<bool, GeomError> {
    let d = dist(a.center(), b.center())?;
    Ok(d >= a.radius() + b.radius())
}

/// Closed (`d ≤ r`) or open (`d < r`) ball membership.
pub fn ball_contains_point(
    b: &FormalBall,
    p: &RationalPoint,
    closed: bool,
) -> Result<bool, GeomError> {
    let d = dist(b.center(), p)?;
    Ok(if closed { d <= *b.radius() } else { d < *b.radius() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational::rat;

    fn pt(cs: &[Rational]) -> RationalPoint {
        RationalPoint::new(cs.to_vec()).unwrap()
    }

    fn ball(cs: &[Rational], r: Rational) -> FormalBall {
        FormalBall::new(pt(cs), r).unwrap()
    }

    #[test]
    fn dist_examples() {
        assert_eq!(dist(&pt(&[rat(0, 1)]), &pt(&[rat(1, 1)])).unwrap(), rat(1, 1));
        let p = pt(&[rat(1, 2), rat(1, 3)]);
        assert_eq!(dist(&p, &p).unwrap(), rat(0, 1));
        let q = pt(&[rat(1, 4), rat(1, 1)]);
        assert_eq!(dist(&p, &q).unwrap(), rat(2, 3));
    }

    #[test]
    fn dist_dimension_mismatch() {
        let e = dist(&pt(&[rat(0, 1)]), &pt(&[rat(0, 1), rat(0, 1)])).unwrap_err();
        assert_eq!(e, GeomError::DimensionMismatch { left: 1, right: 2 });
    }

    #[test]
    fn shrink_examples() {
        // 1/2 + 1/2 ≤ 1
        let inner = ball(&[rat(1, 2)], rat(1, 2));
        let outer = ball(&[rat(0, 1)], rat(1, 1));
        assert!(shrink_leq(&inner, &outer).unwrap());
        // concentric balls compare by radius alone
        let big = ball(&[rat(0, 1)], rat(2, 1));
        assert!(!shrink_leq(&big, &outer).unwrap());
        assert!(shrink_leq(&outer, &big).unwrap());
        // 1/4 + 1/3 = 7/12 > 1/2
        let a = ball(&[rat(1, 3)], rat(1, 4));
        let b = ball(&[rat(0, 1)], rat(1, 2));
        assert!(!shrink_leq(&a, &b).unwrap());
    }

    #[test]
    fn disjoint_examples() {
        let a = ball(&[rat(0, 1)], rat(1, 1));
        assert!(formally_disjoint(&a, &ball(&[rat(2, 1)], rat(1, 1))).unwrap());
        assert!(!formally_disjoint(&a, &ball(&[rat(3, 2)], rat(1, 1))).unwrap());
        // sup-distance 1/2 = 1/4 + 1/4, tangency counts
        let c = ball(&[rat(0, 1), rat(0, 1)], rat(1, 4));
        let d = ball(&[rat(1, 2), rat(0, 1)], rat(1, 4));
        assert!(formally_disjoint(&c, &d).unwrap());
    }

    #[test]
    fn containment_open_vs_closed() {
        let b = ball(&[rat(0, 1)], rat(1, 1));
        let boundary = pt(&[rat(1, 1)]);
        assert!(ball_contains_point(&b, &boundary, true).unwrap());
        assert!(!ball_contains_point(&b, &boundary, false).unwrap());
        let center = pt(&[rat(0, 1)]);
        assert!(ball_contains_point(&b, &center, true).unwrap());
        assert!(ball_contains_point(&b, &center, false).unwrap());
    }
}
