//! Desk-scale sampler for the sets K_m = X ∖ ⋃_{r ≤ 1/m} g(B) induced by a
//! positional reply map f (with g(B) the open ball of f's reply).
//!
//! This is a sampler, not a decision procedure: K_m is a union over
//! uncountably many balls. A returned point was never deleted by any sampled
//! ball (sound for membership *refutation* of the complement); every point
//! not returned carries the concrete deleting ball as a checkable witness.

use crate::geom::rational::Rational;
use crate::geom::{ball_contains_point, FormalBall, RationalPoint};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KmError {
    #[error("grid step {step} must be finer than 1/m = {scale}")]
    GridTooCoarse { step: Rational, scale: Rational },
    #[error("m must be positive")]
    BadM,
}

/// A deleted grid point with its refutation witness: p ∈ g(ball) where
/// g(ball) is the open ball of `reply`.
#[derive(Debug, Clone)]
pub struct KmRefutation {
    pub point: RationalPoint,
    pub ball: FormalBall,
    pub reply: FormalBall,
}

#[derive(Debug, Clone)]
pub struct KmReport {
    pub kept: Vec<RationalPoint>,
    pub deleted: Vec<KmRefutation>,
    pub balls_sampled: usize,
}

/// Sample K_m on a grid inside `region`. Ball centers run over the same
/// grid; radii over the ladder 1/m, 1/(2m), 1/(4m), ... down to `grid_step`.
pub fn km_estimate(
    reply: impl Fn(&FormalBall) -> FormalBall,
    m: u32,
    region: &FormalBall,
    grid_step: &Rational,
) -> Result<KmReport, KmError> {
    if m == 0 {
        return Err(KmError::BadM);
    }
    let scale = Rational::new(1.into(), m.into());
    if grid_step >= &scale {
        return Err(KmError::GridTooCoarse {
            step: grid_step.clone(),
            scale,
        });
    }
    let grid = grid_points(region, grid_step);
    // radius ladder
    let mut radii = Vec::new();
    let mut r = scale.clone();
    while r >= *grid_step {
        radii.push(r.clone());
        r = r / Rational::from_integer(2.into());
    }
    let mut balls = Vec::with_capacity(grid.len() * radii.len());
    for c in &grid {
        for r in &radii {
            balls.push(FormalBall::new(c.clone(), r.clone()).expect("positive radius"));
        }
    }
    let replies: Vec<FormalBall> = balls.iter().map(&reply).collect();
    let mut kept = Vec::new();
    let mut deleted = Vec::new();
    'points: for p in grid {
        for (ball, rep) in balls.iter().zip(&replies) {
            if ball_contains_point(rep, &p, false).unwrap_or(false) {
                deleted.push(KmRefutation {
                    point: p,
                    ball: ball.clone(),
                    reply: rep.clone(),
                });
                continue 'points;
            }
        }
        kept.push(p);
    }
    Ok(KmReport {
        kept,
        deleted,
        balls_sampled: balls.len(),
    })
}

/// Integer multiples of `step` inside the region's box, per axis.
fn grid_points(region: &FormalBall, step: &Rational) -> Vec<RationalPoint> {
    let dim = region.dim();
    let mut axes: Vec<Vec<Rational>> = Vec::with_capacity(dim);
    for i in 0..dim {
        let lo = (region.center().coord(i) - region.radius()) / step;
        let hi = (region.center().coord(i) + region.radius()) / step;
        let mut ticks = Vec::new();
        let mut k = lo.ceil().to_integer();
        let k_hi = hi.floor().to_integer();
        while k <= k_hi {
            ticks.push(Rational::from_integer(k.clone()) * step);
            k += 1;
        }
        axes.push(ticks);
    }
    // cartesian product
    let mut out: Vec<Vec<Rational>> = vec![Vec::new()];
    for axis in &axes {
        let mut next = Vec::with_capacity(out.len() * axis.len());
        for partial in &out {
            for t in axis {
                let mut v = partial.clone();
                v.push(t.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter()
        .filter(|v| !v.is_empty())
        .map(|v| RationalPoint::new(v).expect("nonempty"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational::rat;

    #[test]
    fn concentric_reply_deletes_everything() {
        // reply = concentric fifth-radius ball: every grid point sits in the
        // open reply of the ball centered on it
        let region = FormalBall::new(RationalPoint::scalar(rat(1, 2)), rat(1, 2)).unwrap();
        let report = km_estimate(
            |b| b.with_radius(b.radius() * rat(1, 5)).unwrap(),
            3,
            &region,
            &rat(1, 27),
        )
        .unwrap();
        assert!(report.kept.is_empty());
        assert_eq!(report.deleted.len(), 28); // 0..=27 inclusive grid
    }

    #[test]
    fn coarse_grid_rejected() {
        let region = FormalBall::unit(1);
        assert!(matches!(
            km_estimate(|b| b.clone(), 3, &region, &rat(1, 2)),
            Err(KmError::GridTooCoarse { .. })
        ));
    }

    #[test]
    fn refinement_keeps_more() {
        // the m'-ladder for m' = 2m is a subset of the m-ladder, so fewer
        // deletions happen and the kept set grows
        let region = FormalBall::new(RationalPoint::scalar(rat(1, 2)), rat(1, 2)).unwrap();
        let reply = |b: &FormalBall| {
            let w = crate::porosity::cantor::cantor_witness(
                b.center().as_scalar().unwrap(),
                b.radius(),
            )
            .unwrap();
            FormalBall::new(RationalPoint::scalar(w), b.radius() * rat(1, 5)).unwrap()
        };
        let coarse = km_estimate(reply, 3, &region, &rat(1, 81)).unwrap();
        let fine = km_estimate(reply, 6, &region, &rat(1, 81)).unwrap();
        for p in &coarse.kept {
            assert!(fine.kept.contains(p), "{p} lost under refinement");
        }
    }
}
