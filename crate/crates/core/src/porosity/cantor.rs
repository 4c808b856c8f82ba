//! The middle-thirds Cantor set as an exact oracle, and its uniform
//! 1/5-porosity witness.

use super::certificate::{PorosityCertificate, WitnessError};
use super::{Answer, SetOracle};
use crate::geom::rational::{rat, Rational};
use crate::geom::{FormalBall, RationalPoint};
use num_traits::{One, Zero};
use std::collections::HashSet;
use std::sync::Arc;

/// The middle-thirds Cantor set C ⊂ [0, 1], d = 1.
#[derive(Debug, Clone, Default)]
pub struct CantorSet;

pub fn cantor_oracle() -> Arc<dyn SetOracle> {
    Arc::new(CantorSet)
}

impl CantorSet {
    /// Exact membership of a rational: iterate the expanding self-map
    /// x ↦ 3x on [0,1/3], x ↦ 3x−2 on [2/3,1]; a rational's orbit has
    /// finitely many states (denominators divide the original), so either a
    /// gap is reached (not a member) or the orbit cycles (member).
    pub fn member(x: &Rational) -> bool {
        if x < &Rational::zero() || x > &Rational::one() {
            return false;
        }
        let third = rat(1, 3);
        let two_thirds = rat(2, 3);
        let mut cur = x.clone();
        let mut seen: HashSet<Rational> = HashSet::new();
        loop {
            if cur > third && cur < two_thirds {
                return false;
            }
            if !seen.insert(cur.clone()) {
                return true;
            }
            cur = if cur <= third {
                rat(3, 1) * &cur
            } else {
                rat(3, 1) * &cur - rat(2, 1)
            };
        }
    }

    /// Is the interval (open or closed) disjoint from C? Descends into the
    /// deepest triadic gap; each recursion triples the interval length so the
    /// depth is bounded by the bit size of the length.
    pub fn interval_disjoint(lo: &Rational, hi: &Rational, closed: bool) -> bool {
        debug_assert!(lo <= hi);
        let mut lo = lo.clone();
        let mut hi = hi.clone();
        let zero = Rational::zero();
        let one = Rational::one();
        let third = rat(1, 3);
        let two_thirds = rat(2, 3);
        loop {
            if closed {
                if hi < zero || lo > one {
                    return true;
                }
                // an endpoint of [0,1] or of a gap inside the interval is in C
                if lo <= zero || hi >= one {
                    return false; // 0 or 1 lies in [lo, hi]
                }
                if lo <= third && third <= hi {
                    return false;
                }
                if lo <= two_thirds && two_thirds <= hi {
                    return false;
                }
            } else {
                if hi <= zero || lo >= one {
                    return true;
                }
                if lo < zero {
                    return false; // 0 ∈ (lo, hi)
                }
                if hi > one {
                    return false; // 1 ∈ (lo, hi)
                }
                if lo < third && third < hi {
                    return false;
                }
                if lo < two_thirds && two_thirds < hi {
                    return false;
                }
            }
            // now the interval sits inside one level-1 piece or the gap
            // (the boundary-touching cases already returned false above)
            if hi <= third {
                lo = rat(3, 1) * &lo;
                hi = rat(3, 1) * &hi;
            } else if lo >= two_thirds {
                lo = rat(3, 1) * &lo - rat(2, 1);
                hi = rat(3, 1) * &hi - rat(2, 1);
            } else {
                // inside the middle gap
                return true;
            }
        }
    }
}

impl SetOracle for CantorSet {
    fn tag(&self) -> String {
        "cantor".into()
    }

    fn dimension(&self) -> usize {
        1
    }

    fn point_member(&self, p: &RationalPoint) -> Answer {
        match p.as_scalar() {
            Some(x) => Answer::from_bool(Self::member(x)),
            None => Answer::Unknown,
        }
    }

    fn ball_disjoint(&self, b: &FormalBall, closed: bool) -> Answer {
        match b.interval() {
            Some((lo, hi)) => Answer::from_bool(Self::interval_disjoint(&lo, &hi, closed)),
            None => Answer::Unknown,
        }
    }

    fn ball_inside(&self, b: &FormalBall) -> Answer {
        // C has empty interior: no positive-radius ball fits inside
        if b.dim() == 1 {
            Answer::No
        } else {
            Answer::Unknown
        }
    }
}

/// The footnote witness for uniform 1/5-porosity of C: given B(x, r) with
/// r ≤ 1, returns y with B°(y, r/5) ⊂ B(x, r) and B°(y, r/5) ∩ C = ∅.
///
/// Reductions, in order: balls clear of [0, 1] or inside the central gap
/// keep their center; balls missing one outer third are zoomed by the
/// triadic similarity onto the straddling case; straddling balls with
/// x < 1/2 are reflected by t ↦ 1 − t; the remaining straddling case is the
/// footnote's dichotomy (3r/5 ≥ 1/2 first, so the boundary case r = 5/6
/// takes y = 1/2 + 4r/5).
pub fn cantor_witness(x: &Rational, r: &Rational) -> Result<Rational, WitnessError> {
    if r > &Rational::one() {
        return Err(WitnessError::RadiusAboveScale {
            r: r.clone(),
            r0: Rational::one(),
        });
    }
    let depth_cap = 128
        + 2 * (crate::geom::rational::bit_size(x) + crate::geom::rational::bit_size(r)) as usize;
    witness_rec(x.clone(), r.clone(), 0, depth_cap)
}

fn witness_rec(
    x: Rational,
    r: Rational,
    depth: usize,
    cap: usize,
) -> Result<Rational, WitnessError> {
    if depth > cap {
        return Err(WitnessError::DepthExceeded(cap));
    }
    let lo = &x - &r;
    let hi = &x + &r;
    let third = rat(1, 3);
    let two_thirds = rat(2, 3);
    // clear of [0,1] entirely, or inside the central gap: concentric works
    if lo >= Rational::one() || hi <= Rational::zero() {
        return Ok(x);
    }
    if lo >= third && hi <= two_thirds {
        return Ok(x);
    }
    // zoom: the ball misses one outer third
    if lo > third {
        let y = witness_rec(rat(3, 1) * &x - rat(2, 1), rat(3, 1) * &r, depth + 1, cap)?;
        return Ok((y + rat(2, 1)) / rat(3, 1));
    }
    if hi < two_thirds {
        let y = witness_rec(rat(3, 1) * &x, rat(3, 1) * &r, depth + 1, cap)?;
        return Ok(y / rat(3, 1));
    }
    // straddling case; reflect to x ≥ 1/2
    if x < rat(1, 2) {
        let y = witness_rec(Rational::one() - &x, r, depth + 1, cap)?;
        return Ok(Rational::one() - y);
    }
    if rat(3, 5) * &r >= rat(1, 2) {
        Ok(rat(1, 2) + rat(4, 5) * &r)
    } else {
        Ok(rat(1, 2))
    }
}

/// β = 1/5, r₀ = 1, the footnote witness, and the exact oracle, bundled.
pub fn cantor_certificate() -> PorosityCertificate {
    PorosityCertificate::new(
        rat(1, 5),
        Rational::one(),
        cantor_oracle(),
        Arc::new(|ball: &FormalBall| {
            let x = ball
                .center()
                .as_scalar()
                .ok_or(WitnessError::WrongDimension)?;
            let y = cantor_witness(x, ball.radius())?;
            Ok(RationalPoint::scalar(y))
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn membership_basics() {
        // 1/4 = 0.020202...₃ is in C; 1/2 = 0.111...₃ is not
        assert!(CantorSet::member(&rat(1, 4)));
        assert!(!CantorSet::member(&rat(1, 2)));
        for x in [rat(0, 1), rat(1, 1), rat(1, 3), rat(2, 3), rat(1, 9), rat(7, 9)] {
            assert!(CantorSet::member(&x), "{x} should be in C");
        }
        for x in [rat(2, 5), rat(5, 9), rat(1, 5), rat(-1, 10), rat(11, 10)] {
            assert!(!CantorSet::member(&x), "{x} should not be in C");
        }
        assert!(CantorSet::member(&rat(3, 4))); // 0.202020...₃
    }

    #[test]
    fn ball_disjoint_first_gap() {
        // B(1/2, 1/10) = [2/5, 3/5] ⊂ (1/3, 2/3)
        assert!(CantorSet::interval_disjoint(&rat(2, 5), &rat(3, 5), true));
        // the closed interval [1/3, 2/3] touches C at both ends
        assert!(!CantorSet::interval_disjoint(&rat(1, 3), &rat(2, 3), true));
        // but the open interval (1/3, 2/3) is the gap itself
        assert!(CantorSet::interval_disjoint(&rat(1, 3), &rat(2, 3), false));
    }

    #[test]
    fn deep_gap_descent() {
        // (7/27, 8/27) is a level-3 gap
        assert!(CantorSet::interval_disjoint(&rat(7, 27), &rat(8, 27), false));
        assert!(!CantorSet::interval_disjoint(&rat(7, 27), &rat(8, 27), true));
        // [1/27 + tiny, 2/27 - tiny] ⊂ the (1/27, 2/27) gap
        assert!(CantorSet::interval_disjoint(&rat(10, 243), &rat(17, 243), true));
    }

    #[test]
    fn witness_footnote_cases() {
        // r/5 = 1/10 ≤ 1/6 → y = 1/2, open witness ball (2/5, 3/5)
        assert_eq!(cantor_witness(&rat(1, 2), &rat(1, 2)).unwrap(), rat(1, 2));
        // 3r/5 = 1/2 ≥ 1/2 → y = 1/2 + 4r/5 = 7/6
        assert_eq!(cantor_witness(&rat(5, 6), &rat(5, 6)).unwrap(), rat(7, 6));
    }

    #[test]
    fn witness_zoomed_case_validated_by_oracle() {
        let (x, r) = (rat(1, 18), rat(1, 18));
        let y = cantor_witness(&x, &r).unwrap();
        let beta_r = rat(1, 5) * &r;
        // shrink containment and open-ball disjointness
        assert!((&y - &x).abs() + &beta_r <= r);
        assert!(CantorSet::interval_disjoint(
            &(&y - &beta_r),
            &(&y + &beta_r),
            false
        ));
    }

    #[test]
    fn witness_scale_error() {
        assert!(matches!(
            cantor_witness(&rat(0, 1), &rat(3, 2)),
            Err(WitnessError::RadiusAboveScale { .. })
        ));
    }
}
