//! Minimal-denominator rationals in an interval, by the Stern–Brocot /
//! continued-fraction descent. Runs in time polynomial in the bit size of the
//! endpoints, which matters because the rational-chasing Bob strategy calls
//! this on intervals whose endpoints grow every round.

use crate::geom::rational::Rational;
use num_bigint::BigInt;
use num_traits::One;

/// The reduced fraction with the smallest denominator in the closed interval
/// [lo, hi] (lo ≤ hi). Among equal denominators the numerically smallest
/// numerator is returned.
pub fn min_denominator_in(lo: &Rational, hi: &Rational) -> (BigInt, BigInt) {
    assert!(lo <= hi);
    // an integer in range wins outright
    let ceil_lo = lo.ceil().to_integer();
    if Rational::from_integer(ceil_lo.clone()) <= *hi {
        return (ceil_lo, BigInt::one());
    }
    // otherwise floor(lo) = floor(hi) =: f and we recurse on the reciprocal
    // of the fractional parts: x ∈ [lo, hi] ⟺ x = f + 1/y, y ∈ [1/(hi-f), 1/(lo-f)]
    let f = lo.floor();
    let fr = f.to_integer();
    let lo_frac = lo - &f;
    let hi_frac = hi - &f;
    debug_assert!(lo_frac.is_positive() && hi_frac.is_positive());
    let (p, q) = min_denominator_in(&hi_frac.recip(), &lo_frac.recip());
    // x = f + q/p, denominator p
    (&fr * &p + &q, p)
}

use num_traits::Signed;

/// Smallest denominator q ≥ q_min carrying a reduced fraction inside
/// [lo, hi], found by scanning candidate denominators upward once the
/// interval is wide enough, i.e. when q·(hi-lo) ≥ 2 a reduced hit is
/// guaranteed within O(1) further steps.
///
/// Returns (p, q). Only used on intervals known to contain rationals of the
/// wanted denominators; a scan cap guards against misuse.
pub fn min_denominator_at_least(
    lo: &Rational,
    hi: &Rational,
    q_min: &BigInt,
    scan_cap: u64,
) -> Option<(BigInt, BigInt)> {
    let (p0, q0) = min_denominator_in(lo, hi);
    if q0 >= *q_min {
        return Some((p0, q0));
    }
    // The global minimum is below q_min: scan q upward from q_min under a
    // shared work budget. The inner p-loop is exhaustive per q so minimality
    // is exact; in practice a coprime p appears within a few steps.
    let mut q = q_min.clone();
    let mut budget = scan_cap;
    loop {
        let lo_p = (lo * Rational::from_integer(q.clone())).ceil().to_integer();
        let hi_p = (hi * Rational::from_integer(q.clone())).floor().to_integer();
        let mut p = lo_p;
        while p <= hi_p {
            if budget == 0 {
                return None;
            }
            budget -= 1;
            if num_integer::Integer::gcd(&p, &q).is_one() {
                return Some((p, q));
            }
            p += 1;
        }
        if budget == 0 {
            return None;
        }
        budget -= 1;
        q += 1;
    }
}
