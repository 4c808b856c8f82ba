//! Certified rational enclosures for the few irrational report values the
//! estimators emit (logs, square roots). Nothing here is ever consulted by a
//! game-legality path.

use crate::geom::rational::{dyadic_bracket, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A closed rational interval [lo, hi] guaranteed to contain the true value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        let k = Rational::from_integer(k.clone());
        if k.is_negative() {
            Self::new(&self.hi * &k, &self.lo * &k)
        } else {
            Self::new(&self.lo * &k, &self.hi * &k)
        }
    }

    /// Division for intervals with hi of the divisor > 0 and lo > 0.
    pub fn div_pos(&self, other: &Self) -> Self {
        assert!(other.lo.is_positive(), "divisor must be strictly positive");
        let cands = [
            &self.lo / &other.lo,
            &self.lo / &other.hi,
            &self.hi / &other.lo,
            &self.hi / &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        Self::new(lo, hi)
    }

    /// Approximate midpoint as f64, for display only.
    pub fn approx_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / Rational::from_integer(2.into());
        rational_to_f64(&mid)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

pub fn rational_to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Enclosure of ln 2 to roughly `bits` bits: 2·atanh(1/3).
fn ln2(bits: u32) -> Interval {
    atanh_series(&Rational::new(BigInt::one(), BigInt::from(3)), bits)
}

/// Enclosure of ln x for x > 0 via argument reduction x = 2^k·m, m ∈ [1, 2),
/// then ln m = 2·atanh((m-1)/(m+1)).
pub fn ln_enclosure(x: &Rational, bits: u32) -> Interval {
    assert!(x.is_positive(), "ln needs a positive argument");
    // Round the argument outward to dyadic endpoints first so the series runs
    // on small numbers; ln is increasing, so enclosing both endpoints works.
    let (xl, xh) = dyadic_bracket(x, bits + 4);
    let xl = if xl.is_positive() { xl } else { x.clone() };
    let lo = ln_enclosure_raw(&xl, bits).lo;
    let hi = ln_enclosure_raw(&xh, bits).hi;
    Interval::new(lo, hi)
}

fn ln_enclosure_raw(x: &Rational, bits: u32) -> Interval {
    let k = ilog2_floor(x);
    let two_k = pow2(k);
    let m = x / &two_k;
    debug_assert!(m >= Rational::one() && m < Rational::from_integer(4.into()));
    let u = (&m - Rational::one()) / (&m + Rational::one());
    let ln_m = if u.is_zero() {
        Interval::point(Rational::zero())
    } else {
        atanh_series(&u, bits)
    };
    let ln2_enc = ln2(bits);
    ln_m.add(&ln2_enc.scale_int(&BigInt::from(k)))
}

/// 2·Σ u^{2j+1}/(2j+1) with the geometric tail bound, for 0 < u ≤ 1/2.
fn atanh_series(u: &Rational, bits: u32) -> Interval {
    assert!(u.is_positive() && *u <= Rational::new(BigInt::one(), BigInt::from(2)));
    let eps = Rational::new(BigInt::one(), BigInt::one() << bits);
    let u2 = u * u;
    let mut term = u.clone();
    let mut sum = Rational::zero();
    let mut j: u64 = 0;
    loop {
        sum += &term / Rational::from_integer(BigInt::from(2 * j + 1));
        term *= &u2;
        j += 1;
        // tail ≤ term/(2j+1) · 1/(1-u²)
        let tail = (&term / Rational::from_integer(BigInt::from(2 * j + 1)))
            / (Rational::one() - &u2);
        if tail < eps {
            let two = Rational::from_integer(2.into());
            let lo = &two * &sum;
            let hi = &two * &(&sum + &tail);
            // keep endpoints on small denominators
            let (l, _) = dyadic_bracket(&lo, bits + 8);
            let (_, h) = dyadic_bracket(&hi, bits + 8);
            return Interval::new(l, h);
        }
        // terms shrink geometrically; denominators stay tame because u is
        // dyadic-rounded by the callers
        if j > 4 * bits as u64 + 64 {
            // unreachable for u ≤ 1/2; defensive resize of the tail bound
            let two = Rational::from_integer(2.into());
            let tail = (&term / Rational::from_integer(BigInt::from(2 * j + 1)))
                / (Rational::one() - &u2);
            return Interval::new(&two * &sum, &two * &(&sum + &tail));
        }
    }
}

fn ilog2_floor(x: &Rational) -> i64 {
    // floor(log2 x) via bit lengths, corrected exactly
    let nb = x.numer().magnitude().bits() as i64;
    let db = x.denom().magnitude().bits() as i64;
    let mut k = nb - db;
    loop {
        let p = pow2(k);
        if &p > x {
            k -= 1;
            continue;
        }
        if &pow2(k + 1) <= x {
            k += 1;
            continue;
        }
        return k;
    }
}

fn pow2(k: i64) -> Rational {
    if k >= 0 {
        Rational::from_integer(BigInt::one() << k as u64)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-k) as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational::rat;

    #[test]
    fn ln_of_one_is_zero() {
        let e = ln_enclosure(&rat(1, 1), 40);
        assert!(e.contains(&rat(0, 1)));
        assert!(e.width() < rat(1, 1 << 30));
    }

    #[test]
    fn ln2_value() {
        // ln 2 = 0.693147180559945...
        let e = ln_enclosure(&rat(2, 1), 48);
        assert!(e.lo < rat(693_147_181, 1_000_000_000));
        assert!(e.hi > rat(693_147_180, 1_000_000_000));
        assert!(e.width() < rat(1, 1 << 40));
    }

    #[test]
    fn ln_of_large_and_small() {
        // ln 10⁶ ≈ 13.8155, ln(1/10⁶) is its negative
        let e = ln_enclosure(&rat(1_000_000, 1), 48);
        assert!(e.lo > rat(138_155, 10_000) && e.hi < rat(138_156, 10_000));
        let s = ln_enclosure(&rat(1, 1_000_000), 48);
        assert!(s.hi < rat(-138_155, 10_000) && s.lo > rat(-138_156, 10_000));
    }

    #[test]
    fn monotone_in_argument() {
        let a = ln_enclosure(&rat(3, 2), 40);
        let b = ln_enclosure(&rat(8, 5), 40);
        assert!(a.hi < b.lo);
    }
}
