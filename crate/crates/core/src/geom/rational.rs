//! The scalar type and small helpers around it.
//!
//! `Rational` is `num_rational::BigRational`: arbitrary precision, always in
//! lowest terms, denominator > 0, sign on the numerator. Its `Display` /
//! `FromStr` are exactly the wire format used everywhere ("p/q", or "p" when
//! the denominator is 1), so transcript serialization is bit-exact for free.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use super::GeomError;

pub type Rational = num_rational::BigRational;

/// Shorthand constructor used all over the tests.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn abs(x: &Rational) -> Rational {
    if x.is_negative() {
        -x.clone()
    } else {
        x.clone()
    }
}

/// Parse a rational from its wire form. Rejects anything `BigRational` cannot
/// parse exactly — in particular decimal floats like "0.5".
pub fn parse_rational(s: &str) -> Result<Rational, GeomError> {
    let t = s.trim();
    Rational::from_str(t).map_err(|_| GeomError::BadRational(s.to_string()))
}

/// `x^k` for signed integer exponents (x ≠ 0 when k < 0).
pub fn pow_i(x: &Rational, k: i64) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    let mut acc = Rational::one();
    let mut base = if k < 0 { x.recip() } else { x.clone() };
    let mut n = k.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

/// Largest integer n ≥ 0 with n^k ≤ x (x ≥ 0, k ≥ 1). Exact.
pub fn floor_nth_root(x: &Rational, k: u32) -> BigInt {
    assert!(!x.is_negative());
    // candidate from the floor, then correct by exact comparison
    let fl = x.floor().to_integer();
    let mag = fl.magnitude().clone();
    let mut n = BigInt::from_biguint(Sign::Plus, nth_root_biguint(&mag, k));
    // n^k ≤ x < (n+1)^k after adjustment
    loop {
        let p = pow_bigint(&n, k);
        if Rational::from_integer(p) > *x {
            n -= 1;
            continue;
        }
        let p1 = pow_bigint(&(&n + 1), k);
        if Rational::from_integer(p1) <= *x {
            n += 1;
            continue;
        }
        return n;
    }
}

fn pow_bigint(x: &BigInt, k: u32) -> BigInt {
    x.pow(k)
}

fn nth_root_biguint(x: &BigUint, k: u32) -> BigUint {
    if x.is_zero() {
        return BigUint::zero();
    }
    x.nth_root(k)
}

/// Outward dyadic bracket `[lo, hi]` of `x` with `hi - lo ≤ 2^-bits`.
/// Used to keep enclosure arithmetic on small denominators.
pub fn dyadic_bracket(x: &Rational, bits: u32) -> (Rational, Rational) {
    let scale = BigInt::one() << bits;
    let scaled = x * Rational::from_integer(scale.clone());
    let lo = scaled.floor().to_integer();
    let hi = scaled.ceil().to_integer();
    let den = Rational::from_integer(scale);
    (
        Rational::from_integer(lo) / den.clone(),
        Rational::from_integer(hi) / den,
    )
}

/// Total bit size of numerator plus denominator; a cheap complexity measure.
pub fn bit_size(x: &Rational) -> u64 {
    x.numer().magnitude().bits() + x.denom().magnitude().bits()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format_round_trip() {
        for s in ["3/4", "-3/4", "7", "0", "-22/7", "355/113"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn floats_rejected() {
        for s in ["0.5", "1e3", "", "1/2/3", "one"] {
            assert!(parse_rational(s).is_err(), "{s} should not parse");
        }
    }

    #[test]
    fn normalization_is_eager() {
        let r = parse_rational("6/4").unwrap();
        assert_eq!(r.to_string(), "3/2");
        let r = parse_rational("2/-4").unwrap();
        assert_eq!(r.to_string(), "-1/2");
    }

    #[test]
    fn nth_root_floor() {
        assert_eq!(floor_nth_root(&rat(48, 1), 3), BigInt::from(3));
        assert_eq!(floor_nth_root(&rat(27, 1), 3), BigInt::from(3));
        assert_eq!(floor_nth_root(&rat(26, 1), 3), BigInt::from(2));
        assert_eq!(floor_nth_root(&rat(1, 2), 2), BigInt::from(0));
    }

    #[test]
    fn dyadic_bracket_encloses() {
        let x = rat(1, 3);
        let (lo, hi) = dyadic_bracket(&x, 16);
        assert!(lo <= x && x <= hi);
        assert!(&hi - &lo <= rat(1, 65536));
    }
}
