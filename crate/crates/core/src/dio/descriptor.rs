//! Descriptors for the real numbers the estimators accept, and exact
//! arithmetic for quadratic irrationals.

use super::DioError;
use crate::geom::rational::{dyadic_bracket, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A real number given exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealDescriptor {
    /// A rational value.
    Rational(Rational),
    /// (P + √D)/Q with D > 0 a non-square.
    Quadratic { p: BigInt, d: BigInt, q: BigInt },
    /// An explicit partial-quotient prefix [a0; a1, a2, ...]. Only the digits
    /// given are known; estimators work with the sandwich the prefix defines.
    CfStream(Vec<BigInt>),
}

impl RealDescriptor {
    pub fn sqrt(d: i64) -> Result<Self, DioError> {
        Self::quadratic(BigInt::zero(), BigInt::from(d), BigInt::one())
    }

    /// The golden ratio (1 + √5)/2.
    pub fn golden() -> Self {
        Self::quadratic(BigInt::one(), BigInt::from(5), BigInt::from(2)).unwrap()
    }

    pub fn quadratic(p: BigInt, d: BigInt, q: BigInt) -> Result<Self, DioError> {
        if q.is_zero() {
            return Err(DioError::ZeroDenominator);
        }
        if !d.is_positive() || is_square(&d) {
            return Err(DioError::BadDiscriminant(d));
        }
        Ok(Self::Quadratic { p, d, q })
    }

    pub fn cf_stream(quotients: Vec<BigInt>) -> Result<Self, DioError> {
        if quotients.is_empty() {
            return Err(DioError::EmptyQuotients);
        }
        if quotients.iter().skip(1).any(|a| !a.is_positive()) {
            return Err(DioError::BadQuotient);
        }
        Ok(Self::CfStream(quotients))
    }

    /// Exact value when the descriptor is rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Self::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// The value as an exact quadratic-field element, when representable.
    pub fn quad_value(&self) -> Option<QuadValue> {
        match self {
            Self::Rational(r) => Some(QuadValue::from_rational(r.clone())),
            Self::Quadratic { p, d, q } => Some(QuadValue {
                a: Rational::new(p.clone(), q.clone()),
                b: Rational::new(BigInt::one(), q.clone()),
                d: d.clone(),
            }),
            Self::CfStream(_) => None,
        }
    }
}

impl fmt::Display for RealDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealDescriptor::Rational(r) => write!(f, "{r}"),
            RealDescriptor::Quadratic { p, d, q } => write!(f, "({p}+sqrt{d})/{q}"),
            RealDescriptor::CfStream(a) => {
                write!(f, "[{}", a[0])?;
                for (i, x) in a.iter().enumerate().skip(1) {
                    write!(f, "{}{x}", if i == 1 { ";" } else { "," })?;
                }
                write!(f, "]")
            }
        }
    }
}

fn is_square(x: &BigInt) -> bool {
    if x.is_negative() {
        return false;
    }
    let r = x.sqrt();
    &(&r * &r) == x
}

/// An element a + b√D of a real quadratic field, with exact comparisons.
#[derive(Debug, Clone)]
pub struct QuadValue {
    pub a: Rational,
    pub b: Rational,
    /// positive non-square (b = 0 tolerates any marker value)
    pub d: BigInt,
}

impl QuadValue {
    pub fn from_rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            d: BigInt::from(2),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign of a + b√D.
    pub fn sign(&self) -> Ordering {
        if self.b.is_zero() {
            return self.a.cmp(&Rational::zero());
        }
        if self.a.is_zero() {
            return self.b.cmp(&Rational::zero());
        }
        let sa = self.a.is_positive();
        let sb = self.b.is_positive();
        if sa && sb {
            return Ordering::Greater;
        }
        if !sa && !sb {
            return Ordering::Less;
        }
        // opposite signs: compare a² with b²·D; sign follows the larger side
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Equal => Ordering::Equal, // impossible for non-square D unless b = 0
            Ordering::Greater => {
                if sa {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            Ordering::Less => {
                if sb {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    pub fn cmp_rational(&self, t: &Rational) -> Ordering {
        Self {
            a: &self.a - t,
            b: self.b.clone(),
            d: self.d.clone(),
        }
        .sign()
    }

    pub fn abs(&self) -> Self {
        match self.sign() {
            Ordering::Less => Self {
                a: -self.a.clone(),
                b: -self.b.clone(),
                d: self.d.clone(),
            },
            _ => self.clone(),
        }
    }

    pub fn sub_rational(&self, t: &Rational) -> Self {
        Self {
            a: &self.a - t,
            b: self.b.clone(),
            d: self.d.clone(),
        }
    }

    pub fn mul_rational(&self, t: &Rational) -> Self {
        Self {
            a: &self.a * t,
            b: &self.b * t,
            d: self.d.clone(),
        }
    }

    /// floor(a + b√D), exact.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        // bracket b√D between consecutive integers scaled by denom of b
        let mut lo = self.to_bracket(32).0.floor().to_integer();
        // correct by exact comparison (the dyadic bracket can be off by one)
        loop {
            if self.cmp_rational(&Rational::from_integer(lo.clone())) == Ordering::Less {
                lo -= 1;
                continue;
            }
            let next: BigInt = &lo + 1;
            if self.cmp_rational(&Rational::from_integer(next.clone())) != Ordering::Less {
                lo = next;
                continue;
            }
            return lo;
        }
    }

    /// Outward rational bracket with width ≤ 2^-bits (plus the rounding of
    /// the endpoints themselves).
    pub fn to_bracket(&self, bits: u32) -> (Rational, Rational) {
        if self.b.is_zero() {
            return (self.a.clone(), self.a.clone());
        }
        let (s_lo, s_hi) = sqrt_bracket(&self.d, bits + 2);
        let (t_lo, t_hi) = if self.b.is_positive() {
            (&self.b * &s_lo, &self.b * &s_hi)
        } else {
            (&self.b * &s_hi, &self.b * &s_lo)
        };
        (&self.a + &t_lo, &self.a + &t_hi)
    }
}

/// Rational bracket of √D with width ≤ 2^-bits.
pub fn sqrt_bracket(d: &BigInt, bits: u32) -> (Rational, Rational) {
    let scale = BigInt::one() << bits;
    let scaled = d * (&scale * &scale);
    let root = scaled.sqrt(); // floor
    let lo = Rational::new(root.clone(), scale.clone());
    let hi = Rational::new(root + 1, scale);
    (lo, hi)
}

/// Dyadic enclosure of the descriptor's value. For CF streams the sandwich of
/// the last two convergents is used, so the width is driven by the prefix
/// length, not by `bits`.
pub fn descriptor_bracket(x: &RealDescriptor, bits: u32) -> (Rational, Rational) {
    match x {
        RealDescriptor::Rational(r) => (r.clone(), r.clone()),
        RealDescriptor::Quadratic { .. } => {
            let qv = x.quad_value().unwrap();
            let (lo, hi) = qv.to_bracket(bits);
            // trim endpoint denominators
            let (l, _) = dyadic_bracket(&lo, bits);
            let (_, h) = dyadic_bracket(&hi, bits);
            (l, h)
        }
        RealDescriptor::CfStream(a) => {
            let conv = super::cf::convergents_of(a);
            if conv.len() == 1 {
                let v = Rational::new(conv[0].0.clone(), conv[0].1.clone());
                // tail unknown: value lies in [a0, a0 + 1)
                return (v.clone(), v + Rational::one());
            }
            let last = Rational::new(
                conv[conv.len() - 1].0.clone(),
                conv[conv.len() - 1].1.clone(),
            );
            let prev = Rational::new(
                conv[conv.len() - 2].0.clone(),
                conv[conv.len() - 2].1.clone(),
            );
            if last <= prev {
                (last, prev)
            } else {
                (prev, last)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational::rat;

    #[test]
    fn sign_of_sqrt2_combinations() {
        // √2 - 1.4 > 0, √2 - 1.5 < 0
        let x = QuadValue {
            a: rat(-7, 5),
            b: rat(1, 1),
            d: BigInt::from(2),
        };
        assert_eq!(x.sign(), Ordering::Greater);
        let y = QuadValue {
            a: rat(-3, 2),
            b: rat(1, 1),
            d: BigInt::from(2),
        };
        assert_eq!(y.sign(), Ordering::Less);
    }

    #[test]
    fn floor_golden() {
        let g = RealDescriptor::golden().quad_value().unwrap();
        assert_eq!(g.floor(), BigInt::from(1));
        let doubled = g.mul_rational(&rat(2, 1));
        assert_eq!(doubled.floor(), BigInt::from(3)); // 2φ ≈ 3.236
        let neg = g.mul_rational(&rat(-1, 1));
        assert_eq!(neg.floor(), BigInt::from(-2)); // -φ ≈ -1.618
    }

    #[test]
    fn brackets_tighten() {
        let s = RealDescriptor::sqrt(2).unwrap().quad_value().unwrap();
        let (lo, hi) = s.to_bracket(40);
        assert!(lo < hi);
        assert!(&hi - &lo < rat(1, 1 << 30));
        // 1.414213 < √2 < 1.414214
        assert!(lo > rat(1_414_213, 1_000_000));
        assert!(hi < rat(1_414_214, 1_000_000));
    }

    #[test]
    fn square_discriminant_rejected() {
        assert!(RealDescriptor::sqrt(9).is_err());
        assert!(RealDescriptor::sqrt(2).is_ok());
    }
}
