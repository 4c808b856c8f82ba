//! Continued fractions: exact Euclidean expansion for rationals, the
//! period-detecting PQa algorithm for quadratic irrationals, and the
//! convergent recurrence.

use super::descriptor::{QuadValue, RealDescriptor};
use super::DioError;
use crate::geom::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// A computed expansion prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    pub quotients: Vec<BigInt>,
    /// The expansion terminated (the descriptor is rational and fully expanded).
    pub finite: bool,
    /// For quadratic irrationals: (preperiod length, period length).
    pub period: Option<(usize, usize)>,
}

/// Partial quotients a0..an (fewer when a rational's expansion ends sooner).
pub fn continued_fraction(x: &RealDescriptor, n: usize) -> Result<CfExpansion, DioError> {
    match x {
        RealDescriptor::Rational(r) => Ok(rational_cf(r, Some(n))),
        RealDescriptor::Quadratic { p, d, q } => quadratic_cf(p, d, q, n),
        RealDescriptor::CfStream(a) => {
            let take = n.saturating_add(1).min(a.len());
            Ok(CfExpansion {
                quotients: a[..take].to_vec(),
                finite: false,
                period: None,
            })
        }
    }
}

/// Full Euclidean expansion of a rational (canonical: last quotient ≥ 2 when
/// the expansion has more than one term), truncated to n+1 terms if asked.
pub fn rational_cf(r: &Rational, limit: Option<usize>) -> CfExpansion {
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let mut quotients = Vec::new();
    let cap = limit.map(|n| n + 1).unwrap_or(usize::MAX);
    loop {
        let (q, rem) = num_integer::Integer::div_mod_floor(&num, &den);
        quotients.push(q);
        if rem.is_zero() {
            return CfExpansion {
                quotients,
                finite: true,
                period: None,
            };
        }
        if quotients.len() >= cap {
            return CfExpansion {
                quotients,
                finite: false,
                period: None,
            };
        }
        num = den;
        den = rem;
    }
}

/// PQa expansion of (P + √D)/Q with cycle detection on the (P, Q) state.
fn quadratic_cf(p0: &BigInt, d: &BigInt, q0: &BigInt, n: usize) -> Result<CfExpansion, DioError> {
    // normalize so that Q | D - P²
    let (mut p, mut d, mut q) = (p0.clone(), d.clone(), q0.clone());
    if !((&d - &p * &p) % &q).is_zero() {
        let qa = q.abs();
        p *= &qa;
        d *= &qa * &qa;
        q *= &qa;
    }
    let mut quotients: Vec<BigInt> = Vec::with_capacity(n + 1);
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut period = None;
    for step in 0..=n {
        if period.is_none() {
            if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
                period = Some((start, step - start));
            } else {
                seen.insert((p.clone(), q.clone()), step);
            }
        }
        if let Some((start, len)) = period {
            // replay the detected cycle instead of recomputing
            let idx = start + (step - start) % len;
            quotients.push(quotients[idx].clone());
            continue;
        }
        let value = QuadValue {
            a: Rational::new(p.clone(), q.clone()),
            b: Rational::new(BigInt::one(), q.clone()),
            d: d.clone(),
        };
        let a = value.floor();
        quotients.push(a.clone());
        let p_next = &a * &q - &p;
        let q_next = (&d - &p_next * &p_next) / &q;
        if q_next.is_zero() {
            // cannot happen for non-square D
            return Err(DioError::BadDiscriminant(d));
        }
        p = p_next;
        q = q_next;
    }
    Ok(CfExpansion {
        quotients,
        finite: false,
        period,
    })
}

/// Convergents p_k/q_k of a quotient list by the standard recurrence.
/// q_k is strictly increasing from k ≥ 1.
pub fn convergents(quotients: &[BigInt]) -> Result<Vec<Rational>, DioError> {
    if quotients.is_empty() {
        return Err(DioError::EmptyQuotients);
    }
    Ok(convergents_of(quotients)
        .into_iter()
        .map(|(p, q)| Rational::new(p, q))
        .collect())
}

/// The (p_k, q_k) pairs themselves.
pub fn convergents_of(quotients: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::with_capacity(quotients.len());
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p, mut q) = (quotients[0].clone(), BigInt::one());
    out.push((p.clone(), q.clone()));
    for a in &quotients[1..] {
        let p_next = a * &p + &p_prev;
        let q_next = a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        out.push((p.clone(), q.clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational::rat;

    #[test]
    fn euclid_355_113() {
        let e = rational_cf(&rat(355, 113), None);
        assert!(e.finite);
        assert_eq!(
            e.quotients,
            vec![BigInt::from(3), BigInt::from(7), BigInt::from(16)]
        );
    }

    #[test]
    fn integer_is_single_quotient() {
        let e = rational_cf(&rat(5, 1), None);
        assert!(e.finite);
        assert_eq!(e.quotients, vec![BigInt::from(5)]);
    }

    #[test]
    fn negative_rational_floor_style() {
        // -7/2 = [-4; 2]
        let e = rational_cf(&rat(-7, 2), None);
        assert_eq!(e.quotients, vec![BigInt::from(-4), BigInt::from(2)]);
    }

    #[test]
    fn sqrt2_periodic() {
        let x = RealDescriptor::sqrt(2).unwrap();
        let e = continued_fraction(&x, 6).unwrap();
        let want: Vec<BigInt> = [1, 2, 2, 2, 2, 2, 2].iter().map(|&v| v.into()).collect();
        assert_eq!(e.quotients, want);
        let (start, len) = e.period.unwrap();
        assert_eq!((start, len), (1, 1));
    }

    #[test]
    fn sqrt7_period_four() {
        // √7 = [2; 1,1,1,4, 1,1,1,4, ...]
        let x = RealDescriptor::sqrt(7).unwrap();
        let e = continued_fraction(&x, 9).unwrap();
        let want: Vec<BigInt> = [2, 1, 1, 1, 4, 1, 1, 1, 4, 1]
            .iter()
            .map(|&v| v.into())
            .collect();
        assert_eq!(e.quotients, want);
    }

    #[test]
    fn golden_all_ones() {
        let e = continued_fraction(&RealDescriptor::golden(), 8).unwrap();
        assert!(e.quotients.iter().all(|a| *a == BigInt::one()));
    }

    #[test]
    fn convergents_of_1_2_2() {
        let qs: Vec<BigInt> = [1, 2, 2].iter().map(|&v| v.into()).collect();
        let c = convergents(&qs).unwrap();
        assert_eq!(c, vec![rat(1, 1), rat(3, 2), rat(7, 5)]);
    }

    #[test]
    fn determinant_identity() {
        // p_k q_{k-1} - p_{k-1} q_k = (-1)^{k-1}
        let qs: Vec<BigInt> = [3, 7, 15, 1, 292, 1, 1].iter().map(|&v| v.into()).collect();
        let c = convergents_of(&qs);
        for k in 1..c.len() {
            let det = &c[k].0 * &c[k - 1].1 - &c[k - 1].0 * &c[k].1;
            let want = if (k - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(det, BigInt::from(want), "k = {k}");
        }
    }

    #[test]
    fn denominators_strictly_increase() {
        let x = RealDescriptor::sqrt(61).unwrap();
        let e = continued_fraction(&x, 20).unwrap();
        let c = convergents_of(&e.quotients);
        for k in 2..c.len() {
            assert!(c[k].1 > c[k - 1].1);
        }
    }
}
