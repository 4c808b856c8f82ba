//! Truncated estimators for the exponent of irrationality ω and the Lagrange
//! function L, with certified enclosures.
//!
//! Both estimators are *pair-stabilized* truncations over the sequence of
//! best-approximation records (for d = 1: the continued-fraction
//! convergents, which realize every record):
//!
//! - ω̂(Qmax) = max over consecutive records (q_k, q_{k+1}), both ≤ Qmax, of
//!   −log err(q_k) / log q_{k+1};
//! - L̂(Qmax) = min over consecutive records of max(m_k, m_{k+1}), where
//!   m_k = (q_k^{d+1}·err(q_k)^d)^{1/d}.
//!
//! Measuring a record against the *next* record's scale (ω̂) and taking the
//! max of straddling neighbours (L̂) suppresses the small-q noise that a bare
//! sup/inf truncation keeps forever, while staying monotone in Qmax by plain
//! set inclusion: growing Qmax only adds pairs. ω̂ is a lower estimate that
//! tends to 1 + 1/d on badly approximable inputs; L̂ tends to the liminf from
//! above on alternating convergents. An exact rational hit short-circuits to
//! the distinguished +∞ marker (ω) resp. exactly 0 (L).

use super::cf::{continued_fraction, convergents_of};
use super::descriptor::{QuadValue, RealDescriptor};
use super::dirichlet::nearest_at_denominator;
use super::interval::{ln_enclosure, Interval};
use super::DioError;
use crate::geom::rational::{pow_i, Rational};
use crate::geom::RationalPoint;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OmegaEstimate {
    /// Exact rational hit within the search range: the limsup is +∞.
    Infinite,
    Finite(Interval),
}

/// One best-approximation record: denominator, numerators, exact error
/// enclosure (degenerate for rational inputs, exact-by-squaring for
/// quadratics, convergent sandwich for CF streams).
struct Record {
    q: BigInt,
    err: ErrValue,
}

enum ErrValue {
    Exact(Rational),
    Quad(QuadValue),
    Sandwich { lo: Rational, hi: Rational },
}

impl ErrValue {
    fn is_zero(&self) -> bool {
        match self {
            ErrValue::Exact(r) => r.is_zero(),
            ErrValue::Quad(q) => q.sign() == std::cmp::Ordering::Equal,
            ErrValue::Sandwich { lo, .. } => lo.is_zero(),
        }
    }

    fn bracket(&self, bits: u32) -> (Rational, Rational) {
        match self {
            ErrValue::Exact(r) => (r.clone(), r.clone()),
            ErrValue::Quad(q) => q.to_bracket(bits),
            ErrValue::Sandwich { lo, hi } => (lo.clone(), hi.clone()),
        }
    }
}

/// Lower estimate of ω(x) over denominators up to Qmax.
pub fn omega_estimate(
    x: &[RealDescriptor],
    qmax: &BigInt,
    bits: u32,
) -> Result<OmegaEstimate, DioError> {
    if qmax < &BigInt::one() {
        return Err(DioError::BadQmax);
    }
    let records = collect_records(x, qmax)?;
    if records.iter().any(|r| r.err.is_zero()) {
        return Ok(OmegaEstimate::Infinite);
    }
    let mut best: Option<Interval> = None;
    for w in records.windows(2) {
        let (rec, next) = (&w[0], &w[1]);
        if next.q < BigInt::from(2) {
            continue; // log 1 = 0
        }
        // widen until the error enclosure clears zero (the error itself is
        // nonzero here)
        let mut eff_bits = bits;
        let (e_lo, e_hi) = loop {
            let (lo, hi) = rec.err.bracket(eff_bits);
            if lo.is_positive() {
                break (lo, hi);
            }
            eff_bits *= 2;
            if eff_bits > 1 << 16 {
                return Err(DioError::PrecisionExhausted(eff_bits));
            }
        };
        let num = ln_enclosure(&e_lo.recip(), eff_bits);
        let num_lo = ln_enclosure(&e_hi.recip(), eff_bits);
        let numerator = Interval::new(num_lo.lo.clone(), num.hi.clone());
        let denom = ln_enclosure(&Rational::from_integer(next.q.clone()), eff_bits);
        let ratio = numerator.div_pos(&denom);
        best = Some(match best {
            None => ratio,
            Some(b) => Interval::new(
                if b.lo >= ratio.lo { b.lo } else { ratio.lo },
                if b.hi >= ratio.hi { b.hi } else { ratio.hi },
            ),
        });
    }
    match best {
        Some(iv) => Ok(OmegaEstimate::Finite(iv)),
        None => Err(DioError::Unsupported(
            "no record pair with q >= 2 below Qmax".into(),
        )),
    }
}

/// Upper-style estimate of L(x) over denominators up to Qmax, as a certified
/// d-th-root enclosure. Exactly 0 on a rational hit.
pub fn lagrange_estimate(
    x: &[RealDescriptor],
    qmax: &BigInt,
    bits: u32,
) -> Result<Interval, DioError> {
    if qmax < &BigInt::one() {
        return Err(DioError::BadQmax);
    }
    let d = x.len();
    let records = collect_records(x, qmax)?;
    if records.iter().any(|r| r.err.is_zero()) {
        return Ok(Interval::point(Rational::zero()));
    }
    let mut best: Option<Interval> = None;
    for w in records.windows(2) {
        let m0 = m_value(&w[0], d, bits);
        let m1 = m_value(&w[1], d, bits);
        let pair_max = Interval::new(
            if m0.lo >= m1.lo { m0.lo } else { m1.lo },
            if m0.hi >= m1.hi { m0.hi } else { m1.hi },
        );
        best = Some(match best {
            None => pair_max,
            Some(b) => Interval::new(
                if b.lo <= pair_max.lo { b.lo } else { pair_max.lo },
                if b.hi <= pair_max.hi { b.hi } else { pair_max.hi },
            ),
        });
    }
    best.ok_or_else(|| DioError::Unsupported("need at least two records below Qmax".into()))
}

/// m = (q^{d+1}·err^d)^{1/d} as an enclosure. For d = 1 this is q²·err.
fn m_value(rec: &Record, d: usize, bits: u32) -> Interval {
    let (e_lo, e_hi) = rec.err.bracket(bits);
    let q = Rational::from_integer(rec.q.clone());
    if d == 1 {
        let q2 = &q * &q;
        return Interval::new(&q2 * &e_lo, &q2 * &e_hi);
    }
    let qd1 = pow_i(&q, (d + 1) as i64);
    let lo = &qd1 * &pow_i(&e_lo, d as i64);
    let hi = &qd1 * &pow_i(&e_hi, d as i64);
    Interval::new(dth_root_lower(&lo, d as u32, bits), dth_root_upper(&hi, d as u32, bits))
}

fn dth_root_lower(x: &Rational, d: u32, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = x * pow_i(&Rational::from_integer(scale.clone()), d as i64);
    let n = crate::geom::rational::floor_nth_root(&scaled, d);
    Rational::new(n, scale)
}

fn dth_root_upper(x: &Rational, d: u32, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = x * pow_i(&Rational::from_integer(scale.clone()), d as i64);
    let n = crate::geom::rational::floor_nth_root(&scaled, d);
    Rational::new(n + 1, scale)
}

/// Best-approximation records with denominator ≤ Qmax, in increasing q.
fn collect_records(x: &[RealDescriptor], qmax: &BigInt) -> Result<Vec<Record>, DioError> {
    if x.is_empty() {
        return Err(DioError::Unsupported("empty point".into()));
    }
    if x.len() == 1 {
        return collect_records_1d(&x[0], qmax);
    }
    // multi-dimensional: exact only when every coordinate is rational
    let coords: Option<Vec<Rational>> = x.iter().map(|c| c.as_rational().cloned()).collect();
    let coords = coords.ok_or_else(|| {
        DioError::Unsupported("multi-dimensional estimators need rational coordinates".into())
    })?;
    let point = RationalPoint::new(coords).expect("nonempty");
    let mut records = Vec::new();
    let mut best_err: Option<Rational> = None;
    let mut q = BigInt::one();
    while q <= *qmax {
        let a = nearest_at_denominator(&point, &q);
        let improves = match &best_err {
            None => true,
            Some(b) => a.err < *b,
        };
        if improves {
            best_err = Some(a.err.clone());
            let zero = a.err.is_zero();
            records.push(Record {
                q: q.clone(),
                err: ErrValue::Exact(a.err),
            });
            if zero {
                break;
            }
        }
        q += 1;
    }
    Ok(records)
}

fn collect_records_1d(x: &RealDescriptor, qmax: &BigInt) -> Result<Vec<Record>, DioError> {
    match x {
        RealDescriptor::Rational(r) => {
            if r.denom() <= qmax {
                // exact hit marker record
                return Ok(vec![Record {
                    q: r.denom().clone(),
                    err: ErrValue::Exact(Rational::zero()),
                }]);
            }
            let cf = super::cf::rational_cf(r, None);
            let conv = convergents_of(&cf.quotients);
            Ok(conv
                .into_iter()
                .filter(|(_, q)| q <= qmax)
                .map(|(p, q)| {
                    let err = (r - &Rational::new(p, q.clone())).abs();
                    Record {
                        q,
                        err: ErrValue::Exact(err),
                    }
                })
                .collect())
        }
        RealDescriptor::Quadratic { .. } => {
            let value = x.quad_value().expect("quadratic has a quad value");
            // convergent denominators at least double every two steps, so
            // this expansion depth comfortably passes Qmax
            let depth = 4 + 3 * (qmax.bits() as usize);
            let cf = continued_fraction(x, depth)?;
            let conv = convergents_of(&cf.quotients);
            Ok(conv
                .into_iter()
                .filter(|(_, q)| q <= qmax)
                .map(|(p, q)| {
                    let err = value.sub_rational(&Rational::new(p, q.clone())).abs();
                    Record {
                        q,
                        err: ErrValue::Quad(err),
                    }
                })
                .collect())
        }
        RealDescriptor::CfStream(quotients) => {
            let conv = convergents_of(quotients);
            let mut records = Vec::new();
            for k in 0..conv.len() {
                if conv[k].1 > *qmax {
                    break;
                }
                if k + 1 >= conv.len() {
                    break; // no sandwich for the last known convergent
                }
                let (qk, qk1) = (&conv[k].1, &conv[k + 1].1);
                // 1/(q_k(q_{k+1}+q_k)) < err_k < 1/(q_k·q_{k+1})
                let lo = Rational::new(BigInt::one(), qk * (qk1 + qk));
                let hi = Rational::new(BigInt::one(), qk * qk1);
                records.push(Record {
                    q: qk.clone(),
                    err: ErrValue::Sandwich { lo, hi },
                });
            }
            if records.is_empty() {
                return Err(DioError::Unsupported(
                    "CF stream too short for this Qmax".into(),
                ));
            }
            Ok(records)
        }
    }
}
