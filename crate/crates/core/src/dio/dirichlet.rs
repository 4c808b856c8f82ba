//! Dirichlet-style simultaneous rational approximation of rational points,
//! exact in the sup norm.

use super::cf::{convergents_of, rational_cf};
use crate::geom::rational::{pow_i, Rational};
use crate::geom::RationalPoint;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A rational approximation p/q of a point, with its exact error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestApproximation {
    pub p: Vec<BigInt>,
    pub q: BigInt,
    /// ‖x − p/q‖ in the sup norm; exact because x is rational.
    pub err: Rational,
}

impl BestApproximation {
    pub fn point(&self) -> RationalPoint {
        RationalPoint::new(
            self.p
                .iter()
                .map(|pi| Rational::new(pi.clone(), self.q.clone()))
                .collect(),
        )
        .expect("nonempty")
    }

    /// The Dirichlet guarantee in its rational d-th-power form:
    /// (q·err)^d ≤ 1/Q.
    pub fn satisfies_dirichlet_bound(&self, big_q: &BigInt, dim: usize) -> bool {
        let qe = Rational::from_integer(self.q.clone()) * &self.err;
        let lhs = pow_i(&qe, dim as i64);
        lhs <= Rational::new(BigInt::one(), big_q.clone())
    }
}

/// Best p for a fixed denominator q: coordinate-wise nearest integer.
pub fn nearest_at_denominator(x: &RationalPoint, q: &BigInt) -> BestApproximation {
    let qr = Rational::from_integer(q.clone());
    let mut p = Vec::with_capacity(x.dim());
    let mut err = Rational::zero();
    for c in x.coords() {
        let scaled = c * &qr;
        // round half toward floor; any tie choice is a valid nearest integer
        let pi = (&scaled + Rational::new(BigInt::one(), BigInt::from(2)))
            .floor()
            .to_integer();
        let e = (c - &Rational::new(pi.clone(), q.clone())).abs();
        if e > err {
            err = e;
        }
        p.push(pi);
    }
    BestApproximation {
        p,
        q: q.clone(),
        err,
    }
}

/// Dirichlet approximation: some p/q with 1 ≤ q ≤ Q and (q·‖x − p/q‖)^d ≤ 1/Q
/// (the multiplicative form of ‖x − p/q‖ ≤ 1/(q·Q^{1/d}), exact when Q^{1/d}
/// is irrational). d = 1 goes through the convergents of the coordinate;
/// d ≥ 2 searches q = 1..Q exhaustively, which always succeeds by Minkowski's
/// theorem.
pub fn dirichlet_approx(x: &RationalPoint, big_q: &BigInt) -> BestApproximation {
    assert!(big_q >= &BigInt::one(), "Q must be >= 1");
    if x.dim() == 1 {
        let out = dirichlet_1d(x.coord(0), big_q);
        debug_assert!(out.satisfies_dirichlet_bound(big_q, 1));
        return out;
    }
    let mut best: Option<BestApproximation> = None;
    let mut q = BigInt::one();
    while q <= *big_q {
        let cand = nearest_at_denominator(x, &q);
        if cand.err.is_zero() {
            return cand;
        }
        let better = match &best {
            None => true,
            Some(b) => {
                // compare q·err (the Dirichlet figure of merit), ties to smaller q
                let cm = Rational::from_integer(cand.q.clone()) * &cand.err;
                let bm = Rational::from_integer(b.q.clone()) * &b.err;
                cm < bm
            }
        };
        if better {
            best = Some(cand);
        }
        q += 1;
    }
    let out = best.expect("Q >= 1 yields at least one candidate");
    debug_assert!(out.satisfies_dirichlet_bound(big_q, x.dim()));
    out
}

fn dirichlet_1d(x: &Rational, big_q: &BigInt) -> BestApproximation {
    // last convergent with denominator ≤ Q; its error is below 1/(q·q_next)
    // ≤ 1/(q(Q+1)), which meets the bound. An exact hit returns error 0.
    let cf = rational_cf(x, None);
    let conv = convergents_of(&cf.quotients);
    let mut chosen = (conv[0].0.clone(), conv[0].1.clone());
    for (p, q) in &conv {
        if q <= big_q {
            chosen = (p.clone(), q.clone());
        } else {
            break;
        }
    }
    let err = (x - &Rational::new(chosen.0.clone(), chosen.1.clone())).abs();
    BestApproximation {
        p: vec![chosen.0],
        q: chosen.1,
        err,
    }
}
