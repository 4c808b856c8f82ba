//! Membership diagnostic for the liminf set S: over a denominator range it
//! reports min ‖x − p/q‖/ψ(q) (optionally slack-adjusted by a final-ball
//! radius) and counts the q whose ratio falls below a witness cap.

use super::dirichlet::nearest_at_denominator;
use crate::geom::rational::Rational;
use crate::geom::RationalPoint;
use num_bigint::BigInt;
use num_traits::Signed;

#[derive(Debug, Clone)]
pub struct SDiagnostic {
    /// (q, err/ψ(q)) minimizing the raw ratio.
    pub min_ratio: Option<(BigInt, Rational)>,
    /// (q, (err + slack)/ψ(q)) minimizing the slack-adjusted ratio.
    pub min_adjusted: Option<(BigInt, Rational)>,
    /// All q in range with raw ratio ≤ cap.
    pub witnesses: Vec<(BigInt, Rational)>,
}

/// Scan q from `q_lo` to `q_hi` with the best numerator vector per q.
/// `slack` is an error bar on x (the engine's final ball radius); `cap` is
/// the witness threshold, the B′ radius factor 1 + 6β⁻¹ in the intended use.
pub fn s_membership_diagnostic(
    x: &RationalPoint,
    psi: impl Fn(&BigInt) -> Rational,
    q_lo: u64,
    q_hi: u64,
    slack: &Rational,
    cap: &Rational,
) -> SDiagnostic {
    let mut out = SDiagnostic {
        min_ratio: None,
        min_adjusted: None,
        witnesses: Vec::new(),
    };
    let q_lo = q_lo.max(1);
    // 1-d fast path: round and compare on raw integers; the center numerator
    // can be thousands of bits wide after a long play
    let fast = x.dim() == 1;
    for q in q_lo..=q_hi {
        let q = BigInt::from(q);
        let err = if fast {
            let c = x.coord(0);
            let t = c.numer() * &q;
            let (mut p, rem) = num_integer::Integer::div_rem(&t, c.denom());
            // round to nearest: compare 2·rem against the denominator
            let two_rem = rem.magnitude() << 1;
            if &two_rem > c.denom().magnitude() {
                p += t.signum();
            }
            // err = |t/den − p|/q = |t − p·den|/(den·q), unreduced on purpose
            let err_num = (&t - &p * c.denom()).magnitude().clone();
            Rational::new_raw(err_num.into(), c.denom() * &q)
        } else {
            nearest_at_denominator(x, &q).err
        };
        let psi_q = psi(&q);
        // ratios kept unreduced; Ord on Ratio cross-multiplies
        let raw = Rational::new_raw(err.numer() * psi_q.denom(), err.denom() * psi_q.numer());
        let adj_err_num = err.numer() * slack.denom() + slack.numer() * err.denom();
        let adj = Rational::new_raw(
            &adj_err_num * psi_q.denom(),
            err.denom() * slack.denom() * psi_q.numer(),
        );
        if out
            .min_ratio
            .as_ref()
            .map(|(_, r)| raw < *r)
            .unwrap_or(true)
        {
            out.min_ratio = Some((q.clone(), raw.clone()));
        }
        if out
            .min_adjusted
            .as_ref()
            .map(|(_, r)| adj < *r)
            .unwrap_or(true)
        {
            out.min_adjusted = Some((q.clone(), adj));
        }
        if raw <= *cap {
            out.witnesses
                .push((q, Rational::new(raw.numer().clone(), raw.denom().clone())));
        }
    }
    // reduce the reported extremes once
    if let Some((q, r)) = out.min_ratio.take() {
        out.min_ratio = Some((q, Rational::new(r.numer().clone(), r.denom().clone())));
    }
    if let Some((q, r)) = out.min_adjusted.take() {
        out.min_adjusted = Some((q, Rational::new(r.numer().clone(), r.denom().clone())));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational::rat;
    use num_traits::Zero;

    fn psi_cubed(q: &BigInt) -> Rational {
        Rational::new(1.into(), q * q * q)
    }

    #[test]
    fn exact_rational_center_flags_zero_ratio() {
        // x itself is a played rational: ratio at its denominator is 0
        let x = RationalPoint::scalar(rat(3, 7));
        let d = s_membership_diagnostic(&x, psi_cubed, 1, 50, &rat(0, 1), &rat(25, 1));
        let (q, r) = d.min_ratio.unwrap();
        assert_eq!(q, BigInt::from(7));
        assert!(r.is_zero());
    }

    #[test]
    fn scaling_psi_by_two_halves_ratios() {
        let x = RationalPoint::scalar(rat(13, 89));
        let a = s_membership_diagnostic(&x, psi_cubed, 2, 40, &rat(0, 1), &rat(25, 1));
        let b = s_membership_diagnostic(
            &x,
            |q| rat(2, 1) * psi_cubed(q),
            2,
            40,
            &rat(0, 1),
            &rat(25, 1),
        );
        let (qa, ra) = a.min_ratio.unwrap();
        let (qb, rb) = b.min_ratio.unwrap();
        assert_eq!(qa, qb);
        assert_eq!(ra, rat(2, 1) * rb);
    }

    #[test]
    fn small_q_are_automatic_witnesses() {
        // 25·ψ(q) ≥ 1/(2q) for q ≤ 7, so every q ≤ 7 has ratio ≤ 25
        let x = RationalPoint::scalar(rat(113, 355));
        let d = s_membership_diagnostic(&x, psi_cubed, 1, 7, &rat(0, 1), &rat(25, 1));
        assert_eq!(d.witnesses.len(), 7);
    }
}
