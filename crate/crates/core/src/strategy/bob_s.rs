//! Bob's BMS strategy that forces the intersection point into the liminf set
//! S(ψ): respond to every Alice ball by moving next to a minimal-denominator
//! rational neighborhood B(p₀/q₀, ψ(q₀)), far enough from the one
//! low-denominator rational that could sit nearby.
//!
//! Construction, for Alice's ball A = B(x, r) (a virtual B(0, 1) opens):
//!
//! 1. Sub-ball scale ρ = r/4. (r/3 fails exactly when the low-denominator
//!    rational coincides with x; r/4 leaves margin for every position.)
//! 2. Low-denominator screen: denominators with q^{d+1}·(4r)^d < 1 — the
//!    simplex-lemma threshold c_d·r^{−d/(d+1)} with c_d = 4^{−d/(d+1)} in
//!    exact rational form. In d = 1 at most one such rational can lie in
//!    B(x, 2r); two distinct ones are ≥ 1/(q·q′) > 4r apart.
//! 3. Center x̃ = x ± (r − ρ) pointing away from that rational; then
//!    dist(x̃, L) ≥ 3r/4 > ρ + r/3, so the ψ-meeting rationals of
//!    Ã = B(x̃, ρ) all clear the screen.
//! 4. q₀ = minimal q ≥ Q₀ whose reduced lattice has a point within
//!    ρ + ψ(q) of x̃ (exact two-phase search: ascending scan, then
//!    Stern–Brocot minimum of the core interval plus Legendre convergent
//!    candidates of the two interval endpoints for the ψ-fringe).
//! 5. s = 3β⁻¹ψ(q₀); play B(y, s) ⊆ Ã touching B(p₀/q₀, ψ(q₀)), which is
//!    contained in B(p₀/q₀, (1 + 6β⁻¹)ψ(q₀)) exactly.
//!
//! Every claim the construction relies on is re-verified exactly per move;
//! the strategy resigns (with the failed inequality) rather than play an
//! unproven ball. Denominators grow super-geometrically round over round,
//! so a bit-size cap bounds the search — the cap ending a play is expected
//! behaviour at desk scale, not an error in the engine.

use super::psi::PsiFunction;
use super::{Strategy, StrategyError, StrategyMove};
use crate::dio::cf::{convergents_of, rational_cf};
use crate::dio::minden::{min_denominator_at_least, min_denominator_in};
use crate::game::{GameKind, GameState, Player};
use crate::geom::rational::{floor_nth_root, pow_i, rat, Rational};
use crate::geom::{FormalBall, RationalPoint};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

#[derive(Debug, Clone)]
pub enum Q0Mode {
    /// Smallest Q₀ making B(0,1) good and the per-round bound s ≤ r/4 sound
    /// at every scale r ≤ 1.
    Auto,
    Fixed(u64),
}

#[derive(Debug, Clone)]
pub struct BobSConfig {
    pub psi: PsiFunction,
    pub beta: Rational,
    pub q0: Q0Mode,
    /// Resign when the chased denominator exceeds this many bits.
    pub q0_bit_cap: u64,
    /// Ascending-scan width before switching to the Stern–Brocot phase.
    pub scan_window: u64,
}

impl BobSConfig {
    pub fn new(psi: PsiFunction, beta: Rational, q0: Q0Mode) -> Self {
        Self {
            psi,
            beta,
            q0,
            q0_bit_cap: 2048,
            scan_window: 64,
        }
    }
}

/// One completed chase round, for transcript-side verification.
#[derive(Debug, Clone)]
pub struct ChaseRecord {
    pub alice_ball: FormalBall,
    pub p0: BigInt,
    pub q0: BigInt,
    pub s: Rational,
    /// (1 + 6β⁻¹)·ψ(q₀), the radius within which the play stays around p₀/q₀.
    pub bprime_radius: Rational,
    pub played: FormalBall,
}

pub struct RationalChaserBob {
    cfg: BobSConfig,
    q0_floor: BigInt,
    records: Vec<ChaseRecord>,
    name: String,
}

/// Build the strategy for dimension d (the chase construction is implemented
/// for d = 1; the screen/threshold arithmetic is kept dimension-generic).
pub fn bob_s_strategy(
    psi: PsiFunction,
    beta: Rational,
    q0: Q0Mode,
    dimension: usize,
) -> Result<RationalChaserBob, StrategyError> {
    RationalChaserBob::from_config(BobSConfig::new(psi, beta, q0), dimension)
}

impl RationalChaserBob {
    pub fn from_config(cfg: BobSConfig, dimension: usize) -> Result<Self, StrategyError> {
        if dimension != 1 {
            return Err(StrategyError::BadParameter(
                "the rational-chasing Bob is implemented for dimension 1".into(),
            ));
        }
        if !cfg.beta.is_positive() || cfg.beta >= Rational::one() {
            return Err(StrategyError::BadParameter(format!(
                "beta must lie in (0, 1), got {}",
                cfg.beta
            )));
        }
        let q0_floor = match &cfg.q0 {
            Q0Mode::Fixed(q) => BigInt::from(*q),
            Q0Mode::Auto => auto_q0(&cfg.psi, &cfg.beta, dimension)?,
        };
        Ok(RationalChaserBob {
            name: format!("chaser[psi={}, Q0={}]", cfg.psi, q0_floor),
            cfg,
            q0_floor,
            records: Vec::new(),
        })
    }
}

/// Smallest Q₀ with ψ(Q₀) ≤ 1/3 (so B(0,1) is good) and
/// (48·β⁻¹·ψ(Q₀))^d · Q₀^{d+1} ≤ 1, the exact-power form of
/// 3β⁻¹ψ(Q₀) ≤ ¼·(c_d/Q₀)^{(d+1)/d}, which keeps s ≤ r/4 at every good
/// scale: below the crossover radius the simplex screen dominates and the
/// exponent a > 1 + 1/d carries the bound.
fn auto_q0(psi: &PsiFunction, beta: &Rational, d: usize) -> Result<BigInt, StrategyError> {
    let third = rat(1, 3);
    let mut q = BigInt::one();
    for _ in 0..1_000_000u32 {
        let psi_q = psi.eval(&q);
        let scale_ok = {
            let lhs = pow_i(&(rat(48, 1) / beta * &psi_q), d as i64)
                * pow_i(&Rational::from_integer(q.clone()), (d + 1) as i64);
            lhs <= Rational::one()
        };
        if psi_q <= third && scale_ok {
            return Ok(q);
        }
        q += 1;
    }
    Err(StrategyError::BadParameter(
        "auto Q0 search did not converge".into(),
    ))
}

impl RationalChaserBob {
    pub fn q0_floor(&self) -> &BigInt {
        &self.q0_floor
    }

    pub fn records(&self) -> &[ChaseRecord] {
        &self.records
    }

    pub fn config(&self) -> &BobSConfig {
        &self.cfg
    }

    fn chase(&mut self, alice_ball: &FormalBall) -> Result<FormalBall, String> {
        let x = alice_ball
            .center()
            .as_scalar()
            .ok_or("dimension 1 expected")?
            .clone();
        let r = alice_ball.radius().clone();
        let rho = &r / rat(4, 1);

        // low-denominator screen
        let t_int = simplex_threshold(&r, 1);
        let screen = find_screen_point_1d(&x, &r, &t_int)?;

        // avoided sub-ball center
        let x_tilde = match &screen {
            None => x.clone(),
            Some(l) => {
                let sigma = if &x >= l { rat(1, 1) } else { rat(-1, 1) };
                let shifted = &x + (&r - &rho) * sigma;
                // dist(x̃, L) ≥ 3r/4 > ρ + r/3 by construction; verify exactly
                if (&shifted - l).abs() <= &rho + &r / rat(3, 1) {
                    return Err(format!(
                        "screen point {l} too close to the shifted center {shifted}"
                    ));
                }
                shifted
            }
        };

        // minimal meeting denominator at or above the floor
        let q_start = self.q0_floor.clone();
        let (p0, q0) = minimal_meeting_fraction_1d(
            &x_tilde,
            &rho,
            &self.cfg.psi,
            &q_start,
            self.cfg.scan_window,
            self.cfg.q0_bit_cap,
        )?;

        let psi_q0 = self.cfg.psi.eval(&q0);
        let s = rat(3, 1) / &self.cfg.beta * &psi_q0;
        if s > rho {
            return Err(format!(
                "s = 3*psi(q0)/beta = {s} exceeds rho = {rho}; Q0 = {q_start} too small"
            ));
        }

        // place B(y, s) ⊆ Ã touching B(p0/q0, ψ(q0))
        let target = Rational::new(p0.clone(), q0.clone());
        let z = clamp(&target, &(&x_tilde - &rho), &(&x_tilde + &rho));
        let y = clamp(&z, &(&x_tilde - (&rho - &s)), &(&x_tilde + (&rho - &s)));
        let played = FormalBall::new(RationalPoint::scalar(y.clone()), s.clone())
            .map_err(|e| e.to_string())?;

        // exact re-verification of everything the claim needs
        let meets = (&y - &target).abs() <= &s + &psi_q0;
        if !meets {
            return Err("played ball does not touch the chased neighborhood".into());
        }
        let nested = &s + (&y - &x).abs() <= r;
        if !nested {
            return Err("played ball does not shrink into Alice's ball".into());
        }
        let bprime_radius = (Rational::one() + rat(6, 1) / &self.cfg.beta) * &psi_q0;
        let inside_bprime = (&y - &target).abs() + &s <= bprime_radius;
        if !inside_bprime {
            return Err("played ball escapes the B' neighborhood".into());
        }

        self.records.push(ChaseRecord {
            alice_ball: alice_ball.clone(),
            p0,
            q0,
            s,
            bprime_radius,
            played: played.clone(),
        });
        Ok(played)
    }
}

impl Strategy for RationalChaserBob {
    fn name(&self) -> &str {
        &self.name
    }

    fn next_move(&mut self, state: &GameState) -> StrategyMove {
        if !matches!(state.config().kind, GameKind::Bms { .. }) {
            return StrategyMove::Resign(format!(
                "chaser plays BMS only, got {}",
                state.config().kind.name()
            ));
        }
        if let GameKind::Bms { beta } = &state.config().kind {
            if beta != &self.cfg.beta {
                return StrategyMove::Resign(format!(
                    "chaser built for beta = {}, game has beta = {beta}",
                    self.cfg.beta
                ));
            }
        }
        let virtual_open = FormalBall::unit(state.config().dimension);
        let alice_ball = state
            .last_ball_of(Player::Alice)
            .cloned()
            .unwrap_or(virtual_open);
        match self.chase(&alice_ball) {
            Ok(ball) => StrategyMove::Play(ball),
            Err(e) => StrategyMove::Resign(e),
        }
    }
}

/// Largest integer q ≥ 0 with q^{d+1}·(4r)^d < 1.
pub fn simplex_threshold(r: &Rational, d: usize) -> BigInt {
    let bound = pow_i(&(rat(4, 1) * r), d as i64).recip();
    let mut q = floor_nth_root(&bound, (d + 1) as u32);
    // floor_nth_root gives q^{d+1} ≤ bound; demand strict
    if pow_i(&Rational::from_integer(q.clone()), (d + 1) as i64) >= bound {
        q -= 1;
    }
    q
}

/// The unique rational of B(x, 2r) below the simplex threshold, if any.
/// Two of them cannot coexist (separation ≥ 1/(q·q′) > 4r); hitting that
/// measure-zero tie is reported as a screen failure.
fn find_screen_point_1d(
    x: &Rational,
    r: &Rational,
    t_int: &BigInt,
) -> Result<Option<Rational>, String> {
    if t_int < &BigInt::one() {
        return Ok(None);
    }
    let lo = x - rat(2, 1) * r;
    let hi = x + rat(2, 1) * r;
    let (p, q) = min_denominator_in(&lo, &hi);
    if q > *t_int {
        return Ok(None);
    }
    let found = Rational::new(p, q.clone());
    // a second sub-threshold rational must sit ≥ 1/(q·t) away; search beyond
    // that exclusion zone on both sides
    let gap = Rational::new(BigInt::one(), &q * t_int);
    let mut second: Option<Rational> = None;
    let left_hi = &found - &gap;
    if lo <= left_hi {
        let (p2, q2) = min_denominator_in(&lo, &left_hi);
        if q2 <= *t_int {
            second = Some(Rational::new(p2, q2));
        }
    }
    let right_lo = &found + &gap;
    if second.is_none() && right_lo <= hi {
        let (p2, q2) = min_denominator_in(&right_lo, &hi);
        if q2 <= *t_int {
            second = Some(Rational::new(p2, q2));
        }
    }
    if let Some(p2) = second {
        return Err(format!(
            "two sub-threshold rationals {found} and {p2} in one screen window"
        ));
    }
    Ok(Some(found))
}

/// Minimal q ≥ q_start carrying a reduced p with |p/q − x̃| ≤ ρ + ψ(q).
///
/// Phase A scans [q_start, q_start + window] directly (the window also
/// guarantees ψ(q) < 1/(2q²) beyond it, so phase B's Legendre step is
/// complete). Phase B takes the Stern–Brocot minimal denominator of the core
/// interval [x̃−ρ, x̃+ρ] and the convergent denominators of the two endpoints
/// as the only possible ψ-fringe hits, and returns the smallest verified hit.
fn minimal_meeting_fraction_1d(
    x_tilde: &Rational,
    rho: &Rational,
    psi: &PsiFunction,
    q_start: &BigInt,
    window: u64,
    bit_cap: u64,
) -> Result<(BigInt, BigInt), String> {
    // ensure the Legendre condition q^{a-2} > 2c holds past the window
    let mut window = window.max(4);
    loop {
        let q_edge = q_start + BigInt::from(window);
        let cond = pow_i(
            &Rational::from_integer(q_edge.clone()),
            (psi.exponent() - 2) as i64,
        ) > rat(2, 1) * psi.coefficient();
        if cond {
            break;
        }
        window *= 2;
        if window > 1 << 24 {
            return Err("psi coefficient too large for the fringe search".into());
        }
    }

    let hit = |q: &BigInt| -> Option<BigInt> {
        let psi_q = psi.eval(q);
        let lo = x_tilde - rho - &psi_q;
        let hi = x_tilde + rho + &psi_q;
        let qr = Rational::from_integer(q.clone());
        let mut p = (&lo * &qr).ceil().to_integer();
        let p_hi = (&hi * &qr).floor().to_integer();
        while p <= p_hi {
            if p.gcd(q).is_one() {
                return Some(p);
            }
            p += 1;
        }
        None
    };

    // phase A
    let mut q = q_start.clone();
    let q_a: BigInt = q_start + BigInt::from(window);
    while q <= q_a {
        if let Some(p) = hit(&q) {
            return Ok((p, q));
        }
        q += 1;
    }

    // phase B
    let lo_core = x_tilde - rho;
    let hi_core = x_tilde + rho;
    let mut best: Option<(BigInt, BigInt)> = None;
    if let Some((p_sb, q_sb)) =
        min_denominator_at_least(&lo_core, &hi_core, &(&q_a + 1), 1 << 20)
    {
        best = Some((p_sb, q_sb));
    }
    for endpoint in [&lo_core, &hi_core] {
        let cf = rational_cf(endpoint, None);
        for (p, qc) in convergents_of(&cf.quotients) {
            if qc <= q_a {
                continue;
            }
            if let Some((_, bq)) = &best {
                if qc >= *bq {
                    break;
                }
            }
            let cand = Rational::new(p.clone(), qc.clone());
            let psi_q = psi.eval(&qc);
            if (&cand - x_tilde).abs() <= rho + &psi_q {
                best = Some((p, qc));
            }
        }
    }
    match best {
        Some((p, q0)) => {
            if q0.bits() > bit_cap {
                Err(format!(
                    "chased denominator needs {} bits, cap is {bit_cap}",
                    q0.bits()
                ))
            } else {
                Ok((p, q0))
            }
        }
        None => Err("no meeting denominator found within the search budget".into()),
    }
}

fn clamp(x: &Rational, lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if x < lo {
        lo.clone()
    } else if x > hi {
        hi.clone()
    } else {
        x.clone()
    }
}

/// Goodness check of a ball: every reduced p/q with q_lo ≤ q ≤ q_hi whose
/// ψ(q)-neighborhood meets the closed ball has ψ(q) ≤ radius/3. Exact.
pub fn ball_is_good_1d(ball: &FormalBall, psi: &PsiFunction, q_lo: &BigInt, q_hi: u64) -> bool {
    let bound = ball.radius() / rat(3, 1);
    meeting_psi_bounded_1d(ball, psi, q_lo, q_hi, &bound)
}

/// The bounded-search form with an explicit bound: true iff every reduced
/// p/q with q in range and B(p/q, ψ(q)) ∩ ball ≠ ∅ has ψ(q) ≤ bound.
///
/// The center/radius numerators can carry thousands of bits late in a chase,
/// so the p-range per q is computed with raw integer arithmetic (no
/// per-operation gcd reduction).
pub fn meeting_psi_bounded_1d(
    ball: &FormalBall,
    psi: &PsiFunction,
    q_lo: &BigInt,
    q_hi: u64,
    bound: &Rational,
) -> bool {
    let x = ball.center().as_scalar().expect("d = 1");
    // x ± radius over one common denominator, unreduced
    let xb = x.denom();
    let rb = ball.radius().denom();
    let lo_num = x.numer() * rb - ball.radius().numer() * xb; // /(xb·rb)
    let hi_num = x.numer() * rb + ball.radius().numer() * xb;
    let den = xb * rb; // > 0
    let (cn, cd) = (psi.coefficient().numer(), psi.coefficient().denom());
    let a = psi.exponent();
    let mut q = q_lo.clone();
    let q_end = BigInt::from(q_hi);
    while q <= q_end {
        let psi_q = psi.eval(&q);
        if psi_q > *bound {
            // p/q within radius + ψ(q) of x:
            //   p ≥ q·(lo_num/den − cn/(cd·q^a)) = (q^{a+1}·cd·lo_num − q·cn·den)/(den·cd·q^a)
            let qa = q.pow(a);
            let shared = &qa * cd * &den; // positive
            let p_lo_num = &q * &qa * cd * &lo_num - &q * cn * &den;
            let p_hi_num = &q * &qa * cd * &hi_num + &q * cn * &den;
            let mut p = p_lo_num.div_ceil(&shared);
            let p_hi = p_hi_num.div_floor(&shared);
            while p <= p_hi {
                if p.gcd(&q).is_one() {
                    return false;
                }
                p += 1;
            }
        }
        q += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{play, GameConfig, PlaySetup, Termination};
    use crate::strategy::alice_dummy;

    fn psi_cubed() -> PsiFunction {
        PsiFunction::parse("q^-3", 1).unwrap()
    }

    #[test]
    fn auto_q0_value() {
        // 48·β⁻¹·ψ(Q)·Q² ≤ 1 with β = 1/4, ψ = q⁻³: 192/Q ≤ 1 ⟹ Q = 192
        let q0 = auto_q0(&psi_cubed(), &rat(1, 4), 1).unwrap();
        assert_eq!(q0, BigInt::from(192));
    }

    #[test]
    fn threshold_values() {
        // q²·4r < 1 at r = 1: no q ≥ 1 qualifies
        assert_eq!(simplex_threshold(&rat(1, 1), 1), BigInt::from(0));
        // r = 1/100: q² < 25 ⟹ q ≤ 4
        assert_eq!(simplex_threshold(&rat(1, 100), 1), BigInt::from(4));
        // two sub-threshold rationals are > 4r apart: c₁ = 1/2 in power form
        let r = rat(1, 100);
        let t = simplex_threshold(&r, 1);
        let min_gap = Rational::new(BigInt::one(), &t * &t);
        assert!(min_gap > rat(4, 1) * r);
    }

    #[test]
    fn screen_finds_the_unique_low_denominator_rational() {
        // around 1/3 at r = 1/100: threshold 4, 1/3 is the only q ≤ 4 rational
        let found = find_screen_point_1d(&rat(1, 3), &rat(1, 100), &BigInt::from(4))
            .unwrap()
            .unwrap();
        assert_eq!(found, rat(1, 3));
        // around 1/2 + 1/1000 the screen still sees 1/2
        let found = find_screen_point_1d(&rat(501, 1000), &rat(1, 100), &BigInt::from(4))
            .unwrap()
            .unwrap();
        assert_eq!(found, rat(1, 2));
    }

    #[test]
    fn minimal_fraction_matches_brute_force() {
        let psi = psi_cubed();
        for (x_num, rho_den) in [(17i64, 40i64), (5, 64), (-3, 16)] {
            let x = rat(x_num, 53);
            let rho = rat(1, rho_den);
            let got = minimal_meeting_fraction_1d(&x, &rho, &psi, &BigInt::from(4), 64, 4096)
                .unwrap();
            // brute force
            let mut brute = None;
            'outer: for q in 4..5000i64 {
                let qb = BigInt::from(q);
                let psi_q = psi.eval(&qb);
                let lo = &x - &rho - &psi_q;
                let hi = &x + &rho + &psi_q;
                let mut p = (&lo * rat(q, 1)).ceil().to_integer();
                let p_hi = (&hi * rat(q, 1)).floor().to_integer();
                while p <= p_hi {
                    if p.gcd(&qb).is_one() {
                        brute = Some((p, qb));
                        break 'outer;
                    }
                    p += 1;
                }
            }
            assert_eq!(got, brute.unwrap(), "x = {x}, rho = {rho}");
        }
    }

    #[test]
    fn chase_rounds_satisfy_claim_inequalities() {
        let mut bob = bob_s_strategy(psi_cubed(), rat(1, 4), Q0Mode::Auto, 1).unwrap();
        let mut alice = alice_dummy();
        let t = play(PlaySetup {
            config: GameConfig::new(GameKind::Bms { beta: rat(1, 4) }, 1).unwrap(),
            max_rounds: 5,
            bob: &mut bob,
            alice: &mut alice,
        });
        assert!(t.rounds() >= 4, "termination: {:?}", t.termination);
        for rec in bob.records() {
            // s < r/3 (the claim's scale bound, met with room via rho = r/4)
            assert!(&rec.s < &(rec.alice_ball.radius() / rat(3, 1)));
            // B' radius factor exactly 1 + 6β⁻¹ = 25
            assert_eq!(rec.bprime_radius, rat(25, 1) * psi_cubed().eval(&rec.q0));
            // played ball inside B'(p0/q0)
            let y = rec.played.center().as_scalar().unwrap();
            let target = Rational::new(rec.p0.clone(), rec.q0.clone());
            assert!((y - &target).abs() + rec.played.radius() <= rec.bprime_radius);
        }
        // q0 strictly increases round over round
        for w in bob.records().windows(2) {
            assert!(w[1].q0 > w[0].q0);
        }
        if let Termination::Resigned { reason, .. } = &t.termination {
            assert!(
                reason.contains("bits"),
                "only the bit cap may end a chase early, got: {reason}"
            );
        }
    }

    #[test]
    fn goodness_checker_detects_bad_ball() {
        // B(1/2, 1/2) meets B(1/2, ψ(2)) with ψ(2) = 1/8 > r/3? r/3 = 1/6 >
        // 1/8, so still good at q = 2... use a tiny ball centered at 1/2:
        // ψ(2) = 1/8 > r/3 = 1/300 and 1/2 is a q = 2 rational
        let bad = FormalBall::new(RationalPoint::scalar(rat(1, 2)), rat(1, 100)).unwrap();
        assert!(!ball_is_good_1d(&bad, &psi_cubed(), &BigInt::from(2), 100));
        // the unit ball is good from Q0 = 2: ψ(2) = 1/8 ≤ 1/3
        assert!(ball_is_good_1d(
            &FormalBall::unit(1),
            &psi_cubed(),
            &BigInt::from(2),
            100
        ));
    }
}
