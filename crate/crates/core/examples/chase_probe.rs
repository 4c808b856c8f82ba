// Timing probe for the rational-chasing Bob: how many rounds fit under a
// given denominator bit cap, and how long a play takes.

use ballgames_core::game::{play, GameConfig, GameKind, PlaySetup};
use ballgames_core::geom::rational::rat;
use ballgames_core::strategy::{
    alice_dummy, bob_s_strategy, AdversarialAlice, AdversarialMode, PsiFunction, Q0Mode,
    Strategy,
};
use std::time::Instant;

fn main() {
    let psi = PsiFunction::parse("q^-3", 1).unwrap();
    for cap in [512u64, 1024, 2048, 4096] {
        for adversarial in [false, true] {
            let mut cfg = ballgames_core::strategy::BobSConfig::new(
                psi.clone(),
                rat(1, 4),
                Q0Mode::Auto,
            );
            cfg.q0_bit_cap = cap;
            let mut bob =
                ballgames_core::strategy::RationalChaserBob::from_config(cfg, 1).unwrap();
            let mut dummy = alice_dummy();
            let mut adv = AdversarialAlice::new(AdversarialMode::SmallDenominator, 1);
            let alice: &mut dyn Strategy = if adversarial { &mut adv } else { &mut dummy };
            let t0 = Instant::now();
            let t = play(PlaySetup {
                config: GameConfig::new(GameKind::Bms { beta: rat(1, 4) }, 1).unwrap(),
                max_rounds: 30,
                bob: &mut bob,
                alice,
            });
            let elapsed = t0.elapsed();
            let last_q_bits = bob.records().last().map(|r| r.q0.bits()).unwrap_or(0);
            println!(
                "cap {cap:5} adversarial {adversarial:5}: rounds {:2}, last q0 bits {last_q_bits:5}, {:?}  [{:?}]",
                t.rounds(),
                elapsed,
                t.termination
            );
        }
    }
}
