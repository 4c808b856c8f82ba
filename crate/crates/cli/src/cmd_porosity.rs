//! Verify a porosity certificate over a triadic grid or random rational
//! balls: both clauses of the uniform-porosity definition, per ball.

use crate::{EXIT_FAIL, EXIT_OK};
use anyhow::Result;
use ballgames_core::geom::rational::{parse_rational, rat, Rational};
use ballgames_core::geom::{FormalBall, RationalPoint};
use ballgames_core::porosity::registry::parse_certificate;
use ballgames_core::porosity::verify_certificate;
use clap::Args;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Args, Debug)]
pub struct PorosityArgs {
    /// Certificate spec, e.g. cantor or affine(cantor; 1, 2) or
    /// finite:{0,1};beta=1/4;r0=1/4.
    #[arg(long)]
    pub cert: String,
    /// Sampling mode.
    #[arg(long, value_parser = ["grid", "random"], default_value = "grid")]
    pub mode: String,
    /// Random-mode sample count.
    #[arg(long, default_value_t = 1_000)]
    pub count: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Override the claimed beta (to exhibit failures of greedier constants).
    #[arg(long)]
    pub beta: Option<String>,
}

pub fn run(args: PorosityArgs) -> Result<u8> {
    let mut cert = parse_certificate(&args.cert).map_err(|e| anyhow::anyhow!("--cert: {e}"))?;
    if let Some(b) = &args.beta {
        let beta = parse_rational(b).map_err(|e| anyhow::anyhow!("{e}"))?;
        cert = cert.with_beta(beta);
    }
    let r0 = cert.r0().clone();
    let samples = match args.mode.as_str() {
        "grid" => triadic_grid(&r0),
        _ => random_balls(&r0, args.count, args.seed),
    };
    let report = verify_certificate(&cert, &samples);
    println!(
        "{}: {} balls checked, {} failures (beta = {}, r0 = {})",
        args.cert,
        report.checked,
        report.failures.len(),
        cert.beta(),
        cert.r0()
    );
    for f in report.failures.iter().take(10) {
        println!("  {}: {}", f.ball, f.detail);
    }
    if report.failures.len() > 10 {
        println!("  ... and {} more", report.failures.len() - 10);
    }
    Ok(if report.all_valid() { EXIT_OK } else { EXIT_FAIL })
}

fn triadic_grid(r0: &Rational) -> Vec<FormalBall> {
    let mut samples = Vec::new();
    for k in -40..=121i64 {
        for r in [rat(1, 81), rat(1, 27), rat(1, 9), rat(1, 3), rat(1, 1)] {
            if &r > r0 {
                continue;
            }
            samples.push(
                FormalBall::new(RationalPoint::scalar(rat(k, 81)), r).expect("positive radius"),
            );
        }
    }
    samples
}

fn random_balls(r0: &Rational, count: usize, seed: u64) -> Vec<FormalBall> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(count);
    for _ in 0..count {
        let den = rng.gen_range(1..=400i64);
        let num = rng.gen_range(-2 * den..=3 * den);
        let rden = rng.gen_range(2..=400i64);
        let rnum = rng.gen_range(1..=rden);
        let radius = rat(rnum, rden) * r0;
        samples.push(
            FormalBall::new(RationalPoint::scalar(rat(num, den)), radius)
                .expect("positive radius"),
        );
    }
    samples
}
