//! JSON report of the irrationality-exponent and Lagrange estimates, with
//! the best-approximation table used to compute them.

use crate::EXIT_OK;
use anyhow::{bail, Context, Result};
use ballgames_core::dio::cf::{continued_fraction, convergents_of, rational_cf};
use ballgames_core::dio::interval::rational_to_f64;
use ballgames_core::dio::{
    lagrange_estimate, omega_estimate, OmegaEstimate, RealDescriptor,
};
use ballgames_core::geom::rational::parse_rational;
use clap::Args;
use num_bigint::BigInt;
use serde_json::json;

#[derive(Args, Debug)]
pub struct EstimateArgs {
    /// The number: sqrt<D>, golden, a rational like 22/7,
    /// quad:P,D,Q for (P+sqrt(D))/Q, or cf:[a0;a1,a2,...].
    /// Repeat the flag for a multi-dimensional point (rationals only).
    #[arg(long = "x", required = true)]
    pub xs: Vec<String>,
    #[arg(long, default_value_t = 10_000)]
    pub qmax: u64,
    /// Enclosure working precision in bits.
    #[arg(long, default_value_t = 64)]
    pub bits: u32,
}

pub fn parse_descriptor(s: &str) -> Result<RealDescriptor> {
    let s = s.trim();
    if s == "golden" {
        return Ok(RealDescriptor::golden());
    }
    if let Some(d) = s.strip_prefix("sqrt") {
        let d: i64 = d.parse().with_context(|| format!("bad sqrt spec {s:?}"))?;
        return RealDescriptor::sqrt(d).map_err(|e| anyhow::anyhow!("{e}"));
    }
    if let Some(rest) = s.strip_prefix("quad:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != 3 {
            bail!("quad wants P,D,Q in {s:?}");
        }
        let p: BigInt = parts[0].trim().parse().context("bad P")?;
        let d: BigInt = parts[1].trim().parse().context("bad D")?;
        let q: BigInt = parts[2].trim().parse().context("bad Q")?;
        return RealDescriptor::quadratic(p, d, q).map_err(|e| anyhow::anyhow!("{e}"));
    }
    if let Some(rest) = s.strip_prefix("cf:") {
        let inner = rest
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .with_context(|| format!("cf wants [a0;a1,...] in {s:?}"))?;
        let (head, tail) = inner.split_once(';').unwrap_or((inner, ""));
        let mut quotients: Vec<BigInt> = vec![head.trim().parse().context("bad a0")?];
        if !tail.is_empty() {
            for a in tail.split(',') {
                quotients.push(a.trim().parse().context("bad quotient")?);
            }
        }
        return RealDescriptor::cf_stream(quotients).map_err(|e| anyhow::anyhow!("{e}"));
    }
    let r = parse_rational(s).map_err(|e| anyhow::anyhow!("{e}"))?;
    Ok(RealDescriptor::Rational(r))
}

pub fn run(args: EstimateArgs) -> Result<u8> {
    let xs = args
        .xs
        .iter()
        .map(|s| parse_descriptor(s))
        .collect::<Result<Vec<_>>>()?;
    let qmax = BigInt::from(args.qmax);
    let omega = omega_estimate(&xs, &qmax, args.bits).map_err(|e| anyhow::anyhow!("{e}"))?;
    let lagrange = lagrange_estimate(&xs, &qmax, args.bits).map_err(|e| anyhow::anyhow!("{e}"))?;
    let omega_json = match &omega {
        OmegaEstimate::Infinite => json!("infinity"),
        OmegaEstimate::Finite(iv) => json!({
            "lo": iv.lo.to_string(),
            "hi": iv.hi.to_string(),
            "approx": iv.approx_f64(),
        }),
    };
    let table = best_approximation_table(&xs, &qmax)?;
    let report = json!({
        "x": args.xs,
        "qmax": args.qmax,
        "omega_lower": omega_json,
        "lagrange_upper": {
            "lo": lagrange.lo.to_string(),
            "hi": lagrange.hi.to_string(),
            "approx": lagrange.approx_f64(),
        },
        "best_approximations": table,
    });
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(EXIT_OK)
}

/// Convergent table for 1-d inputs (the estimators' raw material).
fn best_approximation_table(
    xs: &[RealDescriptor],
    qmax: &BigInt,
) -> Result<Vec<serde_json::Value>> {
    if xs.len() != 1 {
        return Ok(Vec::new());
    }
    let conv = match &xs[0] {
        RealDescriptor::Rational(r) => convergents_of(&rational_cf(r, None).quotients),
        x @ RealDescriptor::Quadratic { .. } => {
            let depth = 4 + 3 * (qmax.bits() as usize);
            convergents_of(
                &continued_fraction(x, depth)
                    .map_err(|e| anyhow::anyhow!("{e}"))?
                    .quotients,
            )
        }
        RealDescriptor::CfStream(quotients) => convergents_of(quotients),
    };
    let mut table = Vec::new();
    for (p, q) in conv {
        if &q > qmax {
            break;
        }
        let entry = match &xs[0] {
            RealDescriptor::Rational(r) => {
                let err = ballgames_core::geom::rational::abs(
                    &(r - &ballgames_core::Rational::new(p.clone(), q.clone())),
                );
                json!({"p": p.to_string(), "q": q.to_string(), "err": err.to_string()})
            }
            x @ RealDescriptor::Quadratic { .. } => {
                let v = x.quad_value().expect("quadratic");
                let err = v
                    .sub_rational(&ballgames_core::Rational::new(p.clone(), q.clone()))
                    .abs();
                let (lo, hi) = err.to_bracket(64);
                json!({
                    "p": p.to_string(),
                    "q": q.to_string(),
                    "err_approx": rational_to_f64(&((&lo + &hi) / ballgames_core::geom::rational::rat(2, 1)))
                })
            }
            RealDescriptor::CfStream(_) => {
                json!({"p": p.to_string(), "q": q.to_string()})
            }
        };
        table.push(entry);
    }
    Ok(table)
}
