//! Tournament runner: the cross product of Alice specs × Bob specs × seeds,
//! one play per cell, executed concurrently. Specs may carry a `{seed}`
//! placeholder substituted per cell, so `random:seed={seed}` with
//! `--seeds 1..=100` sweeps one hundred opponents.

use crate::gamecfg::GameArgs;
use crate::{EXIT_FAIL, EXIT_OK};
use anyhow::{Context, Result};
use ballgames_core::game::{outcome, play, PlaySetup, Winner};
use ballgames_core::porosity::registry::parse_oracle;
use ballgames_core::strategy::spec::build_strategy;
use clap::Args;
use serde_json::json;
use std::path::PathBuf;
use std::sync::Mutex;

#[derive(Args, Debug)]
pub struct TournamentArgs {
    #[command(flatten)]
    pub game: GameArgs,
    /// Alice strategy specs (repeatable).
    #[arg(long = "alice", required = true)]
    pub alices: Vec<String>,
    /// Bob strategy specs (repeatable); `{seed}` is substituted per cell.
    #[arg(long = "bob", required = true)]
    pub bobs: Vec<String>,
    /// Seed range, e.g. 1..=100 or a single number.
    #[arg(long, default_value = "1..=1")]
    pub seeds: String,
    #[arg(long, default_value_t = 30)]
    pub rounds: usize,
    /// Target oracle for outcome judging.
    #[arg(long)]
    pub target: Option<String>,
    /// Output directory for transcripts and summary.json.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    pub jobs: Option<usize>,
}

fn parse_seed_range(s: &str) -> Result<Vec<u64>> {
    // an empty range is allowed: it yields an empty matrix and an empty
    // summary, not an error
    if let Some((lo, hi)) = s.split_once("..=") {
        let lo: u64 = lo.trim().parse().context("bad seed range start")?;
        let hi: u64 = hi.trim().parse().context("bad seed range end")?;
        return Ok((lo..=hi).collect());
    }
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u64 = lo.trim().parse().context("bad seed range start")?;
        let hi: u64 = hi.trim().parse().context("bad seed range end")?;
        return Ok((lo..hi).collect());
    }
    Ok(vec![s.trim().parse().context("bad seed")?])
}

pub fn run(args: TournamentArgs) -> Result<u8> {
    let config = args.game.to_config()?;
    let seeds = parse_seed_range(&args.seeds)?;
    let out = args.out.clone().unwrap_or_else(crate::out_dir);
    std::fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
    if let Some(spec) = &args.target {
        parse_oracle(spec).map_err(|e| anyhow::anyhow!("--target: {e}"))?;
    }

    // the cell list is fixed up front; results are collected by index so the
    // summary is bit-identical however the threads interleave
    let mut cells = Vec::new();
    for alice in &args.alices {
        for bob in &args.bobs {
            for &seed in &seeds {
                cells.push((alice.clone(), bob.clone(), seed));
            }
        }
    }
    let results: Mutex<Vec<Option<serde_json::Value>>> = Mutex::new(vec![None; cells.len()]);
    let next: Mutex<usize> = Mutex::new(0);
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);

    std::thread::scope(|scope| {
        for _ in 0..jobs.min(cells.len().max(1)) {
            scope.spawn(|| loop {
                let idx = {
                    let mut n = next.lock().unwrap();
                    if *n >= cells.len() {
                        return;
                    }
                    let i = *n;
                    *n += 1;
                    i
                };
                let (alice_spec, bob_spec, seed) = &cells[idx];
                let cell = run_cell(&config, alice_spec, bob_spec, *seed, &args, &out);
                results.lock().unwrap()[idx] = Some(cell);
            });
        }
    });

    let results: Vec<serde_json::Value> =
        results.into_inner().unwrap().into_iter().flatten().collect();
    let mut alice_wins = 0usize;
    let mut bob_wins = 0usize;
    let mut undecided = 0usize;
    let mut failures = 0usize;
    for r in &results {
        match r.get("winner").and_then(|w| w.as_str()) {
            Some("alice") => alice_wins += 1,
            Some("bob") => bob_wins += 1,
            Some("undecided") => undecided += 1,
            _ => failures += 1,
        }
    }
    let summary = json!({
        "game": config.kind.name(),
        "dimension": config.dimension,
        "rounds": args.rounds,
        "cells": results,
        "aggregate": {
            "alice_wins": alice_wins,
            "bob_wins": bob_wins,
            "undecided": undecided,
            "failures": failures,
        },
    });
    let path = out.join("summary.json");
    std::fs::write(&path, serde_json::to_string_pretty(&summary)?)?;
    println!(
        "{} cells: alice {alice_wins}, bob {bob_wins}, undecided {undecided}, failures {failures}",
        results.len()
    );
    println!("summary: {}", path.display());
    Ok(if failures == 0 { EXIT_OK } else { EXIT_FAIL })
}

fn run_cell(
    config: &ballgames_core::game::GameConfig,
    alice_spec: &str,
    bob_spec: &str,
    seed: u64,
    args: &TournamentArgs,
    out: &std::path::Path,
) -> serde_json::Value {
    let alice_spec = alice_spec.replace("{seed}", &seed.to_string());
    let bob_spec = bob_spec.replace("{seed}", &seed.to_string());
    let cell_id = format!(
        "{}-vs-{}-seed{seed}",
        sanitize(&alice_spec),
        sanitize(&bob_spec)
    );
    let fail = |msg: String| {
        json!({"cell": cell_id, "alice": alice_spec, "bob": bob_spec, "seed": seed, "error": msg})
    };
    let mut alice = match build_strategy(&alice_spec, config) {
        Ok(s) => s,
        Err(e) => return fail(format!("alice spec: {e}")),
    };
    let mut bob = match build_strategy(&bob_spec, config) {
        Ok(s) => s,
        Err(e) => return fail(format!("bob spec: {e}")),
    };
    let mut t = play(PlaySetup {
        config: config.clone(),
        max_rounds: args.rounds,
        bob: bob.as_mut(),
        alice: alice.as_mut(),
    });
    let winner = match &args.target {
        Some(spec) => {
            let oracle = match parse_oracle(spec) {
                Ok(o) => o,
                Err(e) => return fail(format!("target: {e}")),
            };
            let o = outcome(&t, oracle.as_ref());
            t.outcome = Some(o.clone());
            match o.winner {
                Winner::Alice => "alice",
                Winner::Bob => "bob",
                Winner::Undecided => "undecided",
            }
        }
        None => "undecided",
    };
    let path = out.join(format!("{cell_id}.jsonl"));
    if let Err(e) = std::fs::write(&path, t.to_jsonl()) {
        return fail(format!("writing transcript: {e}"));
    }
    json!({
        "cell": cell_id,
        "alice": alice_spec,
        "bob": bob_spec,
        "seed": seed,
        "rounds": t.rounds(),
        "termination": crate::cmd_play::describe_termination(&t.termination),
        "winner": winner,
        "transcript": path.display().to_string(),
    })
}

fn sanitize(s: &str) -> String {
    s.chars()
        .map(|c| if c.is_alphanumeric() { c } else { '_' })
        .collect()
}
