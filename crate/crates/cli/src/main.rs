//! `ballgames` — referee, tournament runner, interactive table and
//! Diophantine estimator for the nested-ball games.
//!
//! Exit codes: 0 success / decided outcome; 1 verification or play-level
//! failure; 2 undecided outcome; 3 a strategy resigned or emitted an illegal
//! move; 64 usage errors; 65 transcript data errors (schema mismatch).

mod cmd_estimate;
mod cmd_play;
mod cmd_porosity;
mod cmd_repl;
mod cmd_tournament;
mod cmd_verify;
mod gamecfg;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use std::process::ExitCode;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_UNDECIDED: u8 = 2;
pub const EXIT_RESIGNED: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(
    name = "ballgames",
    version,
    about = "Exact-arithmetic engine for Schmidt, absolute, Banach-Mazur, BMS and BMM games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one strategy-vs-strategy play and write its transcript.
    Play(cmd_play::PlayArgs),
    /// Replay a transcript through the referee and report violations.
    Verify(cmd_verify::VerifyArgs),
    /// Run a matrix of plays concurrently and aggregate outcomes.
    Tournament(cmd_tournament::TournamentArgs),
    /// Play a seat yourself, turn by turn.
    Repl(cmd_repl::ReplArgs),
    /// Irrationality-exponent and Lagrange-function estimates.
    Estimate(cmd_estimate::EstimateArgs),
    /// Verify a porosity certificate over sampled balls.
    PorosityCheck(cmd_porosity::PorosityArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            let _ = e.print();
            return ExitCode::from(EXIT_OK);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let code = match cli.command {
        Command::Play(args) => cmd_play::run(args),
        Command::Verify(args) => cmd_verify::run(args),
        Command::Tournament(args) => cmd_tournament::run(args),
        Command::Repl(args) => cmd_repl::run(args),
        Command::Estimate(args) => cmd_estimate::run(args),
        Command::PorosityCheck(args) => cmd_porosity::run(args),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

/// Default output directory: $BALLGAMES_OUT_DIR or the working directory.
pub fn out_dir() -> std::path::PathBuf {
    std::env::var_os("BALLGAMES_OUT_DIR")
        .map(std::path::PathBuf::from)
        .unwrap_or_else(|| std::path::PathBuf::from("."))
}
