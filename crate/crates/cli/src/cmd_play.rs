use crate::gamecfg::GameArgs;
use crate::{EXIT_OK, EXIT_RESIGNED, EXIT_UNDECIDED};
use anyhow::{Context, Result};
use ballgames_core::game::{outcome, play, PlaySetup, Termination, Winner};
use ballgames_core::porosity::registry::parse_oracle;
use ballgames_core::strategy::spec::build_strategy;
use clap::Args;
use std::path::PathBuf;

#[derive(Args, Debug)]
pub struct PlayArgs {
    #[command(flatten)]
    pub game: GameArgs,
    /// Alice's strategy spec (see README for the grammar).
    #[arg(long)]
    pub alice: String,
    /// Bob's strategy spec.
    #[arg(long)]
    pub bob: String,
    /// Round bound.
    #[arg(long, default_value_t = 30)]
    pub rounds: usize,
    /// Target-set oracle spec for outcome judging.
    #[arg(long)]
    pub target: Option<String>,
    /// Transcript path (default: <out dir>/play-<game>.jsonl).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: PlayArgs) -> Result<u8> {
    let config = args.game.to_config()?;
    let mut alice =
        build_strategy(&args.alice, &config).map_err(|e| anyhow::anyhow!("--alice: {e}"))?;
    let mut bob = build_strategy(&args.bob, &config).map_err(|e| anyhow::anyhow!("--bob: {e}"))?;
    let target = match &args.target {
        Some(spec) => Some(parse_oracle(spec).map_err(|e| anyhow::anyhow!("--target: {e}"))?),
        None => None,
    };
    let mut transcript = play(PlaySetup {
        config: config.clone(),
        max_rounds: args.rounds,
        bob: bob.as_mut(),
        alice: alice.as_mut(),
    });
    let judged = target.as_ref().map(|t| outcome(&transcript, t.as_ref()));
    transcript.outcome = judged.clone();

    let path = args.out.unwrap_or_else(|| {
        crate::out_dir().join(format!("play-{}.jsonl", config.kind.name()))
    });
    std::fs::write(&path, transcript.to_jsonl())
        .with_context(|| format!("writing {}", path.display()))?;

    println!(
        "{} rounds, termination: {}",
        transcript.rounds(),
        describe_termination(&transcript.termination)
    );
    println!("transcript: {}", path.display());
    let resigned = matches!(transcript.termination, Termination::Resigned { .. });
    match judged {
        Some(o) => {
            println!("outcome: {:?} — {}", o.winner, o.evidence);
            Ok(match o.winner {
                Winner::Alice | Winner::Bob => {
                    if resigned {
                        EXIT_RESIGNED
                    } else {
                        EXIT_OK
                    }
                }
                Winner::Undecided => EXIT_UNDECIDED,
            })
        }
        None => {
            println!("outcome: no target oracle given");
            Ok(if resigned { EXIT_RESIGNED } else { EXIT_UNDECIDED })
        }
    }
}

pub fn describe_termination(t: &Termination) -> String {
    match t {
        Termination::RoundBound => "round bound reached".into(),
        Termination::Resigned { player, reason } => format!("{player} resigned: {reason}"),
        Termination::NoLegalMove { player, reason } => {
            format!("{player} has no legal move: {reason}")
        }
    }
}
