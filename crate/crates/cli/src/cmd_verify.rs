use crate::{EXIT_DATA, EXIT_FAIL, EXIT_OK};
use anyhow::{Context, Result};
use ballgames_core::game::{verify_transcript, Transcript, TranscriptParseError};
use clap::Args;
use std::path::PathBuf;

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Transcript file (JSON Lines).
    pub path: PathBuf,
}

pub fn run(args: VerifyArgs) -> Result<u8> {
    let text = std::fs::read_to_string(&args.path)
        .with_context(|| format!("reading {}", args.path.display()))?;
    let transcript = match Transcript::from_jsonl(&text) {
        Ok(t) => t,
        Err(e @ TranscriptParseError::SchemaVersion { .. }) => {
            eprintln!("schema error: {e}");
            return Ok(EXIT_DATA);
        }
        Err(e) => {
            eprintln!("malformed transcript: {e}");
            return Ok(EXIT_FAIL);
        }
    };
    match verify_transcript(&transcript) {
        Ok(report) => {
            println!(
                "ok: {} rounds replayed legally, nesting chain intact{}",
                report.rounds,
                if report.radius_law_checked {
                    ", schmidt radius law exact"
                } else {
                    ""
                }
            );
            Ok(EXIT_OK)
        }
        Err(e) => {
            eprintln!("violation: {e}");
            Ok(EXIT_FAIL)
        }
    }
}
