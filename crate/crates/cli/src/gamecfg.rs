//! Shared flags for selecting a game and its exact rational parameters.

use anyhow::{bail, Context, Result};
use ballgames_core::game::{GameConfig, GameKind};
use ballgames_core::geom::rational::parse_rational;
use clap::Args;

#[derive(Args, Debug, Clone)]
pub struct GameArgs {
    /// Game kind: schmidt | absolute | banach-mazur | bms | bmm.
    #[arg(long)]
    pub game: String,
    /// Alice's ratio for schmidt (rational string, e.g. 1/2).
    #[arg(long)]
    pub alpha: Option<String>,
    /// The contraction parameter for schmidt/absolute/bms/bmm.
    #[arg(long)]
    pub beta: Option<String>,
    /// Dimension d of the ambient space.
    #[arg(long, default_value_t = 1)]
    pub dimension: usize,
}

impl GameArgs {
    pub fn to_config(&self) -> Result<GameConfig> {
        let beta = || -> Result<_> {
            let s = self
                .beta
                .as_ref()
                .with_context(|| format!("--beta is required for {}", self.game))?;
            parse_rational(s).map_err(|e| anyhow::anyhow!("{e}"))
        };
        let kind = match self.game.as_str() {
            "schmidt" => {
                let a = self
                    .alpha
                    .as_ref()
                    .context("--alpha is required for schmidt")?;
                GameKind::Schmidt {
                    alpha: parse_rational(a).map_err(|e| anyhow::anyhow!("{e}"))?,
                    beta: beta()?,
                }
            }
            "absolute" => GameKind::Absolute { beta: beta()? },
            "banach-mazur" => GameKind::BanachMazur,
            "bms" => GameKind::Bms { beta: beta()? },
            "bmm" => GameKind::Bmm { beta: beta()? },
            other => bail!("unknown game {other:?} (schmidt | absolute | banach-mazur | bms | bmm)"),
        };
        GameConfig::new(kind, self.dimension).map_err(|e| anyhow::anyhow!("{e}"))
    }
}
