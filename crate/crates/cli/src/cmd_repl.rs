//! Interactive seat: the human plays Alice or Bob against a strategy spec.
//! Input is "x1 .. xd r" as rational strings, or one of the commands
//! hint | resign | help | quit. Rejected input never mutates the game.

use crate::gamecfg::GameArgs;
use crate::{EXIT_OK, EXIT_RESIGNED};
use anyhow::{Context, Result};
use ballgames_core::game::{
    outcome, GameKind, GameState, Player, Termination, Transcript, TranscriptHeader,
};
use ballgames_core::geom::rational::parse_rational;
use ballgames_core::geom::{FormalBall, RationalPoint};
use ballgames_core::porosity::registry::parse_oracle;
use ballgames_core::strategy::spec::build_strategy;
use ballgames_core::strategy::{suggest_legal_move, StrategyMove};
use clap::Args;
use std::io::{BufRead, Write};
use std::path::PathBuf;

#[derive(Args, Debug)]
pub struct ReplArgs {
    #[command(flatten)]
    pub game: GameArgs,
    /// Which seat the human takes.
    #[arg(long, value_parser = ["alice", "bob"])]
    pub human: String,
    /// Strategy spec for the opponent seat.
    #[arg(long)]
    pub opponent: String,
    #[arg(long, default_value_t = 10)]
    pub rounds: usize,
    /// Target oracle judged on exit.
    #[arg(long)]
    pub target: Option<String>,
    /// Transcript path written on exit.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// The rule set for the seat to move, with current values filled in.
fn constraints(state: &GameState) -> Vec<String> {
    let Some(last) = state.last_ball() else {
        return vec!["opening move: any formal ball (center coordinates + positive radius)".into()];
    };
    let mover = state.to_move();
    let own = state.last_ball_of(Player::Bob);
    match (&state.config().kind, mover) {
        (GameKind::Schmidt { alpha, .. }, Player::Alice) => vec![
            format!("radius must equal alpha*r = {}*{} = {}", alpha, last.radius(), alpha * last.radius()),
            format!("radius + dist(center, {}) <= {}", last.center(), last.radius()),
        ],
        (GameKind::Schmidt { beta, .. }, Player::Bob) => vec![
            format!("radius must equal beta*r' = {}*{} = {}", beta, last.radius(), beta * last.radius()),
            format!("radius + dist(center, {}) <= {}", last.center(), last.radius()),
        ],
        (GameKind::BanachMazur, _) => vec![format!(
            "radius + dist(center, {}) <= {}",
            last.center(),
            last.radius()
        )],
        (GameKind::Bms { beta }, Player::Alice) => vec![
            format!("radius must equal beta*r = {}*{} = {}", beta, last.radius(), beta * last.radius()),
            format!("radius + dist(center, {}) <= {}", last.center(), last.radius()),
        ],
        (GameKind::Bms { .. }, Player::Bob) => vec![format!(
            "radius + dist(center, {}) <= {}",
            last.center(),
            last.radius()
        )],
        (GameKind::Absolute { beta }, Player::Alice) | (GameKind::Bmm { beta }, Player::Alice) => {
            vec![format!(
                "center unrestricted; radius <= beta*r = {}*{} = {}",
                beta,
                last.radius(),
                beta * last.radius()
            )]
        }
        (GameKind::Absolute { beta }, Player::Bob) => {
            let own = own.expect("bob has moved");
            vec![
                format!("radius + dist(center, {}) <= {} (your own last ball)", own.center(), own.radius()),
                format!("dist(center, {}) >= radius + {} (formally disjoint from the deletion)", last.center(), last.radius()),
                format!("radius >= beta*r = {}*{} = {}", beta, own.radius(), beta * own.radius()),
            ]
        }
        (GameKind::Bmm { .. }, Player::Bob) => {
            let own = own.expect("bob has moved");
            vec![
                format!("radius + dist(center, {}) <= {} (your own last ball)", own.center(), own.radius()),
                format!("dist(center, {}) >= radius + {} (formally disjoint from the deletion)", last.center(), last.radius()),
            ]
        }
    }
}

fn parse_human_ball(line: &str, dim: usize) -> Result<FormalBall, String> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != dim + 1 {
        return Err(format!(
            "expected {dim} center coordinate(s) and a radius, got {} token(s)",
            tokens.len()
        ));
    }
    let mut coords = Vec::with_capacity(dim);
    for t in &tokens[..dim] {
        coords.push(parse_rational(t).map_err(|e| e.to_string())?);
    }
    let radius = parse_rational(tokens[dim]).map_err(|e| e.to_string())?;
    let center = RationalPoint::new(coords).map_err(|e| e.to_string())?;
    FormalBall::new(center, radius).map_err(|e| e.to_string())
}

pub fn run(args: ReplArgs) -> Result<u8> {
    let config = args.game.to_config()?;
    let human = if args.human == "alice" {
        Player::Alice
    } else {
        Player::Bob
    };
    let mut opponent = build_strategy(&args.opponent, &config)
        .map_err(|e| anyhow::anyhow!("--opponent: {e}"))?;
    let stdin = std::io::stdin();
    let mut lines = stdin.lock().lines();
    let mut state = GameState::new(config.clone());
    let out = std::io::stdout();

    println!(
        "{} on Q^{}; you play {human}, {} plays {}",
        config.kind.name(),
        config.dimension,
        opponent.name(),
        human.opponent()
    );
    let termination = loop {
        if state.to_move() == Player::Alice && state.round_index() > args.rounds {
            break Termination::RoundBound;
        }
        let mover = state.to_move();
        if mover == human {
            if let Some(b) = state.last_ball() {
                println!("current ball: {b}  (round {})", state.round_index());
            }
            for c in constraints(&state) {
                println!("  constraint: {c}");
            }
            print!("{human}> ");
            out.lock().flush().ok();
            let Some(line) = lines.next() else {
                break Termination::Resigned {
                    player: human,
                    reason: "input closed".into(),
                };
            };
            let line = line.context("reading stdin")?;
            let line = line.trim();
            match line {
                "" => continue,
                "quit" | "resign" => {
                    break Termination::Resigned {
                        player: human,
                        reason: "resigned at the prompt".into(),
                    }
                }
                "help" => {
                    println!("enter: x1 .. xd r   (rational strings, e.g. 1/2 -3/4 1/8)");
                    println!("or: hint | resign | quit");
                    continue;
                }
                "hint" => {
                    match suggest_legal_move(&state) {
                        Some(b) => println!("a legal move: {b}"),
                        None => println!("no legal move found — resign?"),
                    }
                    continue;
                }
                _ => {}
            }
            let ball = match parse_human_ball(line, config.dimension) {
                Ok(b) => b,
                Err(e) => {
                    println!("cannot parse that: {e}");
                    continue; // state untouched
                }
            };
            if let Err(violation) = state.legal_move(mover, &ball) {
                println!("illegal: {violation}");
                continue; // state untouched
            }
            state.apply(mover, ball).expect("just checked");
        } else {
            match opponent.next_move(&state) {
                StrategyMove::Play(ball) => match state.apply(mover, ball.clone()) {
                    Ok(()) => println!("{mover} plays {ball}"),
                    Err(v) => {
                        break Termination::Resigned {
                            player: mover,
                            reason: format!("illegal move: {v}"),
                        }
                    }
                },
                StrategyMove::Resign(reason) => {
                    break Termination::Resigned {
                        player: mover,
                        reason,
                    }
                }
                StrategyMove::NoLegalMove(reason) => {
                    break Termination::NoLegalMove {
                        player: mover,
                        reason,
                    }
                }
            }
        }
    };

    let mut transcript = Transcript {
        header: TranscriptHeader {
            schema_version: ballgames_core::game::SCHEMA_VERSION,
            engine: ballgames_core::ENGINE_VERSION.to_string(),
            config: config.clone(),
            max_rounds: args.rounds,
        },
        moves: state.history().to_vec(),
        termination,
        outcome: None,
    };
    if let Some(spec) = &args.target {
        let oracle = parse_oracle(spec).map_err(|e| anyhow::anyhow!("--target: {e}"))?;
        let o = outcome(&transcript, oracle.as_ref());
        println!("outcome: {:?} — {}", o.winner, o.evidence);
        transcript.outcome = Some(o);
    }
    let path = args
        .out
        .unwrap_or_else(|| crate::out_dir().join("repl-session.jsonl"));
    std::fs::write(&path, transcript.to_jsonl())
        .with_context(|| format!("writing {}", path.display()))?;
    println!(
        "session over: {}; transcript saved to {}",
        crate::cmd_play::describe_termination(&transcript.termination),
        path.display()
    );
    Ok(match transcript.termination {
        Termination::Resigned { .. } => EXIT_RESIGNED,
        _ => EXIT_OK,
    })
}
