//! Replayable play records and their JSON Lines serialization.
//!
//! Wire format (schema version 1): line 1 is a header object, then one
//! object per move, and a final end object. All rationals are bit-exact
//! "p/q" strings; no floats anywhere.
//!
//! ```text
//! {"schema_version":1,"engine":"...","game":"bms","beta":"1/5","dimension":1,"max_rounds":60}
//! {"mover":"bob","center":["0"],"radius":"1"}
//! {"mover":"alice","center":["2/5"],"radius":"1/5"}
//! {"termination":{"kind":"round_bound"},"rounds":1,"winner":"alice","evidence":"..."}
//! ```

use super::{GameConfig, GameKind, GameState, Outcome, Player, RuleViolation, Winner};
use crate::geom::rational::{parse_rational, Rational};
use crate::geom::{shrink_leq, FormalBall, RationalPoint};
use serde_json::{json, Map, Value};
use thiserror::Error;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptHeader {
    pub schema_version: u64,
    pub engine: String,
    pub config: GameConfig,
    pub max_rounds: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Termination {
    RoundBound,
    Resigned { player: Player, reason: String },
    NoLegalMove { player: Player, reason: String },
}

impl Termination {
    pub fn kind(&self) -> &'static str {
        match self {
            Termination::RoundBound => "round_bound",
            Termination::Resigned { .. } => "resigned",
            Termination::NoLegalMove { .. } => "no_legal_move",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Transcript {
    pub header: TranscriptHeader,
    pub moves: Vec<(Player, FormalBall)>,
    pub termination: Termination,
    /// Filled in when a target oracle judged the play.
    pub outcome: Option<Outcome>,
}

impl Transcript {
    /// Completed full (Bob, Alice) rounds.
    pub fn rounds(&self) -> usize {
        self.moves
            .iter()
            .filter(|(p, _)| *p == Player::Alice)
            .count()
    }

    pub fn final_bob_ball(&self) -> Option<&FormalBall> {
        self.moves
            .iter()
            .rev()
            .find(|(p, _)| *p == Player::Bob)
            .map(|(_, b)| b)
    }

    pub fn balls_of(&self, player: Player) -> impl Iterator<Item = &FormalBall> {
        self.moves
            .iter()
            .filter(move |(p, _)| *p == player)
            .map(|(_, b)| b)
    }

    pub fn to_jsonl(&self) -> String {
        let mut lines = Vec::with_capacity(self.moves.len() + 2);
        lines.push(header_json(&self.header).to_string());
        for (mover, ball) in &self.moves {
            lines.push(
                json!({
                    "mover": mover.as_str(),
                    "center": center_strings(ball.center()),
                    "radius": ball.radius().to_string(),
                })
                .to_string(),
            );
        }
        lines.push(end_json(self).to_string());
        lines.join("\n") + "\n"
    }

    pub fn from_jsonl(text: &str) -> Result<Self, TranscriptParseError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header_line) = lines.next().ok_or(TranscriptParseError::Empty)?;
        let header = parse_header(header_line)?;
        let mut moves = Vec::new();
        let mut end: Option<(usize, Value)> = None;
        for (idx, line) in lines {
            let v: Value = serde_json::from_str(line)
                .map_err(|e| TranscriptParseError::BadLine(idx + 1, e.to_string()))?;
            if v.get("termination").is_some() {
                end = Some((idx + 1, v));
                break;
            }
            moves.push(parse_move(idx + 1, &v)?);
        }
        let (_, end) = end.ok_or(TranscriptParseError::MissingEnd)?;
        let termination = parse_termination(&end)?;
        let outcome = parse_outcome(&end, header.config.dimension)?;
        Ok(Self {
            header,
            moves,
            termination,
            outcome,
        })
    }
}

fn center_strings(p: &RationalPoint) -> Vec<String> {
    p.coords().iter().map(|c| c.to_string()).collect()
}

fn header_json(h: &TranscriptHeader) -> Value {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(h.schema_version));
    m.insert("engine".into(), json!(h.engine));
    m.insert("game".into(), json!(h.config.kind.name()));
    if let Some(a) = h.config.kind.alpha() {
        m.insert("alpha".into(), json!(a.to_string()));
    }
    if let Some(b) = h.config.kind.beta() {
        m.insert("beta".into(), json!(b.to_string()));
    }
    m.insert("dimension".into(), json!(h.config.dimension));
    m.insert("max_rounds".into(), json!(h.max_rounds));
    Value::Object(m)
}

fn end_json(t: &Transcript) -> Value {
    let mut m = Map::new();
    let term = match &t.termination {
        Termination::RoundBound => json!({"kind": "round_bound"}),
        Termination::Resigned { player, reason } => {
            json!({"kind": "resigned", "player": player.as_str(), "reason": reason})
        }
        Termination::NoLegalMove { player, reason } => {
            json!({"kind": "no_legal_move", "player": player.as_str(), "reason": reason})
        }
    };
    m.insert("termination".into(), term);
    m.insert("rounds".into(), json!(t.rounds()));
    if let Some(o) = &t.outcome {
        m.insert(
            "winner".into(),
            json!(match o.winner {
                Winner::Alice => "alice",
                Winner::Bob => "bob",
                Winner::Undecided => "undecided",
            }),
        );
        m.insert("evidence".into(), json!(o.evidence));
        m.insert(
            "final_ball".into(),
            json!({
                "center": center_strings(o.final_ball.center()),
                "radius": o.final_ball.radius().to_string(),
            }),
        );
    }
    Value::Object(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranscriptParseError {
    #[error("empty transcript")]
    Empty,
    #[error("missing end line")]
    MissingEnd,
    #[error("line {0}: {1}")]
    BadLine(usize, String),
    #[error("unsupported schema version {found} (this engine reads {supported})")]
    SchemaVersion { found: u64, supported: u64 },
}

fn get_str<'v>(v: &'v Value, key: &str, line: usize) -> Result<&'v str, TranscriptParseError> {
    v.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| TranscriptParseError::BadLine(line, format!("missing field {key:?}")))
}

fn parse_rat(s: &str, line: usize) -> Result<Rational, TranscriptParseError> {
    parse_rational(s).map_err(|e| TranscriptParseError::BadLine(line, e.to_string()))
}

fn parse_header(line_text: &str) -> Result<TranscriptHeader, TranscriptParseError> {
    let v: Value = serde_json::from_str(line_text)
        .map_err(|e| TranscriptParseError::BadLine(1, e.to_string()))?;
    let found = v
        .get("schema_version")
        .and_then(Value::as_u64)
        .ok_or_else(|| TranscriptParseError::BadLine(1, "missing schema_version".into()))?;
    if found != SCHEMA_VERSION {
        return Err(TranscriptParseError::SchemaVersion {
            found,
            supported: SCHEMA_VERSION,
        });
    }
    let game = get_str(&v, "game", 1)?;
    let alpha = v.get("alpha").and_then(Value::as_str);
    let beta = v.get("beta").and_then(Value::as_str);
    let kind = match (game, alpha, beta) {
        ("schmidt", Some(a), Some(b)) => GameKind::Schmidt {
            alpha: parse_rat(a, 1)?,
            beta: parse_rat(b, 1)?,
        },
        ("absolute", _, Some(b)) => GameKind::Absolute {
            beta: parse_rat(b, 1)?,
        },
        ("banach-mazur", _, _) => GameKind::BanachMazur,
        ("bms", _, Some(b)) => GameKind::Bms {
            beta: parse_rat(b, 1)?,
        },
        ("bmm", _, Some(b)) => GameKind::Bmm {
            beta: parse_rat(b, 1)?,
        },
        _ => {
            return Err(TranscriptParseError::BadLine(
                1,
                format!("unknown or under-parameterized game {game:?}"),
            ))
        }
    };
    let dimension = v
        .get("dimension")
        .and_then(Value::as_u64)
        .ok_or_else(|| TranscriptParseError::BadLine(1, "missing dimension".into()))?
        as usize;
    let config = GameConfig::new(kind, dimension)
        .map_err(|e| TranscriptParseError::BadLine(1, e.to_string()))?;
    Ok(TranscriptHeader {
        schema_version: found,
        engine: v
            .get("engine")
            .and_then(Value::as_str)
            .unwrap_or_default()
            .to_string(),
        config,
        max_rounds: v.get("max_rounds").and_then(Value::as_u64).unwrap_or(0) as usize,
    })
}

fn parse_ball(v: &Value, line: usize) -> Result<FormalBall, TranscriptParseError> {
    let center = v
        .get("center")
        .and_then(Value::as_array)
        .ok_or_else(|| TranscriptParseError::BadLine(line, "missing center".into()))?;
    let coords = center
        .iter()
        .map(|c| {
            c.as_str()
                .ok_or_else(|| {
                    TranscriptParseError::BadLine(line, "center coordinates must be strings".into())
                })
                .and_then(|s| parse_rat(s, line))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let radius = parse_rat(get_str(v, "radius", line)?, line)?;
    let point = RationalPoint::new(coords)
        .map_err(|e| TranscriptParseError::BadLine(line, e.to_string()))?;
    FormalBall::new(point, radius).map_err(|e| TranscriptParseError::BadLine(line, e.to_string()))
}

fn parse_move(line: usize, v: &Value) -> Result<(Player, FormalBall), TranscriptParseError> {
    let mover = match get_str(v, "mover", line)? {
        "alice" => Player::Alice,
        "bob" => Player::Bob,
        other => {
            return Err(TranscriptParseError::BadLine(
                line,
                format!("unknown mover {other:?}"),
            ))
        }
    };
    Ok((mover, parse_ball(v, line)?))
}

fn parse_termination(end: &Value) -> Result<Termination, TranscriptParseError> {
    let t = end.get("termination").expect("checked by caller");
    let kind = get_str(t, "kind", 0).map_err(|_| TranscriptParseError::MissingEnd)?;
    let player = || -> Result<Player, TranscriptParseError> {
        match t.get("player").and_then(Value::as_str) {
            Some("alice") => Ok(Player::Alice),
            Some("bob") => Ok(Player::Bob),
            _ => Err(TranscriptParseError::MissingEnd),
        }
    };
    let reason = t
        .get("reason")
        .and_then(Value::as_str)
        .unwrap_or_default()
        .to_string();
    Ok(match kind {
        "round_bound" => Termination::RoundBound,
        "resigned" => Termination::Resigned {
            player: player()?,
            reason,
        },
        "no_legal_move" => Termination::NoLegalMove {
            player: player()?,
            reason,
        },
        other => {
            return Err(TranscriptParseError::BadLine(
                0,
                format!("unknown termination kind {other:?}"),
            ))
        }
    })
}

fn parse_outcome(end: &Value, _dim: usize) -> Result<Option<Outcome>, TranscriptParseError> {
    let Some(w) = end.get("winner").and_then(Value::as_str) else {
        return Ok(None);
    };
    let winner = match w {
        "alice" => Winner::Alice,
        "bob" => Winner::Bob,
        _ => Winner::Undecided,
    };
    let fb = end
        .get("final_ball")
        .ok_or(TranscriptParseError::MissingEnd)?;
    let final_ball = parse_ball(fb, 0)?;
    Ok(Some(Outcome {
        winner,
        final_ball,
        evidence: end
            .get("evidence")
            .and_then(Value::as_str)
            .unwrap_or_default()
            .to_string(),
    }))
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub rounds: usize,
    pub final_ball: Option<FormalBall>,
    /// Exact product law r_n = r_1·(αβ)^{n-1} checked (Schmidt only).
    pub radius_law_checked: bool,
}

#[derive(Debug, Clone, Error)]
pub enum VerifyError {
    /// 1-based JSONL line number of the offending move.
    #[error("move at line {line} illegal: {violation}")]
    IllegalMove { line: usize, violation: RuleViolation },
    #[error("nesting chain broken at line {line}: {detail}")]
    ChainBroken { line: usize, detail: String },
    #[error("schmidt radius law violated at round {round}: expected {expected}, got {got}")]
    RadiusLaw {
        round: usize,
        expected: Rational,
        got: Rational,
    },
}

/// Replay every move through the referee, then re-check the nesting chain
/// and (for Schmidt) the exact radius product law.
pub fn verify_transcript(t: &Transcript) -> Result<VerifyReport, VerifyError> {
    let mut state = GameState::new(t.header.config.clone());
    for (i, (mover, ball)) in t.moves.iter().enumerate() {
        state
            .apply(*mover, ball.clone())
            .map_err(|violation| VerifyError::IllegalMove {
                line: i + 2, // header is line 1
                violation,
            })?;
    }
    // nesting chain: full chain for the Schmidt-style games, Bob's own chain
    // for the deletion games
    let full_chain = matches!(
        t.header.config.kind,
        GameKind::Schmidt { .. } | GameKind::BanachMazur | GameKind::Bms { .. }
    );
    if full_chain {
        for (i, w) in t.moves.windows(2).enumerate() {
            if !shrink_leq(&w[1].1, &w[0].1).expect("dims checked in replay") {
                return Err(VerifyError::ChainBroken {
                    line: i + 3,
                    detail: format!("{} does not shrink into {}", w[1].1, w[0].1),
                });
            }
        }
    } else {
        let bobs: Vec<(usize, &FormalBall)> = t
            .moves
            .iter()
            .enumerate()
            .filter(|(_, (p, _))| *p == Player::Bob)
            .map(|(i, (_, b))| (i, b))
            .collect();
        for w in bobs.windows(2) {
            if !shrink_leq(w[1].1, w[0].1).expect("dims checked in replay") {
                return Err(VerifyError::ChainBroken {
                    line: w[1].0 + 2,
                    detail: format!("Bob's {} does not shrink into {}", w[1].1, w[0].1),
                });
            }
        }
    }
    let mut radius_law_checked = false;
    if let GameKind::Schmidt { alpha, beta } = &t.header.config.kind {
        let bobs: Vec<&FormalBall> = t.balls_of(Player::Bob).collect();
        if let Some(first) = bobs.first() {
            let step = alpha * beta;
            let mut expected = first.radius().clone();
            for (n, b) in bobs.iter().enumerate().skip(1) {
                expected = &expected * &step;
                if *b.radius() != expected {
                    return Err(VerifyError::RadiusLaw {
                        round: n + 1,
                        expected,
                        got: b.radius().clone(),
                    });
                }
            }
            radius_law_checked = true;
        }
    }
    Ok(VerifyReport {
        rounds: t.rounds(),
        final_ball: t.final_bob_ball().cloned(),
        radius_law_checked,
    })
}
