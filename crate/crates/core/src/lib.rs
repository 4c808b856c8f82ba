//! Exact-arithmetic engine for nested-ball games on ℚ^d.
//!
//! Everything game-legality-related is decided in exact rational arithmetic:
//! points and radii are arbitrary-precision rationals, distances use the sup
//! norm (so distances between rational points stay rational), and every rule
//! predicate is an exact comparison. Irrational quantities (logs, roots) only
//! appear in report values produced by the `dio` estimators, never on a path
//! that decides legality.
//!
//! Module map:
//! - [`geom`]: points, formal balls, the shrink order and formal disjointness.
//! - [`game`]: the referee for the five game kinds, plays, transcripts,
//!   outcome judging against set oracles.
//! - [`strategy`]: executable strategies (porosity avoidance, point
//!   enumeration, well-approximable approach, the rational-chasing Bob) plus
//!   baselines.
//! - [`porosity`]: set oracles, porosity certificates (Cantor set witness),
//!   certificate verification and the K_m sampler.
//! - [`dio`]: continued fractions, Dirichlet approximation, irrationality and
//!   Lagrange estimators with certified enclosures.

pub mod dio;
pub mod game;
pub mod geom;
pub mod porosity;
pub mod strategy;

pub use geom::{dist, formally_disjoint, shrink_leq, FormalBall, Rational, RationalPoint};

/// Version tag written into transcript headers.
pub const ENGINE_VERSION: &str = concat!("ballgames ", env!("CARGO_PKG_VERSION"));
