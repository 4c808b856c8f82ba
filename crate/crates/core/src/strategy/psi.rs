//! The approximation functions ψ(q) = c·q^{-a} used by the rational-chasing
//! Bob strategy and the liminf-set diagnostics.
//!
//! The exponent is an integer ≥ 2 so that ψ(q) stays rational — it becomes a
//! ball radius (s = 3β⁻¹ψ(q₀)) and radii must be exact. The hypothesis
//! q^{1+1/d}·ψ(q) → 0 requires a > 1 + 1/d, i.e. a ≥ 3 when d = 1.

use super::StrategyError;
use crate::geom::rational::{parse_rational, pow_i, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiFunction {
    c: Rational,
    a: u32,
}

impl PsiFunction {
    pub fn new(c: Rational, a: u32, dimension: usize) -> Result<Self, StrategyError> {
        if !c.is_positive() {
            return Err(StrategyError::BadParameter(format!(
                "psi coefficient must be positive, got {c}"
            )));
        }
        // a > 1 + 1/d  ⟺  a·d > d + 1
        if (a as usize) * dimension <= dimension + 1 {
            return Err(StrategyError::BadParameter(format!(
                "psi exponent {a} too small: need a > 1 + 1/{dimension}"
            )));
        }
        Ok(Self { c, a })
    }

    pub fn eval(&self, q: &BigInt) -> Rational {
        debug_assert!(q.is_positive());
        &self.c / pow_i(&Rational::from_integer(q.clone()), self.a as i64)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.c
    }

    pub fn exponent(&self) -> u32 {
        self.a
    }

    /// Parse "c*q^-a" (or just "q^-a" with c = 1).
    pub fn parse(s: &str, dimension: usize) -> Result<Self, StrategyError> {
        let s = s.trim();
        let (c_str, pow_str) = match s.split_once('*') {
            Some((c, p)) => (c.trim(), p.trim()),
            None => ("1", s),
        };
        let c = parse_rational(c_str)
            .map_err(|e| StrategyError::BadParameter(e.to_string()))?;
        let a = pow_str
            .strip_prefix("q^-")
            .and_then(|x| x.parse::<u32>().ok())
            .ok_or_else(|| {
                StrategyError::BadParameter(format!(
                    "psi must look like \"c*q^-a\", got {s:?}"
                ))
            })?;
        Self::new(c, a, dimension)
    }
}

impl fmt::Display for PsiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_one() {
            write!(f, "q^-{}", self.a)
        } else {
            write!(f, "{}*q^-{}", self.c, self.a)
        }
    }
}
