//! Text registry for oracles and certificates, shared by the CLI and the
//! tournament runner.
//!
//! Certificate specs:
//!
//! ```text
//! cantor
//! affine(<cert>; a, b)               the image a·E + b
//! finite:{x1,x2,...}[;beta=β][;r0=ρ]
//! ```
//!
//! Target (oracle) specs, for outcome judging:
//!
//! ```text
//! cantor | finite:{...} | affine(<oracle>; a, b) | union(<o1>, <o2>, ...)
//! complement:<oracle>
//! cocountable-rationals:N            the co-rationals, with the first N
//!                                    Stern–Brocot rationals of [0,1] as the
//!                                    enumerated exceptional prefix
//! ```

use super::{
    affine_certificate, cantor_certificate, cantor_oracle, finite_set_certificate,
    CoCountableComplement, Complement, FinitePointSet, PorosityCertificate, SetOracle,
    UnionOracle,
};
use crate::dio::stern_brocot_unit;
use crate::geom::rational::{parse_rational, rat, Rational};
use crate::geom::RationalPoint;
use std::sync::Arc;

/// Split on `sep` at paren/brace depth zero.
pub fn split_top_level(s: &str, sep: char) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '{' | '[' => depth += 1,
            ')' | '}' | ']' => depth -= 1,
            _ => {}
        }
        if c == sep && depth == 0 {
            parts.push(cur.trim().to_string());
            cur = String::new();
        } else {
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() {
        parts.push(cur.trim().to_string());
    }
    parts
}

fn inner_of(s: &str, prefix: &str) -> Option<String> {
    let rest = s.strip_prefix(prefix)?;
    let rest = rest.strip_suffix(')')?;
    Some(rest.to_string())
}

pub fn parse_certificate(spec: &str) -> Result<PorosityCertificate, String> {
    let spec = spec.trim();
    if spec == "cantor" {
        return Ok(cantor_certificate());
    }
    if let Some(inner) = inner_of(spec, "affine(") {
        let parts = split_top_level(&inner, ';');
        if parts.len() != 2 {
            return Err(format!("affine needs (cert; a, b), got {spec:?}"));
        }
        let cert = parse_certificate(&parts[0])?;
        let nums = split_top_level(&parts[1], ',');
        if nums.len() != 2 {
            return Err(format!("affine needs two parameters a, b in {spec:?}"));
        }
        let a = parse_rational(&nums[0]).map_err(|e| e.to_string())?;
        let b = parse_rational(&nums[1]).map_err(|e| e.to_string())?;
        return Ok(affine_certificate(&cert, a, b));
    }
    if let Some(rest) = spec.strip_prefix("finite:") {
        let (points, opts) = parse_finite(rest)?;
        let mut beta = rat(1, 4);
        let mut r0 = rat(1, 4);
        for opt in opts {
            if let Some(v) = opt.strip_prefix("beta=") {
                beta = parse_rational(v).map_err(|e| e.to_string())?;
            } else if let Some(v) = opt.strip_prefix("r0=") {
                r0 = parse_rational(v).map_err(|e| e.to_string())?;
            } else {
                return Err(format!("unknown finite-set option {opt:?}"));
            }
        }
        return Ok(finite_set_certificate(points, beta, r0));
    }
    Err(format!("unknown certificate spec {spec:?}"))
}

fn parse_finite(rest: &str) -> Result<(Vec<Rational>, Vec<String>), String> {
    let mut parts = split_top_level(rest, ';');
    if parts.is_empty() {
        return Err("finite set needs points".into());
    }
    let set = parts.remove(0);
    let set = set
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| format!("finite set must be braced, got {set:?}"))?;
    let points = split_top_level(set, ',')
        .iter()
        .map(|s| parse_rational(s).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((points, parts))
}

pub fn parse_oracle(spec: &str) -> Result<Arc<dyn SetOracle>, String> {
    let spec = spec.trim();
    if spec == "cantor" {
        return Ok(cantor_oracle());
    }
    if let Some(rest) = spec.strip_prefix("complement:") {
        return Ok(Arc::new(Complement::new(parse_oracle(rest)?)));
    }
    if let Some(rest) = spec.strip_prefix("cocountable-rationals:") {
        let n: usize = rest
            .parse()
            .map_err(|_| format!("bad prefix length {rest:?}"))?;
        let points = stern_brocot_unit(n)
            .into_iter()
            .map(RationalPoint::scalar)
            .collect();
        return Ok(Arc::new(CoCountableComplement::new("co-rationals", points)));
    }
    if let Some(inner) = inner_of(spec, "union(") {
        let parts = split_top_level(&inner, ',');
        let oracles = parts
            .iter()
            .map(|p| parse_oracle(p))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Arc::new(UnionOracle::new(oracles)));
    }
    if let Some(inner) = inner_of(spec, "affine(") {
        let parts = split_top_level(&inner, ';');
        if parts.len() != 2 {
            return Err(format!("affine needs (oracle; a, b), got {spec:?}"));
        }
        let oracle = parse_oracle(&parts[0])?;
        let nums = split_top_level(&parts[1], ',');
        if nums.len() != 2 {
            return Err(format!("affine needs two parameters a, b in {spec:?}"));
        }
        let a = parse_rational(&nums[0]).map_err(|e| e.to_string())?;
        let b = parse_rational(&nums[1]).map_err(|e| e.to_string())?;
        return Ok(Arc::new(super::AffineImage::new(oracle, a, b)));
    }
    if let Some(rest) = spec.strip_prefix("finite:") {
        let (points, opts) = parse_finite(rest)?;
        if !opts.is_empty() {
            return Err("finite-set oracle takes no options".into());
        }
        return Ok(Arc::new(FinitePointSet::new_1d(points)));
    }
    Err(format!("unknown oracle spec {spec:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::porosity::Answer;

    #[test]
    fn parses_nested_specs() {
        parse_certificate("cantor").unwrap();
        parse_certificate("affine(cantor; 1, 2)").unwrap();
        parse_certificate("finite:{0,1};beta=1/4;r0=1/4").unwrap();
        parse_oracle("complement:union(cantor, affine(cantor; 1, 2))").unwrap();
        let t = parse_oracle("cocountable-rationals:10").unwrap();
        assert_eq!(t.exceptional_points().unwrap().len(), 10);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_certificate("kantor").is_err());
        assert!(parse_oracle("affine(cantor)").is_err());
        assert!(parse_certificate("finite:0,1").is_err());
    }

    #[test]
    fn parsed_complement_answers() {
        let t = parse_oracle("complement:cantor").unwrap();
        let b = crate::geom::FormalBall::new(
            RationalPoint::scalar(rat(1, 2)),
            rat(1, 10),
        )
        .unwrap();
        assert_eq!(t.ball_inside(&b), Answer::Yes);
    }
}
