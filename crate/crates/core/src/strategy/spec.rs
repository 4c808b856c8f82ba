//! Strategy spec strings (grammar version 1), shared by the CLI and the
//! tournament runner:
//!
//! ```text
//! dummy
//! random:seed=7
//! porosity:<cert>[+<cert>...]        e.g. porosity:cantor+affine(cantor; 1, 2)
//! enum:sternbrocot:25                first 25 Stern–Brocot rationals of [0,1]
//! enum:{1/2, 1/3, ...}               explicit point list (d = 1)
//! wa:eps=1/2,d=1[,w=3]
//! bob-s:psi=q^-3,Q0=auto[,cap=2048]  (Q0 may also be a number; beta comes
//!                                     from the game config)
//! adversarial:mode=smallden|corner,seed=3
//! ```

use super::{
    alice_bmm_enumeration, alice_bms_porosity, alice_dummy, alice_wa, bob_random,
    AdversarialAlice, AdversarialMode, PsiFunction, Q0Mode, Strategy,
};
use crate::dio::stern_brocot_unit;
use crate::game::{GameConfig, GameKind};
use crate::geom::rational::parse_rational;
use crate::geom::RationalPoint;
use crate::porosity::registry::{parse_certificate, split_top_level};

pub const STRATEGY_SPEC_VERSION: u32 = 1;

pub fn build_strategy(spec: &str, config: &GameConfig) -> Result<Box<dyn Strategy>, String> {
    let spec = spec.trim();
    if spec == "dummy" {
        return Ok(Box::new(alice_dummy()));
    }
    if let Some(rest) = spec.strip_prefix("random:") {
        let seed = parse_kv(rest, "seed")?
            .parse::<u64>()
            .map_err(|_| format!("bad seed in {spec:?}"))?;
        return Ok(Box::new(bob_random(seed)));
    }
    if let Some(rest) = spec.strip_prefix("porosity:") {
        let certs = split_top_level(rest, '+')
            .iter()
            .map(|c| parse_certificate(c))
            .collect::<Result<Vec<_>, _>>()?;
        return alice_bms_porosity(certs)
            .map(|s| Box::new(s) as Box<dyn Strategy>)
            .map_err(|e| e.to_string());
    }
    if let Some(rest) = spec.strip_prefix("enum:") {
        let points: Vec<RationalPoint> = if let Some(n) = rest.strip_prefix("sternbrocot:") {
            let n: usize = n.parse().map_err(|_| format!("bad count in {spec:?}"))?;
            stern_brocot_unit(n)
                .into_iter()
                .map(RationalPoint::scalar)
                .collect()
        } else {
            let inner = rest
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(|| format!("enum wants sternbrocot:N or {{...}}, got {spec:?}"))?;
            split_top_level(inner, ',')
                .iter()
                .map(|s| parse_rational(s).map(RationalPoint::scalar))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?
        };
        return Ok(Box::new(alice_bmm_enumeration(points)));
    }
    if let Some(rest) = spec.strip_prefix("wa:") {
        let eps = parse_rational(&parse_kv(rest, "eps")?).map_err(|e| e.to_string())?;
        let d: usize = parse_kv(rest, "d")?
            .parse()
            .map_err(|_| format!("bad dimension in {spec:?}"))?;
        let w = match opt_kv(rest, "w") {
            Some(v) => Some(v.parse::<u32>().map_err(|_| format!("bad w in {spec:?}"))?),
            None => None,
        };
        return alice_wa(eps, d, w)
            .map(|s| Box::new(s) as Box<dyn Strategy>)
            .map_err(|e| e.to_string());
    }
    if let Some(rest) = spec.strip_prefix("bob-s:") {
        let psi = PsiFunction::parse(&parse_kv(rest, "psi")?, config.dimension)
            .map_err(|e| e.to_string())?;
        let q0 = match parse_kv(rest, "Q0")?.as_str() {
            "auto" => Q0Mode::Auto,
            v => Q0Mode::Fixed(
                v.parse::<u64>()
                    .map_err(|_| format!("Q0 must be auto or an integer in {spec:?}"))?,
            ),
        };
        let beta = match &config.kind {
            GameKind::Bms { beta } => beta.clone(),
            other => {
                return Err(format!(
                    "bob-s plays BMS; the configured game is {}",
                    other.name()
                ))
            }
        };
        let mut cfg = super::BobSConfig::new(psi, beta, q0);
        if let Some(cap) = opt_kv(rest, "cap") {
            cfg.q0_bit_cap = cap.parse().map_err(|_| format!("bad cap in {spec:?}"))?;
        }
        let built = super::RationalChaserBob::from_config(cfg, config.dimension)
            .map_err(|e| e.to_string())?;
        return Ok(Box::new(built));
    }
    if let Some(rest) = spec.strip_prefix("adversarial:") {
        let mode = match parse_kv(rest, "mode")?.as_str() {
            "smallden" => AdversarialMode::SmallDenominator,
            "corner" => AdversarialMode::Corner,
            other => return Err(format!("unknown adversarial mode {other:?}")),
        };
        let seed = parse_kv(rest, "seed")?
            .parse::<u64>()
            .map_err(|_| format!("bad seed in {spec:?}"))?;
        return Ok(Box::new(AdversarialAlice::new(mode, seed)));
    }
    Err(format!("unknown strategy spec {spec:?}"))
}

fn parse_kv(s: &str, key: &str) -> Result<String, String> {
    opt_kv(s, key).ok_or_else(|| format!("missing {key}= in {s:?}"))
}

fn opt_kv(s: &str, key: &str) -> Option<String> {
    split_top_level(s, ',').into_iter().find_map(|part| {
        part.strip_prefix(key)
            .and_then(|r| r.strip_prefix('='))
            .map(|v| v.trim().to_string())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational::rat;

    fn bms(beta: (i64, i64)) -> GameConfig {
        GameConfig::new(
            GameKind::Bms {
                beta: rat(beta.0, beta.1),
            },
            1,
        )
        .unwrap()
    }

    #[test]
    fn builds_all_kinds() {
        let cfg = bms((1, 5));
        build_strategy("dummy", &cfg).unwrap();
        build_strategy("random:seed=7", &cfg).unwrap();
        build_strategy("porosity:cantor", &cfg).unwrap();
        build_strategy("porosity:cantor+affine(cantor; 1, 2)", &cfg).unwrap();
        build_strategy("wa:eps=1/2,d=1", &bms((1, 36))).unwrap();
        build_strategy("wa:eps=1/2,d=1,w=3", &bms((1, 36))).unwrap();
        build_strategy("bob-s:psi=q^-3,Q0=auto", &bms((1, 4))).unwrap();
        build_strategy("adversarial:mode=smallden,seed=3", &cfg).unwrap();
        let bmm = GameConfig::new(GameKind::Bmm { beta: rat(1, 3) }, 1).unwrap();
        build_strategy("enum:sternbrocot:25", &bmm).unwrap();
        build_strategy("enum:{1/2, 2/3}", &bmm).unwrap();
    }

    #[test]
    fn helpful_errors() {
        let cfg = bms((1, 5));
        assert!(build_strategy("telepathy", &cfg).is_err());
        let err = build_strategy("wa:d=1", &cfg).err().unwrap();
        assert!(err.contains("eps"));
        assert!(build_strategy("bob-s:psi=q^-3,Q0=auto", &GameConfig::new(GameKind::BanachMazur, 1).unwrap())
            .is_err());
    }
}
