//! Stock set oracles: finite point sets, complements, unions, affine images
//! and co-countable sets with an enumerated exceptional prefix.

use super::{Answer, SetOracle};
use crate::geom::rational::Rational;
use crate::geom::{ball_contains_point, FormalBall, RationalPoint};
use num_traits::{Signed, Zero};
use std::sync::Arc;

/// A finite set of points; every query is exact.
#[derive(Debug, Clone)]
pub struct FinitePointSet {
    points: Vec<RationalPoint>,
    dim: usize,
}

impl FinitePointSet {
    pub fn new(points: Vec<RationalPoint>) -> Self {
        let dim = points.first().map(|p| p.dim()).unwrap_or(1);
        Self { points, dim }
    }

    pub fn new_1d(xs: Vec<Rational>) -> Self {
        Self::new(xs.into_iter().map(RationalPoint::scalar).collect())
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }
}

impl SetOracle for FinitePointSet {
    fn tag(&self) -> String {
        format!("finite[{}]", self.points.len())
    }

    fn dimension(&self) -> usize {
        self.dim
    }

    fn point_member(&self, p: &RationalPoint) -> Answer {
        Answer::from_bool(self.points.contains(p))
    }

    fn ball_disjoint(&self, b: &FormalBall, closed: bool) -> Answer {
        for p in &self.points {
            match ball_contains_point(b, p, closed) {
                Ok(true) => return Answer::No,
                Ok(false) => {}
                Err(_) => return Answer::Unknown,
            }
        }
        Answer::Yes
    }

    fn ball_inside(&self, _b: &FormalBall) -> Answer {
        Answer::No // a finite set has empty interior
    }
}

/// The complement of another oracle's set, by predicate duality:
/// B ∩ (X∖E) = ∅ ⟺ B ⊆ E, and B ⊆ X∖E ⟺ B ∩ E = ∅.
pub struct Complement {
    inner: Arc<dyn SetOracle>,
}

impl Complement {
    pub fn new(inner: Arc<dyn SetOracle>) -> Self {
        Self { inner }
    }
}

impl SetOracle for Complement {
    fn tag(&self) -> String {
        format!("complement({})", self.inner.tag())
    }

    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn point_member(&self, p: &RationalPoint) -> Answer {
        match self.inner.point_member(p) {
            Answer::Yes => Answer::No,
            Answer::No => Answer::Yes,
            Answer::Unknown => Answer::Unknown,
        }
    }

    fn ball_disjoint(&self, b: &FormalBall, _closed: bool) -> Answer {
        self.inner.ball_inside(b)
    }

    fn ball_inside(&self, b: &FormalBall) -> Answer {
        self.inner.ball_disjoint(b, true)
    }
}

/// Union of finitely many sets.
pub struct UnionOracle {
    parts: Vec<Arc<dyn SetOracle>>,
}

impl UnionOracle {
    pub fn new(parts: Vec<Arc<dyn SetOracle>>) -> Self {
        assert!(!parts.is_empty());
        Self { parts }
    }
}

impl SetOracle for UnionOracle {
    fn tag(&self) -> String {
        let names: Vec<String> = self.parts.iter().map(|p| p.tag()).collect();
        format!("union({})", names.join(", "))
    }

    fn dimension(&self) -> usize {
        self.parts[0].dimension()
    }

    fn point_member(&self, p: &RationalPoint) -> Answer {
        let mut unknown = false;
        for part in &self.parts {
            match part.point_member(p) {
                Answer::Yes => return Answer::Yes,
                Answer::No => {}
                Answer::Unknown => unknown = true,
            }
        }
        if unknown {
            Answer::Unknown
        } else {
            Answer::No
        }
    }

    fn ball_disjoint(&self, b: &FormalBall, closed: bool) -> Answer {
        let mut unknown = false;
        for part in &self.parts {
            match part.ball_disjoint(b, closed) {
                Answer::No => return Answer::No,
                Answer::Yes => {}
                Answer::Unknown => unknown = true,
            }
        }
        if unknown {
            Answer::Unknown
        } else {
            Answer::Yes
        }
    }

    fn ball_inside(&self, b: &FormalBall) -> Answer {
        // sound but incomplete: inside any single part suffices
        let mut unknown = false;
        for part in &self.parts {
            match part.ball_inside(b) {
                Answer::Yes => return Answer::Yes,
                Answer::No => {}
                Answer::Unknown => unknown = true,
            }
        }
        if unknown {
            Answer::Unknown
        } else {
            Answer::No
        }
    }
}

/// The affine image a·E + b of a 1-d set E (a ≠ 0).
pub struct AffineImage {
    inner: Arc<dyn SetOracle>,
    a: Rational,
    b: Rational,
}

impl AffineImage {
    pub fn new(inner: Arc<dyn SetOracle>, a: Rational, b: Rational) -> Self {
        assert_eq!(inner.dimension(), 1, "affine images are 1-dimensional");
        assert!(!a.is_zero());
        Self { inner, a, b }
    }

    fn preimage_ball(&self, ball: &FormalBall) -> Option<FormalBall> {
        let c = ball.center().as_scalar()?;
        let center = (c - &self.b) / &self.a;
        let radius = ball.radius() / self.a.abs();
        FormalBall::new(RationalPoint::scalar(center), radius).ok()
    }
}

impl SetOracle for AffineImage {
    fn tag(&self) -> String {
        format!("affine({}; {}, {})", self.inner.tag(), self.a, self.b)
    }

    fn dimension(&self) -> usize {
        1
    }

    fn point_member(&self, p: &RationalPoint) -> Answer {
        match p.as_scalar() {
            Some(x) => self
                .inner
                .point_member(&RationalPoint::scalar((x - &self.b) / &self.a)),
            None => Answer::Unknown,
        }
    }

    fn ball_disjoint(&self, b: &FormalBall, closed: bool) -> Answer {
        match self.preimage_ball(b) {
            Some(pre) => self.inner.ball_disjoint(&pre, closed),
            None => Answer::Unknown,
        }
    }

    fn ball_inside(&self, b: &FormalBall) -> Answer {
        match self.preimage_ball(b) {
            Some(pre) => self.inner.ball_inside(&pre),
            None => Answer::Unknown,
        }
    }
}

/// A co-countable target X ∖ {e₁, e₂, ...} known through an enumerated
/// prefix. Sound: it answers No on enumerated points and refuses to certify
/// anything the prefix cannot establish.
pub struct CoCountableComplement {
    excluded: Vec<RationalPoint>,
    dim: usize,
    name: String,
}

impl CoCountableComplement {
    pub fn new(name: impl Into<String>, excluded: Vec<RationalPoint>) -> Self {
        let dim = excluded.first().map(|p| p.dim()).unwrap_or(1);
        Self {
            excluded,
            dim,
            name: name.into(),
        }
    }
}

impl SetOracle for CoCountableComplement {
    fn tag(&self) -> String {
        format!("{}[prefix {}]", self.name, self.excluded.len())
    }

    fn dimension(&self) -> usize {
        self.dim
    }

    fn point_member(&self, p: &RationalPoint) -> Answer {
        if self.excluded.contains(p) {
            Answer::No
        } else {
            Answer::Unknown // the unenumerated tail could contain p
        }
    }

    fn ball_disjoint(&self, _b: &FormalBall, _closed: bool) -> Answer {
        // a positive-radius ball is uncountable, the complement countable
        Answer::No
    }

    fn ball_inside(&self, b: &FormalBall) -> Answer {
        for e in &self.excluded {
            if ball_contains_point(b, e, true).unwrap_or(false) {
                return Answer::No;
            }
        }
        Answer::Unknown // tail points may still intrude
    }

    fn exceptional_points(&self) -> Option<Vec<RationalPoint>> {
        Some(self.excluded.clone())
    }
}
