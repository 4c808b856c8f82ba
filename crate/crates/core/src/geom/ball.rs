use super::point::RationalPoint;
use super::rational::Rational;
use super::GeomError;
use num_traits::Signed;
use std::fmt;

/// A formal ball: a (center, radius) pair treated symbolically. It carries no
/// topology by itself; the closed/open ball of the pair is only consulted by
/// oracles and containment predicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalBall {
    center: RationalPoint,
    radius: Rational,
}

impl FormalBall {
    pub fn new(center: RationalPoint, radius: Rational) -> Result<Self, GeomError> {
        if !radius.is_positive() {
            return Err(GeomError::NonPositiveRadius(radius));
        }
        Ok(Self { center, radius })
    }

    /// The unit ball B(0, 1) of ℚ^d, the default opening move.
    pub fn unit(dim: usize) -> Self {
        Self {
            center: RationalPoint::origin(dim),
            radius: Rational::from_integer(1.into()),
        }
    }

    pub fn center(&self) -> &RationalPoint {
        &self.center
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    pub fn into_parts(self) -> (RationalPoint, Rational) {
        (self.center, self.radius)
    }

    /// Concentric ball with a different radius.
    pub fn with_radius(&self, radius: Rational) -> Result<Self, GeomError> {
        Self::new(self.center.clone(), radius)
    }

    /// Endpoints `[c - r, c + r]` of a 1-d ball.
    pub fn interval(&self) -> Option<(Rational, Rational)> {
        let c = self.center.as_scalar()?;
        Some((c - &self.radius, c + &self.radius))
    }
}

impl fmt::Display for FormalBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({}, {})", self.center, self.radius)
    }
}
