use super::rational::Rational;
use super::GeomError;
use num_traits::Zero;
use std::fmt;

/// A point of ℚ^d. Equality is coordinate-wise exact equality; the dimension
/// is fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    coords: Vec<Rational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self, GeomError> {
        if coords.is_empty() {
            return Err(GeomError::EmptyPoint);
        }
        Ok(Self { coords })
    }

    /// The origin of ℚ^d.
    pub fn origin(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        Self {
            coords: vec![Rational::zero(); dim],
        }
    }

    /// A one-dimensional point.
    pub fn scalar(x: Rational) -> Self {
        Self { coords: vec![x] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    /// The single coordinate of a 1-d point.
    pub fn as_scalar(&self) -> Option<&Rational> {
        if self.coords.len() == 1 {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub(crate) fn check_same_dim(&self, other: &Self) -> Result<(), GeomError> {
        if self.dim() != other.dim() {
            return Err(GeomError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    /// `self + t·e_axis`.
    pub fn translated(&self, axis: usize, t: &Rational) -> Self {
        let mut coords = self.coords.clone();
        coords[axis] = &coords[axis] + t;
        Self { coords }
    }

    /// Coordinate-wise `self + t·u`.
    pub fn translated_by(&self, u: &[Rational], t: &Rational) -> Self {
        assert_eq!(u.len(), self.dim());
        let coords = self
            .coords
            .iter()
            .zip(u)
            .map(|(c, ui)| c + &(ui * t))
            .collect();
        Self { coords }
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
