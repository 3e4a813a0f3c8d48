use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::Scalar;
use crate::{Error, Result};

/// A point of ℙⁿ with exact rational coordinates.
///
/// Stored in canonical form: the first nonzero coordinate is one, so two
/// points are equal exactly when their coordinate vectors are proportional.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: Vec<Scalar>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or_else(|| Error::InvalidPoint(String::from("all coordinates are zero")))?;
        if coords.len() < 2 {
            return Err(Error::InvalidPoint(format!("need at least two coordinates, got {}", coords.len())));
        }
        let inv = lead.recip();
        Ok(ProjPoint { coords: coords.into_iter().map(|c| c * &inv).collect() })
    }

    pub fn from_integers(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| Scalar::from_integer(c.into())).collect())
    }

    pub fn parse(text: &str) -> Result<Self> {
        super::parse_point(text)
    }

    /// Coordinate vertex `e_i` of ℙⁿ.
    pub fn vertex(n: usize, i: usize) -> Self {
        let mut coords = alloc::vec![Scalar::zero(); n + 1];
        coords[i] = Scalar::one();
        ProjPoint { coords }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Dimension `n` of the ambient ℙⁿ.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Index of the first nonzero coordinate (which equals one).
    pub fn chart(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).expect("points are nonzero")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_is_proportionality() {
        let a = ProjPoint::from_integers(&[0, 2, 4]).unwrap();
        let b = ProjPoint::from_integers(&[0, -1, -2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.chart(), 1);
        assert_eq!(alloc::format!("{}", a), "[0,1,2]");
        assert!(ProjPoint::from_integers(&[0, 0, 0]).is_err());
    }
}
