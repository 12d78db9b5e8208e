use super::Scalar;
use crate::error::{Error, Result};
use num_traits::Zero;

/// A point of projective space with exact rational homogeneous
/// coordinates, scaled so the first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        let Some(lead) = coords.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::Precondition("zero coordinate vector".into()));
        };
        Ok(ProjectivePoint {
            coords: coords.into_iter().map(|c| c / &lead).collect(),
        })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&c| Scalar::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalises_and_rejects_zero() {
        let p = ProjectivePoint::from_ints(&[0, 2, 4]).unwrap();
        let q = ProjectivePoint::from_ints(&[0, -1, -2]).unwrap();
        assert_eq!(p, q);
        assert!(ProjectivePoint::from_ints(&[0, 0]).is_err());
    }
}
