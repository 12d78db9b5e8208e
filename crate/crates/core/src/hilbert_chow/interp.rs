use crate::poly::{scalar, Scalar};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, t: i64) -> Scalar {
        let t = scalar(t);
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * &t + c)
    }

    /// The unique polynomial of degree `< samples.len()` through the samples.
    pub fn interpolate(samples: &[(i64, Scalar)]) -> UniPoly {
        let mut acc = vec![Scalar::zero(); samples.len()];
        for (i, (xi, yi)) in samples.iter().enumerate() {
            // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
            let mut basis = vec![Scalar::one()];
            let mut denom = Scalar::one();
            for (j, (xj, _)) in samples.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![Scalar::zero(); basis.len() + 1];
                for (k, c) in basis.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * scalar(*xj);
                }
                basis = next;
                denom *= scalar(xi - xj);
            }
            let f = yi / denom;
            for (k, c) in basis.iter().enumerate() {
                acc[k] += c * &f;
            }
        }
        UniPoly::new(acc)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}
