//! Exact rational polynomials, monomial weights and term orders.

mod ideal;
mod monomial;
mod order;
mod point;
mod polynomial;

pub use ideal::HomogeneousIdeal;
pub use monomial::{count_monomials, monomials_of_degree, Monomial};

pub use order::{monomial_weight, OnePS, SortKey, TermOrder};
pub use point::ProjectivePoint;
pub use polynomial::{default_names, Polynomial};

/// Exact rational coefficient, always in lowest terms.
pub type Scalar = num_rational::BigRational;

/// Lifts an integer into [`Scalar`].
pub fn scalar(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}
