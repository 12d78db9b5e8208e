//! Exact computations for one-parameter degenerations of projective
//! subschemes: Gröbner bases, flat limits, Hilbert functions, Chow weights,
//! and the staged stability checks for hyperplanar flags.
//!
//! All arithmetic is over the rationals and exact. Variables are indexed
//! `0..nvars`; a projective subscheme of `P(V)` is given by a homogeneous
//! ideal in `dim V` variables.

pub mod error;
pub mod flags;
pub mod geometry;
pub mod groebner;
pub mod hilbert_chow;
pub mod limits;
pub mod linalg;
pub mod oracle;
pub mod parabolic;
pub mod poly;

pub use error::{Error, Result};
