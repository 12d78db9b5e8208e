//! Caps on internal degree searches.

use std::sync::OnceLock;

/// Environment variable overriding [`DEFAULT_MAX_DEGREE`].
pub const MAX_DEGREE_ENV: &str = "FLAGSTAB_MAX_DEGREE";

pub const DEFAULT_MAX_DEGREE: usize = 96;

/// Largest degree any stabilisation search will sample.
pub fn max_degree() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(MAX_DEGREE_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&v: &usize| v > 0)
            .unwrap_or(DEFAULT_MAX_DEGREE)
    })
}
