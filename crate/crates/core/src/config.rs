//! Resource caps. Every enumeration checks one of these and returns
//! [`Error::CapExceeded`](crate::Error::CapExceeded) instead of truncating.

use std::sync::OnceLock;

pub const ELEMENT_CAP_ENV: &str = "GROWTHLAB_ELEMENT_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group whose elements may be listed explicitly.
    pub element_cap: u64,
    /// Largest group whose full subgroup lattice is computed.
    pub subgroup_cap: u64,
    /// Largest group for which a character table is computed.
    pub table_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            element_cap: 50_000,
            subgroup_cap: 20_000,
            table_cap: 200_000,
        }
    }
}

impl Limits {
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(cap) = std::env::var(ELEMENT_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
        {
            limits.element_cap = cap;
        }
        limits
    }
}

static LIMITS: OnceLock<Limits> = OnceLock::new();

/// Process-wide limits, read from the environment on first use.
pub fn limits() -> Limits {
    *LIMITS.get_or_init(Limits::from_env)
}
