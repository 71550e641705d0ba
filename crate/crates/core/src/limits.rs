//! Size guards for the exponential scans.
//!
//! Defaults can be overridden (expert use only) through the `ORDSGP_LIMITS`
//! environment variable, a comma separated list of `key=value` pairs, e.g.
//! `ORDSGP_LIMITS=ideals=14,partitions=10`. Unknown keys are ignored.

use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest carrier for subset scans (`enumerate_ideals`, subsemigroup covers).
    pub ideals: usize,
    /// Largest carrier for set-partition enumeration (Bell number guard).
    pub partitions: usize,
    /// Largest base semigroup for the finite-subset power construction.
    pub power: usize,
    /// Largest order for semigroup and ordered-semigroup enumeration.
    pub enumerate: usize,
    /// Largest carrier for compatible-order enumeration.
    pub orders: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            ideals: 12,
            partitions: 9,
            power: 10,
            enumerate: 4,
            orders: 5,
        }
    }
}

impl Limits {
    pub const ENV: &'static str = "ORDSGP_LIMITS";

    /// Parses an override string on top of the defaults.
    pub fn parse(spec: &str) -> Limits {
        let mut limits = Limits::default();
        for item in spec.split(',') {
            let Some((key, value)) = item.split_once('=') else {
                continue;
            };
            let Ok(value) = value.trim().parse::<usize>() else {
                continue;
            };
            match key.trim() {
                "ideals" => limits.ideals = value,
                "partitions" => limits.partitions = value,
                "power" => limits.power = value.min(12),
                "enumerate" => limits.enumerate = value,
                "orders" => limits.orders = value,
                _ => {}
            }
        }
        limits
    }

    pub fn from_env() -> Limits {
        match std::env::var(Self::ENV) {
            Ok(spec) => Limits::parse(&spec),
            Err(_) => Limits::default(),
        }
    }
}

/// Process-wide limits, read from the environment once.
pub fn limits() -> &'static Limits {
    static LIMITS: OnceLock<Limits> = OnceLock::new();
    LIMITS.get_or_init(Limits::from_env)
}

pub(crate) fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::SizeLimit { what, size, limit })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides_known_keys() {
        let l = Limits::parse("ideals=14, partitions=10,bogus=3,power=x");
        assert_eq!(l.ideals, 14);
        assert_eq!(l.partitions, 10);
        assert_eq!(l.power, Limits::default().power);
    }

    #[test]
    fn guard_reports_size() {
        assert!(guard("ideals", 12, 12).is_ok());
        assert_eq!(
            guard("ideals", 13, 12),
            Err(Error::SizeLimit {
                what: "ideals",
                size: 13,
                limit: 12
            })
        );
    }
}
