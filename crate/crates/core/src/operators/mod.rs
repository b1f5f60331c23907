//! Set operations on universe-indexed sets and algebraic operations on single values.

mod algebra;
mod setops;

pub use algebra::{add, add_unchecked, mul, scalar_mul, scalar_pow, Scaled};
pub use setops::{complement, equal, intersection, subset, union};

use serde::{Deserialize, Serialize};

/// How two radii combine in a binary operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RadiusRule {
    Min,
    Max,
}

impl RadiusRule {
    pub fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            RadiusRule::Min => a.min(b),
            RadiusRule::Max => a.max(b),
        }
    }
}

impl std::str::FromStr for RadiusRule {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min" => Ok(RadiusRule::Min),
            "max" => Ok(RadiusRule::Max),
            other => Err(format!("unknown radius rule {other:?} (expected min or max)")),
        }
    }
}
