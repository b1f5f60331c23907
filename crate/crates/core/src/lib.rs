//! Globular T-spherical fuzzy values.
//!
//! A value is a T-spherical triple (membership, indeterminacy,
//! non-membership) whose t-th powers sum to at most 1, plus a radius that
//! records how widely the evaluations behind it were spread.
//!
//! ```
//! use gtsf::{make_gtsfv, Params, TsfValue, TsfvFamily};
//!
//! let family = TsfvFamily::new(vec![
//!     TsfValue::new(0.6, 0.3, 0.1),
//!     TsfValue::new(0.5, 0.5, 0.3),
//! ])?;
//! let g = make_gtsfv(&family, &Params::with_t(2)?);
//! assert!(g.radius > 0.0);
//! # Ok::<(), gtsf::Error>(())
//! ```

pub mod aggregate;
pub mod construct;
mod error;
pub mod io;
pub mod mcgdm;
pub mod metrics;
pub mod operators;
pub mod ranking;
mod value;

pub use aggregate::{gtsfwaa, gtsfwga, WeightVector};
pub use construct::{centroid, make_gtsfv, radius, TsfvFamily};
pub use mcgdm::{
    build_gtsf_matrix, ideal_alternative, rank, solve, DecisionProblem, GtsfDecisionMatrix, RankingReport,
};
pub use error::{Error, Grade, Result};
pub use value::{
    validate_gtsfv, validate_tsfv, GtsfSet, GtsfValue, Params, TsfValue, CONSTRAINT_TOLERANCE,
    EQUALITY_TOLERANCE,
};
