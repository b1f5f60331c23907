use thiserror::Error;

/// Which of the three grades a range error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grade {
    Membership,
    Indeterminacy,
    NonMembership,
}

impl std::fmt::Display for Grade {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Grade::Membership => "membership",
            Grade::Indeterminacy => "indeterminacy",
            Grade::NonMembership => "non-membership",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{grade} grade {value} is outside [0, 1] (power sum {power_sum})")]
    ComponentOutOfRange {
        grade: Grade,
        value: f64,
        power_sum: f64,
    },
    #[error("power sum {power_sum} exceeds 1 at t = {t} for ({phi}, {chi}, {psi})")]
    ConstraintViolated {
        phi: f64,
        chi: f64,
        psi: f64,
        t: u32,
        power_sum: f64,
    },
    #[error("radius {0} is outside [0, 1]")]
    RadiusOutOfRange(f64),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("family of T-spherical values is empty")]
    EmptyFamily,
    #[error("universes differ: {0}")]
    UniverseMismatch(String),
    #[error("universe is empty")]
    EmptyUniverse,
    #[error("value has an all-zero center; cosine similarity is undefined")]
    DegenerateValue,
    #[error("{values} values but {weights} weights")]
    LengthMismatch { values: usize, weights: usize },
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("invalid decision problem: {0}")]
    InvalidProblem(String),
    #[error("at {location}: {source}")]
    At {
        location: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at(self, location: impl Into<String>) -> Self {
        Error::At {
            location: location.into(),
            source: Box::new(self),
        }
    }

    /// Strips any location context.
    pub fn root(&self) -> &Error {
        match self {
            Error::At { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
