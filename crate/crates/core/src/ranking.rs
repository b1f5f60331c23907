//! Score and accuracy of a single value, and the two-stage comparison built on them.

use serde::Serialize;

use crate::value::{GtsfValue, Params};

/// Score ties closer than this fall through to accuracy.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// `½(φᵗ − χᵗ − ψᵗ + r(2σ − 1))`, in [−1, 1] for valid input.
///
/// At `σ = 0.5` the radius drops out.
pub fn score(a: &GtsfValue, params: &Params) -> f64 {
    let [phi, chi, psi] = a.center.powered(params);
    let s = 0.5 * (phi - chi - psi + a.radius * (2.0 * params.sigma() - 1.0));
    debug_assert!((-1.0 - 1e-9..=1.0 + 1e-9).contains(&s), "score {s} out of range for {a}");
    s
}

/// `φᵗ + χᵗ + ψᵗ`; stays in [0, 1] only because valid input satisfies the constraint.
pub fn accuracy(a: &GtsfValue, params: &Params) -> f64 {
    a.center.power_sum(params)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Less,
    Greater,
    Equivalent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DecidedBy {
    Score,
    Accuracy,
    Exhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ordering {
    pub relation: Relation,
    pub decided_by: DecidedBy,
}

impl Ordering {
    pub fn reverse(self) -> Self {
        let relation = match self.relation {
            Relation::Less => Relation::Greater,
            Relation::Greater => Relation::Less,
            Relation::Equivalent => Relation::Equivalent,
        };
        Ordering { relation, ..self }
    }

    pub fn to_std(self) -> std::cmp::Ordering {
        match self.relation {
            Relation::Less => std::cmp::Ordering::Less,
            Relation::Greater => std::cmp::Ordering::Greater,
            Relation::Equivalent => std::cmp::Ordering::Equal,
        }
    }
}

fn relation(x: f64, y: f64) -> Option<Relation> {
    if (x - y).abs() <= TIE_TOLERANCE {
        None
    } else if x > y {
        Some(Relation::Greater)
    } else {
        Some(Relation::Less)
    }
}

/// Orders by score, then by accuracy, else equivalent.
pub fn compare(a: &GtsfValue, b: &GtsfValue, params: &Params) -> Ordering {
    if let Some(relation) = relation(score(a, params), score(b, params)) {
        return Ordering {
            relation,
            decided_by: DecidedBy::Score,
        };
    }
    if let Some(relation) = relation(accuracy(a, params), accuracy(b, params)) {
        return Ordering {
            relation,
            decided_by: DecidedBy::Accuracy,
        };
    }
    Ordering {
        relation: Relation::Equivalent,
        decided_by: DecidedBy::Exhausted,
    }
}
