//! Turning a family of T-spherical evaluations into one globular value:
//! the t-power mean of the family is the sphere's center, and the radius is
//! the largest distance (in t-th power coordinates) from that center to any
//! member, capped at 1.

use crate::error::{Error, Grade, Result};
use crate::value::{validate_tsfv, GtsfValue, Params, TsfValue};

/// A non-empty list of evaluations of the same thing.
#[derive(Debug, Clone, PartialEq)]
pub struct TsfvFamily {
    members: Vec<TsfValue>,
}

impl TsfvFamily {
    /// Checks only that the family is non-empty and every grade lies in [0, 1].
    pub fn new(members: Vec<TsfValue>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for m in &members {
            for (grade, value) in [
                (Grade::Membership, m.phi),
                (Grade::Indeterminacy, m.chi),
                (Grade::NonMembership, m.psi),
            ] {
                if !(0.0..=1.0).contains(&value) {
                    return Err(Error::ComponentOutOfRange {
                        grade,
                        value,
                        power_sum: f64::NAN,
                    });
                }
            }
        }
        Ok(TsfvFamily { members })
    }

    /// Like [`TsfvFamily::new`], and every member must satisfy the power-sum
    /// constraint under `params`.
    pub fn validated(members: Vec<TsfValue>, params: &Params) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for (i, m) in members.iter().enumerate() {
            validate_tsfv(m, params).map_err(|e| e.at(format!("member {i}")))?;
        }
        Ok(TsfvFamily { members })
    }

    pub fn members(&self) -> &[TsfValue] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl TryFrom<Vec<TsfValue>> for TsfvFamily {
    type Error = Error;
    fn try_from(members: Vec<TsfValue>) -> Result<Self> {
        TsfvFamily::new(members)
    }
}

// Summed in sorted order so the result does not depend on member order.
fn order_free_mean(mut xs: Vec<f64>) -> f64 {
    let n = xs.len() as f64;
    xs.sort_by(f64::total_cmp);
    xs.iter().sum::<f64>() / n
}

pub fn centroid(family: &TsfvFamily, params: &Params) -> TsfValue {
    // x^(1/t) after x^t is not an exact round trip in f64
    if let [only] = family.members.as_slice() {
        return *only;
    }
    let mean_power = |grade: fn(&TsfValue) -> f64| {
        let powered = family.members.iter().map(|m| params.pow(grade(m))).collect();
        params.root(order_free_mean(powered))
    };
    TsfValue::new(mean_power(|m| m.phi), mean_power(|m| m.chi), mean_power(|m| m.psi))
}

/// Largest t-th-power Euclidean distance from `center` to a member, capped at 1.
pub fn radius(family: &TsfvFamily, center: &TsfValue, params: &Params) -> f64 {
    let c = center.powered(params);
    family
        .members
        .iter()
        .map(|m| {
            let p = m.powered(params);
            ((c[0] - p[0]).powi(2) + (c[1] - p[1]).powi(2) + (c[2] - p[2]).powi(2)).sqrt()
        })
        .fold(0.0, f64::max)
        .min(1.0)
}

pub fn make_gtsfv(family: &TsfvFamily, params: &Params) -> GtsfValue {
    let center = centroid(family, params);
    GtsfValue::new(center, radius(family, &center, params))
}
