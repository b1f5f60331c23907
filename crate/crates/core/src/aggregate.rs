//! Weighted averaging and weighted geometric aggregation of globular values.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value::{validate_gtsfv, GtsfValue, Params, TsfValue};

const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// Strictly positive weights summing to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights given".into()));
        }
        if let Some((i, w)) = weights.iter().enumerate().find(|(_, w)| !w.is_finite() || **w <= 0.0) {
            return Err(Error::InvalidWeights(format!("weight {i} is {w}, expected > 0")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::InvalidWeights(format!("weights sum to {sum}, expected 1")));
        }
        Ok(WeightVector(weights))
    }

    /// `n` equal weights of `1/n`.
    pub fn uniform(n: usize) -> Result<Self> {
        WeightVector::new(vec![1.0 / n as f64; n])
    }

    /// Divides positive weights by their sum.
    pub fn normalized(raw: Vec<f64>) -> Result<Self> {
        let sum: f64 = raw.iter().sum();
        if sum.is_nan() || sum <= 0.0 {
            return Err(Error::InvalidWeights(format!("weights sum to {sum}")));
        }
        WeightVector::new(raw.into_iter().map(|w| w / sum).collect())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<f64>> for WeightVector {
    type Error = Error;
    fn try_from(v: Vec<f64>) -> Result<Self> {
        WeightVector::new(v)
    }
}

impl From<WeightVector> for Vec<f64> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

fn check(values: &[GtsfValue], w: &WeightVector, params: &Params) -> Result<()> {
    if values.len() != w.len() {
        return Err(Error::LengthMismatch {
            values: values.len(),
            weights: w.len(),
        });
    }
    for (i, v) in values.iter().enumerate() {
        validate_gtsfv(v, params).map_err(|e| e.at(format!("value {i}")))?;
    }
    Ok(())
}

fn weighted_product(values: &[GtsfValue], w: &WeightVector, grade: impl Fn(&GtsfValue) -> f64) -> f64 {
    values.iter().zip(w.as_slice()).map(|(v, wi)| grade(v).powf(*wi)).product()
}

/// `(1 − Π(1 − xᵢᵗ)^wᵢ)^(1/t)`
fn weighted_conorm(values: &[GtsfValue], w: &WeightVector, params: &Params, grade: impl Fn(&GtsfValue) -> f64) -> f64 {
    params.root(1.0 - weighted_product(values, w, |v| 1.0 - params.pow(grade(v))))
}

/// Weighted averaging: membership through the probabilistic sum of t-th
/// powers, the other grades and the radius as weighted geometric means.
///
/// A zero radius anywhere makes the aggregate radius zero.
pub fn gtsfwaa(values: &[GtsfValue], w: &WeightVector, params: &Params) -> Result<GtsfValue> {
    check(values, w, params)?;
    // all-equal input: return it untouched rather than through powf and roots
    if values.windows(2).all(|p| p[0] == p[1]) {
        return Ok(values[0]);
    }
    Ok(GtsfValue::new(
        TsfValue::new(
            weighted_conorm(values, w, params, GtsfValue::phi),
            weighted_product(values, w, GtsfValue::chi),
            weighted_product(values, w, GtsfValue::psi),
        ),
        weighted_product(values, w, |v| v.radius),
    ))
}

/// Weighted geometric aggregation, the membership/non-membership dual of [`gtsfwaa`].
pub fn gtsfwga(values: &[GtsfValue], w: &WeightVector, params: &Params) -> Result<GtsfValue> {
    check(values, w, params)?;
    if values.windows(2).all(|p| p[0] == p[1]) {
        return Ok(values[0]);
    }
    Ok(GtsfValue::new(
        TsfValue::new(
            weighted_product(values, w, GtsfValue::phi),
            weighted_product(values, w, GtsfValue::chi),
            weighted_conorm(values, w, params, GtsfValue::psi),
        ),
        weighted_product(values, w, |v| v.radius),
    ))
}
