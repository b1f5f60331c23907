//! Group decision pipeline: per-cell expert evaluations are merged into one
//! globular value each, and alternatives are ranked by their similarity to
//! the ideal alternative `⟨1, 0, 0; 1⟩` on every criterion.
//!
//! Two exponents are in play. Evaluations are validated, and similarities
//! computed, under `params.t()`. Centroids and radii use a separate averaging
//! exponent, 1 by default.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::aggregate::WeightVector;
use crate::construct::{centroid, radius, TsfvFamily};
use crate::error::{Error, Result};
use crate::metrics::{ideal_similarity, weighted_ideal_similarity};
use crate::ranking::TIE_TOLERANCE;
use crate::value::{validate_gtsfv, validate_tsfv, GtsfSet, GtsfValue, Params, TsfValue};

/// Experts' evaluations of every alternative on every criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    experts: Vec<String>,
    alternatives: Vec<String>,
    criteria: Vec<String>,
    // [expert][alternative][criterion]
    evaluations: Vec<Vec<Vec<TsfValue>>>,
    params: Params,
    averaging_exponent: u32,
    centroid_decimals: Option<u32>,
    criterion_weights: Option<WeightVector>,
}

fn check_labels(kind: &str, labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::InvalidProblem(format!("no {kind}")));
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::InvalidProblem(format!("duplicate {kind} label {l:?}")));
        }
    }
    Ok(())
}

fn cell(expert: &str, alternative: &str, criterion: &str) -> String {
    format!("expert {expert:?}, alternative {alternative:?}, criterion {criterion:?}")
}

impl DecisionProblem {
    pub const DEFAULT_AVERAGING_EXPONENT: u32 = 1;

    /// `evaluations[e][a][c]` is expert `e`'s view of alternative `a` on
    /// criterion `c`. Every evaluation must be valid under `params`.
    pub fn new(
        experts: Vec<String>,
        alternatives: Vec<String>,
        criteria: Vec<String>,
        evaluations: Vec<Vec<Vec<TsfValue>>>,
        params: Params,
    ) -> Result<Self> {
        check_labels("experts", &experts)?;
        check_labels("alternatives", &alternatives)?;
        check_labels("criteria", &criteria)?;
        if evaluations.len() != experts.len() {
            return Err(Error::InvalidProblem(format!(
                "{} experts but {} evaluation blocks",
                experts.len(),
                evaluations.len()
            )));
        }
        for (e, block) in experts.iter().zip(&evaluations) {
            if block.len() != alternatives.len() {
                return Err(Error::InvalidProblem(format!(
                    "expert {e:?} evaluates {} alternatives, expected {}",
                    block.len(),
                    alternatives.len()
                )));
            }
            for (a, row) in alternatives.iter().zip(block) {
                if row.len() != criteria.len() {
                    return Err(Error::InvalidProblem(format!(
                        "expert {e:?} rates alternative {a:?} on {} criteria, expected {}",
                        row.len(),
                        criteria.len()
                    )));
                }
                for (c, v) in criteria.iter().zip(row) {
                    validate_tsfv(v, &params).map_err(|err| err.at(cell(e, a, c)))?;
                }
            }
        }
        Ok(DecisionProblem {
            experts,
            alternatives,
            criteria,
            evaluations,
            params,
            averaging_exponent: Self::DEFAULT_AVERAGING_EXPONENT,
            centroid_decimals: None,
            criterion_weights: None,
        })
    }

    /// Exponent used for centroids and radii.
    pub fn with_averaging_exponent(mut self, exponent: u32) -> Result<Self> {
        self.params.reexponent(exponent)?;
        self.averaging_exponent = exponent;
        Ok(self)
    }

    /// Round each centroid grade to this many decimals before taking the
    /// radius and forming the matrix entry. Off by default.
    pub fn with_centroid_decimals(mut self, decimals: Option<u32>) -> Self {
        self.centroid_decimals = decimals;
        self
    }

    /// Per-criterion weights for the similarity mean. Off by default, which
    /// is the plain mean.
    pub fn with_criterion_weights(mut self, weights: Option<WeightVector>) -> Result<Self> {
        if let Some(w) = &weights {
            if w.len() != self.criteria.len() {
                return Err(Error::LengthMismatch {
                    values: self.criteria.len(),
                    weights: w.len(),
                });
            }
        }
        self.criterion_weights = weights;
        Ok(self)
    }

    pub fn experts(&self) -> &[String] {
        &self.experts
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn evaluations(&self) -> &[Vec<Vec<TsfValue>>] {
        &self.evaluations
    }

    pub fn evaluation(&self, expert: usize, alternative: usize, criterion: usize) -> TsfValue {
        self.evaluations[expert][alternative][criterion]
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn averaging_exponent(&self) -> u32 {
        self.averaging_exponent
    }

    pub fn centroid_decimals(&self) -> Option<u32> {
        self.centroid_decimals
    }

    pub fn criterion_weights(&self) -> Option<&WeightVector> {
        self.criterion_weights.as_ref()
    }
}

/// One globular value per (alternative, criterion).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct GtsfDecisionMatrix {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    rows: Vec<GtsfSet>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    entries: IndexMap<String, GtsfSet>,
}

impl TryFrom<RawMatrix> for GtsfDecisionMatrix {
    type Error = Error;
    fn try_from(raw: RawMatrix) -> Result<Self> {
        let mut rows = Vec::with_capacity(raw.alternatives.len());
        for a in &raw.alternatives {
            let row = raw
                .entries
                .get(a)
                .ok_or_else(|| Error::InvalidProblem(format!("no entries for alternative {a:?}")))?;
            rows.push(row.clone());
        }
        if raw.entries.len() != raw.alternatives.len() {
            return Err(Error::InvalidProblem("entries list unknown alternatives".into()));
        }
        GtsfDecisionMatrix::from_rows(raw.alternatives, raw.criteria, rows)
    }
}

impl From<GtsfDecisionMatrix> for RawMatrix {
    fn from(m: GtsfDecisionMatrix) -> Self {
        RawMatrix {
            entries: m.alternatives.iter().cloned().zip(m.rows).collect(),
            alternatives: m.alternatives,
            criteria: m.criteria,
        }
    }
}

impl GtsfDecisionMatrix {
    /// Every row must be labelled by exactly `criteria`, in that order.
    pub fn from_rows(alternatives: Vec<String>, criteria: Vec<String>, rows: Vec<GtsfSet>) -> Result<Self> {
        check_labels("alternatives", &alternatives)?;
        check_labels("criteria", &criteria)?;
        if rows.len() != alternatives.len() {
            return Err(Error::InvalidProblem(format!(
                "{} alternatives but {} rows",
                alternatives.len(),
                rows.len()
            )));
        }
        for (a, row) in alternatives.iter().zip(&rows) {
            if !row.labels().eq(criteria.iter().map(String::as_str)) {
                return Err(Error::UniverseMismatch(format!(
                    "row {a:?} is not labelled by the criteria in order"
                )));
            }
        }
        Ok(GtsfDecisionMatrix {
            alternatives,
            criteria,
            rows,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn row(&self, alternative: usize) -> &GtsfSet {
        &self.rows[alternative]
    }

    pub fn rows(&self) -> impl Iterator<Item = (&str, &GtsfSet)> {
        self.alternatives.iter().map(String::as_str).zip(&self.rows)
    }

    pub fn get(&self, alternative: usize, criterion: usize) -> GtsfValue {
        *self.rows[alternative]
            .get(&self.criteria[criterion])
            .expect("rows carry every criterion")
    }

    pub fn validate(&self, params: &Params) -> Result<()> {
        for (a, row) in self.rows() {
            row.validate(params).map_err(|e| e.at(format!("alternative {a:?}")))?;
        }
        Ok(())
    }
}

/// Similarity of each alternative to the ideal, best first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankingReport {
    pub similarities: IndexMap<String, f64>,
    pub order: Vec<String>,
    /// Groups of two or more alternatives whose similarities agree within
    /// [`TIE_TOLERANCE`]; inside a group the input order decides.
    pub ties: Vec<Vec<String>>,
}

impl RankingReport {
    pub fn best(&self) -> &str {
        &self.order[0]
    }
}

fn round_to(x: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (x * scale).round() / scale
}

/// Merges the experts' evaluations of each cell into a globular value.
pub fn build_gtsf_matrix(problem: &DecisionProblem) -> Result<GtsfDecisionMatrix> {
    let averaging = problem.params.reexponent(problem.averaging_exponent)?;
    let mut rows = Vec::with_capacity(problem.alternatives.len());
    for (ai, a) in problem.alternatives.iter().enumerate() {
        let mut row = GtsfSet::new();
        for (ci, c) in problem.criteria.iter().enumerate() {
            let location = || format!("alternative {a:?}, criterion {c:?}");
            let members = problem.evaluations.iter().map(|block| block[ai][ci]).collect();
            let family = TsfvFamily::new(members).map_err(|e| e.at(location()))?;
            let mut center = centroid(&family, &averaging);
            if let Some(d) = problem.centroid_decimals {
                center = TsfValue::new(round_to(center.phi, d), round_to(center.chi, d), round_to(center.psi, d));
            }
            let value = GtsfValue::new(center, radius(&family, &center, &averaging));
            validate_gtsfv(&value, &problem.params).map_err(|e| e.at(location()))?;
            row.insert(c.clone(), value)?;
        }
        rows.push(row);
    }
    GtsfDecisionMatrix::from_rows(problem.alternatives.clone(), problem.criteria.clone(), rows)
}

/// `n` copies of `⟨1, 0, 0; 1⟩`, labelled `c1..cn`.
pub fn ideal_alternative(criteria_count: usize) -> Result<GtsfSet> {
    if criteria_count == 0 {
        return Err(Error::EmptyUniverse);
    }
    GtsfSet::from_elements((1..=criteria_count).map(|q| (format!("c{q}"), GtsfValue::IDEAL)))
}

fn report(alternatives: &[String], similarities: Vec<f64>) -> RankingReport {
    let mut idx: Vec<usize> = (0..alternatives.len()).collect();
    idx.sort_by(|&i, &j| similarities[j].total_cmp(&similarities[i]).then(i.cmp(&j)));

    // group near-equal neighbours, then restore input order inside each group
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in idx {
        match groups.last_mut() {
            Some(g) if (similarities[g[0]] - similarities[i]).abs() <= TIE_TOLERANCE => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    let name = |i: &usize| alternatives[*i].clone();
    RankingReport {
        similarities: alternatives.iter().cloned().zip(similarities.iter().copied()).collect(),
        order: groups.iter().flatten().map(name).collect(),
        ties: groups
            .iter()
            .filter(|g| g.len() > 1)
            .map(|g| g.iter().map(name).collect())
            .collect(),
    }
}

/// Ranks alternatives by their mean per-criterion similarity to the ideal.
pub fn rank(matrix: &GtsfDecisionMatrix, params: &Params) -> Result<RankingReport> {
    let mut sims = Vec::with_capacity(matrix.alternatives.len());
    for (a, row) in matrix.rows() {
        sims.push(ideal_similarity(row, params).map_err(|e| e.at(format!("alternative {a:?}")))?);
    }
    Ok(report(&matrix.alternatives, sims))
}

/// Like [`rank`] with a weighted mean over criteria.
pub fn rank_weighted(matrix: &GtsfDecisionMatrix, weights: &WeightVector, params: &Params) -> Result<RankingReport> {
    let mut sims = Vec::with_capacity(matrix.alternatives.len());
    for (a, row) in matrix.rows() {
        sims.push(
            weighted_ideal_similarity(row, weights.as_slice(), params)
                .map_err(|e| e.at(format!("alternative {a:?}")))?,
        );
    }
    Ok(report(&matrix.alternatives, sims))
}

/// The whole pipeline; returns the intermediate matrix too.
pub fn solve_with_matrix(problem: &DecisionProblem) -> Result<(GtsfDecisionMatrix, RankingReport)> {
    let matrix = build_gtsf_matrix(problem)?;
    let report = match &problem.criterion_weights {
        Some(w) => rank_weighted(&matrix, w, &problem.params)?,
        None => rank(&matrix, &problem.params)?,
    };
    Ok((matrix, report))
}

pub fn solve(problem: &DecisionProblem) -> Result<RankingReport> {
    solve_with_matrix(problem).map(|(_, r)| r)
}
