//! Document formats and report rendering.
//!
//! Problem documents are JSON with a strict schema:
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "params": { "t": 3, "sigma": 0.5, "averaging_t": 1 },
//!   "experts": ["e1"], "alternatives": ["v1", "v2"], "criteria": ["f1"],
//!   "evaluations": { "e1": { "v1": { "f1": [0.7, 0.2, 0.3] },
//!                            "v2": { "f1": [0.5, 0.4, 0.4] } } }
//! }
//! ```
//!
//! Evaluations can also come from CSV with the header
//! `expert,alternative,criterion,phi,chi,psi`, one row per cell.

use std::collections::HashSet;
use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::aggregate::WeightVector;
use crate::construct::TsfvFamily;
use crate::mcgdm::{DecisionProblem, GtsfDecisionMatrix, RankingReport};
use crate::value::{GtsfSet, GtsfValue, Params, TsfValue};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("validation error: {0}")]
    Validation(#[from] crate::Error),
}

impl IoError {
    fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        IoError::Schema {
            path: path.into(),
            message: message.into(),
        }
    }

    /// 2 for unreadable or malformed input, 3 for input that parses but
    /// breaks a value constraint.
    pub fn exit_code(&self) -> i32 {
        match self {
            IoError::Parse(_) | IoError::Schema { .. } => 2,
            IoError::Validation(_) => 3,
        }
    }
}

pub type IoResult<T> = std::result::Result<T, IoError>;

fn from_json<T: DeserializeOwned>(text: &str) -> IoResult<T> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        match inner.classify() {
            serde_json::error::Category::Data => IoError::schema(path, inner.to_string()),
            _ => IoError::Parse(inner.to_string()),
        }
    })?;
    de.end().map_err(|e| IoError::Parse(e.to_string()))?;
    Ok(value)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("document types always serialize");
    s.push('\n');
    s
}

fn check_version(v: &str) -> IoResult<()> {
    if v != SCHEMA_VERSION {
        return Err(IoError::schema(
            "schema_version",
            format!("unsupported version {v:?}, expected {SCHEMA_VERSION:?}"),
        ));
    }
    Ok(())
}

fn default_t() -> u32 {
    Params::DEFAULT_T
}

fn default_sigma() -> f64 {
    Params::DEFAULT_SIGMA
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocumentParams {
    #[serde(default = "default_t")]
    pub t: u32,
    #[serde(default = "default_sigma")]
    pub sigma: f64,
    /// Exponent for centroids and radii; problem documents default it to 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub averaging_t: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centroid_decimals: Option<u32>,
}

impl DocumentParams {
    pub fn params(&self) -> IoResult<Params> {
        Params::new(self.t, self.sigma).map_err(|e| IoError::schema("params", e.to_string()))
    }
}

impl Default for DocumentParams {
    fn default() -> Self {
        DocumentParams {
            t: default_t(),
            sigma: default_sigma(),
            averaging_t: None,
            centroid_decimals: None,
        }
    }
}

type Evaluations = IndexMap<String, IndexMap<String, IndexMap<String, [f64; 3]>>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub schema_version: String,
    #[serde(default)]
    pub params: DocumentParams,
    pub experts: Vec<String>,
    pub alternatives: Vec<String>,
    pub criteria: Vec<String>,
    pub evaluations: Evaluations,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub criterion_weights: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn check_label_list(path: &str, labels: &[String]) -> IoResult<()> {
    if labels.is_empty() {
        return Err(IoError::schema(path, "must not be empty"));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(IoError::schema(path, format!("duplicate label {l:?}")));
        }
    }
    Ok(())
}

/// Looks up every expected key in order and rejects keys that are not expected.
fn keyed<'a, V>(map: &'a IndexMap<String, V>, expected: &[String], path: &str, kind: &str) -> IoResult<Vec<&'a V>> {
    if let Some(extra) = map.keys().find(|k| !expected.contains(k)) {
        return Err(IoError::schema(format!("{path}.{extra}"), format!("unknown {kind}")));
    }
    expected
        .iter()
        .map(|k| {
            map.get(k)
                .ok_or_else(|| IoError::schema(format!("{path}.{k}"), format!("missing {kind}")))
        })
        .collect()
}

impl ProblemDocument {
    pub fn into_problem(self) -> IoResult<DecisionProblem> {
        check_version(&self.schema_version)?;
        check_label_list("experts", &self.experts)?;
        check_label_list("alternatives", &self.alternatives)?;
        check_label_list("criteria", &self.criteria)?;
        let params = self.params.params()?;
        let mut tensor = Vec::with_capacity(self.experts.len());
        for (e, block) in self
            .experts
            .iter()
            .zip(keyed(&self.evaluations, &self.experts, "evaluations", "expert")?)
        {
            let path = format!("evaluations.{e}");
            let mut rows = Vec::with_capacity(self.alternatives.len());
            for (a, row) in self
                .alternatives
                .iter()
                .zip(keyed(block, &self.alternatives, &path, "alternative")?)
            {
                let cells = keyed(row, &self.criteria, &format!("{path}.{a}"), "criterion")?;
                rows.push(cells.into_iter().map(|g| TsfValue::new(g[0], g[1], g[2])).collect());
            }
            tensor.push(rows);
        }
        let averaging = self.params.averaging_t.unwrap_or(DecisionProblem::DEFAULT_AVERAGING_EXPONENT);
        if averaging == 0 {
            return Err(IoError::schema("params.averaging_t", "must be a positive integer"));
        }
        let weights = self.criterion_weights.map(WeightVector::new).transpose()?;
        Ok(
            DecisionProblem::new(self.experts, self.alternatives, self.criteria, tensor, params)?
                .with_averaging_exponent(averaging)?
                .with_centroid_decimals(self.params.centroid_decimals)
                .with_criterion_weights(weights)?,
        )
    }

    pub fn from_problem(problem: &DecisionProblem) -> Self {
        let evaluations = problem
            .experts()
            .iter()
            .zip(problem.evaluations())
            .map(|(e, block)| {
                let rows = problem
                    .alternatives()
                    .iter()
                    .zip(block)
                    .map(|(a, row)| {
                        let cells = problem
                            .criteria()
                            .iter()
                            .zip(row)
                            .map(|(c, v)| (c.clone(), [v.phi, v.chi, v.psi]))
                            .collect();
                        (a.clone(), cells)
                    })
                    .collect();
                (e.clone(), rows)
            })
            .collect();
        ProblemDocument {
            schema_version: SCHEMA_VERSION.into(),
            params: DocumentParams {
                t: problem.params().t(),
                sigma: problem.params().sigma(),
                averaging_t: Some(problem.averaging_exponent()),
                centroid_decimals: problem.centroid_decimals(),
            },
            experts: problem.experts().to_vec(),
            alternatives: problem.alternatives().to_vec(),
            criteria: problem.criteria().to_vec(),
            evaluations,
            criterion_weights: problem.criterion_weights().map(|w| w.as_slice().to_vec()),
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

pub fn parse_problem_document(text: &str) -> IoResult<ProblemDocument> {
    from_json(text)
}

/// Parses and validates a problem document. Constraint failures name the
/// offending (expert, alternative, criterion) cell.
pub fn parse_problem(text: &str) -> IoResult<DecisionProblem> {
    parse_problem_document(text)?.into_problem()
}

pub fn emit_problem(problem: &DecisionProblem) -> String {
    ProblemDocument::from_problem(problem).to_json()
}

#[derive(Debug, Deserialize)]
struct CsvRow {
    expert: String,
    alternative: String,
    criterion: String,
    phi: f64,
    chi: f64,
    psi: f64,
}

const CSV_HEADER: [&str; 6] = ["expert", "alternative", "criterion", "phi", "chi", "psi"];

/// Reads a flat evaluation tensor. Labels are ordered by first appearance;
/// every (expert, alternative, criterion) combination must occur exactly once.
pub fn parse_csv_problem(text: &str, params: Params) -> IoResult<DecisionProblem> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| IoError::Parse(e.to_string()))?;
    if !header.iter().eq(CSV_HEADER) {
        return Err(IoError::schema(
            "header",
            format!("expected {}, found {}", CSV_HEADER.join(","), header.iter().collect::<Vec<_>>().join(",")),
        ));
    }
    let mut experts: Vec<String> = Vec::new();
    let mut alternatives: Vec<String> = Vec::new();
    let mut criteria: Vec<String> = Vec::new();
    let mut cells: IndexMap<(String, String, String), TsfValue> = IndexMap::new();
    let note = |labels: &mut Vec<String>, l: &str| {
        if !labels.iter().any(|x| x == l) {
            labels.push(l.to_owned());
        }
    };
    for (i, record) in reader.deserialize::<CsvRow>().enumerate() {
        let line = i + 2;
        let row = record.map_err(|e| IoError::Parse(format!("line {line}: {e}")))?;
        note(&mut experts, &row.expert);
        note(&mut alternatives, &row.alternative);
        note(&mut criteria, &row.criterion);
        let key = (row.expert, row.alternative, row.criterion);
        if cells.contains_key(&key) {
            return Err(IoError::schema(format!("line {line}"), "repeated cell"));
        }
        cells.insert(key, TsfValue::new(row.phi, row.chi, row.psi));
    }
    if cells.is_empty() {
        return Err(IoError::schema("rows", "no evaluations"));
    }
    let mut tensor = Vec::new();
    for e in &experts {
        let mut rows = Vec::new();
        for a in &alternatives {
            let mut row = Vec::new();
            for c in &criteria {
                let v = cells.get(&(e.clone(), a.clone(), c.clone())).ok_or_else(|| {
                    IoError::schema("rows", format!("no evaluation for expert {e:?}, alternative {a:?}, criterion {c:?}"))
                })?;
                row.push(*v);
            }
            rows.push(row);
        }
        tensor.push(rows);
    }
    Ok(DecisionProblem::new(experts, alternatives, criteria, tensor, params)?)
}

/// Named sets over a shared universe; entries are `[phi, chi, psi, radius]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetsDocument {
    pub schema_version: String,
    #[serde(default)]
    pub params: DocumentParams,
    pub sets: IndexMap<String, IndexMap<String, [f64; 4]>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SetsDocument {
    /// Every set validated under the document's params.
    pub fn sets(&self) -> IoResult<Vec<(String, GtsfSet)>> {
        check_version(&self.schema_version)?;
        let params = self.params.params()?;
        let mut out = Vec::new();
        for (name, elements) in &self.sets {
            if elements.is_empty() {
                return Err(IoError::schema(format!("sets.{name}"), "must not be empty"));
            }
            let set = GtsfSet::from_elements(
                elements
                    .iter()
                    .map(|(x, v)| (x.clone(), GtsfValue::from_parts(v[0], v[1], v[2], v[3]))),
            )?;
            set.validate(&params).map_err(|e| e.at(format!("set {name:?}")))?;
            out.push((name.clone(), set));
        }
        Ok(out)
    }

    /// The two sets of a document that holds exactly two.
    pub fn pair(&self) -> IoResult<((String, GtsfSet), (String, GtsfSet))> {
        let mut sets = self.sets()?;
        if sets.len() != 2 {
            return Err(IoError::schema("sets", format!("expected exactly 2 sets, found {}", sets.len())));
        }
        let b = sets.pop().expect("two sets");
        let a = sets.pop().expect("two sets");
        Ok((a, b))
    }
}

pub fn parse_sets(text: &str) -> IoResult<SetsDocument> {
    from_json(text)
}

/// Named families of evaluations; entries are `[phi, chi, psi]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamiliesDocument {
    pub schema_version: String,
    #[serde(default)]
    pub params: DocumentParams,
    pub families: IndexMap<String, Vec<[f64; 3]>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl FamiliesDocument {
    /// Range-checked families; the power-sum constraint is left to the caller.
    pub fn families(&self) -> IoResult<Vec<(String, TsfvFamily)>> {
        check_version(&self.schema_version)?;
        self.families
            .iter()
            .map(|(name, members)| {
                let members = members.iter().map(|m| TsfValue::new(m[0], m[1], m[2])).collect();
                let family = TsfvFamily::new(members).map_err(|e| e.at(format!("family {name:?}")))?;
                Ok((name.clone(), family))
            })
            .collect()
    }
}

pub fn parse_families(text: &str) -> IoResult<FamiliesDocument> {
    from_json(text)
}

/// Parses `phi,chi,psi;r`. Whitespace is ignored.
pub fn parse_value(text: &str) -> IoResult<GtsfValue> {
    let bad = || IoError::Parse(format!("expected phi,chi,psi;radius, found {text:?}"));
    let (grades, radius) = text.split_once(';').ok_or_else(bad)?;
    let nums: Vec<f64> = grades
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [phi, chi, psi] = nums[..] else {
        return Err(bad());
    };
    let radius = radius.trim().parse::<f64>().map_err(|_| bad())?;
    Ok(GtsfValue::from_parts(phi, chi, psi, radius))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected table or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub matrix: GtsfDecisionMatrix,
    pub ranking: RankingReport,
}

fn pad_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn matrix_table(matrix: &GtsfDecisionMatrix) -> String {
    let mut rows = vec![std::iter::once(String::new()).chain(matrix.criteria().iter().cloned()).collect()];
    for (a, row) in matrix.rows() {
        rows.push(
            std::iter::once(a.to_owned())
                .chain(row.values().map(|v| format!("{v:.2}")))
                .collect(),
        );
    }
    pad_table(&rows)
}

/// `v3 > v1 > v4 = v2`, with `=` joining tied neighbours.
pub fn order_line(report: &RankingReport) -> String {
    let tied = |a: &str, b: &str| report.ties.iter().any(|g| g.iter().any(|x| x == a) && g.iter().any(|x| x == b));
    let mut out = String::new();
    for (i, a) in report.order.iter().enumerate() {
        if i > 0 {
            out.push_str(if tied(&report.order[i - 1], a) { " = " } else { " > " });
        }
        out.push_str(a);
    }
    out
}

pub fn emit_matrix(matrix: &GtsfDecisionMatrix, format: Format) -> String {
    match format {
        Format::Table => matrix_table(matrix),
        Format::Json => to_json(matrix),
    }
}

/// Table format shows grades and radii to 2 decimals and similarities to 4;
/// JSON keeps full precision.
pub fn emit_report(report: &RankingReport, matrix: &GtsfDecisionMatrix, format: Format) -> String {
    match format {
        Format::Json => to_json(&ReportDocument {
            matrix: matrix.clone(),
            ranking: report.clone(),
        }),
        Format::Table => {
            let mut out = matrix_table(matrix);
            out.push('\n');
            let mut rows = vec![vec!["alternative".to_owned(), "similarity".to_owned()]];
            rows.extend(report.similarities.iter().map(|(a, s)| vec![a.clone(), format!("{s:.4}")]));
            out.push_str(&pad_table(&rows));
            let _ = writeln!(out, "\nranking: {}", order_line(report));
            out
        }
    }
}

pub fn parse_report(text: &str) -> IoResult<ReportDocument> {
    from_json(text)
}

/// The bundled example documents.
pub mod fixtures {
    /// Three families merged into globular values.
    pub const EXAMPLE1: &str = include_str!("../fixtures/example1.json");
    /// Two sets for the set operations.
    pub const EXAMPLE2: &str = include_str!("../fixtures/example2.json");
    /// Two sets for the distances.
    pub const EXAMPLE3: &str = include_str!("../fixtures/example3.json");
    /// The venue selection problem: 3 experts, 4 venues, 5 features.
    pub const EXAMPLE4: &str = include_str!("../fixtures/example4.json");

    pub const NAMES: [&str; 4] = ["example1", "example2", "example3", "example4"];

    pub fn get(name: &str) -> Option<&'static str> {
        match name {
            "example1" => Some(EXAMPLE1),
            "example2" => Some(EXAMPLE2),
            "example3" => Some(EXAMPLE3),
            "example4" => Some(EXAMPLE4),
            _ => None,
        }
    }
}
