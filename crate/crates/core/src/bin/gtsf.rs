use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gtsf::io::{self, fixtures, Format, IoError, IoResult};
use gtsf::metrics::{cosine_sm, euclidean, euclidean_element, hamming, hamming_element};
use gtsf::ranking::{accuracy, compare, score, DecidedBy, Relation};
use gtsf::{gtsfwaa, gtsfwga, DecisionProblem, Params, WeightVector};

/// Globular T-spherical fuzzy values from the command line.
///
/// Exit status: 0 on success, 2 for unreadable or malformed input,
/// 3 for input that breaks a value constraint.
#[derive(Parser)]
#[command(name = "gtsf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the globular decision matrix and rank the alternatives.
    Solve(ProblemArgs),
    /// Build and print the globular decision matrix only.
    Matrix(ProblemArgs),
    /// Distances between the two sets of a sets document.
    Distance(DistanceArgs),
    /// Cosine similarity between two values.
    Similarity(SimilarityArgs),
    /// Weighted averaging or geometric aggregation of values.
    Aggregate(AggregateArgs),
    /// Score and accuracy of values; with two values, also their comparison.
    Score(ScoreArgs),
}

#[derive(Args)]
struct Input {
    /// Document path, or `-` for stdin.
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    input: Option<PathBuf>,
    /// Use a bundled document instead (example1 .. example4).
    #[arg(long)]
    fixture: Option<String>,
}

impl Input {
    fn read(&self) -> IoResult<String> {
        if let Some(name) = &self.fixture {
            return fixtures::get(name)
                .map(str::to_owned)
                .ok_or_else(|| IoError::Parse(format!("no bundled document {name:?}; try {}", fixtures::NAMES.join(", "))));
        }
        let path = self.input.as_ref().expect("clap requires input or fixture");
        if path.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| IoError::Parse(format!("stdin: {e}")))?;
            return Ok(s);
        }
        std::fs::read_to_string(path).map_err(|e| IoError::Parse(format!("{}: {e}", path.display())))
    }

    fn is_csv(&self) -> bool {
        self.input
            .as_ref()
            .and_then(|p| p.extension())
            .is_some_and(|e| e.eq_ignore_ascii_case("csv"))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Args)]
struct Common {
    /// Constraint and similarity exponent (positive integer).
    #[arg(long)]
    t: Option<u32>,
    /// Score attitude in [0, 1].
    #[arg(long)]
    sigma: Option<f64>,
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
}

impl Common {
    fn params(&self, t: u32, sigma: f64) -> IoResult<Params> {
        Params::new(self.t.unwrap_or(t), self.sigma.unwrap_or(sigma)).map_err(|e| IoError::Parse(e.to_string()))
    }
}

#[derive(Args)]
struct ProblemArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    common: Common,
    /// Exponent for centroids and radii. Defaults to the document's value,
    /// or to --t when only --t is given.
    #[arg(long = "avg-t")]
    avg_t: Option<u32>,
    /// Round centroid grades to this many decimals before taking radii.
    #[arg(long)]
    centroid_decimals: Option<u32>,
    /// Per-criterion weights, comma separated; must sum to 1.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<f64>>,
}

impl ProblemArgs {
    fn problem(&self) -> IoResult<DecisionProblem> {
        let text = self.input.read()?;
        let c = &self.common;
        let problem = if self.input.is_csv() {
            let p = c.params(Params::DEFAULT_T, Params::DEFAULT_SIGMA)?;
            io::parse_csv_problem(&text, p)?
        } else {
            let mut doc = io::parse_problem_document(&text)?;
            if let Some(t) = c.t {
                doc.params.t = t;
                doc.params.averaging_t = Some(t);
            }
            if let Some(s) = c.sigma {
                doc.params.sigma = s;
            }
            doc.into_problem()?
        };
        let mut problem = problem;
        if let Some(a) = self.avg_t {
            problem = problem.with_averaging_exponent(a)?;
        } else if let (true, Some(t)) = (self.input.is_csv(), c.t) {
            problem = problem.with_averaging_exponent(t)?;
        }
        if self.centroid_decimals.is_some() {
            problem = problem.with_centroid_decimals(self.centroid_decimals);
        }
        if let Some(w) = &self.weights {
            problem = problem.with_criterion_weights(Some(WeightVector::new(w.clone())?))?;
        }
        Ok(problem)
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Metric {
    All,
    Hamming,
    Euclidean,
    HammingElement,
    EuclideanElement,
}

#[derive(Args)]
struct DistanceArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value = "all")]
    metric: Metric,
}

#[derive(Args)]
struct SimilarityArgs {
    /// First value as `phi,chi,psi;radius`.
    a: String,
    /// Second value as `phi,chi,psi;radius`.
    b: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum Operator {
    Average,
    Geometric,
}

#[derive(Args)]
struct AggregateArgs {
    /// Values as `phi,chi,psi;radius`.
    #[arg(required = true)]
    values: Vec<String>,
    /// One weight per value, comma separated; defaults to equal weights.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value = "average")]
    operator: Operator,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ScoreArgs {
    /// Values as `phi,chi,psi;radius`.
    #[arg(required = true)]
    values: Vec<String>,
    #[command(flatten)]
    common: Common,
}

fn emit_json(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
}

fn values(literals: &[String], params: &Params) -> IoResult<Vec<gtsf::GtsfValue>> {
    literals
        .iter()
        .map(|s| {
            let v = io::parse_value(s)?;
            gtsf::validate_gtsfv(&v, params)?;
            Ok(v)
        })
        .collect()
}

fn run(cli: Cli) -> IoResult<String> {
    match cli.command {
        Command::Solve(args) => {
            let (matrix, report) = gtsf::mcgdm::solve_with_matrix(&args.problem()?)?;
            Ok(io::emit_report(&report, &matrix, args.common.format.into()))
        }
        Command::Matrix(args) => {
            let matrix = gtsf::build_gtsf_matrix(&args.problem()?)?;
            Ok(io::emit_matrix(&matrix, args.common.format.into()))
        }
        Command::Distance(args) => {
            let mut doc = io::parse_sets(&args.input.read()?)?;
            if let Some(t) = args.common.t {
                doc.params.t = t;
            }
            let params = doc.params.params()?;
            let ((na, a), (nb, b)) = doc.pair()?;
            let mut out = serde_json::Map::new();
            let m = args.metric;
            if matches!(m, Metric::All | Metric::Hamming) {
                out.insert("hamming".into(), json!(hamming(&a, &b, &params)?));
            }
            if matches!(m, Metric::All | Metric::Euclidean) {
                out.insert("euclidean".into(), json!(euclidean(&a, &b, &params)?));
            }
            let pairs: Vec<_> = a.iter().map(|(x, va)| (x, va, b.get(x))).collect();
            for (name, metric, f) in [
                ("hamming_element", Metric::HammingElement, hamming_element as fn(&_, &_, &_) -> f64),
                ("euclidean_element", Metric::EuclideanElement, euclidean_element),
            ] {
                if matches!(m, Metric::All) || m == metric {
                    let per: serde_json::Map<_, _> = pairs
                        .iter()
                        .map(|(x, va, vb)| {
                            let vb = vb.ok_or_else(|| {
                                gtsf::Error::UniverseMismatch(format!("{x:?} is missing from {nb:?}"))
                            })?;
                            Ok((x.to_string(), json!(f(va, vb, &params))))
                        })
                        .collect::<IoResult<_>>()?;
                    out.insert(name.into(), per.into());
                }
            }
            match args.common.format {
                FormatArg::Json => Ok(emit_json(json!({ "a": na, "b": nb, "t": params.t(), "distances": out }))),
                FormatArg::Table => {
                    let mut s = format!("{na} vs {nb} at t = {}\n", params.t());
                    for (k, v) in &out {
                        match v {
                            serde_json::Value::Object(per) => {
                                for (x, d) in per {
                                    s += &format!("{k} {x}: {:.4}\n", d.as_f64().unwrap_or(f64::NAN));
                                }
                            }
                            d => s += &format!("{k}: {:.4}\n", d.as_f64().unwrap_or(f64::NAN)),
                        }
                    }
                    Ok(s)
                }
            }
        }
        Command::Similarity(args) => {
            let params = args.common.params(Params::DEFAULT_T, Params::DEFAULT_SIGMA)?;
            let vs = values(&[args.a, args.b], &params)?;
            let s = cosine_sm(&vs[0], &vs[1], &params)?;
            Ok(match args.common.format {
                FormatArg::Json => emit_json(json!({ "similarity": s })),
                FormatArg::Table => format!("similarity: {s:.4}\n"),
            })
        }
        Command::Aggregate(args) => {
            let params = args.common.params(Params::DEFAULT_T, Params::DEFAULT_SIGMA)?;
            let vs = values(&args.values, &params)?;
            let w = match args.weights {
                Some(w) => WeightVector::new(w)?,
                None => WeightVector::uniform(vs.len())?,
            };
            let agg = match args.operator {
                Operator::Average => gtsfwaa(&vs, &w, &params)?,
                Operator::Geometric => gtsfwga(&vs, &w, &params)?,
            };
            Ok(match args.common.format {
                FormatArg::Json => emit_json(json!({ "value": agg })),
                FormatArg::Table => format!("{agg:.4}\n"),
            })
        }
        Command::Score(args) => {
            let params = args.common.params(Params::DEFAULT_T, Params::DEFAULT_SIGMA)?;
            let vs = values(&args.values, &params)?;
            let rows: Vec<_> = vs
                .iter()
                .zip(&args.values)
                .map(|(v, lit)| (lit, score(v, &params), accuracy(v, &params)))
                .collect();
            let cmp = (vs.len() == 2).then(|| compare(&vs[0], &vs[1], &params));
            Ok(match args.common.format {
                FormatArg::Json => emit_json(json!({
                    "values": rows.iter().map(|(l, s, a)| json!({ "value": l, "score": s, "accuracy": a })).collect::<Vec<_>>(),
                    "comparison": cmp,
                })),
                FormatArg::Table => {
                    let mut s = String::new();
                    for (l, sc, acc) in &rows {
                        s += &format!("{l}: score {sc:.4}, accuracy {acc:.4}\n");
                    }
                    if let Some(c) = cmp {
                        let verdict = match c.relation {
                            Relation::Greater => "first ranks above second",
                            Relation::Less => "first ranks below second",
                            Relation::Equivalent => "first and second are equivalent",
                        };
                        let by = match c.decided_by {
                            DecidedBy::Score => "score",
                            DecidedBy::Accuracy => "accuracy",
                            DecidedBy::Exhausted => "score and accuracy",
                        };
                        s += &format!("{verdict} (by {by})\n");
                    }
                    s
                }
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("gtsf: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
