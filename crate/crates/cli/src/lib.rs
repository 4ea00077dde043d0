//! JSON ingest, report rendering and the subcommands behind the `cyclic-trace` binary.
//!
//! Every command returns an [`Outcome`] instead of printing, so the binary
//! and the tests share one code path.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use cyclic_trace::{
    certify_all, certify_with, closed_form_coefficients, discriminant, enumerate_specs,
    expanded_coefficients, gram_matrix, is_isometric, signature, CertifyReport, CoefficientSource,
    Execution, FieldSpec, GramMatrix, OracleError, RamifiedPrime, SpecError,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_TRIALS: usize = 3;

pub mod exit {
    pub const OK: i32 = 0;
    pub const IO_OR_PARSE: i32 = 1;
    pub const VALIDATION: i32 = 2;
    pub const NOT_ISOMETRIC: i32 = 3;
    pub const CERTIFICATION_FAILED: i32 = 4;
}

/// What a command wants written and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: exit::OK,
            stdout,
            stderr: String::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Latex,
}

#[derive(Debug)]
pub enum CliError {
    Io { path: String, message: String },
    Parse { path: String, message: String },
    Validation { path: String, error: SpecError },
    Oracle(OracleError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Oracle(_) => exit::IO_OR_PARSE,
            CliError::Validation { .. } => exit::VALIDATION,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Io { path, message } => format!("IoError: {path}: {message}"),
            CliError::Parse { path, message } => format!("ParseError: {path}: {message}"),
            CliError::Validation { path, error } => format!("{}: {path}: {error}", error.name()),
            CliError::Oracle(e) => format!("OracleError: {e}"),
        }
    }
}

impl From<CliError> for Outcome {
    fn from(e: CliError) -> Self {
        Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RamifiedEntry {
    pub p: u64,
    pub e: u64,
}

/// On-disk description of a field: `{"degree": n, "ramified": [{"p", "e"}], "label"?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub degree: u64,
    pub ramified: Vec<RamifiedEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl SpecDocument {
    pub fn from_spec(spec: &FieldSpec, label: Option<String>) -> Self {
        Self {
            degree: spec.degree(),
            ramified: spec
                .ramified()
                .iter()
                .map(|rp| RamifiedEntry { p: rp.p, e: rp.e })
                .collect(),
            label,
        }
    }

    pub fn to_spec(&self) -> Result<FieldSpec, SpecError> {
        let ramified = self
            .ramified
            .iter()
            .map(|r| RamifiedPrime::new(r.p, r.e))
            .collect();
        FieldSpec::new(self.degree, ramified)
    }

    /// Validated document with primes in ascending order.
    pub fn canonical(&self) -> Result<(Self, FieldSpec), SpecError> {
        let spec = self.to_spec()?;
        Ok((Self::from_spec(&spec, self.label.clone()), spec))
    }
}

/// Read, parse, validate and canonicalize a spec file.
pub fn load_spec(path: &Path) -> Result<(SpecDocument, FieldSpec), CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    parse_spec(&text, &shown)
}

pub fn parse_spec(text: &str, origin: &str) -> Result<(SpecDocument, FieldSpec), CliError> {
    let doc: SpecDocument = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: origin.to_string(),
        message: e.to_string(),
    })?;
    doc.canonical().map_err(|error| CliError::Validation {
        path: origin.to_string(),
        error,
    })
}

fn raw(n: &BigInt) -> Box<RawValue> {
    RawValue::from_string(n.to_string()).expect("integers are valid JSON")
}

fn raw_matrix(m: &GramMatrix) -> Vec<Vec<Box<RawValue>>> {
    m.rows().map(|r| r.iter().map(raw).collect()).collect()
}

#[derive(Debug, Serialize)]
pub struct CoefficientDocument {
    pub source: &'static str,
    pub epsilon: u32,
    /// `a_d` keyed by the divisor `d`.
    pub a: BTreeMap<u64, Box<RawValue>>,
}

#[derive(Debug, Serialize)]
pub struct FailureDocument {
    pub trial: usize,
    pub roots: Vec<u64>,
    pub oracle: Vec<Vec<Box<RawValue>>>,
}

#[derive(Debug, Serialize)]
pub struct OracleDocument {
    pub trials: usize,
    pub seed: u64,
    pub pass: bool,
    pub distinct_fields: usize,
    pub roots: Vec<Vec<u64>>,
    pub failure: Option<FailureDocument>,
}

impl From<&CertifyReport> for OracleDocument {
    fn from(r: &CertifyReport) -> Self {
        Self {
            trials: r.trials,
            seed: r.seed,
            pass: r.pass,
            distinct_fields: r.distinct_fields,
            roots: r.realizations.clone(),
            failure: r.failure.as_ref().map(|f| FailureDocument {
                trial: f.trial,
                roots: f.roots.clone(),
                oracle: raw_matrix(&f.oracle),
            }),
        }
    }
}

/// Everything known about one field, as emitted by `gram` and `certify`.
#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub spec: SpecDocument,
    pub conductor: Box<RawValue>,
    pub gram: Vec<Vec<Box<RawValue>>>,
    pub coefficients: CoefficientDocument,
    pub discriminant: String,
    pub signature: (u64, u64),
    pub oracle: Option<OracleDocument>,
}

impl ReportDocument {
    pub fn new(doc: &SpecDocument, spec: &FieldSpec, certified: Option<&CertifyReport>) -> Self {
        let table = closed_form_coefficients(spec).unwrap_or_else(|_| expanded_coefficients(spec));
        Self {
            spec: doc.clone(),
            conductor: raw(&spec.conductor()),
            gram: raw_matrix(&gram_matrix(spec)),
            coefficients: CoefficientDocument {
                source: match table.source {
                    CoefficientSource::ClosedForm => "closed_form",
                    CoefficientSource::Expansion => "expansion",
                },
                epsilon: table.epsilon,
                a: table.coeffs.iter().map(|(&d, a)| (d, raw(a))).collect(),
            },
            discriminant: discriminant(spec).to_string(),
            signature: signature(spec),
            oracle: certified.map(OracleDocument::from),
        }
    }
}

pub fn render_csv(m: &GramMatrix) -> String {
    format!("{m}\n")
}

pub fn render_latex(m: &GramMatrix) -> String {
    let mut out = String::from("\\begin{pmatrix}\n");
    let rows: Vec<String> = m
        .rows()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" & "))
        .collect();
    out.push_str(&rows.join(" \\\\\n"));
    out.push_str("\n\\end{pmatrix}\n");
    out
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialize")
}

pub fn cmd_gram(path: &Path, format: Format) -> Outcome {
    let (doc, spec) = match load_spec(path) {
        Ok(v) => v,
        Err(e) => return e.into(),
    };
    let out = match format {
        Format::Json => pretty(&ReportDocument::new(&doc, &spec, None)),
        Format::Csv => render_csv(&gram_matrix(&spec)),
        Format::Latex => render_latex(&gram_matrix(&spec)),
    };
    Outcome::ok(out)
}

#[derive(Debug, Serialize)]
pub struct CompareDocument {
    pub isometric: bool,
    pub degrees: (u64, u64),
    pub discriminants: (String, String),
    pub gram: Option<Vec<Vec<Box<RawValue>>>>,
}

pub fn cmd_compare(a: &Path, b: &Path) -> Outcome {
    let loaded = load_spec(a).and_then(|x| Ok((x, load_spec(b)?)));
    let ((_, sa), (_, sb)) = match loaded {
        Ok(v) => v,
        Err(e) => return e.into(),
    };
    let verdict = is_isometric(&sa, &sb);
    let doc = CompareDocument {
        isometric: verdict.isometric,
        degrees: verdict.degrees,
        discriminants: (
            verdict.discriminants.0.to_string(),
            verdict.discriminants.1.to_string(),
        ),
        gram: verdict.witness.as_ref().map(raw_matrix),
    };
    Outcome {
        code: if verdict.isometric {
            exit::OK
        } else {
            exit::NOT_ISOMETRIC
        },
        stdout: pretty(&doc),
        stderr: String::new(),
    }
}

fn failure_note(doc: &SpecDocument, report: &CertifyReport) -> String {
    let mut s = String::new();
    if let Some(f) = &report.failure {
        let _ = writeln!(
            s,
            "certification failed for {}: trial {} with primitive roots {:?}",
            compact(doc),
            f.trial,
            f.roots
        );
    }
    s
}

pub fn cmd_certify(path: &Path, trials: usize, seed: u64) -> Outcome {
    let (doc, spec) = match load_spec(path) {
        Ok(v) => v,
        Err(e) => return e.into(),
    };
    let report = match certify_with(&spec, trials, seed, Execution::default()) {
        Ok(r) => r,
        Err(e) => return CliError::Oracle(e).into(),
    };
    Outcome {
        code: if report.pass {
            exit::OK
        } else {
            exit::CERTIFICATION_FAILED
        },
        stdout: pretty(&ReportDocument::new(&doc, &spec, Some(&report))),
        stderr: failure_note(&doc, &report),
    }
}

/// One line per spec; with `certify = Some((trials, seed))` each line is a
/// full report instead. Spec `i` of the batch is certified with seed `seed + i`.
pub fn cmd_enumerate(degree: u64, bound: u64, certify: Option<(usize, u64)>) -> Outcome {
    let specs = enumerate_specs(degree, bound);
    let mut out = Outcome::default();
    match certify {
        None => {
            for s in &specs {
                out.stdout.push_str(&compact(&SpecDocument::from_spec(s, None)));
                out.stdout.push('\n');
            }
        }
        Some((trials, seed)) => {
            let reports = certify_all(&specs, trials, seed, Execution::default());
            for (s, r) in specs.iter().zip(reports) {
                let doc = SpecDocument::from_spec(s, None);
                let report = match r {
                    Ok(r) => r,
                    Err(e) => {
                        let mut failed: Outcome = CliError::Oracle(e).into();
                        failed.stdout = out.stdout;
                        return failed;
                    }
                };
                if !report.pass {
                    out.code = exit::CERTIFICATION_FAILED;
                    out.stderr.push_str(&failure_note(&doc, &report));
                }
                out.stdout.push_str(&compact(&ReportDocument::new(&doc, s, Some(&report))));
                out.stdout.push('\n');
            }
        }
    }
    out
}
