//! Command-line front end.
//!
//! Subcommands `numbers`, `matrix`, `verify` and `audit` each produce an
//! [`OutputRecord`], rendered either as JSON (`structured`, the default) or
//! as a tab-separated table (`flat`). Every polynomial is written in the
//! canonical `LambdaPoly` text form.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algorithms::{build_table, AlgorithmKind, SequenceSpec};
use crate::audit::{audit_printed_matrices, run_identity_suite_with, AuditReport, SuiteOptions};
use crate::exact::{parse_rat, BigRat, LambdaPoly};
use crate::numbers::{
    appell_convolution, bell_with, bernoulli_with, euler_with, stirling1_table, stirling2_table,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const MAX_NMAX: usize = 200;
pub const MAX_ROWS: usize = 200;
pub const MAX_VERIFY_NMAX: usize = 40;
pub const MAX_VERIFY_ORDER: usize = 40;

#[derive(Debug, Parser)]
#[command(name = "degen", version, about = "Exact degenerate A-/B-algorithms and special numbers")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Structured, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Structured,
    Flat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a family of degenerate numbers.
    Numbers {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        /// Substitute λ = p/q (or an integer) instead of printing polynomials.
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: Option<BigRat>,
    },
    /// Emit a degenerate A- or B-algorithm matrix.
    Matrix {
        #[arg(value_enum, ignore_case = true)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = SeedArg::Bernoulli)]
        seed: SeedArg,
        #[arg(long, default_value_t = 4)]
        rows: usize,
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: Option<BigRat>,
        /// One canonical polynomial per line; line n is seed entry n.
        #[arg(long)]
        custom_file: Option<PathBuf>,
    },
    /// Run the identity suite; exits 1 if any identity fails.
    Verify {
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Compare the published example matrices against recomputed values.
    Audit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Family {
    Bernoulli,
    Euler,
    Bell,
    BernoulliAtOne,
    EulerAtOne,
    Stirling1,
    Stirling2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    A,
    B,
}

impl From<KindArg> for AlgorithmKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::A => AlgorithmKind::A,
            KindArg::B => AlgorithmKind::B,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeedArg {
    Bernoulli,
    Half,
    Bell,
    Custom,
}

fn parse_lambda(s: &str) -> Result<BigRat, String> {
    parse_rat(s).map_err(|_| format!("expected an exact rational p/q or integer, got {s:?}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordKind {
    NumberTable,
    Matrix,
    IdentityReport,
    AuditReport,
}

impl RecordKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RecordKind::NumberTable => "number_table",
            RecordKind::Matrix => "matrix",
            RecordKind::IdentityReport => "identity_report",
            RecordKind::AuditReport => "audit_report",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    /// One value per index n.
    Sequence(Vec<String>),
    /// Ragged rows (triangles, trapezoids).
    Rows(Vec<Vec<String>>),
    /// Named columns, one record per row.
    Records {
        columns: Vec<&'static str>,
        rows: Vec<Vec<String>>,
    },
}

/// Machine-readable result of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub kind: RecordKind,
    pub meta: Vec<(String, String)>,
    pub body: Body,
}

impl OutputRecord {
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("kind".into(), json!(self.kind.as_str()));
        for (k, v) in &self.meta {
            obj.insert(k.clone(), json!(v));
        }
        match &self.body {
            Body::Sequence(values) => {
                obj.insert("values".into(), json!(values));
            }
            Body::Rows(rows) => {
                obj.insert("rows".into(), json!(rows));
            }
            Body::Records { columns, rows } => {
                let records: Vec<Value> = rows
                    .iter()
                    .map(|row| {
                        let m: Map<String, Value> = columns
                            .iter()
                            .zip(row)
                            .map(|(c, v)| (c.to_string(), json!(v)))
                            .collect();
                        Value::Object(m)
                    })
                    .collect();
                obj.insert("records".into(), Value::Array(records));
            }
        }
        Value::Object(obj)
    }

    pub fn to_flat(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "#kind={}", self.kind.as_str());
        for (k, v) in &self.meta {
            let _ = writeln!(out, "#{k}={v}");
        }
        let (index_a, index_b) = match self.kind {
            RecordKind::NumberTable => ("n", "k"),
            _ => ("row", "col"),
        };
        match &self.body {
            Body::Sequence(values) => {
                let _ = writeln!(out, "n\tvalue");
                for (n, v) in values.iter().enumerate() {
                    let _ = writeln!(out, "{n}\t{v}");
                }
            }
            Body::Rows(rows) => {
                let _ = writeln!(out, "{index_a}\t{index_b}\tvalue");
                for (n, row) in rows.iter().enumerate() {
                    for (k, v) in row.iter().enumerate() {
                        let _ = writeln!(out, "{n}\t{k}\t{v}");
                    }
                }
            }
            Body::Records { columns, rows } => {
                let _ = writeln!(out, "{}", columns.join("\t"));
                for row in rows {
                    let _ = writeln!(out, "{}", row.join("\t"));
                }
            }
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("plain JSON tree");
                s.push('\n');
                s
            }
            Format::Flat => self.to_flat(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("custom seed file {path}: {detail}")]
    CustomFile { path: String, detail: String },
    #[error(transparent)]
    Compute(#[from] crate::Error),
}

/// A finished command: what to print and how to exit.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub record: OutputRecord,
    pub status: i32,
    pub message: Option<String>,
}

fn render_all(values: &[LambdaPoly], lambda: Option<&BigRat>) -> Vec<String> {
    values
        .iter()
        .map(|v| match lambda {
            Some(q) => v.substitute(q).to_string(),
            None => v.to_string(),
        })
        .collect()
}

fn lambda_meta(meta: &mut Vec<(String, String)>, lambda: Option<&BigRat>) {
    let text = lambda.map_or_else(|| "symbolic".to_string(), crate::exact::render_rat);
    meta.push(("lambda".into(), text));
}

pub fn cmd_numbers(family: Family, nmax: usize, lambda: Option<&BigRat>) -> Result<OutputRecord, CliError> {
    if nmax > MAX_NMAX {
        return Err(CliError::Usage(format!("--nmax {nmax} exceeds ceiling {MAX_NMAX}")));
    }
    let mut meta = vec![
        ("family".to_string(), family.to_possible_value().unwrap().get_name().to_string()),
        ("nmax".to_string(), nmax.to_string()),
    ];
    lambda_meta(&mut meta, lambda);
    let one = BigRat::from_integer(1.into());
    let body = match family {
        Family::Stirling1 | Family::Stirling2 => {
            let table = if family == Family::Stirling1 {
                stirling1_table(nmax)
            } else {
                stirling2_table(nmax)
            };
            Body::Rows(table.rows().iter().map(|r| render_all(r, lambda)).collect())
        }
        _ => {
            let s2 = stirling2_table(nmax);
            let bern = || (0..=nmax).map(|n| bernoulli_with(&s2, n)).collect::<Vec<_>>();
            let eul = || (0..=nmax).map(|n| euler_with(&s2, n)).collect::<Vec<_>>();
            let at_one = |v: Vec<LambdaPoly>| {
                (0..=nmax).map(|n| appell_convolution(&v, n, &one)).collect::<Vec<_>>()
            };
            let values = match family {
                Family::Bernoulli => bern(),
                Family::Euler => eul(),
                Family::Bell => (0..=nmax).map(|n| bell_with(&s2, n, &one)).collect(),
                Family::BernoulliAtOne => at_one(bern()),
                Family::EulerAtOne => at_one(eul()),
                Family::Stirling1 | Family::Stirling2 => unreachable!(),
            };
            Body::Sequence(render_all(&values, lambda))
        }
    };
    Ok(OutputRecord {
        kind: RecordKind::NumberTable,
        meta,
        body,
    })
}

/// Reads a custom seed: one canonical polynomial per line.
pub fn read_custom_seed(path: &Path) -> Result<Vec<LambdaPoly>, CliError> {
    let defect = |detail: String| CliError::CustomFile {
        path: path.display().to_string(),
        detail,
    };
    let text = std::fs::read_to_string(path).map_err(|e| defect(format!("unreadable: {e}")))?;
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            line.parse::<LambdaPoly>()
                .map_err(|_| defect(format!("line {}: not a polynomial: {line:?}", i + 1)))
        })
        .collect()
}

pub fn cmd_matrix(
    kind: AlgorithmKind,
    seed: SeedArg,
    rows: usize,
    lambda: Option<&BigRat>,
    custom_file: Option<&Path>,
) -> Result<OutputRecord, CliError> {
    if rows > MAX_ROWS {
        return Err(CliError::Usage(format!("--rows {rows} exceeds ceiling {MAX_ROWS}")));
    }
    let spec = match (seed, custom_file) {
        (SeedArg::Custom, Some(path)) => {
            let values = read_custom_seed(path)?;
            if values.len() < rows + 1 {
                return Err(CliError::CustomFile {
                    path: path.display().to_string(),
                    detail: format!(
                        "has {} entries but {} are required for {rows} rows",
                        values.len(),
                        rows + 1
                    ),
                });
            }
            SequenceSpec::Custom(values)
        }
        (SeedArg::Custom, None) => {
            return Err(CliError::Usage("--seed custom requires --custom-file".into()))
        }
        (_, Some(_)) => {
            return Err(CliError::Usage("--custom-file is only valid with --seed custom".into()))
        }
        (SeedArg::Bernoulli, None) => SequenceSpec::BernoulliSeed,
        (SeedArg::Half, None) => SequenceSpec::HalfPowers,
        (SeedArg::Bell, None) => SequenceSpec::BellSeed,
    };
    let table = build_table(kind, &spec, rows)?;
    let mut meta = vec![
        ("algorithm".to_string(), kind.to_string()),
        ("seed".to_string(), spec.name().to_string()),
        ("rows".to_string(), rows.to_string()),
    ];
    lambda_meta(&mut meta, lambda);
    Ok(OutputRecord {
        kind: RecordKind::Matrix,
        meta,
        body: Body::Rows(table.rows().iter().map(|r| render_all(r, lambda)).collect()),
    })
}

pub fn identity_record(report: &AuditReport, nmax: usize, order: usize) -> OutputRecord {
    let failed = report.identity_results.iter().filter(|r| !r.passed).count();
    OutputRecord {
        kind: RecordKind::IdentityReport,
        meta: vec![
            ("nmax".into(), nmax.to_string()),
            ("order".into(), order.to_string()),
            ("identities".into(), report.identity_results.len().to_string()),
            ("failed".into(), failed.to_string()),
        ],
        body: Body::Records {
            columns: vec!["identity", "range", "checked", "status", "detail"],
            rows: report
                .identity_results
                .iter()
                .map(|r| {
                    vec![
                        r.name.clone(),
                        r.range.clone(),
                        r.checked.to_string(),
                        if r.passed { "pass" } else { "FAIL" }.to_string(),
                        r.failure.clone().unwrap_or_default(),
                    ]
                })
                .collect(),
        },
    }
}

pub fn cmd_verify(nmax: usize, order: usize, inject_fault: Option<String>) -> Result<Outcome, CliError> {
    if nmax > MAX_VERIFY_NMAX || order > MAX_VERIFY_ORDER {
        return Err(CliError::Usage(format!(
            "verify ceilings are --nmax {MAX_VERIFY_NMAX} and --order {MAX_VERIFY_ORDER}"
        )));
    }
    let report = run_identity_suite_with(nmax, order, &SuiteOptions { inject_fault });
    let failed: Vec<&str> = report
        .identity_results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.name.as_str())
        .collect();
    let (status, message) = if failed.is_empty() {
        (EXIT_OK, None)
    } else {
        (
            EXIT_VERIFY_FAILED,
            Some(format!("verification failed: {}", failed.join("; "))),
        )
    };
    Ok(Outcome {
        record: identity_record(&report, nmax, order),
        status,
        message,
    })
}

pub fn cmd_audit() -> OutputRecord {
    let report = audit_printed_matrices();
    let mismatches = report.matrix_results.iter().filter(|r| !r.matches).count();
    OutputRecord {
        kind: RecordKind::AuditReport,
        meta: vec![
            ("entries".into(), report.matrix_results.len().to_string()),
            ("mismatches".into(), mismatches.to_string()),
        ],
        body: Body::Records {
            columns: vec!["matrix", "row", "col", "printed", "recomputed", "status"],
            rows: report
                .matrix_results
                .iter()
                .map(|r| {
                    vec![
                        r.entry.matrix.name().to_string(),
                        r.entry.row.to_string(),
                        r.entry.col.to_string(),
                        r.entry.printed.to_string(),
                        r.recomputed.to_string(),
                        if r.matches { "match" } else { "mismatch" }.to_string(),
                    ]
                })
                .collect(),
        },
    }
}

pub fn execute(cli: Cli) -> Result<Outcome, CliError> {
    let plain = |record| Outcome {
        record,
        status: EXIT_OK,
        message: None,
    };
    match cli.command {
        Command::Numbers { family, nmax, lambda } => {
            cmd_numbers(family, nmax, lambda.as_ref()).map(plain)
        }
        Command::Matrix {
            kind,
            seed,
            rows,
            lambda,
            custom_file,
        } => cmd_matrix(kind.into(), seed, rows, lambda.as_ref(), custom_file.as_deref()).map(plain),
        Command::Verify {
            nmax,
            order,
            inject_fault,
        } => cmd_verify(nmax, order, inject_fault),
        Command::Audit => Ok(plain(cmd_audit())),
    }
}

/// What the process should write and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

/// Parses arguments and runs one command without touching the process.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Invocation { stdout, stderr, status };
        }
    };
    let format = cli.format;
    match execute(cli) {
        Ok(outcome) => Invocation {
            stdout: outcome.record.render(format),
            stderr: outcome.message.map(|m| m + "\n").unwrap_or_default(),
            status: outcome.status,
        },
        Err(e) => Invocation {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            status: EXIT_USAGE,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(record: &OutputRecord) -> &[String] {
        match &record.body {
            Body::Sequence(v) => v,
            other => panic!("not a sequence: {other:?}"),
        }
    }

    fn rows(record: &OutputRecord) -> &[Vec<String>] {
        match &record.body {
            Body::Rows(r) => r,
            other => panic!("not rows: {other:?}"),
        }
    }

    #[test]
    fn bernoulli_symbolic() {
        let r = cmd_numbers(Family::Bernoulli, 2, None).unwrap();
        assert_eq!(values(&r), ["1", "-1/2 + 1/2*L", "1/6 + -1/6*L^2"]);
    }

    #[test]
    fn euler_at_zero() {
        let zero = BigRat::from_integer(0.into());
        let r = cmd_numbers(Family::Euler, 1, Some(&zero)).unwrap();
        assert_eq!(values(&r), ["1", "-1/2"]);
    }

    #[test]
    fn stirling2_triangle() {
        let r = cmd_numbers(Family::Stirling2, 2, None).unwrap();
        assert_eq!(rows(&r)[2][1], "1 + -1*L");
    }

    #[test]
    fn matrices() {
        let r = cmd_matrix(AlgorithmKind::B, SeedArg::Half, 1, None, None).unwrap();
        assert_eq!(rows(&r), [vec!["1", "1/2"], vec!["-1/2"]]);
        let r = cmd_matrix(AlgorithmKind::B, SeedArg::Bernoulli, 0, None, None).unwrap();
        assert_eq!(rows(&r), [vec!["1"]]);
        let half = parse_rat("1/2").unwrap();
        let r = cmd_matrix(AlgorithmKind::A, SeedArg::Half, 2, Some(&half), None).unwrap();
        assert_eq!(rows(&r)[2][0], "-1/4");
    }

    #[test]
    fn custom_needs_file() {
        assert!(matches!(
            cmd_matrix(AlgorithmKind::B, SeedArg::Custom, 1, None, None),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn flat_rendering() {
        let r = cmd_matrix(AlgorithmKind::B, SeedArg::Half, 1, None, None).unwrap();
        let flat = r.to_flat();
        assert!(flat.contains("row\tcol\tvalue\n0\t0\t1\n0\t1\t1/2\n1\t0\t-1/2\n"), "{flat}");
    }

    #[test]
    fn verify_degenerate_run() {
        let out = cmd_verify(0, 0, None).unwrap();
        assert_eq!(out.status, EXIT_OK);
        assert!(cmd_verify(MAX_VERIFY_NMAX + 1, 4, None).is_err());
    }
}
