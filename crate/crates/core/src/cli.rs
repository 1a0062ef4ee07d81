//! Command-line front end, kept in the library so it can be driven from tests.
//!
//! Every verb writes one document: the fields of a tensor file (when the
//! verb produces a tensor) followed by a `"report"` object. Exit codes:
//! `0` success, `1` numerical failure, `2` bad arguments or unreadable input,
//! `3` shape mismatch, `4` inconsistent system under `--require-consistent`.
//! Failures print a single JSON line `{"error":kind,"message":...}` on
//! stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::inverses::{
    one_four_family, one_inverse_family, one_three_family, penrose_check, pinv, reflexive_from_two,
    reverse_order_diagnose_with, LambdaKind, PenroseReport, DEFAULT_TOL,
};
use crate::io::{read_tensor, TensorFile};
use crate::random::TensorRng;
use crate::solver::{
    common_solution_tol, solve_ax_with, solve_axb_tol, SolveOutcome, CONSISTENCY_TOL,
};
use crate::tensor::DenseTensor;

#[derive(Parser, Debug)]
#[command(name = "tginv", version, about = "Generalized inverses of even-order tensors")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Residual tolerance (default 1e-10 for Penrose checks, 1e-8 for solvers)
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Write the result here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Moore–Penrose inverse with its Penrose report
    Pinv { a: PathBuf },
    /// Sample a {λ}-inverse from the family seeded at A†
    Ginv {
        a: PathBuf,
        /// `1`, `1,2`, `1,3`, `1,4` or `mp`
        #[arg(long, default_value = "1")]
        lambda: LambdaKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Solve A*X*B = D
    Solve {
        a: PathBuf,
        b: PathBuf,
        d: PathBuf,
        /// Free tensor for the general solution
        #[arg(long)]
        z: Option<PathBuf>,
        #[arg(long)]
        require_consistent: bool,
    },
    /// Solve A*X = B
    SolveAx {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        z: Option<PathBuf>,
        #[arg(long)]
        require_consistent: bool,
    },
    /// Common solution of A*X = B and X*D = F
    Common {
        a: PathBuf,
        b: PathBuf,
        d: PathBuf,
        f: PathBuf,
        #[arg(long)]
        z: Option<PathBuf>,
        #[arg(long)]
        require_consistent: bool,
    },
    /// Reverse order law diagnostic for (A*B)^(λ) = B^(λ)*A^(λ)
    CheckRol {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value = "mp")]
        lambda: LambdaKind,
        /// λ-inverse of A to test (default A†)
        #[arg(long)]
        a_inv: Option<PathBuf>,
        /// λ-inverse of B to test (default B†)
        #[arg(long)]
        b_inv: Option<PathBuf>,
    },
    /// Penrose report for X as an inverse of A
    Verify { a: PathBuf, x: PathBuf },
    /// Shape, split and norms
    Info { a: PathBuf },
}

#[derive(Serialize)]
struct Document<R: Serialize> {
    #[serde(flatten)]
    tensor: Option<TensorFile>,
    report: R,
}

#[derive(Serialize)]
struct PenroseOnly {
    penrose: PenroseReport,
}

#[derive(Serialize)]
struct SampleReport {
    lambda: String,
    seed: u64,
    penrose: PenroseReport,
}

#[derive(Serialize)]
struct SolveReport {
    consistent: bool,
    residual: f64,
    tolerance: f64,
    /// `particular`, `generated` or `none`
    solution: &'static str,
}

#[derive(Serialize)]
struct RolReport {
    verdict: &'static str,
    #[serde(flatten)]
    inner: crate::inverses::ReverseOrderReport,
}

#[derive(Serialize)]
struct InfoReport {
    shape: String,
    extents: Vec<usize>,
    split: usize,
    rows: usize,
    cols: usize,
    frobenius_norm: f64,
    max_abs: f64,
    real: bool,
    hermitian: Option<bool>,
}

/// Failure carrying its exit status.
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::Shape(_) => (3, "shape"),
            Error::Numeric(_) => (1, "numeric"),
            Error::Precondition(_) => (2, "precondition"),
            Error::Format(_) => (2, "format"),
            Error::Io(_) => (2, "io"),
            Error::Json(_) => (2, "json"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

fn argument(message: String) -> Failure {
    Failure {
        code: 2,
        kind: "argument",
        message,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status. Output goes to `stdout` unless `--out` is given.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(stdout, "{e}");
            } else {
                let _ = writeln!(
                    stderr,
                    "{}",
                    error_line("argument", e.to_string().lines().next().unwrap_or(""))
                );
            }
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => {
            if code == 4 {
                let _ = writeln!(stderr, "{}", error_line("inconsistent", "system is inconsistent"));
            }
            code
        }
        Err(f) => {
            let _ = writeln!(stderr, "{}", error_line(f.kind, &f.message));
            f.code
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

fn error_line(kind: &str, message: &str) -> String {
    serde_json::json!({ "error": kind, "message": message }).to_string()
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> std::result::Result<i32, Failure> {
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(argument(format!("--tol must be positive and finite, got {t}")));
        }
    }
    let ptol = cli.tol.unwrap_or(DEFAULT_TOL);
    let stol = cli.tol.unwrap_or(CONSISTENCY_TOL);

    let (doc, code) = match &cli.command {
        Command::Pinv { a } => {
            let a = read_tensor(a)?;
            let x = pinv(&a)?;
            let penrose = penrose_check(&a, &x, ptol)?;
            (document(Some(&x), PenroseOnly { penrose })?, 0)
        }
        Command::Ginv { a, lambda, seed } => {
            let a = read_tensor(a)?;
            let x = sample(&a, *lambda, *seed)?;
            let penrose = penrose_check(&a, &x, ptol)?;
            let report = SampleReport {
                lambda: lambda.to_string(),
                seed: *seed,
                penrose,
            };
            (document(Some(&x), report)?, 0)
        }
        Command::Solve {
            a,
            b,
            d,
            z,
            require_consistent,
        } => {
            let (a, b, d) = (read_tensor(a)?, read_tensor(b)?, read_tensor(d)?);
            let out = solve_axb_tol(&a, &b, &d, stol)?;
            solved(out, z.as_ref(), *require_consistent)?
        }
        Command::SolveAx {
            a,
            b,
            z,
            require_consistent,
        } => {
            let (a, b) = (read_tensor(a)?, read_tensor(b)?);
            let out = solve_ax_with(&a, &b, &pinv(&a)?, stol)?;
            solved(out, z.as_ref(), *require_consistent)?
        }
        Command::Common {
            a,
            b,
            d,
            f,
            z,
            require_consistent,
        } => {
            let (a, b) = (read_tensor(a)?, read_tensor(b)?);
            let (d, f) = (read_tensor(d)?, read_tensor(f)?);
            let out = common_solution_tol(&a, &b, &d, &f, stol)?;
            solved(out, z.as_ref(), *require_consistent)?
        }
        Command::CheckRol {
            a,
            b,
            lambda,
            a_inv,
            b_inv,
        } => {
            let (a, b) = (read_tensor(a)?, read_tensor(b)?);
            let ga = match a_inv {
                Some(p) => read_tensor(p)?,
                None => pinv(&a)?,
            };
            let gb = match b_inv {
                Some(p) => read_tensor(p)?,
                None => pinv(&b)?,
            };
            let inner = reverse_order_diagnose_with(&a, &b, *lambda, &ga, &gb, ptol)?;
            let verdict = if inner.candidate_passes {
                "candidate passes"
            } else {
                "candidate fails"
            };
            let candidate = inner.candidate_tensor.clone();
            (document(Some(&candidate), RolReport { verdict, inner })?, 0)
        }
        Command::Verify { a, x } => {
            let (a, x) = (read_tensor(a)?, read_tensor(x)?);
            let penrose = penrose_check(&a, &x, ptol)?;
            (document(None, PenroseOnly { penrose })?, 0)
        }
        Command::Info { a } => {
            let a = read_tensor(a)?;
            let s = a.shape();
            let report = InfoReport {
                shape: s.to_string(),
                extents: s.extents().to_vec(),
                split: s.split(),
                rows: s.row_count(),
                cols: s.col_count(),
                frobenius_norm: a.frobenius_norm(),
                max_abs: a.max_abs(),
                real: a.data().iter().all(|z| z.im == 0.0),
                hermitian: a.is_hermitian(ptol).ok(),
            };
            (document(None, report)?, 0)
        }
    };

    let text = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string(&doc).map_err(Error::from)?;
            s.push('\n');
            s
        }
        Format::Table => table(&doc),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(Error::from)?,
        None => stdout.write_all(text.as_bytes()).map_err(Error::from)?,
    }
    Ok(code)
}

fn document<R: Serialize>(t: Option<&DenseTensor>, report: R) -> Result<Value> {
    let tensor = t.map(TensorFile::from_tensor).transpose()?;
    Ok(serde_json::to_value(Document { tensor, report })?)
}

fn solved(
    out: SolveOutcome,
    z: Option<&PathBuf>,
    require: bool,
) -> std::result::Result<(Value, i32), Failure> {
    let (x, solution) = match (&out.generator, z) {
        (Some(g), Some(z)) => (Some(g.apply(&read_tensor(z)?)?), "generated"),
        (Some(g), None) => (Some(g.particular().clone()), "particular"),
        (None, _) => (None, "none"),
    };
    let report = SolveReport {
        consistent: out.consistent,
        residual: out.residual,
        tolerance: out.tolerance,
        solution,
    };
    let code = if require && !out.consistent { 4 } else { 0 };
    Ok((document(x.as_ref(), report)?, code))
}

/// Draws a member of `A{λ}` from the family generated at `A†`, with free
/// tensors taken from [`TensorRng::seed`]`(seed)`.
pub fn sample(a: &DenseTensor, kind: LambdaKind, seed: u64) -> Result<DenseTensor> {
    let mut rng = TensorRng::seed(seed);
    let g = pinv(a)?;
    let shape = g.shape().clone();
    match kind {
        LambdaKind::ONE => one_inverse_family(a, &g, &rng.tensor(shape)),
        LambdaKind::ONE_TWO => {
            let y = one_inverse_family(a, &g, &rng.tensor(shape.clone()))?;
            let z = one_inverse_family(a, &g, &rng.tensor(shape))?;
            reflexive_from_two(a, &y, &z)
        }
        LambdaKind::ONE_THREE => one_three_family(a, &g, &rng.tensor(shape)),
        LambdaKind::ONE_FOUR => one_four_family(a, &g, &rng.tensor(shape)),
        LambdaKind::MOORE_PENROSE => Ok(g),
        other => Err(Error::Format(format!(
            "no sampler for {{{other}}}; use 1, 1,2, 1,3, 1,4 or mp"
        ))),
    }
}

fn table(doc: &Value) -> String {
    let mut s = String::new();
    if let (Some(ext), Some(split), Some(re)) = (
        doc.get("extents").and_then(Value::as_array),
        doc.get("split").and_then(Value::as_u64),
        doc.get("re").and_then(Value::as_array),
    ) {
        let ext: Vec<u64> = ext.iter().filter_map(Value::as_u64).collect();
        let cols: u64 = ext[split as usize..].iter().product();
        let im = doc.get("im").and_then(Value::as_array);
        let _ = writeln!(s, "tensor {:?} split {split}", ext);
        for (r, row) in re.chunks(cols.max(1) as usize).enumerate() {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(c, x)| {
                    let x = x.as_f64().unwrap_or(f64::NAN);
                    match im.and_then(|im| im[r * cols as usize + c].as_f64()) {
                        Some(y) if y != 0.0 => format!("{x:>10.4}{y:+.4}i"),
                        _ => format!("{x:>10.4}"),
                    }
                })
                .collect();
            let _ = writeln!(s, "{}", cells.join(" "));
        }
    }
    if let Some(report) = doc.get("report") {
        flatten_report("", report, &mut s);
    }
    s
}

fn flatten_report(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten_report(&key, v, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object()) => {
            for (i, v) in items.iter().enumerate() {
                flatten_report(&format!("{prefix}[{i}]"), v, out);
            }
        }
        _ => {
            let _ = writeln!(out, "{prefix}: {v}");
        }
    }
}
