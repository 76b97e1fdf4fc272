//! The `circlefix` command line.
//!
//! Exit codes: 0 all checks passed, 1 a check failed or a finding was
//! produced, 2 usage or input error, 3 resource limit.

mod schema;

pub use schema::{parse_datum, report_csv, DatumDocument, PointRecord, CSV_HEADER};

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumerate::{
    bound_table, enumerate_admissible, open_questions_of, EnumerateError, EnumerationQuery,
    EnumerationReport, OpenQuestionReport,
};
use crate::fpdata::{
    disjoint_union, gen_cpn, gen_s2, gen_s6, product, DataError, FixedPointDatum,
};
use crate::verify::{check_rigidity, run_all_checks, CheckOptions, CheckReport, Outcome};

/// Process exit status; a run reports the worst outcome it saw.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitStatus {
    Ok = 0,
    Finding = 1,
    InputError = 2,
    ResourceLimit = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "circlefix",
    version,
    about = "Fixed point data of circle actions: verify, compute chi_y coefficients, generate, enumerate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every check on a datum file.
    Verify {
        file: PathBuf,
        /// Also require sum_p N_p(w) = sum_p N_p(-w).
        #[arg(long)]
        strict_pairing: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Print chi^0..chi^n and N^0..N^n.
    Chi {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ChiFormat::Csv)]
        format: ChiFormat,
    },
    /// Emit a generated datum as JSON.
    Example {
        #[command(subcommand)]
        family: Family,
    },
    /// Enumerate data passing the necessary conditions.
    Enumerate {
        /// Half-dimension.
        #[arg(long)]
        n: usize,
        /// Number of fixed points.
        #[arg(long)]
        points: usize,
        /// Largest absolute weight.
        #[arg(long)]
        max_weight: i64,
        /// Keep only data whose weights have gcd 1.
        #[arg(long, default_value_t = true, num_args = 0..=1,
              default_missing_value = "true", action = ArgAction::Set)]
        effective: bool,
        /// Keep one representative of each datum and its negation.
        #[arg(long)]
        dedup_flip: bool,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = EnumFormat::Text)]
        format: EnumFormat,
        /// Also run the crowdedness and middle-range experiment.
        #[arg(long)]
        experiments: bool,
    },
    /// Kosniowski bound and known minimum per dimension.
    Bounds {
        #[arg(long)]
        max_dim: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// S^6 with parameters a, b.
    S6 {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// CP^n with exponents a_0 < ... < a_n.
    Cpn {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        exps: Vec<i64>,
    },
    /// S^2 rotated at speed w.
    S2 {
        #[arg(long, allow_hyphen_values = true)]
        w: i64,
    },
    /// Product of the data in the given files.
    Product {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Disjoint union of the data in the given files.
    Union {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ChiFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EnumFormat {
    Json,
    Csv,
    Text,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

// Output goes to caller-provided sinks; write failures there (closed pipes)
// are not actionable, so they are ignored.
macro_rules! say {
    ($w:expr, $($arg:tt)*) => {{ let _ = writeln!($w, $($arg)*); }};
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                ExitStatus::InputError
            } else {
                let _ = write!(out, "{text}");
                ExitStatus::Ok
            };
        }
    };
    let mut io = Io { out, err };
    match cli.command {
        Command::Verify {
            file,
            strict_pairing,
            format,
        } => cmd_verify(&mut io, &file, strict_pairing, format),
        Command::Chi { file, format } => cmd_chi(&mut io, &file, format),
        Command::Example { family } => cmd_example(&mut io, family),
        Command::Enumerate {
            n,
            points,
            max_weight,
            effective,
            dedup_flip,
            jobs,
            format,
            experiments,
        } => {
            let mut q = EnumerationQuery::new(n, points, max_weight)
                .effective(effective)
                .dedup_sign_flip(dedup_flip);
            if let Some(j) = jobs {
                q.worker_count = j;
            }
            cmd_enumerate(&mut io, &q, format, experiments)
        }
        Command::Bounds { max_dim } => cmd_bounds(&mut io, max_dim),
    }
}

fn load(io: &mut Io, path: &Path) -> Result<FixedPointDatum, ExitStatus> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        say!(io.err, "error: {}: {e}", path.display());
        ExitStatus::InputError
    })?;
    parse_datum(&text).map_err(|e| {
        say!(io.err, "error: {}: {e}", path.display());
        ExitStatus::InputError
    })
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    datum: &'a FixedPointDatum,
    passed: bool,
    checks: &'a [CheckReport],
}

fn outcome_tag(r: &CheckReport) -> &'static str {
    match r.outcome {
        Outcome::Pass => "PASS",
        Outcome::Fail => "FAIL",
        Outcome::NotApplicable => "N/A ",
        Outcome::Skipped => "SKIP",
    }
}

fn report_line(r: &CheckReport) -> String {
    let mut line = format!("{} {}", outcome_tag(r), r.check.as_str());
    if let Some(w) = &r.witness {
        line.push_str(&format!(" {}", serde_json::to_string(w).expect("witness serializes")));
    }
    if let Some(n) = &r.note {
        line.push_str(&format!(" ({n})"));
    }
    line
}

fn cmd_verify(io: &mut Io, file: &Path, strict: bool, format: ReportFormat) -> ExitStatus {
    let d = match load(io, file) {
        Ok(d) => d,
        Err(s) => return s,
    };
    let reports = run_all_checks(&d, &CheckOptions { strict_pairing: strict });
    let passed = reports.iter().all(|r| r.passed);
    match format {
        ReportFormat::Json => {
            let doc = VerifyOutput {
                datum: &d,
                passed,
                checks: &reports,
            };
            say!(io.out, "{}", serde_json::to_string_pretty(&doc).expect("serializes"));
        }
        ReportFormat::Text => {
            say!(io.out, "{d}");
            for r in &reports {
                say!(io.out, "{}", report_line(r));
            }
        }
    }
    if passed {
        ExitStatus::Ok
    } else {
        ExitStatus::Finding
    }
}

#[derive(Serialize)]
struct ChiOutput {
    chi: Vec<i64>,
    n_vector: Vec<usize>,
}

fn csv_line<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_chi(io: &mut Io, file: &Path, format: ChiFormat) -> ExitStatus {
    let d = match load(io, file) {
        Ok(d) => d,
        Err(s) => return s,
    };
    if d.is_empty() {
        say!(io.err, "error: {}: datum has no fixed points", file.display());
        return ExitStatus::InputError;
    }
    let report = check_rigidity(&d);
    let chi = match crate::verify::chi_vector(&d) {
        Ok(c) if report.passed => c,
        _ => {
            say!(io.out, "{}", report_line(&report));
            say!(io.err, "error: rigidity fails; no chi_y coefficients");
            return ExitStatus::Finding;
        }
    };
    let nv = d.n_vector();
    match format {
        ChiFormat::Csv => {
            say!(io.out, "{}", csv_line(&chi.0));
            say!(io.out, "{}", csv_line(&nv.0));
        }
        ChiFormat::Json => {
            let doc = ChiOutput {
                chi: chi.0,
                n_vector: nv.0,
            };
            say!(io.out, "{}", serde_json::to_string(&doc).expect("serializes"));
        }
    }
    ExitStatus::Ok
}

fn cmd_example(io: &mut Io, family: Family) -> ExitStatus {
    let generated: Result<FixedPointDatum, DataError> = match family {
        Family::S6 { a, b } => gen_s6(a, b),
        Family::Cpn { exps } => gen_cpn(&exps),
        Family::S2 { w } => gen_s2(w),
        Family::Product { files } | Family::Union { files } if files.is_empty() => {
            Err(DataError::InvalidParameter("no input files".into()))
        }
        Family::Product { files } => match load_all(io, &files) {
            Ok(ds) => Ok(ds.iter().skip(1).fold(ds[0].clone(), |acc, d| product(&acc, d))),
            Err(s) => return s,
        },
        Family::Union { files } => match load_all(io, &files) {
            Ok(ds) => ds
                .iter()
                .skip(1)
                .try_fold(ds[0].clone(), |acc, d| disjoint_union(&acc, d)),
            Err(s) => return s,
        },
    };
    match generated {
        Ok(d) => {
            say!(io.out, "{}", DatumDocument::from(d).to_json());
            ExitStatus::Ok
        }
        Err(e) => {
            say!(io.err, "error: {e}");
            ExitStatus::InputError
        }
    }
}

fn load_all(io: &mut Io, files: &[PathBuf]) -> Result<Vec<FixedPointDatum>, ExitStatus> {
    files.iter().map(|f| load(io, f)).collect()
}

#[derive(Serialize)]
struct EnumerateOutput<'a> {
    #[serde(flatten)]
    report: &'a EnumerationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    open_questions: Option<&'a OpenQuestionReport>,
}

fn cmd_enumerate(
    io: &mut Io,
    q: &EnumerationQuery,
    format: EnumFormat,
    experiments: bool,
) -> ExitStatus {
    let report = match enumerate_admissible(q) {
        Ok(r) => r,
        Err(e @ EnumerateError::ResourceLimit { .. }) => {
            say!(io.err, "error: {e}");
            return ExitStatus::ResourceLimit;
        }
        Err(e) => {
            say!(io.err, "error: {e}");
            return ExitStatus::InputError;
        }
    };
    let open = experiments.then(|| open_questions_of(&report));
    let violations = report.bound_violations();
    let finding =
        !violations.is_empty() || open.as_ref().is_some_and(|o| !o.violators.is_empty());

    match format {
        EnumFormat::Json => {
            let doc = EnumerateOutput {
                report: &report,
                open_questions: open.as_ref(),
            };
            say!(io.out, "{}", serde_json::to_string_pretty(&doc).expect("serializes"));
        }
        EnumFormat::Csv => {
            let _ = write!(io.out, "{}", report_csv(&report));
        }
        EnumFormat::Text => {
            say!(
                io.out,
                "# n={} k={} |w|<={} effective={} dedup_flip={}: {} admissible (complete only up to |w| <= {})",
                q.half_dim,
                q.point_count,
                q.max_weight,
                q.effective_only,
                q.dedup_sign_flip,
                report.admissible.len(),
                report.weight_bound
            );
            for (d, g) in report.admissible.iter().zip(&report.diagnostics) {
                say!(io.out, "{d}  N={:?} chi={:?}", g.n_vector.0, g.chi.0);
            }
            say!(
                io.out,
                "# candidates={} partial_nodes={} pruned={:?}",
                report.counters.candidates,
                report.counters.partial_nodes,
                report.counters.pruned
            );
            for d in &violations {
                say!(io.out, "FINDING k >= floor(dim/4) + 1 fails: {d}");
            }
            if let Some(o) = &open {
                for v in &o.violators {
                    let names: Vec<&str> = v.failed.iter().map(|r| r.check.as_str()).collect();
                    say!(io.out, "FINDING {} fails {}", v.datum, names.join(", "));
                }
                if o.violators.is_empty() {
                    say!(io.out, "# experiment: no crowdedness or middle-range violators");
                }
            }
        }
    }
    if finding {
        ExitStatus::Finding
    } else {
        ExitStatus::Ok
    }
}

fn cmd_bounds(io: &mut Io, max_dim: usize) -> ExitStatus {
    if max_dim < 2 || !max_dim.is_multiple_of(2) {
        say!(io.err, "error: --max-dim must be even and at least 2, got {max_dim}");
        return ExitStatus::InputError;
    }
    for row in bound_table(max_dim / 2) {
        say!(io.out, "{}, {}, {}", row.dim, row.kosniowski_bound, row.known_minimum);
    }
    ExitStatus::Ok
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_enumerate(q: &EnumerationQuery) -> (ExitStatus, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut io = Io {
            out: &mut out,
            err: &mut err,
        };
        let status = cmd_enumerate(&mut io, q, EnumFormat::Text, false);
        (status, String::from_utf8(err).unwrap())
    }

    #[test]
    fn resource_limit_exits_3() {
        let mut q = EnumerationQuery::new(2, 4, 3);
        q.candidate_ceiling = 10;
        let (status, err) = run_enumerate(&q);
        assert_eq!(status, ExitStatus::ResourceLimit);
        assert_eq!(status.code(), 3);
        assert!(err.contains("ceiling"));
    }

    #[test]
    fn in_process_run() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let status = run(["circlefix", "bounds", "--max-dim", "4"], &mut out, &mut err);
        assert_eq!(status, ExitStatus::Ok);
        assert_eq!(String::from_utf8(out).unwrap(), "2, 1, 2\n4, 2, 3\n");
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let status = run(["circlefix", "bounds"], &mut out, &mut err);
        assert_eq!(status, ExitStatus::InputError);
        assert!(!err.is_empty());
    }
}
