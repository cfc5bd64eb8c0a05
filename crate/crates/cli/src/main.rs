//! `fulltwist`: enumerate rational Dyck paths, compute torus-knot
//! superpolynomials, and run exact verification sweeps.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid arguments
//! (including non-coprime shapes), 3 malformed specialization.

mod render;
mod spec_parse;
mod sweep;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fulltwist::{enumerate, enumerate_rugged, CheckKind, SweepSpec, TorusShape};

pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn spec(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }

    fn io(err: io::Error) -> Self {
        CliError {
            code: 1,
            message: format!("i/o error: {err}"),
        }
    }
}

type CliResult = Result<(), CliError>;

#[derive(Parser)]
#[command(
    name = "fulltwist",
    version,
    about = "Torus-knot superpolynomials from rational Dyck paths, with exact verification sweeps"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
enum PathFormat {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
enum PolyFormat {
    #[default]
    Text,
    Json,
    Latex,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
enum ReportFormat {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate the (m,n)-Dyck paths in canonical order
    Paths {
        m: u32,
        n: u32,
        /// Only the rugged paths
        #[arg(long)]
        rugged: bool,
        /// Include area, h, outer vertices and ruggedness per path
        #[arg(long)]
        stats: bool,
        /// Print only the number of paths
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t)]
        format: PathFormat,
    },
    /// Compute the superpolynomial of the (m,n)-torus knot
    Superpoly {
        m: u32,
        n: u32,
        /// The lowest alpha-coefficient (direct closed form)
        #[arg(long, conflicts_with = "plus")]
        minus: bool,
        /// The highest alpha-coefficient (direct closed form)
        #[arg(long)]
        plus: bool,
        /// Comma-separated substitutions, e.g. "T=-1,a=1" or "a=Q^2"
        #[arg(long)]
        specialize: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: PolyFormat,
    },
    /// Run verification sweeps over all coprime (m,n) with m+n <= max-sum
    Verify {
        #[arg(long = "max-sum")]
        max_sum: u32,
        /// Comma-separated subset of: full_twist, kalman, lemma1, lemma2,
        /// bijection, alexander, extraction, mfw, count (default: all)
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Worker threads (default: FULLTWIST_JOBS or 1)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.message.is_empty() {
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.cmd {
        Cmd::Paths {
            m,
            n,
            rugged,
            stats,
            count,
            format,
        } => cmd_paths(m, n, rugged, stats, count, format),
        Cmd::Superpoly {
            m,
            n,
            minus,
            plus,
            specialize,
            format,
        } => cmd_superpoly(m, n, minus, plus, specialize.as_deref(), format),
        Cmd::Verify {
            max_sum,
            checks,
            jobs,
            format,
        } => cmd_verify(max_sum, &checks, jobs, format),
    }
}

fn parse_shape(m: u32, n: u32) -> Result<TorusShape, CliError> {
    TorusShape::new(m, n).map_err(|e| CliError::usage(e.to_string()))
}

fn cmd_paths(
    m: u32,
    n: u32,
    rugged: bool,
    stats: bool,
    count: bool,
    format: PathFormat,
) -> CliResult {
    let shape = parse_shape(m, n)?;
    let iter = if rugged {
        enumerate_rugged(shape)
    } else {
        enumerate(shape)
    };
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    if count {
        writeln!(out, "{}", iter.count()).map_err(CliError::io)?;
        return out.flush().map_err(CliError::io);
    }
    for path in iter {
        match format {
            PathFormat::Json => {
                let record = path.record(stats);
                let line = serde_json::to_string(&record).map_err(|e| CliError {
                    code: 1,
                    message: e.to_string(),
                })?;
                writeln!(out, "{line}").map_err(CliError::io)?;
            }
            PathFormat::Text => {
                writeln!(out, "{}", render::path_text(&path, stats)).map_err(CliError::io)?;
            }
        }
    }
    out.flush().map_err(CliError::io)
}

fn cmd_superpoly(
    m: u32,
    n: u32,
    minus: bool,
    plus: bool,
    specialize: Option<&str>,
    format: PolyFormat,
) -> CliResult {
    let shape = parse_shape(m, n)?;
    let assignment = specialize
        .map(spec_parse::parse_assignment)
        .transpose()
        .map_err(CliError::spec)?;

    let internal = |e: fulltwist::Error| CliError {
        code: 1,
        message: e.to_string(),
    };
    let (selection, mut poly, counts) = if minus {
        ("minus", fulltwist::p_minus(shape).map_err(internal)?, None)
    } else if plus {
        ("plus", fulltwist::p_plus(shape).map_err(internal)?, None)
    } else {
        let r = fulltwist::mellit_superpolynomial(shape).map_err(internal)?;
        ("full", r.poly, Some((r.path_count, r.rugged_count)))
    };
    if let Some(a) = &assignment {
        // Any failure applying the substitution is a specialization problem.
        poly = poly
            .specialize(a)
            .map_err(|e| CliError::spec(e.to_string()))?;
    }

    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    match format {
        PolyFormat::Text => writeln!(out, "{}", poly.to_text()).map_err(CliError::io)?,
        PolyFormat::Latex => writeln!(out, "{}", poly.to_latex()).map_err(CliError::io)?,
        PolyFormat::Csv => out
            .write_all(render::poly_csv(&poly).as_bytes())
            .map_err(CliError::io)?,
        PolyFormat::Json => {
            let line =
                render::poly_json(shape, selection, specialize, counts, &poly).map_err(|e| {
                    CliError {
                        code: 1,
                        message: e.to_string(),
                    }
                })?;
            writeln!(out, "{line}").map_err(CliError::io)?;
        }
    }
    out.flush().map_err(CliError::io)
}

fn cmd_verify(
    max_sum: u32,
    checks: &[String],
    jobs: Option<usize>,
    format: ReportFormat,
) -> CliResult {
    let kinds: Vec<CheckKind> = if checks.is_empty() {
        CheckKind::ALL.to_vec()
    } else {
        checks
            .iter()
            .map(|s| s.trim().parse::<CheckKind>())
            .collect::<Result<_, _>>()
            .map_err(CliError::usage)?
    };
    let spec = SweepSpec::new(max_sum, &kinds).map_err(CliError::usage)?;
    let jobs = jobs
        .or_else(|| {
            std::env::var("FULLTWIST_JOBS")
                .ok()
                .and_then(|v| v.parse::<usize>().ok())
        })
        .unwrap_or(1)
        .max(1);

    let started = std::time::Instant::now();
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    let mut io_err: Option<io::Error> = None;
    let summary = sweep::run(&spec, jobs, |report| {
        if io_err.is_some() {
            return;
        }
        let result = match format {
            ReportFormat::Text => writeln!(out, "{}", render::report_text(report)),
            ReportFormat::Json => match serde_json::to_string(report) {
                Ok(line) => writeln!(out, "{line}"),
                Err(e) => Err(io::Error::other(e)),
            },
        };
        if let Err(e) = result {
            io_err = Some(e);
        }
    })
    .map_err(|e| CliError {
        code: 1,
        message: e.to_string(),
    })?;
    if let Some(e) = io_err {
        return Err(CliError::io(e));
    }

    match format {
        ReportFormat::Text => {}
        ReportFormat::Json => {
            let line = serde_json::to_string(&summary).map_err(|e| CliError {
                code: 1,
                message: e.to_string(),
            })?;
            writeln!(out, "{line}").map_err(CliError::io)?;
        }
    }
    out.flush().map_err(CliError::io)?;
    // Timing goes to stderr so stdout stays byte-deterministic.
    eprintln!(
        "verify: {} checks, {} passed, {} failed in {:.3}s",
        summary.total,
        summary.passed,
        summary.failed,
        started.elapsed().as_secs_f64()
    );
    if summary.failed > 0 {
        return Err(CliError {
            code: 1,
            message: String::new(),
        });
    }
    Ok(())
}
