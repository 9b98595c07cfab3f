//! Command-line front end. The binary only forwards to [`run`].

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::diagram::{bottleneck, diagram_of, ExtendedDiagram};
use crate::digraph::build_pph_input;
use crate::extended::{extended_barcode, ExtendedReading};
use crate::frontend::ValuedInput;
use crate::hypergraph::build_hyper_input;
use crate::io::{
    first_record_width, format_diagram, format_distance, parse_diagram, parse_digraph,
    parse_hypergraph,
};
use crate::linalg::PrimeField;
use crate::oracle::extended_module_oracle;
use crate::random::trial_seed;
use crate::stability::{hyper_stability_trial, stability_trial, TrialConfig, TrialOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

const TOLERANCE: f64 = 1e-9;

#[derive(Parser, Debug)]
#[command(
    name = "gsph",
    version,
    about = "Extended persistent homology of weighted digraphs and hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct ComputeArgs {
    /// Highest homology dimension to report.
    #[arg(long, default_value_t = 2)]
    pmax: usize,
    /// Prime modulus of the coefficient field.
    #[arg(long, default_value_t = 2)]
    field: u32,
    /// Reduce every boundary matrix in full instead of clearing paired columns.
    #[arg(long)]
    no_clearing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Extended persistence diagram of a weighted digraph (path homology).
    Pph {
        /// Edge list: `source<TAB>target<TAB>weight` per line.
        input: PathBuf,
        #[command(flatten)]
        compute: ComputeArgs,
        /// Recompute all ranks densely and fail on any disagreement.
        #[arg(long)]
        oracle_check: bool,
        /// Write the diagram here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extended persistence diagram of a hypergraph (embedded homology).
    Hyper {
        /// Hyperedge list: `value<TAB>v1,v2,...` per line.
        input: PathBuf,
        #[command(flatten)]
        compute: ComputeArgs,
        /// Recompute all ranks densely and fail on any disagreement.
        #[arg(long)]
        oracle_check: bool,
        /// Write the diagram here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bottleneck distance between two diagram files, per dimension.
    Distance {
        /// Diagram file as written by `pph` or `hyper`.
        left: PathBuf,
        right: PathBuf,
        /// Report dimensions up to at least this one.
        #[arg(long, default_value_t = 2)]
        pmax: usize,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random perturbation trials checking d_B <= d_E.
    Stability {
        /// Digraph or hypergraph file.
        input: PathBuf,
        #[command(flatten)]
        compute: ComputeArgs,
        /// Largest absolute change applied to each weight.
        #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
        delta: f64,
        /// Number of perturbed copies to compare.
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Base seed; trial `i` uses a seed derived from it and `i`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Input format; `auto` looks at the first data line.
        #[arg(long, value_enum, default_value_t = InputKind::Auto)]
        kind: InputKind,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum InputKind {
    Auto,
    Digraph,
    Hypergraph,
}

enum CliError {
    Input(String),
    Failure(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Failure(_) => EXIT_FAILURE,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Failure(m) => m,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn field(q: u32) -> Result<PrimeField, CliError> {
    PrimeField::new(q).map_err(|e| CliError::Input(format!("--field: {e}")))
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Failure(format!("cannot write output: {e}"))),
    }
}

fn parse_failure(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

/// Interval counts against the dense rank table, every window and dimension.
fn oracle_check(x: &ValuedInput, compute: &ComputeArgs) -> Result<(), CliError> {
    let input = &x.input;
    let bc = extended_barcode(input, compute.pmax, ExtendedReading::BaseRow, !compute.no_clearing)
        .map_err(|e| CliError::Failure(e.to_string()))?;
    let table = extended_module_oracle(input, compute.pmax);
    let m = input.ascending_stages();
    let total = m + input.descending_stages();
    for (p, rows) in table.iter().enumerate() {
        for u in 1..=total {
            for v in u..=total {
                let counted = bc.count_covering(p, m, u, v);
                if counted != rows[u - 1][v - 1] {
                    return Err(CliError::Failure(format!(
                        "oracle mismatch in dimension {p} on stages [{u}, {v}]: {counted} intervals, rank {}",
                        rows[u - 1][v - 1]
                    )));
                }
            }
        }
    }
    Ok(())
}

fn compute_diagram(
    x: &ValuedInput,
    compute: &ComputeArgs,
    check: bool,
) -> Result<ExtendedDiagram, CliError> {
    if check {
        oracle_check(x, compute)?;
    }
    diagram_of(x, compute.pmax, !compute.no_clearing).map_err(|e| CliError::Failure(e.to_string()))
}

fn distance_report(left: &ExtendedDiagram, right: &ExtendedDiagram, pmax: usize) -> String {
    let top = [Some(pmax), left.max_dim(), right.max_dim()]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0);
    let mut out = String::from("dim\td_B\n");
    let mut worst: f64 = 0.0;
    for p in 0..=top {
        let d = bottleneck(left, right, p).distance;
        worst = worst.max(d);
        let _ = writeln!(out, "{p}\t{}", format_distance(d));
    }
    let _ = writeln!(out, "max\t{}", format_distance(worst));
    out
}

fn stability_report(outcomes: &[TrialOutcome]) -> (String, bool) {
    let mut out = String::from("trial\tseed\td_E\td_B\tpass\n");
    let mut passed = 0;
    for (i, o) in outcomes.iter().enumerate() {
        let ok = o.passes(TOLERANCE);
        passed += usize::from(ok);
        let _ = writeln!(
            out,
            "{i}\t{}\t{}\t{}\t{}",
            o.seed,
            o.input_distance,
            format_distance(o.max_bottleneck()),
            if ok { "pass" } else { "FAIL" }
        );
    }
    let _ = writeln!(
        out,
        "# {passed}/{} trials satisfy d_B <= d_E + {TOLERANCE:e}",
        outcomes.len()
    );
    (out, passed == outcomes.len())
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Pph {
            input,
            compute,
            oracle_check,
            out,
        } => {
            let g = parse_digraph(&read(&input)?).map_err(|e| parse_failure(&input, e))?;
            let x = build_pph_input(&g, compute.pmax, field(compute.field)?);
            let d = compute_diagram(&x, &compute, oracle_check)?;
            emit(&out, &format_diagram(&d), stdout)
        }
        Command::Hyper {
            input,
            compute,
            oracle_check,
            out,
        } => {
            let h = parse_hypergraph(&read(&input)?).map_err(|e| parse_failure(&input, e))?;
            let x = build_hyper_input(&h, compute.pmax, field(compute.field)?);
            let d = compute_diagram(&x, &compute, oracle_check)?;
            emit(&out, &format_diagram(&d), stdout)
        }
        Command::Distance {
            left,
            right,
            pmax,
            out,
        } => {
            let a = parse_diagram(&read(&left)?).map_err(|e| parse_failure(&left, e))?;
            let b = parse_diagram(&read(&right)?).map_err(|e| parse_failure(&right, e))?;
            emit(&out, &distance_report(&a, &b, pmax), stdout)
        }
        Command::Stability {
            input,
            compute,
            delta,
            trials,
            seed,
            kind,
            out,
        } => {
            if !(delta.is_finite() && delta >= 0.0) {
                return Err(CliError::Input(format!("--delta must be a finite non-negative number, got {delta}")));
            }
            let text = read(&input)?;
            let kind = match kind {
                InputKind::Auto => match first_record_width(&text) {
                    Some(3) | None => InputKind::Digraph,
                    Some(2) => InputKind::Hypergraph,
                    Some(w) => {
                        return Err(CliError::Input(format!(
                            "{}: cannot tell the input kind from a {w}-field line",
                            input.display()
                        )))
                    }
                },
                k => k,
            };
            let cfg = TrialConfig {
                p_max: compute.pmax,
                field: field(compute.field)?,
                clearing: !compute.no_clearing,
                delta,
            };
            let fail = |e: crate::extended::ExtendedError| CliError::Failure(e.to_string());
            let outcomes: Vec<TrialOutcome> = match kind {
                InputKind::Hypergraph => {
                    let h = parse_hypergraph(&text).map_err(|e| parse_failure(&input, e))?;
                    (0..trials)
                        .map(|i| hyper_stability_trial(&h, cfg, trial_seed(seed, i)).map_err(fail))
                        .collect::<Result<_, _>>()?
                }
                _ => {
                    let g = parse_digraph(&text).map_err(|e| parse_failure(&input, e))?;
                    (0..trials)
                        .map(|i| stability_trial(&g, cfg, trial_seed(seed, i)).map_err(fail))
                        .collect::<Result<_, _>>()?
                }
            };
            let (report, all_pass) = stability_report(&outcomes);
            emit(&out, &report, stdout)?;
            if all_pass {
                Ok(())
            } else {
                Err(CliError::Failure("stability bound violated".into()))
            }
        }
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.code()
        }
    }
}
