//! `tricyclic`: validate, analyze, dualize, encode and search Z2-triple cyclic codes.
//!
//! Reports are plain text: `key=value` lines first, tables after.
//!
//! Exit status: 0 success, 1 invalid spec or other failure, 2 malformed input,
//! 3 enumeration cap exceeded, 4 dual cross-check mismatch.

use std::fmt::Write as _;
use std::fs::{self, OpenOptions};
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tricyclic::dualpair::{self, DualResult};
use tricyclic::linoracle::{self, DEFAULT_CAP};
use tricyclic::search::{self, SearchConfig, SearchMode};
use tricyclic::specfile::{format_spec, parse_spec};
use tricyclic::triplecode::{self, validate};
use tricyclic::{BlockLengths, Error, TripleSpec};

#[derive(Parser, Debug)]
#[command(name = "tricyclic", version, about = "Z2-triple cyclic code toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a spec file against every canonical-form condition.
    Validate { spec: PathBuf },
    /// Parameters, weight distribution, separability and block projections.
    Analyze {
        spec: PathBuf,
        /// Largest dimension enumerated.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_dim: usize,
    },
    /// Generator matrix built from the minimal spanning set.
    Matrix {
        spec: PathBuf,
        /// Print rows as plain bitstrings instead of `r | s | t` blocks.
        #[arg(long)]
        bitstring: bool,
    },
    /// Canonical generators of the dual code.
    Dual {
        spec: PathBuf,
        /// Compute the dual by linear algebra only.
        #[arg(long, conflicts_with = "literal")]
        oracle_only: bool,
        /// Use the unverified literal multiplier formulas.
        #[arg(long)]
        literal: bool,
        /// Compare with the linear-algebra dual; exit 4 on mismatch.
        #[arg(long)]
        cross_check: bool,
    },
    /// Encode a message (one bit per spanning-set row, as 0/1 characters).
    Encode { spec: PathBuf, message: String },
    /// Best minimum distance per dimension at lengths (r, s, t).
    Search {
        /// First block length.
        #[arg(long)]
        r: usize,
        /// Second block length.
        #[arg(long)]
        s: usize,
        /// Third block length.
        #[arg(long)]
        t: usize,
        /// Maximum number of candidate tuples.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        /// Walk the candidate lattice in order, or sample it.
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Seed for random mode.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Only tuples without cross terms.
        #[arg(long)]
        separable_only: bool,
        /// Largest dimension enumerated.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_dim: usize,
        /// Append the results to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Irreducible factors of x^n - 1.
    Factor {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    report: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Io(_) | Error::MessageLength { .. } => 2,
            Error::CapExceeded { .. } => 3,
            Error::DualMismatch { .. } => 4,
            _ => 1,
        };
        Failure {
            code,
            report: format!("error: {e}\n"),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn read_spec(path: &Path) -> Result<TripleSpec, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        report: format!("error: cannot read {}: {e}\n", path.display()),
    })?;
    Ok(parse_spec(&text)?)
}

fn validated(path: &Path) -> Result<TripleSpec, Failure> {
    let spec = read_spec(path)?;
    validate(&spec).into_result()?;
    Ok(spec)
}

fn cmd_validate(path: &Path) -> CmdResult {
    let spec = read_spec(path)?;
    let report = validate(&spec);
    let mut out = format!("valid={}\n", report.is_valid());
    for v in &report.violations {
        writeln!(out, "violation={v}").unwrap();
    }
    if report.is_valid() {
        Ok(out)
    } else {
        Err(Failure { code: 1, report: out })
    }
}

fn cmd_analyze(path: &Path, max_dim: usize) -> CmdResult {
    let spec = validated(path)?;
    let g = triplecode::generator_matrix(&spec)?;
    let dist = linoracle::weight_distribution(&g, max_dim)?;
    let (pr, ps, pt) = triplecode::projections(&spec)?;
    let mut out = format!("{}\n", dist.parameters());
    writeln!(out, "separable={}", triplecode::is_separable(&spec)?).unwrap();
    writeln!(out, "proj_r={pr}\nproj_s={ps}\nproj_t={pt}").unwrap();
    out.push_str("weight count\n");
    for (w, c) in &dist.counts {
        writeln!(out, "{w} {c}").unwrap();
    }
    Ok(out)
}

fn cmd_matrix(path: &Path, bitstring: bool) -> CmdResult {
    let spec = validated(path)?;
    let g = triplecode::generator_matrix(&spec)?;
    let mut out = format!("n={} k={}\n", g.width(), g.nrows());
    if bitstring {
        for row in g.rows() {
            writeln!(out, "{}", row.to_bitstring()).unwrap();
        }
    } else {
        out.push_str(&g.to_block_string());
    }
    Ok(out)
}

fn mismatch(closed: TripleSpec, oracle: TripleSpec) -> Failure {
    let e = Error::DualMismatch {
        closed: Box::new(closed.clone()),
        oracle: Box::new(oracle.clone()),
    };
    let mut f = Failure::from(e);
    f.report = format!(
        "error: dual mismatch\n# formula\n{}# oracle\n{}",
        format_spec(&closed),
        format_spec(&oracle)
    );
    f
}

fn cmd_dual(path: &Path, oracle_only: bool, literal: bool, cross_check: bool) -> CmdResult {
    let spec = validated(path)?;
    if oracle_only {
        let dual = linoracle::dual_oracle(&spec)?;
        return Ok(format!("{}method=oracle\n", format_spec(&dual)));
    }
    if literal {
        let dual = dualpair::literal_dual(&spec).ok_or_else(|| Failure {
            code: 1,
            report: "error: literal multiplier formulas are undefined for this spec\n".into(),
        })?;
        if cross_check {
            let oracle = linoracle::dual_oracle(&spec)?;
            if oracle != dual {
                return Err(mismatch(dual, oracle));
            }
        }
        return Ok(format!("{}method=literal\n", format_spec(&dual)));
    }
    let result: DualResult = dualpair::dual_spec(&spec)?;
    if cross_check {
        let oracle = linoracle::dual_oracle(&spec)?;
        if oracle != result.dual {
            return Err(mismatch(result.dual, oracle));
        }
    }
    let mut out = result.to_text();
    for d in &result.diagnostics {
        writeln!(out, "# {d}").unwrap();
    }
    Ok(out)
}

fn cmd_encode(path: &Path, message: &str) -> CmdResult {
    let spec = validated(path)?;
    let bits = message
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Failure {
                code: 2,
                report: format!("error: message must be 0/1 characters, found '{other}'\n"),
            }),
        })
        .collect::<Result<Vec<bool>, Failure>>()?;
    let word = triplecode::encode(&spec, &bits)?;
    Ok(format!("weight={}\ncodeword={word}\n", word.weight()))
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    lengths: (usize, usize, usize),
    budget: u64,
    mode: Mode,
    seed: u64,
    separable_only: bool,
    max_dim: usize,
    out: Option<&Path>,
) -> CmdResult {
    let lengths = BlockLengths::new(lengths.0, lengths.1, lengths.2)?;
    let config = SearchConfig {
        budget,
        mode: match mode {
            Mode::Exhaustive => SearchMode::Exhaustive,
            Mode::Random => SearchMode::Random { seed },
        },
        separable_only,
        cap: max_dim,
    };
    let outcome = search::best_code_search(lengths, &config)?;
    let text = search::format_records(&outcome, &config);
    if let Some(path) = out {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(Error::from)?;
        file.write_all(text.as_bytes()).map_err(Error::from)?;
    }
    let mut report = format!(
        "visited={} valid={} truncated={} records={}\n",
        outcome.visited,
        outcome.valid,
        outcome.truncated,
        outcome.records.len()
    );
    for rec in &outcome.records {
        writeln!(report, "{rec}").unwrap();
    }
    Ok(report)
}

fn cmd_factor(n: usize) -> CmdResult {
    let factors = search::factor_xn_minus_1(n)?;
    let mut out = format!("n={n} factors={}\n", factors.len());
    for f in factors {
        writeln!(out, "factor={f}").unwrap();
    }
    Ok(out)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Validate { spec } => cmd_validate(&spec),
        Command::Analyze { spec, max_dim } => cmd_analyze(&spec, max_dim),
        Command::Matrix { spec, bitstring } => cmd_matrix(&spec, bitstring),
        Command::Dual {
            spec,
            oracle_only,
            literal,
            cross_check,
        } => cmd_dual(&spec, oracle_only, literal, cross_check),
        Command::Encode { spec, message } => cmd_encode(&spec, &message),
        Command::Search {
            r,
            s,
            t,
            budget,
            mode,
            seed,
            separable_only,
            max_dim,
            out,
        } => cmd_search((r, s, t), budget, mode, seed, separable_only, max_dim, out.as_deref()),
        Command::Factor { n } => cmd_factor(n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code, report }) => {
            if code == 1 && report.starts_with("valid=") {
                print!("{report}");
            } else {
                eprint!("{report}");
            }
            ExitCode::from(code)
        }
    }
}
