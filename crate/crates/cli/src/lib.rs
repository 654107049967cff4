//! Command-line front end. [`run`] takes the full argument vector and writes
//! results to `out` and diagnostics to `err`; it returns the process exit
//! status: 0 on success, 1 on a usage, domain or range error, 2 when a
//! fixture or b-file check finds a mismatch.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use moser_core::collinearity::psi_range;
use moser_core::josephus::{self, JosephusLine};
use moser_core::lattice::{self, Objective};
use moser_core::progressions::{self, VTermPolicy};
use moser_core::sequences::count_primes;
use moser_core::{bfile, decompose, fixtures, Error, SequenceFamily};
use rayon::prelude::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "moser",
    about = "Unique additive representations by Moser-type sequences"
)]
struct Cli {
    /// Worker threads for sweep subcommands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print terms of a sequence family.
    Seq {
        family: FamilyKind,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long)]
        count: usize,
        /// First index to print (default: the family's first index).
        #[arg(long)]
        offset: Option<u64>,
    },
    /// Decompose N as value(k) + r·value(l).
    Decompose {
        family: FamilyKind,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long)]
        n: u64,
    },
    /// Survivor of the back-and-forth elimination.
    Josephus {
        #[arg(long)]
        n: u64,
        /// Print one line per removal: "<step> <L|R> remove <person>".
        #[arg(long)]
        trace: bool,
    },
    /// The orbit V(N), V(V(N)), ... with V(n) = W(n-2).
    Viterate {
        #[arg(long)]
        n: u64,
    },
    /// psi(n) for every odd n <= max.
    Psi {
        #[arg(long)]
        max: u64,
    },
    /// Representations of even numbers as sums of two t-terms.
    Evens {
        #[arg(long)]
        max: u64,
        /// List only the evens with a unique representation, and their density.
        #[arg(long, conflicts_with = "vn")]
        unique: bool,
        /// Print v_1..v_max instead.
        #[arg(long)]
        vn: bool,
        /// Search cap for --vn.
        #[arg(long, default_value_t = 4096)]
        cap: u64,
        #[arg(long, value_enum, default_value_t = PolicyArg::Value)]
        policy: PolicyArg,
    },
    /// The N <-> (k, l) lattice table, or an optimal path through it.
    Lattice {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, value_enum)]
        tsp: Option<TspArg>,
    },
    /// Write or verify b-files.
    Bfile {
        #[command(subcommand)]
        action: BfileAction,
    },
    /// Replay every embedded published term list.
    Verify,
    /// Informational probes.
    Explore {
        #[command(subcommand)]
        probe: ExploreProbe,
    },
}

#[derive(Debug, Subcommand)]
enum BfileAction {
    Export {
        family: FamilyKind,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
    },
    Check {
        family: FamilyKind,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum ExploreProbe {
    /// Count primes and composites among a^(c)(0..count).
    Primes {
        #[arg(long)]
        c: u64,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyKind {
    Moser,
    S,
    Shifted,
    Affine,
    T,
}

#[derive(Debug, Clone, Copy, Args)]
struct FamilyParams {
    #[arg(long, default_value_t = 2)]
    r: u64,
    #[arg(long, default_value_t = 3)]
    c: u64,
    #[arg(long, default_value_t = 1)]
    a: u64,
    #[arg(long, default_value_t = 1)]
    b: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolicyArg {
    Value,
    IndexDistinct,
    IndexRepeat,
}

impl From<PolicyArg> for VTermPolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Value => VTermPolicy::ValueAvoidance,
            PolicyArg::IndexDistinct => VTermPolicy::IndexDistinct,
            PolicyArg::IndexRepeat => VTermPolicy::IndexWithRepetition,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TspArg {
    Min,
    Max,
}

fn family(kind: FamilyKind, p: FamilyParams) -> moser_core::Result<SequenceFamily> {
    let f = match kind {
        FamilyKind::Moser => SequenceFamily::Moser { r: p.r },
        FamilyKind::S => SequenceFamily::S { r: p.r },
        FamilyKind::Shifted => SequenceFamily::ShiftedA { c: p.c },
        FamilyKind::Affine => SequenceFamily::AffineS { a: p.a, b: p.b },
        FamilyKind::T => SequenceFamily::TUnion,
    };
    f.validate()?;
    Ok(f)
}

enum Failure {
    Error(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Mismatch(m) => Failure::Mismatch(m),
            other => Failure::Error(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_ERROR
                }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| execute(cli.command, &mut buf));
    if let Err(e) = out.write_all(&buf) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_ERROR;
    }
    match result {
        Ok(code) => code,
        Err(Failure::Error(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "mismatch: {msg}");
            EXIT_MISMATCH
        }
    }
}

/// Entry point for the binary.
pub fn main_with_stdio() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn execute(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Seq {
            family: kind,
            params,
            count,
            offset,
        } => {
            let f = family(kind, params)?;
            let terms = f.terms_from(offset.unwrap_or(f.offset()), count)?;
            writeln!(out, "{}", join(&terms))?;
        }
        Command::Decompose {
            family: kind,
            params,
            n,
        } => {
            let f = family(kind, params)?;
            let pair = match f {
                SequenceFamily::Moser { r } => decompose::decompose_moser(n, r)?,
                SequenceFamily::S { r } => decompose::decompose_s(n, r)?,
                SequenceFamily::ShiftedA { c } => decompose::decompose_shifted(n, c)?,
                SequenceFamily::AffineS { a, b } => progressions::decompose_affine(n, a, b)?,
                SequenceFamily::TUnion => {
                    return Err(Failure::Error(
                        "the t family has no value(k) + r·value(l) decomposition; use `evens`"
                            .into(),
                    ))
                }
            };
            let (u, v) = pair.values()?;
            let r = f.multiplier().expect("checked above");
            writeln!(
                out,
                "k={} l={} : {u} + {r}*{v} = {}",
                pair.k,
                pair.l,
                pair.recombine()?
            )?;
        }
        Command::Josephus { n, trace } => {
            let mut line = JosephusLine::new(n)?;
            if trace {
                for removal in line.by_ref() {
                    writeln!(out, "{removal}")?;
                }
            }
            let simulated = line.survivor();
            let closed = josephus::survivor_closed(n)?;
            if simulated == closed {
                writeln!(out, "W({n}) = {closed} (simulation = closed form)")?;
            } else {
                writeln!(out, "W({n}): simulation {simulated}, closed form {closed}")?;
                return Err(Failure::Mismatch(format!(
                    "simulation and closed form disagree for N = {n}"
                )));
            }
        }
        Command::Viterate { n } => {
            writeln!(out, "{}", join(&josephus::v_iterate(n)?))?;
        }
        Command::Psi { max } => {
            if max == 0 {
                return Err(Failure::Error("max must be at least 1".into()));
            }
            let top = if max % 2 == 1 { max } else { max - 1 };
            for (j, value) in psi_range(top)?.into_iter().enumerate() {
                writeln!(out, "{} {value}", 2 * j + 1)?;
            }
        }
        Command::Evens {
            max,
            unique,
            vn,
            cap,
            policy,
        } => evens(out, max, unique, vn, cap, policy.into())?,
        Command::Lattice { r, t, tsp } => match tsp {
            None => {
                for (n, p) in lattice::lattice_table(r, t)? {
                    writeln!(out, "{n} {} {}", p.k, p.l)?;
                }
            }
            Some(objective) => {
                let objective = match objective {
                    TspArg::Min => Objective::Min,
                    TspArg::Max => Objective::Max,
                };
                let path = lattice::path_tsp(r, t, objective)?;
                writeln!(out, "order: {}", join(&path.order))?;
                writeln!(out, "length: {:.12}", path.length)?;
            }
        },
        Command::Bfile { action } => match action {
            BfileAction::Export {
                family: kind,
                params,
                count,
                out: path,
            } => {
                let f = family(kind, params)?;
                let records = bfile::records(&f, count)?;
                fs::write(&path, bfile::render(&records))?;
                writeln!(
                    out,
                    "wrote {} terms of {f} to {}",
                    records.len(),
                    path.display()
                )?;
            }
            BfileAction::Check {
                family: kind,
                params,
                input,
            } => {
                let f = family(kind, params)?;
                let text = fs::read_to_string(&input)?;
                let n = bfile::check(&f, &text)?;
                writeln!(out, "ok: {n} records of {f} verified")?;
            }
        },
        Command::Verify => {
            let outcomes = fixtures::verify_all();
            for o in &outcomes {
                let tag = if o.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {}: {}", o.name, o.detail)?;
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            if failed > 0 {
                return Err(Failure::Mismatch(format!(
                    "{failed} of {} fixtures failed",
                    outcomes.len()
                )));
            }
        }
        Command::Explore {
            probe: ExploreProbe::Primes { c, count },
        } => {
            let primes = count_primes(c, count)?;
            writeln!(
                out,
                "a^({c})(0..{count}): {primes} primes, {} composites",
                count - primes
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn evens(
    out: &mut dyn Write,
    max: u64,
    unique: bool,
    vn: bool,
    cap: u64,
    policy: VTermPolicy,
) -> Result<(), Failure> {
    if vn {
        let terms = (1..=max)
            .into_par_iter()
            .map(|n| progressions::v_term(n, cap, policy))
            .collect::<moser_core::Result<Vec<_>>>()?;
        writeln!(out, "{}", join(&terms))?;
    } else if unique {
        let list = progressions::unique_evens(max)?;
        let density = progressions::unique_even_density(max)?;
        writeln!(out, "{}", join(&list))?;
        writeln!(
            out,
            "density: {density} ({:.6})",
            *density.numer() as f64 / *density.denom() as f64
        )?;
    } else {
        let sets = (1..=max / 2)
            .into_par_iter()
            .map(|j| progressions::even_representations(2 * j, max))
            .collect::<moser_core::Result<Vec<_>>>()?;
        for set in sets {
            let pairs: Vec<String> = set.pairs.iter().map(|(u, v)| format!("{u}+{v}")).collect();
            writeln!(out, "{}: {}", set.target, pairs.join(" "))?;
        }
    }
    Ok(())
}
