//! The `staircase` command-line interface.
//!
//! Every subcommand runs one library operation, writes a JSON report to
//! standard output and a one-line summary to standard error. Exit codes:
//! 0 on success or a passing check, 1 on a failing check, 2 on usage,
//! input or domain errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chains::{self, IdealFamily};
use crate::decomposition;
use crate::error::Error;
use crate::fibers::{self, AtomicMode, FiberAtlas};
use crate::hilbert::{self, Grading};
use crate::lattice::FiberMatrix;
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::posetlab::{self, FiniteOrderIdeal, PointListJson, XElem};

/// Seed used by randomized commands when neither `--seed` nor
/// `STAIRCASE_SEED` is given.
pub const DEFAULT_SEED: u64 = 20_000_101;

#[derive(Debug, Parser)]
#[command(
    name = "staircase",
    version,
    about = "Exact monomial-ideal combinatorics and integer-matrix fiber analysis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lattice operations on a monomial ideal (membership, containment, sum,
    /// intersection, colon, standard monomials).
    Ideal(IdealArgs),
    /// Irreducible or primary decomposition and associated primes of a
    /// monomial ideal.
    Decompose(DecomposeArgs),
    /// Hilbert series numerator and graded Hilbert function of S/I.
    Hilbert(HilbertArgs),
    /// Search a family of ideals for a pair I ⊆ J (antichain test).
    Antichain(FamilyArgs),
    /// Longest strictly descending chain in a family of ideals, and the
    /// standard-trace and associated-prime partitions.
    Chain(ChainArgs),
    /// Lattice points and hull vertices of the fiber {u : Au = b}; optional
    /// decomposition and atomicity tests.
    Fiber(FiberArgs),
    /// List atomic fibers among degrees Au with |u| <= bound.
    AtomicScan(ScanArgs),
    /// Strong SAGBI generators k_b x^b of the monomial algebra generated by
    /// c_i x^{a_i}.
    Sagbi(SagbiArgs),
    /// Truncated vertex ideal: exponents that are hull vertices of their
    /// fiber, and the minimal non-vertices.
    VertexIdeal(VertexIdealArgs),
    /// Lift a monomial ideal of a monoid algebra k[NG] to k[x_1..x_d].
    Lift(LiftArgs),
    /// Checks on the poset {(i,j) : i < j} and its dual order ideals.
    Posetx(PosetArgs),
    /// Complement bijection between finite order ideals of N^n and
    /// artinian monomial ideals.
    Young(YoungArgs),
    /// Reproduce the 4x6 matrix whose fiber decomposes as a polytope but
    /// not as a lattice point set.
    Example35,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum IdealOp {
    Minimalize,
    Member,
    Contains,
    Sum,
    Intersect,
    Quotient,
    Artinian,
    Standard,
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    /// Ideal file `{"vars": n, "gens": [[...], ...]}`.
    #[arg(short = 'I', long = "ideal")]
    pub ideal: PathBuf,
    #[arg(long, value_enum, default_value = "minimalize")]
    pub op: IdealOp,
    /// Second ideal for contains, sum and intersect.
    #[arg(short = 'J', long = "other")]
    pub other: Option<PathBuf>,
    /// Exponent vector for member and quotient, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub monomial: Option<Vec<u64>>,
    /// Total-degree bound for standard monomials of non-artinian ideals.
    #[arg(long)]
    pub bound: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DecomposeKind {
    Primary,
    Irreducible,
    Primes,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(short = 'I', long = "ideal")]
    pub ideal: PathBuf,
    #[arg(long, value_enum, default_value = "primary")]
    pub kind: DecomposeKind,
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    #[arg(short = 'I', long = "ideal")]
    pub ideal: PathBuf,
    /// Grading matrix file; defaults to the fine grading.
    #[arg(short = 'D', long = "grading")]
    pub grading: Option<PathBuf>,
    /// Emit the Hilbert function for every degree b with |b| <= this bound.
    #[arg(long)]
    pub table: Option<u64>,
    /// Compare Hilbert functions with this ideal through `--table` (default 10).
    #[arg(long)]
    pub compare: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// JSON list of ideals.
    #[arg(short = 'F', long = "family", conflicts_with_all = ["random", "staircase"])]
    pub family: Option<PathBuf>,
    /// Generate this many random ideals instead of reading a file.
    #[arg(long)]
    pub random: Option<usize>,
    /// Variables for random ideals.
    #[arg(long, default_value_t = 2)]
    pub vars: usize,
    /// Use the family {<x^a, y^b> : a + b = K, a, b >= 1}.
    #[arg(long)]
    pub staircase: Option<u64>,
    /// Seed for `--random`.
    #[arg(long, env = "STAIRCASE_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Artinian pivot ideal: also partition by standard-monomial trace.
    #[arg(long)]
    pub pivot: Option<PathBuf>,
    /// Also partition by associated primes.
    #[arg(long)]
    pub primes: bool,
}

#[derive(Debug, Args)]
pub struct FiberArgs {
    /// Matrix file `{"rows": d, "cols": n, "entries": [[...], ...]}`.
    #[arg(short = 'A', long = "matrix")]
    pub matrix: PathBuf,
    #[arg(short = 'b', long = "degree", value_delimiter = ',', required = true)]
    pub degree: Vec<u64>,
    /// Monomial ideal M for (M, A) fibers; defaults to the zero ideal.
    #[arg(long = "ideal")]
    pub ideal: Option<PathBuf>,
    /// Test the split b = b1 + (b - b1) in both senses.
    #[arg(long, value_delimiter = ',')]
    pub split: Option<Vec<u64>>,
    /// Test atomicity in both senses.
    #[arg(long)]
    pub atomic: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ScanMode {
    Vertex,
    Lattice,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(short = 'A', long = "matrix")]
    pub matrix: PathBuf,
    #[arg(long)]
    pub bound: u64,
    #[arg(long, value_enum, default_value = "vertex")]
    pub mode: ScanMode,
    /// Ideal M for lattice mode; defaults to the zero ideal.
    #[arg(long = "ideal")]
    pub ideal: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
}

#[derive(Debug, Args)]
pub struct SagbiArgs {
    #[arg(short = 'A', long = "matrix")]
    pub matrix: PathBuf,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    pub coeffs: Vec<i64>,
    #[arg(long)]
    pub bound: u64,
}

#[derive(Debug, Args)]
pub struct VertexIdealArgs {
    #[arg(short = 'A', long = "matrix")]
    pub matrix: PathBuf,
    #[arg(long)]
    pub bound: u64,
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    /// Monoid generator matrix; column i is the exponent of t^{a_i}.
    #[arg(short = 'G', long = "generators")]
    pub generators: PathBuf,
    /// Generator degree of the monoid ideal, comma separated; repeatable.
    #[arg(long = "degree", value_delimiter = ',', num_args = 1)]
    pub degrees: Vec<String>,
    #[arg(long)]
    pub bound: u64,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PosetArgs {
    /// Check that S_1, ..., S_L are pairwise incomparable.
    #[arg(long)]
    pub check_antichain: Option<u64>,
    /// Check every element with j <= J has at most j - 1 elements below it
    /// in any chain.
    #[arg(long)]
    pub chain_bound: Option<u64>,
    /// Check the partial-order axioms on elements with j <= J.
    #[arg(long)]
    pub check_order: Option<u64>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct YoungArgs {
    /// Order ideal file `{"vars": n, "points": [[...], ...]}`.
    #[arg(long)]
    pub to_ideal: Option<PathBuf>,
    /// Artinian ideal file.
    #[arg(long)]
    pub to_order_ideal: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The result of one invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<Status>,
    pub payload: Value,
    /// Reported on standard error only, so standard output is reproducible.
    #[serde(skip)]
    pub duration: Duration,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Some(Status::Fail) => 1,
            _ => 0,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error("{0}")]
    Domain(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn random_family(count: usize, vars: usize, seed: u64) -> CliResult<Vec<MonomialIdeal>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=3);
            // resample the constant monomial so no member is the unit ideal
            let gens: Vec<Vec<u64>> = (0..k)
                .map(|_| loop {
                    let g: Vec<u64> = (0..vars).map(|_| rng.gen_range(0..=4)).collect();
                    if g.iter().any(|&e| e > 0) {
                        break g;
                    }
                })
                .collect();
            Ok(MonomialIdeal::new(vars, gens)?)
        })
        .collect()
}

fn load_family(args: &FamilyArgs) -> CliResult<IdealFamily> {
    if let Some(path) = &args.family {
        let ideals: Vec<MonomialIdeal> = read_json(path)?;
        return IdealFamily::from_ideals(ideals).map_err(|e| CliError::Input {
            path: path.display().to_string(),
            message: e.to_string(),
        });
    }
    if let Some(k) = args.staircase {
        return Ok(chains::staircase_antichain(k)?);
    }
    if let Some(n) = args.random {
        return Ok(IdealFamily::new(args.vars, random_family(n, args.vars, args.seed)?)?);
    }
    Err(CliError::Usage(
        "one of --family, --random or --staircase is required".into(),
    ))
}

fn check_len(what: &str, expected: usize, v: &[u64]) -> CliResult<()> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{what}: expected {expected} entries, found {}",
            v.len()
        )))
    }
}

fn verdict(ok: bool) -> Option<Status> {
    Some(if ok { Status::Pass } else { Status::Fail })
}

fn run_ideal(args: &IdealArgs) -> CliResult<(Value, Option<Status>)> {
    let ideal: MonomialIdeal = read_json(&args.ideal)?;
    let other = || -> CliResult<MonomialIdeal> {
        match &args.other {
            Some(p) => read_json(p),
            None => Err(CliError::Usage("this operation needs -J".into())),
        }
    };
    let monomial = || -> CliResult<ExponentVector> {
        match &args.monomial {
            Some(m) => Ok(ExponentVector::new(m.clone())),
            None => Err(CliError::Usage("this operation needs --monomial".into())),
        }
    };
    let payload = match args.op {
        IdealOp::Minimalize => to_value(&ideal),
        IdealOp::Member => json!({ "member": ideal.member(&monomial()?)? }),
        IdealOp::Contains => json!({ "contains": ideal.contains(&other()?)? }),
        IdealOp::Sum => to_value(&ideal.sum(&other()?)?),
        IdealOp::Intersect => to_value(&ideal.intersect(&other()?)?),
        IdealOp::Quotient => to_value(&ideal.quotient(&monomial()?)?),
        IdealOp::Artinian => json!({ "artinian": ideal.is_artinian() }),
        IdealOp::Standard => match args.bound {
            Some(b) => to_value(&ideal.standard_monomials_up_to(b)),
            None => to_value(&ideal.standard_monomials()?),
        },
    };
    Ok((payload, None))
}

fn run_decompose(args: &DecomposeArgs) -> CliResult<(Value, Option<Status>)> {
    let ideal: MonomialIdeal = read_json(&args.ideal)?;
    let payload = match args.kind {
        DecomposeKind::Primary => Value::Array(
            decomposition::primary_decomposition(&ideal)?
                .iter()
                .map(|c| json!({ "tau": c.prime.tau(), "gens": c.component.gens() }))
                .collect(),
        ),
        DecomposeKind::Irreducible => to_value(&decomposition::irreducible_decomposition(&ideal)?),
        DecomposeKind::Primes => Value::Array(
            decomposition::associated_primes(&ideal)?
                .iter()
                .map(|p| json!({ "tau": p.tau(), "generators": p.generators() }))
                .collect(),
        ),
    };
    Ok((payload, None))
}

fn run_hilbert(args: &HilbertArgs) -> CliResult<(Value, Option<Status>)> {
    let ideal: MonomialIdeal = read_json(&args.ideal)?;
    let grading = match &args.grading {
        Some(p) => Grading::new(read_json::<FiberMatrix>(p)?),
        None => Grading::fine(ideal.vars()),
    };
    let mut payload = serde_json::Map::new();
    if !ideal.is_unit() {
        let numerator = hilbert::hilbert_numerator(&ideal)?;
        payload.insert("numerator".into(), to_value(&numerator));
        if args.grading.is_some() {
            payload.insert("graded_numerator".into(), to_value(&numerator.coarsen(&grading)?));
        }
    }
    if let Some(bound) = args.table {
        payload.insert(
            "table".into(),
            to_value(&hilbert::hilbert_table(&ideal, &grading, bound)?),
        );
    }
    if let Some(path) = &args.compare {
        let other: MonomialIdeal = read_json(path)?;
        let bound = args.table.unwrap_or(10);
        let same = hilbert::same_hilbert_up_to(&ideal, &other, &grading, bound)?;
        payload.insert("same_hilbert".into(), json!({ "bound": bound, "equal": same }));
    }
    Ok((Value::Object(payload), None))
}

fn run_antichain(args: &FamilyArgs) -> CliResult<(Value, Option<Status>)> {
    let family = load_family(args)?;
    let pair = chains::find_comparable_pair(&family);
    Ok((
        json!({
            "size": family.len(),
            "antichain": pair.is_none(),
            "witness": pair.map(|(i, j)| [i, j]),
        }),
        None,
    ))
}

fn run_chain(args: &ChainArgs) -> CliResult<(Value, Option<Status>)> {
    let family = load_family(&args.family)?;
    let mut payload = serde_json::Map::new();
    payload.insert("size".into(), json!(family.len()));
    payload.insert("chain".into(), json!(chains::extract_descending_chain(&family)));
    if let Some(path) = &args.pivot {
        let pivot: MonomialIdeal = read_json(path)?;
        payload.insert(
            "trace_partition".into(),
            json!(chains::refine_by_standard_trace(&family, &pivot)?),
        );
    }
    if args.primes {
        payload.insert(
            "prime_partition".into(),
            json!(chains::group_by_associated_primes(&family)?),
        );
    }
    Ok((Value::Object(payload), None))
}

fn run_fiber(args: &FiberArgs) -> CliResult<(Value, Option<Status>)> {
    let matrix: FiberMatrix = read_json(&args.matrix)?;
    check_len("--degree", matrix.rows(), &args.degree)?;
    let m = match &args.ideal {
        Some(p) => read_json(p)?,
        None => MonomialIdeal::zero(matrix.cols()),
    };
    let atlas = FiberAtlas::new(&matrix);
    let b = ExponentVector::new(args.degree.clone());
    let fiber = atlas.fiber(&b)?;
    let mut payload = serde_json::Map::new();
    payload.insert("fiber".into(), to_value(&*fiber));
    if args.ideal.is_some() {
        payload.insert("ma_fiber".into(), to_value(&atlas.ma_fiber(&m, &b)?));
    }
    if let Some(b1) = &args.split {
        check_len("--split", matrix.rows(), b1)?;
        let b1 = ExponentVector::new(b1.clone());
        let b2 = b.checked_sub(&b1).ok_or_else(|| {
            CliError::Usage("--split must be componentwise at most --degree".into())
        })?;
        payload.insert(
            "split".into(),
            json!({
                "b1": b1,
                "b2": b2,
                "minkowski_decomposes": atlas.minkowski_decomposes(&b, &b1, &b2)?,
                "lattice": atlas.ma_decomposes(&m, &b, &b1, &b2)?,
            }),
        );
    }
    if args.atomic {
        payload.insert("vertex_atomic".into(), json!(atlas.is_atomic(&b)?));
        payload.insert("lattice_atomic".into(), json!(atlas.is_ma_atomic(&m, &b)?));
    }
    Ok((Value::Object(payload), None))
}

fn run_scan(args: &ScanArgs) -> CliResult<(Value, Option<Status>)> {
    let matrix: FiberMatrix = read_json(&args.matrix)?;
    let mode = match args.mode {
        ScanMode::Vertex => AtomicMode::Vertex,
        ScanMode::Lattice => AtomicMode::Lattice(match &args.ideal {
            Some(p) => read_json(p)?,
            None => MonomialIdeal::zero(matrix.cols()),
        }),
    };
    let found = fibers::atomic_scan_with_workers(&matrix, args.bound, &mode, args.workers.max(1))?;
    Ok((to_value(&found), None))
}

fn run_sagbi(args: &SagbiArgs) -> CliResult<(Value, Option<Status>)> {
    let matrix: FiberMatrix = read_json(&args.matrix)?;
    let gens = fibers::sagbi_generators(&matrix, &args.coeffs, args.bound)?;
    Ok((to_value(&gens), None))
}

fn run_vertex_ideal(args: &VertexIdealArgs) -> CliResult<(Value, Option<Status>)> {
    let matrix: FiberMatrix = read_json(&args.matrix)?;
    Ok((
        json!({
            "bound": args.bound,
            "standard": fibers::vertex_ideal_standard(&matrix, args.bound)?,
            "gens": fibers::vertex_ideal_gens_truncated(&matrix, args.bound)?,
        }),
        None,
    ))
}

fn run_lift(args: &LiftArgs) -> CliResult<(Value, Option<Status>)> {
    let g: FiberMatrix = read_json(&args.generators)?;
    // each --degree value is one vector; clap splits on ',' so regroup by rows
    let flat: Vec<u64> = args
        .degrees
        .iter()
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|e| CliError::Usage(format!("--degree: {s:?}: {e}")))
        })
        .collect::<CliResult<_>>()?;
    if !flat.len().is_multiple_of(g.rows()) {
        return Err(CliError::Usage(format!(
            "--degree: each degree needs {} entries",
            g.rows()
        )));
    }
    let degrees: Vec<ExponentVector> = flat
        .chunks(g.rows())
        .map(|c| ExponentVector::new(c.to_vec()))
        .collect();
    Ok((to_value(&fibers::monoid_lift(&g, &degrees, args.bound)?), None))
}

fn run_posetx(args: &PosetArgs) -> CliResult<(Value, Option<Status>)> {
    if let Some(l) = args.check_antichain {
        let ok = posetlab::verify_s_antichain(l);
        return Ok((json!({ "check": "s-antichain", "max_l": l, "antichain": ok }), verdict(ok)));
    }
    if let Some(max_j) = args.chain_bound {
        let mut worst: Vec<Value> = Vec::new();
        let mut ok = true;
        for p in posetlab::ground_set(max_j) {
            let h = posetlab::descending_chain_max(p);
            if h > p.j() - 1 {
                ok = false;
                worst.push(json!({ "elem": p, "below": h }));
            }
        }
        let heights: Vec<Value> = (1..=max_j)
            .map(|j| {
                let h = (0..j)
                    .map(|i| posetlab::descending_chain_max(XElem::new(i, j).expect("i < j")))
                    .max()
                    .unwrap_or(0);
                json!({ "j": j, "max_below": h })
            })
            .collect();
        return Ok((
            json!({ "check": "chain-bound", "max_j": max_j, "heights": heights, "violations": worst }),
            verdict(ok),
        ));
    }
    if let Some(max_j) = args.check_order {
        let violation = posetlab::check_partial_order(max_j);
        let ok = violation.is_none();
        return Ok((
            json!({ "check": "partial-order", "max_j": max_j, "violation": violation }),
            verdict(ok),
        ));
    }
    Err(CliError::Usage("posetx needs a check flag".into()))
}

fn run_young(args: &YoungArgs) -> CliResult<(Value, Option<Status>)> {
    if let Some(path) = &args.to_ideal {
        let raw: PointListJson = read_json(path)?;
        let order = FiniteOrderIdeal::try_from(raw).map_err(|e| CliError::Input {
            path: path.display().to_string(),
            message: format!("points: {e}"),
        })?;
        return Ok((to_value(&posetlab::young_complement(&order)), None));
    }
    if let Some(path) = &args.to_order_ideal {
        let ideal: MonomialIdeal = read_json(path)?;
        let order = posetlab::young_cocomplement(&ideal)?;
        return Ok((to_value(&PointListJson::from(&order)), None));
    }
    Err(CliError::Usage("young needs --to-ideal or --to-order-ideal".into()))
}

fn run_example35() -> CliResult<(Value, Option<Status>)> {
    let report = fibers::demo::run()?;
    let ok = report.passed();
    Ok((to_value(&report), verdict(ok)))
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Ideal(_) => "ideal",
        Command::Decompose(_) => "decompose",
        Command::Hilbert(_) => "hilbert",
        Command::Antichain(_) => "antichain",
        Command::Chain(_) => "chain",
        Command::Fiber(_) => "fiber",
        Command::AtomicScan(_) => "atomic-scan",
        Command::Sagbi(_) => "sagbi",
        Command::VertexIdeal(_) => "vertex-ideal",
        Command::Lift(_) => "lift",
        Command::Posetx(_) => "posetx",
        Command::Young(_) => "young",
        Command::Example35 => "example35",
    }
}

/// Executes an already parsed command.
pub fn dispatch(cli: &Cli) -> CliResult<RunReport> {
    let start = Instant::now();
    let (payload, status) = match &cli.command {
        Command::Ideal(a) => run_ideal(a)?,
        Command::Decompose(a) => run_decompose(a)?,
        Command::Hilbert(a) => run_hilbert(a)?,
        Command::Antichain(a) => run_antichain(a)?,
        Command::Chain(a) => run_chain(a)?,
        Command::Fiber(a) => run_fiber(a)?,
        Command::AtomicScan(a) => run_scan(a)?,
        Command::Sagbi(a) => run_sagbi(a)?,
        Command::VertexIdeal(a) => run_vertex_ideal(a)?,
        Command::Lift(a) => run_lift(a)?,
        Command::Posetx(a) => run_posetx(a)?,
        Command::Young(a) => run_young(a)?,
        Command::Example35 => run_example35()?,
    };
    Ok(RunReport {
        command: command_name(&cli.command).to_string(),
        status,
        payload,
        duration: start.elapsed(),
    })
}

/// Parses `argv` (including the program name) and runs it.
pub fn run<I, T>(argv: I) -> CliResult<RunReport>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Usage(e.to_string()))?;
    dispatch(&cli)
}

/// Captured output of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs `argv` and renders standard output, standard error and exit code.
pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Outcome { stdout, stderr, code };
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            let mut stdout = serde_json::to_string(&report).expect("report serializes");
            stdout.push('\n');
            let status = match report.status {
                Some(Status::Pass) => " pass",
                Some(Status::Fail) => " FAIL",
                None => "",
            };
            let stderr = format!(
                "{}:{} ({:.3}s)\n",
                report.command,
                status,
                report.duration.as_secs_f64()
            );
            Outcome {
                stdout,
                stderr,
                code: report.exit_code(),
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        },
    }
}
