//! Command-line front end: `generate`, `verify`, `solve`, `simulate`,
//! `bounds` and `probe-conjecture`.
//!
//! Exit codes: 0 success, 2 a check came out false (or a conjecture
//! violation / illegal strategy move), 3 precondition or usage error,
//! 4 resource cap, 1 anything else (I/O).

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{bounds_report_with, Family, Subject};
use crate::error::{Error, Result};
use crate::graphs::{path_subcube, read_graph, to_text, BitLabel, Generators, LabeledGraph};
use crate::solver::{cop_number_exact_with, CopNumber, SolverConfig};
use crate::strategies::{
    simulate, BlockCopStrategy, CopStrategy, EvasionRobber, GreedyCops, GreedyEvader, RandomCops,
    RandomRobber, RobberStrategy, SolverCops, SolverRobber,
};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "cubecops", version, about = "Cops and Robbers on partial cubes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a family member in the graph text format.
    Generate(GenerateArgs),
    /// Run structural checks on a graph.
    Verify(VerifyArgs),
    /// Exact cop number by backward induction.
    Solve(SolveArgs),
    /// Play one seeded game and print its trace.
    Simulate(SimulateArgs),
    /// Closed-form bounds, optionally with the exact value.
    Bounds(BoundsArgs),
    /// Exhaustive check of `c ≤ ⌈(n+1)/2⌉` on small partial cubes.
    ProbeConjecture(ProbeArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    Fibonacci,
    Lucas,
    Hypercube,
    /// Path on `n` vertices, labeled as a subcube of `Q_{n-1}`.
    Path,
}

impl FamilyArg {
    fn generate(self, n: usize) -> Result<LabeledGraph> {
        let gens = Generators::default();
        match self {
            FamilyArg::Fibonacci => gens.fibonacci_cube(n),
            FamilyArg::Lucas => gens.lucas_cube(n),
            FamilyArg::Hypercube => gens.hypercube(n),
            FamilyArg::Path => path_subcube(n),
        }
    }
}

/// A graph given either as a file or as a family member.
#[derive(Args, Debug, Clone)]
pub struct GraphArgs {
    /// Graph file in the text format.
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,
    #[arg(long, requires = "n")]
    pub family: Option<FamilyArg>,
    #[arg(long)]
    pub n: Option<usize>,
}

impl GraphArgs {
    fn load(&self) -> Result<LabeledGraph> {
        match (&self.graph, self.family, self.n) {
            (Some(path), None, None) => read_graph(path),
            (None, Some(f), Some(n)) => f.generate(n),
            _ => Err(Error::Precondition("give either --graph FILE or --family F --n N".into())),
        }
    }
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: usize,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckArg {
    PartialCube,
    Median,
    Lemma31,
    TwoBall,
}

impl CheckArg {
    fn name(self) -> &'static str {
        match self {
            CheckArg::PartialCube => "partial-cube",
            CheckArg::Median => "median",
            CheckArg::Lemma31 => "lemma31",
            CheckArg::TwoBall => "two-ball",
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Checks to run (comma separated); all of them by default.
    #[arg(long = "check", value_delimiter = ',')]
    pub checks: Vec<CheckArg>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, default_value_t = 3)]
    pub k_max: usize,
    /// Solver table cap in MiB.
    #[arg(long, default_value_t = 2048)]
    pub memory_cap_mib: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CopsArg {
    Greedy,
    Random,
    Solver,
    #[value(name = "blocks3")]
    Blocks3,
    #[value(name = "blocks4")]
    Blocks4,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RobberArg {
    Random,
    GreedyEvader,
    #[value(name = "thm31-evasion")]
    Thm31Evasion,
    Solver,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long)]
    pub cops: CopsArg,
    #[arg(long)]
    pub robber: RobberArg,
    /// Number of cops; block strategies use `⌈n/w⌉` and reject other values.
    #[arg(long)]
    pub k: Option<usize>,
    /// Round cutoff, `50·|V|` by default.
    #[arg(long)]
    pub rounds: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Trace file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundsFamilyArg {
    Fibonacci,
    Lucas,
    Hypercube,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long, requires = "n", conflicts_with = "graph")]
    pub family: Option<BoundsFamilyArg>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Custom graph file instead of a family.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Also run the exact solver.
    #[arg(long)]
    pub exact: bool,
    #[arg(long, default_value_t = 4)]
    pub k_max: usize,
}

#[derive(Args, Debug)]
pub struct ProbeArgs {
    #[arg(long, default_value_t = 3)]
    pub n_max: usize,
    /// Largest cop count handed to the solver.
    #[arg(long, default_value_t = 3)]
    pub k_budget: usize,
    /// Where to write the first violating graph, if any.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

/// Whether a command's verdict was positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    False,
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::IllegalMove { .. } | Error::IllegalLabel { .. } => 2,
        Error::DimensionCap { .. } | Error::MemoryCap { .. } | Error::Budget(_) => 4,
        Error::Io(_) => 1,
        _ => 3,
    }
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status> {
    match &cli.command {
        Command::Generate(a) => cmd_generate(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Solve(a) => cmd_solve(a, out),
        Command::Simulate(a) => cmd_simulate(a, out),
        Command::Bounds(a) => cmd_bounds(a, out),
        Command::ProbeConjecture(a) => cmd_probe_conjecture(a, out),
    }
}

pub fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<Status> {
    let g = a.family.generate(a.n)?;
    emit(out, a.out.as_ref(), &to_text(&g))?;
    Ok(Status::Ok)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<Status> {
    let g = a.graph.load()?;
    let checks = if a.checks.is_empty() {
        vec![CheckArg::PartialCube, CheckArg::Median, CheckArg::Lemma31, CheckArg::TwoBall]
    } else {
        a.checks.clone()
    };
    let mut all = true;
    for c in checks {
        let (verdict, line) = match c {
            CheckArg::PartialCube => {
                let r = verify::verify_isometric_in_hypercube(&g)?;
                (r.verdict, r.to_string())
            }
            CheckArg::Median => {
                let r = verify::is_median(&g)?;
                (r.verdict, r.to_string())
            }
            CheckArg::Lemma31 => {
                let r = verify::check_lemma31(&g)?;
                (r.report.verdict, r.to_string())
            }
            CheckArg::TwoBall => {
                let r = verify::two_ball_center(&g)?;
                (r.report.verdict, r.to_string())
            }
        };
        all &= verdict;
        writeln!(out, "check={} {line}", c.name())?;
    }
    Ok(if all { Status::Ok } else { Status::False })
}

pub fn cmd_solve(a: &SolveArgs, out: &mut dyn Write) -> Result<Status> {
    let g = a.graph.load()?;
    let config = SolverConfig {
        memory_cap_bytes: a.memory_cap_mib << 20,
    };
    let c = cop_number_exact_with(&g, a.k_max, &config)?;
    writeln!(out, "cop_number={c}")?;
    Ok(Status::Ok)
}

fn block_width(c: CopsArg) -> Option<usize> {
    match c {
        CopsArg::Blocks3 => Some(3),
        CopsArg::Blocks4 => Some(4),
        _ => None,
    }
}

pub fn cmd_simulate(a: &SimulateArgs, out: &mut dyn Write) -> Result<Status> {
    let g = a.graph.load()?;
    let config = SolverConfig::default();
    let k = match block_width(a.cops) {
        Some(w) => {
            let k = g.dimension().div_ceil(w);
            if a.k.is_some_and(|given| given != k) {
                return Err(Error::Precondition(format!("blocks{w} on dimension {} uses exactly {k} cops", g.dimension())));
            }
            k
        }
        None => a.k.unwrap_or(1),
    };
    if k == 0 {
        return Err(Error::Precondition("at least one cop is required".into()));
    }
    let mut cops: Box<dyn CopStrategy> = match a.cops {
        CopsArg::Greedy => Box::new(GreedyCops::new(k)),
        CopsArg::Random => Box::new(RandomCops::new(k)),
        CopsArg::Solver => Box::new(SolverCops::new(&g, k, &config)?),
        CopsArg::Blocks3 => Box::new(BlockCopStrategy::new(&g, 3)?),
        CopsArg::Blocks4 => Box::new(BlockCopStrategy::new(&g, 4)?),
    };
    let mut robber: Box<dyn RobberStrategy> = match a.robber {
        RobberArg::Random => Box::new(RandomRobber),
        RobberArg::GreedyEvader => Box::new(GreedyEvader),
        RobberArg::Thm31Evasion => Box::new(EvasionRobber::new(&g, k)?),
        RobberArg::Solver => Box::new(SolverRobber::new(&g, k, &config)?),
    };
    let rounds = a.rounds.unwrap_or(50 * g.num_vertices());
    let trace = simulate(&g, cops.as_mut(), robber.as_mut(), rounds, a.seed)?;
    let log = trace.to_log(&g);
    emit(out, a.out.as_ref(), &log)?;
    if a.out.is_some() {
        writeln!(out, "outcome={}", trace.outcome)?;
    }
    Ok(Status::Ok)
}

pub fn cmd_bounds(a: &BoundsArgs, out: &mut dyn Write) -> Result<Status> {
    let config = SolverConfig::default();
    let owned;
    let subject = match (a.family, a.n, &a.graph) {
        (Some(f), Some(n), None) => {
            let f = match f {
                BoundsFamilyArg::Fibonacci => Family::Fibonacci,
                BoundsFamilyArg::Lucas => Family::Lucas,
                BoundsFamilyArg::Hypercube => Family::Hypercube,
            };
            Subject::Family(f, n)
        }
        (None, None, Some(p)) => {
            owned = read_graph(p)?;
            Subject::Custom(&owned)
        }
        _ => return Err(Error::Precondition("give either --family F --n N or --graph FILE".into())),
    };
    let rep = bounds_report_with(subject, a.exact, a.k_max, &config)?;
    writeln!(out, "{rep}")?;
    Ok(Status::Ok)
}

/// One isomorphism class found by the conjecture probe.
#[derive(Clone, Debug)]
pub struct ProbeRow {
    pub graph: LabeledGraph,
    /// Number of coordinates that vary across the labels.
    pub dim: usize,
    pub cop_number: usize,
    pub bound: usize,
}

impl ProbeRow {
    pub fn holds(&self) -> bool {
        self.cop_number <= self.bound
    }
}

#[derive(Clone, Debug, Default)]
pub struct ProbeReport {
    pub rows: Vec<ProbeRow>,
}

impl ProbeReport {
    pub fn violations(&self) -> impl Iterator<Item = &ProbeRow> {
        self.rows.iter().filter(|r| !r.holds())
    }
}

/// Images of every vertex of `Q_n` under each coordinate permutation
/// combined with each coordinate flip.
fn hyperoctahedral_images(n: usize) -> Vec<Vec<usize>> {
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for i in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..=p.len()).map(move |at| {
                    let mut q = p.clone();
                    q.insert(at, i);
                    q
                })
            })
            .collect();
    }
    let mut out = Vec::with_capacity(perms.len() << n);
    for p in &perms {
        for flip in 0..1usize << n {
            let img = (0..1usize << n)
                .map(|v| (0..n).fold(0, |acc, b| acc | ((v >> b) & 1) << p[b]) ^ flip)
                .collect();
            out.push(img);
        }
    }
    out
}

/// Canonical representatives of non-empty vertex subsets of `Q_n` up to
/// cube automorphisms, as bitmasks over `0..2^n`.
fn canonical_subsets(n: usize) -> BTreeSet<u64> {
    let images = hyperoctahedral_images(n);
    let total = 1u64 << (1usize << n);
    let mut reps = BTreeSet::new();
    for mask in 1..total {
        let canon = images
            .iter()
            .map(|img| {
                (0..1usize << n)
                    .filter(|&v| mask >> v & 1 == 1)
                    .fold(0u64, |acc, v| acc | 1 << img[v])
            })
            .min()
            .unwrap_or(mask);
        if canon == mask {
            reps.insert(mask);
        }
    }
    reps
}

/// Solves every partial cube in `Q_{n_max}` up to cube symmetry and compares
/// its cop number with `⌈(d+1)/2⌉` for its isometric dimension `d`.
pub fn probe_conjecture(n_max: usize, k_budget: usize) -> Result<ProbeReport> {
    if n_max > 4 {
        return Err(Error::Precondition(format!("exhaustive probe supports n_max <= 4, got {n_max}")));
    }
    let config = SolverConfig::default();
    let mut rows = Vec::new();
    for mask in canonical_subsets(n_max) {
        let labels: Vec<BitLabel> = (0..1u64 << n_max)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| BitLabel::new(v, n_max))
            .collect();
        let g = LabeledGraph::induced(n_max, labels.iter().copied())?;
        if !g.is_connected() || !verify::verify_isometric_in_hypercube(&g)?.verdict {
            continue;
        }
        let varying = labels.iter().fold(0u64, |acc, l| acc | (l.bits() ^ labels[0].bits()));
        let dim = varying.count_ones() as usize;
        let bound = (dim + 1).div_ceil(2);
        let cop_number = match cop_number_exact_with(&g, k_budget, &config)? {
            CopNumber::Exact(c) => c,
            // Above the budget and the bound: a violation all the same.
            CopNumber::Exceeds(k) if k >= bound => k + 1,
            CopNumber::Exceeds(k) => {
                return Err(Error::Budget(format!("cop number above k_budget = {k} with bound {bound}")));
            }
        };
        rows.push(ProbeRow {
            graph: g,
            dim,
            cop_number,
            bound,
        });
    }
    rows.sort_by_key(|r| (r.graph.num_vertices(), r.graph.labels().to_vec()));
    Ok(ProbeReport { rows })
}

pub fn cmd_probe_conjecture(a: &ProbeArgs, out: &mut dyn Write) -> Result<Status> {
    let rep = probe_conjecture(a.n_max, a.k_budget)?;
    let mut text = String::new();
    for r in &rep.rows {
        let labels: Vec<String> = r.graph.labels().iter().map(|l| l.to_string()).collect();
        let _ = writeln!(
            text,
            "graph={} dim={} c={} bound={} verdict={}",
            labels.join(";"),
            r.dim,
            r.cop_number,
            r.bound,
            if r.holds() { "ok" } else { "violation" }
        );
    }
    let bad: Vec<&ProbeRow> = rep.violations().collect();
    let _ = writeln!(text, "classes={} violations={}", rep.rows.len(), bad.len());
    out.write_all(text.as_bytes())?;
    if let Some(first) = bad.first() {
        if let Some(p) = &a.witness {
            std::fs::write(p, to_text(&first.graph))?;
        }
        return Ok(Status::False);
    }
    Ok(Status::Ok)
}

/// Parses `args`, runs the command against `out`, and returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli, out) {
        Ok(Status::Ok) => 0,
        Ok(Status::False) => 2,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    main_with(std::env::args_os(), &mut lock)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = main_with(std::iter::once("cubecops").chain(args.iter().copied()), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn symmetry_group_sizes() {
        assert_eq!(hyperoctahedral_images(2).len(), 8);
        assert_eq!(hyperoctahedral_images(3).len(), 48);
    }

    #[test]
    fn q2_subsets() {
        // Classes: vertex, edge, path of 3, square; the diagonal pair is
        // not connected.
        let rep = probe_conjecture(2, 2).unwrap();
        let sizes: Vec<usize> = rep.rows.iter().map(|r| r.graph.num_vertices()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 4]);
        assert!(rep.rows.iter().all(|r| r.holds()));
    }

    #[test]
    fn usage_errors_exit_3() {
        assert_eq!(run_args(&["solve"]).0, 3);
        assert_eq!(run_args(&["nonsense"]).0, 3);
        assert_eq!(run_args(&["generate", "--family", "fibonacci"]).0, 3);
    }

    #[test]
    fn generate_counts() {
        let (code, out) = run_args(&["generate", "--family", "fibonacci", "--n", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 14);
    }
}
