use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use spectrum_bench::{emit_report, emit_series, BenchConfig, Problem, ReportFormat};
use spectrum_core::bounds::{csc_bound_report, csc_threshold_floor, tsc_bound_report};
use spectrum_core::generate::{gen_er_graph, named_graph};
use spectrum_core::harmony::{harmony_csc, harmony_tsc, HarmonyParams};
use spectrum_core::oracle::{exact_csc, exact_tsc, DEFAULT_CAP};
use spectrum_core::rational::{parse_rational, to_f64};
use spectrum_core::solvers::{
    balanced_coloring, csc_dsatur, iterative_csc, random_coloring, tsc_dsatur, RandomInner, TieBreak,
};
use spectrum_core::{Coloring, Graph, Rational, RngSeed, SolveReport, Spectrum, Strategy};

const INFEASIBLE: u8 = 2;

/// Spectrum coloring solvers, bounds and benchmark harness.
#[derive(Parser)]
#[command(name = "spectrum-color", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimize the maximum vertex interference with k colors.
    SolveTsc(SolveTscArgs),
    /// Minimize the number of colors keeping every vertex interference <= t.
    SolveCsc(SolveCscArgs),
    /// Print the upper bound for a graph and spectrum.
    Bound(BoundArgs),
    /// Solve a small instance exactly.
    Oracle(OracleArgs),
    /// Run a benchmark over random graph categories.
    Bench(BenchArgs),
    /// Write an Erdős–Rényi random graph in DIMACS format.
    Gen(GenArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// DIMACS edge file (`p edge n m`, `e u v`).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Built-in graph: paw, cycle(m), complete(m), star(m), path(m).
    #[arg(long)]
    named: Option<String>,
}

impl GraphSource {
    fn load(&self) -> Result<Graph> {
        match (&self.graph, &self.named) {
            (Some(path), _) => Ok(Graph::from_dimacs(&read(path)?)?),
            (_, Some(name)) => Ok(named_graph(name)?),
            _ => bail!("a graph is required"),
        }
    }
}

#[derive(Args)]
struct SpectrumSource {
    /// CSV interference matrix; entries may be integers, decimals or a/b.
    #[arg(long, conflicts_with_all = ["expdecay", "base", "size"])]
    matrix: Option<PathBuf>,
    /// Use W(i,j) = base^-|i-j| (the default when no matrix is given).
    #[arg(long)]
    expdecay: bool,
    /// Base of the exponential decay spectrum.
    #[arg(long, default_value = "2")]
    base: String,
    /// Number of colors in the exponential decay spectrum.
    #[arg(long)]
    size: Option<usize>,
}

impl SpectrumSource {
    fn load(&self, default_size: usize) -> Result<Spectrum> {
        if let Some(path) = &self.matrix {
            return Ok(Spectrum::from_csv(&read(path)?)?);
        }
        let base = parse_rational(&self.base)?;
        Ok(Spectrum::exp_decay(self.size.unwrap_or(default_size), &base)?)
    }
}

#[derive(Args)]
struct HarmonyFlags {
    /// Harmony memory size.
    #[arg(long)]
    hms: Option<usize>,
    /// Memory consideration rate.
    #[arg(long)]
    hmcr: Option<f64>,
    /// Pitch adjustment rate.
    #[arg(long)]
    par: Option<f64>,
    /// Objective evaluation budget.
    #[arg(long)]
    evals: Option<u64>,
}

impl HarmonyFlags {
    fn params(&self, seed: RngSeed) -> HarmonyParams {
        let d = HarmonyParams::default();
        HarmonyParams {
            memory_size: self.hms.unwrap_or(d.memory_size),
            memory_consider_rate: self.hmcr.unwrap_or(d.memory_consider_rate),
            pitch_adjust_rate: self.par.unwrap_or(d.pitch_adjust_rate),
            max_evaluations: self.evals.unwrap_or(d.max_evaluations),
            seed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Text,
}

#[derive(Args)]
struct SolveCommon {
    #[command(flatten)]
    graph: GraphSource,
    #[command(flatten)]
    spectrum: SpectrumSource,
    #[arg(long, default_value = "dsatur")]
    strategy: Strategy,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Break DSATUR ties by lowest vertex index instead of randomly.
    #[arg(long)]
    deterministic: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    #[command(flatten)]
    harmony: HarmonyFlags,
}

impl SolveCommon {
    fn ties(&self) -> TieBreak {
        if self.deterministic {
            TieBreak::LowestIndex
        } else {
            TieBreak::Seeded
        }
    }
}

#[derive(Args)]
struct SolveTscArgs {
    /// Number of colors.
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    common: SolveCommon,
}

#[derive(Args)]
struct SolveCscArgs {
    /// Interference threshold (integer, decimal or a/b).
    #[arg(long)]
    t: String,
    #[command(flatten)]
    common: SolveCommon,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    graph: GraphSource,
    #[command(flatten)]
    spectrum: SpectrumSource,
    #[arg(long, conflicts_with = "t", required_unless_present = "t")]
    k: Option<usize>,
    #[arg(long)]
    t: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Tsc,
    Csc,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Self {
        match p {
            ProblemArg::Tsc => Problem::Tsc,
            ProblemArg::Csc => Problem::Csc,
        }
    }
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    graph: GraphSource,
    #[command(flatten)]
    spectrum: SpectrumSource,
    #[arg(long, value_enum)]
    problem: ProblemArg,
    #[arg(long, required_if_eq("problem", "tsc"))]
    k: Option<usize>,
    #[arg(long, required_if_eq("problem", "csc"))]
    t: Option<String>,
    /// Largest enumeration space allowed.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFormat {
    Csv,
    Markdown,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    problem: ProblemArg,
    /// `key = value` config file; defaults reproduce the full protocol.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Report destination (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: BenchFormat,
    /// Also write the (np, best average) series as CSV.
    #[arg(long)]
    series: Option<PathBuf>,
    /// Suppress per-row progress on stderr.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn coloring_text(c: &Coloring) -> String {
    c.iter()
        .map(|c| c.map_or_else(|| "0".to_string(), |c| c.to_string()))
        .collect::<Vec<_>>()
        .join(" ")
}

fn exact_and_decimal(r: &Rational) -> String {
    format!("{r} ({:.6})", to_f64(r))
}

/// `strategy,seed,feasible,palette_size,distinct_colors,max_interference,sum_interference,iterations,coloring`
fn report_csv(r: &SolveReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        r.strategy,
        r.seed,
        r.feasible,
        r.palette_size,
        r.distinct_colors,
        r.max_interference,
        r.sum_interference,
        r.iterations,
        coloring_text(&r.coloring)
    )
}

fn report_text(r: &SolveReport) -> String {
    format!(
        "strategy:         {}\nseed:             {}\nfeasible:         {}\npalette size:     {}\ndistinct colors:  {}\nmax interference: {}\nsum interference: {}\niterations:       {}\ncoloring:         {}\n",
        r.strategy,
        r.seed,
        r.feasible,
        r.palette_size,
        r.distinct_colors,
        exact_and_decimal(&r.max_interference),
        exact_and_decimal(&r.sum_interference),
        r.iterations,
        coloring_text(&r.coloring)
    )
}

fn print_report(r: &SolveReport, format: OutputFormat) -> Result<()> {
    let text = match format {
        OutputFormat::Csv => report_csv(r) + "\n",
        OutputFormat::Text => report_text(r),
    };
    write_out(None, &text)
}

fn solve_tsc(args: &SolveTscArgs) -> Result<u8> {
    let c = &args.common;
    let g = c.graph.load()?;
    let s = c.spectrum.load(args.k)?;
    let seed = RngSeed(c.seed);
    let report = match c.strategy {
        Strategy::Random => random_coloring(&g, &s, args.k, seed)?,
        Strategy::Dsatur => tsc_dsatur(&g, &s, args.k, seed, c.ties())?,
        Strategy::Harmony => harmony_tsc(&g, &s, args.k, &c.harmony.params(seed))?,
        Strategy::Balanced => balanced_coloring(&g, &s, args.k, seed)?,
        Strategy::Exhaustive => bail!("use the oracle subcommand for exact solutions"),
    };
    print_report(&report, c.format)?;
    Ok(0)
}

fn solve_csc(args: &SolveCscArgs) -> Result<u8> {
    let c = &args.common;
    let g = c.graph.load()?;
    let s = c.spectrum.load(g.vertex_count().max(1))?;
    let t = parse_rational(&args.t)?;
    let seed = RngSeed(c.seed);
    let report = match c.strategy {
        Strategy::Random => iterative_csc(&g, &s, &t, &RandomInner, seed)?,
        Strategy::Dsatur => csc_dsatur(&g, &s, &t, seed, c.ties())?,
        Strategy::Harmony => harmony_csc(&g, &s, &t, &c.harmony.params(seed))?,
        other => bail!("strategy {other} does not solve the chromatic problem"),
    };
    print_report(&report, c.format)?;
    Ok(if report.feasible { 0 } else { INFEASIBLE })
}

fn bound(args: &BoundArgs) -> Result<u8> {
    let g = args.graph.load()?;
    let mut out = String::new();
    let (norm, gcd, max_degree) = if let Some(k) = args.k {
        let s = args.spectrum.load(k)?;
        let r = tsc_bound_report(&g, &s, k)?;
        out += &format!("bound:        {}\n", exact_and_decimal(&r.value));
        out += &format!("precondition: {}\n", r.precondition_holds);
        (r.norm, r.gcd, r.max_degree)
    } else {
        let t = parse_rational(args.t.as_deref().unwrap_or_default())?;
        let s = args.spectrum.load(g.vertex_count().max(2))?;
        let r = csc_bound_report(&g, &s, &t)?;
        out += &format!("bound:        {}\n", r.value);
        out += &format!("precondition: {}\n", r.precondition_holds);
        out += &format!("min t:        {}\n", exact_and_decimal(&csc_threshold_floor(&g, &s)?));
        (r.norm, r.gcd, r.max_degree)
    };
    out += &format!("norm:         {}\n", exact_and_decimal(&norm));
    out += &format!(
        "gcd:          {}\n",
        gcd.as_ref().map_or_else(|| "undefined".to_string(), exact_and_decimal)
    );
    out += &format!("max degree:   {max_degree}\n");
    write_out(None, &out)?;
    Ok(0)
}

fn oracle(args: &OracleArgs) -> Result<u8> {
    let g = args.graph.load()?;
    match args.problem {
        ProblemArg::Tsc => {
            let k = args.k.context("--k is required")?;
            let s = args.spectrum.load(k)?;
            let r = exact_tsc(&g, &s, k, args.cap)?;
            write_out(
                None,
                &format!(
                    "optimum:    {}\nwitness:    {}\nenumerated: {}\n",
                    exact_and_decimal(&r.optimum),
                    coloring_text(&r.witness),
                    r.enumerated
                ),
            )?;
            Ok(0)
        }
        ProblemArg::Csc => {
            let t = parse_rational(args.t.as_deref().context("--t is required")?)?;
            let s = args.spectrum.load(g.vertex_count().max(1))?;
            let r = exact_csc(&g, &s, &t, args.cap)?;
            let optimum = r.optimum.map_or_else(|| "infeasible".to_string(), |c| c.to_string());
            write_out(
                None,
                &format!(
                    "optimum:    {optimum}\nwitness:    {}\nenumerated: {}\n",
                    coloring_text(&r.witness),
                    r.enumerated
                ),
            )?;
            Ok(if r.optimum.is_some() { 0 } else { INFEASIBLE })
        }
    }
}

fn bench(args: &BenchArgs) -> Result<u8> {
    let cfg = match &args.config {
        Some(path) => BenchConfig::parse(&read(path)?)?,
        None => BenchConfig::default(),
    };
    let quiet = args.quiet;
    let rows = spectrum_bench::run_bench(&cfg, args.problem.into(), |row| {
        if !quiet {
            eprintln!("done n={} p={} param={}", row.category.n, row.category.p.text, row.parameter);
        }
    })?;
    let format = match args.format {
        BenchFormat::Csv => ReportFormat::Csv,
        BenchFormat::Markdown => ReportFormat::Markdown,
    };
    write_out(args.out.as_deref(), &emit_report(&rows, format, cfg.std_mode))?;
    if let Some(path) = &args.series {
        write_out(Some(path), &emit_series(&rows))?;
    }
    Ok(0)
}

fn gen(args: &GenArgs) -> Result<u8> {
    let g = gen_er_graph(args.n, args.p, RngSeed(args.seed))?;
    write_out(None, &g.to_dimacs())?;
    Ok(0)
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::SolveTsc(a) => solve_tsc(a),
        Command::SolveCsc(a) => solve_csc(a),
        Command::Bound(a) => bound(a),
        Command::Oracle(a) => oracle(a),
        Command::Bench(a) => bench(a),
        Command::Gen(a) => gen(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors exit 1 so that 2 keeps meaning "no valid coloring"
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
