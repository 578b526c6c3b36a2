//! Command-line front end. Every subcommand prints machine-readable output:
//! JSON documents carry a versioned "schema" field, embed the resolved
//! inputs that determined the result, and contain no timestamps, so a rerun
//! with the same flags is byte-identical. The worker count (--jobs or
//! RAMSEY_FORGE_JOBS) only schedules work and is deliberately absent from
//! the output for the same reason.

use clap::{Parser, Subcommand, ValueEnum};
use ramsey_forge::chromatic::critical_edges;
use ramsey_forge::envelope;
use ramsey_forge::graph::{make_hairy, turan_graph, Graph, HairySpec, MAX_VERTICES};
use ramsey_forge::graph6::{parse_graph6, parse_graph_text, write_graph6};
use ramsey_forge::numbers::{parse_ratio, ratio, ratio_str, Ratio};
use ramsey_forge::objective::{m_objective, make_context, PairContext};
use ramsey_forge::perturb::sweep;
use ramsey_forge::search::{
    exhaustive_minimize, local_search, with_pool, LocalOptions, SearchMode,
    DEFAULT_EXHAUSTIVE_CAP, HARD_EXHAUSTIVE_CAP,
};
use serde::Deserialize;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_PARSE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_SIZE: u8 = 4;
const EXIT_BUDGET: u8 = 5;

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_PARSE, message: message.into() }
    }

    fn invalid(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_INVALID, message: message.into() }
    }

    fn size(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_SIZE, message: message.into() }
    }

    fn budget(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_BUDGET, message: message.into() }
    }
}

/// Exact Ramsey-multiplicity toolkit: evaluate, minimize, and perturb the
/// weighted two-pattern objective over small host graphs.
#[derive(Parser)]
#[command(name = "ramsey-forge", version)]
struct Cli {
    /// JSON file supplying defaults for any flag; explicit flags win
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Attach pendant vertices to a base graph and report its colouring profile
    Hairy {
        /// Base graph (graph6, @file, or a named form like K3, C5, turan:6:2)
        #[arg(long)]
        base: Option<String>,
        /// Comma-separated base vertices, one per pendant (empty for none)
        #[arg(long)]
        attach: Option<String>,
        /// Write the graph6 line here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the objective for a pattern pair on one host graph
    Objective {
        /// First pattern (counted in the host)
        #[arg(long)]
        h1: Option<String>,
        /// Second pattern (counted in the complement)
        #[arg(long)]
        h2: Option<String>,
        /// Host graph
        #[arg(long)]
        g: Option<String>,
    },
    /// Minimize the objective over every host of a given order
    Search {
        #[arg(long)]
        h1: Option<String>,
        #[arg(long)]
        h2: Option<String>,
        /// Host order
        #[arg(long)]
        n: Option<usize>,
        /// exhaustive is exact; local is steepest descent with restarts
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Restart seed for local mode
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads; 0 uses the ambient pool [env: RAMSEY_FORGE_JOBS]
        #[arg(long)]
        jobs: Option<usize>,
        /// Raise the exhaustive cap above the default of 7 (hard limit 8)
        #[arg(long)]
        max_n_override: Option<usize>,
        /// Also write the minimizers, one graph6 line each
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact expectation sweep under independent within-part edge deletion
    Perturb {
        #[arg(long)]
        h1: Option<String>,
        #[arg(long)]
        h2: Option<String>,
        /// Host order for the clique construction
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated deletion probabilities in [0,1]; default 0,1/100,..,1/10
        #[arg(long)]
        grid: Option<String>,
        /// Worker threads; 0 uses the ambient pool [env: RAMSEY_FORGE_JOBS]
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the sweep as CSV here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Colouring counts and closed-form bounds for a single pattern
    Bounds {
        /// Pattern graph
        #[arg(long)]
        h: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Local,
}

/// Optional defaults loaded from --config; unknown keys are rejected so a
/// typo fails loudly instead of silently falling back.
#[derive(Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    h1: Option<String>,
    h2: Option<String>,
    g: Option<String>,
    h: Option<String>,
    base: Option<String>,
    attach: Option<String>,
    n: Option<usize>,
    mode: Option<String>,
    seed: Option<u64>,
    jobs: Option<usize>,
    grid: Option<String>,
    out: Option<String>,
    max_n_override: Option<usize>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = load_config(cli.config.as_ref())?;
    match cli.command {
        Cmd::Hairy { base, attach, out } => cmd_hairy(
            require(base, cfg.base, "base")?,
            attach.or(cfg.attach),
            out.or(cfg.out.map(PathBuf::from)),
        ),
        Cmd::Objective { h1, h2, g } => cmd_objective(
            require(h1, cfg.h1, "h1")?,
            require(h2, cfg.h2, "h2")?,
            require(g, cfg.g, "g")?,
        ),
        Cmd::Search { h1, h2, n, mode, seed, jobs, max_n_override, out } => cmd_search(
            require(h1, cfg.h1, "h1")?,
            require(h2, cfg.h2, "h2")?,
            require(n, cfg.n, "n")?,
            resolve_mode(mode, cfg.mode.as_deref())?,
            seed.or(cfg.seed).unwrap_or(0),
            resolve_jobs(jobs, cfg.jobs)?,
            max_n_override.or(cfg.max_n_override).unwrap_or(DEFAULT_EXHAUSTIVE_CAP),
            out.or(cfg.out.map(PathBuf::from)),
        ),
        Cmd::Perturb { h1, h2, n, grid, jobs, out } => cmd_perturb(
            require(h1, cfg.h1, "h1")?,
            require(h2, cfg.h2, "h2")?,
            require(n, cfg.n, "n")?,
            grid.or(cfg.grid),
            resolve_jobs(jobs, cfg.jobs)?,
            out.or(cfg.out.map(PathBuf::from)),
        ),
        Cmd::Bounds { h } => cmd_bounds(require(h, cfg.h, "h")?),
    }
}

fn load_config(path: Option<&PathBuf>) -> Result<FileConfig, Failure> {
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::parse(format!("bad config {}: {e}", path.display())))
}

fn require<T>(flag: Option<T>, config: Option<T>, name: &str) -> Result<T, Failure> {
    flag.or(config)
        .ok_or_else(|| Failure::parse(format!("missing --{name} (set the flag or a config key)")))
}

fn resolve_mode(flag: Option<ModeArg>, config: Option<&str>) -> Result<SearchMode, Failure> {
    if let Some(mode) = flag {
        return Ok(match mode {
            ModeArg::Exhaustive => SearchMode::Exhaustive,
            ModeArg::Local => SearchMode::Local,
        });
    }
    match config {
        None => Ok(SearchMode::Exhaustive),
        Some("exhaustive") => Ok(SearchMode::Exhaustive),
        Some("local") => Ok(SearchMode::Local),
        Some(other) => Err(Failure::parse(format!(
            "mode must be exhaustive or local, got {other:?}"
        ))),
    }
}

fn resolve_jobs(flag: Option<usize>, config: Option<usize>) -> Result<usize, Failure> {
    if let Some(jobs) = flag.or(config) {
        return Ok(jobs);
    }
    match std::env::var("RAMSEY_FORGE_JOBS") {
        Ok(text) => text.trim().parse().map_err(|_| {
            Failure::parse(format!("RAMSEY_FORGE_JOBS is not a worker count: {text:?}"))
        }),
        Err(_) => Ok(0),
    }
}

// =============================================================================
// Graph specs
// =============================================================================

/// Accepts graph6 text, @file references, and the named builders petersen,
/// K<n>, C<n>, turan:n:r, and hairy:BASE:i,j,k (BASE is itself a spec; the
/// attachment list follows the last colon).
fn graph_from_spec(spec: &str) -> Result<Graph, Failure> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Failure::parse("empty graph spec"));
    }
    if let Some(path) = spec.strip_prefix('@') {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::parse(format!("cannot read graph file {path}: {e}")))?;
        return parse_graph_text(&text).map_err(|e| Failure::parse(format!("{path}: {e}")));
    }
    if spec == "petersen" {
        return Ok(Graph::petersen());
    }
    if let Some(rest) = spec.strip_prefix("turan:") {
        let (n_text, r_text) = rest
            .split_once(':')
            .ok_or_else(|| Failure::parse(format!("expected turan:n:r, got {spec:?}")))?;
        let n = parse_order(n_text)?;
        let r = parse_order(r_text)?;
        if !(1..=MAX_VERTICES).contains(&n) {
            return Err(Failure::invalid(format!(
                "host order {n} outside 1..={MAX_VERTICES}"
            )));
        }
        if r < 1 || r > n {
            return Err(Failure::invalid(format!(
                "part count must satisfy 1 <= r <= n, got r={r}, n={n}"
            )));
        }
        return Ok(turan_graph(n, r));
    }
    if let Some(rest) = spec.strip_prefix("hairy:") {
        let (base_spec, attach_text) = rest
            .rsplit_once(':')
            .ok_or_else(|| Failure::parse(format!("expected hairy:BASE:i,j,k, got {spec:?}")))?;
        let base = graph_from_spec(base_spec)?;
        return hairy_checked(base, parse_attach(attach_text)?);
    }
    if let Some(digits) = spec.strip_prefix('K') {
        if let Ok(n) = digits.parse::<usize>() {
            if !(1..=MAX_VERTICES).contains(&n) {
                return Err(Failure::invalid(format!(
                    "complete-graph order {n} outside 1..={MAX_VERTICES}"
                )));
            }
            return Ok(Graph::complete(n));
        }
    }
    if let Some(digits) = spec.strip_prefix('C') {
        if let Ok(n) = digits.parse::<usize>() {
            if !(3..=MAX_VERTICES).contains(&n) {
                return Err(Failure::invalid(format!(
                    "cycle length {n} outside 3..={MAX_VERTICES}"
                )));
            }
            return Ok(Graph::cycle(n));
        }
    }
    parse_graph6(spec).map_err(|e| Failure::parse(format!("not a recognized graph spec: {e}")))
}

fn parse_order(text: &str) -> Result<usize, Failure> {
    text.trim()
        .parse()
        .map_err(|_| Failure::parse(format!("{text:?} is not a vertex count")))
}

fn parse_attach(text: &str) -> Result<Vec<usize>, Failure> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|field| {
            field.trim().parse::<usize>().map_err(|_| {
                Failure::parse(format!("attachment entry {field:?} is not a vertex index"))
            })
        })
        .collect()
}

fn hairy_checked(base: Graph, attach: Vec<usize>) -> Result<Graph, Failure> {
    if base.n() + attach.len() > MAX_VERTICES {
        return Err(Failure::invalid(format!(
            "pendants push the order past {MAX_VERTICES}"
        )));
    }
    for &a in &attach {
        if a >= base.n() {
            return Err(Failure::invalid(format!(
                "attachment {a} is out of range for a {}-vertex base",
                base.n()
            )));
        }
    }
    Ok(make_hairy(&HairySpec { base, attach }))
}

fn pattern_context(h1: &Graph, h2: &Graph) -> Result<PairContext, Failure> {
    for (name, h) in [("h1", h1), ("h2", h2)] {
        if h.edge_count() == 0 {
            return Err(Failure::invalid(format!("pattern --{name} has no edges")));
        }
    }
    Ok(make_context(h1, h2))
}

fn parse_grid(text: Option<&str>) -> Result<Vec<Ratio>, Failure> {
    let Some(text) = text else {
        return Ok((0..=10).map(|i| ratio(i, 100)).collect());
    };
    let mut grid = Vec::new();
    for field in text.split(',') {
        let eps = parse_ratio(field.trim())
            .ok_or_else(|| Failure::parse(format!("grid entry {field:?} is not a rational")))?;
        if eps < ratio(0, 1) || eps > ratio(1, 1) {
            return Err(Failure::invalid(format!(
                "grid entry {} is outside [0, 1]",
                ratio_str(&eps)
            )));
        }
        grid.push(eps);
    }
    if grid.is_empty() {
        return Err(Failure::parse("empty grid"));
    }
    Ok(grid)
}

// =============================================================================
// Subcommands
// =============================================================================

/// stdout may be a pipe the reader has already closed; die quietly instead
/// of panicking mid-report.
fn say(text: &str) {
    use std::io::Write;
    if writeln!(std::io::stdout().lock(), "{text}").is_err() {
        std::process::exit(0);
    }
}

fn print_json(doc: &serde_json::Value) {
    say(&serde_json::to_string_pretty(doc).expect("serializable"));
}

fn write_out(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display())))
}

fn cmd_hairy(
    base_spec: String,
    attach_text: Option<String>,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let base = graph_from_spec(&base_spec)?;
    let attach = parse_attach(attach_text.as_deref().unwrap_or(""))?;
    let g = hairy_checked(base, attach)?;
    let g6 = write_graph6(&g);
    match &out {
        Some(path) => write_out(path, &format!("{g6}\n"))?,
        None => say(&g6),
    }
    let profile = critical_edges(&g);
    say(&format!(
        "v={} e={} chi={} k={} crit={}",
        g.n(),
        g.edge_count(),
        profile.chi,
        g.component_count(),
        profile.crit()
    ));
    Ok(())
}

fn cmd_objective(h1_spec: String, h2_spec: String, g_spec: String) -> Result<(), Failure> {
    let h1 = graph_from_spec(&h1_spec)?;
    let h2 = graph_from_spec(&h2_spec)?;
    let g = graph_from_spec(&g_spec)?;
    let ctx = pattern_context(&h1, &h2)?;
    let need = ctx.v1.max(ctx.v2);
    if g.n() < need {
        return Err(Failure::size(format!(
            "host has {} vertices but the patterns need {need}",
            g.n()
        )));
    }
    let value = m_objective(&ctx, &g);
    print_json(&envelope::objective_document(&h1, &h2, &g, &ctx, &value));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    h1_spec: String,
    h2_spec: String,
    n: usize,
    mode: SearchMode,
    seed: u64,
    jobs: usize,
    max_n: usize,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let h1 = graph_from_spec(&h1_spec)?;
    let h2 = graph_from_spec(&h2_spec)?;
    let ctx = pattern_context(&h1, &h2)?;
    if n > MAX_VERTICES {
        return Err(Failure::invalid(format!(
            "host order {n} outside 1..={MAX_VERTICES}"
        )));
    }
    if n < ctx.v1.max(ctx.v2) {
        return Err(Failure::size(format!(
            "host order {n} is smaller than the patterns need ({})",
            ctx.v1.max(ctx.v2)
        )));
    }
    let report = match mode {
        SearchMode::Exhaustive => exhaustive_minimize(&ctx, n, max_n, jobs).map_err(|e| {
            Failure::budget(format!(
                "{e}; raise it with --max-n-override (hard limit {HARD_EXHAUSTIVE_CAP})"
            ))
        })?,
        SearchMode::Local => local_search(&ctx, n, seed, &LocalOptions::default(), jobs),
    };
    if let Some(path) = &out {
        let mut lines = String::new();
        for form in &report.minimizers {
            lines.push_str(&write_graph6(&form.to_graph()));
            lines.push('\n');
        }
        write_out(path, &lines)?;
    }
    print_json(&envelope::search_document(&h1, &h2, seed, max_n, &report));
    Ok(())
}

fn cmd_perturb(
    h1_spec: String,
    h2_spec: String,
    n: usize,
    grid_text: Option<String>,
    jobs: usize,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let h1 = graph_from_spec(&h1_spec)?;
    let h2 = graph_from_spec(&h2_spec)?;
    let ctx = pattern_context(&h1, &h2)?;
    if ctx.chi2 < 3 {
        return Err(Failure::invalid(
            "the deletion construction needs the second pattern to have chromatic number >= 3",
        ));
    }
    if n < ctx.v1.max(ctx.v2) {
        return Err(Failure::size(format!(
            "host order {n} is smaller than the patterns need ({})",
            ctx.v1.max(ctx.v2)
        )));
    }
    let grid = parse_grid(grid_text.as_deref())?;
    let report = with_pool(jobs, || sweep(&ctx, n, &grid));
    if let Some(path) = &out {
        write_out(path, &report.to_csv())?;
    }
    print_json(&envelope::perturb_document(&h1, &h2, &ctx, &report));
    Ok(())
}

fn cmd_bounds(h_spec: String) -> Result<(), Failure> {
    let h = graph_from_spec(&h_spec)?;
    let doc = envelope::bounds_document(&h);
    if doc["report"].get("nearly_proper_bound").is_none() {
        eprintln!(
            "warning: nearly-proper fields omitted (chromatic number {} < 3)",
            doc["report"]["chi"]
        );
    }
    print_json(&doc);
    Ok(())
}

// =============================================================================
// Tests
// =============================================================================
