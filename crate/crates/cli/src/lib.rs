//! Command-line front end: file formats, certificates and the `listpack`
//! subcommands.
//!
//! Every run prints `STATUS=<ok|negative|error|exhausted> VALUE=<n>` as its
//! first line on stdout and exits with 0, 1, 2 or 3 respectively.

pub mod formats;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use listpack::galvin::{check_edge_coloring, list_edge_color, EdgeListAssignment};
use listpack::graph::{bipartition, complete_graph, cycle_graph, path_graph, Graph};
use listpack::packer::{pack_complete, PackRequest};
use listpack::search::{
    chromatic_number, list_chromatic_number, list_packing_number, solve_packing, Bounded, Search, SearchBudget,
};
use listpack::{Color, ListAssignment, Packing};
use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::formats::FormatError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Negative,
    Error,
    Exhausted,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Negative => 1,
            Status::Error => 2,
            Status::Exhausted => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Negative => "negative",
            Status::Error => "error",
            Status::Exhausted => "exhausted",
        }
    }
}

#[derive(Error, Debug)]
pub enum CliError {
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{0}")]
    Input(String),

    #[error("{0}")]
    Internal(String),
}

impl From<listpack::Error> for CliError {
    fn from(e: listpack::Error) -> Self {
        match e {
            listpack::Error::Internal(msg) => CliError::Internal(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl CliError {
    fn class(&self) -> &'static str {
        match self {
            CliError::Internal(_) => "internal error",
            _ => "input error",
        }
    }
}

/// What a subcommand reports: the verdict, an optional value and
/// human-readable detail lines.
pub struct Report {
    pub status: Status,
    pub value: Option<usize>,
    pub detail: Vec<String>,
}

impl Report {
    fn new(status: Status, value: Option<usize>) -> Self {
        Report {
            status,
            value,
            detail: Vec::new(),
        }
    }

    fn line(mut self, s: impl Into<String>) -> Self {
        self.detail.push(s.into());
        self
    }
}

#[derive(Parser, Debug)]
#[command(name = "listpack", version, about = "List packings of small graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Search nodes allowed per search task
    #[arg(long, default_value_t = 1_000_000_000)]
    budget_nodes: u64,
    /// Wall-clock seconds allowed for the whole command
    #[arg(long, default_value_t = 600.0)]
    budget_seconds: f64,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget, CliError> {
        if !(self.budget_seconds.is_finite() && self.budget_seconds > 0.0) {
            return Err(CliError::Input("--budget-seconds must be positive".into()));
        }
        Ok(SearchBudget::new(
            self.budget_nodes,
            Duration::from_secs_f64(self.budget_seconds.min(1e9)),
        )?)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Complete,
    Path,
    Cycle,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pack K_n from an m-assignment with m >= n using the kernel method
    PackComplete {
        #[arg(short = 'n')]
        n: usize,
        /// Lists file; random lists over [3m] are drawn when omitted
        #[arg(long)]
        lists: Option<PathBuf>,
        /// List size m for random lists (default n)
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Search for a packing of any graph by exhaustive backtracking
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        /// Packing size (default: shortest list length)
        #[arg(long)]
        size: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Check a packing against a graph and its lists
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long)]
        packing: PathBuf,
    },
    /// List-edge-color a bipartite graph
    EdgeColor {
        #[arg(long)]
        graph: PathBuf,
        /// Edge lists file; every edge gets [Δ] when omitted
        #[arg(long)]
        edge_lists: Option<PathBuf>,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Chromatic number
    Chi {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// List chromatic number by enumerating canonical assignments
    ChiList {
        #[arg(long)]
        graph: PathBuf,
        /// Largest k tried (default: vertex count)
        #[arg(long)]
        max_k: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// List packing number by enumerating canonical assignments
    ChiStar {
        #[arg(long)]
        graph: PathBuf,
        /// Largest k tried (default: vertex count)
        #[arg(long)]
        max_k: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Table of n, χ, χ_ℓ, χ*_ℓ and χ*_ℓ/χ_ℓ over a graph family
    Scan {
        #[arg(long, value_enum, default_value = "complete")]
        family: Family,
        /// Largest member of the family
        #[arg(short = 'n', default_value_t = 4)]
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_opt(path: &Option<PathBuf>, contents: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write(p, contents),
        None => Ok(()),
    }
}

fn formatted<T>(path: &Path, r: Result<T, FormatError>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    formatted(path, formats::parse_dimacs(&read(path)?))
}

pub fn load_lists(path: &Path, n: usize) -> Result<ListAssignment, CliError> {
    formatted(path, formats::parse_lists(&read(path)?, n))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

/// Random `m`-assignment of `K_n` with colors drawn from `[3m]`.
pub fn random_lists(n: usize, m: usize, seed: u64) -> Result<ListAssignment, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<Color> = (1..=3 * m as Color).collect();
    let lists = (0..n)
        .map(|_| pool.choose_multiple(&mut rng, m).copied().collect::<BTreeSet<Color>>())
        .collect();
    Ok(ListAssignment::new(lists)?)
}

fn verified_packing(g: &Graph, l: &ListAssignment, p: &Packing) -> Result<(), CliError> {
    let report = listpack::color::is_proper_packing(g, l, p)?;
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(CliError::Internal(format!("packing failed re-verification: {v}"))),
    }
}

fn packing_lines(p: &Packing) -> Vec<String> {
    p.rows()
        .iter()
        .enumerate()
        .map(|(j, f)| format!("f{} = {:?}", j + 1, f.as_slice()))
        .collect()
}

fn pack_complete_cmd(
    n: usize,
    lists: &Option<PathBuf>,
    size: Option<usize>,
    seed: u64,
    output: &Option<PathBuf>,
) -> Result<Report, CliError> {
    if n == 0 {
        return Err(CliError::Input("-n must be positive".into()));
    }
    let l = match lists {
        Some(path) => load_lists(path, n)?,
        None => random_lists(n, size.unwrap_or(n), seed)?,
    };
    if let (Some(m), Some(actual)) = (size, l.uniform_size()) {
        if m != actual {
            return Err(CliError::Input(format!("--size {m} but lists have {actual} colors")));
        }
    }
    let req = PackRequest::new(n, l)?;
    let p = pack_complete(&req)?;
    verified_packing(&complete_graph(n)?, &req.lists, &p)?;
    write_opt(output, &formats::write_packing(&p))?;
    let mut report = Report::new(Status::Ok, Some(req.m)).line(format!("packed K_{n} from lists {}", req.lists));
    report.detail.extend(packing_lines(&p));
    Ok(report)
}

fn solve_cmd(
    graph: &Path,
    lists: &Path,
    size: Option<usize>,
    budget: &BudgetArgs,
    output: &Option<PathBuf>,
) -> Result<Report, CliError> {
    let g = load_graph(graph)?;
    let l = load_lists(lists, g.n())?;
    let k = size.unwrap_or_else(|| l.min_list_size());
    match solve_packing(&g, &l, k, &budget.budget()?)? {
        Search::Found(p) => {
            verified_packing(&g, &l, &p)?;
            write_opt(output, &formats::write_packing(&p))?;
            let mut report = Report::new(Status::Ok, Some(k)).line(format!("found a packing of size {k}"));
            report.detail.extend(packing_lines(&p));
            Ok(report)
        }
        Search::Absent => {
            let cert = json!({ "status": "negative", "k": k, "lists": formats::lists_value(&l) });
            write_opt(output, &pretty(&cert))?;
            Ok(Report::new(Status::Negative, Some(k)).line(format!("no packing of size {k} exists")))
        }
        Search::Exhausted => {
            Ok(Report::new(Status::Exhausted, None).line(format!("budget exhausted searching for size {k}")))
        }
    }
}

fn verify_cmd(graph: &Path, lists: &Path, packing: &Path) -> Result<Report, CliError> {
    let g = load_graph(graph)?;
    let l = load_lists(lists, g.n())?;
    let p = formatted(packing, formats::parse_packing(&read(packing)?, g.n()))?;
    let report = listpack::color::is_proper_packing(&g, &l, &p)?;
    if report.ok() {
        return Ok(Report::new(Status::Ok, Some(p.k())).line(format!("packing of size {} is proper", p.k())));
    }
    let mut out = Report::new(Status::Negative, Some(p.k())).line(format!("{} violation(s)", report.violations.len()));
    out.detail.extend(report.violations.iter().map(|v| v.to_string()));
    Ok(out)
}

fn edge_color_cmd(graph: &Path, edge_lists: &Option<PathBuf>, output: &Option<PathBuf>) -> Result<Report, CliError> {
    let g = load_graph(graph)?;
    if g.edge_count() == 0 {
        return Err(CliError::Input("graph has no edges".into()));
    }
    let b = bipartition(&g)?;
    let lists = match edge_lists {
        Some(path) => formatted(path, formats::parse_edge_lists(&read(path)?, &g))?,
        None => EdgeListAssignment::uniform(&g, 1..=g.max_degree() as Color)?,
    };
    let ec = list_edge_color(&g, &b, &lists)?;
    let check = check_edge_coloring(&g, &ec, Some(&lists))?;
    if let Some(v) = check.violations.first() {
        return Err(CliError::Internal(format!("edge coloring failed re-verification: {v}")));
    }
    write_opt(output, &pretty(&formats::edge_coloring_value(&ec)))?;
    let used: BTreeSet<Color> = ec.colors.values().copied().collect();
    let mut report = Report::new(Status::Ok, Some(used.len())).line(format!(
        "{} edges colored with {} colors, Δ = {}",
        g.edge_count(),
        used.len(),
        g.max_degree()
    ));
    report.detail.extend(ec.colors.iter().map(|(e, c)| format!("{e}: {c}")));
    Ok(report)
}

fn chi_cmd(graph: &Path, output: &Option<PathBuf>) -> Result<Report, CliError> {
    let g = load_graph(graph)?;
    let chi = chromatic_number(&g)?;
    write_opt(
        output,
        &pretty(&json!({ "command": "chi", "status": "ok", "value": chi })),
    )?;
    Ok(Report::new(Status::Ok, Some(chi)).line(format!("chromatic number {chi}")))
}

/// Fields shared by `chi-list` and `chi-star` certificates.
struct Exact {
    value: usize,
    lower_witness: Option<ListAssignment>,
    upper_evidence: usize,
    color_cap: Option<usize>,
}

fn exact_report(
    command: &str,
    max_k: usize,
    outcome: Bounded<Exact>,
    output: &Option<PathBuf>,
) -> Result<Report, CliError> {
    let (report, cert) = match outcome {
        Bounded::Value(r) => {
            let mut report = Report::new(Status::Ok, Some(r.value)).line(format!(
                "value {}: all {} canonical {}-assignments succeed",
                r.value, r.upper_evidence, r.value
            ));
            if let Some(cap) = r.color_cap {
                report = report.line(format!("colors capped at {cap}"));
            }
            report = report.line(match &r.lower_witness {
                Some(w) => format!("lower witness ({}-assignment): {w}", r.value - 1),
                None => "no lower witness needed for value 1".to_string(),
            });
            let cert = json!({
                "command": command,
                "status": "ok",
                "value": r.value,
                "max_k": max_k,
                "lower_witness": r.lower_witness.as_ref().map(formats::lists_value),
                "upper_evidence": r.upper_evidence,
                "color_cap": r.color_cap,
            });
            (report, cert)
        }
        Bounded::AboveBound { k_max, witness } => {
            let report = Report::new(Status::Negative, None)
                .line(format!("value exceeds {k_max}"))
                .line(format!("witness ({k_max}-assignment): {witness}"));
            let cert = json!({
                "command": command,
                "status": "negative",
                "max_k": k_max,
                "witness": formats::lists_value(&witness),
            });
            (report, cert)
        }
        Bounded::Exhausted => {
            let report = Report::new(Status::Exhausted, None).line("budget exhausted before the value was settled");
            let cert = json!({ "command": command, "status": "exhausted", "max_k": max_k });
            (report, cert)
        }
    };
    write_opt(output, &pretty(&cert))?;
    Ok(report)
}

fn chi_list_cmd(
    graph: &Path,
    max_k: Option<usize>,
    budget: &BudgetArgs,
    output: &Option<PathBuf>,
) -> Result<Report, CliError> {
    let g = load_graph(graph)?;
    let max_k = max_k.unwrap_or(g.n());
    let outcome = match list_chromatic_number(&g, max_k, &budget.budget()?)? {
        Bounded::Value(r) => Bounded::Value(Exact {
            value: r.value,
            lower_witness: r.lower_witness,
            upper_evidence: r.upper_evidence,
            color_cap: None,
        }),
        Bounded::AboveBound { k_max, witness } => Bounded::AboveBound { k_max, witness },
        Bounded::Exhausted => Bounded::Exhausted,
    };
    exact_report("chi-list", max_k, outcome, output)
}

fn chi_star_cmd(
    graph: &Path,
    max_k: Option<usize>,
    budget: &BudgetArgs,
    output: &Option<PathBuf>,
) -> Result<Report, CliError> {
    let g = load_graph(graph)?;
    let max_k = max_k.unwrap_or(g.n());
    let outcome = match list_packing_number(&g, max_k, &budget.budget()?)? {
        Bounded::Value(r) => {
            if let Some(w) = &r.lower_witness {
                let fresh = solve_packing(&g, w, r.value - 1, &SearchBudget::unlimited())?;
                if fresh != Search::Absent {
                    return Err(CliError::Internal(format!("lower witness {w} packs")));
                }
            }
            Bounded::Value(Exact {
                value: r.value,
                lower_witness: r.lower_witness,
                upper_evidence: r.upper_evidence,
                color_cap: Some(r.color_cap),
            })
        }
        Bounded::AboveBound { k_max, witness } => Bounded::AboveBound { k_max, witness },
        Bounded::Exhausted => Bounded::Exhausted,
    };
    exact_report("chi-star", max_k, outcome, output)
}

fn family_member(family: Family, n: usize) -> Option<Graph> {
    match family {
        Family::Complete => complete_graph(n).ok(),
        Family::Path => path_graph(n).ok(),
        Family::Cycle => cycle_graph(n).ok(),
    }
}

fn scan_cmd(family: Family, max_n: usize, budget: &BudgetArgs, output: &Option<PathBuf>) -> Result<Report, CliError> {
    let budget = budget.budget()?;
    let mut csv = String::from("n,chi,chi_list,chi_star,ratio\n");
    let mut rows = 0;
    let mut exhausted = false;
    for n in 1..=max_n {
        let Some(g) = family_member(family, n) else { continue };
        let chi = chromatic_number(&g)?;
        let cl = match list_chromatic_number(&g, n, &budget)? {
            Bounded::Value(r) => Some(r.value),
            _ => None,
        };
        let cs = match list_packing_number(&g, n, &budget)? {
            Bounded::Value(r) => Some(r.value),
            _ => None,
        };
        exhausted |= cl.is_none() || cs.is_none();
        let cell = |v: Option<usize>| v.map(|v| v.to_string()).unwrap_or_default();
        let ratio = match (cl, cs) {
            (Some(a), Some(b)) => format!("{:.3}", b as f64 / a as f64),
            _ => String::new(),
        };
        writeln!(csv, "{n},{chi},{},{},{ratio}", cell(cl), cell(cs)).unwrap();
        rows += 1;
    }
    write_opt(output, &csv)?;
    let status = if exhausted { Status::Exhausted } else { Status::Ok };
    let mut report = Report::new(status, Some(rows));
    report.detail.extend(csv.lines().map(str::to_string));
    Ok(report)
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::PackComplete {
            n,
            lists,
            size,
            seed,
            output,
        } => pack_complete_cmd(*n, lists, *size, *seed, output),
        Command::Solve {
            graph,
            lists,
            size,
            budget,
            output,
        } => solve_cmd(graph, lists, *size, budget, output),
        Command::Verify { graph, lists, packing } => verify_cmd(graph, lists, packing),
        Command::EdgeColor {
            graph,
            edge_lists,
            output,
        } => edge_color_cmd(graph, edge_lists, output),
        Command::Chi { graph, output } => chi_cmd(graph, output),
        Command::ChiList {
            graph,
            max_k,
            budget,
            output,
        } => chi_list_cmd(graph, *max_k, budget, output),
        Command::ChiStar {
            graph,
            max_k,
            budget,
            output,
        } => chi_star_cmd(graph, *max_k, budget, output),
        Command::Scan {
            family,
            n,
            budget,
            output,
        } => scan_cmd(*family, *n, budget, output),
    }
}

fn status_line(status: Status, value: Option<usize>) -> String {
    let value = value.map(|v| v.to_string()).unwrap_or_default();
    format!("STATUS={} VALUE={value}", status.label())
}

/// Runs one command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return Status::Ok.code();
        }
        Err(e) => {
            let _ = writeln!(out, "{}", status_line(Status::Error, None));
            let msg = e.to_string();
            let _ = write!(err, "input error: {}", msg.trim_start_matches("error: "));
            return Status::Error.code();
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            let _ = writeln!(out, "{}", status_line(report.status, report.value));
            for line in &report.detail {
                let _ = writeln!(out, "{line}");
            }
            if report.status != Status::Ok {
                let summary = report.detail.first().map(String::as_str).unwrap_or("");
                let _ = writeln!(err, "{}: {summary}", report.status.label());
            }
            report.status.code()
        }
        Err(e) => {
            let _ = writeln!(out, "{}", status_line(Status::Error, None));
            let _ = writeln!(err, "{}: {e}", e.class());
            Status::Error.code()
        }
    }
}
