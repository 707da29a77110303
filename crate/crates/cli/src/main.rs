//! `edgeal`: compute regularity data for edge ideals and sweep statement
//! checkers over graph corpora. Records stream as JSON lines (sorted, so
//! parallel runs are byte-identical); human summaries go to stderr.
//!
//! Exit codes: 0 clean, 1 at least one checker failure, 2 usage or I/O error.

mod cache;

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use edgeal_core::betti::{regularity_in, BettiError};
use edgeal_core::graphs::{
    complete, complete_bipartite, cycle, enumerate_graphs, example42, path, Graph,
    MAX_CANONICAL_VERTICES,
};
use edgeal_core::ideals::MonomialIdeal;
use edgeal_core::linalg::{is_prime, Field};
use edgeal_core::symbolic::symbolic_power_budgeted;
use edgeal_core::theorems::{summarize, sweep, Statement, SweepConfig};
use edgeal_core::Budget;

use cache::Cache;

#[derive(Parser)]
#[command(
    name = "edgeal",
    version,
    about = "Exact edge ideal computations on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Regularity and power comparisons for each input graph, as JSON lines
    Compute(ComputeArgs),
    /// Run statement checkers over a corpus; nonzero exit on any failure
    Verify(VerifyArgs),
    /// Encode edge lists as graph6
    Encode(EncodeArgs),
    /// Decode graph6 strings to edge lists
    Decode(DecodeArgs),
}

#[derive(Args)]
struct InputArgs {
    /// All graphs up to isomorphism with 1..=N vertices (N <= 8)
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// File of graph6 lines; a ">>graph6<<" header is skipped
    #[arg(long, value_name = "FILE")]
    graph6: Option<PathBuf>,
    /// Inline 1-based edges like "1 2, 2 3"; "5: 1 2" pins 5 vertices
    #[arg(long, value_name = "EDGES")]
    edges: Option<String>,
    /// Edge-list file: a vertex-count line, then one "u v" line per edge
    #[arg(long, value_name = "FILE")]
    edge_list: Option<PathBuf>,
    /// Named graph: C5, K4, P6, K2,3, example42, or cycle:9, path:12,
    /// complete:5, complete_bipartite:3,4
    #[arg(long, visible_alias = "graph", value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Power range "MIN..MAX" or a single power (at most 5)
    #[arg(long, default_value = "2", value_name = "RANGE")]
    s: String,
    /// Per-graph time limit in seconds; 0 means none
    #[arg(long, default_value_t = 0, value_name = "SECS")]
    timeout: u64,
    /// Homology coefficient field characteristic; 0 means rationals
    #[arg(long = "char", default_value_t = 0, value_name = "P")]
    characteristic: u32,
    /// Worker threads (default: all cores)
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    /// Write JSON lines here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Comma-separated statement ids (default: all of them)
    #[arg(long, value_name = "LIST")]
    statements: Option<String>,
    /// Range of s (and k) for parameterized statements
    #[arg(long, default_value = "1..3", value_name = "RANGE")]
    s: String,
    /// Per-instance time limit in seconds; 0 means none
    #[arg(long, default_value_t = 60, value_name = "SECS")]
    timeout: u64,
    /// Homology coefficient field characteristic; 0 means rationals
    #[arg(long = "char", default_value_t = 0, value_name = "P")]
    characteristic: u32,
    /// Worker threads (default: all cores)
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    /// Write JSON lines here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EncodeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DecodeArgs {
    /// graph6 strings; with none given, lines are read from stdin
    #[arg(value_name = "GRAPH6")]
    strings: Vec<String>,
    /// File of graph6 lines instead of arguments
    #[arg(long, value_name = "FILE")]
    graph6: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Encode(args) => cmd_encode(args),
        Command::Decode(args) => cmd_decode(args),
    }
}

// ============================================================================
// Input resolution
// ============================================================================

fn resolve_graphs(input: &InputArgs) -> Result<Vec<Graph>> {
    let sources = [
        input.exhaustive.is_some(),
        input.graph6.is_some(),
        input.edges.is_some(),
        input.edge_list.is_some(),
        input.builtin.is_some(),
    ];
    if sources.iter().filter(|&&b| b).count() != 1 {
        bail!("give exactly one of --exhaustive, --graph6, --edges, --edge-list, --builtin");
    }
    if let Some(n_max) = input.exhaustive {
        if n_max == 0 || n_max > MAX_CANONICAL_VERTICES {
            bail!("--exhaustive needs 1..={MAX_CANONICAL_VERTICES}, got {n_max}");
        }
        let mut graphs = Vec::new();
        for n in 1..=n_max {
            graphs.extend(enumerate_graphs(n, true)?);
        }
        return Ok(graphs);
    }
    if let Some(file) = &input.graph6 {
        let text =
            std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
        return parse_graph6_lines(&text);
    }
    if let Some(text) = &input.edges {
        return Ok(parse_inline_edges(text)?.into_iter().collect());
    }
    if let Some(file) = &input.edge_list {
        let text =
            std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
        return Ok(vec![Graph::from_edge_list_text(&text)?]);
    }
    let name = input.builtin.as_deref().expect("checked above");
    Ok(vec![builtin_graph(name)?])
}

fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut line = raw.trim();
        if i == 0 {
            line = line.strip_prefix(">>graph6<<").unwrap_or(line).trim();
        }
        if line.is_empty() {
            continue;
        }
        graphs.push(Graph::from_graph6(line).with_context(|| format!("line {}: {line:?}", i + 1))?);
    }
    Ok(graphs)
}

/// `None` for a genuinely empty edge list: there is no graph, only the zero
/// ideal record.
fn parse_inline_edges(text: &str) -> Result<Option<Graph>> {
    let (forced_n, rest) = match text.split_once(':') {
        Some((head, rest)) => {
            let n: usize = head
                .trim()
                .parse()
                .map_err(|_| anyhow!("bad vertex count {:?} before ':'", head.trim()))?;
            (Some(n), rest)
        }
        None => (None, text),
    };
    let mut edges = Vec::new();
    let mut max_vertex = 0usize;
    for part in rest.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let toks: Vec<&str> = part.split_whitespace().collect();
        let [u, v] = toks[..] else {
            bail!("expected \"u v\", got {part:?}");
        };
        let u: usize = u.parse().map_err(|_| anyhow!("bad vertex {u:?}"))?;
        let v: usize = v.parse().map_err(|_| anyhow!("bad vertex {v:?}"))?;
        if u == 0 || v == 0 {
            bail!("vertices are 1-based");
        }
        max_vertex = max_vertex.max(u).max(v);
        edges.push((u - 1, v - 1));
    }
    let n = forced_n.unwrap_or(max_vertex);
    if n == 0 {
        return Ok(None);
    }
    if max_vertex > n {
        bail!("edge mentions vertex {max_vertex} but only {n} vertices were declared");
    }
    Ok(Some(Graph::from_edges(n, &edges)?))
}

fn builtin_graph(name: &str) -> Result<Graph> {
    let parse_params = |rest: &str, want: usize| -> Result<Vec<usize>> {
        let params: Vec<usize> = rest
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| anyhow!("bad parameters {rest:?} in {name:?}"))?;
        if params.len() != want {
            bail!("{name:?} needs {want} parameter(s)");
        }
        Ok(params)
    };
    if name == "example42" {
        return Ok(example42());
    }
    if let Some((family, rest)) = name.split_once(':') {
        let p = |w| parse_params(rest, w);
        return Ok(match family {
            "cycle" => cycle(p(1)?[0]),
            "path" => path(p(1)?[0]),
            "complete" => complete(p(1)?[0]),
            "complete_bipartite" => {
                let p = p(2)?;
                complete_bipartite(p[0], p[1])
            }
            _ => bail!("unknown family {family:?}"),
        });
    }
    // compact names: C5, P4, K6, K2,3
    let (head, rest) = name.split_at(1);
    let ok = |g: Graph| Ok(g);
    match head {
        "C" | "c" => ok(cycle(parse_params(rest, 1)?[0])),
        "P" | "p" => ok(path(parse_params(rest, 1)?[0])),
        "K" | "k" => match parse_params(rest, 2) {
            Ok(p) => ok(complete_bipartite(p[0], p[1])),
            Err(_) => ok(complete(parse_params(rest, 1)?[0])),
        },
        _ => bail!("unknown builtin {name:?}"),
    }
}

// ============================================================================
// Shared plumbing
// ============================================================================

fn field_for(characteristic: u32) -> Result<Field> {
    if characteristic == 0 {
        return Ok(Field::Q);
    }
    if !is_prime(u64::from(characteristic)) {
        bail!("--char must be 0 or a prime, got {characteristic}");
    }
    Ok(Field::Fp(characteristic))
}

fn s_range(text: &str) -> Result<(u32, u32)> {
    let parse = |t: &str| -> Result<u32> {
        t.trim()
            .parse::<u32>()
            .map_err(|_| anyhow!("bad power {t:?} in --s {text:?}"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi)?),
        None => {
            let s = parse(text)?;
            (s, s)
        }
    };
    if lo < 1 || hi < lo || hi > 5 {
        bail!("--s must satisfy 1 <= MIN <= MAX <= 5, got {text:?}");
    }
    Ok((lo, hi))
}

fn timeout_for(secs: u64) -> Option<Duration> {
    (secs > 0).then(|| Duration::from_secs(secs))
}

fn configure_jobs(jobs: Option<usize>) -> Result<()> {
    if let Some(threads) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("--jobs")?;
    }
    Ok(())
}

fn open_out(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn canonical_graph6(g: &Graph) -> String {
    if g.n() <= MAX_CANONICAL_VERTICES {
        g.canonical_form().to_graph6()
    } else {
        g.to_graph6()
    }
}

// ============================================================================
// compute
// ============================================================================

/// What one power of one graph costs to recompute, so it is what the disk
/// cache stores. `timeout: true` entries are never written back.
#[derive(Serialize, Deserialize, Clone)]
struct PowerEntry {
    s: u32,
    reg_ordinary: Option<u32>,
    reg_symbolic: Option<u32>,
    gens_ordinary: Option<usize>,
    gens_symbolic: Option<usize>,
    symbolic_equals_ordinary: Option<bool>,
    timeout: bool,
}

fn power_entry(
    g: &Graph,
    ideal: &MonomialIdeal,
    s: u32,
    field: Field,
    budget: &Budget,
) -> PowerEntry {
    let mut entry = PowerEntry {
        s,
        reg_ordinary: None,
        reg_symbolic: None,
        gens_ordinary: None,
        gens_symbolic: None,
        symbolic_equals_ordinary: None,
        timeout: false,
    };
    let filled = (|| -> Result<(), BettiError> {
        let ordinary = ideal.power(s);
        let symbolic = symbolic_power_budgeted(g, s, budget)?;
        entry.gens_ordinary = Some(ordinary.gens().len());
        entry.gens_symbolic = Some(symbolic.gens().len());
        entry.symbolic_equals_ordinary = Some(ordinary == symbolic);
        entry.reg_ordinary = Some(regularity_in(&ordinary, field, budget)?.0);
        entry.reg_symbolic = Some(regularity_in(&symbolic, field, budget)?.0);
        Ok(())
    })();
    if let Err(e) = filled {
        match e {
            BettiError::Interrupted(_) => entry.timeout = true,
            // powers of a nonzero edge ideal are nonzero and proper
            other => unreachable!("power of edge ideal: {other}"),
        }
    }
    entry
}

fn compute_record(
    g: &Graph,
    lo: u32,
    hi: u32,
    field: Field,
    timeout: Option<Duration>,
    cache: &Cache,
) -> serde_json::Value {
    let g6 = canonical_graph6(g);
    if g.edge_count() == 0 {
        return json!({ "graph6": g6, "n": g.n(), "edges": 0, "zero_ideal": true });
    }
    let ideal = MonomialIdeal::edge_ideal(g);
    let budget = Budget::from_timeout(timeout);
    let base_key = format!("reg|{g6}|char={field}");
    let reg_edge_ideal: Option<u32> = cache.get(&base_key).or_else(|| {
        let reg = regularity_in(&ideal, field, &budget).ok().map(|r| r.0);
        if reg.is_some() {
            cache.put(&base_key, &reg);
        }
        reg
    });
    let mut powers = Vec::new();
    let mut timed_out = reg_edge_ideal.is_none();
    for s in lo..=hi {
        let key = format!("power|{g6}|s={s}|char={field}");
        let entry: PowerEntry = cache.get(&key).unwrap_or_else(|| {
            let e = power_entry(g, &ideal, s, field, &budget);
            if !e.timeout {
                cache.put(&key, &e);
            }
            e
        });
        timed_out |= entry.timeout;
        powers.push(entry);
    }
    json!({
        "graph6": g6,
        "n": g.n(),
        "edges": g.edge_count(),
        "zero_ideal": false,
        "gens_edge_ideal": ideal.gens().len(),
        "odd_girth": g.odd_girth().as_option(),
        "bipartite": g.is_bipartite(),
        "chordal": g.is_chordal(),
        "cochordal": g.complement().is_chordal(),
        "gap_free": g.is_gap_free(),
        "reg_edge_ideal": reg_edge_ideal,
        "powers": powers,
        "timeout": timed_out,
    })
}

fn cmd_compute(args: ComputeArgs) -> Result<ExitCode> {
    configure_jobs(args.jobs)?;
    let field = field_for(args.characteristic)?;
    let (lo, hi) = s_range(&args.s)?;
    let timeout = timeout_for(args.timeout);
    let mut out = open_out(&args.out)?;

    // an empty inline edge list has no graph at all, just the zero ideal
    if args
        .input
        .edges
        .as_deref()
        .is_some_and(|s| parse_inline_edges(s).ok() == Some(None))
    {
        writeln!(out, "{}", json!({ "n": 0, "edges": 0, "zero_ideal": true }))?;
        out.flush()?;
        return Ok(ExitCode::SUCCESS);
    }

    let graphs = resolve_graphs(&args.input)?;
    let cache = Cache::open();
    let mut records: Vec<(usize, String, serde_json::Value)> = graphs
        .par_iter()
        .map(|g| {
            let record = compute_record(g, lo, hi, field, timeout, &cache);
            (g.n(), canonical_graph6(g), record)
        })
        .collect();
    records.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    for (_, _, record) in &records {
        writeln!(out, "{record}")?;
    }
    out.flush()?;
    eprintln!("computed {} record(s)", records.len());
    Ok(ExitCode::SUCCESS)
}

// ============================================================================
// verify
// ============================================================================

fn parse_statements(list: Option<&str>) -> Result<Vec<Statement>> {
    let Some(list) = list else {
        return Ok(Statement::ALL.to_vec());
    };
    let mut statements = Vec::new();
    for id in list.split(',') {
        let id = id.trim();
        if id.is_empty() {
            continue;
        }
        statements.push(id.parse::<Statement>().map_err(|e| anyhow!("{e}"))?);
    }
    if statements.is_empty() {
        bail!("--statements is empty");
    }
    statements.dedup();
    Ok(statements)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    configure_jobs(args.jobs)?;
    let field = field_for(args.characteristic)?;
    let (s_min, s_max) = s_range(&args.s)?;
    let statements = parse_statements(args.statements.as_deref())?;
    let graphs = resolve_graphs(&args.input)?;
    let cfg = SweepConfig {
        s_min,
        s_max,
        timeout: timeout_for(args.timeout),
        field,
    };

    let reports = sweep(&graphs, &statements, &cfg);
    let mut out = open_out(&args.out)?;
    for report in &reports {
        writeln!(out, "{}", serde_json::to_string(report)?)?;
    }
    out.flush()?;

    let summary = summarize(&reports);
    eprint!("{summary}");
    if summary.failures() > 0 {
        eprintln!("{} failing instance(s)", summary.failures());
        return Ok(ExitCode::from(1));
    }
    if summary.timeouts() > 0 {
        eprintln!("{} timed out instance(s)", summary.timeouts());
    }
    Ok(ExitCode::SUCCESS)
}

// ============================================================================
// encode / decode
// ============================================================================

fn cmd_encode(args: EncodeArgs) -> Result<ExitCode> {
    let mut out = open_out(&args.out)?;
    if args
        .input
        .edges
        .as_deref()
        .is_some_and(|s| parse_inline_edges(s).ok() == Some(None))
    {
        bail!("nothing to encode: the edge list is empty");
    }
    for g in resolve_graphs(&args.input)? {
        writeln!(out, "{}", g.to_graph6())?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_decode(args: DecodeArgs) -> Result<ExitCode> {
    let mut lines: Vec<String> = args.strings.clone();
    if let Some(file) = &args.graph6 {
        let text =
            std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
        lines.extend(text.lines().map(str::to_owned));
    }
    if lines.is_empty() {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        lines.extend(text.lines().map(str::to_owned));
    }
    let mut out = open_out(&args.out)?;
    let mut first = true;
    for (i, raw) in lines.iter().enumerate() {
        let mut line = raw.trim();
        if i == 0 {
            line = line.strip_prefix(">>graph6<<").unwrap_or(line).trim();
        }
        if line.is_empty() {
            continue;
        }
        let g = Graph::from_graph6(line).with_context(|| format!("line {}: {line:?}", i + 1))?;
        if !first {
            writeln!(out)?;
        }
        first = false;
        write!(out, "{}", g.to_edge_list_text())?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_edges_forms() {
        assert_eq!(parse_inline_edges("").unwrap(), None);
        assert_eq!(parse_inline_edges("  ").unwrap(), None);
        let single = parse_inline_edges("1 2").unwrap().unwrap();
        assert_eq!((single.n(), single.edge_count()), (2, 1));
        let padded = parse_inline_edges("5: 1 2, 2 3").unwrap().unwrap();
        assert_eq!((padded.n(), padded.edge_count()), (5, 2));
        assert!(parse_inline_edges("2: 1 3").is_err());
        assert!(parse_inline_edges("0 1").is_err());
        assert!(parse_inline_edges("1 2 3").is_err());
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin_graph("C5").unwrap(), cycle(5));
        assert_eq!(builtin_graph("K4").unwrap(), complete(4));
        assert_eq!(builtin_graph("P3").unwrap(), path(3));
        assert_eq!(builtin_graph("K2,3").unwrap(), complete_bipartite(2, 3));
        assert_eq!(builtin_graph("cycle:7").unwrap(), cycle(7));
        assert_eq!(
            builtin_graph("complete_bipartite:3,4").unwrap(),
            complete_bipartite(3, 4)
        );
        assert_eq!(builtin_graph("example42").unwrap(), example42());
        assert!(builtin_graph("Q3").is_err());
        assert!(builtin_graph("cycle:x").is_err());
    }

    #[test]
    fn s_range_forms() {
        assert_eq!(s_range("2").unwrap(), (2, 2));
        assert_eq!(s_range("1..4").unwrap(), (1, 4));
        assert!(s_range("0").is_err());
        assert!(s_range("3..2").is_err());
        assert!(s_range("2..6").is_err());
        assert!(s_range("x").is_err());
    }

    #[test]
    fn graph6_header_is_skipped() {
        let graphs = parse_graph6_lines(">>graph6<<A_\nBw\n").unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0], complete(2));
    }

    #[test]
    fn statement_lists() {
        assert_eq!(parse_statements(None).unwrap(), Statement::ALL.to_vec());
        let picked = parse_statements(Some("seccol, cont")).unwrap();
        assert_eq!(picked.len(), 2);
        assert!(parse_statements(Some("nonsense")).is_err());
        assert!(parse_statements(Some("")).is_err());
    }
}
