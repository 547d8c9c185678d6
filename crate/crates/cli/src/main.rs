use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cyclesat::bounds::{g_samples, sat_bounds};
use cyclesat::constructions::ConstructionSpec;
use cyclesat::saturation::{certify, sat_oracle, CheckOptions};
use cyclesat::structure::analyze;
use cyclesat::{graph6, Error, Graph, SCHEMA_VERSION};

/// Largest order `sat-search` runs without `--extended`.
const DEFAULT_SEARCH_CAP: usize = 9;

#[derive(Parser)]
#[command(name = "cyclesat", version, about = "Build, verify and search for long-cycle saturated graphs")]
struct Cli {
    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a family and print it as graph6.
    Construct(ConstructArgs),
    /// Decide C>=r-saturation and print a certificate per input graph.
    Verify(VerifyArgs),
    /// Find sat(n, C>=r) by exhaustive search.
    SatSearch(SearchArgs),
    /// Report partition, structural properties and block data.
    Analyze(AnalyzeArgs),
    /// Tabulate known bounds, or sample g(x).
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Kn,
    D,
    H,
    M6,
    Snark,
    Mrn,
    GoodBase,
}

#[derive(Args)]
struct ConstructArgs {
    /// JSON recipe file; overrides the inline flags.
    #[arg(long, value_name = "FILE", conflicts_with = "family")]
    recipe: Option<PathBuf>,
    #[arg(long, value_enum, required_unless_present = "recipe")]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Base graph for `mrn`: a graph6 line or a JSON recipe.
    #[arg(long, value_name = "FILE")]
    base: Option<PathBuf>,
}

#[derive(Args)]
struct Input {
    /// graph6 strings; read one per line from --input or stdin when absent.
    graphs: Vec<String>,
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    r: usize,
    /// Node-expansion cap for the exact searches.
    #[arg(long)]
    budget: Option<u64>,
    /// Re-decide every non-edge through the cycles of G + uv.
    #[arg(long)]
    cross_check: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    max_edges: Option<usize>,
    /// Worker threads; the output does not depend on it.
    #[arg(long)]
    jobs: Option<usize>,
    /// Allow n above the default cap of 9.
    #[arg(long)]
    extended: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    r: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct BoundsArgs {
    /// Inclusive range such as `6..20`, or a single value.
    #[arg(long, value_parser = parse_range, required_unless_present = "plot_g", requires = "r_range")]
    n_range: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range, requires = "n_range")]
    r_range: Option<RangeInclusive<usize>>,
    /// Emit this many exact samples `(i/N, g(i/N))` instead of the table.
    #[arg(long, value_name = "N", conflicts_with_all = ["n_range", "r_range"])]
    plot_g: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => match s.split_once('-') {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        },
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// Failures that map to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::ResourceExhausted { .. }) => 3,
        Some(Error::NoSaturatedGraph { .. } | Error::CrossCheckMismatch { .. }) => 1,
        Some(_) => 2,
        None => 2,
    }
}

struct Output {
    text: String,
}

impl Output {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn json(&mut self, v: &impl serde::Serialize) -> anyhow::Result<()> {
        let s = serde_json::to_string_pretty(v)?;
        self.line(s);
        Ok(())
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn read_graphs(input: &Input) -> anyhow::Result<Vec<(String, Graph)>> {
    let lines: Vec<String> = if !input.graphs.is_empty() {
        input.graphs.clone()
    } else {
        let text = match &input.input {
            Some(p) => read_text(p)?,
            None => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).context("reading stdin")?;
                s
            }
        };
        text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect()
    };
    if lines.is_empty() {
        return Err(usage("no graph6 input"));
    }
    lines
        .into_iter()
        .map(|l| {
            let g = graph6::parse(&l).map_err(|e| usage(format!("{l:?}: {e}")))?;
            Ok((l, g))
        })
        .collect()
}

fn need(v: Option<usize>, flag: &str, family: &str) -> anyhow::Result<usize> {
    v.ok_or_else(|| usage(format!("--family {family} needs --{flag}")))
}

fn load_spec(path: &Path) -> anyhow::Result<ConstructionSpec> {
    let text = read_text(path)?;
    let t = text.trim();
    if t.starts_with('{') {
        serde_json::from_str(t).map_err(|e| usage(format!("{}: bad recipe: {e}", path.display())))
    } else {
        let line = t.lines().next().unwrap_or("").trim().to_string();
        Ok(ConstructionSpec::Graph6 { data: line })
    }
}

fn construct_spec(a: &ConstructArgs) -> anyhow::Result<ConstructionSpec> {
    if let Some(p) = &a.recipe {
        return load_spec(p);
    }
    let family = a.family.expect("clap enforces --family or --recipe");
    Ok(match family {
        Family::Kn => ConstructionSpec::Kn { n: need(a.n, "n", "kn")? },
        Family::D => ConstructionSpec::D {
            a: need(a.a, "a", "d")?,
            b: need(a.b, "b", "d")?,
        },
        Family::H => ConstructionSpec::H {
            n: need(a.n, "n", "h")?,
            k: need(a.k, "k", "h")?,
            r: need(a.r, "r", "h")?,
        },
        Family::M6 => ConstructionSpec::M6 { n: need(a.n, "n", "m6")? },
        Family::Snark => ConstructionSpec::Snark { k: need(a.k, "k", "snark")? },
        Family::GoodBase => ConstructionSpec::GoodBase { r: need(a.r, "r", "good-base")? },
        Family::Mrn => {
            let r = need(a.r, "r", "mrn")?;
            let base = match &a.base {
                Some(p) => load_spec(p)?,
                None if r >= 56 => ConstructionSpec::GoodBase { r },
                None => return Err(usage("--family mrn needs --base below r = 56")),
            };
            ConstructionSpec::Mrn {
                r,
                n: need(a.n, "n", "mrn")?,
                base: Box::new(base),
            }
        }
    })
}

fn cmd_construct(a: &ConstructArgs, out: &mut Output) -> anyhow::Result<u8> {
    let spec = construct_spec(a)?;
    for w in spec.warnings() {
        eprintln!("warning: {w}");
    }
    let g = spec.build()?;
    out.line(graph6::emit(&g));
    eprintln!("n={} m={} family={}", g.order(), g.size(), spec.family());
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs, out: &mut Output) -> anyhow::Result<u8> {
    let opts = CheckOptions {
        budget: a.budget,
        cross_check: a.cross_check,
    };
    let mut code = 0;
    for (_, g) in read_graphs(&a.input)? {
        let cert = certify(&g, a.r, opts)?;
        if !cert.is_saturated() {
            code = 1;
        }
        out.json(&cert)?;
    }
    Ok(code)
}

fn cmd_sat_search(a: &SearchArgs, out: &mut Output) -> anyhow::Result<u8> {
    if a.n > DEFAULT_SEARCH_CAP && !a.extended {
        return Err(usage(format!(
            "n = {} exceeds the default cap of {DEFAULT_SEARCH_CAP}; pass --extended",
            a.n
        )));
    }
    let max_edges = a.max_edges.unwrap_or(a.n * a.n.saturating_sub(1) / 2);
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = a.jobs {
        if j == 0 {
            return Err(usage("--jobs must be positive"));
        }
        pool = pool.num_threads(j);
    }
    let pool = pool.build()?;
    let res = pool.install(|| sat_oracle(a.n, a.r, max_edges))?;
    out.json(&res)?;
    Ok(0)
}

fn cmd_analyze(a: &AnalyzeArgs, out: &mut Output) -> anyhow::Result<u8> {
    for (_, g) in read_graphs(&a.input)? {
        out.json(&analyze(&g, a.r)?)?;
    }
    Ok(0)
}

fn source_name(s: &impl serde::Serialize) -> String {
    serde_json::to_value(s)
        .ok()
        .and_then(|v| v.as_str().map(String::from))
        .unwrap_or_default()
}

fn cmd_bounds(a: &BoundsArgs, out: &mut Output) -> anyhow::Result<u8> {
    if let Some(samples) = a.plot_g {
        let pts = g_samples(samples)?;
        match a.format {
            Format::Csv => {
                out.line("x,g");
                for (x, y) in &pts {
                    out.line(format!("{x},{y}"));
                }
            }
            Format::Json => {
                let rows: Vec<_> = pts
                    .iter()
                    .map(|(x, y)| json!({ "x": x.to_string(), "g": y.to_string() }))
                    .collect();
                out.json(&json!({ "schema_version": SCHEMA_VERSION, "samples": rows }))?;
            }
        }
        return Ok(0);
    }
    let (ns, rs) = match (&a.n_range, &a.r_range) {
        (Some(n), Some(r)) => (n.clone(), r.clone()),
        _ => bail!(usage("--n-range and --r-range are required together")),
    };
    if *rs.start() < 3 {
        return Err(usage("--r-range must start at 3 or more"));
    }
    let mut rows = Vec::new();
    for r in rs {
        for n in ns.clone().filter(|&n| n >= r) {
            rows.push(sat_bounds(n, r)?);
        }
    }
    if rows.is_empty() {
        return Err(usage("no (n, r) pair with n >= r in the given ranges"));
    }
    match a.format {
        Format::Csv => {
            out.line("n,r,lower,upper,exact,source");
            for b in &rows {
                let opt = |v: Option<usize>| v.map_or(String::new(), |v| v.to_string());
                let source = b.upper_source.filter(|_| b.exact.is_some()).unwrap_or(b.lower_source);
                out.line(format!(
                    "{},{},{},{},{},{}",
                    b.n,
                    b.r,
                    b.lower,
                    opt(b.upper),
                    opt(b.exact),
                    source_name(&source)
                ));
            }
        }
        Format::Json => out.json(&json!({ "schema_version": SCHEMA_VERSION, "rows": rows }))?,
    }
    Ok(0)
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let mut out = Output { text: String::new() };
    let code = match &cli.command {
        Command::Construct(a) => cmd_construct(a, &mut out),
        Command::Verify(a) => cmd_verify(a, &mut out),
        Command::SatSearch(a) => cmd_sat_search(a, &mut out),
        Command::Analyze(a) => cmd_analyze(a, &mut out),
        Command::Bounds(a) => cmd_bounds(a, &mut out),
    }?;
    match &cli.out {
        Some(p) => fs::write(p, &out.text).map_err(|e| anyhow!("cannot write {}: {e}", p.display()))?,
        None => io::stdout().write_all(out.text.as_bytes())?,
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
