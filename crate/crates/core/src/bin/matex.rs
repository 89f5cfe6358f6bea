use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matex::constructions::{
    cluster_split, coloring_induction_step, construct_k_prime, lower_bound_p_r2, pigeonhole_witness, InductionState,
};
use matex::patterns::{generate_t, pattern_l, pattern_p, TrsParams};
use matex::render::layout_svg;
use matex::search::{ex_columns_with, ex_weight, ColumnExtremalQuery, ExtremalResult, UNLIMITED};
use matex::verify::{self, Suite, VerifyConfig};
use matex::visibility::{matrix_to_visibility, sweep_edges, BarLayout};
use matex::{Error, Matrix01, PatternSet};

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCOMPLETE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "matex",
    version,
    about = "Extremal functions of forbidden 0-1 matrix patterns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute ex(m,n,S) or ex_k(m,S) exactly
    Compute(ComputeArgs),
    /// Print a named pattern family or construction
    Generate(GenerateArgs),
    /// Run verification suites
    Verify(VerifyArgs),
    /// Draw a bar layout, or the layout of a matrix, as SVG
    Render(RenderArgs),
    /// Apply a single construction step to a matrix
    #[command(subcommand)]
    Transform(TransformCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Weight,
    Columns,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
    Svg,
}

#[derive(Args)]
struct ComputeArgs {
    kind: Kind,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Pattern file; blank lines separate several patterns. Repeatable.
    #[arg(long = "pattern", value_name = "FILE")]
    patterns: Vec<PathBuf>,
    /// Built-in pattern: L1, L2, L3, P<r>x<c> or T<r>,<s>. Repeatable.
    #[arg(long = "builtin", value_name = "NAME")]
    builtins: Vec<String>,
    /// Node budget; exhausting it yields a lower bound and exit code 3.
    #[arg(long)]
    budget: Option<u64>,
    /// Shuffle the column candidate order with this seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Sweep n (weight) or m (columns) from its given value up to this one.
    #[arg(long, value_name = "TO")]
    sweep: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "T", alias = "t")]
    T,
    #[value(name = "Kprime", alias = "kprime")]
    Kprime,
    #[value(name = "pigeonhole")]
    Pigeonhole,
    #[value(name = "lowerP", alias = "lowerp")]
    LowerP,
}

#[derive(Args)]
struct GenerateArgs {
    family: Family,
    #[arg(long)]
    i: Option<u8>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run: all, or any of containment, pigeonhole, edges, rangeo,
    /// split, tfamily, kvis, induction, monotone, reverse, boundary.
    #[arg(default_value = "all")]
    suites: Vec<String>,
    #[arg(long, default_value_t = 1)]
    scale: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct RenderArgs {
    /// Bar layout file: one `y x_left x_right` line per bar.
    #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
    layout: Option<PathBuf>,
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    r: usize,
    #[arg(long, default_value_t = 0)]
    s: usize,
    /// Draw witness segments.
    #[arg(long)]
    witnesses: bool,
}

#[derive(Subcommand)]
enum TransformCommand {
    /// Split every column into clusters of k ones
    ClusterSplit {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Add one one per column by greedy coloring of the column graph
    InductionStep {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Incomplete(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownBound { .. } => Failure::Incomplete(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CliResult = Result<Output, Failure>;

/// Text to print plus whether a search ran out of budget.
struct Output {
    text: String,
    incomplete: bool,
}

impl Output {
    fn done(text: String) -> Self {
        Output {
            text,
            incomplete: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Generate(a) => generate(a),
        Command::Verify(a) => run_verify(a),
        Command::Render(a) => render(a),
        Command::Transform(t) => transform(t),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.incomplete {
                eprintln!("matex: budget exhausted, value is a lower bound");
                ExitCode::from(EXIT_INCOMPLETE)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("matex: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Incomplete(msg)) => {
            eprintln!("matex: {msg}");
            ExitCode::from(EXIT_INCOMPLETE)
        }
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<Matrix01, Failure> {
    Matrix01::parse(&read_input(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn builtin(name: &str) -> Result<PatternSet, Failure> {
    let bad = || Failure::Input(format!("unknown built-in pattern {name:?}"));
    let nums = |rest: &str, sep: char| -> Result<(usize, usize), Failure> {
        let (a, b) = rest.split_once(sep).ok_or_else(bad)?;
        Ok((
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ))
    };
    match name.chars().next() {
        Some('L' | 'l') => {
            let i = name[1..].parse().map_err(|_| bad())?;
            Ok(PatternSet::single(pattern_l(i)?))
        }
        Some('P' | 'p') => {
            let (r, c) = nums(&name[1..], 'x')?;
            if r == 0 || c == 0 {
                return Err(bad());
            }
            Ok(PatternSet::single(pattern_p(r, c)))
        }
        Some('T' | 't') => {
            let (r, s) = nums(&name[1..], ',')?;
            Ok(generate_t(TrsParams::new(r, s)))
        }
        _ => Err(bad()),
    }
}

fn load_patterns(files: &[PathBuf], builtins: &[String]) -> Result<PatternSet, Failure> {
    let mut sets = Vec::new();
    for f in files {
        sets.push(PatternSet::parse(&read_input(f)?).map_err(|e| Failure::Input(format!("{}: {e}", f.display())))?);
    }
    for b in builtins {
        sets.push(builtin(b)?);
    }
    if sets.is_empty() {
        return Err(Failure::Input("give at least one --pattern or --builtin".into()));
    }
    Ok(PatternSet::union(&sets)?)
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Input(format!("missing --{flag}")))
}

fn result_json(query: Value, r: &ExtremalResult) -> Value {
    json!({
        "schema": "1",
        "query": query,
        "value": r.value,
        "exact": r.exact,
        "witness": r.witness.as_ref().map(Matrix01::to_text),
        "nodes_explored": r.nodes_explored,
    })
}

fn compute(a: ComputeArgs) -> CliResult {
    let set = load_patterns(&a.patterns, &a.builtins)?;
    let budget = a.budget.unwrap_or(UNLIMITED);
    let texts: Vec<String> = set.iter().map(Matrix01::to_text).collect();
    // (m, n, k) per point of the sweep
    let points: Vec<(usize, usize, usize)> = match a.kind {
        Kind::Weight => {
            let n = need(a.n, "n")?;
            let to = a.sweep.unwrap_or(n);
            (n..=to).map(|n| (a.m.unwrap_or(n), n, 0)).collect()
        }
        Kind::Columns => {
            let m = need(a.m, "m")?;
            let k = need(a.k, "k")?;
            (m..=a.sweep.unwrap_or(m)).map(|m| (m, 0, k)).collect()
        }
    };
    if points.is_empty() {
        return Err(Failure::Input("--sweep end is below the start".into()));
    }
    let mut rows = Vec::new();
    for &(m, n, k) in &points {
        let (query, r) = match a.kind {
            Kind::Weight => (
                json!({ "kind": "weight", "m": m, "n": n, "patterns": texts }),
                ex_weight(m, n, &set, budget)?,
            ),
            Kind::Columns => {
                let q = ColumnExtremalQuery::new(m, k, set.clone())?;
                (
                    json!({ "kind": "columns", "m": m, "k": k, "patterns": texts }),
                    ex_columns_with(&q, budget, a.seed)?,
                )
            }
        };
        rows.push((m, n, k, query, r));
    }
    let incomplete = rows.iter().any(|row| !row.4.exact);
    let text = match a.format {
        Format::Csv => {
            let mut s = String::from("kind,m,n,k,value,exact,nodes_explored\n");
            for (m, n, k, _, r) in &rows {
                let (kind, n, k) = match a.kind {
                    Kind::Weight => ("weight", n.to_string(), String::new()),
                    Kind::Columns => ("columns", String::new(), k.to_string()),
                };
                s += &format!("{kind},{m},{n},{k},{},{},{}\n", r.value, r.exact, r.nodes_explored);
            }
            s
        }
        Format::Text => rows
            .iter()
            .map(|(_, _, _, q, r)| {
                let mut s = format!(
                    "{} value={} exact={} nodes={}\n",
                    compact_query(q),
                    r.value,
                    r.exact,
                    r.nodes_explored
                );
                if let Some(w) = &r.witness {
                    s += &w.to_text();
                    s.push('\n');
                }
                s
            })
            .collect(),
        Format::Json if rows.len() == 1 => {
            let (_, _, _, q, r) = rows.pop().expect("one row");
            format!("{}\n", result_json(q, &r))
        }
        Format::Json => {
            let results: Vec<Value> = rows.into_iter().map(|(_, _, _, q, r)| result_json(q, &r)).collect();
            format!("{}\n", json!({ "schema": "1", "results": results }))
        }
        Format::Svg => return Err(Failure::Input("compute supports json, csv and text".into())),
    };
    Ok(Output { text, incomplete })
}

fn compact_query(q: &Value) -> String {
    ["kind", "m", "n", "k"]
        .iter()
        .filter_map(|key| {
            q.get(*key)
                .map(|v| format!("{key}={}", v.to_string().trim_matches('"')))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn generate(a: GenerateArgs) -> CliResult {
    let text = match a.family {
        Family::L => pattern_l(need(a.i, "i")?)?.to_text(),
        Family::P => {
            let (r, c) = (need(a.r, "r")?, need(a.c, "c")?);
            if r == 0 || c == 0 {
                return Err(Failure::Input("P needs r, c >= 1".into()));
            }
            pattern_p(r, c).to_text()
        }
        Family::T => generate_t(TrsParams::new(need(a.r, "r")?, need(a.s, "s")?)).to_text(),
        Family::Kprime => construct_k_prime(need(a.m, "m")?, need(a.k, "k")?)?.to_text(),
        Family::Pigeonhole => pigeonhole_witness(need(a.m, "m")?, need(a.k, "k")?, need(a.c, "c")?)?.to_text(),
        Family::LowerP => {
            let (m, r, k) = (need(a.m, "m")?, need(a.r, "r")?, need(a.k, "k")?);
            let run = lower_bound_p_r2(m, r, k)?;
            if a.format == Format::Json {
                let v = json!({
                    "schema": "1",
                    "params": { "m": m, "r": r, "k": k },
                    "base_delta": run.base_delta,
                    "rows": run.state.matrix.rows(),
                    "columns": run.state.matrix.cols(),
                    "witness": run.state.matrix.to_text(),
                    "trace": run.trace,
                });
                return Ok(Output::done(format!("{v}\n")));
            }
            run.state.matrix.to_text()
        }
    };
    Ok(Output::done(text + "\n"))
}

fn run_verify(a: VerifyArgs) -> CliResult {
    let mut suites = Vec::new();
    for name in &a.suites {
        if name == "all" {
            suites.extend(Suite::ALL);
        } else {
            suites.push(Suite::from_name(name).ok_or_else(|| Failure::Input(format!("unknown suite {name:?}")))?);
        }
    }
    if a.scale == 0 {
        return Err(Failure::Input("--scale must be at least 1".into()));
    }
    let report = verify::run(
        &suites,
        &VerifyConfig {
            scale: a.scale,
            seed: a.seed,
        },
    );
    match a.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
        Format::Text => print!("{}", report.to_table()),
        _ => return Err(Failure::Input("verify supports json and text".into())),
    }
    if report.passed() {
        Ok(Output::done(String::new()))
    } else {
        Err(Failure::Verify)
    }
}

fn render(a: RenderArgs) -> CliResult {
    let (layout, edges) = match (&a.layout, &a.matrix) {
        (Some(path), _) => {
            let layout = BarLayout::parse(&read_input(path)?, a.s)?;
            let edges = sweep_edges(&layout);
            (layout, edges)
        }
        (None, Some(path)) => {
            let vis = matrix_to_visibility(&read_matrix(path)?, a.r, a.s)?;
            (vis.layout, vis.edges)
        }
        (None, None) => return Err(Failure::Input("give --layout or --matrix".into())),
    };
    Ok(Output::done(layout_svg(&layout, &edges, a.witnesses)))
}

fn transform(t: TransformCommand) -> CliResult {
    match t {
        TransformCommand::ClusterSplit { matrix, k } => {
            let out = cluster_split(&read_matrix(&matrix)?, k)?;
            Ok(Output::done(out.to_text() + "\n"))
        }
        TransformCommand::InductionStep { matrix, r, format } => {
            let state = InductionState::new(read_matrix(&matrix)?, r)?;
            let (next, trace) = coloring_induction_step(&state, r)?;
            if format == Format::Json {
                let v = json!({ "schema": "1", "witness": next.matrix.to_text(), "trace": trace });
                return Ok(Output::done(format!("{v}\n")));
            }
            Ok(Output::done(next.matrix.to_text() + "\n"))
        }
    }
}
