use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::builder::BoolishValueParser;
use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use nkd_core::graph::families::{self, Family};
use nkd_core::graph::io::{read_edge_list, read_graph6, write_edge_list, write_graph6};
use nkd_core::harness::{read_graph6_stream, run_census, validate_census, CensusOptions, TheoremId};
use nkd_core::{
    find_decomposition_witness, is_nkd_by_characterization, is_nkd_by_definition, DecisionError, Graph, Limits,
    NkdParams, Variant, Verdict,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "nkd", version, about = "Decide and explore (n,k,d)-graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is an (n,k,d)-graph.
    Check(CheckArgs),
    /// Write one of the built-in counterexample families.
    Family(FamilyArgs),
    /// Search for a decomposition witness at an edge.
    Witness(WitnessArgs),
    /// Run the theorem harness over a graph6 stream.
    Census(CensusArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    El,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Definition,
    Characterization,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Blowup,
    CliquesPlusEdge,
    CliquesPlusEdgeCone,
    GadgetChain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    D1,
    D3,
}

#[derive(Args)]
struct Common {
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Lift the exhaustive order caps.
    #[arg(long, env = "NKD_ACCEPT_COST", action = ArgAction::SetTrue, value_parser = BoolishValueParser::new())]
    accept_cost: bool,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file, or - for standard input.
    #[arg(long, value_name = "FILE")]
    graph: String,
    /// Input format; inferred from the extension when absent.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct Params {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
}

impl Params {
    fn get(&self) -> NkdParams {
        NkdParams::new(self.n, self.k, self.d)
    }
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    input: GraphInput,
    #[command(flatten)]
    params: Params,
    #[arg(long, value_enum, default_value = "definition")]
    method: Method,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(value_enum)]
    name: FamilyName,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    copies: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct WitnessArgs {
    #[command(flatten)]
    input: GraphInput,
    #[command(flatten)]
    params: Params,
    #[arg(long, num_args = 2, value_names = ["U", "V"], required = true)]
    edge: Vec<usize>,
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct CensusArgs {
    /// graph6 stream, or - for standard input.
    #[arg(long, value_name = "FILE", default_value = "-")]
    input: String,
    #[arg(long, default_value_t = 7)]
    max_order: usize,
    /// Comma-separated theorem names, e.g. A3,B1,D3; all when absent.
    #[arg(long, value_delimiter = ',')]
    theorems: Vec<TheoremId>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the full JSON report here.
    #[arg(long, value_name = "FILE")]
    report: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(kind: &'static str, message: impl ToString) -> Self {
        Failure {
            code: 2,
            kind,
            message: message.to_string(),
        }
    }

    fn decode(message: impl ToString) -> Self {
        Failure {
            code: 3,
            kind: "decode",
            message: message.to_string(),
        }
    }
}

impl From<DecisionError> for Failure {
    fn from(e: DecisionError) -> Self {
        let kind = match e {
            DecisionError::Params(_) => "params",
            DecisionError::CapExceeded { .. } => "cap",
            DecisionError::NotAnEdge(..) => "edge-absent",
            DecisionError::Bounds(_) => "bounds",
            DecisionError::Graph(_) => "graph",
        };
        Failure::usage(kind, e)
    }
}

struct Outcome {
    code: u8,
    text: String,
    json: Value,
}

fn limits(common: &Common) -> Limits {
    Limits {
        accept_cost: common.accept_cost,
        ..Limits::default()
    }
}

fn infer_format(path: &str) -> Option<Format> {
    let ext = Path::new(path).extension()?.to_str()?.to_ascii_lowercase();
    match ext.as_str() {
        "g6" | "graph6" => Some(Format::G6),
        "el" | "txt" | "edges" => Some(Format::El),
        _ => None,
    }
}

fn read_source(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage("io", format!("standard input: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Failure::usage("io", format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn load_graph(input: &GraphInput) -> Result<Graph, Failure> {
    let text = read_source(&input.graph)?;
    let format = input.format.or_else(|| infer_format(&input.graph)).unwrap_or(Format::G6);
    match format {
        Format::El => read_edge_list(&text).map_err(Failure::decode),
        Format::G6 => {
            let mut lines = text.lines().filter(|l| !l.trim().is_empty());
            let first = lines.next().ok_or_else(|| Failure::decode("no graph6 line"))?;
            if lines.next().is_some() {
                return Err(Failure::decode("expected a single graph6 line"));
            }
            read_graph6(first.trim()).map_err(Failure::decode)
        }
    }
}

fn verdict_word(holds: bool) -> &'static str {
    if holds {
        "holds"
    } else {
        "fails"
    }
}

fn check(args: &CheckArgs) -> Result<Outcome, Failure> {
    let g = load_graph(&args.input)?;
    let p = args.params.get();
    p.validate(&g).map_err(|e| Failure::usage("params", e))?;
    let lim = limits(&args.common);
    let mut runs: Vec<(&str, Verdict)> = Vec::new();
    if matches!(args.method, Method::Definition | Method::Both) {
        runs.push(("definition", is_nkd_by_definition(&g, p, &lim)?));
    }
    if matches!(args.method, Method::Characterization | Method::Both) {
        runs.push(("characterization", is_nkd_by_characterization(&g, p, &lim)?));
    }
    let holds = runs.iter().all(|(_, v)| v.holds);
    let agree = runs.iter().all(|(_, v)| v.holds == runs[0].1.holds);

    let mut text = String::new();
    let _ = writeln!(text, "graph: {} vertices, {} edges", g.order(), g.edge_count());
    let _ = writeln!(text, "params: {p}");
    for (method, v) in &runs {
        let _ = writeln!(text, "{method}: {}", verdict_word(v.holds));
        if !v.holds {
            for line in v.to_key_value().lines().skip(1) {
                let _ = writeln!(text, "  {line}");
            }
        }
    }
    if runs.len() > 1 {
        let _ = writeln!(text, "agreement: {}", if agree { "yes" } else { "NO" });
    }
    let _ = writeln!(text, "{}", verdict_word(holds && agree));

    let results: Vec<Value> = runs
        .iter()
        .map(|(method, v)| json!({ "method": method, "verdict": v }))
        .collect();
    let mut json = json!({
        "command": "check",
        "order": g.order(),
        "params": { "n": p.n, "k": p.k, "d": p.d },
        "results": results,
        "holds": holds,
    });
    if runs.len() > 1 {
        json["agreement"] = json!(agree);
    }
    Ok(Outcome {
        code: if holds && agree { 0 } else { 1 },
        text,
        json,
    })
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::usage("usage", format!("{family} needs --{flag}")))
}

fn build_family(args: &FamilyArgs) -> Result<Family, Failure> {
    let bounds = |e: families::FamilyError| Failure::usage("bounds", e);
    match args.name {
        FamilyName::Blowup => {
            families::blowup_bipartite(need(args.d, "d", "blowup")?, need(args.m, "m", "blowup")?).map_err(bounds)
        }
        FamilyName::CliquesPlusEdge => families::cliques_plus_edge(
            need(args.d, "d", "cliques-plus-edge")?,
            need(args.m, "m", "cliques-plus-edge")?,
        )
        .map_err(bounds),
        FamilyName::CliquesPlusEdgeCone => families::cliques_plus_edge_cone(
            need(args.d, "d", "cliques-plus-edge-cone")?,
            need(args.m, "m", "cliques-plus-edge-cone")?,
        )
        .map_err(bounds),
        FamilyName::GadgetChain => {
            families::gadget_chain(need(args.copies, "copies", "gadget-chain")?).map_err(bounds)
        }
    }
}

fn family(args: &FamilyArgs) -> Result<Outcome, Failure> {
    let fam = build_family(args)?;
    let format = args
        .format
        .or_else(|| args.out.as_ref().and_then(|p| infer_format(&p.to_string_lossy())))
        .unwrap_or(Format::G6);
    let body = match format {
        Format::G6 => write_graph6(&fam.graph).map_err(|e| Failure::usage("graph", e))? + "\n",
        Format::El => write_edge_list(&fam.graph),
    };
    let mut text = String::new();
    match &args.out {
        Some(path) => {
            fs::write(path, &body).map_err(|e| Failure::usage("io", format!("{}: {e}", path.display())))?
        }
        None if !args.common.json => text.push_str(&body),
        None => {}
    }
    let mut info = String::new();
    let _ = writeln!(info, "order: {}", fam.graph.order());
    let _ = writeln!(info, "edges: {}", fam.graph.edge_count());
    if !fam.distinguished_vertices.is_empty() {
        let vs: Vec<String> = fam.distinguished_vertices.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(info, "distinguished vertices: {}", vs.join(" "));
    }
    if let Some((u, v)) = fam.distinguished_edge {
        let _ = writeln!(info, "distinguished edge: {u} {v}");
    }
    if args.out.is_some() {
        text.push_str(&info);
    } else if !args.common.json {
        eprint!("{info}");
    }
    let json = json!({
        "command": "family",
        "order": fam.graph.order(),
        "edges": fam.graph.edge_count(),
        "distinguished_vertices": fam.distinguished_vertices,
        "distinguished_edge": fam.distinguished_edge,
        "graph": if args.out.is_none() { Value::String(body) } else { Value::Null },
    });
    Ok(Outcome { code: 0, text, json })
}

fn witness(args: &WitnessArgs) -> Result<Outcome, Failure> {
    let g = load_graph(&args.input)?;
    let p = args.params.get();
    let edge = (args.edge[0], args.edge[1]);
    let variant = match args.variant {
        VariantArg::D1 => Variant::D1,
        VariantArg::D3 => Variant::D3,
    };
    let found = find_decomposition_witness(&g, p, edge, variant, &limits(&args.common))?;
    let text = match &found {
        Some(w) => w.to_key_value(),
        None => "no witness\n".to_string(),
    };
    let json = json!({
        "command": "witness",
        "params": { "n": p.n, "k": p.k, "d": p.d },
        "edge": edge,
        "variant": variant.to_string(),
        "witness": found,
    });
    Ok(Outcome {
        code: if found.is_some() { 0 } else { 1 },
        text,
        json,
    })
}

fn census(args: &CensusArgs) -> Result<Outcome, Failure> {
    let mut theorems = args.theorems.clone();
    if theorems.is_empty() {
        theorems = TheoremId::ALL.to_vec();
    }
    let options = CensusOptions {
        max_order: args.max_order,
        theorems,
        jobs: args.jobs,
        limits: limits(&args.common),
    };
    validate_census(&options)?;
    let text = read_source(&args.input)?;
    let report = run_census(read_graph6_stream(&text), &options)?;
    let full = report.to_json();
    if let Some(path) = &args.report {
        fs::write(path, format!("{full}\n")).map_err(|e| Failure::usage("io", format!("{}: {e}", path.display())))?;
    }
    let code = if report.violation_count() > 0 {
        1
    } else if !report.decode_errors.is_empty() {
        3
    } else {
        0
    };
    Ok(Outcome {
        code,
        text: report.summary(),
        json: serde_json::from_str(&full).expect("report is valid JSON"),
    })
}

fn emit(json_mode: bool, result: Result<Outcome, Failure>) -> ExitCode {
    let mut out = io::stdout().lock();
    let code = match result {
        Ok(o) => {
            if json_mode {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("serializes"));
            } else {
                let _ = out.write_all(o.text.as_bytes());
            }
            o.code
        }
        Err(f) => {
            if json_mode {
                let err = json!({ "error": { "kind": f.kind, "message": f.message }, "exit": f.code });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&err).expect("serializes"));
            }
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Check(a) => emit(a.common.json, check(a)),
        Command::Family(a) => emit(a.common.json, family(a)),
        Command::Witness(a) => emit(a.common.json, witness(a)),
        Command::Census(a) => emit(a.common.json, census(a)),
    }
}
