//! Command-line front end: compute parameters, verify broadcasts, run the
//! 5/4 construction, scan corpora, and export graphs.
//!
//! Exit codes: 0 success, 2 input error, 3 budget exceeded, 4 invariant or
//! verification failure. Output is deterministic for a fixed configuration;
//! the solvers are single-threaded, so `--threads` only caps future
//! parallelism and never changes results.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use broadcast_dom::analysis;
use broadcast_dom::bound;
use broadcast_dom::corpus;
use broadcast_dom::error::Error;
use broadcast_dom::io as gio;
use broadcast_dom::irredundance;
use broadcast_dom::solvers::{self, ParameterResult, Witness};
use broadcast_dom::{Broadcast, FamilySpec, Graph};

#[derive(Parser)]
#[command(name = "bdom", version, about = "broadcast domination and irredundance toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args)]
struct GraphSource {
    /// Edge-list file (optional `p <n>` header, one `u v` pair per line)
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Generated family, e.g. path:6, cycle:5, grid:3x4, spider:3,
    /// tworcliques:4
    #[arg(long)]
    family: Option<String>,
}

impl GraphSource {
    fn load(&self) -> Result<Graph, Error> {
        match (&self.graph, &self.family) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                gio::parse_edge_list(&text)
            }
            (None, Some(spec)) => FamilySpec::parse(spec)?.generate(),
            _ => Err(Error::Parse("exactly one of --graph and --family is required".into())),
        }
    }
}

#[derive(Args)]
struct Common {
    /// State cap for maximality and maximization searches
    #[arg(long, default_value_t = irredundance::DEFAULT_MAX_STATES)]
    budget_states: u64,
    /// Vertex cap per connected component for the exhaustive solvers
    #[arg(long, default_value_t = 12)]
    budget_vertices: usize,
    /// Worker cap (the solvers are deterministic and currently run on one
    /// thread; accepted for forward compatibility)
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

impl Common {
    fn budget(&self) -> solvers::Budget {
        solvers::Budget {
            max_component_vertices: self.budget_vertices,
            max_states: self.budget_states,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute parameters with witnesses and certificates
    Compute {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
        /// Comma-separated: gamma_b, Gamma_b, ir_b, IR_b, mp, gamma,
        /// Gamma, ir, IR
        #[arg(long, required = true)]
        param: String,
    },
    /// Evaluate the predicates and the maximality characterization on a
    /// broadcast
    Verify {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
        /// Broadcast JSON file: {"vertex": power, ...}, zeros omitted
        #[arg(long)]
        broadcast: PathBuf,
        /// Cross-check maximality by exhaustive enumeration
        #[arg(long)]
        oracle: bool,
    },
    /// Run the 5/4-competitive dominating-broadcast construction
    Construct {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        broadcast: PathBuf,
    },
    /// Chain checks and conjecture evaluation over a corpus
    Scan {
        #[command(flatten)]
        common: Common,
        /// Scan one generated family graph
        #[arg(long, conflicts_with = "random")]
        family: Option<String>,
        /// Scan seeded random connected graphs on this many vertices
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Emit a graph as an edge list or DOT
    Generate {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::LoopEdge(_)
        | Error::EdgeOutOfRange { .. }
        | Error::Disconnected
        | Error::EmptyVertexSet
        | Error::VertexOutOfRange(_)
        | Error::InvalidFamily(_)
        | Error::BroadcastLength { .. }
        | Error::PowerExceedsEccentricity { .. } => 2,
        Error::Budget(_) => 3,
        _ => 4,
    }
}

fn load_broadcast(g: &Graph, path: &PathBuf) -> Result<Broadcast, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Broadcast::from_json(g, &value)
}

fn print_parameter(r: &ParameterResult, format: Format, g: &Graph) -> Result<(), Error> {
    match format {
        Format::Json => println!("{}", serde_json::to_string(r).expect("result serializes")),
        Format::Text => {
            let witness = match &r.witness {
                Witness::Broadcast(b) => b.to_json().to_string(),
                Witness::Set(s) => format!("{s:?}"),
            };
            println!("{} = {}  witness {}", r.name, r.value, witness);
            if let Some(cert) = &r.certificate {
                println!("  multipacking certificate {:?}", cert.vertices);
            }
        }
        Format::Dot => match &r.witness {
            Witness::Broadcast(b) => print!("{}", gio::to_dot(g, Some(b))),
            Witness::Set(_) => {
                return Err(Error::Parse(format!(
                    "parameter {} has a set witness; dot export needs a broadcast",
                    r.name
                )))
            }
        },
    }
    Ok(())
}

fn cmd_compute(source: &GraphSource, common: &Common, param: &str) -> Result<(), Error> {
    let g = source.load()?;
    let budget = common.budget();
    let mut set_cache: Option<solvers::SetParams> = None;
    for name in param.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let result = match name {
            "gamma_b" => solvers::gamma_b_with_budget(&g, &budget)?,
            "Gamma_b" => solvers::upper_gamma_b_with_budget(&g, &budget)?,
            "ir_b" => solvers::ir_b_with_budget(&g, &budget)?,
            "IR_b" => solvers::upper_ir_b_with_budget(&g, &budget)?,
            "mp" => solvers::mp_with_budget(&g, &budget)?,
            "gamma" | "Gamma" | "ir" | "IR" => {
                if set_cache.is_none() {
                    set_cache = Some(solvers::set_params_with_budget(&g, &budget)?);
                }
                let s = set_cache.as_ref().unwrap();
                match name {
                    "gamma" => s.gamma.clone(),
                    "Gamma" => s.upper_gamma.clone(),
                    "ir" => s.ir.clone(),
                    _ => s.upper_ir.clone(),
                }
            }
            other => return Err(Error::Parse(format!("unknown parameter `{other}`"))),
        };
        print_parameter(&result, common.format, &g)?;
    }
    Ok(())
}

fn cmd_verify(
    source: &GraphSource,
    common: &Common,
    broadcast: &PathBuf,
    oracle: bool,
) -> Result<(), Error> {
    let g = source.load()?;
    let f = load_broadcast(&g, broadcast)?;
    let dominating = analysis::is_dominating(&g, &f)?;
    let irredundant = analysis::is_irredundant(&g, &f)?;
    let maximality = if irredundant {
        Some(irredundance::is_maximal_irredundant_with_budget(
            &g,
            &f,
            common.budget_states,
        )?)
    } else {
        None
    };
    let maximal = maximality.as_ref().map(|ev| ev.maximal);
    let oracle_verdict = if oracle && irredundant {
        let v = irredundance::is_maximal_irredundant_oracle(&g, &f)?;
        if maximal != Some(v) {
            return Err(Error::Construction(format!(
                "maximality checker says {maximal:?} but the oracle says {v}"
            )));
        }
        Some(v)
    } else {
        None
    };
    match common.format {
        Format::Json => {
            let report = json!({
                "broadcast": f.to_json(),
                "cost": f.cost(),
                "dominating": dominating,
                "irredundant": irredundant,
                "minimal_dominating": dominating && irredundant,
                "maximal_irredundant": maximal,
                "oracle": oracle_verdict,
                "evidence": maximality,
            });
            println!("{report}");
        }
        Format::Text => {
            println!("cost {}", f.cost());
            println!("dominating           {dominating}");
            println!("irredundant          {irredundant}");
            println!("minimal dominating   {}", dominating && irredundant);
            match maximal {
                Some(m) => println!("maximal irredundant  {m}"),
                None => println!("maximal irredundant  n/a (not irredundant)"),
            }
            if let Some(v) = oracle_verdict {
                println!("oracle agrees        {v}");
            }
        }
        Format::Dot => print!("{}", gio::to_dot(&g, Some(&f))),
    }
    Ok(())
}

fn cmd_construct(
    source: &GraphSource,
    common: &Common,
    broadcast: &PathBuf,
) -> Result<(), Error> {
    let g = source.load()?;
    let f = load_broadcast(&g, broadcast)?;
    let trace = bound::construct_dominating_with_budget(&g, &f, common.budget_states)?;
    match common.format {
        Format::Json => {
            println!("{}", serde_json::to_string(&trace).expect("trace serializes"))
        }
        Format::Text => {
            println!(
                "sigma(f) = {}, sigma(g) = {}, 4*sigma(g) <= 5*sigma(f): {}",
                trace.sigma_f, trace.sigma_g, trace.bound_ok
            );
            for asg in &trace.assignments {
                println!(
                    "  case {:<7} components {:?} -> power {} at vertex {}",
                    asg.case, asg.components, asg.power, asg.center
                );
            }
            println!("g = {}", trace.result.to_json());
        }
        Format::Dot => print!("{}", gio::to_dot(&g, Some(&trace.result))),
    }
    Ok(())
}

fn cmd_scan(
    common: &Common,
    family: &Option<String>,
    random: Option<usize>,
    count: usize,
    seed: u64,
) -> Result<(), Error> {
    let graphs: Vec<Graph> = match (family, random) {
        (Some(spec), None) => vec![FamilySpec::parse(spec)?.generate()?],
        (None, Some(n)) => corpus::random_connected(n, count, seed)?,
        _ => return Err(Error::Parse("scan needs exactly one of --family and --random".into())),
    };
    let budget = common.budget();
    let mut violations = 0usize;
    let mut findings = 0usize;
    for (idx, g) in graphs.iter().enumerate() {
        let (chain, conj) = match (
            solvers::chain_check_with_budget(g, &budget),
            solvers::conjecture_check_with_budget(g, &budget),
        ) {
            (Ok(c), Ok(j)) => (c, j),
            (Err(Error::TrivialComponent(v)), _) | (_, Err(Error::TrivialComponent(v))) => {
                eprintln!("graph {idx}: skipped (isolated vertex {v})");
                continue;
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        if !chain.ok {
            violations += 1;
        }
        if conj.ratio_counterexample || conj.equality_counterexample {
            findings += 1;
        }
        match common.format {
            Format::Json => {
                println!(
                    "{}",
                    json!({"graph": idx, "edges": g.edges(), "chain": chain, "conjectures": conj})
                );
            }
            Format::Text | Format::Dot => {
                println!(
                    "graph {idx}: ir_b={} gamma_b={} gamma={} Gamma={} Gamma_b={} IR_b={} mp={} chain {}",
                    chain.ir_b,
                    chain.gamma_b,
                    chain.gamma,
                    chain.upper_gamma,
                    chain.upper_gamma_b,
                    chain.upper_ir_b,
                    chain.mp,
                    if chain.ok { "ok" } else { "VIOLATED" },
                );
                if conj.ratio_counterexample || conj.equality_counterexample {
                    println!("graph {idx}: conjecture counterexample (finding, not an error)");
                }
            }
        }
    }
    if findings > 0 {
        eprintln!("{findings} conjecture counterexample(s) found — reportable findings");
    }
    if violations > 0 {
        // a violated theorem means a bug somewhere; fail loudly
        return Err(Error::Construction(format!(
            "{violations} graph(s) violated the parameter chain"
        )));
    }
    Ok(())
}

fn cmd_generate(source: &GraphSource, common: &Common) -> Result<(), Error> {
    let g = source.load()?;
    match common.format {
        Format::Dot => print!("{}", gio::to_dot(&g, None)),
        Format::Text => print!("{}", gio::to_edge_list(&g)),
        Format::Json => {
            println!(
                "{}",
                json!({"vertices": g.vertex_count(), "edges": g.edges()})
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.cmd {
        Cmd::Compute { source, common, param } => cmd_compute(source, common, param),
        Cmd::Verify { source, common, broadcast, oracle } => {
            cmd_verify(source, common, broadcast, *oracle)
        }
        Cmd::Construct { source, common, broadcast } => cmd_construct(source, common, broadcast),
        Cmd::Scan { common, family, random, count, seed } => {
            cmd_scan(common, family, *random, *count, *seed)
        }
        Cmd::Generate { source, common } => cmd_generate(source, common),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
