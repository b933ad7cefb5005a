//! Command-line front end: solve, oracle, gen, reduce, verify, bench and
//! export-dot over JSON instance files.
//!
//! Exit codes: 0 success, 2 schema or input error, 3 budget exceeded,
//! 4 verification failure, 1 anything else.

use clap::{Args, Parser, Subcommand};
use maxdom::error::Error;
use maxdom::generate::{generate, GenKind, GenParams};
use maxdom::graph::{domination_defect, oracle_partial_dom, EnumBudget};
use maxdom::instance::{
    emit_instance_pretty, export_dot, instance_digest, parse_instance, run_query, to_cnf,
    to_graph, verify_result, Engine, InstanceFile, InstancePayload, Query, ResultFile,
    SolveOptions, SCHEMA_VERSION,
};
use maxdom::reductions::{build_gc, kset_via_partial, pad_for_partial, partial_via_kset};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "maxdom", version, about = "Exact maximum dominating k-set and partial domination solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a k-set or partial domination query on an instance file.
    Solve(SolveArgs),
    /// Solve with the exhaustive engine regardless of kind.
    Oracle(OracleArgs),
    /// Generate a deterministic pseudo-random instance.
    Gen(GenArgs),
    /// Run one of the constructive transformations.
    Reduce(ReduceArgs),
    /// Re-check a result file against its instance.
    Verify(VerifyArgs),
    /// Time a solver on a generated workload and print one summary line.
    Bench(BenchArgs),
    /// Print the instance's (intersection) graph in DOT format.
    ExportDot(ExportDotArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file path, or '-' for stdin.
    #[arg(long = "in")]
    input: String,
    #[arg(long, conflicts_with = "alpha")]
    k: Option<usize>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, default_value = "auto")]
    engine: String,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long = "in")]
    input: String,
    #[arg(long, conflicts_with = "alpha")]
    k: Option<usize>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// graph | intervals | unit_intervals | unit_squares | unit_disks |
    /// rects_unit_height | disks | cnf2
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.3)]
    edge_prob: f64,
    #[arg(long, default_value_t = 0.0)]
    theta_deg: f64,
    #[arg(long, default_value_t = 0.0)]
    intercept: f64,
    #[arg(long, default_value_t = 1.0)]
    dmin: f64,
    #[arg(long, default_value_t = 2.0)]
    dmax: f64,
    #[arg(long, default_value_t = 3.0)]
    max_width: f64,
    /// Clause count for cnf2 (0 means twice the variable count).
    #[arg(long, default_value_t = 0)]
    clauses: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    /// pad | gc | kset-from-partial | partial-from-kset | defect
    #[arg(long)]
    mode: String,
    #[arg(long = "in")]
    input: String,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: String,
    #[arg(long)]
    result: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value = "unit-intervals")]
    suite: String,
    #[arg(long, default_value_t = 100_000)]
    n: usize,
    #[arg(long, default_value_t = 50)]
    k: usize,
    #[arg(long, default_value_t = 0xBE7C)]
    seed: u64,
}

#[derive(Args)]
struct ExportDotArgs {
    #[arg(long = "in")]
    input: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn env_budget(var: &str, default: usize) -> usize {
    std::env::var(var)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

fn solve_options(engine: Engine) -> SolveOptions {
    SolveOptions {
        engine,
        enum_budget: EnumBudget::new(env_budget("MAXDOM_ENUM_BUDGET", 24)),
        box_budget: env_budget("MAXDOM_BOX_BUDGET", 16),
    }
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
}

/// Full-buffer output: a file is written via a temporary sibling and rename,
/// stdout in one call; a failed run never leaves a partial artifact.
fn write_output(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => {
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, text)?;
            std::fs::rename(&tmp, path)
        }
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    }
}

fn parse_query(k: Option<usize>, alpha: Option<f64>) -> Result<Query, Error> {
    match (k, alpha) {
        (Some(k), None) => Ok(Query::K { k }),
        (None, Some(alpha)) => Ok(Query::Alpha { alpha }),
        _ => Err(Error::invalid("pass exactly one of --k and --alpha")),
    }
}

fn load_instance(path: &str) -> Result<InstanceFile, Error> {
    let text = read_input(path)
        .map_err(|e| Error::invalid(format!("cannot read '{path}': {e}")))?;
    parse_instance(&text)
}

fn result_file(
    inst: &InstanceFile,
    query: Query,
    r: &maxdom::graph::SolveResult,
    solver: String,
    wall_ms: f64,
) -> ResultFile {
    ResultFile {
        schema_version: SCHEMA_VERSION,
        instance_digest: instance_digest(inst),
        query,
        gamma: match query {
            Query::Alpha { .. } => Some(r.k),
            Query::K { .. } => None,
        },
        nbd_size: r.nbd_size,
        chosen: r.chosen.members().to_vec(),
        per_k: r.per_k.clone(),
        solver,
        wall_ms,
    }
}

fn emit_result(out: &Option<PathBuf>, res: &ResultFile) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(res)?;
    text.push('\n');
    write_output(out, &text).map_err(|e| Error::invalid(format!("write failed: {e}")))
}

fn cmd_solve(args: &SolveArgs, engine_override: Option<Engine>) -> Result<(), Error> {
    let inst = load_instance(&args.input)?;
    let query = parse_query(args.k, args.alpha)?;
    let engine = match engine_override {
        Some(e) => e,
        None => args.engine.parse()?,
    };
    let opts = solve_options(engine);
    let start = Instant::now();
    let (r, solver) = run_query(&inst, &query, &opts)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    emit_result(&args.out, &result_file(&inst, query, &r, solver, wall_ms))
}

fn cmd_gen(args: &GenArgs) -> Result<(), Error> {
    let kind: GenKind = args.kind.parse()?;
    let params = GenParams {
        edge_prob: args.edge_prob,
        theta_deg: args.theta_deg,
        intercept: args.intercept,
        dmin: args.dmin,
        dmax: args.dmax,
        max_width: args.max_width,
        clauses: args.clauses,
    };
    let inst = generate(kind, args.n, args.seed, &params)?;
    write_output(&args.out, &emit_instance_pretty(&inst))
        .map_err(|e| Error::invalid(format!("write failed: {e}")))
}

fn cmd_reduce(args: &ReduceArgs) -> Result<(), Error> {
    let opts = solve_options(Engine::Auto);
    let budget = opts.enum_budget;
    match args.mode.as_str() {
        "pad" => {
            let alpha = args
                .alpha
                .ok_or_else(|| Error::invalid("--mode pad needs --alpha"))?;
            let inst = load_instance(&args.input)?;
            let g = to_graph(&inst)?;
            let padded = pad_for_partial(&g, alpha, env_budget("MAXDOM_PAD_BUDGET", 1 << 20))?;
            let out = InstanceFile::new(InstancePayload::Graph {
                n: padded.node_count(),
                edges: padded.edges().iter().map(|&(u, v)| [u, v]).collect(),
            });
            write_output(&args.out, &emit_instance_pretty(&out))
                .map_err(|e| Error::invalid(format!("write failed: {e}")))
        }
        "gc" => {
            // JSON instance or DIMACS text
            let text = read_input(&args.input)
                .map_err(|e| Error::invalid(format!("cannot read '{}': {e}", args.input)))?;
            let cnf = match parse_instance(&text) {
                Ok(inst) => to_cnf(&inst)
                    .ok_or_else(|| Error::invalid("reduce --mode gc needs a cnf2 instance"))??,
                Err(_) => maxdom::dimacs::parse_dimacs_cnf2(&text)?,
            };
            let gc = build_gc(&cnf);
            let out = InstanceFile::new(InstancePayload::Graph {
                n: gc.graph.node_count(),
                edges: gc.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            });
            write_output(&args.out, &emit_instance_pretty(&out))
                .map_err(|e| Error::invalid(format!("write failed: {e}")))
        }
        "kset-from-partial" => {
            let k = args
                .k
                .ok_or_else(|| Error::invalid("--mode kset-from-partial needs --k"))?;
            let inst = load_instance(&args.input)?;
            let g = to_graph(&inst)?;
            let start = Instant::now();
            let r = kset_via_partial(|g, a| oracle_partial_dom(g, a, budget), &g, k)?;
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            emit_result(
                &args.out,
                &result_file(&inst, Query::K { k }, &r, "driver:kset-from-partial".into(), wall_ms),
            )
        }
        "partial-from-kset" => {
            let alpha = args
                .alpha
                .ok_or_else(|| Error::invalid("--mode partial-from-kset needs --alpha"))?;
            let inst = load_instance(&args.input)?;
            let g = to_graph(&inst)?;
            let start = Instant::now();
            let r = partial_via_kset(
                |_, k| run_query(&inst, &Query::K { k }, &opts).map(|(r, _)| r),
                &g,
                alpha,
            )?;
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            emit_result(
                &args.out,
                &result_file(
                    &inst,
                    Query::Alpha { alpha },
                    &r,
                    "driver:partial-from-kset".into(),
                    wall_ms,
                ),
            )
        }
        "defect" => {
            let r = args
                .r
                .ok_or_else(|| Error::invalid("--mode defect needs --r"))?;
            let inst = load_instance(&args.input)?;
            let g = to_graph(&inst)?;
            let defect = domination_defect(&g, r, budget)?;
            write_output(&args.out, &format!("{defect}\n"))
                .map_err(|e| Error::invalid(format!("write failed: {e}")))
        }
        other => Err(Error::invalid(format!("unknown reduce mode '{other}'"))),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Error> {
    let inst = load_instance(&args.input)?;
    let text = std::fs::read_to_string(&args.result)
        .map_err(|e| Error::invalid(format!("cannot read result: {e}")))?;
    let res: ResultFile = serde_json::from_str(&text)?;
    verify_result(&inst, &res)?;
    println!("ok");
    Ok(())
}

fn cmd_bench(args: &BenchArgs) -> Result<(), Error> {
    match args.suite.as_str() {
        "unit-intervals" => {
            let inst = generate(GenKind::UnitIntervals, args.n, args.seed, &GenParams::default())?;
            let layout = maxdom::instance::to_layout(&inst).expect("interval kind")?;
            let start = Instant::now();
            let r = maxdom::interval::solve_unit(
                &layout,
                args.k.min(args.n),
                maxdom::interval::IntervalEngine::RangeTree,
            )?;
            let millis = start.elapsed().as_millis();
            println!(
                "suite=unit-intervals n={} k={} millis={millis} nbd_size={}",
                args.n,
                args.k.min(args.n),
                r.nbd_size
            );
            Ok(())
        }
        other => Err(Error::invalid(format!("unknown bench suite '{other}'"))),
    }
}

fn cmd_export_dot(args: &ExportDotArgs) -> Result<(), Error> {
    let inst = load_instance(&args.input)?;
    let dot = export_dot(&inst)?;
    write_output(&args.out, &dot).map_err(|e| Error::invalid(format!("write failed: {e}")))
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Schema(_) | Error::InvalidInput(_) | Error::Json(_) => 2,
        Error::BudgetExceeded(_) => 3,
        Error::VerificationFailed(_) => 4,
        Error::ContractViolation(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Solve(args) => cmd_solve(args, None),
        Command::Oracle(args) => cmd_solve(
            &SolveArgs {
                input: args.input.clone(),
                k: args.k,
                alpha: args.alpha,
                engine: "oracle".into(),
                out: args.out.clone(),
            },
            Some(Engine::Oracle),
        ),
        Command::Gen(args) => cmd_gen(args),
        Command::Reduce(args) => cmd_reduce(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
        Command::ExportDot(args) => cmd_export_dot(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

