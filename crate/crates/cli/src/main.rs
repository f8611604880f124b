//! `heegaard-lab`: batch front end for the heegaard-core engines.
//!
//! Exit status: 0 for a certified result, 1 for bad input, 2 when a cap or
//! budget ran out and the answer is only partial.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use heegaard_core::disk_complex::{self, CappedDistance};
use heegaard_core::ghs::{apply_tracked, compare_ghs, ghs_key};
use heegaard_core::handlebody::{enumerate_essential_curves, CurveCap, DEFAULT_BUDGET};
use heegaard_core::properties::property_suite;
use heegaard_core::report;
use heegaard_core::sog::{
    flatten, max_key, maximal_positions, minimal_positions, splitting_distance, verify_single_maximal,
    InventoryOracle, Sog, SymbolicOracle,
};
use heegaard_core::{geometric_intersection, GraphError, HandlebodyError, HeegaardDiagram, Move, SogError};

#[derive(Parser)]
#[command(name = "heegaard-lab", version, about = "Heegaard diagrams, disk complexes and GHS flattening")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Curves on a closed surface.
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// Geometric intersection number of two curves (inline JSON or files).
    Intersect { a: String, b: String },
    /// Disk-complex operations on a Heegaard diagram.
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Shorthand for `diagram classify`.
    Classify(CapArgs),
    /// `gamma build`: shorthand for `diagram gamma`.
    #[command(subcommand)]
    Gamma(BuildCmd),
    /// `lambda build`: shorthand for `diagram lambda`.
    #[command(subcommand)]
    Lambda(BuildCmd),
    /// Shorthand for `diagram quotient`.
    Quotient(QuotientArgs),
    /// Generalized Heegaard splittings.
    #[command(subcommand)]
    Ghs(GhsCmd),
    /// Sequences of GHSs.
    #[command(subcommand)]
    Sog(SogCmd),
    /// Distance between two destabilizing edges of a common stabilization.
    Distance(DistanceArgs),
    /// Seeded randomized invariant checks.
    Proptest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        iterations: u64,
    },
}

#[derive(Subcommand)]
enum SurfaceCmd {
    /// Every essential curve within the cap.
    Curves {
        #[arg(long)]
        genus: u32,
        #[command(flatten)]
        limits: Limits,
    },
}

#[derive(Args)]
struct Limits {
    /// Enumeration cap: |p|,|q| <= N on the torus, coordinate sum <= N otherwise.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    cap: u32,
    /// Maximum number of visited candidates.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
}

#[derive(Args)]
struct CapArgs {
    #[arg(long)]
    diagram: String,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Subcommand)]
enum BuildCmd {
    Build(CapArgs),
}

#[derive(Args)]
struct QuotientArgs {
    #[command(flatten)]
    base: CapArgs,
    /// `{"symmetries": [{"map": [[curve, curve], ...], "swap_colors": bool}]}`
    #[arg(long)]
    symmetries: String,
}

#[derive(Subcommand)]
enum DiagramCmd {
    Classify(CapArgs),
    Gamma(CapArgs),
    Lambda(CapArgs),
    Quotient(QuotientArgs),
}

#[derive(Subcommand)]
enum GhsCmd {
    /// Applies one weak reduction or destabilization.
    Reduce {
        #[arg(long = "in")]
        input: String,
        #[arg(long = "move")]
        mv: String,
    },
    /// Compares two GHSs by their complexity keys.
    Compare { a: String, b: String },
}

#[derive(Subcommand)]
enum SogCmd {
    /// Finds a SOG with least MAX multiset between two states.
    Flatten {
        /// Inventory label, or GHS JSON with the symbolic oracle.
        #[arg(long)]
        start: String,
        #[arg(long)]
        end: String,
        /// Inventory oracle file, or `symbolic`.
        #[arg(long)]
        oracle: String,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        /// Symbolic oracle: largest component genus reached by stabilizing.
        #[arg(long, default_value_t = 4)]
        max_genus: u32,
        /// Symbolic oracle: largest number of levels that may be stabilized.
        #[arg(long, default_value_t = 7)]
        max_levels: usize,
    },
    /// Replays a SOG and reports its maximal positions.
    Verify {
        sog: String,
        /// Also check labels against an inventory oracle.
        #[arg(long)]
        oracle: Option<String>,
    },
}

#[derive(Args)]
struct DistanceArgs {
    #[arg(long)]
    diagram: String,
    /// Two curves naming a destabilizing edge, e.g. `[{"slope":[1,0]},{"slope":[0,1]}]`.
    #[arg(long)]
    edge1: String,
    #[arg(long)]
    edge2: String,
    #[command(flatten)]
    limits: Limits,
}

/// A rendered answer and whether it is certified.
struct Outcome {
    body: String,
    complete: bool,
}

impl Outcome {
    fn done(body: String) -> Self {
        Outcome { body, complete: true }
    }
}

/// Inline JSON when it looks like JSON, otherwise a file path.
fn load(arg: &str) -> Result<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
}

fn load_diagram(arg: &str) -> Result<HeegaardDiagram> {
    Ok(report::parse_diagram(&load(arg)?)?)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn graph_out(g: &disk_complex::CurveGraph, format: Format) -> Outcome {
    let body = match format {
        Format::Json => pretty(&report::graph_json(g)),
        Format::Dot => report::graph_dot(g),
        Format::Text => report::graph_text(g),
    };
    Outcome { body, complete: g.certified }
}

fn build_graph(args: &CapArgs, lambda: bool) -> Result<disk_complex::CurveGraph> {
    let d = load_diagram(&args.diagram)?;
    let cap = CurveCap::for_genus(d.genus(), args.limits.cap);
    Ok(if lambda {
        disk_complex::build_lambda(&d, cap, args.limits.budget)?
    } else {
        disk_complex::build_gamma(&d, cap, args.limits.budget)?
    })
}

fn classify(args: &CapArgs, format: Format) -> Result<Outcome> {
    let g = build_graph(args, false)?;
    let v = disk_complex::classify_graph(&g);
    let body = match format {
        Format::Text => report::verdict_text(&v),
        Format::Dot => report::graph_dot(&g),
        Format::Json => pretty(&report::verdict_json(&v)),
    };
    Ok(Outcome { body, complete: v.certified })
}

fn quotient(args: &QuotientArgs, format: Format) -> Result<Outcome> {
    let g = build_graph(&args.base, false)?;
    let syms = report::parse_symmetries(&load(&args.symmetries)?, g.genus)?;
    Ok(graph_out(&disk_complex::quotient_by_symmetry(&g, &syms)?, format))
}

fn diagram(cmd: &DiagramCmd, format: Format) -> Result<Outcome> {
    match cmd {
        DiagramCmd::Classify(a) => classify(a, format),
        DiagramCmd::Gamma(a) => Ok(graph_out(&build_graph(a, false)?, format)),
        DiagramCmd::Lambda(a) => Ok(graph_out(&build_graph(a, true)?, format)),
        DiagramCmd::Quotient(a) => quotient(a, format),
    }
}

fn surface_curves(genus: u32, limits: &Limits, format: Format) -> Result<Outcome> {
    let cap = CurveCap::for_genus(genus, limits.cap);
    let (curves, complete) = match enumerate_essential_curves(genus, cap, limits.budget) {
        Ok(c) => (c, true),
        Err(HandlebodyError::Budget { partial, .. }) => (partial, false),
        Err(e) => return Err(e.into()),
    };
    let body = match format {
        Format::Text => curves.iter().map(|c| format!("{c}\n")).collect(),
        _ => pretty(&json!({
            "genus": genus,
            "cap": report::cap_json(&cap),
            "certified": complete,
            "curves": curves.iter().map(report::curve_json).collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome { body, complete })
}

fn intersect(a: &str, b: &str, format: Format) -> Result<Outcome> {
    let (a, b) = (report::parse_curve(&load(a)?)?, report::parse_curve(&load(b)?)?);
    let i = geometric_intersection(&a, &b)?;
    Ok(Outcome::done(match format {
        Format::Text => format!("i({a}, {b}) = {i}\n"),
        _ => pretty(&json!({ "a": report::curve_json(&a), "b": report::curve_json(&b), "intersection": i })),
    }))
}

fn ghs_cmd(cmd: &GhsCmd, format: Format) -> Result<Outcome> {
    match cmd {
        GhsCmd::Reduce { input, mv } => {
            let g: heegaard_core::Ghs = serde_json::from_str(&load(input)?)?;
            let m: Move = serde_json::from_str(&load(mv)?)?;
            let a = apply_tracked(&g, &m)?;
            Ok(Outcome::done(match format {
                Format::Text => format!("{} (case {}, key {:?})\n", a.ghs, a.case, ghs_key(&a.ghs)),
                _ => a.ghs.to_json() + "\n",
            }))
        }
        GhsCmd::Compare { a, b } => {
            let x: heegaard_core::Ghs = serde_json::from_str(&load(a)?)?;
            let y: heegaard_core::Ghs = serde_json::from_str(&load(b)?)?;
            let ord = match compare_ghs(&x, &y) {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            Ok(Outcome::done(match format {
                Format::Text => format!("{ord}\n"),
                _ => pretty(&json!({ "ordering": ord, "keys": [ghs_key(&x), ghs_key(&y)] })),
            }))
        }
    }
}

fn sog_report(sog: &Sog, format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = String::new();
            for (k, e) in sog.entries.iter().enumerate() {
                let label = e.label.as_deref().map(|l| format!("{l} ")).unwrap_or_default();
                s.push_str(&format!("{k}: {label}{}\n", e.ghs));
            }
            s.push_str(&format!("MAX {:?}\n", max_key(sog)));
            s
        }
        _ => pretty(&json!({
            "sog": sog,
            "max_key": max_key(sog),
            "maximal": maximal_positions(sog),
            "minimal": minimal_positions(sog),
            "single_maximal": verify_single_maximal(sog),
        })),
    }
}

fn sog_cmd(cmd: &SogCmd, format: Format) -> Result<Outcome> {
    match cmd {
        SogCmd::Flatten { start, end, oracle, budget, max_genus, max_levels } => {
            let sog = if oracle == "symbolic" {
                let o = SymbolicOracle { max_genus: *max_genus, max_levels: *max_levels };
                let s: heegaard_core::Ghs = serde_json::from_str(&load(start)?)?;
                let e: heegaard_core::Ghs = serde_json::from_str(&load(end)?)?;
                flatten(&o, &s, &e, *budget)?
            } else {
                let o = InventoryOracle::from_json(&load(oracle)?)?;
                for l in [start, end] {
                    o.genus_of(l).ok_or_else(|| anyhow!("unknown label {l}"))?;
                }
                flatten(&o, start, end, *budget)?
            };
            sog.verify()?;
            Ok(Outcome::done(sog_report(&sog, format)))
        }
        SogCmd::Verify { sog, oracle } => {
            let s: Sog = serde_json::from_str(&load(sog)?)?;
            s.verify()?;
            if let Some(o) = oracle {
                InventoryOracle::from_json(&load(o)?)?.check_labels(&s)?;
            }
            Ok(Outcome::done(sog_report(&s, format)))
        }
    }
}

fn distance(args: &DistanceArgs, format: Format) -> Result<Outcome> {
    let d = load_diagram(&args.diagram)?;
    let e1 = report::parse_edge(&load(&args.edge1)?, d.genus())?;
    let e2 = report::parse_edge(&load(&args.edge2)?, d.genus())?;
    let cap = CurveCap::for_genus(d.genus(), args.limits.cap);
    let r = splitting_distance(&d, &e1, &e2, cap, args.limits.budget)?;
    let complete = r.certified && matches!(r.distance, CappedDistance::Exact(_));
    let body = match format {
        Format::Text => match r.distance {
            CappedDistance::Exact(n) => format!("distance {n}\n"),
            CappedDistance::AtLeast(n) => format!("distance >= {n} (no path within cap {cap})\n"),
        },
        _ => pretty(&json!({
            "distance": report::distance_json(&r.distance),
            "same_component": r.same_component,
            "cap": report::cap_json(&cap),
            "certified": r.certified,
        })),
    };
    Ok(Outcome { body, complete })
}

fn proptest(seed: u64, iterations: u64, format: Format) -> Result<Outcome> {
    let r = property_suite(seed, iterations as usize);
    let body = match format {
        Format::Text => r
            .checks
            .iter()
            .map(|c| match &c.first_counterexample {
                Some(x) => format!("{}: {} trials, {} violations, first {x}\n", c.name, c.trials, c.violations),
                None => format!("{}: {} trials, {} violations\n", c.name, c.trials, c.violations),
            })
            .collect(),
        _ => pretty(&json!({
            "seed": r.seed,
            "passed": r.passed(),
            "checks": r.checks.iter().map(|c| json!({
                "name": c.name,
                "trials": c.trials,
                "violations": c.violations,
                "first_counterexample": c.first_counterexample,
            })).collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome::done(body))
}

fn run(cli: &Cli) -> Result<Outcome> {
    let f = cli.format;
    match &cli.command {
        Command::Surface(SurfaceCmd::Curves { genus, limits }) => surface_curves(*genus, limits, f),
        Command::Intersect { a, b } => intersect(a, b, f),
        Command::Diagram(cmd) => diagram(cmd, f),
        Command::Classify(a) => classify(a, f),
        Command::Gamma(BuildCmd::Build(a)) => Ok(graph_out(&build_graph(a, false)?, f)),
        Command::Lambda(BuildCmd::Build(a)) => Ok(graph_out(&build_graph(a, true)?, f)),
        Command::Quotient(a) => quotient(a, f),
        Command::Ghs(cmd) => ghs_cmd(cmd, f),
        Command::Sog(cmd) => sog_cmd(cmd, f),
        Command::Distance(a) => distance(a, f),
        Command::Proptest { seed, iterations } => proptest(*seed, *iterations, f),
    }
}

fn is_exhaustion(e: &anyhow::Error) -> bool {
    matches!(e.downcast_ref::<SogError>(), Some(SogError::Budget(_)))
        || matches!(e.downcast_ref::<HandlebodyError>(), Some(HandlebodyError::Budget { .. }))
        || matches!(e.downcast_ref::<GraphError>(), Some(GraphError::Handlebody(HandlebodyError::Budget { .. })))
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("HEEGAARD_LAB_THREADS") {
        let n: usize = v.parse().map_err(|_| anyhow!("HEEGAARD_LAB_THREADS must be a positive integer, got {v:?}"))?;
        if n == 0 {
            bail!("HEEGAARD_LAB_THREADS must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.body);
            if !out.body.ends_with('\n') {
                println!();
            }
            if out.complete {
                ExitCode::SUCCESS
            } else {
                eprintln!("warning: cap or budget exhausted; result is partial");
                ExitCode::from(2)
            }
        }
        Err(e) if is_exhaustion(&e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

