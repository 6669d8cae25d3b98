//! Command-line front end for `algraph`.
//!
//! Exit codes: 0 success, 1 verification failures, 2 input or usage errors,
//! 3 resource caps.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use algraph::algebra::{check_property, group_signature, lattice_with_ranks, rank_of, Property};
use algraph::arith::{clique_ratio_table, max_ratio, ratio_csv};
use algraph::classes::ClassWitness;
use algraph::{
    build_complex, build_digraph, build_graph, classify, graph_invariant, run_suite, BuilderSpec, ComplexKind,
    DigraphKind, EnhancedVariant, Error, Family, FiniteAlgebra, GraphClass, GraphKind, Invariant, Limits, SimpleGraph,
    Suite, SuiteSpec,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser)]
#[command(name = "algraph", version, about = "Graphs, digraphs and complexes on finite algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph or digraph and export it.
    Build {
        #[command(flatten)]
        graph: GraphArgs,
        /// Export the directed version (power and endomorphism only).
        #[arg(long)]
        directed: bool,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test a graph for membership in hereditary classes.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated classes; all five when omitted.
        #[arg(long, value_delimiter = ',')]
        classes: Vec<String>,
    },
    /// Compute one graph invariant.
    Invariant {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        which: String,
    },
    /// Build the independence or strong independence complex.
    Complex {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "independence")]
        kind: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite over a catalog family.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long)]
        max_order: Option<usize>,
        /// Add A5 and the spread check.
        #[arg(long)]
        include_a5: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate f(n), the power-graph clique number of C_n, against phi(n).
    FRatio {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Subalgebra lattice, ranks, E(A) and structural properties.
    Describe {
        #[arg(long)]
        algebra: String,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Builder string such as `cyclic:6` or `file:<path>`.
    #[arg(long)]
    algebra: String,
    #[arg(long)]
    graph: String,
    #[arg(long)]
    variant: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// Runs the command line `argv` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource { .. } => EXIT_RESOURCE,
        _ => EXIT_INPUT,
    }
}

fn load(spec: &str) -> algraph::Result<FiniteAlgebra> {
    spec.parse::<BuilderSpec>()?.build()
}

fn graph_kind(args: &GraphArgs) -> algraph::Result<GraphKind> {
    let kind: GraphKind = args.graph.parse()?;
    match &args.variant {
        Some(v) => kind.with_variant(v.parse::<EnhancedVariant>()?),
        None => Ok(kind),
    }
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> algraph::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            out.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                out.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> algraph::Result<i32> {
    let limits = Limits::default();
    match cmd {
        Command::Build {
            graph,
            directed,
            format,
            out: path,
        } => {
            let alg = load(&graph.algebra)?;
            let name = format!("{}_{}", alg.name(), graph.graph);
            let text = if directed {
                if graph.variant.is_some() {
                    return Err(Error::Input("--variant does not apply to digraphs".into()));
                }
                let d = build_digraph(&alg, graph.graph.parse::<DigraphKind>()?, &limits)?;
                match format {
                    Format::Dot => d.to_dot(&name),
                    Format::Json => d.to_json_string(),
                }
            } else {
                let g = build_graph(&alg, graph_kind(&graph)?, &limits)?;
                match format {
                    Format::Dot => g.to_dot(&name),
                    Format::Json => g.to_json_string(),
                }
            };
            emit(&text, path.as_ref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Classify { graph, classes } => {
            let alg = load(&graph.algebra)?;
            let g = build_graph(&alg, graph_kind(&graph)?, &limits)?;
            let classes: Vec<GraphClass> = if classes.is_empty() {
                GraphClass::ALL.to_vec()
            } else {
                classes.iter().map(|c| c.trim().parse()).collect::<algraph::Result<_>>()?
            };
            let mut rows = Vec::new();
            for c in classes {
                rows.push(witness_json(&classify(&g, c, &limits)?, &g));
            }
            emit(&to_json(&Value::Array(rows)), None, out)?;
            Ok(EXIT_OK)
        }
        Command::Invariant { graph, which } => {
            let alg = load(&graph.algebra)?;
            let g = build_graph(&alg, graph_kind(&graph)?, &limits)?;
            let which: Invariant = which.parse()?;
            let value = graph_invariant(&g, which, &limits)?;
            emit(&to_json(&json!({ "invariant": which.to_string(), "value": value })), None, out)?;
            Ok(EXIT_OK)
        }
        Command::Complex {
            algebra,
            kind,
            out: path,
        } => {
            let alg = load(&algebra)?;
            let c = build_complex(&alg, kind.parse::<ComplexKind>()?, &limits)?;
            emit(&c.to_json_string(), path.as_ref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            family,
            max_order,
            include_a5,
            out: path,
        } => {
            if max_order == Some(0) {
                return Err(Error::Input("--max-order must be positive".into()));
            }
            let spec = SuiteSpec {
                suite: suite.parse::<Suite>()?,
                family: family.parse::<Family>()?,
                max_order,
                include_a5,
            };
            let report = run_suite(&spec, &limits)?;
            emit(&report.to_json_string(), path.as_ref(), out)?;
            let s = report.summary;
            let _ = writeln!(
                err,
                "{} over {}: {} algebras, {} claims, {} passed, {} failed",
                report.suite, report.family, report.algebras, s.total, s.passed, s.failed
            );
            for f in report.failures() {
                let _ = writeln!(
                    err,
                    "FAIL {} [{}] {}: {}",
                    f.algebra,
                    f.suite,
                    f.claim,
                    f.witness.as_deref().unwrap_or("")
                );
            }
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_VERIFICATION_FAILED })
        }
        Command::FRatio { max_n, out: path } => {
            if max_n == 0 {
                return Err(Error::Input("--max-n must be positive".into()));
            }
            let rows = clique_ratio_table(max_n, &limits)?;
            emit(&ratio_csv(&rows), path.as_ref(), out)?;
            if let Some(best) = max_ratio(&rows) {
                let _ = writeln!(
                    err,
                    "max f(n)/phi(n) = {} = {:.6} at n = {}",
                    best.ratio,
                    best.ratio_f64(),
                    best.n
                );
            }
            Ok(EXIT_OK)
        }
        Command::Describe { algebra } => {
            let alg = load(&algebra)?;
            emit(&to_json(&describe(&alg, &limits)?), None, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn witness_json(w: &ClassWitness, g: &SimpleGraph) -> Value {
    let mut v = json!({ "class": w.class.to_string(), "verdict": w.verdict });
    if let (Some(c), Some(verts)) = (&w.configuration, &w.witness) {
        v["configuration"] = json!(c.to_string());
        v["witness"] = json!(verts.iter().map(|&i| g.label(i)).collect::<Vec<_>>());
    }
    if let Some(cert) = &w.certificate {
        v["certificate"] = json!({ "weights": cert.weights, "threshold": cert.threshold });
    }
    v
}

fn describe(alg: &FiniteAlgebra, limits: &Limits) -> algraph::Result<Value> {
    let lattice = lattice_with_ranks(alg, limits)?;
    let subalgebras: Vec<Value> = lattice
        .iter()
        .map(|b| json!({ "members": alg.labels_of(&b.members), "rank": b.rank }))
        .collect();
    let mut props = serde_json::Map::new();
    for (name, p) in [
        ("monotonic", Property::Monotonic),
        ("one_monotonic", Property::OneMonotonic),
        ("mo", Property::Mo),
        ("independence_algebra", Property::IndependenceAlgebra),
    ] {
        props.insert(name.into(), property_json(alg, p, limits)?);
    }
    let is_group = group_signature(alg).is_some();
    if is_group {
        props.insert("eppo".into(), property_json(alg, Property::Eppo, limits)?);
    }
    let ops: Vec<Value> = alg
        .operations()
        .iter()
        .map(|o| json!({ "name": o.name, "arity": o.arity }))
        .collect();
    Ok(json!({
        "name": alg.name(),
        "size": alg.size(),
        "elements": alg.element_names(),
        "operations": ops,
        "group": is_group,
        "minimal_subalgebra": alg.labels_of(alg.minimal_subalgebra()),
        "rank": rank_of(alg, &alg.full_set(), limits)?,
        "subalgebras": subalgebras,
        "properties": props,
    }))
}

fn property_json(alg: &FiniteAlgebra, p: Property, limits: &Limits) -> algraph::Result<Value> {
    let v = check_property(alg, p, limits)?;
    let mut out = json!({ "holds": v.holds });
    if let Some(w) = &v.witness {
        out["witness"] = json!(w.describe(alg));
    }
    Ok(out)
}
