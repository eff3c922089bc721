//! Command-line surface over the library: generation, conversion, solving,
//! checking, recognition, decomposition, reduction, and rendering. Verdicts
//! go to stdout, diagnostics to stderr, artifacts to --out or stdout.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mptkit_core::io;
use mptkit_core::oracle::limits;
use mptkit_core::order::brute_force_mpt_order_with_limit;
use mptkit_core::rational::{format_q, parse_q};
use mptkit_core::{
    common_neighborhood_certificates, contact_lsystem_from_outerplanar, cyclic_segments_from_order,
    graph, greedy_coloring, interval_to_anchored_lsystem, is_interval_graph,
    max_weight_independent_set, order_from_rep, random_arcs, random_interval_rep, random_mpt_rep,
    rays_to_lsystem, render_svg, rep_from_order, rep_to_lsystem, suggest_cut,
    two_interval_decomposition, verify_contact, verify_mpt_order, clique_cover_2approx,
    coloring_hardness_reduction, geometry::random_maximal_outerplanar, oracle::brute_force_coloring,
    ContactLSystem, Error, Graph, IntervalObstruction, LinearLSystem, MptCertificate,
    MptRepresentation, RenderOptions, Result, Scene, Segment,
};

#[derive(Parser)]
#[command(name = "mptkit", about = "Max point-tolerance graph toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a named or seeded random instance
    Gen(GenArgs),
    /// Adjacency graph of a representation; graph files pass through
    Adjacency(AdjacencyArgs),
    /// Convert between representation kinds
    Convert(ConvertArgs),
    /// Solvers over a representation
    Solve {
        #[command(subcommand)]
        cmd: SolveCmd,
    },
    /// Verdicts on orders, graphs, and contact systems
    Check {
        #[command(subcommand)]
        cmd: CheckCmd,
    },
    /// Decide MPT membership where certificates or search reach
    Recognize(RecognizeArgs),
    /// Split a representation into structured parts
    Decompose {
        #[command(subcommand)]
        cmd: DecomposeCmd,
    },
    /// Cyclic segment model of a representation
    Segments(SegmentsArgs),
    /// Contact L-system of a maximal outerplanar graph
    Contact(ContactArgs),
    /// Hardness reductions
    Reduce {
        #[command(subcommand)]
        cmd: ReduceCmd,
    },
    /// Render a geometric artifact to SVG
    Render(RenderArgs),
}

#[derive(Args)]
struct GenArgs {
    /// net, k222, path, cycle, complete, complement-cycle, complete-bipartite,
    /// random-mpt, random-interval, random-circular-arc, random-maximal-outerplanar
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    /// Required for the random families; there is no wall-clock default
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AdjacencyArgs {
    /// Representation file, or '-' for stdin
    #[arg(long)]
    rep: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Rep,
    Lsystem,
    Interval,
    Rays,
    Order,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Kind::Rep => "rep",
            Kind::Lsystem => "lsystem",
            Kind::Interval => "interval",
            Kind::Rays => "rays",
            Kind::Order => "order",
        };
        write!(f, "{name}")
    }
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long)]
    from: Kind,
    #[arg(long)]
    to: Kind,
    #[arg(long)]
    input: PathBuf,
    /// Host graph, required when converting from an order
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SolveCmd {
    /// Maximum-weight independent set
    Wis {
        #[arg(long)]
        rep: PathBuf,
        /// Weight file "vertex weight"; unit weights when absent
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Clique cover within twice the independence number
    CliqueCover {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// First-fit coloring in corner order, or the exact oracle
    Color {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Verify a vertex order against the MPT-order condition
    Order {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        order: PathBuf,
    },
    /// Interval recognition with witness
    Interval {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Common-neighborhood certificates; any hit refutes MPT membership
    MptNecessary {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Verify an L-system is a contact system and report equilaterality
    Contact {
        #[arg(long)]
        lsystem: PathBuf,
    },
}

#[derive(Args)]
struct RecognizeArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Order-search ceiling; defaults to the library oracle limit
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Subcommand)]
enum DecomposeCmd {
    /// The two interval systems whose intersection graphs cut out the graph
    TwoInterval {
        #[arg(long)]
        rep: PathBuf,
        /// Destination for the ends system [p, e]; stdout when absent
        #[arg(long)]
        out1: Option<PathBuf>,
        /// Destination for the starts system [s, p]; stdout when absent
        #[arg(long)]
        out2: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SegmentsArgs {
    #[arg(long)]
    rep: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ContactArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ReduceCmd {
    /// Turn k-colorability of a circular-arc graph into an MPT instance
    Coloring {
        #[arg(long)]
        arcs: PathBuf,
        #[arg(long)]
        k: usize,
        /// Cut point in [0,1); picked automatically when absent
        #[arg(long)]
        cut: Option<String>,
        #[arg(long)]
        out_graph: Option<PathBuf>,
        #[arg(long)]
        out_rep: Option<PathBuf>,
        #[arg(long)]
        out_map: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RenderArgs {
    /// Artifact file; kind read from its "# kind:" comment or inferred
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Input(_) | Error::OracleLimit { .. } => ExitCode::from(2),
                Error::NotMptOrder(_) | Error::NotIOrder(_) => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Gen(a) => run_gen(a),
        Cmd::Adjacency(a) => run_adjacency(a),
        Cmd::Convert(a) => run_convert(a),
        Cmd::Solve { cmd } => run_solve(cmd),
        Cmd::Check { cmd } => run_check(cmd),
        Cmd::Recognize(a) => run_recognize(a),
        Cmd::Decompose { cmd } => run_decompose(cmd),
        Cmd::Segments(a) => run_segments(a),
        Cmd::Contact(a) => run_contact(a),
        Cmd::Reduce { cmd } => run_reduce(cmd),
        Cmd::Render(a) => run_render(a),
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
    }
}

/// Prefixes parse diagnostics with the file they came from.
fn located<T>(path: &Path, parsed: Result<T>) -> Result<T> {
    parsed.map_err(|e| match e {
        Error::Input(msg) => Error::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn emit(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(p) => {
            fs::write(p, content).map_err(|e| Error::Input(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    located(path, io::parse_graph(&read_input(path)?))
}

fn load_rep(path: &Path) -> Result<MptRepresentation> {
    located(path, io::parse_mpt_rep(&read_input(path)?))
}

fn run_gen(a: GenArgs) -> Result<ExitCode> {
    let n = || {
        a.n.ok_or_else(|| Error::Input(format!("family '{}' needs --n", a.family)))
    };
    let seed = || {
        a.seed
            .ok_or_else(|| Error::Input(format!("random family '{}' needs --seed", a.family)))
    };
    let text = match a.family.as_str() {
        "random-mpt" => io::write_mpt_rep(&random_mpt_rep(n()?, seed()?)),
        "random-interval" => io::write_interval_rep(&random_interval_rep(n()?, seed()?)),
        "random-circular-arc" => io::write_arcs(&random_arcs(n()?, seed()?)),
        "random-maximal-outerplanar" => {
            let n = n()?;
            if n < 2 {
                return Err(Error::Input("a maximal outerplanar graph needs n >= 2".into()));
            }
            io::write_graph(&random_maximal_outerplanar(n, seed()?))
        }
        name => io::write_graph(&graph::family(name, a.n)?),
    };
    emit(a.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn first_content_fields(text: &str) -> usize {
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() || line.starts_with("mptkit-format") {
            continue;
        }
        return line.split_whitespace().count();
    }
    0
}

fn run_adjacency(a: AdjacencyArgs) -> Result<ExitCode> {
    let text = read_input(&a.rep)?;
    let g = match first_content_fields(&text) {
        2 => located(&a.rep, io::parse_graph(&text))?,
        1 => located(&a.rep, io::parse_mpt_rep(&text))?.adjacency(),
        _ => {
            return Err(Error::Input(format!(
                "{}: neither a graph nor a representation file",
                a.rep.display()
            )))
        }
    };
    emit(a.out.as_deref(), &io::write_graph(&g))?;
    Ok(ExitCode::SUCCESS)
}

/// The identity map onto L-shapes needs distinct points; representations
/// with ties are normalized first, which preserves adjacency.
fn lsystem_of(rep: &MptRepresentation) -> Result<LinearLSystem> {
    let mut points: Vec<_> = rep.items().iter().map(|it| it.p().clone()).collect();
    points.sort();
    if points.windows(2).any(|w| w[0] == w[1]) {
        rep_to_lsystem(&rep.normalize())
    } else {
        rep_to_lsystem(rep)
    }
}

fn run_convert(a: ConvertArgs) -> Result<ExitCode> {
    let text = read_input(&a.input)?;
    let artifact = match (a.from, a.to) {
        (Kind::Rep, Kind::Lsystem) => {
            io::write_lsystem(&lsystem_of(&located(&a.input, io::parse_mpt_rep(&text))?)?)
        }
        (Kind::Rep, Kind::Order) => {
            io::write_order(&order_from_rep(&located(&a.input, io::parse_mpt_rep(&text))?))
        }
        (Kind::Lsystem, Kind::Rep) => {
            io::write_mpt_rep(&located(&a.input, io::parse_lsystem(&text))?.to_rep())
        }
        (Kind::Interval, Kind::Lsystem) => io::write_lsystem(&interval_to_anchored_lsystem(
            &located(&a.input, io::parse_interval_rep(&text))?,
        )),
        (Kind::Interval, Kind::Rep) => io::write_mpt_rep(
            &interval_to_anchored_lsystem(&located(&a.input, io::parse_interval_rep(&text))?)
                .to_rep(),
        ),
        (Kind::Rays, Kind::Lsystem) => {
            io::write_lsystem(&rays_to_lsystem(&located(&a.input, io::parse_rays(&text))?))
        }
        (Kind::Rays, Kind::Rep) => io::write_mpt_rep(
            &rays_to_lsystem(&located(&a.input, io::parse_rays(&text))?).to_rep(),
        ),
        (Kind::Order, Kind::Rep) => {
            let graph_path = a.graph.as_deref().ok_or_else(|| {
                Error::Input("converting from an order needs --graph".into())
            })?;
            let g = load_graph(graph_path)?;
            let ord = located(&a.input, io::parse_order(&text))?;
            io::write_mpt_rep(&rep_from_order(&g, &ord)?)
        }
        (from, to) => {
            return Err(Error::Input(format!(
                "no conversion from {from} to {to}"
            )))
        }
    };
    emit(a.out.as_deref(), &artifact)?;
    Ok(ExitCode::SUCCESS)
}

fn run_solve(cmd: SolveCmd) -> Result<ExitCode> {
    match cmd {
        SolveCmd::Wis { rep, weights, out } => {
            let rep_val = load_rep(&rep)?;
            let w = match &weights {
                Some(p) => Some(located(p, io::parse_weights(&read_input(p)?, rep_val.n()))?),
                None => None,
            };
            let res = max_weight_independent_set(&rep_val, w.as_deref())?;
            let ids: Vec<String> = res.set.iter().map(|v| v.to_string()).collect();
            let text = format!(
                "{}\n# kind: wis\nvalue {}\nset {}\n",
                io::FORMAT_LINE,
                format_q(&res.value),
                ids.join(" ")
            );
            emit(out.as_deref(), &text)?;
        }
        SolveCmd::CliqueCover { rep, out } => {
            let cover = clique_cover_2approx(&load_rep(&rep)?)?;
            let mut text = format!(
                "{}\n# kind: clique-cover\n{}\n",
                io::FORMAT_LINE,
                cover.size()
            );
            for clique in &cover.cliques {
                let ids: Vec<String> = clique.iter().map(|v| v.to_string()).collect();
                text.push_str(&ids.join(" "));
                text.push('\n');
            }
            emit(out.as_deref(), &text)?;
        }
        SolveCmd::Color { rep, exact, out } => {
            let rep_val = load_rep(&rep)?;
            let coloring = if exact {
                brute_force_coloring(&rep_val.adjacency())?
            } else {
                greedy_coloring(&rep_val)?
            };
            let mut text = format!(
                "{}\n# kind: coloring\ncolors {}\n",
                io::FORMAT_LINE,
                coloring.count
            );
            for (v, c) in coloring.colors.iter().enumerate() {
                text.push_str(&format!("{v} {c}\n"));
            }
            emit(out.as_deref(), &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn witness_csv(w: &IntervalObstruction) -> String {
    match w {
        IntervalObstruction::ChordlessCycle(c) => {
            let ids: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            ids.join(",")
        }
        IntervalObstruction::AsteroidalTriple(a, b, c) => format!("{a},{b},{c}"),
    }
}

fn run_check(cmd: CheckCmd) -> Result<ExitCode> {
    match cmd {
        CheckCmd::Order { graph, order } => {
            let g = load_graph(&graph)?;
            let ord = located(&order, io::parse_order(&read_input(&order)?))?;
            if ord.n() != g.n() {
                return Err(Error::Input(format!(
                    "order has {} vertices, graph has {}",
                    ord.n(),
                    g.n()
                )));
            }
            match verify_mpt_order(&g, &ord) {
                None => {
                    println!("order valid");
                    Ok(ExitCode::SUCCESS)
                }
                Some(v) => {
                    println!("violation {v}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        CheckCmd::Interval { graph } => {
            let verdict = is_interval_graph(&load_graph(&graph)?);
            if verdict.is_interval {
                let ord = verdict.i_order.expect("positive verdicts carry an order");
                println!("INTERVAL order={ord}");
                Ok(ExitCode::SUCCESS)
            } else {
                let w = verdict.witness.expect("refutations carry a witness");
                println!("NOT-INTERVAL witness={}", witness_csv(&w));
                Ok(ExitCode::from(1))
            }
        }
        CheckCmd::MptNecessary { graph } => {
            let certs = common_neighborhood_certificates(&load_graph(&graph)?);
            if certs.is_empty() {
                println!("NO-OBSTRUCTION");
                Ok(ExitCode::SUCCESS)
            } else {
                for cert in &certs {
                    println!("{cert}");
                }
                Ok(ExitCode::from(1))
            }
        }
        CheckCmd::Contact { lsystem } => {
            let text = read_input(&lsystem)?;
            let sys = match sniff_kind(&text) {
                Some("contact-lsystem") => {
                    located(&lsystem, io::parse_contact(&text))?.system().clone()
                }
                _ => located(&lsystem, io::parse_lsystem(&text))?,
            };
            let report = verify_contact(&sys);
            match report.crossing {
                None => {
                    println!("CONTACT equilateral={}", report.equilateral);
                    Ok(ExitCode::SUCCESS)
                }
                Some((u, v)) => {
                    println!("CROSSING {u} {v}");
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn run_recognize(a: RecognizeArgs) -> Result<ExitCode> {
    let g = load_graph(&a.graph)?;
    if let Some(cert) = common_neighborhood_certificates(&g).into_iter().next() {
        println!("not-MPT (certified)");
        println!("{cert}");
        return Ok(ExitCode::from(1));
    }
    let limit = a.max_n.unwrap_or(limits::ORDER_SEARCH);
    if g.n() > limit {
        println!("unknown");
        return Ok(ExitCode::SUCCESS);
    }
    match brute_force_mpt_order_with_limit(&g, limit)? {
        Some(ord) => {
            println!("MPT (order found)");
            println!("{}", MptCertificate::OrderFound(ord));
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("not-MPT (certified)");
            println!("{}", MptCertificate::OrderExhausted);
            Ok(ExitCode::from(1))
        }
    }
}

fn run_decompose(cmd: DecomposeCmd) -> Result<ExitCode> {
    match cmd {
        DecomposeCmd::TwoInterval { rep, out1, out2 } => {
            let rep_val = load_rep(&rep)?;
            let (ends, starts) = two_interval_decomposition(&rep_val);
            emit(out1.as_deref(), &io::write_interval_rep(&ends))?;
            emit(out2.as_deref(), &io::write_interval_rep(&starts))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_segments(a: SegmentsArgs) -> Result<ExitCode> {
    let rep = load_rep(&a.rep)?;
    let sys = cyclic_segments_from_order(&rep.adjacency(), &order_from_rep(&rep))?;
    emit(a.out.as_deref(), &io::write_segments(sys.segments()))?;
    Ok(ExitCode::SUCCESS)
}

fn run_contact(a: ContactArgs) -> Result<ExitCode> {
    let sys = contact_lsystem_from_outerplanar(&load_graph(&a.graph)?)?;
    emit(a.out.as_deref(), &io::write_contact(&sys))?;
    Ok(ExitCode::SUCCESS)
}

fn run_reduce(cmd: ReduceCmd) -> Result<ExitCode> {
    match cmd {
        ReduceCmd::Coloring { arcs, k, cut, out_graph, out_rep, out_map } => {
            let arcs_val = located(&arcs, io::parse_arcs(&read_input(&arcs)?))?;
            let cut_val = match cut {
                Some(s) => parse_q(&s)?,
                None => suggest_cut(&arcs_val, k),
            };
            let out = coloring_hardness_reduction(&arcs_val, k, &cut_val)?;
            emit(out_graph.as_deref(), &io::write_graph(&out.g_prime))?;
            emit(out_rep.as_deref(), &io::write_mpt_rep(&out.rep))?;
            emit(out_map.as_deref(), &io::write_mapping(&out.split_map))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

enum Drawable {
    Rep(MptRepresentation),
    LSystem(LinearLSystem),
    Segments(Vec<Segment>),
    Contact(ContactLSystem),
}

fn sniff_kind(text: &str) -> Option<&str> {
    text.lines()
        .find_map(|l| l.trim().strip_prefix("# kind:").map(str::trim))
}

fn run_render(a: RenderArgs) -> Result<ExitCode> {
    let text = read_input(&a.input)?;
    let drawable = match sniff_kind(&text) {
        Some("mpt-rep") => Drawable::Rep(located(&a.input, io::parse_mpt_rep(&text))?),
        Some("lsystem") => Drawable::LSystem(located(&a.input, io::parse_lsystem(&text))?),
        Some("interval-rep") => Drawable::LSystem(interval_to_anchored_lsystem(&located(
            &a.input,
            io::parse_interval_rep(&text),
        )?)),
        Some("segments") => Drawable::Segments(located(&a.input, io::parse_segments(&text))?),
        Some("contact-lsystem") => {
            Drawable::Contact(located(&a.input, io::parse_contact(&text))?)
        }
        Some(other) => {
            return Err(Error::Input(format!(
                "{}: cannot render kind '{other}'",
                a.input.display()
            )))
        }
        None => infer_drawable(&a.input, &text)?,
    };
    let scene = match &drawable {
        Drawable::Rep(r) => Scene::Rep(r),
        Drawable::LSystem(s) => Scene::LSystem(s),
        Drawable::Segments(s) => Scene::SegmentList(s),
        Drawable::Contact(c) => Scene::Contact(c),
    };
    emit(a.out.as_deref(), &render_svg(&scene, &RenderOptions::default()))?;
    Ok(ExitCode::SUCCESS)
}

/// Kind inference for files without a kind comment. L-system and
/// representation files share their shape; L-system wins the tie.
fn infer_drawable(path: &Path, text: &str) -> Result<Drawable> {
    if let Ok(sys) = io::parse_contact(text) {
        return Ok(Drawable::Contact(sys));
    }
    if let Ok(segs) = io::parse_segments(text) {
        return Ok(Drawable::Segments(segs));
    }
    if let Ok(sys) = io::parse_lsystem(text) {
        return Ok(Drawable::LSystem(sys));
    }
    if let Ok(rep) = io::parse_mpt_rep(text) {
        return Ok(Drawable::Rep(rep));
    }
    if let Ok(ir) = io::parse_interval_rep(text) {
        return Ok(Drawable::LSystem(interval_to_anchored_lsystem(&ir)));
    }
    Err(Error::Input(format!(
        "{}: could not infer a drawable kind; add a '# kind:' comment",
        path.display()
    )))
}
