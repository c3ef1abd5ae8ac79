//! The `upse` command line.
//!
//! Exit codes: 0 success or a true decision, 1 a false decision, 2 usage or
//! input error, 3 internal invariant failure. Inputs are JSON files; `-`
//! reads standard input.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::construct::{embed_caterpillar, embed_path_one_sided, embed_three_section, ConstructError};
use crate::digraph::{generate_caterpillar, generate_path, Digraph};
use crate::enumerate::Enumerator;
use crate::geometry::{
    generate_point_set, is_convex_position, is_general_position, is_one_sided, PointSet, PointSetKind,
};
use crate::io::{self, IoError};
use crate::reduction::{certificate, consistent_embedding, reduce, solve_3partition, ReductionError};
use crate::svg::{render_svg, Overlay};
use crate::verify::{is_upse, Embedding};

#[derive(Parser, Debug)]
#[command(name = "upse", version, about = "Upward planar straight-line embeddings on point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Out {
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct GraphOnPoints {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    points: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report general position, convexity and one-sidedness.
    Classify {
        #[arg(long)]
        points: PathBuf,
    },
    /// Check an embedding; exit 0 if it is a UPSE, 1 otherwise.
    Verify {
        #[command(flatten)]
        input: GraphOnPoints,
        #[arg(long)]
        embedding: PathBuf,
    },
    /// Count all UPSEs.
    Count {
        #[command(flatten)]
        input: GraphOnPoints,
    },
    /// List all UPSEs as mapping arrays.
    Enumerate {
        #[command(flatten)]
        input: GraphOnPoints,
        /// Pin a vertex to a point, as `v:p`. Repeatable.
        #[arg(long, value_parser = parse_pin)]
        pin: Vec<(usize, usize)>,
        #[command(flatten)]
        out: Out,
    },
    /// Decide whether a UPSE maps vertex `v` to point `p`; exit 0 or 1.
    Decide {
        #[command(flatten)]
        input: GraphOnPoints,
        #[arg(long, value_parser = parse_pin)]
        pin: (usize, usize),
        /// Write a witness embedding here when one exists.
        #[command(flatten)]
        out: Out,
    },
    /// All UPSEs of a path on a one-sided convex set of equal size.
    EmbedConvexPath {
        #[command(flatten)]
        input: GraphOnPoints,
        #[command(flatten)]
        out: Out,
    },
    /// A UPSE of a three-section path on a general set.
    EmbedThreeSection {
        #[command(flatten)]
        input: GraphOnPoints,
        #[command(flatten)]
        out: Out,
    },
    /// A UPSE of a caterpillar on a large enough general set.
    EmbedCaterpillar {
        #[command(flatten)]
        input: GraphOnPoints,
        #[command(flatten)]
        out: Out,
    },
    /// Build the tree, point set and certificate for a 3-Partition instance.
    #[command(name = "reduce-3partition")]
    Reduce3partition {
        #[arg(long)]
        instance: PathBuf,
        /// Multiply all values by 3 if some value is not divisible by 3.
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        out: Out,
    },
    /// A consistent embedding of a reduction instance from a 3-partition.
    ConsistentEmbed {
        #[arg(long)]
        instance: PathBuf,
        /// `{"triples": [[i, j, k], ...]}`; solved exhaustively when omitted.
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Draw a point set, optionally with an embedded graph or a reduction bundle.
    RenderSvg {
        #[arg(long, required_unless_present = "reduction")]
        points: Option<PathBuf>,
        #[arg(long, requires = "embedding")]
        graph: Option<PathBuf>,
        #[arg(long, requires = "graph")]
        embedding: Option<PathBuf>,
        /// A bundle written by `reduce-3partition`.
        #[arg(long)]
        reduction: Option<PathBuf>,
        #[command(flatten)]
        out: Out,
    },
    /// Seeded point set: `general`, `convex` or `one-sided`.
    GenPoints {
        #[arg(long)]
        kind: PointSetKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Out,
    },
    /// Seeded oriented path with a given number of sections.
    GenPath {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sections: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Out,
    },
    /// Seeded caterpillar with a given number of backbone switches.
    GenCaterpillar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        switches: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Out,
    },
}

fn parse_pin(s: &str) -> Result<(usize, usize), String> {
    let (v, p) = s.split_once(':').ok_or("expected `v:p`")?;
    Ok((
        v.trim().parse().map_err(|_| format!("bad vertex `{v}`"))?,
        p.trim().parse().map_err(|_| format!("bad point `{p}`"))?,
    ))
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    msg: String,
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure { code: 2, msg: e.to_string() }
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        let code = if matches!(e, ConstructError::Internal(_)) { 3 } else { 2 };
        Failure { code, msg: e.to_string() }
    }
}

impl From<ReductionError> for Failure {
    fn from(e: ReductionError) -> Self {
        let code = if matches!(e, ReductionError::ConstructionFailed(_)) { 3 } else { 2 };
        Failure { code, msg: e.to_string() }
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn read_json(path: &PathBuf) -> Result<Value, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(IoError::from)?;
    } else {
        text =
            std::fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    }
    serde_json::from_str(&text).map_err(|e| input_error(format!("{}: malformed JSON: {e}", path.display())))
}

fn load(input: &GraphOnPoints) -> Result<(Digraph, PointSet), Failure> {
    let g = io::graph_from_json(&read_json(&input.graph)?)?;
    let s = io::point_set_from_json(&read_json(&input.points)?)?;
    Ok((g, s))
}

fn emit(out: &Out, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &out.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))
        }
        None => writeln!(stdout, "{text}").map_err(|e| Failure { code: 3, msg: e.to_string() }),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values serialize")
}

/// Parse `args` (including the program name) and run, writing to the given
/// streams. Returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.msg);
            f.code
        }
    }
}

/// Run with the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn dispatch(cmd: Command, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Classify { points } => {
            let s = io::point_set_from_json(&read_json(&points)?)?;
            let general = is_general_position(&s);
            let report = json!({
                "n": s.len(),
                "general_position": general,
                "convex": general && is_convex_position(&s) == Ok(true),
                "one_sided": general && is_one_sided(&s) == Ok(true),
            });
            emit(&Out { out: None }, &pretty(&report), stdout)?;
            Ok(0)
        }
        Command::Verify { input, embedding } => {
            let (g, s) = load(&input)?;
            let mapping = io::mapping_from_json(&read_json(&embedding)?)?;
            let e = Embedding::for_graph(&g, &s, mapping).map_err(IoError::from)?;
            let ok = is_upse(&g, &s, &e);
            writeln!(stdout, "{ok}").map_err(|e| Failure { code: 3, msg: e.to_string() })?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Count { input } => {
            let (g, s) = load(&input)?;
            let n = Enumerator::new(&s).count(&g, &[]);
            writeln!(stdout, "{n}").map_err(|e| Failure { code: 3, msg: e.to_string() })?;
            Ok(0)
        }
        Command::Enumerate { input, pin, out } => {
            let (g, s) = load(&input)?;
            let all = Enumerator::new(&s).enumerate(&g, &pin);
            let v: Vec<&[usize]> = all.iter().map(Embedding::mapping).collect();
            emit(&out, &compact(&json!(v)), stdout)?;
            Ok(0)
        }
        Command::Decide { input, pin, out } => {
            let (g, s) = load(&input)?;
            let (v, p) = pin;
            if v >= g.n() || p >= s.len() {
                return Err(input_error(format!("pin {v}:{p} is out of range")));
            }
            let witness = Enumerator::new(&s).first(&g, &[pin]);
            writeln!(stdout, "{}", witness.is_some()).map_err(|e| Failure { code: 3, msg: e.to_string() })?;
            if let (Some(w), Some(path)) = (&witness, &out.out) {
                std::fs::write(path, pretty(&io::embedding_to_json(w)))
                    .map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(if witness.is_some() { 0 } else { 1 })
        }
        Command::EmbedConvexPath { input, out } => {
            let p = io::path_from_json(&read_json(&input.graph)?)?;
            let s = io::point_set_from_json(&read_json(&input.points)?)?;
            let all = embed_path_one_sided(&p, &s)?;
            let v: Vec<Value> = all.iter().map(io::embedding_to_json).collect();
            emit(&out, &compact(&Value::Array(v)), stdout)?;
            Ok(0)
        }
        Command::EmbedThreeSection { input, out } => {
            let p = io::path_from_json(&read_json(&input.graph)?)?;
            let s = io::point_set_from_json(&read_json(&input.points)?)?;
            let e = embed_three_section(&p, &s)?;
            emit(&out, &compact(&io::embedding_to_json(&e)), stdout)?;
            Ok(0)
        }
        Command::EmbedCaterpillar { input, out } => {
            let c = io::caterpillar_from_json(&read_json(&input.graph)?)?;
            let s = io::point_set_from_json(&read_json(&input.points)?)?;
            let e = embed_caterpillar(&c, &s)?;
            emit(&out, &compact(&io::embedding_to_json(&e)), stdout)?;
            Ok(0)
        }
        Command::Reduce3partition { instance, normalize, out } => {
            let inst = io::instance_from_json(&read_json(&instance)?, normalize)?;
            let r = reduce(&inst)?;
            let cert = certificate(&r);
            emit(&out, &pretty(&io::reduction_to_json(&r, &cert)), stdout)?;
            Ok(0)
        }
        Command::ConsistentEmbed { instance, partition, normalize, out } => {
            let inst = io::instance_from_json(&read_json(&instance)?, normalize)?;
            let triples = match partition {
                Some(path) => io::partition_from_json(&read_json(&path)?)?,
                None => match solve_3partition(&inst) {
                    Some(t) => t,
                    None => {
                        writeln!(stdout, "false").map_err(|e| Failure { code: 3, msg: e.to_string() })?;
                        return Ok(1);
                    }
                },
            };
            let r = reduce(&inst)?;
            let e = consistent_embedding(&r, &triples)?;
            if !is_upse(&r.tree, &r.points, &e) {
                return Err(Failure { code: 3, msg: "consistent embedding failed verification".into() });
            }
            emit(&out, &compact(&io::embedding_to_json(&e)), stdout)?;
            Ok(0)
        }
        Command::RenderSvg { points, graph, embedding, reduction, out } => {
            let bundle = reduction.as_ref().map(read_json).transpose()?;
            let s = match (&points, &bundle) {
                (Some(p), _) => io::point_set_from_json(&read_json(p)?)?,
                (None, Some(b)) => io::point_set_from_json(&b["points"])?,
                (None, None) => return Err(input_error("need --points or --reduction")),
            };
            let overlay = match &bundle {
                Some(b) => {
                    let (small_sets, large_sets) = io::layout_groups_from_json(b)?;
                    let rays = b["layout"]["rays"]
                        .as_array()
                        .map(|rs| {
                            rs.iter()
                                .filter_map(|r| {
                                    let x = io::rational_from_json(&r[0]).ok()?;
                                    let y = io::rational_from_json(&r[1]).ok()?;
                                    Some((crate::geometry::ratio_to_f64(&x), crate::geometry::ratio_to_f64(&y)))
                                })
                                .collect()
                        })
                        .unwrap_or_default();
                    Some(Overlay { small_sets, large_sets, guides: true, rays })
                }
                None => None,
            };
            let drawing = match (&graph, &embedding) {
                (Some(gp), Some(ep)) => {
                    let g = io::graph_from_json(&read_json(gp)?)?;
                    let m = io::mapping_from_json(&read_json(ep)?)?;
                    let e = Embedding::for_graph(&g, &s, m).map_err(IoError::from)?;
                    Some((g, e))
                }
                _ => None,
            };
            let svg = render_svg(&s, drawing.as_ref().map(|(g, e)| (g, e)), overlay.as_ref());
            emit(&out, svg.trim_end(), stdout)?;
            Ok(0)
        }
        Command::GenPoints { kind, n, seed, out } => {
            let s = generate_point_set(kind, n, seed);
            emit(&out, &compact(&io::point_set_to_json(&s)), stdout)?;
            Ok(0)
        }
        Command::GenPath { n, sections, seed, out } => {
            if n < 2 || sections == 0 || sections >= n {
                return Err(input_error("need n >= 2 and 1 <= sections <= n - 1"));
            }
            let p = generate_path(n, sections, seed);
            emit(&out, &compact(&json!({ "path": p.signs() })), stdout)?;
            Ok(0)
        }
        Command::GenCaterpillar { n, switches, seed, out } => {
            if switches < 2 || n < switches {
                return Err(input_error("need 2 <= switches <= n"));
            }
            let c = generate_caterpillar(n, switches, seed);
            emit(&out, &compact(&io::caterpillar_to_json(&c)), stdout)?;
            Ok(0)
        }
    }
}
