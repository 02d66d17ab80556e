//! The `ginv` command line.
//!
//! Exit codes: 0 success, 1 input error, 2 infinite structure (cyclic graph
//! without a bound, or a semigroup request on a cyclic graph), 3 internal
//! consistency violation.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::classify::{classify, Verdicts};
use crate::graph::DirectedGraph;
use crate::lattice::{order_isomorphic, to_dot};
use crate::oracle::{oracle_lattice, OracleError, DEFAULT_CAP};
use crate::semigroup::{FiniteSemigroup, SemigroupError};
use crate::triples::{triple_lattice, TripleError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INFINITE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ginv",
    version,
    about = "Congruence lattices of graph inverse semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List forked vertices.
    Forked {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Predict lattice properties from forked vertices; with --enumerate,
    /// also compute them on the triple lattice.
    Classify {
        graph: PathBuf,
        #[arg(long)]
        enumerate: bool,
        /// Cycle values range over the divisors of N and inf (cyclic graphs).
        #[arg(long, value_name = "N")]
        bound: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Dump the lattice of congruence triples.
    Lattice {
        graph: PathBuf,
        #[arg(long, value_name = "N")]
        bound: Option<u64>,
        /// Write the Hasse diagram as Graphviz DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// List semigroup elements and the multiplication table.
    Semigroup {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compare the triple lattice with brute-force congruences.
    Oracle {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
        /// Largest semigroup the brute force accepts.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<TripleError> for Failure {
    fn from(e: TripleError) -> Self {
        let code = match e {
            TripleError::UnboundedLattice => EXIT_INFINITE,
            TripleError::NotALattice(_) => EXIT_INCONSISTENT,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<SemigroupError> for Failure {
    fn from(e: SemigroupError) -> Self {
        let code = match e {
            SemigroupError::CyclicGraph => EXIT_INFINITE,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Semigroup(s) => s.into(),
            OracleError::TooLarge { .. } => Failure::new(EXIT_INPUT, e.to_string()),
            OracleError::Internal(_) => Failure::new(EXIT_INCONSISTENT, e.to_string()),
        }
    }
}

/// Output of a successful command, plus the exit code it asks for.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: EXIT_OK,
        }
    }
}

fn load(path: &Path) -> Result<DirectedGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    DirectedGraph::parse(&text)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Runs the CLI with `args` (including the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command) -> Result<Output, Failure> {
    match cmd {
        Command::Forked { graph, json } => cmd_forked(&load(&graph)?, json),
        Command::Classify {
            graph,
            enumerate,
            bound,
            json,
        } => cmd_classify(&load(&graph)?, enumerate, bound, json),
        Command::Lattice {
            graph,
            bound,
            dot,
            json,
        } => cmd_lattice(&load(&graph)?, bound, dot.as_deref(), json),
        Command::Semigroup { graph, json } => cmd_semigroup(&load(&graph)?, json),
        Command::Oracle { graph, json, cap } => cmd_oracle(&load(&graph)?, json, cap),
    }
}

fn cmd_forked(g: &DirectedGraph, json: bool) -> Result<Output, Failure> {
    let names = g.sorted_names(g.forked_vertices());
    Ok(Output::ok(if json {
        pretty(&json!({ "forked": names }))
    } else {
        names.iter().map(|n| format!("{n}\n")).collect()
    }))
}

fn cmd_classify(
    g: &DirectedGraph,
    enumerate: bool,
    bound: Option<u64>,
    json: bool,
) -> Result<Output, Failure> {
    let report = classify(g, enumerate, bound)?;
    let text = if json {
        pretty(&report.to_json())
    } else {
        report.render_text()
    };
    let code = if report.is_consistent() {
        EXIT_OK
    } else {
        EXIT_INCONSISTENT
    };
    Ok(Output { text, code })
}

fn cmd_lattice(
    g: &DirectedGraph,
    bound: Option<u64>,
    dot: Option<&Path>,
    json: bool,
) -> Result<Output, Failure> {
    let l = triple_lattice(g, bound)?;
    let verdicts = Verdicts::of_lattice(&l);
    if let Some(path) = dot {
        let diagram = to_dot(&l, |t| t.render(g));
        std::fs::write(path, diagram)
            .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    }
    // covers listed as (lower, upper), sorted
    let mut covers: Vec<(usize, usize)> = l.cover_pairs().iter().map(|&(u, d)| (d, u)).collect();
    covers.sort_unstable();
    let bound = if g.is_acyclic() { None } else { bound };
    let text = if json {
        pretty(&json!({
            "elements": l.labels().iter().map(|t| t.to_json(g)).collect::<Vec<_>>(),
            "covers": covers.iter().map(|&(d, u)| [d, u]).collect::<Vec<_>>(),
            "bound": bound,
            "verdicts": verdicts.to_json(),
        }))
    } else {
        let mut s = String::new();
        writeln!(s, "elements: {}", l.len()).unwrap();
        for (i, t) in l.labels().iter().enumerate() {
            writeln!(s, "  T{} {}", i + 1, t.render(g)).unwrap();
        }
        writeln!(s, "covers: {}", covers.len()).unwrap();
        for (d, u) in &covers {
            writeln!(s, "  T{} < T{}", d + 1, u + 1).unwrap();
        }
        writeln!(
            s,
            "distributive={} modular={} upper_semimodular={} lower_semimodular={}",
            verdicts.distributive,
            verdicts.modular,
            verdicts.upper_semimodular,
            verdicts.lower_semimodular
        )
        .unwrap();
        s
    };
    Ok(Output::ok(text))
}

fn cmd_semigroup(g: &DirectedGraph, json: bool) -> Result<Output, Failure> {
    let s = FiniteSemigroup::new(g)?;
    let rendered: Vec<String> = s.elements().iter().map(|x| x.render(g)).collect();
    let text = if json {
        pretty(&json!({ "elements": rendered, "table": s.table() }))
    } else {
        let mut out = String::new();
        writeln!(out, "elements: {}", s.len()).unwrap();
        for (i, r) in rendered.iter().enumerate() {
            writeln!(out, "  {i:>3} {r}").unwrap();
        }
        writeln!(out, "table (row * column):").unwrap();
        for row in s.table() {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
            writeln!(out, "  {}", cells.join(" ")).unwrap();
        }
        out
    };
    Ok(Output::ok(text))
}

fn cmd_oracle(g: &DirectedGraph, json: bool, cap: usize) -> Result<Output, Failure> {
    let (s, congruences) = oracle_lattice(g, cap)?;
    let triples = triple_lattice(g, None)?;
    let isomorphic = order_isomorphic(&triples, &congruences);
    let tv = Verdicts::of_lattice(&triples);
    let cv = Verdicts::of_lattice(&congruences);
    let consistent = isomorphic && tv == cv;
    let text = if json {
        pretty(&json!({
            "semigroup_size": s.len(),
            "triples": triples.len(),
            "congruences": congruences.len(),
            "isomorphic": isomorphic,
            "triple_verdicts": tv.to_json(),
            "congruence_verdicts": cv.to_json(),
        }))
    } else {
        format!(
            "semigroup: {} elements\ntriples: {}\ncongruences: {}\nisomorphic: {}\n",
            s.len(),
            triples.len(),
            congruences.len(),
            if isomorphic { "yes" } else { "no" }
        )
    };
    Ok(Output {
        text,
        code: if consistent {
            EXIT_OK
        } else {
            EXIT_INCONSISTENT
        },
    })
}
