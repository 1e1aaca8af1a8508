use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use orientflip::connectivity::{lambda_directed, lambda_undirected};
use orientflip::flip_core::{orient_k_connected, reconfigure_k_with_cap, FlipSequence, DEFAULT_MIDDLE_NODE_CAP};
use orientflip::io::{format_graph, parse_graph, parse_orientation};
use orientflip::local_reach::reconfigure_strong;
use orientflip::oracle::{build_flip_graph, OracleCaps};
use orientflip::{gen, Error, Orientation, UndirectedMultigraph};
use serde::Serialize;
use sha2::{Digest, Sha256};

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_UNDERLYING: u8 = 3;
const EXIT_OBSTRUCTION: u8 = 4;
const EXIT_MIDDLE_CAP: u8 = 5;
const EXIT_TOO_LARGE: u8 = 6;

#[derive(Parser)]
#[command(name = "orientflip", version, about = "k-edge-connected orientations and edge-flip reconfiguration")]
struct Cli {
    /// Node cap for flip-graph searches (overrides ORIENTFLIP_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Reserved; every command is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the edge-connectivity of a graph, or of an orientation of it.
    Lambda { graph: PathBuf, orientation: Option<PathBuf> },
    /// Flip edges until the orientation is k-edge-connected.
    Orient {
        graph: PathBuf,
        orientation: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Write a JSON run report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Flip edges from one k-edge-connected orientation to another.
    Reconfigure {
        graph: PathBuf,
        from: PathBuf,
        to: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Statistics of the flip graph on k-edge-connected orientations.
    Flipgraph {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Write the flip graph in DOT format here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print a test graph in the graph file format.
    Gen {
        family: Family,
        n: usize,
        /// Repeat every edge this many times.
        #[arg(long, default_value_t = 1)]
        mult: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Complete,
}

/// A failure carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::UnderlyingConnectivityTooLow { .. } => EXIT_UNDERLYING,
            Error::Obstructed(_) => EXIT_OBSTRUCTION,
            Error::MiddleSearchTooLarge(_) => EXIT_MIDDLE_CAP,
            Error::TooLarge { .. } => EXIT_TOO_LARGE,
            _ => EXIT_FAILURE,
        };
        Failure::new(code, e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

#[derive(Serialize)]
struct GraphSize {
    n: usize,
    m: usize,
}

#[derive(Serialize)]
struct RunReport {
    command: Vec<String>,
    inputs_digest: String,
    graph: GraphSize,
    k: usize,
    sequence: Vec<usize>,
    lambdas: Vec<usize>,
    val_trace: Vec<usize>,
    elapsed_ms: u128,
}

struct Inputs {
    digest: Sha256,
}

impl Inputs {
    fn new() -> Self {
        Self { digest: Sha256::new() }
    }

    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
        self.digest.update((text.len() as u64).to_le_bytes());
        self.digest.update(text.as_bytes());
        Ok(text)
    }

    fn graph(&mut self, path: &Path) -> Result<Arc<UndirectedMultigraph>, Failure> {
        let text = self.read(path)?;
        parse_graph(&text)
            .map(Arc::new)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
    }

    fn orientation(&mut self, path: &Path, g: &Arc<UndirectedMultigraph>) -> Result<Orientation, Failure> {
        let text = self.read(path)?;
        parse_orientation(&text, g.clone()).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
    }

    fn hex(self) -> String {
        self.digest.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn node_cap(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("ORIENTFLIP_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::new(EXIT_PARSE, format!("ORIENTFLIP_CAP is not a non-negative integer: {v:?}"))),
        Err(_) => Ok(DEFAULT_MIDDLE_NODE_CAP),
    }
}

fn print_sequence(seq: &FlipSequence, final_lambda: usize) {
    for e in &seq.flips {
        println!("{}", e.0);
    }
    println!("# lambda: {final_lambda}");
}

fn write_report(
    path: &Path,
    inputs: Inputs,
    g: &UndirectedMultigraph,
    k: usize,
    seq: &FlipSequence,
    started: Instant,
) -> CmdResult {
    let report = RunReport {
        command: std::env::args().collect(),
        inputs_digest: inputs.hex(),
        graph: GraphSize { n: g.n(), m: g.m() },
        k,
        sequence: seq.flips.iter().map(|e| e.0).collect(),
        lambdas: seq.lambdas.clone(),
        val_trace: seq.vals.clone(),
        elapsed_ms: started.elapsed().as_millis(),
    };
    let text = serde_json::to_string_pretty(&report).map_err(|e| Failure::new(EXIT_FAILURE, e.to_string()))?;
    fs::write(path, text + "\n").map_err(|e| Failure::new(EXIT_FAILURE, format!("cannot write {}: {e}", path.display())))
}

fn cmd_lambda(graph: &Path, orientation: Option<&Path>) -> CmdResult {
    let mut inputs = Inputs::new();
    let g = inputs.graph(graph)?;
    let lambda = match orientation {
        Some(path) => lambda_directed(&inputs.orientation(path, &g)?)?,
        None => lambda_undirected(&g)?,
    };
    println!("{lambda}");
    Ok(())
}

fn cmd_orient(graph: &Path, orientation: &Path, k: usize, json: Option<&Path>) -> CmdResult {
    let started = Instant::now();
    let mut inputs = Inputs::new();
    let g = inputs.graph(graph)?;
    let d = inputs.orientation(orientation, &g)?;
    let (seq, out) = orient_k_connected(&d, k)?;
    print_sequence(&seq, lambda_directed(&out)?);
    if let Some(path) = json {
        write_report(path, inputs, &g, k, &seq, started)?;
    }
    Ok(())
}

fn cmd_reconfigure(graph: &Path, from: &Path, to: &Path, k: usize, cap: usize, json: Option<&Path>) -> CmdResult {
    let started = Instant::now();
    let mut inputs = Inputs::new();
    let g = inputs.graph(graph)?;
    let d1 = inputs.orientation(from, &g)?;
    let d2 = inputs.orientation(to, &g)?;
    let result = match k {
        // every orientation is 0-edge-connected: flip the differing edges
        0 => {
            let mut seq = FlipSequence::default();
            let mut cur = d1.clone();
            for e in d1.diff(&d2)? {
                cur.flip_in_place(e)?;
                seq.flips.push(e);
                seq.lambdas.push(lambda_directed(&cur)?);
            }
            Ok(seq)
        }
        1 => reconfigure_strong(&d1, &d2),
        _ => reconfigure_k_with_cap(&d1, &d2, k, cap),
    };
    let seq = match result {
        Ok(seq) => seq,
        Err(Error::Obstructed(ob)) => {
            println!("OBSTRUCTION {} {}", ob.cut_edges.0 .0, ob.cut_edges.1 .0);
            return Err(Failure::new(EXIT_OBSTRUCTION, format!("orientations are separated by {ob}")));
        }
        Err(Error::MiddleSearchTooLarge(partial)) => {
            println!("MIDDLE-SEARCH-CAP");
            for e in &partial.first.flips {
                println!("{}", e.0);
            }
            println!("# unresolved: {} -> {}", partial.d1_prime.bitstring(), partial.d2_prime.bitstring());
            for e in partial.last.flips.iter().rev() {
                println!("{}", e.0);
            }
            return Err(Failure::new(
                EXIT_MIDDLE_CAP,
                format!("middle search exceeded its node cap of {}", partial.node_cap),
            ));
        }
        Err(e) => return Err(e.into()),
    };
    print_sequence(&seq, lambda_directed(&d2)?);
    if let Some(path) = json {
        write_report(path, inputs, &g, k, &seq, started)?;
    }
    Ok(())
}

fn cmd_flipgraph(graph: &Path, k: usize, cap: usize, dot: Option<&Path>) -> CmdResult {
    let g = Inputs::new().graph(graph)?;
    let caps = OracleCaps {
        node_cap: cap,
        ..OracleCaps::default()
    };
    let fg = build_flip_graph(&g, k, &caps)?;
    let diameter = fg.diameter().map_or_else(|| "inf".to_string(), |d| d.to_string());
    println!(
        "nodes={} edges={} connected={} diameter={diameter}",
        fg.node_count(),
        fg.edge_count(),
        fg.is_connected()
    );
    if let Some(path) = dot {
        fs::write(path, fg.to_dot())
            .map_err(|e| Failure::new(EXIT_FAILURE, format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn cmd_gen(family: Family, n: usize, mult: usize) -> CmdResult {
    if mult == 0 {
        return Err(Failure::new(EXIT_PARSE, "--mult must be at least 1"));
    }
    if matches!(family, Family::Cycle) && n < 2 {
        return Err(Failure::new(EXIT_PARSE, "a cycle needs at least two vertices"));
    }
    let base = match family {
        Family::Cycle => gen::cycle(n),
        Family::Complete => gen::complete(n),
    };
    print!("{}", format_graph(&base.duplicated(mult)));
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    let cap = node_cap(cli.cap)?;
    match &cli.command {
        Command::Lambda { graph, orientation } => cmd_lambda(graph, orientation.as_deref()),
        Command::Orient {
            graph,
            orientation,
            k,
            json,
        } => cmd_orient(graph, orientation, *k, json.as_deref()),
        Command::Reconfigure { graph, from, to, k, json } => {
            cmd_reconfigure(graph, from, to, *k, cap, json.as_deref())
        }
        Command::Flipgraph { graph, k, dot } => cmd_flipgraph(graph, *k, cap, dot.as_deref()),
        Command::Gen { family, n, mult } => cmd_gen(*family, *n, *mult),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
