mod document;
mod dot;
mod report;

use std::fmt::Display;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pyrelab::search::{Burnings, SearchOptions};
use pyrelab::{
    attribute_sources, burning_forest, config_space, generate, hom_count_bounds, homology,
    minimal_hom_sequence, orient, path_hom_sequence, spanning_tree, strong_config_space,
    validate, Burning, Coefficients, Graph, GraphFamily, VertexId,
};

use document::GraphDocument;
use report::{
    BoundsReport, BurningReport, ComplexKind, ComplexReport, DecompositionReport, DigraphReport,
    HomologyReport, Payload, Report,
};

const MAX_VERTICES_VAR: &str = "PYRELAB_MAX_VERTICES";
const DEFAULT_MAX_VERTICES: usize = 18;

/// Graph burning without re-burning: sequences, burning maps, decompositions
/// and configuration spaces.
#[derive(Parser)]
#[command(name = "pyrelab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph of a standard family.
    Gen {
        family: Family,
        /// Path length, cycle length, or the spider's leg count
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Emit Graphviz instead of a graph document.
        #[arg(long)]
        dot: bool,
    },
    /// Check a source sequence and print its burning map.
    Validate {
        graph: PathBuf,
        #[arg(short, long, value_delimiter = ',', required = true)]
        sources: Vec<VertexId>,
    },
    /// List every burning, one report per line, in lexicographic order.
    Enumerate {
        graph: PathBuf,
        /// Only burnings whose burning map is a homomorphism.
        #[arg(long)]
        hom: bool,
        /// Stop after this many reports.
        #[arg(long)]
        limit: Option<usize>,
        /// Only sequences with at most this many sources.
        #[arg(long)]
        max_sources: Option<usize>,
    },
    /// Source attribution, burning forest and spanning tree of a burning.
    Decompose {
        graph: PathBuf,
        #[arg(short, long, value_delimiter = ',', required = true)]
        sources: Vec<VertexId>,
    },
    /// Orient every edge from the earlier-burnt end.
    Orient {
        graph: PathBuf,
        #[arg(short, long, value_delimiter = ',', required = true)]
        sources: Vec<VertexId>,
        #[arg(long)]
        dot: bool,
    },
    /// Maximal faces of a configuration space.
    Complex {
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: ComplexKind,
    },
    /// Simplicial homology of a configuration space.
    Homology {
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: ComplexKind,
        /// Prime modulus; integers when omitted.
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Source-count bounds for homomorphism burnings of a path, with witnesses.
    Bounds { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Y,
}

enum Failure {
    /// Exit code 1.
    Domain(String),
    /// Exit code 2.
    Usage(String),
}

impl Failure {
    fn domain(e: impl Display) -> Self {
        Failure::Domain(e.to_string())
    }

    fn usage(e: impl Display) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn load(path: &Path) -> Result<(GraphDocument, Graph), Failure> {
    document::load(path).map_err(Failure::usage)
}

fn max_vertices() -> Result<usize, Failure> {
    match std::env::var(MAX_VERTICES_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{MAX_VERTICES_VAR}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_VERTICES),
    }
}

/// Refuses exhaustive searches on graphs above the configured size.
fn guard(g: &Graph) -> Outcome {
    let limit = max_vertices()?;
    if g.vertex_count() > limit {
        return Err(Failure::Domain(format!(
            "graph has {} vertices, above the exhaustive-search limit {limit} (raise {MAX_VERTICES_VAR})",
            g.vertex_count()
        )));
    }
    Ok(())
}

fn emit(out: &mut impl Write, command: &str, payload: Payload) -> Outcome {
    let report = Report {
        command: command.to_string(),
        payload,
    };
    let line = serde_json::to_string(&report).map_err(Failure::domain)?;
    writeln!(out, "{line}").map_err(Failure::domain)
}

fn burning(g: &Graph, sources: &[VertexId]) -> Result<Burning, Failure> {
    validate(g, sources).map_err(Failure::domain)
}

fn display_name(doc: &GraphDocument, path: &Path) -> String {
    doc.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map_or_else(|| "G".into(), |s| s.to_string_lossy().into_owned())
    })
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::Gen {
            family,
            n,
            output,
            dot,
        } => {
            let (fam, name) = match family {
                Family::Path => (GraphFamily::Path(n), format!("P{n}")),
                Family::Cycle => (GraphFamily::Cycle(n), format!("C{n}")),
                Family::Y => (GraphFamily::YSpider(n), format!("Y{}", (n * n).saturating_sub(1))),
            };
            let g = generate(fam).map_err(Failure::domain)?;
            let text = if dot {
                dot::graph(&g, &name)
            } else {
                GraphDocument::from_graph(&g, Some(name)).to_text()
            };
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display()))),
                None => out.write_all(text.as_bytes()).map_err(Failure::domain),
            }
        }
        Command::Validate { graph, sources } => {
            let (_, g) = load(&graph)?;
            let b = burning(&g, &sources)?;
            emit(out, "validate", Payload::Burning((&b).into()))
        }
        Command::Enumerate {
            graph,
            hom,
            limit,
            max_sources,
        } => {
            let (_, g) = load(&graph)?;
            guard(&g)?;
            let mut options = if hom {
                SearchOptions::homomorphisms()
            } else {
                SearchOptions::burnings()
            };
            options.max_sources = max_sources;
            for b in Burnings::new(&g, options).take(limit.unwrap_or(usize::MAX)) {
                emit(out, "enumerate", Payload::Burning(BurningReport::from(&b)))?;
            }
            Ok(())
        }
        Command::Decompose { graph, sources } => {
            let (_, g) = load(&graph)?;
            let b = burning(&g, &sources)?;
            let a = attribute_sources(&b).map_err(Failure::domain)?;
            let f = burning_forest(&b, &a).map_err(Failure::domain)?;
            let tree = if g.is_connected() {
                Some(spanning_tree(&b, &f).map_err(Failure::domain)?)
            } else {
                None
            };
            let report = DecompositionReport::new(&b, &a, &f, tree.as_ref());
            emit(out, "decompose", Payload::Decomposition(report))
        }
        Command::Orient {
            graph,
            sources,
            dot,
        } => {
            let (doc, g) = load(&graph)?;
            let b = burning(&g, &sources)?;
            let a = attribute_sources(&b).map_err(Failure::domain)?;
            let d = orient(&b, &a).map_err(Failure::domain)?;
            if dot {
                let text = dot::digraph(&d, &display_name(&doc, &graph));
                out.write_all(text.as_bytes()).map_err(Failure::domain)
            } else {
                emit(out, "orient", Payload::Digraph(DigraphReport::from(&d)))
            }
        }
        Command::Complex { graph, kind } => {
            let (_, g) = load(&graph)?;
            guard(&g)?;
            let k = match kind {
                ComplexKind::Delta => config_space(&g),
                ComplexKind::Gamma => strong_config_space(&g),
            };
            emit(out, "complex", Payload::Complex(ComplexReport::new(kind, &k)))
        }
        Command::Homology {
            graph,
            kind,
            modulus,
        } => {
            let (_, g) = load(&graph)?;
            guard(&g)?;
            let k = match kind {
                ComplexKind::Delta => config_space(&g),
                ComplexKind::Gamma => strong_config_space(&g),
            };
            let coefficients = modulus.map_or(Coefficients::Integers, Coefficients::Prime);
            let h = homology(&k, coefficients).map_err(Failure::usage)?;
            emit(out, "homology", Payload::Homology(HomologyReport::new(kind, &h)))
        }
        Command::Bounds { n } => {
            let bounds = hom_count_bounds(n).map_err(Failure::domain)?;
            let min = minimal_hom_sequence(n).map_err(Failure::domain)?;
            let max = path_hom_sequence(n).map_err(Failure::domain)?;
            emit(out, "bounds", Payload::Bounds(BoundsReport::new(&bounds, &min, max)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(Failure::domain));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
