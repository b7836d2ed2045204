use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pcube_cli::{self as cli, load_family, load_graph, Outcome, Output};

/// Partial cubes: recognition, embeddings, dimensions and constructions.
///
/// Graphs are JSON files {"vertices": [...], "edges": [[u, v], ...]};
/// set families are {"ground": [...], "sets": [[...], ...]}. Exit status is
/// 0 on success, 1 for a negative answer or a library error, 2 for
/// unreadable or malformed input.
#[derive(Parser)]
#[command(name = "pcube", version, about)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is a partial cube.
    Recognize { file: PathBuf },
    /// Isometric and lattice dimension of a partial cube.
    Dim { file: PathBuf },
    /// Hypercube embedding, or a lattice embedding with --lattice.
    Embed {
        file: PathBuf,
        #[arg(long)]
        lattice: bool,
    },
    /// Classes of the Djoković relation.
    Theta { file: PathBuf },
    /// Set-family operations.
    Family {
        #[command(subcommand)]
        op: FamilyOp,
    },
    /// Cartesian product of two graphs.
    Product { first: PathBuf, second: PathBuf },
    /// Glue two graphs at a vertex.
    PasteVertex {
        first: PathBuf,
        a1: String,
        second: PathBuf,
        a2: String,
    },
    /// Glue two graphs along an edge, A1 onto A2 and B1 onto B2.
    PasteEdge {
        first: PathBuf,
        a1: String,
        b1: String,
        second: PathBuf,
        a2: String,
        b2: String,
    },
    /// Expand along two covering isometric subgraphs.
    Expand {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        v1: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        v2: Vec<String>,
    },
    /// Contract along the θ-class of an edge.
    Contract { file: PathBuf, a: String, b: String },
    /// Expansion steps building a partial cube from one vertex.
    Sequence { file: PathBuf },
    /// Graphviz DOT export.
    Dot {
        file: PathBuf,
        #[arg(long)]
        theta_colors: bool,
    },
}

#[derive(Subcommand)]
enum FamilyOp {
    /// Well-gradedness, with a witness pair when it fails.
    Check { file: PathBuf },
    /// The graph of the family inside the hypercube.
    Graph { file: PathBuf },
    /// Drop elements common to all members or to none.
    Retract { file: PathBuf },
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Recognize { file } => cli::recognize(&load_graph(&file)?),
        Command::Dim { file } => cli::dim(&load_graph(&file)?),
        Command::Embed { file, lattice } => cli::embed(&load_graph(&file)?, lattice),
        Command::Theta { file } => cli::theta(&load_graph(&file)?),
        Command::Family { op } => match op {
            FamilyOp::Check { file } => cli::family_check(&load_family(&file)?),
            FamilyOp::Graph { file } => cli::family_graph(&load_family(&file)?),
            FamilyOp::Retract { file } => cli::family_retract(&load_family(&file)?),
        },
        Command::Product { first, second } => {
            cli::product(&load_graph(&first)?, &load_graph(&second)?)
        }
        Command::PasteVertex {
            first,
            a1,
            second,
            a2,
        } => cli::paste_vertex(&load_graph(&first)?, &a1, &load_graph(&second)?, &a2),
        Command::PasteEdge {
            first,
            a1,
            b1,
            second,
            a2,
            b2,
        } => cli::paste_edge(
            &load_graph(&first)?,
            (&a1, &b1),
            &load_graph(&second)?,
            (&a2, &b2),
        ),
        Command::Expand { file, v1, v2 } => cli::expand(&load_graph(&file)?, &v1, &v2),
        Command::Contract { file, a, b } => cli::contract(&load_graph(&file)?, &a, &b),
        Command::Sequence { file } => cli::sequence(&load_graph(&file)?),
        Command::Dot { file, theta_colors } => cli::dot(&load_graph(&file)?, theta_colors),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (text, to_stdout, code) = match run(args.command) {
        Ok(success) => {
            let text = match &success.output {
                Output::Json(v) => cli::render(v),
                Output::Text(t) => t.clone(),
            };
            (text, true, success.exit_code())
        }
        Err(failure) => (cli::render(&failure.to_json()), false, failure.exit_code()),
    };
    let written = if to_stdout {
        std::io::stdout().lock().write_all(text.as_bytes())
    } else {
        std::io::stderr().lock().write_all(text.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
