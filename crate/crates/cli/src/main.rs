//! `confspace`: homology of discrete configuration spaces of graphs from the
//! command line.
//!
//! Exit codes: 0 on success or match, 1 on mismatch, 2 on usage or input errors.

mod commands;
mod gauge_cmd;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{SpanningArgs, TreeArg};
use report::{Outcome, Output};

#[derive(Debug, Parser)]
#[command(name = "confspace", version, about = "Homology and gauge potentials of graph configuration spaces")]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock time in JSON reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Builds the complex and computes H1 by Smith normal form.
    Homology {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        /// Use the graph as given even if it is not sufficiently subdivided.
        #[arg(long)]
        no_subdivide: bool,
        /// Write the cells and boundary matrices as JSON.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Closed-form H1 from the connectivity decomposition.
    Predict {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
    },
    /// Runs prediction and Smith normal form and compares them.
    Compare {
        #[arg(long, required_unless_present = "corpus", conflicts_with = "corpus")]
        graph: Option<PathBuf>,
        /// Directory of graph files, compared in parallel.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        #[arg(long)]
        no_subdivide: bool,
        /// Adds to the predicted rank; used to test the mismatch path.
        #[arg(long, hide = true, default_value_t = 0, allow_negative_numbers = true)]
        inject_rank_offset: i64,
    },
    /// Cut vertices, two-vertex cuts and marked components.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Star-graph closed form against the computed rank.
    Star {
        #[arg(short = 'E')]
        arms: usize,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Gauge potentials on the complex.
    Gauge {
        #[command(subcommand)]
        command: gauge_cmd::GaugeCommand,
    },
    /// AB- and Y-cycle generators from a rooted spanning tree.
    Spanning {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        #[arg(long)]
        no_subdivide: bool,
        /// Tree root; the smallest non-cut vertex by default.
        #[arg(long)]
        root: Option<usize>,
        #[arg(long, value_enum, default_value_t = TreeArg::Bfs)]
        tree: TreeArg,
        /// Reverse every cyclic neighbor order.
        #[arg(long)]
        reverse_orders: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output { json: cli.json, timing: cli.timing };
    let result = match cli.command {
        Command::Homology { graph, n, no_subdivide, dump } => {
            commands::homology(&graph, n, no_subdivide, dump.as_deref(), &out)
        }
        Command::Predict { graph, n } => commands::predict(&graph, n, &out),
        Command::Compare { graph, corpus, n, no_subdivide, inject_rank_offset } => match (graph, corpus) {
            (_, Some(dir)) => commands::compare_corpus(&dir, n, no_subdivide, inject_rank_offset, &out),
            (Some(graph), None) => commands::compare(&graph, n, no_subdivide, inject_rank_offset, &out),
            (None, None) => unreachable!("clap requires one of --graph and --corpus"),
        },
        Command::Decompose { graph } => commands::decompose_cmd(&graph, &out),
        Command::Star { arms, n } => commands::star(arms, n, &out),
        Command::Gauge { command } => gauge_cmd::run(command, &out),
        Command::Spanning { graph, n, no_subdivide, root, tree, reverse_orders } => {
            commands::spanning(SpanningArgs { graph: &graph, n, no_subdivide, root, tree, reverse_orders }, &out)
        }
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
