//! `pon`: proper orientations of outerplanar graphs from the command line.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "pon",
    version,
    about = "Proper orientations of outerplanar graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orient a graph and write the orientation.
    Orient {
        graph: PathBuf,
        /// auto, 2connected, bridgeless, treefree or fallback-delta.
        #[arg(long, default_value = "auto")]
        mode: String,
        /// Use the reference orientation when the graph is out of class.
        #[arg(long)]
        fallback: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check an orientation against its graph. Exits 1 if it is not proper.
    Verify {
        graph: PathBuf,
        orientation: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exact proper orientation number, or a yes/no answer with `--k`.
    Exact {
        graph: PathBuf,
        #[arg(long)]
        k: Option<u32>,
        /// Largest edge count searched.
        #[arg(long, default_value_t = pon_core::oracle::DEFAULT_BUDGET)]
        budget: usize,
        /// Write the witness orientation here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Generate an instance.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Fan size.
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Size of a second fan on the first one's hub edge.
        #[arg(long)]
        nested: Option<usize>,
        /// Vertex budget.
        #[arg(long, default_value_t = 50)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.0)]
        fan_bias: f64,
        #[arg(long, default_value_t = 3)]
        blocks: usize,
        /// Composite gluing: bridgeless or treefree.
        #[arg(long, default_value = "bridgeless")]
        mode: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Print the class flags and the embedding of each block.
    Recognize {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Mean orientation time on random 2-connected instances.
    Bench {
        /// Comma-separated vertex budgets.
        #[arg(long, default_value = "1000,10000,100000")]
        sizes: String,
        /// Rounds over all sizes.
        #[arg(long, default_value_t = 3)]
        seeds: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GenKind {
    Tightness,
    Fan,
    Random2c,
    Composite,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Orient {
            graph,
            mode,
            fallback,
            out,
            json,
        } => commands::orient(&graph, &mode, fallback, out.as_deref(), json),
        Command::Verify {
            graph,
            orientation,
            json,
        } => commands::verify(&graph, &orientation, json),
        Command::Exact {
            graph,
            k,
            budget,
            out,
            json,
        } => commands::exact(&graph, k, budget, out.as_deref(), json),
        Command::Gen {
            kind,
            k,
            nested,
            n,
            seed,
            fan_bias,
            blocks,
            mode,
            out,
            json,
        } => commands::gen(
            &commands::GenRequest {
                kind,
                k,
                nested,
                n,
                seed,
                fan_bias,
                blocks,
                mode,
            },
            out.as_deref(),
            json,
        ),
        Command::Recognize { graph, json } => commands::recognize(&graph, json),
        Command::Bench { sizes, seeds, json } => {
            commands::parse_sizes(&sizes).and_then(|s| commands::bench(&s, seeds, json))
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("pon: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
