use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "relce", version)]
#[command(about = "Rightmost-path witnesses and 1-generic coding on finite strings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rightmost path of a finite tree with its enumeration witness.
    Rightmost {
        /// Tree JSON: explicit nodes or a generator spec.
        #[arg(long)]
        tree: PathBuf,
        /// Override the generator seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Include the stage trace.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Add position p to sigma without changing its j-code.
    Fixpoint {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build a danger-set certificate above level l.
    Demo3 {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        l: usize,
        /// Operator JSON.
        #[arg(long)]
        op: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Finite-extension forcing against a requirement list.
    Force {
        /// JSON array of requirements.
        #[arg(long)]
        requirements: PathBuf,
        /// Length bound for extensions and the padded result.
        #[arg(long)]
        t: usize,
        #[arg(long)]
        scan_cap: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Re-check a report, a witness set, or avoidance of a danger set.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Report emitted by rightmost, fixpoint, demo3 or force.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Tree input for a rightmost report.
    #[arg(long)]
    pub tree: Option<PathBuf>,
    /// Generator seed override matching the original rightmost run.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Operator JSON for a certificate or an avoidance check.
    #[arg(long)]
    pub op: Option<PathBuf>,
    /// Requirements JSON for a force report.
    #[arg(long)]
    pub requirements: Option<PathBuf>,
    /// Witness operator JSON, checked against --x.
    #[arg(long)]
    pub witness: Option<PathBuf>,
    #[arg(long)]
    pub x: Option<String>,
    /// Base string for an avoidance check.
    #[arg(long)]
    pub sigma: Option<String>,
    #[arg(long)]
    pub l: Option<usize>,
    /// Length bound for an avoidance check (default |sigma|).
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub scan_cap: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Rightmost { output, .. }
            | Command::Fixpoint { output, .. }
            | Command::Demo3 { output, .. }
            | Command::Force { output, .. } => output,
            Command::Verify(v) => &v.output,
        }
    }
}
