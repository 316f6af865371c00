use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "ripcert",
    version,
    about = "Construct compressed-sensing matrices and certify their restricted isometry property"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a matrix and write it in the matrix file format.
    #[command(subcommand)]
    Construct(Construct),
    /// Compute restricted isometry certificates for a matrix file.
    Certify(CertifyArgs),
    /// Graph analyses of a real equiangular tight frame or a Paley graph.
    Graph(GraphArgs),
    /// Seeded Monte Carlo sweeps.
    #[command(subcommand)]
    Mc(Mc),
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Equiangular tight frame from a (2, k, v) Steiner system.
    Steiner {
        #[arg(long)]
        v: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// `sylvester`, `dft`, or `auto` (Sylvester when the order is a power of two).
        #[arg(long, default_value = "auto")]
        hadamard: String,
        /// Read the Steiner system from a block-list file instead.
        #[arg(long)]
        blocks: Option<PathBuf>,
        /// Also write the Steiner system used.
        #[arg(long)]
        blocks_out: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The (p+1)/2 x (p+1) Paley frame.
    Paley {
        #[arg(long)]
        p: u64,
        /// Accept primes that are 3 mod 4 (the Gram is then complex).
        #[arg(long)]
        any_prime: bool,
        /// Write a real frame with the same Gram matrix.
        #[arg(long)]
        real: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Entries N(0, 1/M).
    Gaussian(RandomArgs),
    /// Entries +-1/sqrt(M).
    Bernoulli(RandomArgs),
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// Matrix file.
    pub input: PathBuf,
    #[arg(long)]
    pub gershgorin: bool,
    #[arg(long, value_name = "K", value_delimiter = ',')]
    pub exact_ric: Vec<usize>,
    /// `--power K q1,q2,...`; repeatable.
    #[arg(long, num_args = 2, value_names = ["K", "QS"], action = clap::ArgAction::Append)]
    pub power: Vec<String>,
    #[arg(long, value_name = "K", value_delimiter = ',')]
    pub roc: Vec<usize>,
    #[arg(long, value_name = "K", value_delimiter = ',')]
    pub fro: Vec<usize>,
    #[arg(long, value_name = "CAP")]
    pub spark: Option<usize>,
    /// Relative singular-value threshold for dependence.
    #[arg(long, default_value_t = 1e-9)]
    pub spark_tol: f64,
    /// Derive the bound chains from the computed constants.
    #[arg(long)]
    pub bounds: bool,
    #[arg(long)]
    pub budget: Option<u128>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Matrix file holding an equiangular tight frame.
    #[arg(conflicts_with_all = ["paley_graph", "graph"])]
    pub input: Option<PathBuf>,
    #[arg(long, value_name = "P", conflicts_with = "graph")]
    pub paley_graph: Option<u64>,
    /// Adjacency-list file.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// Include the Seidel matrix of the flipped frame.
    #[arg(long)]
    pub seidel: bool,
    /// Flip relative to this column (default: the last).
    #[arg(long, value_name = "ANCHOR")]
    pub canonicalize: Option<usize>,
    #[arg(long)]
    pub srg_check: bool,
    #[arg(long)]
    pub predicted_srg: bool,
    #[arg(long)]
    pub clique: bool,
    #[arg(long, default_value_t = ripcert::graphs::CLIQUE_BUDGET)]
    pub clique_budget: u64,
    /// Check `delta_K = (K - 1) mu` for K = 2..omega+1.
    #[arg(long)]
    pub identity: bool,
    /// Number of random vertex-set pairs for the expander mixing check.
    #[arg(long, value_name = "TRIALS")]
    pub mixing: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// `--trace-expansion i,j,k,... q`
    #[arg(long, num_args = 2, value_names = ["KSET", "Q"])]
    pub trace_expansion: Vec<String>,
    /// Compare flat restricted orthogonality with its edge-count form up to K.
    #[arg(long, value_name = "K")]
    pub fro_edges: Option<usize>,
    #[arg(long)]
    pub budget: Option<u128>,
    /// Write the analysed graph as an adjacency list.
    #[arg(long, value_name = "FILE")]
    pub graph_out: Option<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Mc {
    /// Flat restricted orthogonality success frequency across M.
    Fro(SweepArgs),
    /// Power-method certificate success frequency across M.
    Power(SweepArgs),
    /// Tail of a sum of products of Gaussians.
    Tail(TailArgs),
    /// Tail of delta_1 for Gaussian matrices.
    Delta1Tail(Delta1TailArgs),
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub m: Vec<usize>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub delta: f64,
    #[arg(long)]
    pub trials: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value = "gaussian")]
    pub ensemble: String,
    #[arg(long)]
    pub budget: Option<u128>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TailArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub m: Vec<usize>,
    #[arg(long)]
    pub k1: usize,
    #[arg(long)]
    pub k2: usize,
    #[arg(long)]
    pub trials: usize,
    #[arg(long)]
    pub seed: u64,
    /// Thresholds on theta_hat (default 0, 0.1, ..., 1.5).
    #[arg(long, value_delimiter = ',')]
    pub grid: Vec<f64>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Delta1TailArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub m: Vec<usize>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub trials: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_delimiter = ',')]
    pub grid: Vec<f64>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}
