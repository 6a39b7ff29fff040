use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone)]
#[command(
    name = "purple-ramsey",
    version,
    about = "Constructs, verifies and searches red/blue/purple colourings of complete graphs",
    after_help = "EXAMPLES:\n\
                  \n  purple-ramsey gm --n 8 --s 3 --t 4 --enumerate\
                  \n  purple-ramsey g --n 17 --s 3 --t 6 --catalog r36_17.g6 --complete --json\
                  \n  purple-ramsey colour canonical --n 10 --k 2 --t 4 -o out.pc\
                  \n  purple-ramsey verify out.pc --s 3 --t 5\
                  \n  purple-ramsey colour tfp-two-phase --n 200 --eps 0.3 --eps2 0.0005 --seed 7\
                  \n\nCatalogs default to $PURPLE_RAMSEY_CATALOG_DIR/ramsey_<s>_<t>_<n>.g6."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads for catalog searches
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Wall-clock limit in seconds for searches; expiry makes the value a lower bound
    #[arg(long, global = true)]
    pub deadline: Option<f64>,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Generate a graph (graph6 output)
    #[command(subcommand)]
    Gen(GenCommand),
    /// Build a purple colouring (colouring file v1 output, JSON report)
    #[command(subcommand)]
    Colour(ColourCommand),
    /// Check a colouring file for (s,t)-freeness and print its statistics
    Verify {
        /// Colouring file (v1)
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// g_M(n;s,t): largest purple matching over a catalog of Ramsey graphs
    Gm(SearchArgs),
    /// g(n;s,t): largest purple edge set over a catalog of Ramsey graphs
    G(SearchArgs),
    /// Enumerate all graphs with ω < s and α < t on n vertices
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Keep every labelled graph instead of one per isomorphism class
        #[arg(long)]
        no_dedup: bool,
        /// Write the list as graph6
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Inspect graph6 catalogs
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Exhaustive reference values for n <= 7
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Both)]
        kind: KindArg,
        /// Also search the enumerated catalog and fail on disagreement
        #[arg(long)]
        check: bool,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum GenCommand {
    /// Turán graph T(n, r)
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        out: GraphOut,
    },
    /// Andrásfai graph Γ_k on 3k-1 vertices
    Andrasfai {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: GraphOut,
    },
    /// Circulant graph on Z_m
    Circulant {
        #[arg(long)]
        modulus: usize,
        /// Connection set, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        residues: Vec<usize>,
        #[command(flatten)]
        out: GraphOut,
    },
    /// Canonical blow-up Γ(n;k,t)
    Canonical {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: GraphOut,
    },
}

#[derive(Args, Debug, Clone)]
pub struct GraphOut {
    /// Write graph6 here instead of stdout
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct BaseGraph {
    /// Base graph as a graph6 string
    #[arg(long)]
    pub base_g6: Option<String>,
    /// File whose first graph6 record is the base graph
    #[arg(long)]
    pub base_file: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum ColourCommand {
    /// n-blow-up colouring of a base graph
    Blowup {
        #[command(flatten)]
        base: BaseGraph,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: ColourOut,
    },
    /// Blow-up colouring on the canonical blow-up Γ(n;k,t)
    Canonical {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: ColourOut,
    },
    /// ℓ copies of a colouring joined by the strong-product rule
    StrongProduct {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        ell: usize,
        #[command(flatten)]
        out: ColourOut,
    },
    /// One K4-free core and ℓ-2 triangle-free cores with random red cross pairs
    Sprinkle {
        #[arg(long)]
        core4: PathBuf,
        #[arg(long)]
        core3: PathBuf,
        #[arg(long)]
        ell: usize,
        /// Cross-pair red probability (default N^{-1/2})
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: ColourOut,
    },
    /// Purple edges sampled from a graph with probability p
    Subsample {
        #[command(flatten)]
        base: BaseGraph,
        #[arg(long, default_value_t = purple_ramsey::constructions::DEFAULT_SUBSAMPLE_P)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: ColourOut,
    },
    /// n-blow-up colouring of a triangle-free process graph on k ≈ n/ζ² vertices
    Tfp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: ColourOut,
    },
    /// Triangle-free process: first m*(ε²/100) edges red, up to m*(ε₂) purple
    TfpTwoPhase {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        eps2: f64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: ColourOut,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ColourOut {
    /// Write the colouring file here
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub t: usize,
    /// Build the catalog by exhaustive enumeration (small n only)
    #[arg(long, conflicts_with = "catalog")]
    pub enumerate: bool,
    /// graph6 catalog file
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    /// Treat the ingested catalog as the complete list
    #[arg(long)]
    pub complete: bool,
    /// Disable the edge-count prunings
    #[arg(long)]
    pub no_prune: bool,
    /// Write the witness colouring (R = G - P) as a colouring file
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    /// Print a CSV row (s, t, n, g_M, g, provenance)
    #[arg(long)]
    pub csv: bool,
    /// Include runtime_ms in the report
    #[arg(long)]
    pub timing: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum CatalogCommand {
    /// Decode and check every member (ω < s, α < t, n vertices, no repeats)
    Validate(CatalogArgs),
    /// Print the manifest (count, checksum, provenance)
    Manifest {
        #[command(flatten)]
        catalog: CatalogArgs,
        /// Skip the ω/α checks
        #[arg(long)]
        no_validate: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CatalogArgs {
    /// graph6 catalog file (default: from PURPLE_RAMSEY_CATALOG_DIR)
    pub path: Option<PathBuf>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub t: usize,
    /// Record the list as complete in the manifest
    #[arg(long)]
    pub complete: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindArg {
    Matching,
    General,
    Both,
}
