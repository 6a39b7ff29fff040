//! Command-line front end: argument parsing into a validated [`CommandPlan`]
//! and its execution.

mod args;
mod exec;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Duration;

use clap::Parser;
use thiserror::Error;

use purple_ramsey::catalog::{CatalogError, ENUMERATION_LIMIT};
use purple_ramsey::colouring::ColouringError;
use purple_ramsey::constructions::{sublinear_params, CanonicalBlowupParams, ConstructionError, TFP_MAX_VERTICES};
use purple_ramsey::graph::GraphError;
use purple_ramsey::search::{SearchError, ORACLE_LIMIT};

pub use args::{
    BaseGraph, CatalogArgs, CatalogCommand, Cli, ColourCommand, ColourOut, Command, GenCommand, GraphOut, KindArg,
    SearchArgs,
};
pub use exec::execute;

pub const CATALOG_DIR_ENV: &str = "PURPLE_RAMSEY_CATALOG_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DEADLINE: i32 = 3;
pub const EXIT_EMPTY_CATALOG: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Clap(#[from] clap::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("{0}")]
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Clap(e) => e.exit_code(),
            CliError::Io { .. } => EXIT_ERROR,
            CliError::Search(SearchError::EmptyCatalog) => EXIT_EMPTY_CATALOG,
            _ => EXIT_INVALID,
        }
    }
}

/// Where a search reads its graphs from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogSource {
    Enumerate,
    File(PathBuf),
}

/// A parsed command line whose parameters satisfy the preconditions of the
/// operation it names.
#[derive(Clone, Debug)]
pub struct CommandPlan {
    pub command: Command,
    pub threads: usize,
    pub deadline: Option<Duration>,
    pub json: bool,
    /// Resolved catalog for `gm`, `g` and `catalog` subcommands.
    pub source: Option<CatalogSource>,
}

/// Parses and validates `argv` (program name first), taking the default
/// catalog directory from the environment.
pub fn parse_args<I, T>(argv: I) -> Result<CommandPlan, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    parse_args_with(argv, std::env::var_os(CATALOG_DIR_ENV).map(PathBuf::from))
}

pub fn parse_args_with<I, T>(argv: I, catalog_dir: Option<PathBuf>) -> Result<CommandPlan, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    if cli.threads == 0 {
        return Err(usage("--threads must be at least 1"));
    }
    let deadline = match cli.deadline {
        Some(d) if !(d.is_finite() && d > 0.0) => return Err(usage("--deadline must be a positive number of seconds")),
        Some(d) => Some(Duration::from_secs_f64(d)),
        None => None,
    };
    let source = validate(&cli.command, catalog_dir)?;
    if let Command::Gm(a) | Command::G(a) = &cli.command {
        if a.csv && cli.json {
            return Err(usage("--csv and --json are mutually exclusive"));
        }
    }
    Ok(CommandPlan {
        command: cli.command,
        threads: cli.threads,
        deadline,
        json: cli.json,
        source,
    })
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_p(flag: &str, p: f64) -> Result<(), CliError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(usage(format!("{flag} must lie in [0, 1], got {p}")))
    }
}

fn default_catalog(dir: Option<PathBuf>, n: usize, s: usize, t: usize) -> Result<PathBuf, CliError> {
    match dir {
        Some(d) => Ok(d.join(format!("ramsey_{s}_{t}_{n}.g6"))),
        None => Err(usage(format!(
            "no catalog given: pass --enumerate, --catalog <file> or set {CATALOG_DIR_ENV}"
        ))),
    }
}

fn validate(cmd: &Command, catalog_dir: Option<PathBuf>) -> Result<Option<CatalogSource>, CliError> {
    match cmd {
        Command::Gen(g) => match g {
            GenCommand::Turan { r, .. } if *r == 0 => Err(usage("--r must be at least 1")),
            GenCommand::Andrasfai { k, .. } if *k < 2 => Err(usage("--k must be at least 2")),
            GenCommand::Circulant { modulus, .. } if *modulus == 0 => Err(usage("--modulus must be positive")),
            GenCommand::Canonical { n, k, t, .. } => canonical(*n, *k, *t),
            _ => Ok(None),
        },
        Command::Colour(c) => {
            match c {
                ColourCommand::Canonical { n, k, t, .. } => {
                    canonical(*n, *k, *t)?;
                }
                ColourCommand::StrongProduct { ell, .. } if *ell == 0 => return Err(usage("--ell must be at least 1")),
                ColourCommand::Sprinkle { ell, p, .. } => {
                    if *ell < 2 {
                        return Err(usage("--ell must be at least 2"));
                    }
                    if let Some(p) = p {
                        check_p("--p", *p)?;
                    }
                }
                ColourCommand::Subsample { p, .. } => check_p("--p", *p)?,
                ColourCommand::Tfp { n, gamma, eps, .. } => {
                    sublinear_params(*n, *gamma, *eps).map_err(|e| usage(e.to_string()))?;
                }
                ColourCommand::TfpTwoPhase { n, eps, eps2, .. } => {
                    if *n == 0 || *n > TFP_MAX_VERTICES {
                        return Err(usage(format!("--n must lie in 1..={TFP_MAX_VERTICES}")));
                    }
                    let eps1 = eps * eps / 100.0;
                    if !(*eps > 0.0 && *eps < 1.0 / (2.0 * std::f64::consts::SQRT_2)) {
                        return Err(usage(format!("--eps must lie in (0, 1/(2√2)), got {eps}")));
                    }
                    if !(*eps2 > 0.0 && *eps2 < eps1) {
                        return Err(usage(format!("--eps2 must lie in (0, eps^2/100 = {eps1}), got {eps2}")));
                    }
                }
                _ => {}
            }
            Ok(None)
        }
        Command::Verify { .. } => Ok(None),
        Command::Gm(a) | Command::G(a) => {
            let source = if a.enumerate {
                if a.n > ENUMERATION_LIMIT {
                    return Err(usage(format!(
                        "--enumerate supports n <= {ENUMERATION_LIMIT}; pass a graph6 list with --catalog"
                    )));
                }
                CatalogSource::Enumerate
            } else if let Some(p) = &a.catalog {
                CatalogSource::File(p.clone())
            } else {
                CatalogSource::File(default_catalog(catalog_dir, a.n, a.s, a.t)?)
            };
            if a.complete && source == CatalogSource::Enumerate {
                return Err(usage("--complete only applies to ingested catalogs"));
            }
            Ok(Some(source))
        }
        Command::Enum { n, .. } => {
            if *n > ENUMERATION_LIMIT {
                return Err(usage(format!("--n must be at most {ENUMERATION_LIMIT} for enumeration")));
            }
            Ok(None)
        }
        Command::Catalog(c) => {
            let a = match c {
                CatalogCommand::Validate(a) => a,
                CatalogCommand::Manifest { catalog, .. } => catalog,
            };
            let path = match &a.path {
                Some(p) => p.clone(),
                None => default_catalog(catalog_dir, a.n, a.s, a.t)?,
            };
            Ok(Some(CatalogSource::File(path)))
        }
        Command::Oracle { n, .. } => {
            if *n > ORACLE_LIMIT {
                return Err(usage(format!("--n must be at most {ORACLE_LIMIT} for the oracle")));
            }
            Ok(None)
        }
    }
}

fn canonical(n: usize, k: usize, t: usize) -> Result<Option<CatalogSource>, CliError> {
    CanonicalBlowupParams::new(n, k, t).map_err(|e| usage(e.to_string()))?;
    Ok(None)
}
