//! `lunebound` command-line front end.
//!
//! Exit codes: 0 success, 1 input error, 2 domain error (perimeter above the
//! cap), 3 verification failure.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lunebound::{Error, ModelSpace};

#[derive(Debug, Parser)]
#[command(name = "lunebound", version, about = "Reverse isoperimetric bounds for λ-convex curves")]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the minimal area for perimeter L as JSON.
    Bound {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long = "L", allow_negative_numbers = true)]
        length: f64,
    },
    /// Build and certify the extremal lune.
    Lune {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long = "L", allow_negative_numbers = true)]
        length: f64,
        /// Write the curve JSON here; the report still goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the randomized inequality suite (all five cases unless a space is given).
    Verify(VerifyArgs),
    /// Tabulate the bound over a perimeter grid.
    Sweep(SweepArgs),
}

/// The model plane, either by curvature `c` or by geometry and `k`.
#[derive(Debug, Clone, Args)]
pub struct SpaceArgs {
    /// Gaussian curvature of the plane.
    #[arg(long, conflicts_with = "geometry", allow_negative_numbers = true)]
    pub c: Option<f64>,
    #[arg(long, value_enum)]
    pub geometry: Option<GeometryArg>,
    /// Curvature scale: c = k² on the sphere, c = −k² in the hyperbolic plane.
    #[arg(long, requires = "geometry", allow_negative_numbers = true)]
    pub k: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GeometryArg {
    Euclidean,
    Spherical,
    Hyperbolic,
}

impl SpaceArgs {
    /// The curvature, or `None` when no space was given.
    pub fn curvature(&self) -> lunebound::Result<Option<f64>> {
        let space = match (self.c, self.geometry) {
            (Some(c), _) => ModelSpace::new(c)?,
            (None, Some(GeometryArg::Euclidean)) => {
                if self.k.is_some() {
                    return Err(Error::input("--k does not apply to the Euclidean plane"));
                }
                ModelSpace::euclidean()
            }
            (None, Some(g)) => {
                let k = self.k.unwrap_or(1.0);
                match g {
                    GeometryArg::Spherical => ModelSpace::spherical(k)?,
                    _ => ModelSpace::hyperbolic(k)?,
                }
            }
            (None, None) => return Ok(None),
        };
        Ok(Some(space.c()))
    }

    pub fn required(&self) -> lunebound::Result<f64> {
        self.curvature()?
            .ok_or_else(|| Error::input("a space is required: pass --c or --geometry"))
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also perturb the lune this many times per case.
    #[arg(long, default_value_t = 0)]
    pub perturbations: usize,
    #[arg(long, default_value_t = 1e-3)]
    pub magnitude: f64,
    /// Lune perimeter for the perturbation test (default: half the cap, or 4/λ).
    #[arg(long = "perturb-L")]
    pub perturb_length: Option<f64>,
    /// Write one JSON object per trial to this file.
    #[arg(long)]
    pub records: Option<PathBuf>,
    /// Write the summary JSON to this file as well as stdout.
    #[arg(long)]
    pub summary: Option<PathBuf>,
    /// Test hook: added to every bound value, so the suite must fail.
    #[arg(long, hide = true, default_value_t = 0.0, allow_negative_numbers = true)]
    pub bound_bias: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    /// One or more λ values (repeat the flag or separate with commas).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub lambda: Vec<f64>,
    /// Exclusive lower end of the perimeter grid.
    #[arg(long = "L-min", default_value_t = 0.0, allow_negative_numbers = true)]
    pub length_min: f64,
    /// Inclusive upper end of the perimeter grid.
    #[arg(long = "L-max", allow_negative_numbers = true)]
    pub length_max: f64,
    #[arg(long, default_value_t = 64)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failures carry their exit code.
#[derive(Debug)]
pub enum Failure {
    Lib(Error),
    Io(std::io::Error),
    /// A suite or certification ran but did not pass.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Input(_)) | Failure::Io(_) => 1,
            Failure::Lib(Error::AboveCap { .. }) => 2,
            Failure::Lib(_) | Failure::Verification(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "{e}"),
            Failure::Verification(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Bound { space, lambda, length } => commands::bound(&space, lambda, length),
        Command::Lune {
            space,
            lambda,
            length,
            out,
        } => commands::lune(&space, lambda, length, out.as_deref()),
        Command::Verify(args) => commands::verify(&args),
        Command::Sweep(args) => commands::sweep(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
