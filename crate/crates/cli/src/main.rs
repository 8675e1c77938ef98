mod commands;
mod report;
mod svg;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use loctrop_core::tropical::OriginSemantics;

#[derive(Parser, Debug)]
#[command(name = "loctrop", version, about = "Local tropical varieties of ideals in formal power series rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Treatment of the origin stratum. Defaults to `definition` for the
    /// principal path and `monomial-test` for the Groebner path.
    #[arg(long, global = true, value_enum)]
    pub origin: Option<Origin>,

    /// Degree bound for the monomial search in initial ideals.
    #[arg(long, global = true, default_value_t = 40)]
    pub bound: u32,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for sharded checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    /// Exit with status 2 when some monomial verdict is unknown.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stratum staircases and surrogate polynomials of a series.
    Staircase {
        input: PathBuf,
        /// Zero coordinates of the stratum, 1-based and comma separated; `0`
        /// selects the open orthant. All strata when omitted.
        #[arg(long)]
        stratum: Option<String>,
    },
    /// Initial form of a series, or initial ideal of several generators.
    Initial {
        input: PathBuf,
        /// Weight vector, e.g. `1,2` or `1/2,1`.
        #[arg(short = 'w', long = "weight", allow_hyphen_values = true)]
        weight: String,
    },
    /// Local tropical hypersurface of a series.
    Trophyp { input: PathBuf },
    /// Local tropical variety.
    Tropvar {
        input: PathBuf,
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Intersection of the generators' local tropical hypersurfaces.
    Prevariety { input: PathBuf },
    /// Standard basis for the local order given by a weight.
    Stdbasis {
        input: PathBuf,
        #[arg(short = 'w', long = "weight", allow_hyphen_values = true)]
        weight: String,
    },
    /// Local Groebner fan with per-cone initial ideals and verdicts.
    Lgf { input: PathBuf },
    /// Finite set of ideal elements cutting out the local tropical variety.
    Tropbasis { input: PathBuf },
    /// Cross-checks against independent oracles.
    Verify {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Random instances or grid samples per check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Writes an SVG picture of a two-variable local tropical variety.
    Plot {
        input: PathBuf,
        #[arg(short = 'o', long)]
        output: PathBuf,
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Origin {
    Definition,
    MonomialTest,
}

impl From<Origin> for OriginSemantics {
    fn from(o: Origin) -> Self {
        match o {
            Origin::Definition => OriginSemantics::Definition,
            Origin::MonomialTest => OriginSemantics::MonomialTest,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Principal,
    Groebner,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Staircase,
    Grid,
    Newton,
    Twin,
    All,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            if let Err(e) = out.emit(cli.format) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            if cli.strict && out.unknown {
                eprintln!("error: some monomial verdicts are unknown (--strict)");
                return ExitCode::from(2);
            }
            if out.failed {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
