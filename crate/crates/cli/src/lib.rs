//! Command-line front end: argument grammar, reports and exit codes.

mod commands;
mod corpus;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use sing_core::polyring::{MonomialOrder, DEFAULT_PRIME};
use sing_core::Error;

pub use corpus::CORPUS;

#[derive(Parser, Debug)]
#[command(name = "sing", version, about = "Singular loci of hyperplane arrangements")]
pub struct Cli {
    /// Coefficient field: `q` for the rationals or `p:<prime>`.
    #[arg(long, global = true, default_value = "p:32003")]
    pub field: String,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Monomial order used when printing generators.
    #[arg(long, global = true, default_value = "grevlex")]
    pub order: String,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Jacobian,
    Saturation,
    Radical,
    Top,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Outputs {
    /// Print the Betti table.
    #[arg(long)]
    pub betti: bool,
    /// Print Hilbert data.
    #[arg(long)]
    pub hilbert: bool,
    /// Print dimensions and the Cohen-Macaulay verdict.
    #[arg(long)]
    pub cm: bool,
    /// Print Hartshorne-Rao dimensions.
    #[arg(long)]
    pub rao: bool,
    /// Print generators even when other outputs are requested.
    #[arg(long)]
    pub gens: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Codimension-2 flats with multiplicities.
    Lattice { file: PathBuf },
    /// The Jacobian ideal.
    Jacobian {
        file: PathBuf,
        #[command(flatten)]
        out: Outputs,
    },
    /// Intersection of the flat primes.
    Radical {
        file: PathBuf,
        #[command(flatten)]
        out: Outputs,
    },
    /// Intersection of the pencil Jacobians of the flats.
    Top {
        file: PathBuf,
        #[command(flatten)]
        out: Outputs,
    },
    /// Intersection of powers of the flat primes.
    Symbolic {
        file: PathBuf,
        /// Exponents in flat order, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "all")]
        b: Option<Vec<u32>>,
        /// One exponent for every flat.
        #[arg(long)]
        all: Option<u32>,
        /// Skip the rule check on exponents.
        #[arg(long = "override")]
        override_rules: bool,
        #[command(flatten)]
        out: Outputs,
    },
    /// Betti table of one of the ideals.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "jacobian")]
        of: Kind,
    },
    /// Hilbert series and polynomial.
    Hilbert {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "jacobian")]
        of: Kind,
    },
    /// Dimensions and Cohen-Macaulay verdict.
    Cm {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "jacobian")]
        of: Kind,
    },
    /// Hartshorne-Rao dimensions of the curve.
    Rao {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "top")]
        of: Kind,
    },
    /// Hyperplanes lying on two flats of multiplicity at least 3.
    Hypothesis { file: PathBuf },
    /// Graphic arrangement of a graph, as an arrangement file.
    Graphic {
        file: PathBuf,
        /// Restrict to a general P^3.
        #[arg(long)]
        section: bool,
    },
    /// Edges shared by two triangles.
    Triangles { file: PathBuf },
    /// Restriction to a general P^3, as an arrangement file.
    Section { file: PathBuf },
    /// Liaison addition of two arrangements.
    LiaisonAdd {
        first: PathBuf,
        second: PathBuf,
        /// Work with the radical instead of the top-dimensional part.
        #[arg(long)]
        radical: bool,
        #[arg(long)]
        verify: bool,
    },
    /// Basic double links by general planes.
    Bdl {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        planes: usize,
        #[arg(long)]
        radical: bool,
        #[arg(long)]
        verify: bool,
    },
    /// Arrangement whose top-dimensional curve has an `r`-dimensional Rao module.
    ConstructLr {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        h: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Arrangement whose radical curve has an `r`-dimensional Rao module.
    ConstructLrRadical {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        h: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Run the regression corpus.
    Corpus {
        #[arg(long, default_value = "corpus")]
        dir: PathBuf,
        /// Only entries whose name contains this string.
        #[arg(long)]
        only: Option<String>,
        /// Include the stretch entries.
        #[arg(long)]
        stretch: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rationals,
    Prime(u32),
}

impl FieldChoice {
    pub fn parse(s: &str) -> Result<FieldChoice, Error> {
        match s {
            "q" | "Q" => Ok(FieldChoice::Rationals),
            _ => {
                let p = s
                    .strip_prefix("p:")
                    .and_then(|p| p.parse().ok())
                    .ok_or_else(|| Error::Validation(format!("field must be `q` or `p:<prime>`, got `{s}`")))?;
                sing_core::polyring::PrimeField::new(p)?;
                Ok(FieldChoice::Prime(p))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            FieldChoice::Rationals => "q".into(),
            FieldChoice::Prime(p) => format!("p:{p}"),
        }
    }
}

impl Default for FieldChoice {
    fn default() -> Self {
        FieldChoice::Prime(DEFAULT_PRIME)
    }
}

pub struct Ctx {
    pub field: FieldChoice,
    pub seed: u64,
    pub order: MonomialOrder,
}

/// Result of one command. `data` carries the requested artifacts.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub schema: u32,
    pub command: Vec<String>,
    pub field: String,
    pub seed: u64,
    pub elapsed_ms: u64,
    #[serde(flatten)]
    pub data: Map<String, Value>,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn set(&mut self, key: &str, v: impl Serialize) {
        self.data.insert(key.into(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

pub enum Failure {
    Core(Error),
    Mismatch(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Core(e) if e.is_limit() => 2,
            _ => 1,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Mismatch(m) => format!("verification failed: {m}"),
            Failure::Io(m) => m.clone(),
        }
    }
}

/// Run one command line. Exit code 0 on success, 1 on validation errors and failed
/// checks, 2 when an internal limit is reached.
pub fn execute<S: AsRef<str>>(argv: &[S]) -> (i32, Report) {
    let args: Vec<String> = argv.iter().map(|s| s.as_ref().to_string()).collect();
    let mut report = Report { schema: 1, command: args.iter().skip(1).cloned().collect(), ..Default::default() };
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) { 0 } else { 1 };
            report.text = e.to_string();
            report.set("error", e.kind().to_string());
            return (code, report);
        }
    };
    report.seed = cli.seed;
    let start = Instant::now();
    let result = FieldChoice::parse(&cli.field).map_err(Failure::from).and_then(|field| {
        report.field = field.name();
        let order = MonomialOrder::parse(&cli.order)?;
        let ctx = Ctx { field, seed: cli.seed, order };
        commands::run(&ctx, &cli.command, &mut report)
    });
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    match result {
        Ok(()) => {
            if report.data.get("ok") == Some(&Value::Bool(false)) {
                (1, report)
            } else {
                (0, report)
            }
        }
        Err(f) => {
            let msg = f.message();
            report.set("error", &msg);
            report.line(format!("error: {msg}"));
            (f.code(), report)
        }
    }
}

/// Whether the parsed command line asks for JSON.
pub fn wants_json<S: AsRef<str>>(argv: &[S]) -> bool {
    argv.iter().any(|a| a.as_ref() == "--json")
}
