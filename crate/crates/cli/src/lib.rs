//! Command-line front end for `irrmeasure`.
//!
//! Every subcommand takes its parameters either as flags or, one instance per
//! line, from a JSON-lines file given with `--input`. Results are written as
//! JSON lines (or tables) in input order; diagnostics go to the error stream as
//! JSON lines.

mod commands;
mod params;
mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use irrmeasure::numerics::{DEFAULT_PRECISION, PRECISION_CAP};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::params::Params;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(name = "irrmeasure", version, about = "Certified effective irrationality-measure bounds for n-th roots of rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Working precision in bits.
    #[arg(long, global = true, env = "IRRMEASURE_PRECISION", default_value_t = DEFAULT_PRECISION,
          value_parser = clap::value_parser!(u32).range(64..=PRECISION_CAP as i64))]
    precision: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for batch input (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=1024))]
    jobs: Option<u32>,

    /// Include the full hypothesis table in every report.
    #[arg(long, global = true)]
    ledger: bool,

    /// JSON-lines file with one instance per line, instead of inline flags.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
}

macro_rules! params {
    ($name:ident { $($field:ident : $help:literal),* $(,)? }) => {
        #[derive(clap::Args, Debug, Default)]
        pub struct $name {
            $(
                #[arg(long, help = $help)]
                pub $field: Option<String>,
            )*
        }

        impl $name {
            fn pairs(&self) -> Vec<(&'static str, Option<String>)> {
                vec![$((stringify!($field), self.$field.clone()),)*]
            }
        }
    };
}

params!(RealArgs {
    a: "numerator a >= 1",
    b: "denominator b >= 1",
    n: "root degree n",
});
params!(PadicArgs {
    a: "numerator a",
    b: "denominator b",
    p: "prime p dividing a - b",
    n: "root degree n",
});
params!(HenselArgs {
    a: "numerator a",
    b: "denominator b",
    p: "prime p",
    n: "root degree n, prime to p",
    k: "number of p-adic digits",
});
params!(ArchArgs {
    a1: "numerator of alpha_1",
    a2: "denominator of alpha_1",
    b1: "numerator of alpha_2",
    b2: "denominator of alpha_2",
    u: "coefficient u",
    v: "coefficient v",
    height_a: "height A (rational, or e); default max{a1, e}",
    height_b: "height B (rational, or e); default max{b1, e}",
});
params!(BuArgs {
    x1: "numerator of alpha_1",
    y1: "denominator of alpha_1",
    x2: "numerator of alpha_2",
    y2: "denominator of alpha_2",
    b: "exponent b",
    p: "prime p",
    e: "parameter E (rational)",
    height_1: "explicit A_1 (rational); default minimal",
    height_2: "explicit A_2 (rational); default minimal",
});
params!(CfArgs {
    a: "numerator a",
    b: "denominator b",
    n: "root degree n >= 2",
    count: "number of partial quotients (default 20)",
});
params!(PadicVerifyArgs {
    a: "numerator a",
    b: "denominator b",
    p: "prime p",
    n: "root degree n",
    max_height: "height cap H >= 2",
});
params!(TmArgs {
    b: "b >= 2",
    c: "c >= 1",
    d: "nonzero d",
    n: "exponent n >= 3",
    primes: "comma-separated distinct primes",
    eta: "eta (rational)",
    limit_x: "search box |x|, |y| <= X",
    limit_z: "cap on each exponent z_j (default automatic)",
});

#[derive(Subcommand, Debug)]
enum Command {
    /// Bounds for the real root (a/b)^(1/n).
    MeasureReal(RealArgs),
    /// Bounds for the p-adic root of b X^n - a congruent to 1 mod p.
    MeasurePadic(PadicArgs),
    /// The p-adic root of b X^n - a modulo p^k.
    Hensel(HenselArgs),
    /// Lower bounds for |u log alpha_1 - v log alpha_2|.
    LinformArch(ArchArgs),
    /// Upper bound for v_p(alpha_1^b - alpha_2).
    LinformPadic(BuArgs),
    /// Certified continued fraction and empirical exponents of (a/b)^(1/n).
    CfVerify(CfArgs),
    /// Exhaustive scan of p-adic approximations up to a height.
    PadicVerify(PadicVerifyArgs),
    /// Hypotheses of the Thue-Mahler family theorem.
    TmCheck(TmArgs),
    /// Exhaustive solution search for the Thue-Mahler family.
    TmSearch(TmArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::MeasureReal(_) => "measure-real",
            Command::MeasurePadic(_) => "measure-padic",
            Command::Hensel(_) => "hensel",
            Command::LinformArch(_) => "linform-arch",
            Command::LinformPadic(_) => "linform-padic",
            Command::CfVerify(_) => "cf-verify",
            Command::PadicVerify(_) => "padic-verify",
            Command::TmCheck(_) => "tm-check",
            Command::TmSearch(_) => "tm-search",
        }
    }

    fn pairs(&self) -> Vec<(&'static str, Option<String>)> {
        match self {
            Command::MeasureReal(x) => x.pairs(),
            Command::MeasurePadic(x) => x.pairs(),
            Command::Hensel(x) => x.pairs(),
            Command::LinformArch(x) => x.pairs(),
            Command::LinformPadic(x) => x.pairs(),
            Command::CfVerify(x) => x.pairs(),
            Command::PadicVerify(x) => x.pairs(),
            Command::TmCheck(x) | Command::TmSearch(x) => x.pairs(),
        }
    }
}

/// Exit status, ordered by precedence when a batch mixes outcomes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Inapplicable = 2,
    Indeterminate = 3,
    Usage = 1,
}

impl Status {
    fn rank(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Inapplicable => 1,
            Status::Indeterminate => 2,
            Status::Usage => 3,
        }
    }

    fn worst(self, o: Status) -> Status {
        if o.rank() > self.rank() {
            o
        } else {
            self
        }
    }
}

pub(crate) struct Settings {
    pub precision: u32,
    pub ledger: bool,
}

/// A finished record: the JSON result, its table rendering and its status.
pub(crate) struct Outcome {
    pub result: Value,
    pub table: String,
    pub status: Status,
}

pub(crate) struct Failure {
    pub kind: &'static str,
    pub message: String,
    pub status: Status,
}

impl From<irrmeasure::Error> for Failure {
    fn from(e: irrmeasure::Error) -> Self {
        use irrmeasure::Error as E;
        let (kind, status) = match &e {
            E::InvalidInput(_) => ("invalid-input", Status::Usage),
            E::Inapplicable(_) => ("inapplicable", Status::Inapplicable),
            E::Unresolved(_) | E::UndecidableAtCap { .. } => ("undecidable-at-cap", Status::Indeterminate),
            E::SizeCap(_) => ("size-cap", Status::Usage),
        };
        Failure {
            kind,
            message: e.to_string(),
            status,
        }
    }
}

fn header(command: &str, precision: u32, line: usize) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("tool".into(), json!("irrmeasure"));
    m.insert("version".into(), json!(VERSION));
    m.insert("precision".into(), json!(precision.to_string()));
    m.insert("command".into(), json!(command));
    m.insert("line".into(), json!(line.to_string()));
    m
}

fn diagnostic(err: &mut dyn Write, command: &str, precision: u32, line: Option<usize>, kind: &str, message: &str) {
    let mut m = match line {
        Some(l) => header(command, precision, l),
        None => {
            let mut m = header(command, precision, 0);
            m.remove("line");
            m
        }
    };
    m.insert("error".into(), json!(kind));
    m.insert("message".into(), json!(message));
    let _ = writeln!(err, "{}", Value::Object(m));
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let _ = write!(err, "{}", e.render());
            return Status::Usage as i32;
        }
    };
    let name = cli.command.name();
    let prec = cli.precision;

    let inputs: Vec<std::result::Result<Params, String>> = match params::collect(&cli.command.pairs(), cli.input.as_deref()) {
        Ok(v) => v,
        Err(msg) => {
            diagnostic(err, name, prec, None, "usage", &msg);
            return Status::Usage as i32;
        }
    };

    let settings = Settings {
        precision: prec,
        ledger: cli.ledger,
    };
    let work = |p: &std::result::Result<Params, String>| -> std::result::Result<Outcome, Failure> {
        match p {
            Ok(p) => commands::execute(&cli.command, p, &settings),
            Err(m) => Err(Failure {
                kind: "invalid-input",
                message: m.clone(),
                status: Status::Usage,
            }),
        }
    };
    let threads = cli.jobs.map(|j| j as usize).unwrap_or(0);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => {
            diagnostic(err, name, prec, None, "usage", &e.to_string());
            return Status::Usage as i32;
        }
    };
    let results: Vec<std::result::Result<Outcome, Failure>> = pool.install(|| inputs.par_iter().map(work).collect());

    let mut status = Status::Ok;
    for (i, (input, r)) in inputs.iter().zip(results).enumerate() {
        let line = i + 1;
        match r {
            Ok(o) => {
                status = status.worst(o.status);
                match cli.format {
                    Format::Json => {
                        let mut m = header(name, prec, line);
                        if let Ok(p) = input {
                            m.insert("input".into(), params::to_json(p));
                        }
                        m.insert("status".into(), json!(render::status_name(o.status)));
                        m.insert("result".into(), o.result);
                        let _ = writeln!(out, "{}", Value::Object(m));
                    }
                    Format::Table => {
                        let desc = input.as_ref().map(params::describe).unwrap_or_default();
                        let _ = writeln!(out, "# {name} [{line}] {desc} (precision {prec}, version {VERSION})");
                        let _ = write!(out, "{}", o.table);
                        let _ = writeln!(out);
                    }
                }
            }
            Err(f) => {
                status = status.worst(f.status);
                diagnostic(err, name, prec, Some(line), f.kind, &f.message);
            }
        }
    }
    status as i32
}
