//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed (or output could not be written),
//! 2 no preimage within the requested bound, 64 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::presgen::{build_presentation, emit, reduce_plucker, Format};
use crate::verify::{dim_table, find_preimage, run_suite, Caps};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_BOUND: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "slnpres", version, about = "Generators and relations for the coordinate ring of SL_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    CanonicalJson,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the presentation for SL_n.
    Emit {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::CanonicalJson)]
        format: FormatArg,
        /// Replace each Plücker family by a row-reduced basis.
        #[arg(long)]
        reduce: bool,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification checks and print one JSON report per line.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        /// Comma-separated check names; all checks when absent.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        /// Degree bound for the surjectivity search.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        bound: u32,
        /// Largest total exponent for the invariant-product check.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        maxdeg: u32,
        /// Largest n for which checks run.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(2..))]
        max_n: u32,
        /// Allow the n = 3 elimination.
        #[arg(long)]
        allow_expensive: bool,
        /// Add elapsed milliseconds to each report (output is then not reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Print dimension counts for every degree-2 component.
    Dims {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
    },
    /// Find a polynomial in the generators mapping to one matrix entry.
    Preimage {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        /// Matrix entry as `i,j`.
        #[arg(long, value_parser = parse_entry)]
        entry: (usize, usize),
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
}

fn parse_entry(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `i,j`, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad index `{t}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err((code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

type CmdResult = Result<i32, (i32, String)>;

fn internal(e: impl std::fmt::Display) -> (i32, String) {
    (EXIT_FAILURE, e.to_string())
}

fn io(e: std::io::Error) -> (i32, String) {
    (EXIT_FAILURE, e.to_string())
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Emit { n, format, reduce, out: path } => {
            let mut pres = build_presentation(n as usize).map_err(internal)?;
            if reduce {
                pres = reduce_plucker(&pres);
            }
            let fmt = match format {
                FormatArg::CanonicalJson => Format::CanonicalJson,
                FormatArg::Text => Format::Text,
            };
            let bytes = emit(&pres, fmt);
            match path {
                Some(p) => std::fs::write(&p, bytes).map_err(|e| (EXIT_FAILURE, format!("cannot write {}: {e}", p.display())))?,
                None => out.write_all(&bytes).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { n, checks, bound, maxdeg, max_n, allow_expensive, timing } => {
            let caps = Caps { max_n: max_n as usize, allow_expensive, surjectivity_bound: bound, invariant_maxdeg: maxdeg };
            let reports = match run_suite(n as usize, checks.as_deref(), &caps) {
                Ok(r) => r,
                Err(e @ Error::UnknownCheck { .. }) => return Err((EXIT_USAGE, e.to_string())),
                Err(e) => return Err(internal(e)),
            };
            for r in &reports {
                writeln!(out, "{}", r.to_json_line(timing)).map_err(io)?;
            }
            let failed = reports.iter().filter(|r| r.is_fail()).count();
            if failed > 0 {
                let _ = writeln!(err, "{failed} check(s) failed");
                Ok(EXIT_FAILURE)
            } else {
                Ok(EXIT_OK)
            }
        }
        Command::Dims { n } => {
            let rows = dim_table(n as usize).map_err(internal)?;
            writeln!(out, "sign p q dim rank weyl_dim").map_err(io)?;
            for r in rows {
                writeln!(out, "{} {} {} {} {} {}", r.sign.symbol(), r.p, r.q, r.dim, r.rank, r.weyl).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Preimage { n, entry: (i, j), bound } => {
            let n = n as usize;
            if i == 0 || i > n || j == 0 || j > n {
                return Err((EXIT_USAGE, format!("entry ({i},{j}) is outside 1..={n}")));
            }
            let pres = build_presentation(n).map_err(internal)?;
            match find_preimage(&pres, i, j, bound).map_err(internal)? {
                Some(p) => {
                    writeln!(out, "{p}").map_err(io)?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "no preimage within bound {bound}").map_err(io)?;
                    Ok(EXIT_BOUND)
                }
            }
        }
    }
}
