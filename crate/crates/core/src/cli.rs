//! Command-line front end. The binary is a thin wrapper around [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::entanglement::ghz_state;
use crate::error::{Error, Result};
use crate::gates::{bell_state, GateTag};
use crate::render::{render_ppm, RenderSpec};
use crate::report::{fmt_f64, measure};
use crate::state::{PureState, EXACT_TOL};
use crate::statefile::{load_state, save_state};
use crate::thuemorse::{evil_odious_indices, ThueMorsePrefix};
use crate::verify::{verify, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;

pub const MAX_THUEMORSE_EXPONENT: usize = 24;

#[derive(Debug, Parser)]
#[command(name = "bellmat", version, about = "Generalized Bell states, the F witness and the Meyer-Wallach measure")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Show {
    Bits,
    Partition,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the generalized Bell state B|k> to a state file.
    Bell {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the GHZ state to a state file.
    Ghz {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Report Q, F, Schmidt spectra and the product verdict for a state file.
    Measure {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the seeded property suite.
    Verify {
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Render an operator as a PPM bitmap (grey 0, black +1, white -1).
    Render {
        /// One of m, bell, cnot, walsh, lmatrix, x, z, h, l, r.
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        cellsize: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the first 2^n Thue-Morse terms or the evil/odious partition.
    Thuemorse {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "bits")]
        show: Show,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) => EXIT_USAGE,
        Error::Capacity(_) => EXIT_CAPACITY,
        Error::Io(_) | Error::Parse { .. } | Error::Validation(_) => EXIT_IO,
    }
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit code; diagnostics go to `stderr` only.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn describe_written(out: &mut dyn Write, path: &std::path::Path, s: &PureState) -> Result<()> {
    writeln!(
        out,
        "wrote {}: n={} nonzeros={} norm={}",
        path.display(),
        s.n(),
        s.nonzero_count(EXACT_TOL),
        fmt_f64(s.norm())
    )?;
    Ok(())
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Bell { n, k, out: path } => {
            let s = bell_state(*n, *k)?;
            save_state(path, &s)?;
            describe_written(out, path, &s)?;
        }
        Command::Ghz { n, out: path } => {
            let s = ghz_state(*n)?;
            save_state(path, &s)?;
            describe_written(out, path, &s)?;
        }
        Command::Measure { input, format } => {
            let s = load_state(input)?;
            let record = measure(&s, format!("file:{}", input.display()))?;
            match format {
                Format::Text => record.write_text(&mut *out)?,
                Format::Kv => record.write_kv(&mut *out)?,
            }
        }
        Command::Verify { max_n, seed, trials } => {
            let summary = verify(&VerifyConfig { max_n: *max_n, seed: *seed, trials: *trials })?;
            summary.write_text(&mut *out)?;
            if !summary.passed() {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Render { target, n, cellsize, out: path } => {
            let spec = RenderSpec::new(GateTag::from_name(target, *n)?).with_cellsize(*cellsize);
            let bytes = render_ppm(&spec)?;
            std::fs::write(path, &bytes)?;
            writeln!(out, "wrote {}: {} ({} bytes)", path.display(), spec.target, bytes.len())?;
        }
        Command::Thuemorse { n, show, format } => {
            if *n == 0 {
                return Err(Error::domain("n must be at least 1"));
            }
            if *n > MAX_THUEMORSE_EXPONENT {
                return Err(Error::capacity(format!(
                    "n = {n} exceeds {MAX_THUEMORSE_EXPONENT}"
                )));
            }
            write_thuemorse(out, *n, *show, *format)?;
        }
    }
    Ok(EXIT_OK)
}

fn joined(values: impl Iterator<Item = String>, sep: &str) -> String {
    values.collect::<Vec<_>>().join(sep)
}

fn write_thuemorse(out: &mut dyn Write, n: usize, show: Show, format: Format) -> Result<()> {
    match show {
        Show::Bits => {
            let prefix = ThueMorsePrefix::new(n)?;
            let bits = prefix.bits().iter().map(|b| b.to_string());
            match format {
                Format::Text => writeln!(out, "{}", joined(bits, " "))?,
                Format::Kv => writeln!(out, "record=thuemorse n={n} bits={}", joined(bits, ""))?,
            }
        }
        Show::Partition => {
            let eo = evil_odious_indices(n)?;
            let list = |v: &[usize], sep| joined(v.iter().map(|i| i.to_string()), sep);
            match format {
                Format::Text => {
                    writeln!(out, "evil: {}", list(&eo.evil, " "))?;
                    writeln!(out, "odious: {}", list(&eo.odious, " "))?;
                }
                Format::Kv => writeln!(
                    out,
                    "record=partition n={n} evil={} odious={}",
                    list(&eo.evil, ","),
                    list(&eo.odious, ",")
                )?,
            }
        }
    }
    Ok(())
}
