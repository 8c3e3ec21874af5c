//! Plain-text state files.
//!
//! Line 1 holds the qubit count `n`; lines `2..=2^n + 1` hold one amplitude
//! each as `re im`, in basis order. Values are written with 17 significant
//! digits so that they read back bit-exactly.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{PureState, MAX_QUBITS};

/// Largest norm deviation the reader silently corrects.
pub const NORM_SLACK: f64 = 1e-6;

pub fn write_state<W: Write>(mut out: W, s: &PureState) -> Result<()> {
    writeln!(out, "{}", s.n())?;
    for a in s.amplitudes() {
        writeln!(out, "{:.16e} {:.16e}", a.re, a.im)?;
    }
    out.flush()?;
    Ok(())
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn read_state<R: BufRead>(input: R) -> Result<PureState> {
    let mut lines = input.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let header = header?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| parse_err(1, format!("expected a qubit count, found `{}`", header.trim())))?;
    if n == 0 {
        return Err(parse_err(1, "qubit count must be at least 1"));
    }
    if n > MAX_QUBITS {
        return Err(Error::capacity(format!("{n} qubits exceeds {MAX_QUBITS}")));
    }

    let dim = 1usize << n;
    let mut amplitudes = Vec::with_capacity(dim);
    for (line_no, line) in lines.by_ref() {
        let line = line?;
        let text = line.trim();
        if amplitudes.len() == dim {
            if text.is_empty() {
                continue;
            }
            return Err(parse_err(line_no, format!("expected {dim} amplitudes, found more")));
        }
        let mut fields = text.split_whitespace();
        let mut number = |what: &str| -> Result<f64> {
            let field = fields
                .next()
                .ok_or_else(|| parse_err(line_no, format!("missing {what} part")))?;
            field
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| parse_err(line_no, format!("invalid {what} part `{field}`")))
        };
        let re = number("real")?;
        let im = number("imaginary")?;
        if fields.next().is_some() {
            return Err(parse_err(line_no, "expected exactly two numbers"));
        }
        amplitudes.push(Complex64::new(re, im));
    }
    if amplitudes.len() != dim {
        return Err(parse_err(
            amplitudes.len() + 2,
            format!("expected {dim} amplitudes, found {}", amplitudes.len()),
        ));
    }
    PureState::normalized(amplitudes, NORM_SLACK)
}

pub fn save_state(path: impl AsRef<Path>, s: &PureState) -> Result<()> {
    write_state(BufWriter::new(File::create(path)?), s)
}

pub fn load_state(path: impl AsRef<Path>) -> Result<PureState> {
    read_state(BufReader::new(File::open(path)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::bell_state;

    #[test]
    fn round_trip_is_exact() {
        let s = bell_state(3, 5).unwrap().with_global_phase(0.3);
        let mut buf = Vec::new();
        write_state(&mut buf, &s).unwrap();
        let back = read_state(buf.as_slice()).unwrap();
        for (a, b) in s.amplitudes().iter().zip(back.amplitudes()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn accepts_scientific_and_fixed_notation() {
        let text = "1\n0.6 0\n8e-1 0.0\n\n";
        let s = read_state(text.as_bytes()).unwrap();
        assert_eq!(s.amplitudes()[1], Complex64::new(0.8, 0.0));
    }

    #[test]
    fn renormalizes_small_deviation() {
        let s = read_state("1\n1.0000001 0\n0 0\n".as_bytes()).unwrap();
        assert_eq!(s.amplitudes()[0], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn rejects_large_deviation() {
        assert!(matches!(
            read_state("1\n1.1 0\n0 0\n".as_bytes()),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let line_of = |text: &str| match read_state(text.as_bytes()) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line_of(""), 1);
        assert_eq!(line_of("two\n"), 1);
        assert_eq!(line_of("0\n"), 1);
        assert_eq!(line_of("1\n1 0\nx 0\n"), 3);
        assert_eq!(line_of("1\n1 0\n0\n"), 3);
        assert_eq!(line_of("1\n1 0 0\n0 0\n"), 2);
        assert_eq!(line_of("1\n1 0\n"), 3);
        assert_eq!(line_of("1\n1 0\n0 0\n0 0\n"), 4);
        assert_eq!(line_of("1\ninf 0\n0 0\n"), 2);
    }
}
