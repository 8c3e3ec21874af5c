//! Matrix bitmaps in binary PPM (`P6`): grey for 0, black for +1, white for -1.

use std::io::Write;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gates::{dense, GateTag};

pub const GREY: [u8; 3] = [128, 128, 128];
pub const BLACK: [u8; 3] = [0, 0, 0];
pub const WHITE: [u8; 3] = [255, 255, 255];

/// Entries must sit this close to 0 or ±1 after normalization.
pub const CLASSIFY_TOL: f64 = 1e-9;

const MAX_IMAGE_BYTES: usize = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub target: GateTag,
    /// Pixels per matrix entry along each axis.
    pub cellsize: usize,
}

impl RenderSpec {
    pub fn new(target: GateTag) -> Self {
        RenderSpec { target, cellsize: 4 }
    }

    pub fn with_cellsize(mut self, cellsize: usize) -> Self {
        self.cellsize = cellsize;
        self
    }

    /// Factor that brings every nonzero entry of the target to modulus one.
    pub fn normalization(&self) -> f64 {
        match self.target {
            GateTag::Hadamard => 2f64.sqrt(),
            GateTag::Walsh(n) => 2f64.powf(n as f64 / 2.0),
            GateTag::Bell(n) => 2f64.powf((n as f64 - 1.0) / 2.0),
            _ => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Zero,
    Plus,
    Minus,
}

impl Cell {
    pub fn color(self) -> [u8; 3] {
        match self {
            Cell::Zero => GREY,
            Cell::Plus => BLACK,
            Cell::Minus => WHITE,
        }
    }
}

pub fn classify(entry: Complex64) -> Option<Cell> {
    if entry.im.abs() > CLASSIFY_TOL {
        return None;
    }
    [(0.0, Cell::Zero), (1.0, Cell::Plus), (-1.0, Cell::Minus)]
        .into_iter()
        .find(|(v, _)| (entry.re - v).abs() <= CLASSIFY_TOL)
        .map(|(_, cell)| cell)
}

/// Sign pattern of the target matrix, row-major.
pub fn cells(target: GateTag, scale: f64) -> Result<Vec<Cell>> {
    let op = dense(target)?;
    let dim = op.dim();
    op.entries()
        .iter()
        .enumerate()
        .map(|(idx, e)| {
            classify(e * scale).ok_or_else(|| {
                Error::domain(format!(
                    "{target} entry ({}, {}) = {e} is not in {{0, +1, -1}}",
                    idx / dim,
                    idx % dim
                ))
            })
        })
        .collect()
}

/// Encodes the target as a `P6` image of side `2^n * cellsize`.
pub fn render_ppm(spec: &RenderSpec) -> Result<Vec<u8>> {
    if spec.cellsize == 0 {
        return Err(Error::domain("cell size must be positive"));
    }
    let dim = 1usize << spec.target.qubits();
    let side = dim
        .checked_mul(spec.cellsize)
        .filter(|s| s.checked_mul(*s).and_then(|p| p.checked_mul(3)).is_some_and(|b| b <= MAX_IMAGE_BYTES))
        .ok_or_else(|| Error::capacity("image would exceed 1 GiB"))?;
    let cells = cells(spec.target, spec.normalization())?;

    let header = format!("P6\n{side} {side}\n255\n");
    let mut out = Vec::with_capacity(header.len() + side * side * 3);
    out.extend_from_slice(header.as_bytes());
    let mut row = Vec::with_capacity(side * 3);
    for r in 0..dim {
        row.clear();
        for cell in &cells[r * dim..(r + 1) * dim] {
            for _ in 0..spec.cellsize {
                row.extend_from_slice(&cell.color());
            }
        }
        for _ in 0..spec.cellsize {
            out.extend_from_slice(&row);
        }
    }
    Ok(out)
}

pub fn write_ppm<W: Write>(mut out: W, spec: &RenderSpec) -> Result<()> {
    out.write_all(&render_ppm(spec)?)?;
    out.flush()?;
    Ok(())
}
