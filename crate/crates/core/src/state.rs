//! Pure states and dense operators.
//!
//! Basis label `k` of an `n`-qubit state is read MSB-first: qubit 1 is the
//! leftmost tensor factor and the most significant bit of `k`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for identities that hold up to a few roundings.
pub const EXACT_TOL: f64 = 1e-12;
/// Tolerance for composed numerical pipelines (SVD, sums over many terms).
pub const PIPELINE_TOL: f64 = 1e-10;
/// Largest qubit count for which a dense `2^n x 2^n` matrix may be built.
pub const MAX_DENSE_QUBITS: usize = 14;
/// Largest qubit count accepted by the implicit kernels (~1 GiB per state).
pub const MAX_QUBITS: usize = 26;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub(crate) fn check_qubits(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::domain(format!("need at least {min} qubits, got {n}")));
    }
    if n > MAX_QUBITS {
        return Err(Error::capacity(format!(
            "{n} qubits exceeds the limit of {MAX_QUBITS}"
        )));
    }
    Ok(())
}

fn norm(amps: &[Complex64]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

fn qubits_for_len(len: usize) -> Option<usize> {
    (len >= 2 && len.is_power_of_two()).then(|| len.trailing_zeros() as usize)
}

/// Unit-norm amplitude vector of an `n`-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wraps `amplitudes`, which must have length `2^n` (n >= 1) and unit norm
    /// within [`EXACT_TOL`].
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let n = qubits_for_len(amplitudes.len()).ok_or_else(|| {
            Error::domain(format!(
                "amplitude count {} is not a power of two >= 2",
                amplitudes.len()
            ))
        })?;
        if n > MAX_QUBITS {
            return Err(Error::capacity(format!("{n} qubits exceeds {MAX_QUBITS}")));
        }
        let norm = norm(&amplitudes);
        if (norm - 1.0).abs() > EXACT_TOL {
            return Err(Error::Validation(format!("state norm {norm} is not 1")));
        }
        Ok(PureState { n, amplitudes })
    }

    /// Rescales `amplitudes` to unit norm, provided the norm is already within
    /// `max_deviation` of one.
    pub fn normalized(mut amplitudes: Vec<Complex64>, max_deviation: f64) -> Result<Self> {
        let norm = norm(&amplitudes);
        if !norm.is_finite() || (norm - 1.0).abs() > max_deviation {
            return Err(Error::Validation(format!(
                "state norm {norm} deviates from 1 by more than {max_deviation:e}"
            )));
        }
        let inv = 1.0 / norm;
        amplitudes.iter_mut().for_each(|a| *a *= inv);
        PureState::new(amplitudes)
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn from_unnormalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = norm(&amplitudes);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::domain("cannot normalize a zero vector"));
        }
        PureState::normalized(amplitudes, f64::INFINITY)
    }

    pub(crate) fn from_parts_unchecked(n: usize, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << n);
        PureState { n, amplitudes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    /// Number of amplitudes whose modulus exceeds `tol`.
    pub fn nonzero_count(&self, tol: f64) -> usize {
        self.amplitudes.iter().filter(|a| a.norm() > tol).count()
    }

    /// Multiplies every amplitude by `e^{i theta}`.
    pub fn with_global_phase(&self, theta: f64) -> PureState {
        let phase = Complex64::from_polar(1.0, theta);
        PureState {
            n: self.n,
            amplitudes: self.amplitudes.iter().map(|a| a * phase).collect(),
        }
    }
}

/// The standard basis vector `|k>` of an `n`-qubit register.
pub fn basis_state(n: usize, k: usize) -> Result<PureState> {
    check_qubits(n, 1)?;
    let dim = 1usize << n;
    if k >= dim {
        return Err(Error::domain(format!("basis index {k} out of range 0..{dim}")));
    }
    let mut amplitudes = vec![ZERO; dim];
    amplitudes[k] = ONE;
    Ok(PureState::from_parts_unchecked(n, amplitudes))
}

/// `a ⊗ b`, with `a` occupying the leading qubits.
pub fn tensor_states(a: &PureState, b: &PureState) -> Result<PureState> {
    let n = a.n + b.n;
    check_qubits(n, 1)?;
    let mut amplitudes = Vec::with_capacity(1 << n);
    for &x in &a.amplitudes {
        amplitudes.extend(b.amplitudes.iter().map(|&y| x * y));
    }
    Ok(PureState::from_parts_unchecked(n, amplitudes))
}

/// Entrywise complex conjugate in the standard basis.
pub fn conjugate_state(s: &PureState) -> PureState {
    PureState::from_parts_unchecked(s.n, s.amplitudes.iter().map(|a| a.conj()).collect())
}

/// `<a|b>`, conjugate-linear in the first slot.
pub fn inner(a: &PureState, b: &PureState) -> Result<Complex64> {
    inner_raw(&a.amplitudes, &b.amplitudes)
}

pub(crate) fn inner_raw(a: &[Complex64], b: &[Complex64]) -> Result<Complex64> {
    if a.len() != b.len() {
        return Err(Error::domain(format!(
            "dimension mismatch: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.iter().zip(b).map(|(x, y)| x.conj() * y).sum())
}

/// Square complex matrix of power-of-two dimension, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    dim: usize,
    entries: Vec<Complex64>,
}

fn check_dense_dim(dim: usize) -> Result<()> {
    if !dim.is_power_of_two() {
        return Err(Error::domain(format!("dimension {dim} is not a power of two")));
    }
    if dim > 1 << MAX_DENSE_QUBITS {
        return Err(Error::capacity(format!(
            "dense dimension {dim} exceeds 2^{MAX_DENSE_QUBITS}"
        )));
    }
    Ok(())
}

impl DenseOperator {
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        check_dense_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::domain(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(DenseOperator { dim, entries })
    }

    /// Builds a matrix from real rows; convenient for hand-written constants.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::domain("rows must form a square matrix"));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)))
            .collect();
        DenseOperator::new(dim, entries)
    }

    pub fn identity(dim: usize) -> Result<Self> {
        check_dense_dim(dim)?;
        let mut entries = vec![ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = ONE;
        }
        Ok(DenseOperator { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn column(&self, col: usize) -> Vec<Complex64> {
        (0..self.dim).map(|r| self.get(r, col)).collect()
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    /// Largest modulus among off-diagonal entries.
    pub fn max_off_diagonal(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in 0..self.dim {
                if r != c {
                    worst = worst.max(self.get(r, c).norm());
                }
            }
        }
        worst
    }

    pub fn adjoint(&self) -> DenseOperator {
        let dim = self.dim;
        let mut entries = vec![ZERO; dim * dim];
        for r in 0..dim {
            for c in 0..dim {
                entries[c * dim + r] = self.entries[r * dim + c].conj();
            }
        }
        DenseOperator { dim, entries }
    }

    pub fn transpose(&self) -> DenseOperator {
        let dim = self.dim;
        let mut entries = vec![ZERO; dim * dim];
        for r in 0..dim {
            for c in 0..dim {
                entries[c * dim + r] = self.entries[r * dim + c];
            }
        }
        DenseOperator { dim, entries }
    }

    pub fn scale(&self, factor: Complex64) -> DenseOperator {
        DenseOperator {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn add(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.same_dim(other)?;
        Ok(DenseOperator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Matrix product `self * other`. Zero entries of `self` are skipped, which
    /// makes products with the permutation-like gates cheap.
    pub fn matmul(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.same_dim(other)?;
        let dim = self.dim;
        let mut entries = vec![ZERO; dim * dim];
        for r in 0..dim {
            let out_row = &mut entries[r * dim..(r + 1) * dim];
            for k in 0..dim {
                let a = self.entries[r * dim + k];
                if a == ZERO {
                    continue;
                }
                let b_row = &other.entries[k * dim..(k + 1) * dim];
                for (o, b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(DenseOperator { dim, entries })
    }

    /// Largest entrywise deviation of `U†U` from the identity.
    pub fn unitarity_residual(&self) -> f64 {
        let gram = self
            .adjoint()
            .matmul(self)
            .expect("adjoint has the same dimension");
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in 0..self.dim {
                let target = if r == c { ONE } else { ZERO };
                worst = worst.max((gram.get(r, c) - target).norm());
            }
        }
        worst
    }

    /// Largest entrywise difference between two operators of equal dimension.
    pub fn max_abs_diff(&self, other: &DenseOperator) -> Result<f64> {
        self.same_dim(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    fn same_dim(&self, other: &DenseOperator) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::domain(format!(
                "dimension mismatch: {} vs {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &DenseOperator, b: &DenseOperator) -> Result<DenseOperator> {
    let dim = a.dim * b.dim;
    check_dense_dim(dim)?;
    let mut entries = vec![ZERO; dim * dim];
    for i1 in 0..a.dim {
        for j1 in 0..a.dim {
            let x = a.get(i1, j1);
            if x == ZERO {
                continue;
            }
            for i2 in 0..b.dim {
                let row = (i1 * b.dim + i2) * dim + j1 * b.dim;
                for j2 in 0..b.dim {
                    entries[row + j2] = x * b.get(i2, j2);
                }
            }
        }
    }
    Ok(DenseOperator { dim, entries })
}

/// Matrix-vector product without renormalization, for operators that are
/// not norm-preserving.
pub fn apply_dense_raw(op: &DenseOperator, amplitudes: &[Complex64]) -> Result<Vec<Complex64>> {
    if op.dim != amplitudes.len() {
        return Err(Error::domain(format!(
            "operator dimension {} does not match vector length {}",
            op.dim,
            amplitudes.len()
        )));
    }
    Ok(op
        .entries
        .chunks_exact(op.dim)
        .map(|row| row.iter().zip(amplitudes).map(|(m, x)| m * x).sum())
        .collect())
}

/// Applies a norm-preserving operator to a state. The caller is responsible
/// for unitarity; use [`apply_dense_raw`] otherwise.
pub fn apply_dense(op: &DenseOperator, s: &PureState) -> Result<PureState> {
    let out = apply_dense_raw(op, &s.amplitudes)?;
    Ok(PureState::from_parts_unchecked(s.n, out))
}
