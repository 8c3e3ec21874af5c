//! Named operators: dense realizations for small registers and implicit
//! `O(2^n)` / `O(n 2^n)` kernels for large ones.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{
    basis_state, check_qubits, kron, DenseOperator, PureState, MAX_DENSE_QUBITS, ONE, ZERO,
};

/// Identifies one of the operators the crate knows how to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateTag {
    PauliX,
    PauliY,
    PauliZ,
    Hadamard,
    /// Projector `|0><0|`.
    ProjL,
    /// Projector `|1><1|`.
    ProjR,
    /// `H^{⊗n}`, the Walsh matrix.
    Walsh(usize),
    /// `σ_y ⊗ I ⊗ σ_y`.
    M(usize),
    /// Generalized CNOT: control on qubit 1, flips the remaining `n-1` qubits.
    CnotGen(usize),
    /// `CNOT_{2^n} (H^{⊗(n-1)} ⊗ I_2)`; its columns are the generalized Bell states.
    Bell(usize),
    /// `B† M B`, equal to `-σ_z^{⊗n}`.
    LMatrix(usize),
}

impl GateTag {
    /// Qubit count of the operator.
    pub fn qubits(&self) -> usize {
        match *self {
            GateTag::PauliX
            | GateTag::PauliY
            | GateTag::PauliZ
            | GateTag::Hadamard
            | GateTag::ProjL
            | GateTag::ProjR => 1,
            GateTag::Walsh(n)
            | GateTag::M(n)
            | GateTag::CnotGen(n)
            | GateTag::Bell(n)
            | GateTag::LMatrix(n) => n,
        }
    }

    /// Parses a CLI-style name (`x`, `y`, `z`, `h`, `l`, `r`, `walsh`, `m`,
    /// `cnot`, `bell`, `lmatrix`), ignoring case, `_` and `-`. `n` is ignored
    /// by the single-qubit gates.
    pub fn from_name(name: &str, n: usize) -> Result<GateTag> {
        let key: String = name
            .chars()
            .filter(|c| !matches!(c, '_' | '-'))
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Ok(match key.as_str() {
            "x" | "paulix" => GateTag::PauliX,
            "y" | "pauliy" => GateTag::PauliY,
            "z" | "pauliz" => GateTag::PauliZ,
            "h" | "hadamard" => GateTag::Hadamard,
            "l" | "projl" => GateTag::ProjL,
            "r" | "projr" => GateTag::ProjR,
            "walsh" => GateTag::Walsh(n),
            "m" => GateTag::M(n),
            "cnot" | "cnotgen" => GateTag::CnotGen(n),
            "bell" | "b" => GateTag::Bell(n),
            "lmatrix" => GateTag::LMatrix(n),
            _ => return Err(Error::domain(format!("unknown gate `{name}`"))),
        })
    }

    fn check_dense_range(&self) -> Result<()> {
        let n = self.qubits();
        let min = match self {
            GateTag::Walsh(_) => 1,
            GateTag::M(_) | GateTag::CnotGen(_) | GateTag::Bell(_) | GateTag::LMatrix(_) => 2,
            _ => return Ok(()),
        };
        if n < min {
            return Err(Error::domain(format!("{self} needs at least {min} qubits")));
        }
        if n > MAX_DENSE_QUBITS {
            return Err(Error::capacity(format!(
                "{self} is too large for a dense matrix (limit {MAX_DENSE_QUBITS} qubits)"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for GateTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateTag::PauliX => write!(f, "X"),
            GateTag::PauliY => write!(f, "Y"),
            GateTag::PauliZ => write!(f, "Z"),
            GateTag::Hadamard => write!(f, "H"),
            GateTag::ProjL => write!(f, "L"),
            GateTag::ProjR => write!(f, "R"),
            GateTag::Walsh(n) => write!(f, "Walsh({n})"),
            GateTag::M(n) => write!(f, "M({n})"),
            GateTag::CnotGen(n) => write!(f, "CNOT({n})"),
            GateTag::Bell(n) => write!(f, "Bell({n})"),
            GateTag::LMatrix(n) => write!(f, "L({n})"),
        }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn two_by_two(entries: [Complex64; 4]) -> DenseOperator {
    DenseOperator::new(2, entries.to_vec()).expect("2x2 is always valid")
}

fn kron_power(op: &DenseOperator, times: usize) -> Result<DenseOperator> {
    let mut acc = DenseOperator::identity(1)?;
    for _ in 0..times {
        acc = kron(&acc, op)?;
    }
    Ok(acc)
}

/// Builds the exact dense matrix for `tag`.
pub fn dense(tag: GateTag) -> Result<DenseOperator> {
    tag.check_dense_range()?;
    let h = FRAC_1_SQRT_2;
    Ok(match tag {
        GateTag::PauliX => two_by_two([ZERO, ONE, ONE, ZERO]),
        GateTag::PauliY => two_by_two([ZERO, c(0.0, -1.0), c(0.0, 1.0), ZERO]),
        GateTag::PauliZ => two_by_two([ONE, ZERO, ZERO, c(-1.0, 0.0)]),
        GateTag::Hadamard => two_by_two([c(h, 0.0), c(h, 0.0), c(h, 0.0), c(-h, 0.0)]),
        GateTag::ProjL => two_by_two([ONE, ZERO, ZERO, ZERO]),
        GateTag::ProjR => two_by_two([ZERO, ZERO, ZERO, ONE]),
        GateTag::Walsh(n) => kron_power(&dense(GateTag::Hadamard)?, n)?,
        GateTag::M(n) => {
            let sy = dense(GateTag::PauliY)?;
            let middle = DenseOperator::identity(1 << (n - 2))?;
            kron(&kron(&sy, &middle)?, &sy)?
        }
        GateTag::CnotGen(n) => {
            let control_off = kron(&dense(GateTag::ProjL)?, &DenseOperator::identity(1 << (n - 1))?)?;
            let flips = kron_power(&dense(GateTag::PauliX)?, n - 1)?;
            let control_on = kron(&dense(GateTag::ProjR)?, &flips)?;
            control_off.add(&control_on)?
        }
        GateTag::Bell(n) => dense(GateTag::CnotGen(n))?.matmul(&dense_walsh_head(n)?)?,
        GateTag::LMatrix(n) => kron_power(&dense(GateTag::PauliZ)?, n)?.scale(c(-1.0, 0.0)),
    })
}

/// Dense `H^{⊗(n-1)} ⊗ I_2`, the oracle for [`apply_walsh_head`].
pub fn dense_walsh_head(n: usize) -> Result<DenseOperator> {
    if n < 2 {
        return Err(Error::domain("Walsh head needs at least 2 qubits"));
    }
    kron(&dense(GateTag::Walsh(n - 1))?, &DenseOperator::identity(2)?)
}

/// Applies `CNOT_{2^n}` as a basis permutation, without materializing it.
///
/// The lower half (control 0) is copied; in the upper half the remaining
/// `n-1` bits are complemented, which reverses that half.
pub fn apply_cnot_gen(s: &PureState) -> Result<PureState> {
    check_qubits(s.n(), 2)?;
    let amps = s.amplitudes();
    let half = amps.len() / 2;
    let mut out = Vec::with_capacity(amps.len());
    out.extend_from_slice(&amps[..half]);
    out.extend(amps[half..].iter().rev());
    Ok(PureState::from_parts_unchecked(s.n(), out))
}

/// Butterflies on axes with a stride below this many amplitudes run block by
/// block so that each block stays in cache.
const CACHE_BLOCK: usize = 1 << 13;

#[inline]
fn butterfly(a: &mut Complex64, b: &mut Complex64) {
    let (x, y) = (*a, *b);
    *a = (x + y) * FRAC_1_SQRT_2;
    *b = (x - y) * FRAC_1_SQRT_2;
}

fn radix2_pass(data: &mut [Complex64], stride: usize) {
    for block in data.chunks_exact_mut(2 * stride) {
        let (lo, hi) = block.split_at_mut(stride);
        for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
            butterfly(a, b);
        }
    }
}

/// Two consecutive passes fused: axis with stride `outer`, then `inner`
/// (`outer > inner`). The arithmetic is identical to two radix-2 passes.
fn radix4_pass(data: &mut [Complex64], outer: usize, inner: usize) {
    debug_assert!(outer > inner);
    for block in data.chunks_exact_mut(2 * outer) {
        let (top, bottom) = block.split_at_mut(outer);
        for (t, b) in top
            .chunks_exact_mut(2 * inner)
            .zip(bottom.chunks_exact_mut(2 * inner))
        {
            let (x0, x1) = t.split_at_mut(inner);
            let (x2, x3) = b.split_at_mut(inner);
            for i in 0..inner {
                butterfly(&mut x0[i], &mut x2[i]);
                butterfly(&mut x1[i], &mut x3[i]);
                butterfly(&mut x0[i], &mut x1[i]);
                butterfly(&mut x2[i], &mut x3[i]);
            }
        }
    }
}

/// In-place Hadamard on qubits `1..n-1` of an `n`-qubit amplitude buffer,
/// leaving qubit `n` untouched. Axes are processed in order `1, 2, …, n-1`.
pub fn walsh_head_in_place(amps: &mut [Complex64]) {
    let n = amps.len().trailing_zeros() as usize;
    debug_assert!(amps.len().is_power_of_two() && n >= 2);
    // Qubit q (1-based, MSB first) has stride 2^(n-q).
    let strides: Vec<usize> = (1..n).map(|q| 1usize << (n - q)).collect();
    let split = strides.iter().position(|&s| s < CACHE_BLOCK).unwrap_or(strides.len());
    let (wide, narrow) = strides.split_at(split);

    for pair in wide.chunks(2) {
        match *pair {
            [outer, inner] => radix4_pass(amps, outer, inner),
            [stride] => radix2_pass(amps, stride),
            _ => unreachable!(),
        }
    }
    if narrow.is_empty() {
        return;
    }
    let block = (2 * narrow[0]).min(amps.len());
    for chunk in amps.chunks_exact_mut(block) {
        for &stride in narrow {
            radix2_pass(chunk, stride);
        }
    }
}

/// `(H^{⊗(n-1)} ⊗ I_2) |s>` by `n-1` butterfly passes.
pub fn apply_walsh_head(s: &PureState) -> Result<PureState> {
    check_qubits(s.n(), 2)?;
    let mut out = s.amplitudes().to_vec();
    walsh_head_in_place(&mut out);
    Ok(PureState::from_parts_unchecked(s.n(), out))
}

/// The generalized Bell state `|b_k> = B_{2^n} |k>`.
pub fn bell_state(n: usize, k: usize) -> Result<PureState> {
    check_qubits(n, 2)?;
    let mut amps = basis_state(n, k)?.into_amplitudes();
    walsh_head_in_place(&mut amps);
    apply_cnot_gen(&PureState::from_parts_unchecked(n, amps))
}

/// Exponent `e` with `σ_y |bit> = i^e |1-bit>`.
#[inline]
fn sigma_y_phase(bit: usize) -> u32 {
    if bit == 0 {
        1
    } else {
        3
    }
}

/// Applies `M_{2^n} = σ_y ⊗ I ⊗ σ_y` implicitly: first and last bits are
/// flipped and the two `±i` factors combine into a real sign.
pub fn apply_m(s: &PureState) -> Result<PureState> {
    let n = s.n();
    check_qubits(n, 2)?;
    let amps = s.amplitudes();
    let first = 1usize << (n - 1);
    let mask = first | 1;
    let out = (0..amps.len())
        .map(|j| {
            let k = j ^ mask;
            let exponent = (sigma_y_phase(k >> (n - 1)) + sigma_y_phase(k & 1)) % 4;
            assert!(exponent.is_multiple_of(2), "σ_y ⊗ σ_y produced an imaginary phase");
            if exponent == 0 {
                amps[k]
            } else {
                -amps[k]
            }
        })
        .collect();
    Ok(PureState::from_parts_unchecked(n, out))
}

/// Diagonal of `L_{2^n} = -σ_z^{⊗n}`: entry `j` is `-(-1)^{popcount(j)}`.
pub fn l_matrix_diag(n: usize) -> Result<Vec<f64>> {
    check_qubits(n, 1)?;
    Ok((0..1usize << n)
        .map(|j| if j.count_ones() % 2 == 0 { -1.0 } else { 1.0 })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{apply_dense, EXACT_TOL};

    fn real(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| c(x, 0.0)).collect()
    }

    fn assert_close(a: &[Complex64], b: &[Complex64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (i, (x, y)) in a.iter().zip(b).enumerate() {
            assert!((x - y).norm() < tol, "index {i}: {x} vs {y}");
        }
    }

    #[test]
    fn dense_m2_is_the_antidiagonal() {
        let expected = DenseOperator::from_real_rows(&[
            &[0.0, 0.0, 0.0, -1.0],
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[-1.0, 0.0, 0.0, 0.0],
        ])
        .unwrap();
        assert!(dense(GateTag::M(2)).unwrap().max_abs_diff(&expected).unwrap() == 0.0);
    }

    #[test]
    fn dense_bell2_matches_the_four_bell_columns() {
        let h = FRAC_1_SQRT_2;
        let expected = DenseOperator::from_real_rows(&[
            &[h, 0.0, h, 0.0],
            &[0.0, h, 0.0, h],
            &[0.0, h, 0.0, -h],
            &[h, 0.0, -h, 0.0],
        ])
        .unwrap();
        let b = dense(GateTag::Bell(2)).unwrap();
        assert!(b.max_abs_diff(&expected).unwrap() < EXACT_TOL);
    }

    #[test]
    fn dense_cnot3_blocks() {
        // Top-left I_4, bottom-right σ_x ⊗ σ_x (the anti-identity), zero elsewhere.
        let cnot = dense(GateTag::CnotGen(3)).unwrap();
        for r in 0..8 {
            for col in 0..8 {
                let expected = match (r < 4, col < 4) {
                    (true, true) => (r == col) as u8 as f64,
                    (false, false) => ((r - 4) + (col - 4) == 3) as u8 as f64,
                    _ => 0.0,
                };
                assert_eq!(cnot.get(r, col), c(expected, 0.0), "({r},{col})");
            }
        }
    }

    #[test]
    fn dense_range_guards() {
        assert!(matches!(dense(GateTag::M(1)), Err(Error::Domain(_))));
        assert!(matches!(dense(GateTag::Bell(15)), Err(Error::Capacity(_))));
        assert!(dense(GateTag::Walsh(1)).is_ok());
    }

    #[test]
    fn cnot_kernel_examples() {
        let s = PureState::new(real(&[0.0, 0.0, 1.0, 0.0])).unwrap();
        assert_eq!(apply_cnot_gen(&s).unwrap().amplitudes(), &real(&[0.0, 0.0, 0.0, 1.0])[..]);
        let s = basis_state(2, 0).unwrap();
        assert_eq!(apply_cnot_gen(&s).unwrap(), s);
        let s = basis_state(3, 4).unwrap();
        assert_eq!(apply_cnot_gen(&s).unwrap(), basis_state(3, 7).unwrap());
        let dense_image = apply_dense(&dense(GateTag::CnotGen(3)).unwrap(), &s).unwrap();
        assert_eq!(dense_image, basis_state(3, 7).unwrap());
        assert!(apply_cnot_gen(&basis_state(1, 0).unwrap()).is_err());
    }

    #[test]
    fn walsh_head_examples() {
        let h = FRAC_1_SQRT_2;
        let out = apply_walsh_head(&basis_state(2, 0).unwrap()).unwrap();
        assert_close(out.amplitudes(), &real(&[h, 0.0, h, 0.0]), EXACT_TOL);
        let out = apply_walsh_head(&basis_state(2, 1).unwrap()).unwrap();
        assert_close(out.amplitudes(), &real(&[0.0, h, 0.0, h]), EXACT_TOL);
        let out = apply_walsh_head(&basis_state(3, 0).unwrap()).unwrap();
        assert_close(
            out.amplitudes(),
            &real(&[0.5, 0.0, 0.5, 0.0, 0.5, 0.0, 0.5, 0.0]),
            EXACT_TOL,
        );
    }

    /// Straightforward per-axis passes in order 1..n-1; the blocked kernel must
    /// reproduce it bit for bit.
    fn walsh_head_reference(amps: &mut [Complex64]) {
        let n = amps.len().trailing_zeros() as usize;
        for q in 1..n {
            radix2_pass(amps, 1 << (n - q));
        }
    }

    #[test]
    fn blocked_walsh_is_bitwise_identical_to_plain_passes() {
        for n in [2, 5, 13, 14, 15, 16] {
            let mut a: Vec<Complex64> = (0..1usize << n)
                .map(|i| c(((i * 7919) % 1013) as f64 / 1013.0, ((i * 104729) % 977) as f64 / 977.0))
                .collect();
            let mut b = a.clone();
            walsh_head_in_place(&mut a);
            walsh_head_reference(&mut b);
            assert!(a == b, "n = {n}");
        }
    }

    #[test]
    fn bell_state_examples() {
        let h = FRAC_1_SQRT_2;
        assert_close(bell_state(2, 0).unwrap().amplitudes(), &real(&[h, 0.0, 0.0, h]), EXACT_TOL);
        // Fourth column of B_4 (its fourth row would be (1, 0, -1, 0)/√2).
        assert_close(bell_state(2, 3).unwrap().amplitudes(), &real(&[0.0, h, -h, 0.0]), EXACT_TOL);
        // Column 0 of the dense B_8: (|000> + |010> + |101> + |111>)/2.
        assert_close(
            bell_state(3, 0).unwrap().amplitudes(),
            &real(&[0.5, 0.0, 0.5, 0.0, 0.0, 0.5, 0.0, 0.5]),
            EXACT_TOL,
        );
        assert!(matches!(bell_state(27, 0), Err(Error::Capacity(_))));
        assert!(matches!(bell_state(1, 0), Err(Error::Domain(_))));
        assert!(matches!(bell_state(2, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn m_kernel_examples() {
        let out = apply_m(&basis_state(2, 0).unwrap()).unwrap();
        assert_eq!(out.amplitudes(), &real(&[0.0, 0.0, 0.0, -1.0])[..]);
        let out = apply_m(&basis_state(2, 1).unwrap()).unwrap();
        assert_eq!(out.amplitudes(), &real(&[0.0, 0.0, 1.0, 0.0])[..]);
        let out = apply_m(&basis_state(3, 0).unwrap()).unwrap();
        let mut expected = [ZERO; 8];
        expected[5] = c(-1.0, 0.0);
        assert_eq!(out.amplitudes(), &expected[..]);
    }

    #[test]
    fn l_diag_examples() {
        assert_eq!(l_matrix_diag(2).unwrap(), vec![-1.0, 1.0, 1.0, -1.0]);
        assert_eq!(
            l_matrix_diag(3).unwrap(),
            vec![-1.0, 1.0, 1.0, -1.0, 1.0, -1.0, -1.0, 1.0]
        );
        assert_eq!(l_matrix_diag(1).unwrap(), vec![-1.0, 1.0]);
        for n in 1..12 {
            assert_eq!(l_matrix_diag(n).unwrap()[0], -1.0);
        }
    }

    #[test]
    fn gate_names_round_trip() {
        assert_eq!(GateTag::from_name("bell", 4).unwrap(), GateTag::Bell(4));
        assert_eq!(GateTag::from_name("M", 3).unwrap(), GateTag::M(3));
        assert!(GateTag::from_name("toffoli", 3).is_err());
    }
}
