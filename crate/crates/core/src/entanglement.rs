//! The antilinear witness `F`, single-qubit reduced states, the
//! Meyer–Wallach measure `Q` and Schmidt spectra.

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gates::apply_m;
use crate::state::{check_qubits, conjugate_state, inner, PureState, EXACT_TOL, ZERO};

/// Schmidt coefficients below this are treated as exact zeros.
pub const SCHMIDT_FLOOR: f64 = 1e-13;

/// `F(ψ) = <ψ| M_{2^n} |ψ̄>`.
pub fn f_value(s: &PureState) -> Result<Complex64> {
    check_qubits(s.n(), 2)?;
    inner(s, &apply_m(&conjugate_state(s))?)
}

/// Reduced density matrix of a single qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2 {
    entries: [[Complex64; 2]; 2],
}

impl DensityMatrix2 {
    /// Validates hermiticity, unit trace and positivity (all within 1e-12).
    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let [[a, b], [b2, d]] = entries;
        if (b - b2.conj()).norm() > EXACT_TOL || a.im.abs() > EXACT_TOL || d.im.abs() > EXACT_TOL
        {
            return Err(Error::Validation("density matrix is not Hermitian".into()));
        }
        if (a.re + d.re - 1.0).abs() > EXACT_TOL {
            return Err(Error::Validation(format!(
                "density matrix trace {} is not 1",
                a.re + d.re
            )));
        }
        let rho = DensityMatrix2 { entries };
        let (lo, _) = rho.eigenvalues();
        if lo < -EXACT_TOL {
            return Err(Error::Validation(format!(
                "density matrix has negative eigenvalue {lo}"
            )));
        }
        Ok(rho)
    }

    pub fn diagonal(p0: f64, p1: f64) -> Result<Self> {
        DensityMatrix2::new([
            [Complex64::new(p0, 0.0), ZERO],
            [ZERO, Complex64::new(p1, 0.0)],
        ])
    }

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let a = self.entries[0][0].re;
        let d = self.entries[1][1].re;
        let off = self.entries[0][1].norm();
        let mean = 0.5 * (a + d);
        let radius = (0.25 * (a - d) * (a - d) + off * off).sqrt();
        (mean - radius, mean + radius)
    }
}

/// State of qubit `j` (1-based, MSB first) with every other qubit traced out.
pub fn reduced_density_qubit(s: &PureState, j: usize) -> Result<DensityMatrix2> {
    let n = s.n();
    if j == 0 || j > n {
        return Err(Error::domain(format!("qubit {j} out of range 1..={n}")));
    }
    let bit = 1usize << (n - j);
    let amps = s.amplitudes();
    let (mut p0, mut p1, mut coherence) = (0.0, 0.0, ZERO);
    for k in (0..amps.len()).filter(|k| k & bit == 0) {
        let (x0, x1) = (amps[k], amps[k | bit]);
        p0 += x0.norm_sqr();
        p1 += x1.norm_sqr();
        coherence += x0 * x1.conj();
    }
    // Amplitude rounding leaves the trace a few ulps from 1; renormalize so
    // the result satisfies the density-matrix invariants exactly.
    let trace = p0 + p1;
    let (p0, p1, coherence) = (p0 / trace, p1 / trace, coherence / trace);
    Ok(DensityMatrix2 {
        entries: [
            [Complex64::new(p0, 0.0), coherence],
            [coherence.conj(), Complex64::new(p1, 0.0)],
        ],
    })
}

/// `Tr[ρ²]`.
pub fn purity(rho: &DensityMatrix2) -> f64 {
    let [[a, b], [_, d]] = rho.entries;
    a.re * a.re + d.re * d.re + 2.0 * b.norm_sqr()
}

/// Meyer–Wallach global entanglement `Q = 2 (1 - mean_j Tr[ρ_j²])`.
pub fn mw_measure(s: &PureState) -> Result<f64> {
    let n = s.n();
    check_qubits(n, 2)?;
    let mut total = 0.0;
    for j in 1..=n {
        total += purity(&reduced_density_qubit(s, j)?);
    }
    Ok(2.0 * (1.0 - total / n as f64))
}

/// Schmidt spectrum of a state across the cut after the first `cut` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtData {
    pub cut: usize,
    /// Nonincreasing, nonnegative, squares summing to one.
    pub coefficients: Vec<f64>,
}

impl SchmidtData {
    /// `Σ c_k⁴`, the purity of either reduced state.
    pub fn purity(&self) -> f64 {
        self.coefficients.iter().map(|c| c.powi(4)).sum()
    }

    /// Number of coefficients above [`SCHMIDT_FLOOR`].
    pub fn rank(&self) -> usize {
        self.coefficients.iter().filter(|&&c| c > 0.0).count()
    }
}

/// Singular values of the `2^cut x 2^(n-cut)` reshape of the amplitudes.
pub fn schmidt(s: &PureState, cut: usize) -> Result<SchmidtData> {
    let n = s.n();
    if cut == 0 || cut >= n {
        return Err(Error::domain(format!("cut {cut} out of range 1..{n}")));
    }
    let rows = 1usize << cut;
    let cols = 1usize << (n - cut);
    let matrix = DMatrix::from_row_slice(rows, cols, s.amplitudes());
    let mut coefficients: Vec<f64> = matrix
        .singular_values()
        .iter()
        .map(|&c| if c < SCHMIDT_FLOOR { 0.0 } else { c })
        .collect();
    coefficients.sort_by(|a, b| b.total_cmp(a));
    Ok(SchmidtData { cut, coefficients })
}

/// Outcome of the contiguous-cut product test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductCheck {
    pub is_product: bool,
    /// First cut whose second Schmidt coefficient falls below the tolerance.
    pub cut: Option<usize>,
}

/// Whether `s = φ_1 ⊗ φ_2` across some contiguous cut, up to `tol` on the
/// second Schmidt coefficient.
pub fn is_product(s: &PureState, tol: f64) -> Result<ProductCheck> {
    check_qubits(s.n(), 2)?;
    for cut in 1..s.n() {
        let data = schmidt(s, cut)?;
        if data.coefficients[1] < tol {
            return Ok(ProductCheck { is_product: true, cut: Some(cut) });
        }
    }
    Ok(ProductCheck { is_product: false, cut: None })
}

/// `(|0…0> + |1…1>)/√2`.
pub fn ghz_state(n: usize) -> Result<PureState> {
    check_qubits(n, 1)?;
    let dim = 1usize << n;
    let mut amps = vec![ZERO; dim];
    amps[0] = Complex64::new(FRAC_1_SQRT_2, 0.0);
    amps[dim - 1] = Complex64::new(FRAC_1_SQRT_2, 0.0);
    Ok(PureState::from_parts_unchecked(n, amps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::bell_state;
    use crate::state::{basis_state, tensor_states, PIPELINE_TOL};

    #[test]
    fn f_examples() {
        assert!(f_value(&ghz_state(3).unwrap()).unwrap().norm() < EXACT_TOL);
        let f = f_value(&bell_state(2, 0).unwrap()).unwrap();
        assert!((f - Complex64::new(-1.0, 0.0)).norm() < EXACT_TOL);
        let product = tensor_states(&basis_state(1, 1).unwrap(), &ghz_state(1).unwrap()).unwrap();
        assert!(f_value(&product).unwrap().norm() < EXACT_TOL);
        assert!(matches!(f_value(&basis_state(1, 0).unwrap()), Err(Error::Domain(_))));
    }

    #[test]
    fn reduced_density_examples() {
        let rho = reduced_density_qubit(&basis_state(2, 1).unwrap(), 1).unwrap();
        assert_eq!(rho, DensityMatrix2::diagonal(1.0, 0.0).unwrap());
        for n in 2..6 {
            for j in 1..=n {
                let rho = reduced_density_qubit(&ghz_state(n).unwrap(), j).unwrap();
                let half = DensityMatrix2::diagonal(0.5, 0.5).unwrap();
                for (r, c) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                    assert!((rho.get(r, c) - half.get(r, c)).norm() < EXACT_TOL);
                }
            }
        }
        let rho = reduced_density_qubit(&bell_state(2, 0).unwrap(), 2).unwrap();
        assert!((rho.get(0, 0).re - 0.5).abs() < EXACT_TOL);
        assert!(rho.get(0, 1).norm() < EXACT_TOL);
        assert!(reduced_density_qubit(&ghz_state(3).unwrap(), 0).is_err());
        assert!(reduced_density_qubit(&ghz_state(3).unwrap(), 4).is_err());
    }

    #[test]
    fn purity_examples() {
        assert_eq!(purity(&DensityMatrix2::diagonal(1.0, 0.0).unwrap()), 1.0);
        assert_eq!(purity(&DensityMatrix2::diagonal(0.5, 0.5).unwrap()), 0.5);
        assert_eq!(purity(&DensityMatrix2::diagonal(0.75, 0.25).unwrap()), 0.625);
    }

    #[test]
    fn density_validation() {
        assert!(DensityMatrix2::diagonal(0.6, 0.6).is_err());
        assert!(DensityMatrix2::diagonal(1.5, -0.5).is_err());
        let one = Complex64::new(1.0, 0.0);
        let half = Complex64::new(0.5, 0.0);
        assert!(DensityMatrix2::new([[half, one], [one, half]]).is_err());
        assert!(DensityMatrix2::new([[half, Complex64::i()], [Complex64::i(), half]]).is_err());
    }

    #[test]
    fn mw_examples() {
        for n in 2..6 {
            for k in 0..1 << n {
                assert!(mw_measure(&basis_state(n, k).unwrap()).unwrap().abs() < EXACT_TOL);
            }
            assert!((mw_measure(&ghz_state(n).unwrap()).unwrap() - 1.0).abs() < PIPELINE_TOL);
        }
    }

    #[test]
    fn bell_states_entangle_only_the_end_qubits() {
        // Qubits 2..n-1 leave the Hadamards as X eigenstates, which the
        // generalized CNOT only rephases. Only qubits 1 and n are maximally
        // mixed, so Q = 2/n (1, 0.667, 0.5, 0.4 for n = 2..5; numpy oracle).
        for (n, expected_q) in [(2, 1.0), (3, 2.0 / 3.0), (4, 0.5), (5, 0.4)] {
            for k in 0..1 << n {
                let s = bell_state(n, k).unwrap();
                assert!((f_value(&s).unwrap().norm() - 1.0).abs() < PIPELINE_TOL);
                assert!((mw_measure(&s).unwrap() - expected_q).abs() < PIPELINE_TOL, "n={n} k={k}");
                for j in 1..=n {
                    let p = purity(&reduced_density_qubit(&s, j).unwrap());
                    let expected = if j == 1 || j == n { 0.5 } else { 1.0 };
                    assert!((p - expected).abs() < PIPELINE_TOL, "n={n} k={k} j={j}");
                }
            }
        }
    }

    #[test]
    fn schmidt_examples() {
        let h = FRAC_1_SQRT_2;
        let product = tensor_states(&ghz_state(2).unwrap(), &basis_state(1, 1).unwrap()).unwrap();
        let data = schmidt(&product, 2).unwrap();
        assert!((data.coefficients[0] - 1.0).abs() < EXACT_TOL);
        assert!(data.coefficients[1..].iter().all(|&c| c == 0.0));

        let data = schmidt(&bell_state(2, 0).unwrap(), 1).unwrap();
        assert!(data.coefficients.iter().all(|c| (c - h).abs() < EXACT_TOL));
        let data = schmidt(&ghz_state(3).unwrap(), 1).unwrap();
        assert_eq!(data.coefficients.len(), 2);
        assert!(data.coefficients.iter().all(|c| (c - h).abs() < EXACT_TOL));

        assert!(schmidt(&ghz_state(3).unwrap(), 0).is_err());
        assert!(schmidt(&ghz_state(3).unwrap(), 3).is_err());
    }

    #[test]
    fn product_examples() {
        let s = basis_state(4, 0b0101).unwrap();
        assert_eq!(is_product(&s, 1e-10).unwrap(), ProductCheck { is_product: true, cut: Some(1) });
        assert_eq!(
            is_product(&ghz_state(2).unwrap(), 1e-10).unwrap(),
            ProductCheck { is_product: false, cut: None }
        );
        let s = tensor_states(&basis_state(1, 0).unwrap(), &ghz_state(2).unwrap()).unwrap();
        assert_eq!(is_product(&s, 1e-10).unwrap().cut, Some(1));
        assert!(schmidt(&s, 2).unwrap().coefficients[1] > 0.5);
    }

    #[test]
    fn ghz_examples() {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        assert_eq!(ghz_state(2).unwrap().amplitudes(), &[h, ZERO, ZERO, h]);
        let g = ghz_state(3).unwrap();
        assert_eq!(g.amplitudes()[0], h);
        assert_eq!(g.amplitudes()[7], h);
        assert_eq!(g.nonzero_count(0.0), 2);
        assert_eq!(ghz_state(1).unwrap().amplitudes(), &[h, h]);
    }
}
