#![allow(dead_code)]

use bellmat::{Complex64, PureState};

/// Purity of the reduced state on the first `cut` qubits, from the explicit
/// partial trace `ρ_A[i, i'] = Σ_j ψ[i, j] conj(ψ[i', j])`.
pub fn dense_block_purity(s: &PureState, cut: usize) -> f64 {
    let rows = 1usize << cut;
    let cols = 1usize << (s.n() - cut);
    let psi = s.amplitudes();
    let mut total = 0.0;
    for i in 0..rows {
        for i2 in 0..rows {
            let rho: Complex64 = (0..cols)
                .map(|j| psi[i * cols + j] * psi[i2 * cols + j].conj())
                .sum();
            total += rho.norm_sqr();
        }
    }
    total
}

/// The defining recursion `τ_1 = 0, τ_{2m} = 1 - τ_m, τ_{2m-1} = τ_m`,
/// evaluated top-down.
pub fn tau_recursive(i: u64) -> u8 {
    match i {
        1 => 0,
        i if i % 2 == 0 => 1 - tau_recursive(i / 2),
        i => tau_recursive(i.div_ceil(2)),
    }
}

pub fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
