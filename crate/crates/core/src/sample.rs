//! Seeded random states for property checks.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::state::{tensor_states, PureState};

/// A reproducible generator for one named stream under a master seed.
pub fn stream_rng(seed: u64, stream: &str) -> ChaCha8Rng {
    // FNV-1a over the stream name keeps streams independent of call order.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in stream.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

/// Haar-random state: a normalized complex Gaussian vector.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<PureState> {
    loop {
        let amps: Vec<Complex64> = (0..1usize << n)
            .map(|_| Complex64::new(gaussian(rng), gaussian(rng)))
            .collect();
        if amps.iter().any(|a| a.norm_sqr() > 0.0) {
            return PureState::from_unnormalized(amps);
        }
    }
}

/// `φ_1 ⊗ φ_2` with `φ_1` on the first `cut` qubits.
pub fn random_product_state<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    cut: usize,
) -> Result<PureState> {
    if cut == 0 || cut >= n {
        return Err(Error::domain(format!("cut {cut} out of range 1..{n}")));
    }
    let left = random_state(rng, cut)?;
    let right = random_state(rng, n - cut)?;
    tensor_states(&left, &right)
}

/// Random real unit vector of length `dim` supported on `support` (0-based).
pub fn random_real_on<R: Rng + ?Sized>(rng: &mut R, dim: usize, support: &[usize]) -> Vec<f64> {
    loop {
        let mut x = vec![0.0; dim];
        for &i in support {
            x[i] = gaussian(rng);
        }
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            x.iter_mut().for_each(|v| *v /= norm);
            return x;
        }
    }
}

/// Random real unit vector whose squared mass on `first` is drawn uniformly
/// from `[min_mass, 1 - min_mass]`, the rest sitting on `second`.
pub fn random_real_split<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    first: &[usize],
    second: &[usize],
    min_mass: f64,
) -> Vec<f64> {
    let weight = rng.random_range(min_mass..=1.0 - min_mass);
    let a = random_real_on(rng, dim, first);
    let b = random_real_on(rng, dim, second);
    a.iter()
        .zip(&b)
        .map(|(x, y)| weight.sqrt() * x + (1.0 - weight).sqrt() * y)
        .collect()
}
