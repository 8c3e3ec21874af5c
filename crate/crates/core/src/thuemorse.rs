//! Thue–Morse sequence, evil/odious index classes and the real-support
//! criterion for `|xᵀ L x| = 1`.
//!
//! Positions are 1-based here (`τ_1 = 0`). Conversion to 0-based basis
//! indices happens only in [`l_diag_via_thue`] and [`real_support_criterion`].

use crate::error::{Error, Result};
use crate::state::{PIPELINE_TOL, MAX_QUBITS};

/// `τ_i`, computed as the parity of `popcount(i - 1)`.
pub fn tau(i: u64) -> Result<u8> {
    if i == 0 {
        return Err(Error::domain("Thue–Morse positions start at 1"));
    }
    Ok(((i - 1).count_ones() & 1) as u8)
}

/// The first `2^n` terms, generated by the defining recursion
/// `τ_1 = 0, τ_{2m} = 1 - τ_m, τ_{2m-1} = τ_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThueMorsePrefix {
    // bits[0] is unused so that bits[i] = τ_i.
    bits: Vec<u8>,
}

impl ThueMorsePrefix {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_QUBITS + 1 {
            return Err(Error::capacity(format!("prefix of length 2^{n} is too long")));
        }
        let len = 1usize << n;
        let mut bits = vec![0u8; len + 1];
        for i in 2..=len {
            bits[i] = if i % 2 == 0 { 1 - bits[i / 2] } else { bits[i.div_ceil(2)] };
        }
        Ok(ThueMorsePrefix { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `τ_i` for `1 <= i <= len`.
    pub fn get(&self, i: usize) -> Option<u8> {
        (i >= 1).then(|| self.bits.get(i).copied()).flatten()
    }

    /// `τ_1, …, τ_len`.
    pub fn bits(&self) -> &[u8] {
        &self.bits[1..]
    }
}

/// Checks `τ_{2^n + i} = 1 - τ_i` for every `i = 1, …, 2^n` on a prefix built
/// by the recursion.
pub fn block_negation_check(n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::domain("block negation is stated for n >= 1"));
    }
    let prefix = ThueMorsePrefix::new(n + 1)?;
    let block = 1usize << n;
    Ok((1..=block).all(|i| prefix.bits[block + i] == 1 - prefix.bits[i]))
}

/// 1-based positions in `1..=2^n` where `τ` is 0 (evil) and 1 (odious).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvilOdious {
    pub evil: Vec<usize>,
    pub odious: Vec<usize>,
}

pub fn evil_odious_indices(n: usize) -> Result<EvilOdious> {
    if n == 0 {
        return Err(Error::domain("exponent must be at least 1"));
    }
    let prefix = ThueMorsePrefix::new(n)?;
    let (evil, odious) = (1..=prefix.len()).partition(|&i| prefix.bits[i] == 0);
    Ok(EvilOdious { evil, odious })
}

/// `(2τ_1 - 1, …, 2τ_{2^n} - 1)`; entry `j` (0-based) is `L_{2^n}[j, j]`.
pub fn l_diag_via_thue(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::domain("exponent must be at least 1"));
    }
    let prefix = ThueMorsePrefix::new(n)?;
    Ok(prefix.bits().iter().map(|&t| 2.0 * t as f64 - 1.0).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportClass {
    /// All mass on evil positions (`τ = 0`, diagonal `-1`).
    EvilSupport,
    /// All mass on odious positions (`τ = 1`, diagonal `+1`).
    OdiousSupport,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupportReport {
    pub class: SupportClass,
    /// `|xᵀ L x|`.
    pub value: f64,
    pub evil_mass: f64,
    pub odious_mass: f64,
}

/// Classifies a real unit vector by where its mass sits relative to the
/// Thue–Morse classes.
///
/// `xᵀLx = odious_mass - evil_mass`, so `|xᵀLx| = 1` exactly when one class
/// carries everything. The class is decided from the value (within
/// [`PIPELINE_TOL`] of one), which keeps classification and value consistent.
pub fn real_support_criterion(x: &[f64]) -> Result<SupportReport> {
    if x.len() < 2 || !x.len().is_power_of_two() {
        return Err(Error::domain(format!(
            "length {} is not a power of two >= 2",
            x.len()
        )));
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::domain("vector has non-finite entries"));
    }
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > PIPELINE_TOL {
        return Err(Error::domain(format!("vector norm {norm} is not 1")));
    }
    let (mut evil_mass, mut odious_mass) = (0.0, 0.0);
    for (j, v) in x.iter().enumerate() {
        // Position j + 1 has τ = parity of popcount(j).
        if j.count_ones() % 2 == 0 {
            evil_mass += v * v;
        } else {
            odious_mass += v * v;
        }
    }
    let signed = odious_mass - evil_mass;
    let value = signed.abs();
    let class = if (value - 1.0).abs() <= PIPELINE_TOL {
        if signed < 0.0 {
            SupportClass::EvilSupport
        } else {
            SupportClass::OdiousSupport
        }
    } else {
        SupportClass::Mixed
    };
    Ok(SupportReport { class, value, evil_mass, odious_mass })
}

/// Real parts of `amplitudes`, rejecting any entry with imaginary part above
/// `tol`.
pub fn real_part(amplitudes: &[num_complex::Complex64], tol: f64) -> Result<Vec<f64>> {
    amplitudes
        .iter()
        .map(|a| {
            if a.im.abs() > tol {
                Err(Error::domain("vector is not real"))
            } else {
                Ok(a.re)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn tau_examples() {
        assert_eq!(tau(1).unwrap(), 0);
        assert_eq!(tau(2).unwrap(), 1);
        let first: Vec<u8> = (1..=8).map(|i| tau(i).unwrap()).collect();
        assert_eq!(first, vec![0, 1, 1, 0, 1, 0, 0, 1]);
        assert!(tau(0).is_err());
        assert_eq!(ThueMorsePrefix::new(3).unwrap().bits(), &[0, 1, 1, 0, 1, 0, 0, 1]);
        let p = ThueMorsePrefix::new(2).unwrap();
        assert_eq!((p.get(0), p.get(1), p.get(4), p.get(5)), (None, Some(0), Some(0), None));
    }

    #[test]
    fn block_negation_examples() {
        assert!(block_negation_check(1).unwrap());
        assert!(block_negation_check(2).unwrap());
        assert!(block_negation_check(16).unwrap());
        assert!(block_negation_check(0).is_err());
    }

    #[test]
    fn evil_odious_examples() {
        let eo = evil_odious_indices(2).unwrap();
        assert_eq!((eo.evil, eo.odious), (vec![1, 4], vec![2, 3]));
        let eo = evil_odious_indices(3).unwrap();
        assert_eq!((eo.evil, eo.odious), (vec![1, 4, 6, 7], vec![2, 3, 5, 8]));
    }

    #[test]
    fn l_diag_examples() {
        assert_eq!(l_diag_via_thue(1).unwrap(), vec![-1.0, 1.0]);
        assert_eq!(l_diag_via_thue(2).unwrap(), vec![-1.0, 1.0, 1.0, -1.0]);
        assert_eq!(
            l_diag_via_thue(3).unwrap(),
            vec![-1.0, 1.0, 1.0, -1.0, 1.0, -1.0, -1.0, 1.0]
        );
    }

    #[test]
    fn support_examples() {
        let r = real_support_criterion(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!((r.class, r.value), (SupportClass::EvilSupport, 1.0));
        let h = FRAC_1_SQRT_2;
        let r = real_support_criterion(&[0.0, h, h, 0.0]).unwrap();
        assert_eq!(r.class, SupportClass::OdiousSupport);
        assert!((r.value - 1.0).abs() < 1e-12);
        let r = real_support_criterion(&[h, h, 0.0, 0.0]).unwrap();
        assert_eq!(r.class, SupportClass::Mixed);
        assert!(r.value < 1e-12);
    }

    #[test]
    fn support_rejects_bad_input() {
        assert!(real_support_criterion(&[1.0, 1.0]).is_err());
        assert!(real_support_criterion(&[1.0, 0.0, 0.0]).is_err());
        assert!(real_support_criterion(&[f64::NAN, 0.0]).is_err());
        let z = [num_complex::Complex64::new(0.0, 1.0)];
        assert!(real_part(&z, 1e-12).is_err());
    }
}
