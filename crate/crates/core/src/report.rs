//! Measurement reports in human-readable and flat key=value form.

use std::io::Write;

use num_complex::Complex64;

use crate::entanglement::{f_value, is_product, mw_measure, schmidt, ProductCheck, SchmidtData};
use crate::error::Result;
use crate::state::{PureState, PIPELINE_TOL};

/// Schmidt spectra and the product verdict are only computed up to this size.
pub const MAX_SCHMIDT_QUBITS: usize = 12;
/// Second-Schmidt-coefficient threshold for the product verdict.
pub const PRODUCT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRecord {
    /// How the state was obtained, e.g. `bell(n=3,k=1)` or `file:psi.txt`.
    pub descriptor: String,
    pub n: usize,
    pub q: f64,
    pub f: Complex64,
    /// One entry per contiguous cut; empty above [`MAX_SCHMIDT_QUBITS`].
    pub schmidt: Vec<SchmidtData>,
    /// `None` above [`MAX_SCHMIDT_QUBITS`].
    pub product: Option<ProductCheck>,
    /// `|F| = 1`, which forces qubits 1 and n to be maximally mixed.
    pub witness_maximal: bool,
    pub mw_maximal: bool,
}

pub fn measure(s: &PureState, descriptor: impl Into<String>) -> Result<ReportRecord> {
    let q = mw_measure(s)?;
    let f = f_value(s)?;
    let (schmidt, product) = if s.n() <= MAX_SCHMIDT_QUBITS {
        let spectra = (1..s.n()).map(|cut| schmidt(s, cut)).collect::<Result<Vec<_>>>()?;
        (spectra, Some(is_product(s, PRODUCT_TOL)?))
    } else {
        (Vec::new(), None)
    };
    Ok(ReportRecord {
        descriptor: descriptor.into(),
        n: s.n(),
        q,
        f,
        schmidt,
        product,
        witness_maximal: (f.norm() - 1.0).abs() <= PIPELINE_TOL,
        mw_maximal: (q - 1.0).abs() <= PIPELINE_TOL,
    })
}

/// 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn escape(value: &str) -> String {
    value
        .replace('%', "%25")
        .replace(' ', "%20")
        .replace('=', "%3D")
        .replace('\t', "%09")
        .replace('\n', "%0A")
}

fn join(values: &[f64]) -> String {
    values.iter().map(|&c| fmt_f64(c)).collect::<Vec<_>>().join(",")
}

impl ReportRecord {
    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "state:    {}", self.descriptor)?;
        writeln!(out, "qubits:   {}", self.n)?;
        writeln!(out, "Q:        {}", fmt_f64(self.q))?;
        writeln!(
            out,
            "F:        {} {:+}i  (|F| = {})",
            fmt_f64(self.f.re),
            self.f.im,
            fmt_f64(self.f.norm())
        )?;
        match self.product {
            Some(ProductCheck { is_product: true, cut: Some(cut) }) => {
                writeln!(out, "product:  yes (cut after qubit {cut})")?
            }
            Some(_) => writeln!(out, "product:  no")?,
            None => writeln!(out, "product:  skipped (n > {MAX_SCHMIDT_QUBITS})")?,
        }
        writeln!(out, "|F| = 1:  {}", if self.witness_maximal { "yes" } else { "no" })?;
        writeln!(out, "Q = 1:    {}", if self.mw_maximal { "yes" } else { "no" })?;
        for data in &self.schmidt {
            writeln!(out, "schmidt cut {}: {}", data.cut, join(&data.coefficients))?;
        }
        Ok(())
    }

    /// One `key=value` record per line: a `state` record followed by one
    /// `schmidt` record per cut.
    pub fn write_kv<W: Write>(&self, mut out: W) -> Result<()> {
        let (product, cut) = match self.product {
            Some(p) => (
                p.is_product.to_string(),
                p.cut.map_or_else(|| "none".to_string(), |c| c.to_string()),
            ),
            None => ("skipped".to_string(), "none".to_string()),
        };
        writeln!(
            out,
            "record=state descriptor={} n={} q={} f_re={} f_im={} f_abs={} product={} product_cut={} witness_maximal={} mw_maximal={}",
            escape(&self.descriptor),
            self.n,
            fmt_f64(self.q),
            fmt_f64(self.f.re),
            fmt_f64(self.f.im),
            fmt_f64(self.f.norm()),
            product,
            cut,
            self.witness_maximal,
            self.mw_maximal,
        )?;
        for data in &self.schmidt {
            writeln!(
                out,
                "record=schmidt cut={} rank={} coefficients={}",
                data.cut,
                data.rank(),
                join(&data.coefficients)
            )?;
        }
        Ok(())
    }
}

/// Parses one `key=value` line into pairs, undoing the value escaping.
pub fn parse_kv_line(line: &str) -> Vec<(String, String)> {
    line.split_whitespace()
        .filter_map(|field| field.split_once('='))
        .map(|(k, v)| {
            let v = v
                .replace("%0A", "\n")
                .replace("%09", "\t")
                .replace("%3D", "=")
                .replace("%20", " ")
                .replace("%25", "%");
            (k.to_string(), v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entanglement::ghz_state;
    use crate::state::basis_state;

    #[test]
    fn ghz_report() {
        let r = measure(&ghz_state(4).unwrap(), "ghz(n=4)").unwrap();
        assert!((r.q - 1.0).abs() < PIPELINE_TOL);
        assert!(r.f.norm() < 1e-12);
        assert_eq!(r.schmidt.len(), 3);
        assert!(!r.product.unwrap().is_product);
        assert!(r.mw_maximal && !r.witness_maximal);
    }

    #[test]
    fn kv_lines_parse_back() {
        let r = measure(&basis_state(4, 0).unwrap(), "file:my state.txt").unwrap();
        let mut buf = Vec::new();
        r.write_kv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let first: Vec<_> = parse_kv_line(text.lines().next().unwrap());
        let get = |k: &str| first.iter().find(|(key, _)| key == k).unwrap().1.clone();
        assert_eq!(get("descriptor"), "file:my state.txt");
        assert_eq!(get("product"), "true");
        assert_eq!(get("product_cut"), "1");
        assert_eq!(get("q").parse::<f64>().unwrap(), 0.0);
        assert_eq!(text.lines().count(), 4);
    }

    #[test]
    fn large_states_skip_schmidt() {
        let r = measure(&basis_state(13, 0).unwrap(), "basis").unwrap();
        assert!(r.schmidt.is_empty());
        assert_eq!(r.product, None);
    }
}
