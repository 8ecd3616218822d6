//! Byte-stable JSON for every data shape the CLI speaks.
//!
//! Writers are hand-rolled rather than serde-derived: field order is fixed,
//! every float prints with 17 significant digits via `{:.16e}` (enough to
//! round-trip an `f64` exactly), negative zero is flattened to zero, and no
//! whitespace is emitted. Identical inputs therefore serialize to identical
//! bytes, which the reproducibility tests take literally. Readers go
//! through serde mirror documents, since input formatting is free.
//!
//! Complex numbers appear as two-element arrays `[re, im]` everywhere.

use crate::charpoly::CharPoly;
use crate::eigvec::JordanChain;
use crate::matrix::TridiagonalMatrix;
use crate::oracle::ResidualReport;
use crate::roots::Spectrum;
use num_complex::Complex64;
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("matrix arrays are inconsistent: n = {n}, sub = {sub}, diag = {diag}, sup = {sup}")]
    ShapeMismatch { n: usize, sub: usize, diag: usize, sup: usize },
    #[error(transparent)]
    Matrix(#[from] crate::matrix::MatrixError),
    #[error(transparent)]
    CharPoly(#[from] crate::charpoly::CharPolyError),
}

/// One float with 17 significant digits; negative zero prints as zero so
/// that numerically equal values cannot serialize differently.
fn fmt_f64(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.16e}")
}

fn fmt_complex(z: Complex64) -> String {
    format!("[{},{}]", fmt_f64(z.re), fmt_f64(z.im))
}

fn fmt_complex_list(zs: &[Complex64]) -> String {
    let parts: Vec<String> = zs.iter().map(|&z| fmt_complex(z)).collect();
    format!("[{}]", parts.join(","))
}

pub fn write_matrix(t: &TridiagonalMatrix) -> String {
    format!(
        "{{\"n\":{},\"sub\":{},\"diag\":{},\"sup\":{}}}",
        t.n(),
        fmt_complex_list(t.sub()),
        fmt_complex_list(t.diag()),
        fmt_complex_list(t.sup())
    )
}

pub fn write_poly(p: &CharPoly) -> String {
    format!("{{\"coeffs\":{}}}", fmt_complex_list(p.coeffs()))
}

pub fn write_spectrum(s: &Spectrum) -> String {
    let entries: Vec<String> = s
        .entries()
        .iter()
        .map(|e| format!("{{\"value\":{},\"mult\":{}}}", fmt_complex(e.value), e.mult))
        .collect();
    format!("{{\"entries\":[{}]}}", entries.join(","))
}

pub fn write_chain(chain: &JordanChain) -> String {
    let vectors: Vec<String> =
        chain.vectors().iter().map(|v| fmt_complex_list(v)).collect();
    format!(
        "{{\"eigenvalue\":{},\"vectors\":[{}]}}",
        fmt_complex(chain.eigenvalue()),
        vectors.join(",")
    )
}

pub fn write_chains(chains: &[JordanChain]) -> String {
    let parts: Vec<String> = chains.iter().map(write_chain).collect();
    format!("{{\"chains\":[{}]}}", parts.join(","))
}

pub fn write_det(det: Complex64) -> String {
    format!("{{\"det\":{}}}", fmt_complex(det))
}

pub fn write_report(r: &ResidualReport) -> String {
    format!(
        "{{\"max_eigen_residual\":{},\"max_chain_residual\":{},\
         \"spectrum_match_distance\":{},\"passed\":{}}}",
        fmt_f64(r.max_eigen_residual),
        fmt_f64(r.max_chain_residual),
        fmt_f64(r.spectrum_match_distance),
        r.passed
    )
}

#[derive(Deserialize)]
struct MatrixDoc {
    n: usize,
    sub: Vec<[f64; 2]>,
    diag: Vec<[f64; 2]>,
    sup: Vec<[f64; 2]>,
}

fn to_complex(raw: &[[f64; 2]]) -> Vec<Complex64> {
    raw.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
}

pub fn parse_matrix(text: &str) -> Result<TridiagonalMatrix, JsonError> {
    let doc: MatrixDoc = serde_json::from_str(text)?;
    if doc.diag.len() != doc.n || doc.sub.len() + 1 != doc.n || doc.sup.len() + 1 != doc.n {
        return Err(JsonError::ShapeMismatch {
            n: doc.n,
            sub: doc.sub.len(),
            diag: doc.diag.len(),
            sup: doc.sup.len(),
        });
    }
    Ok(TridiagonalMatrix::new(
        to_complex(&doc.sub),
        to_complex(&doc.diag),
        to_complex(&doc.sup),
    )?)
}

#[derive(Deserialize)]
struct PolyDoc {
    coeffs: Vec<[f64; 2]>,
}

pub fn parse_poly(text: &str) -> Result<CharPoly, JsonError> {
    let doc: PolyDoc = serde_json::from_str(text)?;
    Ok(CharPoly::from_coeffs(to_complex(&doc.coeffs))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::SpectrumEntry;
    use crate::test_support::{c, ones};

    #[test]
    fn float_formatting_round_trips_exactly() {
        for &v in &[0.1, 1.0 / 3.0, -2.5e-308, 1.7976931348623157e308, 42.0, -0.0] {
            let printed = fmt_f64(v);
            let back: f64 = printed.parse().unwrap();
            let want = if v == 0.0 { 0.0 } else { v };
            assert_eq!(back.to_bits(), want.to_bits(), "{v} printed as {printed}");
        }
    }

    #[test]
    fn negative_zero_never_appears() {
        let s = fmt_complex(c(-0.0, -0.0));
        assert!(!s.contains('-'), "negative zero leaked into {s}");
    }

    #[test]
    fn matrix_bytes_are_pinned() {
        let t = TridiagonalMatrix::make_zero_diag(ones(1), ones(1)).unwrap();
        assert_eq!(
            write_matrix(&t),
            "{\"n\":2,\
             \"sub\":[[1.0000000000000000e0,0.0000000000000000e0]],\
             \"diag\":[[0.0000000000000000e0,0.0000000000000000e0],\
             [0.0000000000000000e0,0.0000000000000000e0]],\
             \"sup\":[[1.0000000000000000e0,0.0000000000000000e0]]}"
        );
    }

    #[test]
    fn matrix_round_trips_bitwise() {
        let t = TridiagonalMatrix::new(
            vec![c(0.25, -1.5), c(1.0 / 3.0, 2e-13)],
            vec![c(0.1, 0.2), c(-0.0, 7.0), c(3.0, 0.0)],
            vec![c(-2.0, 1e300), c(5e-300, -0.125)],
        )
        .unwrap();
        let back = parse_matrix(&write_matrix(&t)).unwrap();
        // Negative zero flattens on output, so compare via another write.
        assert_eq!(write_matrix(&back), write_matrix(&t));
    }

    #[test]
    fn spectrum_bytes_are_pinned() {
        let s = Spectrum::new(vec![
            SpectrumEntry { value: c(-1.0, 0.0), mult: 2 },
            SpectrumEntry { value: c(1.0, 0.5), mult: 1 },
        ]);
        assert_eq!(
            write_spectrum(&s),
            "{\"entries\":[\
             {\"value\":[-1.0000000000000000e0,0.0000000000000000e0],\"mult\":2},\
             {\"value\":[1.0000000000000000e0,5.0000000000000000e-1],\"mult\":1}]}"
        );
    }

    #[test]
    fn det_and_report_bytes_are_pinned() {
        assert_eq!(
            write_det(c(1.0, -2.0)),
            "{\"det\":[1.0000000000000000e0,-2.0000000000000000e0]}"
        );
        let r = ResidualReport::empty_pass();
        assert_eq!(
            write_report(&r),
            "{\"max_eigen_residual\":0.0000000000000000e0,\
             \"max_chain_residual\":0.0000000000000000e0,\
             \"spectrum_match_distance\":0.0000000000000000e0,\
             \"passed\":true}"
        );
    }

    #[test]
    fn chains_serialize_with_fixed_fields() {
        let chain = JordanChain::new(
            c(0.0, 0.0),
            vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(2.0, 0.0)]],
            2,
        );
        assert_eq!(
            write_chains(&[chain]),
            "{\"chains\":[{\"eigenvalue\":[0.0000000000000000e0,0.0000000000000000e0],\
             \"vectors\":[[[1.0000000000000000e0,0.0000000000000000e0],\
             [0.0000000000000000e0,0.0000000000000000e0]],\
             [[0.0000000000000000e0,0.0000000000000000e0],\
             [2.0000000000000000e0,0.0000000000000000e0]]]}]}"
        );
    }

    #[test]
    fn poly_round_trips() {
        let p = CharPoly::from_coeffs(vec![c(0.5, -0.5), c(0.0, 2.0), c(1.0, 0.0)]).unwrap();
        let back = parse_poly(&write_poly(&p)).unwrap();
        assert_eq!(back.coeffs(), p.coeffs());
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        match parse_matrix("{\"n\": oops") {
            Err(JsonError::Parse(_)) => {}
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn inconsistent_lengths_are_rejected() {
        let text = "{\"n\":3,\"sub\":[[1.0,0.0]],\"diag\":[[0.0,0.0],[0.0,0.0],[0.0,0.0]],\
                    \"sup\":[[1.0,0.0],[1.0,0.0],[1.0,0.0]]}";
        match parse_matrix(text) {
            Err(JsonError::ShapeMismatch { n: 3, sub: 1, diag: 3, sup: 3 }) => {}
            other => panic!("expected ShapeMismatch, got {other:?}"),
        }
    }

    #[test]
    fn non_monic_poly_is_rejected() {
        match parse_poly("{\"coeffs\":[[1.0,0.0],[2.0,0.0]]}") {
            Err(JsonError::CharPoly(_)) => {}
            other => panic!("expected a polynomial error, got {other:?}"),
        }
    }
}
