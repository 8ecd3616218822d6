//! The classical (N+1)x(N+1) matrix with superdiagonal 1..N and subdiagonal
//! N..1 has the integer spectrum {-N, -N+2, ..., N}. It is zero-diagonal and
//! irreducible, so the whole pipeline applies; the known spectrum makes it a
//! useful fixed point.

use num_complex::Complex64;
use periodiag::matrix::TridiagonalMatrix;
use periodiag::oracle::{dense_eigen, match_spectra};
use periodiag::spectra::{mapped_spectrum, zero_diag_spectrum};

fn main() {
    let big_n = 9;
    let k = TridiagonalMatrix::sylvester_kac(big_n).unwrap();

    let spectrum = mapped_spectrum(&k, periodiag::DEFAULT_ROOT_TOL).unwrap();
    let mut values: Vec<Complex64> = spectrum.expand();
    values.sort_by(|a, b| a.re.total_cmp(&b.re));

    println!("computed spectrum of the order-{} matrix:", big_n + 1);
    let shown: Vec<String> = values.iter().map(|z| format!("{:.12}", z.re)).collect();
    println!("  [{}]", shown.join(", "));

    let worst = values
        .iter()
        .enumerate()
        .map(|(i, z)| (z - Complex64::new(2.0 * i as f64 - big_n as f64, 0.0)).norm())
        .fold(0.0, f64::max);
    println!("largest deviation from the exact integers: {worst:.2e}");

    // The determinant is the product of the integers, here
    // (-9)(-7)(-5)(-3)(-1)(1)(3)(5)(7)(9) = -893025.
    let det = periodiag::charpoly::determinant(&k);
    println!("determinant: {:.6} (exact: -893025)", det.re);

    let oracle = dense_eigen(&k.materialize_dense()).unwrap();
    let ps = zero_diag_spectrum(&k, periodiag::DEFAULT_ROOT_TOL).unwrap();
    println!(
        "dense eigensolver agrees within {:.2e}; pairs found: {}",
        match_spectra(&spectrum, &oracle).unwrap(),
        ps.pairs().len()
    );
}
