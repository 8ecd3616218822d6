//! Left eigenvectors and left chains. An irreducible tridiagonal matrix is
//! diagonally similar to its transpose via d_1 = 1, d_{k+1} = d_k * a_k / c_k,
//! so every right chain turns into a left chain by dividing componentwise
//! by d. One recurrence serves both sides.

use num_complex::Complex64;
use periodiag::eigvec::{left_chain, spectral_chains, LeftScaling};
use periodiag::matrix::{PerturbationParams, TridiagonalMatrix};
use periodiag::oracle::left_chain_residual;
use periodiag::{DEFAULT_CHAIN_TOL, DEFAULT_ROOT_TOL};

fn fmt(z: Complex64) -> String {
    format!("{:.4}{:+.4}i", z.re, z.im)
}

fn main() {
    let j = TridiagonalMatrix::make_zero_diag(
        vec![
            Complex64::new(1.0, 0.5),
            Complex64::new(-0.75, 0.0),
            Complex64::new(0.5, -1.0),
            Complex64::new(2.0, 0.25),
        ],
        vec![
            Complex64::new(0.5, 0.0),
            Complex64::new(1.25, -0.5),
            Complex64::new(-1.5, 0.75),
            Complex64::new(0.25, 1.0),
        ],
    )
    .unwrap();
    let p = PerturbationParams::new(
        Complex64::new(0.4, 0.9),
        Complex64::new(-0.8, 0.1),
    )
    .unwrap();
    let b = TridiagonalMatrix::make_two_periodic(&j, &p).unwrap();

    let scaling = LeftScaling::new(&b);
    let entries: Vec<String> = scaling.d().iter().map(|z| fmt(*z)).collect();
    println!("similarity diagonal d: [{}]\n", entries.join(", "));

    for ch in spectral_chains(&b, DEFAULT_ROOT_TOL, DEFAULT_CHAIN_TOL).unwrap() {
        let lc = left_chain(&b, &ch);
        println!(
            "mu = {:>17}: left chain of length {}, residual against B^T {:.2e}",
            fmt(lc.eigenvalue()),
            lc.len(),
            left_chain_residual(&b, lc.eigenvalue(), lc.vectors())
        );
    }
}
