//! Three determinant routes that must agree: the three-term recurrence on
//! the stored diagonals, the closed forms (entries product for even-order
//! zero-diagonal matrices, spectral products for the perturbed families),
//! and LU factorization of the materialized matrix.

use num_complex::Complex64;
use periodiag::charpoly::determinant;
use periodiag::cli::random_zero_diag;
use periodiag::matrix::{PerturbationParams, TridiagonalMatrix};
use periodiag::oracle::dense_determinant;
use periodiag::spectra::{det_alternating, det_j_even, det_two_periodic, zero_diag_spectrum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fmt(z: Complex64) -> String {
    format!("{:.10}{:+.10}i", z.re, z.im)
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let j = random_zero_diag(&mut rng, 6);
    let ps = zero_diag_spectrum(&j, periodiag::DEFAULT_ROOT_TOL).unwrap();

    // Even-order zero diagonal: det J = (-1)^(n/2) * product of a_k * c_k
    // over odd k. No spectrum needed, and the recurrence agrees exactly.
    println!("J (6x6, zero diagonal):");
    println!("  recurrence      {}", fmt(determinant(&j)));
    println!("  entries product {}", fmt(det_j_even(&j).unwrap()));
    println!("  dense LU        {}", fmt(dense_determinant(&j.materialize_dense())));

    // Alternating diagonal: det A = product over pairs of (x^2 + lambda^2),
    // with a leftover x factor only at odd orders.
    let x = Complex64::new(0.6, -0.9);
    let a = TridiagonalMatrix::make_alternating(&j, x).unwrap();
    println!("\nA = J + x*E with x = {}:", fmt(x));
    println!("  recurrence      {}", fmt(determinant(&a)));
    println!("  spectral product{}", fmt(det_alternating(&ps, x)));
    println!("  dense LU        {}", fmt(dense_determinant(&a.materialize_dense())));

    // Two-periodic diagonal: the same product with x^2 replaced by x*y
    // (each pair contributes lambda^2 + ((x-y)/2)^2 shifted by (x+y)/2,
    // which collapses to x*y + lambda^2).
    let p = PerturbationParams::new(x, Complex64::new(-1.2, 0.4)).unwrap();
    let b = TridiagonalMatrix::make_two_periodic(&j, &p).unwrap();
    println!("\nB = J + diag(x, y, ...) with y = {}:", fmt(p.y));
    println!("  recurrence      {}", fmt(determinant(&b)));
    println!("  spectral product{}", fmt(det_two_periodic(&ps, &p)));
    println!("  dense LU        {}", fmt(dense_determinant(&b.materialize_dense())));
}
