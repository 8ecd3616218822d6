//! When x^2 + lambda^2 = 0 for some eigenvalue pair +-lambda of J, the two
//! mapped eigenvalues of A = J + x*E collide at 0 and the zero is defective:
//! algebraic multiplicity 2, a single eigenvector, one genuine Jordan chain.
//! Choosing x = i * lambda makes the collision exact in floating point,
//! because (i*lambda)^2 negates both components of lambda^2 bitwise.

use num_complex::Complex64;
use periodiag::eigvec::spectral_chains;
use periodiag::matrix::TridiagonalMatrix;
use periodiag::oracle::{chain_residual, dense_eigenvalues};
use periodiag::spectra::{map_to_alternating, zero_diag_spectrum};
use periodiag::{DEFAULT_CHAIN_TOL, DEFAULT_ROOT_TOL};

fn fmt(z: Complex64) -> String {
    format!("{:.4}{:+.4}i", z.re, z.im)
}

fn main() {
    let j = TridiagonalMatrix::make_zero_diag(
        vec![Complex64::new(1.0, 0.0); 4],
        vec![
            Complex64::new(0.5, 0.25),
            Complex64::new(-1.0, 0.5),
            Complex64::new(2.0, -0.5),
            Complex64::new(0.75, 0.0),
        ],
    )
    .unwrap();

    let ps = zero_diag_spectrum(&j, DEFAULT_ROOT_TOL).unwrap();
    let (lambda, r) = ps.pairs()[0];
    let x = Complex64::i() * lambda;
    println!("picked lambda = {} and set x = i*lambda = {}", fmt(lambda), fmt(x));

    let mapped = map_to_alternating(&ps, x);
    println!("\nmapped spectrum of A = J + x*E:");
    for e in mapped.entries() {
        println!("  {} with multiplicity {}", fmt(e.value), e.mult);
    }
    let zero_mult: usize = mapped
        .entries()
        .iter()
        .filter(|e| e.value == Complex64::ZERO)
        .map(|e| e.mult)
        .sum();
    assert_eq!(zero_mult, 2 * r, "the collision doubles the multiplicity");

    // The chain at the defective zero comes from the formulas
    // v_0 = u^+ + i*u^- and v_1 = (u^+ - i*u^-) / (2*lambda).
    let a = TridiagonalMatrix::make_alternating(&j, x).unwrap();
    let chains = spectral_chains(&a, DEFAULT_ROOT_TOL, DEFAULT_CHAIN_TOL).unwrap();
    for ch in &chains {
        println!(
            "chain at {:>17}: length {}, worst residual {:.2e}",
            fmt(ch.eigenvalue()),
            ch.len(),
            chain_residual(&a, ch.eigenvalue(), ch.vectors())
        );
    }

    // A dense eigensolver sees the defective zero only as a cluster of
    // radius about sqrt(eps); the cluster mean is far more accurate than
    // its members, which is why the corpus checks the sum, not the values.
    let mut eigs = dense_eigenvalues(&a.materialize_dense()).unwrap();
    eigs.sort_by(|u, v| u.norm().total_cmp(&v.norm()));
    let moduli: Vec<String> = eigs.iter().take(2 * r).map(|z| format!("{:.2e}", z.norm())).collect();
    let sum: Complex64 = eigs.iter().take(2 * r).sum();
    println!("\ndense near-zero cluster moduli: [{}]", moduli.join(", "));
    println!("cluster sum: {:.2e} (orders of magnitude below the members)", sum.norm());
}
