//! Eigenvectors of A = J + x*E assembled from eigenvectors of J. For a
//! simple pair +-lambda of J, the eigenvector of A at mu = sqrt(lambda^2 +
//! x^2) is v = u^+ + beta * u^- with beta = x / (lambda + mu), where u^+-
//! are the eigenvectors of J at +-lambda. No linear system involving A is
//! ever solved.

use num_complex::Complex64;
use periodiag::eigvec::{
    eigenvector_a_generic, eigenvector_j, jordan_chain_j, reflect_chain, Sign,
};
use periodiag::matrix::TridiagonalMatrix;
use periodiag::oracle::chain_residual;
use periodiag::spectra::zero_diag_spectrum;
use periodiag::{DEFAULT_CHAIN_TOL, DEFAULT_ROOT_TOL};

fn fmt(z: Complex64) -> String {
    format!("{:.4}{:+.4}i", z.re, z.im)
}

fn main() {
    // A 5x5 matrix with entries of both signs; its spectrum is {0, +-l1,
    // +-l2} with all pairs simple.
    let j = TridiagonalMatrix::make_zero_diag(
        vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(-0.5, 0.5),
            Complex64::new(2.0, 0.0),
            Complex64::new(0.25, -1.0),
        ],
        vec![
            Complex64::new(0.5, -0.5),
            Complex64::new(1.5, 0.0),
            Complex64::new(-1.0, 0.25),
            Complex64::new(0.75, 0.5),
        ],
    )
    .unwrap();
    let x = Complex64::new(0.8, 0.3);
    let a = TridiagonalMatrix::make_alternating(&j, x).unwrap();

    let ps = zero_diag_spectrum(&j, DEFAULT_ROOT_TOL).unwrap();
    for &(lambda, _) in ps.pairs() {
        // One forward recurrence per sign of lambda. The reflection theorem
        // would even give u^- from u^+ for free; see the reflected chain
        // below.
        let u_plus = eigenvector_j(&j, lambda, DEFAULT_CHAIN_TOL).unwrap();
        let u_minus = eigenvector_j(&j, -lambda, DEFAULT_CHAIN_TOL).unwrap();

        for sign in [Sign::Plus, Sign::Minus] {
            let (mu, v) = eigenvector_a_generic(&u_plus, &u_minus, lambda, x, sign).unwrap();
            let residual = chain_residual(&a, mu, &[v]);
            println!(
                "lambda = {:>17}: mu = {:>17}, residual of the assembled eigenvector {:.2e}",
                fmt(lambda),
                fmt(mu),
                residual
            );
        }
    }

    // The same construction never needs the second recurrence: reflecting
    // the chain at lambda yields the chain at -lambda exactly.
    let lambda = ps.pairs()[0].0;
    let chain = jordan_chain_j(&j, lambda, 1, DEFAULT_CHAIN_TOL).unwrap();
    let reflected = reflect_chain(&chain);
    println!(
        "\nreflected eigenvector residual at {}: {:.2e}",
        fmt(reflected.eigenvalue()),
        chain_residual(&j, reflected.eigenvalue(), reflected.vectors())
    );
}
