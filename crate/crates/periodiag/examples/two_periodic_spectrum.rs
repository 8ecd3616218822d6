//! Spectrum of B = J + diag(x, y, x, y, ...) without touching B: solve the
//! zero-diagonal problem once, then move every eigenvalue along
//! mu = +- sqrt(lambda^2 + ((x-y)/2)^2) + (x+y)/2. A dense QR eigensolver
//! on the materialized B confirms the result.

use num_complex::Complex64;
use periodiag::cli::random_zero_diag;
use periodiag::matrix::{PerturbationParams, TridiagonalMatrix};
use periodiag::oracle::{dense_eigen, match_spectra};
use periodiag::spectra::{map_to_two_periodic, zero_diag_spectrum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fmt(z: Complex64) -> String {
    format!("{:.6}{:+.6}i", z.re, z.im)
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let j = random_zero_diag(&mut rng, 8);
    let p = PerturbationParams::new(
        Complex64::new(0.7, -0.3),
        Complex64::new(-0.2, 1.1),
    )
    .unwrap();

    let ps = zero_diag_spectrum(&j, periodiag::DEFAULT_ROOT_TOL).unwrap();
    println!("paired spectrum of the random 8x8 zero-diagonal J:");
    for (lam, r) in ps.pairs() {
        println!("  +-{} with multiplicity {r} each", fmt(*lam));
    }

    let mapped = map_to_two_periodic(&ps, &p);
    println!("\nmapped spectrum of B with x = {}, y = {}:", fmt(p.x), fmt(p.y));
    for e in mapped.entries() {
        println!("  {} with multiplicity {}", fmt(e.value), e.mult);
    }

    let b = TridiagonalMatrix::make_two_periodic(&j, &p).unwrap();
    let oracle = dense_eigen(&b.materialize_dense()).unwrap();
    let distance = match_spectra(&mapped, &oracle).unwrap();
    println!("\noptimal matching distance to the dense eigensolver: {distance:.2e}");
}
