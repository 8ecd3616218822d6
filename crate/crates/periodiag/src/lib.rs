//! Closed-form spectral theory for complex tridiagonal matrices with a
//! two-periodic main diagonal, plus the numerical plumbing to exercise it.
//!
//! An irreducible tridiagonal matrix `J` with zero main diagonal has a
//! spectrum that is symmetric about the origin. Perturbing the diagonal to
//! `(x, -x, x, ...)` or more generally `(x, y, x, y, ...)` moves every
//! eigenvalue along an explicit formula, and the eigenvectors and first
//! generalized eigenvectors of the perturbed matrix are explicit linear
//! combinations of the unperturbed ones. This crate implements those mappings
//! and everything needed to validate them numerically:
//!
//! * [`matrix`]: the matrix families and the sign involution,
//! * [`charpoly`]: characteristic polynomials by three-term recurrence,
//! * [`roots`]: polynomial root finding and clustering into multiplicities,
//! * [`spectra`]: the closed-form spectrum and determinant mappings,
//! * [`eigvec`]: Jordan chains, reflected chains and left chains,
//! * [`oracle`]: an independent dense eigensolver and matching utilities,
//! * [`cli`]: the command-line front end and the verification corpus,
//! * [`jsonio`]: byte-stable JSON readers and writers for all of the above.
//!
//! The fastest way to get a feel for the crate is the `examples/` directory;
//! each example is runnable with `cargo run -p periodiag --example <name>`:
//!
//! * `nilpotent_five`: a 5x5 matrix whose only eigenvalue is 0, its full
//!   Jordan chain, and what the diagonal perturbation does to it,
//! * `two_periodic_spectrum`: closed-form spectrum of a random `B` against a
//!   dense QR eigensolver,
//! * `alternating_chains`: eigenvector formulas for `A = J + x*E`,
//! * `degenerate_zero`: the defective eigenvalue 0 arising at `x = i*lambda`,
//! * `sylvester_kac`: the classical integer spectrum as a sanity check,
//! * `determinants`: recurrence vs closed-form vs LU determinants,
//! * `left_eigenvectors`: left chains via the diagonal similarity,
//! * `verify_corpus`: the randomized self-check the CLI `verify` command runs.
//!
//! ```
//! use num_complex::Complex64;
//! use periodiag::matrix::TridiagonalMatrix;
//! use periodiag::spectra::{self, zero_diag_spectrum};
//!
//! // J = [[0, 1], [1, 0]] has eigenvalues -1 and 1; with diagonal (1, 2) the
//! // eigenvalues become (3 +- sqrt(5)) / 2.
//! let j = TridiagonalMatrix::make_zero_diag(
//!     vec![Complex64::ONE],
//!     vec![Complex64::ONE],
//! ).unwrap();
//! let ps = zero_diag_spectrum(&j, 1e-12).unwrap();
//! let p = periodiag::matrix::PerturbationParams::new(
//!     Complex64::new(1.0, 0.0),
//!     Complex64::new(2.0, 0.0),
//! ).unwrap();
//! let spectrum = spectra::map_to_two_periodic(&ps, &p);
//! let got: Vec<f64> = spectrum.entries().iter().map(|e| e.value.re).collect();
//! let want = [(3.0 - 5.0_f64.sqrt()) / 2.0, (3.0 + 5.0_f64.sqrt()) / 2.0];
//! assert!((got[0] - want[0]).abs() < 1e-12 && (got[1] - want[1]).abs() < 1e-12);
//! ```

pub mod charpoly;
pub mod cli;
pub mod eigvec;
pub mod jsonio;
pub mod matrix;
pub mod oracle;
pub mod roots;
pub mod spectra;

use thiserror::Error;

/// Default residual gate for polynomial root acceptance, relative to the
/// coefficient-scale bound at the root.
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

/// Default residual gate for eigenvector and Jordan-chain acceptance,
/// relative to `frobenius_norm(T) * norm(v)`.
pub const DEFAULT_CHAIN_TOL: f64 = 1e-8;

/// Any error the crate can produce, for callers that drive whole pipelines.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Matrix(#[from] matrix::MatrixError),
    #[error(transparent)]
    CharPoly(#[from] charpoly::CharPolyError),
    #[error(transparent)]
    Roots(#[from] roots::RootsError),
    #[error(transparent)]
    Spectra(#[from] spectra::SpectraError),
    #[error(transparent)]
    Eigvec(#[from] eigvec::EigvecError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error(transparent)]
    Json(#[from] jsonio::JsonError),
}
