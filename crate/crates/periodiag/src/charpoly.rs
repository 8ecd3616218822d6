//! Characteristic polynomials by the three-term recurrence.
//!
//! For a tridiagonal matrix the leading principal characteristic polynomials
//! satisfy
//!
//! ```text
//! chi_{k+1}(z) = (z - b_{k+1}) * chi_k(z) - a_k * c_k * chi_{k-1}(z)
//! ```
//!
//! with `chi_{-1} = 0` and `chi_0 = 1`. Two consequences drive the design
//! here. First, the polynomial depends on the off-diagonals only through the
//! products `a_k * c_k`. Second, with a zero diagonal the recurrence never
//! mixes coefficient parities: `chi_n` contains only powers of `z` with the
//! same parity as `n`, so the wrong-parity coefficients come out as exact
//! zeros and `chi_n` factors through `w = z^2`. [`parity_split`] extracts that
//! factorization, which later halves the degree handed to the root finder.
//!
//! No coefficient scaling or balancing is applied. With large entries and
//! n of 60 or more the coefficients can overflow f64 range; the intended
//! scale is n up to about 32.

use crate::matrix::TridiagonalMatrix;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CharPolyError {
    /// A coefficient of the wrong parity is too large for the input to have
    /// come from a zero-diagonal matrix.
    #[error(
        "coefficient of degree {index} has magnitude {magnitude:.3e}, above the parity gate {gate:.3e}"
    )]
    ParityViolation { index: usize, magnitude: f64, gate: f64 },
    #[error("polynomial must be monic (leading coefficient exactly 1)")]
    NotMonic,
    #[error("polynomial must have degree at least 1")]
    DegreeZero,
}

/// Relative gate for wrong-parity coefficients in [`parity_split`]. The
/// recurrence produces exact zeros there, so anything visible above rounding
/// noise means the input was not zero-diagonal.
pub const PARITY_GATE_REL: f64 = 1e-10;

/// A monic polynomial with coefficients in ascending degree order.
///
/// Produced by [`char_poly`], where the degree equals the matrix order.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    coeffs: Vec<Complex64>,
}

impl CharPoly {
    /// Wraps an ascending coefficient vector. The leading coefficient must be
    /// exactly 1.
    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Result<Self, CharPolyError> {
        if coeffs.len() < 2 {
            return Err(CharPolyError::DegreeZero);
        }
        if *coeffs.last().unwrap() != Complex64::ONE {
            return Err(CharPolyError::NotMonic);
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }
}

/// `char_poly(T)` as a polynomial in `w = z^2`.
///
/// When `odd` is false the original polynomial is `p(z^2)`; when true it is
/// `z * p(z^2)`, the forced zero eigenvalue of odd orders.
#[derive(Debug, Clone, PartialEq)]
pub struct ParityFactorization {
    reduced: Vec<Complex64>,
    odd: bool,
}

impl ParityFactorization {
    pub fn reduced(&self) -> &[Complex64] {
        &self.reduced
    }

    pub fn is_odd(&self) -> bool {
        self.odd
    }

    /// Degree of the reduced polynomial, `floor(n / 2)`.
    pub fn reduced_degree(&self) -> usize {
        self.reduced.len() - 1
    }

    /// Reassembles the original ascending coefficient vector.
    pub fn reconstruct(&self) -> Vec<Complex64> {
        let n = 2 * self.reduced_degree() + usize::from(self.odd);
        let mut out = vec![Complex64::ZERO; n + 1];
        let offset = usize::from(self.odd);
        for (j, &c) in self.reduced.iter().enumerate() {
            out[2 * j + offset] = c;
        }
        out
    }
}

/// Characteristic polynomial `det(zI - T)` by the three-term recurrence.
pub fn char_poly(t: &TridiagonalMatrix) -> CharPoly {
    let n = t.n();
    let b = t.diag();
    // chi_0 = 1 and chi_1 = z - b_1; ascending coefficients throughout.
    let mut prev: Vec<Complex64> = vec![Complex64::ONE];
    let mut cur: Vec<Complex64> = vec![-b[0], Complex64::ONE];
    for k in 1..n {
        let prod = t.sub()[k - 1] * t.sup()[k - 1];
        let mut next = vec![Complex64::ZERO; k + 2];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] += c; // z * chi_k
            next[i] -= b[k] * c; // -b_{k+1} * chi_k
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] -= prod * c; // -a_k c_k * chi_{k-1}
        }
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(cur.len(), n + 1);
    debug_assert_eq!(*cur.last().unwrap(), Complex64::ONE);
    CharPoly { coeffs: cur }
}

/// Splits a zero-diagonal characteristic polynomial through `w = z^2`.
///
/// Wrong-parity coefficients must sit below [`PARITY_GATE_REL`] relative to
/// the largest coefficient magnitude; they are dropped. Anything larger
/// reports [`CharPolyError::ParityViolation`].
pub fn parity_split(p: &CharPoly) -> Result<ParityFactorization, CharPolyError> {
    let n = p.degree();
    let max_mag = p.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let gate = PARITY_GATE_REL * max_mag;
    for (i, c) in p.coeffs.iter().enumerate() {
        if i % 2 != n % 2 && c.norm() > gate {
            return Err(CharPolyError::ParityViolation {
                index: i,
                magnitude: c.norm(),
                gate,
            });
        }
    }
    let odd = n % 2 == 1;
    let offset = usize::from(odd);
    let reduced: Vec<Complex64> = (0..=(n / 2)).map(|j| p.coeffs[2 * j + offset]).collect();
    Ok(ParityFactorization { reduced, odd })
}

/// Determinant of `T` by the same recurrence run at `z = 0`, rearranged as the
/// leading-principal-minor recurrence `D_{k+1} = b_{k+1} D_k - a_k c_k D_{k-1}`.
pub fn determinant(t: &TridiagonalMatrix) -> Complex64 {
    let n = t.n();
    let b = t.diag();
    let mut prev = Complex64::ONE;
    let mut cur = b[0];
    for k in 1..n {
        let next = b[k] * cur - t.sub()[k - 1] * t.sup()[k - 1] * prev;
        prev = cur;
        cur = next;
    }
    cur
}
