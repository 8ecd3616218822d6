//! Tridiagonal matrix families and their constructors.
//!
//! Everything in this crate revolves around complex tridiagonal matrices that
//! are *irreducible*: all sub- and superdiagonal entries are nonzero. Three
//! diagonal shapes matter:
//!
//! * zero diagonal (the unperturbed matrix `J`),
//! * alternating diagonal `(x, -x, x, ...)` (written `A = J + x*E`),
//! * two-periodic diagonal `(x, y, x, y, ...)` (written `B`).
//!
//! Here `E` is the diagonal sign matrix with entries `(-1)^(i-1)`. It is never
//! stored; [`apply_sign_involution`] is the whole of it. Matrices are
//! immutable after construction and the irreducibility flag is always computed
//! from the entries, never taken on trust.

use num_complex::Complex64;
use thiserror::Error;

/// Errors from matrix construction.
#[derive(Debug, Error, PartialEq)]
pub enum MatrixError {
    /// An off-diagonal entry is zero, which would make the matrix reducible.
    #[error("off-diagonal entry at index {0} is zero (matrix would be reducible)")]
    ZeroOffDiagonal(usize),
    #[error("subdiagonal and superdiagonal lengths differ: {sub} vs {sup}")]
    LengthMismatch { sub: usize, sup: usize },
    #[error("diagonal length {diag} does not match off-diagonal length {off} + 1")]
    DiagonalLengthMismatch { diag: usize, off: usize },
    /// The operation needs a zero-diagonal input matrix.
    #[error("input matrix must have an identically zero diagonal")]
    NonZeroDiagonalInput,
    #[error("input matrix must be irreducible")]
    NotIrreducible,
    #[error("matrix entries must be finite (no NaN or infinity)")]
    NonFiniteEntry,
    #[error("order must be at least {0}")]
    OrderTooSmall(usize),
}

/// Uniform perturbation parameters `(x, y)` for the two-periodic diagonal.
///
/// The alternating family is the special case `y = -x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbationParams {
    pub x: Complex64,
    pub y: Complex64,
}

impl PerturbationParams {
    pub fn new(x: Complex64, y: Complex64) -> Result<Self, MatrixError> {
        if !(x.re.is_finite() && x.im.is_finite() && y.re.is_finite() && y.im.is_finite()) {
            return Err(MatrixError::NonFiniteEntry);
        }
        Ok(Self { x, y })
    }

    /// The sign-involution coefficient `(x - y) / 2`.
    pub fn half_difference(&self) -> Complex64 {
        (self.x - self.y) / 2.0
    }

    /// The uniform shift `(x + y) / 2`.
    pub fn half_sum(&self) -> Complex64 {
        (self.x + self.y) / 2.0
    }
}

/// Shape of the main diagonal, as detected from the stored entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiagonalShape {
    /// All diagonal entries are exactly zero.
    Zero,
    /// Diagonal is `(x, -x, x, -x, ...)` with `x` the first entry.
    Alternating(Complex64),
    /// Diagonal is `(x, y, x, y, ...)`.
    TwoPeriodic(PerturbationParams),
    /// Anything else; the closed-form machinery does not apply.
    Other,
}

/// An immutable complex tridiagonal matrix.
///
/// Entries are stored as three diagonals: `sub` holds `a_1..a_{n-1}` (row k+1,
/// column k), `diag` holds `b_1..b_n`, and `sup` holds `c_1..c_{n-1}` (row k,
/// column k+1). The `irreducible` flag records whether every off-diagonal
/// entry is nonzero; it is computed once at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalMatrix {
    n: usize,
    sub: Vec<Complex64>,
    diag: Vec<Complex64>,
    sup: Vec<Complex64>,
    irreducible: bool,
}

fn all_finite(entries: &[Complex64]) -> bool {
    entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

impl TridiagonalMatrix {
    /// General constructor from the three diagonals.
    ///
    /// Accepts reducible matrices (zero off-diagonal entries); the
    /// irreducibility flag is computed from the entries. Most callers want
    /// [`TridiagonalMatrix::make_zero_diag`] instead, which insists on
    /// irreducibility.
    pub fn new(
        sub: Vec<Complex64>,
        diag: Vec<Complex64>,
        sup: Vec<Complex64>,
    ) -> Result<Self, MatrixError> {
        if sub.len() != sup.len() {
            return Err(MatrixError::LengthMismatch { sub: sub.len(), sup: sup.len() });
        }
        if diag.len() != sub.len() + 1 {
            return Err(MatrixError::DiagonalLengthMismatch { diag: diag.len(), off: sub.len() });
        }
        if !(all_finite(&sub) && all_finite(&diag) && all_finite(&sup)) {
            return Err(MatrixError::NonFiniteEntry);
        }
        let irreducible = sub.iter().chain(sup.iter()).all(|z| *z != Complex64::ZERO);
        Ok(Self { n: diag.len(), sub, diag, sup, irreducible })
    }

    /// Builds the zero-diagonal matrix `J` from its off-diagonals.
    ///
    /// Fails with [`MatrixError::ZeroOffDiagonal`] when any entry vanishes,
    /// since the whole theory assumes irreducibility.
    pub fn make_zero_diag(
        sub: Vec<Complex64>,
        sup: Vec<Complex64>,
    ) -> Result<Self, MatrixError> {
        if sub.len() != sup.len() {
            return Err(MatrixError::LengthMismatch { sub: sub.len(), sup: sup.len() });
        }
        if sub.is_empty() {
            return Err(MatrixError::OrderTooSmall(2));
        }
        for (k, z) in sub.iter().enumerate() {
            if *z == Complex64::ZERO {
                return Err(MatrixError::ZeroOffDiagonal(k));
            }
        }
        for (k, z) in sup.iter().enumerate() {
            if *z == Complex64::ZERO {
                return Err(MatrixError::ZeroOffDiagonal(k));
            }
        }
        let n = sub.len() + 1;
        let m = Self::new(sub, vec![Complex64::ZERO; n], sup)?;
        debug_assert!(m.irreducible);
        Ok(m)
    }

    /// Builds `A = J + x*E` with diagonal `(x, -x, x, -x, ...)`.
    pub fn make_alternating(j: &TridiagonalMatrix, x: Complex64) -> Result<Self, MatrixError> {
        Self::make_two_periodic(j, &PerturbationParams::new(x, -x)?)
    }

    /// Builds `B` with two-periodic diagonal `(x, y, x, y, ...)` on top of the
    /// off-diagonals of `j`.
    pub fn make_two_periodic(
        j: &TridiagonalMatrix,
        p: &PerturbationParams,
    ) -> Result<Self, MatrixError> {
        if !j.diag.iter().all(|z| *z == Complex64::ZERO) {
            return Err(MatrixError::NonZeroDiagonalInput);
        }
        if !j.irreducible {
            return Err(MatrixError::NotIrreducible);
        }
        let diag = (0..j.n)
            .map(|i| if i % 2 == 0 { p.x } else { p.y })
            .collect();
        Self::new(j.sub.clone(), diag, j.sup.clone())
    }

    /// The Sylvester-Kac matrix of order `N+1`: zero diagonal, superdiagonal
    /// `1, 2, ..., N`, subdiagonal `N, N-1, ..., 1`. Its eigenvalues are the
    /// classical `-N, -N+2, ..., N-2, N`, which makes it a handy fixed point
    /// for testing.
    pub fn sylvester_kac(big_n: usize) -> Result<Self, MatrixError> {
        if big_n < 1 {
            return Err(MatrixError::OrderTooSmall(2));
        }
        let sup: Vec<Complex64> = (1..=big_n).map(|k| Complex64::new(k as f64, 0.0)).collect();
        let sub: Vec<Complex64> = (1..=big_n)
            .rev()
            .map(|k| Complex64::new(k as f64, 0.0))
            .collect();
        Self::make_zero_diag(sub, sup)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sub(&self) -> &[Complex64] {
        &self.sub
    }

    pub fn diag(&self) -> &[Complex64] {
        &self.diag
    }

    pub fn sup(&self) -> &[Complex64] {
        &self.sup
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible
    }

    pub fn has_zero_diagonal(&self) -> bool {
        self.diag.iter().all(|z| *z == Complex64::ZERO)
    }

    /// Classifies the diagonal by exact comparison of the stored entries.
    ///
    /// Zero wins over alternating, alternating over plain two-periodic, so the
    /// most specific family is reported.
    pub fn diagonal_shape(&self) -> DiagonalShape {
        if self.has_zero_diagonal() {
            return DiagonalShape::Zero;
        }
        let x = self.diag[0];
        let y = if self.n > 1 { self.diag[1] } else { -x };
        let periodic = self
            .diag
            .iter()
            .enumerate()
            .all(|(i, z)| *z == if i % 2 == 0 { x } else { y });
        if !periodic {
            return DiagonalShape::Other;
        }
        if y == -x {
            DiagonalShape::Alternating(x)
        } else {
            DiagonalShape::TwoPeriodic(PerturbationParams { x, y })
        }
    }

    /// A copy with zeroed diagonal and the same off-diagonals.
    pub fn strip_diagonal(&self) -> TridiagonalMatrix {
        TridiagonalMatrix {
            n: self.n,
            sub: self.sub.clone(),
            diag: vec![Complex64::ZERO; self.n],
            sup: self.sup.clone(),
            irreducible: self.irreducible,
        }
    }

    /// Transpose: swaps the sub- and superdiagonal.
    pub fn transpose(&self) -> TridiagonalMatrix {
        TridiagonalMatrix {
            n: self.n,
            sub: self.sup.clone(),
            diag: self.diag.clone(),
            sup: self.sub.clone(),
            irreducible: self.irreducible,
        }
    }

    /// Matrix-vector product `T v`.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.n, "vector length must match matrix order");
        let mut out = vec![Complex64::ZERO; self.n];
        for i in 0..self.n {
            let mut s = self.diag[i] * v[i];
            if i > 0 {
                s += self.sub[i - 1] * v[i - 1];
            }
            if i + 1 < self.n {
                s += self.sup[i] * v[i + 1];
            }
            out[i] = s;
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        let sq: f64 = self
            .sub
            .iter()
            .chain(self.diag.iter())
            .chain(self.sup.iter())
            .map(|z| z.norm_sqr())
            .sum();
        sq.sqrt()
    }

    /// Expands the three diagonals into a full dense matrix.
    pub fn materialize_dense(&self) -> DenseMatrix {
        let mut d = DenseMatrix::zeros(self.n);
        for i in 0..self.n {
            d.set(i, i, self.diag[i]);
        }
        for k in 0..self.n - 1 {
            d.set(k + 1, k, self.sub[k]);
            d.set(k, k + 1, self.sup[k]);
        }
        d
    }
}

/// Applies the sign involution `E`: component `i` (1-based) is multiplied by
/// `(-1)^(i-1)`. Applying it twice gives back the input exactly.
#[must_use]
pub fn apply_sign_involution(v: &[Complex64]) -> Vec<Complex64> {
    v.iter()
        .enumerate()
        .map(|(i, z)| if i % 2 == 0 { *z } else { -*z })
        .collect()
}

/// Minimal dense complex matrix, row-major. Only what the brute-force
/// verification path needs: no factorizations live here.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Complex64::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.data[i * self.n + j] = z;
    }

    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n, other.n, "orders must agree");
        let n = self.n;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.n, "vector length must match matrix order");
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn add_scaled_identity(&mut self, z: Complex64) {
        for i in 0..self.n {
            let v = self.get(i, i) + z;
            self.set(i, i, v);
        }
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{c, nilpotent_five, ones};

    #[test]
    fn zero_diag_smallest_case() {
        let j = TridiagonalMatrix::make_zero_diag(ones(1), ones(1)).unwrap();
        assert_eq!(j.n(), 2);
        assert!(j.is_irreducible());
        assert!(j.has_zero_diagonal());
        let d = j.materialize_dense();
        assert_eq!(d.get(0, 0), Complex64::ZERO);
        assert_eq!(d.get(0, 1), Complex64::ONE);
        assert_eq!(d.get(1, 0), Complex64::ONE);
        assert_eq!(d.get(1, 1), Complex64::ZERO);
    }

    #[test]
    fn zero_off_diagonal_is_rejected() {
        let err = TridiagonalMatrix::make_zero_diag(
            vec![Complex64::ZERO, Complex64::ONE],
            ones(2),
        )
        .unwrap_err();
        assert_eq!(err, MatrixError::ZeroOffDiagonal(0));
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let err = TridiagonalMatrix::make_zero_diag(ones(2), ones(3)).unwrap_err();
        assert_eq!(err, MatrixError::LengthMismatch { sub: 2, sup: 3 });
    }

    #[test]
    fn non_finite_entries_are_rejected() {
        let err = TridiagonalMatrix::make_zero_diag(vec![c(f64::NAN, 0.0)], ones(1)).unwrap_err();
        assert_eq!(err, MatrixError::NonFiniteEntry);
        let err = PerturbationParams::new(c(f64::INFINITY, 0.0), Complex64::ZERO).unwrap_err();
        assert_eq!(err, MatrixError::NonFiniteEntry);
    }

    #[test]
    fn nilpotent_five_matches_displayed_array() {
        let j = nilpotent_five();
        let d = j.materialize_dense();
        let expect = [
            [0.0, 1.0, 0.0, 0.0, 0.0],
            [1.0, 0.0, 1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, -4.0, 0.0],
            [0.0, 0.0, 1.0, 0.0, 2.0],
            [0.0, 0.0, 0.0, 1.0, 0.0],
        ];
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(d.get(i, j), c(expect[i][j], 0.0), "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn alternating_diagonal_pattern() {
        let j = TridiagonalMatrix::make_zero_diag(ones(1), ones(1)).unwrap();
        let a = TridiagonalMatrix::make_alternating(&j, c(0.75, 0.0)).unwrap();
        assert_eq!(a.diag(), &[c(0.75, 0.0), c(-0.75, 0.0)]);

        let j5 = nilpotent_five();
        let a5 = TridiagonalMatrix::make_alternating(&j5, Complex64::ONE).unwrap();
        let want: Vec<Complex64> = [1.0, -1.0, 1.0, -1.0, 1.0].iter().map(|&r| c(r, 0.0)).collect();
        assert_eq!(a5.diag(), want.as_slice());
        assert_eq!(a5.sub(), j5.sub());
        assert_eq!(a5.sup(), j5.sup());
    }

    #[test]
    fn alternating_with_x_zero_is_j_itself() {
        let j = nilpotent_five();
        let a = TridiagonalMatrix::make_alternating(&j, Complex64::ZERO).unwrap();
        assert_eq!(a, j);
    }

    #[test]
    fn two_periodic_small_example() {
        let j = TridiagonalMatrix::make_zero_diag(ones(1), ones(1)).unwrap();
        let p = PerturbationParams::new(c(1.0, 0.0), c(2.0, 0.0)).unwrap();
        let b = TridiagonalMatrix::make_two_periodic(&j, &p).unwrap();
        let d = b.materialize_dense();
        assert_eq!(d.get(0, 0), c(1.0, 0.0));
        assert_eq!(d.get(0, 1), c(1.0, 0.0));
        assert_eq!(d.get(1, 0), c(1.0, 0.0));
        assert_eq!(d.get(1, 1), c(2.0, 0.0));
    }

    #[test]
    fn two_periodic_with_y_minus_x_equals_alternating() {
        let j = nilpotent_five();
        let x = c(0.3, -1.2);
        let p = PerturbationParams::new(x, -x).unwrap();
        let b = TridiagonalMatrix::make_two_periodic(&j, &p).unwrap();
        let a = TridiagonalMatrix::make_alternating(&j, x).unwrap();
        assert_eq!(b, a, "y = -x must reproduce the alternating family exactly");
    }

    #[test]
    fn two_periodic_rejects_nonzero_diagonal_input() {
        let j = nilpotent_five();
        let a = TridiagonalMatrix::make_alternating(&j, Complex64::ONE).unwrap();
        let p = PerturbationParams::new(Complex64::ONE, Complex64::ONE).unwrap();
        let err = TridiagonalMatrix::make_two_periodic(&a, &p).unwrap_err();
        assert_eq!(err, MatrixError::NonZeroDiagonalInput);
    }

    #[test]
    fn sylvester_kac_smallest_and_n3() {
        let k1 = TridiagonalMatrix::sylvester_kac(1).unwrap();
        assert_eq!(k1.n(), 2);
        assert_eq!(k1.sup(), &[c(1.0, 0.0)]);
        assert_eq!(k1.sub(), &[c(1.0, 0.0)]);

        let k3 = TridiagonalMatrix::sylvester_kac(3).unwrap();
        assert_eq!(k3.n(), 4);
        assert_eq!(k3.sup(), &[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]);
        assert_eq!(k3.sub(), &[c(3.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]);
        assert!(k3.is_irreducible());
    }

    #[test]
    fn sign_involution_examples_and_involutivity() {
        let v: Vec<Complex64> = ones(4);
        let flipped = apply_sign_involution(&v);
        assert_eq!(flipped, vec![c(1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]);

        let w = vec![c(0.0, 0.0), c(5.0, 0.0), c(0.0, 0.0), c(7.0, 0.0)];
        assert_eq!(
            apply_sign_involution(&w),
            vec![c(0.0, 0.0), c(-5.0, 0.0), c(0.0, 0.0), c(-7.0, 0.0)]
        );

        let v = vec![c(1.0, 2.0), c(-3.0, 0.5), c(0.25, -8.0)];
        assert_eq!(apply_sign_involution(&apply_sign_involution(&v)), v);
    }

    #[test]
    fn sign_involution_anticommutes_with_zero_diag_dense() {
        // J*E + E*J = 0 entrywise, with E realized as a diagonal sign matrix.
        let j = nilpotent_five().materialize_dense();
        let n = j.n();
        let mut e = DenseMatrix::zeros(n);
        for i in 0..n {
            e.set(i, i, if i % 2 == 0 { Complex64::ONE } else { -Complex64::ONE });
        }
        let je = j.matmul(&e);
        let ej = e.matmul(&j);
        for i in 0..n {
            for k in 0..n {
                assert_eq!(je.get(i, k) + ej.get(i, k), Complex64::ZERO, "entry ({i},{k})");
            }
        }
    }

    #[test]
    fn diagonal_shape_detection() {
        let j = nilpotent_five();
        assert_eq!(j.diagonal_shape(), DiagonalShape::Zero);

        let x = c(2.0, 1.0);
        let a = TridiagonalMatrix::make_alternating(&j, x).unwrap();
        assert_eq!(a.diagonal_shape(), DiagonalShape::Alternating(x));

        let p = PerturbationParams::new(c(1.0, 0.0), c(2.0, 0.0)).unwrap();
        let b = TridiagonalMatrix::make_two_periodic(&j, &p).unwrap();
        assert_eq!(b.diagonal_shape(), DiagonalShape::TwoPeriodic(p));

        let other = TridiagonalMatrix::new(
            ones(2),
            vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)],
            ones(2),
        )
        .unwrap();
        assert_eq!(other.diagonal_shape(), DiagonalShape::Other);
    }

    #[test]
    fn transpose_swaps_off_diagonals() {
        let j = nilpotent_five();
        let t = j.transpose();
        assert_eq!(t.sub(), j.sup());
        assert_eq!(t.sup(), j.sub());
        assert_eq!(t.transpose(), j);
    }

    #[test]
    fn apply_matches_dense_apply() {
        let j = nilpotent_five();
        let d = j.materialize_dense();
        let v: Vec<Complex64> = (0..5).map(|i| c(i as f64 + 0.5, -(i as f64))).collect();
        let lhs = j.apply(&v);
        let rhs = d.apply(&v);
        for i in 0..5 {
            assert!((lhs[i] - rhs[i]).norm() < 1e-15, "component {i}");
        }
    }
}
