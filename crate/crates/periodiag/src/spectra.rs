//! Closed-form spectrum and determinant mappings for the perturbed families.
//!
//! The spectrum of a zero-diagonal irreducible tridiagonal `J` is symmetric
//! about the origin, so it is fully described by one representative per
//! `+-lambda` pair plus the multiplicity of 0; that is [`PairedSpectrum`].
//! From it, the spectrum of `A = J + x*E` follows as `+-sqrt(lambda^2 + x^2)`
//! with explicit multiplicity rules for the degenerate cases, and the
//! spectrum of the two-periodic `B` is the same mapping with parameter
//! `(x-y)/2` followed by a rigid shift of `(x+y)/2`. Determinants come out
//! as finite products over the pair representatives. None of this touches
//! the perturbed matrix itself, which is the whole point; the dense oracle
//! exists to confirm it.

use crate::charpoly::char_poly;
use crate::charpoly::parity_split;
use crate::matrix::{PerturbationParams, TridiagonalMatrix};
use crate::roots::{
    cluster, default_cluster_radius, refine_multiple_root, roots_via_parity, symmetrize_pm,
    Spectrum,
};
use num_complex::Complex64;
use thiserror::Error;

/// Relative gate for detecting the degenerate case `x^2 = -lambda^2`:
/// `|x^2 + lambda^2| <= gate * (|x|^2 + |lambda|^2 + 1)`. Inputs this close
/// to degeneracy are genuinely near-defective, so they are routed through
/// the exact degenerate rule instead of a blowing-up square root.
pub const DEGENERACY_GATE_REL: f64 = 1e-10;

#[derive(Debug, Error, PartialEq)]
pub enum SpectraError {
    #[error("zero eigenvalue multiplicity {zero_mult} violates parity for order {n}")]
    ParityError { n: usize, zero_mult: usize },
    #[error("closed-form determinant applies to even orders only, got {0}")]
    OddOrder(usize),
    #[error("entry {value} has no exact negation partner; pair_spectrum needs symmetrized input")]
    UnpairedEntry { value: Complex64 },
    #[error("spectrum total {got} does not match the matrix order {expected}")]
    TotalMismatch { expected: usize, got: usize },
    #[error("matrix diagonal fits none of the supported families")]
    UnsupportedShape,
}

/// A negation-symmetric eigenvalue multiset in paired form: one
/// representative per `+-lambda` pair (nonzero, nonnegative real part, ties
/// broken toward nonnegative imaginary part) and the multiplicity of 0.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedSpectrum {
    pairs: Vec<(Complex64, usize)>,
    zero_mult: usize,
    n: usize,
}

impl PairedSpectrum {
    /// Validates the bookkeeping invariants: multiplicities sum to `n`
    /// (each pair counts twice), even orders have no zero eigenvalue, odd
    /// orders have odd zero multiplicity.
    pub fn new(
        pairs: Vec<(Complex64, usize)>,
        zero_mult: usize,
        n: usize,
    ) -> Result<Self, SpectraError> {
        let total = 2 * pairs.iter().map(|&(_, r)| r).sum::<usize>() + zero_mult;
        if total != n {
            return Err(SpectraError::TotalMismatch { expected: n, got: total });
        }
        if (n % 2 == 0 && zero_mult != 0) || (n % 2 == 1 && zero_mult % 2 == 0) {
            return Err(SpectraError::ParityError { n, zero_mult });
        }
        let mut pairs = pairs;
        pairs.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
        Ok(Self { pairs, zero_mult, n })
    }

    pub fn pairs(&self) -> &[(Complex64, usize)] {
        &self.pairs
    }

    pub fn zero_mult(&self) -> usize {
        self.zero_mult
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Expands back to a plain spectrum `{+-lambda_k, 0}` with
    /// multiplicities.
    pub fn to_spectrum(&self) -> Spectrum {
        let mut entries = Vec::with_capacity(2 * self.pairs.len() + 1);
        for &(lam, r) in &self.pairs {
            entries.push(crate::roots::SpectrumEntry { value: lam, mult: r });
            entries.push(crate::roots::SpectrumEntry { value: -lam, mult: r });
        }
        if self.zero_mult > 0 {
            entries.push(crate::roots::SpectrumEntry {
                value: Complex64::ZERO,
                mult: self.zero_mult,
            });
        }
        Spectrum::new(entries)
    }

    /// The `floor(n/2)` values `lambda_k` counted with multiplicity, zeros
    /// included; this is the index set every determinant product runs over.
    fn lambda_list(&self) -> Vec<Complex64> {
        let mut v = Vec::with_capacity(self.n / 2);
        for &(lam, r) in &self.pairs {
            v.extend(std::iter::repeat(lam).take(r));
        }
        v.extend(std::iter::repeat(Complex64::ZERO).take(self.zero_mult / 2));
        v
    }
}

/// Groups a symmetrized spectrum into `+-` pairs.
///
/// The input must be exactly negation-closed (the contract of
/// [`symmetrize_pm`]): the partner search uses bitwise negation. Each pair
/// keeps the representative with positive real part, ties broken toward
/// nonnegative imaginary part.
pub fn pair_spectrum(s: &Spectrum, n: usize) -> Result<PairedSpectrum, SpectraError> {
    if s.total() != n {
        return Err(SpectraError::TotalMismatch { expected: n, got: s.total() });
    }
    let mut zero_mult = 0usize;
    let mut pairs: Vec<(Complex64, usize)> = Vec::new();
    let mut claimed = vec![false; s.entries().len()];
    for (i, e) in s.entries().iter().enumerate() {
        if claimed[i] {
            continue;
        }
        if e.value == Complex64::ZERO {
            claimed[i] = true;
            zero_mult += e.mult;
            continue;
        }
        let representative =
            e.value.re > 0.0 || (e.value.re == 0.0 && e.value.im >= 0.0);
        if !representative {
            continue;
        }
        claimed[i] = true;
        let partner = s
            .entries()
            .iter()
            .enumerate()
            .find(|(j, f)| !claimed[*j] && f.value == -e.value && f.mult == e.mult);
        let Some((j, _)) = partner else {
            return Err(SpectraError::UnpairedEntry { value: e.value });
        };
        claimed[j] = true;
        pairs.push((e.value, e.mult));
    }
    if let Some(orphan) = claimed.iter().position(|done| !done) {
        return Err(SpectraError::UnpairedEntry { value: s.entries()[orphan].value });
    }
    PairedSpectrum::new(pairs, zero_mult, n)
}

/// Spectrum of a zero-diagonal matrix through the whole primary pipeline:
/// characteristic polynomial, parity factorization, root finding in
/// `w = z^2`, clustering, symmetrization, pairing. `tol` is the root
/// residual gate ([`crate::DEFAULT_ROOT_TOL`] is the usual choice).
pub fn zero_diag_spectrum(
    j: &TridiagonalMatrix,
    tol: f64,
) -> Result<PairedSpectrum, crate::Error> {
    let p = char_poly(j);
    let f = parity_split(&p)?;
    let raw = roots_via_parity(&f, tol)?;
    let radius = default_cluster_radius(&raw);
    let clustered = cluster(&raw, radius);
    let sym = symmetrize_pm(&clustered, radius)?;
    let mut ps = pair_spectrum(&sym, j.n())?;
    // Cluster means of multiple roots are only eps^(1/m) accurate, which is
    // too coarse for degeneracy detection and chain solves downstream.
    // Refining the representative keeps the pair exactly negation-closed,
    // since the partner is stored implicitly.
    for (lam, r) in ps.pairs.iter_mut() {
        if *r >= 2 {
            *lam = refine_multiple_root(p.coeffs(), *lam, *r, radius);
        }
    }
    ps.pairs.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    Ok(ps)
}

/// The expanded (unmerged) eigenvalue list of `A = J + x*E` given the
/// paired spectrum of `J`. Shared by both mapping functions so that the
/// two-periodic path can merge after shifting, not before.
fn alternating_values(ps: &PairedSpectrum, x: Complex64) -> Vec<Complex64> {
    let mut vals = Vec::with_capacity(ps.n());
    for &(lam, r) in ps.pairs() {
        if x == Complex64::ZERO {
            // Exact unperturbed recovery; sqrt(lambda^2) would round.
            vals.extend(std::iter::repeat(lam).take(r));
            vals.extend(std::iter::repeat(-lam).take(r));
            continue;
        }
        let shifted_sq = lam * lam + x * x;
        if shifted_sq.norm() <= DEGENERACY_GATE_REL * (x.norm_sqr() + lam.norm_sqr() + 1.0) {
            // x^2 = -lambda^2: the pair collapses onto a defective zero of
            // even multiplicity.
            vals.extend(std::iter::repeat(Complex64::ZERO).take(2 * r));
        } else {
            let mu = shifted_sq.sqrt();
            vals.extend(std::iter::repeat(mu).take(r));
            vals.extend(std::iter::repeat(-mu).take(r));
        }
    }
    if ps.zero_mult() > 0 {
        // Odd order with zero multiplicity 2r+1: x appears with
        // multiplicity r+1 and -x with multiplicity r.
        let r = (ps.zero_mult() - 1) / 2;
        vals.extend(std::iter::repeat(x).take(r + 1));
        vals.extend(std::iter::repeat(-x).take(r));
    }
    vals
}

/// Spectrum of `A = J + x*E` from the paired spectrum of `J`. Coincident
/// values (exact or within the default clustering radius) are merged with
/// summed multiplicities; the total always equals `n`.
pub fn map_to_alternating(ps: &PairedSpectrum, x: Complex64) -> Spectrum {
    let vals = alternating_values(ps, x);
    cluster(&vals, default_cluster_radius(&vals))
}

/// Spectrum of the two-periodic `B`: the alternating mapping with parameter
/// `(x-y)/2`, then every eigenvalue shifted by `(x+y)/2`. Merging happens
/// after the shift, so values that collide only once shifted are still
/// reported as one entry.
pub fn map_to_two_periodic(ps: &PairedSpectrum, p: &PerturbationParams) -> Spectrum {
    let shift = p.half_sum();
    let vals: Vec<Complex64> = alternating_values(ps, p.half_difference())
        .into_iter()
        .map(|z| z + shift)
        .collect();
    cluster(&vals, default_cluster_radius(&vals))
}

/// Spectrum of any supported matrix by the closed-form route: the diagonal
/// shape picks the family, the stripped zero-diagonal problem is solved
/// once, and the result is mapped. Matrices outside the families are
/// rejected; the dense oracle is the fallback for those.
pub fn mapped_spectrum(t: &TridiagonalMatrix, tol: f64) -> Result<Spectrum, crate::Error> {
    use crate::matrix::DiagonalShape;
    match t.diagonal_shape() {
        DiagonalShape::Zero => Ok(zero_diag_spectrum(t, tol)?.to_spectrum()),
        DiagonalShape::Alternating(x) => {
            let ps = zero_diag_spectrum(&t.strip_diagonal(), tol)?;
            Ok(map_to_alternating(&ps, x))
        }
        DiagonalShape::TwoPeriodic(p) => {
            let ps = zero_diag_spectrum(&t.strip_diagonal(), tol)?;
            Ok(map_to_two_periodic(&ps, &p))
        }
        DiagonalShape::Other => Err(SpectraError::UnsupportedShape.into()),
    }
}

/// Closed-form determinant of an even-order zero-diagonal matrix:
/// `(-1)^l` times the product of `a_k * c_k` over the odd positions
/// (1-based k = 1, 3, ..., n-1).
pub fn det_j_even(j: &TridiagonalMatrix) -> Result<Complex64, SpectraError> {
    assert!(j.has_zero_diagonal(), "closed-form determinant requires a zero diagonal");
    let n = j.n();
    if n % 2 == 1 {
        return Err(SpectraError::OddOrder(n));
    }
    let l = n / 2;
    let mut prod = Complex64::ONE;
    for k in (0..n - 1).step_by(2) {
        prod *= j.sub()[k] * j.sup()[k];
    }
    Ok(if l % 2 == 1 { -prod } else { prod })
}

/// Closed-form determinant of `A = J + x*E`:
/// `(-1)^l * prod(x^2 + lambda_k^2)` for order `2l`, with an extra factor
/// `x` for order `2l+1`. Zeros in the pair list contribute `x^2`.
pub fn det_alternating(ps: &PairedSpectrum, x: Complex64) -> Complex64 {
    let l = ps.n() / 2;
    let mut prod = Complex64::ONE;
    for lam in ps.lambda_list() {
        prod *= x * x + lam * lam;
    }
    if ps.n() % 2 == 1 {
        prod *= x;
    }
    if l % 2 == 1 {
        -prod
    } else {
        prod
    }
}

/// Closed-form determinant of the two-periodic `B`:
/// `prod(x*y - lambda_k^2)` for even order, times `x` for odd order.
pub fn det_two_periodic(ps: &PairedSpectrum, p: &PerturbationParams) -> Complex64 {
    let xy = p.x * p.y;
    let mut prod = Complex64::ONE;
    for lam in ps.lambda_list() {
        prod *= xy - lam * lam;
    }
    if ps.n() % 2 == 1 {
        prod *= p.x;
    }
    prod
}
