//! Eigenvectors and Jordan chains for the tridiagonal families.
//!
//! An irreducible tridiagonal matrix is non-derogatory: every eigenvalue has
//! a single eigenvector direction, which the forward recurrence produces
//! directly, and generalized eigenvectors come from the same recurrence with
//! an inhomogeneous right-hand side. On top of that sit the closed-form
//! combinations: chains of `A = J + x*E` are explicit linear combinations of
//! the `J`-chains at `+-lambda`, chains of the two-periodic `B` are the same
//! vectors with shifted eigenvalues, and left chains follow from a diagonal
//! similarity. No construction in this module solves an eigenproblem of the
//! perturbed matrix.
//!
//! Conventions used throughout: the eigenvector recurrence is anchored at
//! `u_1 = 1`; each inhomogeneous solve fixes its free parameter `w_1` to 0;
//! finished chains are rescaled so the first nonzero component of the
//! eigenvector is exactly 1. Generalized eigenvectors are not unique, so a
//! fixed gauge is what makes outputs reproducible.

use crate::matrix::{apply_sign_involution, PerturbationParams, TridiagonalMatrix};
use crate::spectra::DEGENERACY_GATE_REL;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum EigvecError {
    #[error("last-row residual {residual:.3e} exceeds the eigenvalue tolerance")]
    NotAnEigenvalue { residual: f64 },
    #[error("chain consistency failed at depth {depth_reached} (residual {residual:.3e})")]
    ChainBreak { depth_reached: usize, residual: f64 },
    #[error("lambda + mu = {denom} is numerically zero; use the degenerate construction")]
    DegenerateMu { denom: Complex64 },
    #[error("construction needs a source chain of length {needed}, got {have}")]
    InsufficientChain { needed: usize, have: usize },
    #[error("chains of depth {requested} for the +-x eigenvalues are not constructed")]
    UnsupportedDepth { requested: usize },
    #[error("matrix diagonal fits none of the supported families")]
    UnsupportedShape,
}

/// Requested branch of a `+-` pair of constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Which of `x = +i*lambda` or `x = -i*lambda` produced the defective zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroMuBranch {
    PlusI,
    MinusI,
}

/// A Jordan chain `v_0, v_1, ...`: `(T - mu*I) v_0 = 0` and
/// `(T - mu*I) v_j = v_{j-1}`. Construction rescales every vector by the
/// first nonzero component of `v_0`, so that component is exactly 1
/// afterwards; a common scale factor preserves all chain relations.
#[derive(Debug, Clone, PartialEq)]
pub struct JordanChain {
    eigenvalue: Complex64,
    vectors: Vec<Vec<Complex64>>,
    matrix_order: usize,
}

/// Index of the first component that is not negligibly small relative to
/// the largest one.
fn first_significant(v: &[Complex64]) -> usize {
    let max = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    assert!(max > 0.0, "eigenvector must be nonzero");
    v.iter()
        .position(|z| z.norm() > 1e-12 * max)
        .expect("some component reaches the maximum")
}

impl JordanChain {
    pub fn new(
        eigenvalue: Complex64,
        mut vectors: Vec<Vec<Complex64>>,
        matrix_order: usize,
    ) -> Self {
        assert!(!vectors.is_empty(), "a chain holds at least the eigenvector");
        assert!(
            vectors.iter().all(|v| v.len() == matrix_order),
            "chain vectors must have the matrix order as length"
        );
        let scale = vectors[0][first_significant(&vectors[0])];
        if scale != Complex64::ONE {
            for v in &mut vectors {
                for z in v.iter_mut() {
                    *z /= scale;
                }
            }
        }
        Self { eigenvalue, vectors, matrix_order }
    }

    pub fn eigenvalue(&self) -> Complex64 {
        self.eigenvalue
    }

    pub fn vectors(&self) -> &[Vec<Complex64>] {
        &self.vectors
    }

    pub fn eigenvector(&self) -> &[Complex64] {
        &self.vectors[0]
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn matrix_order(&self) -> usize {
        self.matrix_order
    }

    /// The same chain truncated to at most `depth` vectors.
    pub fn truncated(&self, depth: usize) -> JordanChain {
        assert!(depth >= 1, "a chain holds at least the eigenvector");
        JordanChain {
            eigenvalue: self.eigenvalue,
            vectors: self.vectors.iter().take(depth).cloned().collect(),
            matrix_order: self.matrix_order,
        }
    }
}

/// The coefficients `alpha, beta, gamma, delta` combining `J`-eigenvectors
/// at `+-lambda` into `A`-eigenvectors at `+-mu`:
/// `v(+mu) = alpha*u(+lambda) + beta*u(-lambda)` and
/// `v(-mu) = gamma*u(+lambda) + delta*u(-lambda)`. The normalization
/// `alpha = delta = 1` keeps both combinations finite as `x -> 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombinationCoefficients {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub delta: Complex64,
}

impl CombinationCoefficients {
    /// Coefficients for the pair `(lambda, mu)` under perturbation `x`:
    /// `beta = x / (lambda + mu)`. Fails when that denominator is
    /// numerically zero, which can only happen away from the canonical
    /// pair representative.
    pub fn for_pair(
        lambda: Complex64,
        mu: Complex64,
        x: Complex64,
    ) -> Result<Self, EigvecError> {
        let beta = if x == Complex64::ZERO {
            Complex64::ZERO
        } else {
            let denom = lambda + mu;
            if denom.norm() <= 1e-12 * (lambda.norm() + mu.norm()) {
                return Err(EigvecError::DegenerateMu { denom });
            }
            x / denom
        };
        Ok(Self { alpha: Complex64::ONE, beta, gamma: -beta, delta: Complex64::ONE })
    }
}

/// The diagonal similarity `D` with `d_1 = 1` and `d_{k+1} = d_k a_k / c_k`
/// that maps a tridiagonal matrix onto its transpose, `D^{-1} T D = T^T`.
/// Irreducibility keeps every `d_k` nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct LeftScaling {
    d: Vec<Complex64>,
}

impl LeftScaling {
    pub fn new(t: &TridiagonalMatrix) -> Self {
        assert!(t.is_irreducible(), "the diagonal similarity needs nonzero off-diagonals");
        let mut d = Vec::with_capacity(t.n());
        d.push(Complex64::ONE);
        for k in 0..t.n() - 1 {
            let prev = *d.last().expect("seeded with d_1");
            d.push(prev * t.sub()[k] / t.sup()[k]);
        }
        Self { d }
    }

    pub fn d(&self) -> &[Complex64] {
        &self.d
    }
}

fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Forward recurrence for the (unique up to scale) eigenvector of an
/// irreducible tridiagonal matrix at `lambda`: `u_1 = 1`,
/// `u_2 = (lambda - b_1)/c_1`,
/// `u_{k+1} = ((lambda - b_k) u_k - a_{k-1} u_{k-1}) / c_k`. The rows
/// 1..n-1 are satisfied exactly by construction; the last row is the
/// eigenvalue test, gated at `tol * frobenius_norm(T) * norm(u)`.
pub fn eigenvector_j(
    t: &TridiagonalMatrix,
    lambda: Complex64,
    tol: f64,
) -> Result<Vec<Complex64>, EigvecError> {
    assert!(t.is_irreducible(), "the forward recurrence divides by superdiagonal entries");
    let n = t.n();
    let (a, b, c) = (t.sub(), t.diag(), t.sup());
    let mut u = Vec::with_capacity(n);
    u.push(Complex64::ONE);
    u.push((lambda - b[0]) / c[0]);
    for k in 1..n - 1 {
        let next = ((lambda - b[k]) * u[k] - a[k - 1] * u[k - 1]) / c[k];
        u.push(next);
    }
    let residual = (a[n - 2] * u[n - 2] + (b[n - 1] - lambda) * u[n - 1]).norm();
    let gate = tol * t.frobenius_norm() * vec_norm(&u);
    if residual > gate {
        return Err(EigvecError::NotAnEigenvalue { residual });
    }
    Ok(u)
}

/// One inhomogeneous solve `(T - lambda*I) w = rhs` by the forward
/// recurrence with the gauge `w_1 = 0`. Rows 1..n-1 hold exactly; the last
/// row is the consistency test and its residual is returned with the
/// solution.
fn inhomogeneous_step(
    t: &TridiagonalMatrix,
    lambda: Complex64,
    rhs: &[Complex64],
) -> (Vec<Complex64>, f64) {
    let n = t.n();
    let (a, b, c) = (t.sub(), t.diag(), t.sup());
    let mut w = Vec::with_capacity(n);
    w.push(Complex64::ZERO);
    w.push((rhs[0] - (b[0] - lambda) * w[0]) / c[0]);
    for k in 1..n - 1 {
        let next = (rhs[k] - a[k - 1] * w[k - 1] - (b[k] - lambda) * w[k]) / c[k];
        w.push(next);
    }
    let residual = (a[n - 2] * w[n - 2] + (b[n - 1] - lambda) * w[n - 1] - rhs[n - 1]).norm();
    (w, residual)
}

/// Jordan chain of an irreducible tridiagonal matrix at `lambda`, of the
/// requested depth. Each level solves `(T - lambda*I) w = v_{previous}`
/// with `w_1 = 0`; the last-row consistency residual decides whether the
/// eigenvalue supports another generalized eigenvector.
pub fn jordan_chain_j(
    t: &TridiagonalMatrix,
    lambda: Complex64,
    depth: usize,
    tol: f64,
) -> Result<JordanChain, EigvecError> {
    assert!(depth >= 1, "a chain holds at least the eigenvector");
    let mut vectors = vec![eigenvector_j(t, lambda, tol)?];
    let tnorm = t.frobenius_norm();
    while vectors.len() < depth {
        let rhs = vectors.last().expect("chain is never empty");
        let (w, residual) = inhomogeneous_step(t, lambda, rhs);
        let gate = tol * tnorm * vec_norm(&w).max(vec_norm(rhs));
        if residual > gate {
            return Err(EigvecError::ChainBreak { depth_reached: vectors.len(), residual });
        }
        vectors.push(w);
    }
    Ok(JordanChain::new(lambda, vectors, t.n()))
}

/// Maps a chain at `lambda` of a zero-diagonal matrix to the chain at
/// `-lambda`: vector `j` becomes `(-1)^j E v_j` (sign involution `E`), the
/// eigenvalue is negated, and no equation is re-solved. Applying it twice
/// returns the original chain exactly.
pub fn reflect_chain(chain: &JordanChain) -> JordanChain {
    let vectors = chain
        .vectors()
        .iter()
        .enumerate()
        .map(|(j, v)| {
            let mut r = apply_sign_involution(v);
            if j % 2 == 1 {
                for z in r.iter_mut() {
                    *z = -*z;
                }
            }
            r
        })
        .collect();
    JordanChain::new(-chain.eigenvalue(), vectors, chain.matrix_order())
}

/// Eigenvector of `A = J + x*E` at `sign * sqrt(lambda^2 + x^2)` as a
/// combination of the `J`-eigenvectors `u_plus` at `lambda` and `u_minus`
/// at `-lambda`:
/// `v(+mu) = u_plus + beta * u_minus` and
/// `v(-mu) = u_minus - beta * u_plus` with `beta = x / (lambda + mu)`.
/// At `x = 0` both reduce exactly to the unperturbed eigenvectors. The
/// returned vector is normalized to a leading 1.
pub fn eigenvector_a_generic(
    u_plus: &[Complex64],
    u_minus: &[Complex64],
    lambda: Complex64,
    x: Complex64,
    sign: Sign,
) -> Result<(Complex64, Vec<Complex64>), EigvecError> {
    if x == Complex64::ZERO {
        return Ok(match sign {
            Sign::Plus => (lambda, u_plus.to_vec()),
            Sign::Minus => (-lambda, u_minus.to_vec()),
        });
    }
    let mu = (lambda * lambda + x * x).sqrt();
    let coeffs = CombinationCoefficients::for_pair(lambda, mu, x)?;
    let v: Vec<Complex64> = match sign {
        Sign::Plus => u_plus
            .iter()
            .zip(u_minus)
            .map(|(p, m)| coeffs.alpha * p + coeffs.beta * m)
            .collect(),
        Sign::Minus => u_plus
            .iter()
            .zip(u_minus)
            .map(|(p, m)| coeffs.gamma * p + coeffs.delta * m)
            .collect(),
    };
    let scale = v[first_significant(&v)];
    let v = v.into_iter().map(|z| z / scale).collect();
    let mu_signed = match sign {
        Sign::Plus => mu,
        Sign::Minus => -mu,
    };
    Ok((mu_signed, v))
}

/// Raw (unnormalized) combination vectors for the generic case, shared by
/// the eigenvector and generalized-eigenvector constructions so that both
/// apply the same final scale.
fn generic_raw_v0(
    u0p: &[Complex64],
    u0m: &[Complex64],
    beta: Complex64,
    sign: Sign,
) -> Vec<Complex64> {
    match sign {
        Sign::Plus => u0p.iter().zip(u0m).map(|(p, m)| p + beta * m).collect(),
        Sign::Minus => u0p.iter().zip(u0m).map(|(p, m)| m - beta * p).collect(),
    }
}

/// First generalized eigenvector of `A = J + x*E` at
/// `sign * sqrt(lambda^2 + x^2)`, built from depth-2 chains of `J` at
/// `lambda` (`chain_plus`) and `-lambda` (`chain_minus`):
///
/// `v_1(+mu) = (1/(2 lambda)) (u_0^+ - beta u_0^-) + (mu/lambda) (u_1^+ - beta u_1^-)`
/// `v_1(-mu) = -(1/(2 lambda)) (beta u_0^+ + u_0^-) + (mu/lambda) (beta u_1^+ + u_1^-)`
///
/// The result is scaled consistently with [`eigenvector_a_generic`], so the
/// pair satisfies `(A - mu I) v_1 = v_0` without further adjustment.
pub fn gen_eigenvector_a_generic(
    chain_plus: &JordanChain,
    chain_minus: &JordanChain,
    lambda: Complex64,
    x: Complex64,
    sign: Sign,
) -> Result<Vec<Complex64>, EigvecError> {
    if chain_plus.len() < 2 {
        return Err(EigvecError::InsufficientChain { needed: 2, have: chain_plus.len() });
    }
    if chain_minus.len() < 2 {
        return Err(EigvecError::InsufficientChain { needed: 2, have: chain_minus.len() });
    }
    let (mu, beta) = if x == Complex64::ZERO {
        (lambda, Complex64::ZERO)
    } else {
        let mu = (lambda * lambda + x * x).sqrt();
        (mu, CombinationCoefficients::for_pair(lambda, mu, x)?.beta)
    };
    let (u0p, u1p) = (&chain_plus.vectors()[0], &chain_plus.vectors()[1]);
    let (u0m, u1m) = (&chain_minus.vectors()[0], &chain_minus.vectors()[1]);
    let half_inv = (2.0 * lambda).inv();
    let ratio = mu / lambda;
    let v1: Vec<Complex64> = match sign {
        Sign::Plus => (0..u0p.len())
            .map(|i| half_inv * (u0p[i] - beta * u0m[i]) + ratio * (u1p[i] - beta * u1m[i]))
            .collect(),
        Sign::Minus => (0..u0p.len())
            .map(|i| -half_inv * (beta * u0p[i] + u0m[i]) + ratio * (beta * u1p[i] + u1m[i]))
            .collect(),
    };
    let raw_v0 = generic_raw_v0(u0p, u0m, beta, sign);
    let scale = raw_v0[first_significant(&raw_v0)];
    Ok(v1.into_iter().map(|z| z / scale).collect())
}

/// The defective zero of `A = J + x*E` at `x = +-i*lambda`: eigenvalue 0
/// with the length-2 chain
/// `v_0 = u_plus +- i u_minus`, `v_1 = (u_plus -+ i u_minus) / (2 lambda)`.
/// Swapping the branch swaps which combination is the eigenvector and which
/// feeds the generalized one.
pub fn eigenvector_a_zero_mu(
    u_plus: &[Complex64],
    u_minus: &[Complex64],
    lambda: Complex64,
    branch: ZeroMuBranch,
) -> JordanChain {
    let i = Complex64::new(0.0, 1.0);
    let s = match branch {
        ZeroMuBranch::PlusI => i,
        ZeroMuBranch::MinusI => -i,
    };
    let v0: Vec<Complex64> = u_plus.iter().zip(u_minus).map(|(p, m)| p + s * m).collect();
    let v1: Vec<Complex64> = u_plus
        .iter()
        .zip(u_minus)
        .map(|(p, m)| (p - s * m) / (2.0 * lambda))
        .collect();
    JordanChain::new(Complex64::ZERO, vec![v0, v1], u_plus.len())
}

/// How long a `J`-chain at 0 must be to support each vector of the `+-x`
/// chains of `A`: `v_0(+x)` needs 1 element, `v_1(+x)` needs 3,
/// `v_0(-x)` needs 2, `v_1(-x)` needs 4.
fn pm_x_source_requirement(sign: Sign, index: usize) -> usize {
    match (sign, index) {
        (Sign::Plus, 0) => 1,
        (Sign::Plus, 1) => 3,
        (Sign::Minus, 0) => 2,
        (Sign::Minus, 1) => 4,
        _ => unreachable!("depth is capped at 2"),
    }
}

fn pm_x_vector(chain0: &JordanChain, x: Complex64, sign: Sign, index: usize) -> Vec<Complex64> {
    let u = chain0.vectors();
    let two_x = 2.0 * x;
    match (sign, index) {
        // v_0(+x) = u_0
        (Sign::Plus, 0) => u[0].clone(),
        // v_1(+x) = u_1 + 2x u_2
        (Sign::Plus, 1) => u[1].iter().zip(&u[2]).map(|(a, b)| a + two_x * b).collect(),
        // v_0(-x) = u_0 - 2x u_1
        (Sign::Minus, 0) => u[0].iter().zip(&u[1]).map(|(a, b)| a - two_x * b).collect(),
        // v_1(-x) = u_1 - 2x u_2 + 4x^2 u_3
        (Sign::Minus, 1) => (0..u[0].len())
            .map(|i| u[1][i] - two_x * u[2][i] + two_x * two_x * u[3][i])
            .collect(),
        _ => unreachable!("depth is capped at 2"),
    }
}

/// Chains of `A = J + x*E` at the eigenvalues `+x` and `-x` arising from
/// the zero eigenvalue of an odd-order `J`, with explicitly requested
/// lengths (0, 1, or 2 vectors; the deeper structure is out of scope).
/// `chain0` is a `J`-chain at 0; each vector consumes a prefix of it, and
/// the requests fail with `InsufficientChain` when the prefix is missing.
pub fn eigenvector_a_pm_x_requested(
    chain0: &JordanChain,
    x: Complex64,
    plus_len: usize,
    minus_len: usize,
) -> Result<(Option<JordanChain>, Option<JordanChain>), EigvecError> {
    assert!(x != Complex64::ZERO, "the +-x chains are distinct only for nonzero x");
    if plus_len > 2 {
        return Err(EigvecError::UnsupportedDepth { requested: plus_len });
    }
    if minus_len > 2 {
        return Err(EigvecError::UnsupportedDepth { requested: minus_len });
    }
    let have = chain0.len();
    let build = |sign: Sign, len: usize| -> Result<Option<JordanChain>, EigvecError> {
        if len == 0 {
            return Ok(None);
        }
        let mut vectors = Vec::with_capacity(len);
        for index in 0..len {
            let needed = pm_x_source_requirement(sign, index);
            if have < needed {
                return Err(EigvecError::InsufficientChain { needed, have });
            }
            vectors.push(pm_x_vector(chain0, x, sign, index));
        }
        let mu = match sign {
            Sign::Plus => x,
            Sign::Minus => -x,
        };
        Ok(Some(JordanChain::new(mu, vectors, chain0.matrix_order())))
    };
    Ok((build(Sign::Plus, plus_len)?, build(Sign::Minus, minus_len)?))
}

/// Chains of `A = J + x*E` at `+x` and `-x`, as long as the supplied
/// `J`-chain at 0 supports: a length-1 `chain0` yields only the `+x`
/// eigenvector, longer chains add the `-x` eigenvector and the first
/// generalized eigenvectors on both sides.
pub fn eigenvector_a_pm_x(
    chain0: &JordanChain,
    x: Complex64,
) -> (JordanChain, Option<JordanChain>) {
    let have = chain0.len();
    let plus_len = if have >= 3 { 2 } else { 1 };
    let minus_len = match have {
        0 | 1 => 0,
        2 | 3 => 1,
        _ => 2,
    };
    let (plus, minus) = eigenvector_a_pm_x_requested(chain0, x, plus_len, minus_len)
        .expect("lengths were chosen from the availability table");
    (plus.expect("the +x eigenvector always exists"), minus)
}

/// Relabels chains of `A' = J + ((x-y)/2) E` as chains of the two-periodic
/// `B`: `B = A' + ((x+y)/2) I`, so the vectors are untouched and every
/// eigenvalue shifts by `(x+y)/2`. The operator identity
/// `B - mu I = A' - mu' I` preserves generalized relations exactly.
pub fn chains_b_from_a(chains: &[JordanChain], p: &PerturbationParams) -> Vec<JordanChain> {
    let shift = p.half_sum();
    chains
        .iter()
        .map(|ch| {
            JordanChain::new(ch.eigenvalue() + shift, ch.vectors().to_vec(), ch.matrix_order())
        })
        .collect()
}

/// Left chain from a right chain via the diagonal similarity: scaling a
/// right chain componentwise by `1/d_k` yields vectors satisfying the
/// transposed relations `(T^T - mu I) w_j = w_{j-1}`, i.e. left
/// (generalized) eigenvectors of `T`.
pub fn left_chain(t: &TridiagonalMatrix, chain: &JordanChain) -> JordanChain {
    let scaling = LeftScaling::new(t);
    let vectors = chain
        .vectors()
        .iter()
        .map(|v| v.iter().zip(scaling.d()).map(|(z, d)| z / d).collect())
        .collect();
    JordanChain::new(chain.eigenvalue(), vectors, chain.matrix_order())
}

/// All chains of a supported matrix, by the closed-form route only.
///
/// The diagonal shape picks the family: zero diagonal solves `J` directly;
/// the alternating and two-periodic shapes solve the stripped `J` and map.
/// Chains are emitted per distinct eigenvalue, deepest construction
/// available first: depth equals algebraic multiplicity for `J` itself and
/// is capped at 2 for mapped eigenvalues (the closed-form combinations stop
/// at the first generalized eigenvector). Matrices outside the families are
/// rejected with `UnsupportedShape`.
pub fn spectral_chains(
    t: &TridiagonalMatrix,
    root_tol: f64,
    chain_tol: f64,
) -> Result<Vec<JordanChain>, crate::Error> {
    use crate::matrix::DiagonalShape;
    match t.diagonal_shape() {
        DiagonalShape::Zero => chains_of_j(t, root_tol, chain_tol),
        DiagonalShape::Alternating(x) => {
            let j = t.strip_diagonal();
            chains_of_alternating(&j, x, root_tol, chain_tol)
        }
        DiagonalShape::TwoPeriodic(p) => {
            let j = t.strip_diagonal();
            let a_chains = chains_of_alternating(&j, p.half_difference(), root_tol, chain_tol)?;
            Ok(chains_b_from_a(&a_chains, &p))
        }
        DiagonalShape::Other => Err(EigvecError::UnsupportedShape.into()),
    }
}

/// Full chains of a zero-diagonal matrix: solve at each pair representative,
/// reflect to the negated eigenvalue, and solve the zero chain to its full
/// multiplicity.
fn chains_of_j(
    j: &TridiagonalMatrix,
    root_tol: f64,
    chain_tol: f64,
) -> Result<Vec<JordanChain>, crate::Error> {
    let ps = crate::spectra::zero_diag_spectrum(j, root_tol)?;
    let mut out = Vec::new();
    for &(lam, r) in ps.pairs() {
        let plus = jordan_chain_j(j, lam, r, chain_tol)?;
        out.push(reflect_chain(&plus));
        out.push(plus);
    }
    if ps.zero_mult() > 0 {
        out.push(jordan_chain_j(j, Complex64::ZERO, ps.zero_mult(), chain_tol)?);
    }
    Ok(out)
}

/// Chains of `A = J + x*E` via the combination formulas, including the
/// degenerate `x = +-i*lambda` and `+-x` constructions.
fn chains_of_alternating(
    j: &TridiagonalMatrix,
    x: Complex64,
    root_tol: f64,
    chain_tol: f64,
) -> Result<Vec<JordanChain>, crate::Error> {
    if x == Complex64::ZERO {
        return chains_of_j(j, root_tol, chain_tol);
    }
    let ps = crate::spectra::zero_diag_spectrum(j, root_tol)?;
    let n = j.n();
    let mut out = Vec::new();
    for &(lam, r) in ps.pairs() {
        let degenerate = (x * x + lam * lam).norm()
            <= DEGENERACY_GATE_REL * (x.norm_sqr() + lam.norm_sqr() + 1.0);
        if degenerate {
            // One defective zero of multiplicity 2r; the first two chain
            // vectors are the closed-form combination.
            let u_plus = eigenvector_j(j, lam, chain_tol)?;
            let u_minus = apply_sign_involution(&u_plus);
            let branch = if (x - Complex64::i() * lam).norm() <= (x + Complex64::i() * lam).norm()
            {
                ZeroMuBranch::PlusI
            } else {
                ZeroMuBranch::MinusI
            };
            out.push(eigenvector_a_zero_mu(&u_plus, &u_minus, lam, branch));
            continue;
        }
        if r == 1 {
            let u_plus = eigenvector_j(j, lam, chain_tol)?;
            let u_minus = apply_sign_involution(&u_plus);
            for sign in [Sign::Plus, Sign::Minus] {
                let (mu, v) = eigenvector_a_generic(&u_plus, &u_minus, lam, x, sign)?;
                out.push(JordanChain::new(mu, vec![v], n));
            }
        } else {
            let chain_plus = jordan_chain_j(j, lam, 2, chain_tol)?;
            let chain_minus = reflect_chain(&chain_plus);
            for sign in [Sign::Plus, Sign::Minus] {
                let (mu, v0) = eigenvector_a_generic(
                    chain_plus.eigenvector(),
                    chain_minus.eigenvector(),
                    lam,
                    x,
                    sign,
                )?;
                let v1 = gen_eigenvector_a_generic(&chain_plus, &chain_minus, lam, x, sign)?;
                out.push(JordanChain::new(mu, vec![v0, v1], n));
            }
        }
    }
    if ps.zero_mult() > 0 {
        let chain0 = jordan_chain_j(j, Complex64::ZERO, ps.zero_mult(), chain_tol)?;
        let (plus, minus) = eigenvector_a_pm_x(&chain0, x);
        out.push(plus);
        if let Some(m) = minus {
            out.push(m);
        }
    }
    Ok(out)
}
