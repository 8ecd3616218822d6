//! Polynomial root finding and clustering into eigenvalue multiplicities.
//!
//! Nothing in this module is specific to tridiagonal matrices; it is the
//! generic numerical layer between characteristic polynomials and spectra.
//! The root finder is Aberth-Ehrlich simultaneous iteration with a
//! Durand-Kerner fallback, started from a perturbed circle and finished with
//! a few Newton polishing steps. Multiple roots can only be located to about
//! `eps^(1/m)`, which is why consumers cluster the raw roots into
//! [`Spectrum`] entries instead of trusting individual positions.
//!
//! For zero-diagonal matrices the characteristic polynomial factors through
//! `w = z^2` (see [`crate::charpoly::parity_split`]); [`roots_via_parity`]
//! exploits that to halve the degree and to make the computed roots exactly
//! closed under negation.

use crate::charpoly::{CharPoly, ParityFactorization};
use num_complex::Complex64;
use thiserror::Error;

/// Iteration cap shared by the Aberth-Ehrlich and Durand-Kerner loops.
pub const MAX_ROOT_ITERATIONS: usize = 500;

/// Leading (low-degree) coefficients whose magnitude is below this fraction of
/// the largest coefficient are treated as exact zeros, i.e. as roots at the
/// origin to deflate before iterating. The recurrence produces genuine zeros
/// there for singular matrices, so the gate only has to absorb rounding dust.
const ZERO_DEFLATION_REL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum RootsError {
    #[error(
        "root iteration did not converge within {iterations} sweeps (worst residual ratio {worst:.3e})"
    )]
    NoConvergence { iterations: usize, worst: f64 },
    #[error("spectrum entry {value} has no negation partner within tolerance")]
    PairingFailure { value: Complex64 },
}

/// One eigenvalue with its algebraic multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub value: Complex64,
    pub mult: usize,
}

/// An eigenvalue multiset: entries with multiplicities, sorted by real part,
/// then imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    pub fn new(mut entries: Vec<SpectrumEntry>) -> Self {
        entries.retain(|e| e.mult > 0);
        entries.sort_by(|a, b| {
            a.value
                .re
                .total_cmp(&b.value.re)
                .then(a.value.im.total_cmp(&b.value.im))
        });
        Self { entries }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    /// Expands to a value list with repetition, in entry order.
    pub fn expand(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.total());
        for e in &self.entries {
            out.extend(std::iter::repeat(e.value).take(e.mult));
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|e| e.value.norm()).fold(0.0, f64::max)
    }
}

/// The clustering radius used when no explicit radius is given:
/// `max(1e-8, 1e-6 * max |value|)`. Deliberately generous, since multiple
/// roots scatter over a disk of radius about `eps^(1/m)`.
pub fn default_cluster_radius(values: &[Complex64]) -> f64 {
    let maxr = values.iter().map(|z| z.norm()).fold(0.0, f64::max);
    (1e-6 * maxr).max(1e-8)
}

/// Evaluation-scale bound used for residual acceptance: a root candidate `z`
/// is accepted when `|p(z)| <= tol * sum_j |c_j| * max(1, |z|)^j`. The sum
/// dominates the rounding error of Horner evaluation at `z`, so the gate
/// scales with what is actually computable.
fn scale_bound(coeffs: &[Complex64], z: Complex64) -> f64 {
    let m = z.norm().max(1.0);
    let mut pow = 1.0;
    let mut s = 0.0;
    for c in coeffs {
        s += c.norm() * pow;
        pow *= m;
    }
    s.max(f64::MIN_POSITIVE)
}

fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::ZERO;
    let mut dp = Complex64::ZERO;
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn residual_ratio(coeffs: &[Complex64], z: Complex64) -> f64 {
    let (p, _) = eval_with_derivative(coeffs, z);
    p.norm() / scale_bound(coeffs, z)
}

fn is_finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Initial guesses on a circle of radius `1 + max |coeff|` with a small
/// deterministic angular jitter. The jitter breaks the symmetric stalls that
/// equally spaced starting points can fall into.
fn initial_guesses(coeffs: &[Complex64], phase: f64) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let maxc = coeffs[..d].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let r = 1.0 + maxc;
    (0..d)
        .map(|i| {
            let jitter = 0.2 * (3.7 * i as f64 + 1.3).sin() / d as f64;
            let th = std::f64::consts::TAU * (i as f64 + 0.31) / d as f64 + jitter + phase;
            Complex64::from_polar(r, th)
        })
        .collect()
}

/// A few Newton steps per root, keeping the best residual seen. Newton is
/// only linearly convergent at multiple roots, so steps that do not improve
/// the residual ratio are discarded rather than iterated further.
fn polish(coeffs: &[Complex64], roots: &mut [Complex64]) {
    for z in roots.iter_mut() {
        let mut best = *z;
        let mut best_ratio = residual_ratio(coeffs, best);
        let mut cur = best;
        for _ in 0..4 {
            let (p, dp) = eval_with_derivative(coeffs, cur);
            if dp == Complex64::ZERO {
                break;
            }
            let step = p / dp;
            if !is_finite(step) {
                break;
            }
            cur -= step;
            let ratio = residual_ratio(coeffs, cur);
            if ratio < best_ratio {
                best = cur;
                best_ratio = ratio;
            } else {
                break;
            }
        }
        *z = best;
    }
}

/// Coefficients of the derivative polynomial, ascending order.
fn differentiate(coeffs: &[Complex64]) -> Vec<Complex64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| (j as f64) * c)
        .collect()
}

/// Refines an estimated root of multiplicity `mult` by Newton iteration on
/// the derivative of order `mult - 1`, where the same root is simple.
///
/// Evaluating `p` itself cannot locate an `m`-fold root better than about
/// `eps^(1/m)`, which is why cluster means of multiple roots carry errors
/// near `1e-8`. The high-order derivative does not have that floor. The
/// refined value is kept only when it stays within `trust_radius` of the
/// estimate, since the derivative can have unrelated roots elsewhere.
pub fn refine_multiple_root(
    coeffs: &[Complex64],
    estimate: Complex64,
    mult: usize,
    trust_radius: f64,
) -> Complex64 {
    assert!(mult >= 1, "a root has multiplicity at least 1");
    let mut d = coeffs.to_vec();
    for _ in 1..mult {
        d = differentiate(&d);
    }
    if d.len() < 2 {
        return estimate;
    }
    let mut z = estimate;
    for _ in 0..8 {
        let (p, dp) = eval_with_derivative(&d, z);
        if dp == Complex64::ZERO {
            break;
        }
        let step = p / dp;
        if !is_finite(step) {
            break;
        }
        z -= step;
        if step.norm() <= 1e-15 * (1.0 + z.norm()) {
            break;
        }
    }
    if is_finite(z) && (z - estimate).norm() <= trust_radius {
        z
    } else {
        estimate
    }
}

enum Method {
    Aberth,
    DurandKerner,
}

fn simultaneous_iteration(
    coeffs: &[Complex64],
    tol: f64,
    method: Method,
    phase: f64,
) -> Result<Vec<Complex64>, RootsError> {
    let d = coeffs.len() - 1;
    let mut z = initial_guesses(coeffs, phase);
    let mut iterations = 0;
    for iter in 0..MAX_ROOT_ITERATIONS {
        iterations = iter + 1;
        let mut max_step: f64 = 0.0;
        let mut all_converged = true;
        for i in 0..d {
            let (p, dp) = eval_with_derivative(coeffs, z[i]);
            if p.norm() <= tol * scale_bound(coeffs, z[i]) {
                continue;
            }
            all_converged = false;
            // Repulsion sum over the other iterates; shared by both updates.
            let mut repulsion = Complex64::ZERO;
            for j in 0..d {
                if j == i {
                    continue;
                }
                let mut diff = z[i] - z[j];
                if diff == Complex64::ZERO {
                    // Coincident iterates: pretend they are a tiny step apart
                    // so the repulsion pushes them off each other.
                    diff = Complex64::new(1e-12 * (1.0 + z[i].norm()), 0.0);
                }
                repulsion += diff.inv();
            }
            let step = match method {
                Method::Aberth => {
                    if dp == Complex64::ZERO {
                        // Stationary point of p; fall through to a nudge.
                        Complex64::new(f64::NAN, 0.0)
                    } else {
                        let newton = p / dp;
                        let denom = Complex64::ONE - newton * repulsion;
                        let w = newton / denom;
                        if is_finite(w) {
                            w
                        } else {
                            newton
                        }
                    }
                }
                Method::DurandKerner => {
                    // Monic polynomial: p(z_i) / prod_{j != i} (z_i - z_j).
                    let mut denom = Complex64::ONE;
                    for j in 0..d {
                        if j == i {
                            continue;
                        }
                        let mut diff = z[i] - z[j];
                        if diff == Complex64::ZERO {
                            diff = Complex64::new(1e-12 * (1.0 + z[i].norm()), 0.0);
                        }
                        denom *= diff;
                    }
                    p / denom
                }
            };
            if is_finite(step) {
                z[i] -= step;
                max_step = max_step.max(step.norm());
            } else {
                // Give the iterate a deterministic kick and carry on.
                let kick = 1e-3 * (1.0 + z[i].norm());
                z[i] += Complex64::new(kick, kick * 0.5);
                max_step = max_step.max(kick);
            }
        }
        if all_converged {
            break;
        }
        // All steps at rounding level: the iteration has stalled at its
        // attainable accuracy; let the final residual check decide.
        let scale = z.iter().map(|w| w.norm()).fold(1.0, f64::max);
        if max_step <= 1e-15 * scale {
            break;
        }
    }
    polish(coeffs, &mut z);
    let worst = z
        .iter()
        .map(|&zi| residual_ratio(coeffs, zi))
        .fold(0.0, f64::max);
    if worst <= tol {
        Ok(z)
    } else {
        Err(RootsError::NoConvergence { iterations, worst })
    }
}

/// Roots of a monic ascending-coefficient polynomial, zeros deflated first.
fn roots_of_monic(coeffs: &[Complex64], tol: f64) -> Result<Vec<Complex64>, RootsError> {
    let d = coeffs.len() - 1;
    let max_mag = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    // Count roots at the origin: leading ascending coefficients at rounding
    // level. Deflating them exactly is what lets heavily nilpotent inputs
    // come out clean.
    let mut zeros = 0;
    while zeros < d && coeffs[zeros].norm() <= ZERO_DEFLATION_REL * max_mag {
        zeros += 1;
    }
    let deflated = &coeffs[zeros..];
    let mut roots = vec![Complex64::ZERO; zeros];
    let rem_degree = deflated.len() - 1;
    if rem_degree == 0 {
        return Ok(roots);
    }
    if rem_degree == 1 {
        // Monic linear factor: z + c_0.
        roots.push(-deflated[0]);
        return Ok(roots);
    }
    let found = simultaneous_iteration(deflated, tol, Method::Aberth, 0.0)
        .or_else(|_| simultaneous_iteration(deflated, tol, Method::DurandKerner, 0.77))?;
    roots.extend(found);
    Ok(roots)
}

/// All roots of `p`, with repetition, such that every returned `z` satisfies
/// `|p(z)| <= tol * (coefficient scale bound at z)`.
pub fn find_roots(p: &CharPoly, tol: f64) -> Result<Vec<Complex64>, RootsError> {
    assert!(tol > 0.0, "tolerance must be positive");
    roots_of_monic(p.coeffs(), tol)
}

/// Roots of the original polynomial recovered through the parity
/// factorization: find the roots in `w = z^2`, spawn `+-sqrt(w)` (principal
/// branch), and append the structural zero for odd degrees. The output is
/// exactly closed under negation by construction.
pub fn roots_via_parity(
    f: &ParityFactorization,
    tol: f64,
) -> Result<Vec<Complex64>, RootsError> {
    let mut out = Vec::with_capacity(2 * f.reduced_degree() + 1);
    if f.reduced_degree() >= 1 {
        for w in roots_of_monic(f.reduced(), tol)? {
            let s = w.sqrt();
            out.push(s);
            out.push(-s);
        }
    }
    if f.is_odd() {
        out.push(Complex64::ZERO);
    }
    Ok(out)
}

/// Single-linkage clustering with linkage distance `radius`: each cluster
/// becomes one entry whose value is the cluster mean and whose multiplicity
/// is the cluster size.
pub fn cluster(roots: &[Complex64], radius: f64) -> Spectrum {
    assert!(radius > 0.0, "clustering radius must be positive");
    let k = roots.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..k {
        for j in i + 1..k {
            if (roots[i] - roots[j]).norm() <= radius {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut sums: Vec<(Complex64, usize)> = vec![(Complex64::ZERO, 0); k];
    for i in 0..k {
        let r = find(&mut parent, i);
        sums[r].0 += roots[i];
        sums[r].1 += 1;
    }
    let entries = sums
        .into_iter()
        .filter(|(_, count)| *count > 0)
        .map(|(sum, count)| SpectrumEntry { value: sum / count as f64, mult: count })
        .collect();
    Spectrum::new(entries)
}

/// Enforces exact closure of a spectrum under negation.
///
/// Entries within `tol` of the origin are snapped to exactly 0 and pooled.
/// Every remaining entry must find a partner of equal multiplicity within
/// `tol` of its negation; the pair is replaced by `(nu, -nu)` where `nu` is
/// the average of the entry and the negated partner. Used after clustering on
/// spectra that are symmetric by theory, so a missing partner is reported as
/// an error rather than patched over.
pub fn symmetrize_pm(s: &Spectrum, tol: f64) -> Result<Spectrum, RootsError> {
    let mut zero_mult = 0usize;
    let mut rest: Vec<SpectrumEntry> = Vec::new();
    for e in s.entries() {
        if e.value.norm() <= tol {
            zero_mult += e.mult;
        } else {
            rest.push(*e);
        }
    }
    let mut used = vec![false; rest.len()];
    let mut out: Vec<SpectrumEntry> = Vec::new();
    for i in 0..rest.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut best: Option<(usize, f64)> = None;
        for (j, cand) in rest.iter().enumerate() {
            if used[j] {
                continue;
            }
            let d = (cand.value + rest[i].value).norm();
            if d <= tol && best.map_or(true, |(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        let Some((j, _)) = best else {
            return Err(RootsError::PairingFailure { value: rest[i].value });
        };
        if rest[j].mult != rest[i].mult {
            return Err(RootsError::PairingFailure { value: rest[i].value });
        }
        used[j] = true;
        let nu = (rest[i].value - rest[j].value) / 2.0;
        out.push(SpectrumEntry { value: nu, mult: rest[i].mult });
        out.push(SpectrumEntry { value: -nu, mult: rest[i].mult });
    }
    if zero_mult > 0 {
        out.push(SpectrumEntry { value: Complex64::ZERO, mult: zero_mult });
    }
    Ok(Spectrum::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{char_poly, parity_split};
    use crate::test_support::{c, nilpotent_five};

    fn poly(coeffs: &[(f64, f64)]) -> CharPoly {
        CharPoly::from_coeffs(coeffs.iter().map(|&(re, im)| c(re, im)).collect()).unwrap()
    }

    #[test]
    fn linear_polynomial_is_solved_exactly() {
        let p = poly(&[(-2.0, 0.0), (1.0, 0.0)]);
        let roots = find_roots(&p, 1e-12).unwrap();
        assert_eq!(roots, vec![c(2.0, 0.0)]);
    }

    #[test]
    fn factorable_quadratic() {
        // w^2 - 5w + 4 = (w - 1)(w - 4).
        let p = poly(&[(4.0, 0.0), (-5.0, 0.0), (1.0, 0.0)]);
        let mut roots = find_roots(&p, 1e-12).unwrap();
        roots.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((roots[0] - c(1.0, 0.0)).norm() < 1e-10, "got {}", roots[0]);
        assert!((roots[1] - c(4.0, 0.0)).norm() < 1e-10, "got {}", roots[1]);
    }

    #[test]
    fn quintuple_root_at_origin_stays_small() {
        let p = char_poly(&nilpotent_five());
        let roots = find_roots(&p, 1e-12).unwrap();
        assert_eq!(roots.len(), 5);
        for r in &roots {
            assert!(r.norm() <= 1e-3, "root {r} strays too far from the quintuple origin");
        }
    }

    #[test]
    fn multiple_root_away_from_origin() {
        // (z - 1)^5: binomial coefficients with alternating signs.
        let p = poly(&[
            (-1.0, 0.0),
            (5.0, 0.0),
            (-10.0, 0.0),
            (10.0, 0.0),
            (-5.0, 0.0),
            (1.0, 0.0),
        ]);
        let roots = find_roots(&p, 1e-12).unwrap();
        for r in &roots {
            assert!(
                (r - c(1.0, 0.0)).norm() <= 1e-2,
                "quintuple root at 1 resolved to {r}, outside the eps^(1/5) ball"
            );
        }
    }

    #[test]
    fn refinement_recovers_full_accuracy_at_multiple_roots() {
        // (z - 1)^5 again: the cluster mean lands somewhere in the
        // eps^(1/5) ball, the fourth derivative pins the root exactly.
        let p = poly(&[
            (-1.0, 0.0),
            (5.0, 0.0),
            (-10.0, 0.0),
            (10.0, 0.0),
            (-5.0, 0.0),
            (1.0, 0.0),
        ]);
        let rough = c(1.0 + 3e-3, -2e-3);
        let refined = refine_multiple_root(p.coeffs(), rough, 5, 1e-2);
        assert!(
            (refined - c(1.0, 0.0)).norm() <= 1e-13,
            "refined to {refined}, still off"
        );
    }

    #[test]
    fn refinement_respects_the_trust_radius() {
        // Derivative of (z - 1)(z - 3)^2 is 3z^2 - 14z + 15 with roots
        // 5/3 and 3; from near the simple root at 1, Newton on the
        // derivative runs away to 5/3 and must be rejected.
        let p = poly(&[(-9.0, 0.0), (15.0, 0.0), (-7.0, 0.0), (1.0, 0.0)]);
        let rough = c(1.0 + 1e-4, 0.0);
        let kept = refine_multiple_root(p.coeffs(), rough, 2, 1e-2);
        assert_eq!(kept, rough);
    }

    #[test]
    fn refinement_with_multiplicity_one_is_plain_newton() {
        let p = poly(&[(-2.0, 0.0), (1.0, 0.0)]);
        let refined = refine_multiple_root(p.coeffs(), c(2.25, 0.0), 1, 1.0);
        assert!((refined - c(2.0, 0.0)).norm() <= 1e-14);
    }

    #[test]
    fn cluster_merges_within_radius() {
        let s = cluster(&[c(1.0, 0.0), c(1.0, 1e-12), c(4.0, 0.0)], 1e-8);
        assert_eq!(s.entries().len(), 2);
        assert_eq!(s.entries()[0].mult, 2);
        assert!((s.entries()[0].value - c(1.0, 0.0)).norm() < 1e-11);
        assert_eq!(s.entries()[1].mult, 1);
        assert_eq!(s.entries()[1].value, c(4.0, 0.0));
    }

    #[test]
    fn cluster_of_quintuple_root() {
        let p = char_poly(&nilpotent_five());
        let roots = find_roots(&p, 1e-12).unwrap();
        let s = cluster(&roots, 1e-2);
        assert_eq!(s.entries().len(), 1);
        assert_eq!(s.entries()[0].mult, 5);
        assert!(s.entries()[0].value.norm() <= 1e-3);
    }

    #[test]
    fn cluster_keeps_separated_roots_apart() {
        let roots = [c(-3.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(3.0, 0.0)];
        let s = cluster(&roots, 1e-8);
        assert_eq!(s.entries().len(), 4);
        assert!(s.entries().iter().all(|e| e.mult == 1));
        assert_eq!(s.total(), 4);
    }

    #[test]
    fn cluster_total_preserves_root_count() {
        let roots = [c(0.0, 0.0), c(1e-9, 0.0), c(2.0, 1.0), c(2.0, 1.0)];
        let s = cluster(&roots, 1e-8);
        assert_eq!(s.total(), roots.len());
    }

    #[test]
    fn symmetrize_averages_near_pairs() {
        let s = Spectrum::new(vec![
            SpectrumEntry { value: c(1.0000001, 0.0), mult: 1 },
            SpectrumEntry { value: c(-0.9999999, 0.0), mult: 1 },
        ]);
        let sym = symmetrize_pm(&s, 1e-3).unwrap();
        assert_eq!(sym.entries().len(), 2);
        let plus = sym.entries().iter().find(|e| e.value.re > 0.0).unwrap();
        assert!((plus.value - c(1.0, 0.0)).norm() < 1e-7);
        // Exact closure: the two entries are bitwise negations.
        assert_eq!(sym.entries()[0].value, -sym.entries()[1].value);
    }

    #[test]
    fn symmetrize_snaps_near_zero() {
        let s = Spectrum::new(vec![SpectrumEntry { value: c(1e-9, 0.0), mult: 1 }]);
        let sym = symmetrize_pm(&s, 1e-8).unwrap();
        assert_eq!(sym.entries(), &[SpectrumEntry { value: Complex64::ZERO, mult: 1 }]);
    }

    #[test]
    fn symmetrize_reports_missing_partner() {
        let s = Spectrum::new(vec![
            SpectrumEntry { value: c(2.0, 0.0), mult: 1 },
            SpectrumEntry { value: c(3.0, 0.0), mult: 1 },
        ]);
        match symmetrize_pm(&s, 1e-6) {
            Err(RootsError::PairingFailure { .. }) => {}
            other => panic!("expected PairingFailure, got {other:?}"),
        }
    }

    #[test]
    fn parity_route_is_exactly_negation_closed() {
        let sub: Vec<_> = [1.3, -0.4, 0.9, 2.0, -1.6].iter().map(|&r| c(r, r / 2.0)).collect();
        let sup: Vec<_> = [0.7, 1.1, -0.2, 0.5, 1.9].iter().map(|&r| c(-r, 0.3)).collect();
        let j = crate::matrix::TridiagonalMatrix::make_zero_diag(sub, sup).unwrap();
        let f = parity_split(&char_poly(&j)).unwrap();
        let roots = roots_via_parity(&f, 1e-12).unwrap();
        assert_eq!(roots.len(), 6);
        for chunk in roots.chunks(2).take(3) {
            assert_eq!(chunk[0], -chunk[1], "spawned pair must be exact negations");
        }
    }

    #[test]
    fn parity_route_keeps_structural_zero_for_odd_orders() {
        let f = parity_split(&char_poly(&nilpotent_five())).unwrap();
        let roots = roots_via_parity(&f, 1e-12).unwrap();
        assert_eq!(roots.len(), 5);
        // w^2 deflates exactly, so every root is exactly zero here.
        assert!(roots.iter().all(|r| *r == Complex64::ZERO));
    }
}
