//! Property tests for the exact invariants: parity zeros, sign-involution
//! identities, root roundtrips, spectral-mapping consistency and unperturbed
//! recovery. These hold for every well-formed input, not just fixtures, so
//! they are driven by random generation.

use num_complex::Complex64;
use periodiag::charpoly::{char_poly, determinant, CharPoly};
use periodiag::matrix::{apply_sign_involution, PerturbationParams, TridiagonalMatrix};
use periodiag::oracle::match_spectra;
use periodiag::roots::find_roots;
use periodiag::spectra::{map_to_alternating, map_to_two_periodic, zero_diag_spectrum};
use proptest::collection::vec;
use proptest::prelude::*;

fn annulus(rmin: f64, rmax: f64) -> impl Strategy<Value = Complex64> {
    (rmin..rmax, 0.0..std::f64::consts::TAU)
        .prop_map(|(r, th)| Complex64::from_polar(r, th))
}

fn disk(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..radius, 0.0..std::f64::consts::TAU)
        .prop_map(|(r, th)| Complex64::from_polar(r, th))
}

/// Random irreducible zero-diagonal matrix of order 2..=max_n.
fn zero_diag(max_n: usize) -> impl Strategy<Value = TridiagonalMatrix> {
    (1..max_n)
        .prop_flat_map(|l| (vec(annulus(0.1, 2.0), l), vec(annulus(0.1, 2.0), l)))
        .prop_map(|(sub, sup)| TridiagonalMatrix::make_zero_diag(sub, sup).unwrap())
}

/// Random irreducible matrix with an arbitrary diagonal.
fn general(max_n: usize) -> impl Strategy<Value = TridiagonalMatrix> {
    (1..max_n)
        .prop_flat_map(|l| {
            (
                vec(annulus(0.1, 2.0), l),
                vec(disk(2.0), l + 1),
                vec(annulus(0.1, 2.0), l),
            )
        })
        .prop_map(|(sub, diag, sup)| TridiagonalMatrix::new(sub, diag, sup).unwrap())
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    vec(disk(2.0), n)
}

/// Monic coefficients (ascending) of the polynomial with the given roots.
fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::ONE];
    for r in roots {
        let mut next = vec![Complex64::ZERO; c.len() + 1];
        for (j, &cj) in c.iter().enumerate() {
            next[j + 1] += cj;
            next[j] -= r * cj;
        }
        c = next;
    }
    c
}

proptest! {
    /// Characteristic polynomials of zero-diagonal matrices have exact zeros
    /// at every coefficient whose degree has the wrong parity.
    #[test]
    fn wrong_parity_coefficients_vanish_exactly(j in zero_diag(12)) {
        let chi = char_poly(&j);
        let n = j.n();
        for (k, c) in chi.coeffs().iter().enumerate() {
            if (n - k) % 2 == 1 {
                prop_assert_eq!(*c, Complex64::ZERO);
            }
        }
    }

    /// The sign involution squares to the identity and conjugating a
    /// zero-diagonal matrix with it negates the product, both bitwise.
    #[test]
    fn sign_involution_identities((j, v) in zero_diag(10).prop_flat_map(|j| {
        let n = j.n();
        (Just(j), vector(n))
    })) {
        prop_assert_eq!(apply_sign_involution(&apply_sign_involution(&v)), v.clone());
        let conjugated = apply_sign_involution(&j.apply(&apply_sign_involution(&v)));
        let negated: Vec<Complex64> = j.apply(&v).iter().map(|z| -z).collect();
        prop_assert_eq!(conjugated, negated);
    }

    /// The determinant recurrence agrees with the constant coefficient of
    /// the characteristic polynomial up to the exact sign.
    #[test]
    fn determinant_is_the_signed_constant_coefficient(t in general(10)) {
        let det = determinant(&t);
        let c0 = char_poly(&t).coeffs()[0];
        let signed = if t.n() % 2 == 0 { c0 } else { -c0 };
        let scale = det.norm().max(c0.norm()).max(f64::MIN_POSITIVE);
        prop_assert!((det - signed).norm() <= 1e-12 * scale);
    }

    /// Root finding inverts polynomial expansion for well-separated roots.
    #[test]
    fn root_finding_inverts_expansion(roots in vec(annulus(0.2, 1.5), 1..=6)
        .prop_filter("pairwise separated", |rs| {
            rs.iter()
                .enumerate()
                .all(|(i, a)| rs[..i].iter().all(|b| (a - b).norm() > 5e-2))
        }))
    {
        let p = CharPoly::from_coeffs(poly_from_roots(&roots)).unwrap();
        let found = find_roots(&p, periodiag::DEFAULT_ROOT_TOL).unwrap();
        prop_assert_eq!(found.len(), roots.len());
        for r in &roots {
            let nearest = found.iter().map(|f| (f - r).norm()).fold(f64::INFINITY, f64::min);
            prop_assert!(nearest <= 1e-8, "root {} missed by {:.2e}", r, nearest);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Every eigenvalue the alternating mapping emits squares back onto the
    /// source spectrum: v^2 - x^2 must be some lambda^2 (or 0 for the part
    /// coming from the odd-order kernel). Totals are always preserved.
    #[test]
    fn alternating_mapping_inverts_onto_the_source(
        j in zero_diag(9),
        x in disk(2.0),
    ) {
        let ps = zero_diag_spectrum(&j, periodiag::DEFAULT_ROOT_TOL).unwrap();
        let mapped = map_to_alternating(&ps, x);
        prop_assert_eq!(mapped.total(), j.n());
        let scale = 1.0
            + x.norm_sqr()
            + ps.pairs().iter().map(|(l, _)| l.norm_sqr()).fold(0.0, f64::max);
        for e in mapped.entries() {
            let w = e.value * e.value - x * x;
            let hit = ps.pairs().iter().any(|(l, _)| (w - l * l).norm() <= 1e-6 * scale)
                || (ps.zero_mult() > 0 && w.norm() <= 1e-6 * scale);
            prop_assert!(hit, "mapped value {} does not invert onto the source", e.value);
        }
    }

    /// The two-periodic mapping is the alternating one followed by a uniform
    /// shift of (x + y) / 2.
    #[test]
    fn two_periodic_mapping_is_a_shifted_alternating_one(
        j in zero_diag(9),
        x in disk(2.0),
        y in disk(2.0),
    ) {
        let ps = zero_diag_spectrum(&j, periodiag::DEFAULT_ROOT_TOL).unwrap();
        let p = PerturbationParams::new(x, y).unwrap();
        let two = map_to_two_periodic(&ps, &p);
        prop_assert_eq!(two.total(), j.n());
        let alt = map_to_alternating(&ps, p.half_difference());
        let shift = p.half_sum();
        let mut shifted: Vec<Complex64> = alt.expand().iter().map(|z| z + shift).collect();
        let mut direct = two.expand();
        shifted.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        direct.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        for (s, d) in shifted.iter().zip(&direct) {
            prop_assert!((s - d).norm() <= 1e-9 * (1.0 + s.norm()));
        }
    }

    /// The characteristic-polynomial route and the dense eigensolver agree
    /// on matrices with arbitrary diagonals, where no closed form helps and
    /// the two share no code.
    #[test]
    fn charpoly_roots_match_the_dense_eigensolver(t in general(10)) {
        use periodiag::oracle::dense_eigen;
        use periodiag::roots::{cluster, default_cluster_radius};
        let raw = find_roots(&char_poly(&t), periodiag::DEFAULT_ROOT_TOL).unwrap();
        let mine = cluster(&raw, default_cluster_radius(&raw));
        let oracle = dense_eigen(&t.materialize_dense()).unwrap();
        let distance = match_spectra(&mine, &oracle).unwrap();
        prop_assert!(distance <= 1e-7, "spectra differ by {distance:.2e}");
    }

    /// A zero perturbation returns the unperturbed spectrum without any
    /// rounding at all.
    #[test]
    fn zero_perturbation_recovers_the_spectrum_exactly(j in zero_diag(9)) {
        let ps = zero_diag_spectrum(&j, periodiag::DEFAULT_ROOT_TOL).unwrap();
        let p = PerturbationParams::new(Complex64::ZERO, Complex64::ZERO).unwrap();
        let recovered = map_to_two_periodic(&ps, &p);
        let distance = match_spectra(&recovered, &ps.to_spectrum()).unwrap();
        prop_assert_eq!(distance, 0.0);
    }

    /// Symmetrized spectra are exactly negation-closed even when the input
    /// values carry asymmetric noise below the clustering radius.
    #[test]
    fn symmetrization_survives_asymmetric_noise(
        bases in vec(annulus(0.1, 2.0), 1..=4),
        jitters in vec(disk(1e-9), 8),
        odd in proptest::bool::ANY,
    ) {
        use periodiag::roots::{cluster, default_cluster_radius, symmetrize_pm};
        let mut values = Vec::new();
        for (i, b) in bases.iter().enumerate() {
            values.push(b + jitters[2 * i]);
            values.push(-b + jitters[2 * i + 1]);
        }
        if odd {
            values.push(Complex64::ZERO);
        }
        let radius = default_cluster_radius(&values);
        let sym = symmetrize_pm(&cluster(&values, radius), radius).unwrap();
        prop_assert_eq!(sym.total(), values.len());
        for e in sym.entries() {
            if e.value != Complex64::ZERO {
                prop_assert!(
                    sym.entries().iter().any(|o| o.value == -e.value && o.mult == e.mult),
                    "no exact negation partner for {}",
                    e.value
                );
            }
        }
    }
}
