//! Command-line front end and the randomized verification corpus.
//!
//! The binary speaks JSON on standard streams: matrices in, spectra, chains,
//! determinants or reports out. Commands: `gen` builds matrices, `spectrum`
//! computes eigenvalues by the closed-form route or the dense oracle, `map`
//! applies the diagonal-perturbation mappings to an unperturbed matrix,
//! `eigvec` emits Jordan chains, `det` compares determinant routes, `verify`
//! runs the seeded self-check corpus, and `bench` times the closed-form
//! route against the oracle.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.
//! Output bytes are deterministic for fixed inputs and seeds; anything
//! incidental (the seed echo, diagnostics) goes to standard error.

use crate::eigvec::{jordan_chain_j, left_chain, reflect_chain, spectral_chains};
use crate::jsonio;
use crate::matrix::{DiagonalShape, PerturbationParams, TridiagonalMatrix};
use crate::oracle::{
    chain_residual, check_square_identity, dense_determinant, dense_eigen, dense_eigenvalues,
    left_chain_residual, match_spectra, ResidualReport, MAX_DENSE_ORDER,
};
use crate::roots::{cluster, default_cluster_radius, roots_via_parity, symmetrize_pm, Spectrum};
use crate::spectra::{
    det_alternating, det_j_even, det_two_periodic, map_to_alternating, map_to_two_periodic,
    mapped_spectrum, zero_diag_spectrum,
};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

/// Corpus gate: optimal-assignment distance between the closed-form spectrum
/// of `B` and the dense oracle's.
pub const GATE_SPECTRUM_MATCH: f64 = 1e-7;
/// Corpus gate: closed-form vs LU determinant, relative.
pub const GATE_DET_REL: f64 = 1e-9;
/// Corpus gate: entries-product vs recurrence determinant on even orders,
/// relative.
pub const GATE_DET_EVEN_REL: f64 = 1e-12;
/// Corpus gate: scaled residual of every eigenvector and chain level, and of
/// reflected and left chains.
pub const GATE_CHAIN: f64 = 1e-8;
/// Corpus gate: modulus of the summed near-zero dense eigenvalues on
/// degenerate instances (the cluster centroid times its size).
pub const GATE_DEGENERATE_SUM: f64 = 1e-6;

#[derive(Parser, Debug)]
#[command(
    name = "periodiag",
    about = "Closed-form spectra, determinants and Jordan chains for \
             tridiagonal matrices with a two-periodic diagonal",
    version
)]
pub struct JobConfig {
    #[command(subcommand)]
    command: Command,
    /// Residual tolerance for polynomial root acceptance.
    #[arg(long, global = true, default_value_t = crate::DEFAULT_ROOT_TOL)]
    tol: f64,
    /// Residual tolerance for eigenvector and chain acceptance.
    #[arg(long, global = true, default_value_t = crate::DEFAULT_CHAIN_TOL)]
    chain_tol: f64,
    /// Emit JSON on standard output. Always on; accepted for explicitness.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized commands (gen random-j, verify, bench).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Read the input matrix from this file instead of standard input.
    #[arg(long = "in", global = true, value_name = "PATH")]
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a matrix and print it as JSON.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Eigenvalues of the input matrix, closed-form or dense.
    Spectrum {
        /// mapped: solve the stripped zero-diagonal problem and map the
        /// result (needs a zero, alternating or two-periodic diagonal).
        /// oracle: dense Hessenberg QR on the materialized matrix.
        #[arg(long, value_enum, default_value_t = SpectrumMethod::Mapped)]
        method: SpectrumMethod,
    },
    /// Spectrum of a diagonal perturbation of the (zero-diagonal) input,
    /// computed without forming the perturbed matrix.
    Map {
        /// First diagonal value, as `re` or `re,im`.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        x: Option<Complex64>,
        /// Second diagonal value; requires --x.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        y: Option<Complex64>,
    },
    /// Jordan chains of the input matrix, by the closed-form constructions.
    Eigvec {
        /// Emit left chains (row eigenvectors) instead of right ones.
        #[arg(long)]
        left: bool,
    },
    /// Determinant of the input matrix.
    Det {
        #[arg(long, value_enum, default_value_t = DetMethod::Recurrence)]
        method: DetMethod,
    },
    /// Run the randomized self-check corpus and report residual maxima.
    Verify {
        /// Number of random instances.
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Largest matrix order to draw.
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
    /// Time the closed-form spectrum against the dense oracle.
    Bench {
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Random zero-diagonal matrix; off-diagonal moduli in [0.1, 2].
    RandomJ {
        /// Matrix order (at least 2).
        #[arg(long)]
        n: usize,
    },
    /// The classical matrix with superdiagonal 1..N and subdiagonal N..1;
    /// its eigenvalues are -N, -N+2, ..., N.
    SylvesterKac {
        /// The parameter N; the matrix has order N + 1.
        #[arg(long)]
        n: usize,
    },
    /// The built-in 5x5 example whose only eigenvalue is 0 with a full
    /// Jordan block.
    PaperExample,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SpectrumMethod {
    Mapped,
    Oracle,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DetMethod {
    /// Three-term determinant recurrence on the stored diagonals.
    Recurrence,
    /// Closed-form product over the paired spectrum (entries product on
    /// even-order zero-diagonal matrices).
    Closed,
    /// LU factorization of the materialized matrix.
    Dense,
}

/// Parses `re` or `re,im` into a complex number.
fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let bad = |p: &str| format!("`{p}` is not a real number (expected `re` or `re,im`)");
    match parts.as_slice() {
        [re] => Ok(Complex64::new(re.trim().parse().map_err(|_| bad(re))?, 0.0)),
        [re, im] => Ok(Complex64::new(
            re.trim().parse().map_err(|_| bad(re))?,
            im.trim().parse().map_err(|_| bad(im))?,
        )),
        _ => Err("expected `re` or `re,im`".to_string()),
    }
}

/// The 5x5 zero-diagonal matrix with characteristic polynomial exactly
/// `z^5`, used by `gen paper-example` and the documentation.
fn quintuple_zero_example() -> TridiagonalMatrix {
    let one = Complex64::ONE;
    TridiagonalMatrix::make_zero_diag(
        vec![one; 4],
        vec![one, one, Complex64::new(-4.0, 0.0), Complex64::new(2.0, 0.0)],
    )
    .expect("the built-in example is well formed")
}

fn read_input(input: &Option<PathBuf>) -> Result<String, String> {
    match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(buf)
        }
    }
}

fn input_matrix(cfg: &JobConfig) -> Result<TridiagonalMatrix, String> {
    let text = read_input(&cfg.input)?;
    jsonio::parse_matrix(&text).map_err(|e| e.to_string())
}

fn random_annulus(rng: &mut ChaCha8Rng, rmin: f64, rmax: f64) -> Complex64 {
    let r = rmin + (rmax - rmin) * rng.gen::<f64>();
    let th = std::f64::consts::TAU * rng.gen::<f64>();
    Complex64::from_polar(r, th)
}

/// Random irreducible zero-diagonal matrix with off-diagonal moduli in
/// [0.1, 2], the distribution the verification corpus draws from.
pub fn random_zero_diag(rng: &mut ChaCha8Rng, n: usize) -> TridiagonalMatrix {
    assert!(n >= 2);
    let sub = (0..n - 1).map(|_| random_annulus(rng, 0.1, 2.0)).collect();
    let sup = (0..n - 1).map(|_| random_annulus(rng, 0.1, 2.0)).collect();
    TridiagonalMatrix::make_zero_diag(sub, sup).expect("annulus entries are nonzero")
}

pub fn main_entry() -> ExitCode {
    let cfg = JobConfig::parse();
    match run(&cfg) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Executes one parsed job. `Ok(true)` is success, `Ok(false)` a verification
/// failure (exit 1), `Err` a usage or input problem (exit 2).
fn run(cfg: &JobConfig) -> Result<bool, String> {
    match &cfg.command {
        Command::Gen { kind } => {
            let m = match kind {
                GenKind::RandomJ { n } => {
                    if *n < 2 {
                        return Err("random-j needs --n of at least 2".into());
                    }
                    eprintln!("seed: {}", cfg.seed);
                    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                    random_zero_diag(&mut rng, *n)
                }
                GenKind::SylvesterKac { n } => {
                    TridiagonalMatrix::sylvester_kac(*n).map_err(|e| e.to_string())?
                }
                GenKind::PaperExample => quintuple_zero_example(),
            };
            println!("{}", jsonio::write_matrix(&m));
            Ok(true)
        }
        Command::Spectrum { method } => {
            let m = input_matrix(cfg)?;
            let s = match method {
                SpectrumMethod::Mapped => {
                    mapped_spectrum(&m, cfg.tol).map_err(|e| e.to_string())?
                }
                SpectrumMethod::Oracle => {
                    dense_eigen(&m.materialize_dense()).map_err(|e| e.to_string())?
                }
            };
            println!("{}", jsonio::write_spectrum(&s));
            Ok(true)
        }
        Command::Map { x, y } => {
            let m = input_matrix(cfg)?;
            if !m.has_zero_diagonal() {
                return Err(
                    "map expects an unperturbed zero-diagonal matrix; \
                     pass the perturbation as --x/--y"
                        .into(),
                );
            }
            let ps = zero_diag_spectrum(&m, cfg.tol).map_err(|e| e.to_string())?;
            let s = match (x, y) {
                (None, None) => ps.to_spectrum(),
                (Some(x), None) => map_to_alternating(&ps, *x),
                (Some(x), Some(y)) => {
                    let p = PerturbationParams::new(*x, *y).map_err(|e| e.to_string())?;
                    map_to_two_periodic(&ps, &p)
                }
                (None, Some(_)) => return Err("--y requires --x".into()),
            };
            println!("{}", jsonio::write_spectrum(&s));
            Ok(true)
        }
        Command::Eigvec { left } => {
            let m = input_matrix(cfg)?;
            let mut chains =
                spectral_chains(&m, cfg.tol, cfg.chain_tol).map_err(|e| e.to_string())?;
            if *left {
                chains = chains.iter().map(|ch| left_chain(&m, ch)).collect();
            }
            println!("{}", jsonio::write_chains(&chains));
            Ok(true)
        }
        Command::Det { method } => {
            let m = input_matrix(cfg)?;
            let det = match method {
                DetMethod::Recurrence => crate::charpoly::determinant(&m),
                DetMethod::Closed => closed_determinant(&m, cfg.tol)?,
                DetMethod::Dense => {
                    if m.n() > MAX_DENSE_ORDER {
                        return Err(format!(
                            "dense determinant supports orders up to {MAX_DENSE_ORDER}, got {}",
                            m.n()
                        ));
                    }
                    dense_determinant(&m.materialize_dense())
                }
            };
            println!("{}", jsonio::write_det(det));
            Ok(true)
        }
        Command::Verify { count, nmax } => {
            eprintln!("seed: {}", cfg.seed);
            let stats = run_verify(&VerifyConfig {
                count: *count,
                nmax: *nmax,
                seed: cfg.seed,
                root_tol: cfg.tol,
                chain_tol: cfg.chain_tol,
            });
            println!("{}", jsonio::write_report(&stats.to_report()));
            for f in &stats.failures {
                eprintln!("failure: {f}");
            }
            Ok(stats.passed())
        }
        Command::Bench { count, nmax } => {
            eprintln!("seed: {}", cfg.seed);
            run_bench(*count, *nmax, cfg.seed, cfg.tol).map_err(|e| e.to_string())?;
            Ok(true)
        }
    }
}

/// Closed-form determinant by diagonal shape. Even zero-diagonal orders use
/// the entries product; odd ones are exactly singular (their characteristic
/// polynomial has no constant term). The perturbed shapes go through the
/// paired spectrum.
fn closed_determinant(m: &TridiagonalMatrix, tol: f64) -> Result<Complex64, String> {
    match m.diagonal_shape() {
        DiagonalShape::Zero => {
            if m.n() % 2 == 0 {
                det_j_even(m).map_err(|e| e.to_string())
            } else {
                Ok(Complex64::ZERO)
            }
        }
        DiagonalShape::Alternating(x) => {
            let ps = zero_diag_spectrum(&m.strip_diagonal(), tol).map_err(|e| e.to_string())?;
            Ok(det_alternating(&ps, x))
        }
        DiagonalShape::TwoPeriodic(p) => {
            let ps = zero_diag_spectrum(&m.strip_diagonal(), tol).map_err(|e| e.to_string())?;
            Ok(det_two_periodic(&ps, &p))
        }
        DiagonalShape::Other => {
            Err("closed-form determinants need a zero, alternating or two-periodic diagonal"
                .into())
        }
    }
}

/// Configuration of the verification corpus.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub count: usize,
    pub nmax: usize,
    pub seed: u64,
    pub root_tol: f64,
    pub chain_tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            count: 50,
            nmax: 8,
            seed: 0,
            root_tol: crate::DEFAULT_ROOT_TOL,
            chain_tol: crate::DEFAULT_CHAIN_TOL,
        }
    }
}

/// Aggregated maxima over the corpus, one slot per check family. Every slot
/// has an explicit gate; [`VerifyStats::passed`] is the conjunction.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyStats {
    pub instances: usize,
    /// Closed-form spectrum of `B` vs the dense oracle, matching distance.
    pub max_spectrum_match: f64,
    /// Closed-form determinant of `B` vs LU, relative.
    pub max_det_rel: f64,
    /// Entries-product determinant vs recurrence on even orders, relative.
    pub max_det_even_rel: f64,
    /// Scaled residual of every first chain vector.
    pub max_eigen_residual: f64,
    /// Scaled residual over the deeper chain levels.
    pub max_chain_residual: f64,
    /// Scaled residual of reflected chains at the negated eigenvalue.
    pub max_reflect_residual: f64,
    /// Scaled residual of left chains against the transpose.
    pub max_left_residual: f64,
    /// Largest entrywise deviation of the square identity (absolute).
    pub max_square_dev: f64,
    /// Square-identity checks that failed their own entry-scale gate.
    pub square_violations: usize,
    /// Instances with an exactly degenerate perturbation checked against
    /// the dense oracle.
    pub degenerate_instances: usize,
    /// Modulus of the summed near-zero dense eigenvalues on those.
    pub max_degenerate_sum: f64,
    /// Exact-symmetry checks that failed: negation closure, totals, parity.
    pub symmetry_violations: usize,
    /// Hard errors, one line per affected instance.
    pub failures: Vec<String>,
}

impl VerifyStats {
    fn new() -> Self {
        Self {
            instances: 0,
            max_spectrum_match: 0.0,
            max_det_rel: 0.0,
            max_det_even_rel: 0.0,
            max_eigen_residual: 0.0,
            max_chain_residual: 0.0,
            max_reflect_residual: 0.0,
            max_left_residual: 0.0,
            max_square_dev: 0.0,
            square_violations: 0,
            degenerate_instances: 0,
            max_degenerate_sum: 0.0,
            symmetry_violations: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.max_spectrum_match <= GATE_SPECTRUM_MATCH
            && self.max_det_rel <= GATE_DET_REL
            && self.max_det_even_rel <= GATE_DET_EVEN_REL
            && self.max_eigen_residual <= GATE_CHAIN
            && self.max_chain_residual <= GATE_CHAIN
            && self.max_reflect_residual <= GATE_CHAIN
            && self.max_left_residual <= GATE_CHAIN
            && self.square_violations == 0
            && self.max_degenerate_sum <= GATE_DEGENERATE_SUM
            && self.symmetry_violations == 0
            && self.failures.is_empty()
    }

    /// Collapses the slots into the four-field report the CLI prints.
    pub fn to_report(&self) -> ResidualReport {
        ResidualReport {
            max_eigen_residual: self.max_eigen_residual,
            max_chain_residual: self
                .max_chain_residual
                .max(self.max_reflect_residual)
                .max(self.max_left_residual),
            spectrum_match_distance: self.max_spectrum_match.max(self.max_degenerate_sum),
            passed: self.passed(),
        }
    }
}

fn fold(slot: &mut f64, value: f64) {
    if value > *slot {
        *slot = value;
    }
}

/// Runs the seeded corpus: random instances first, then a few crafted
/// matrices with defective eigenvalues that random entries never produce.
/// Deterministic for a fixed configuration; instances are checked in index
/// order.
pub fn run_verify(cfg: &VerifyConfig) -> VerifyStats {
    let mut stats = VerifyStats::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let nmax = cfg.nmax.max(2);
    for idx in 0..cfg.count {
        let n = rng.gen_range(2..=nmax);
        let j = random_zero_diag(&mut rng, n);
        let x = random_annulus(&mut rng, 0.0, 2.0);
        let y = random_annulus(&mut rng, 0.0, 2.0);
        stats.instances += 1;
        if let Err(e) = verify_instance(&j, x, y, cfg, &mut stats) {
            stats.failures.push(format!("instance {idx}: {e}"));
        }
    }
    let crafted: Vec<(&str, TridiagonalMatrix)> = vec![
        ("quintuple zero", quintuple_zero_example()),
        ("double pair", double_pair_example()),
    ];
    for (label, j) in crafted {
        let x = random_annulus(&mut rng, 0.1, 2.0);
        let y = random_annulus(&mut rng, 0.1, 2.0);
        stats.instances += 1;
        if let Err(e) = verify_instance(&j, x, y, cfg, &mut stats) {
            stats.failures.push(format!("crafted instance ({label}): {e}"));
        }
    }
    stats
}

/// A 4x4 zero-diagonal matrix whose eigenvalues +-1 both have algebraic
/// multiplicity 2 with a single eigenvector each.
fn double_pair_example() -> TridiagonalMatrix {
    let one = Complex64::ONE;
    TridiagonalMatrix::make_zero_diag(
        vec![one; 3],
        vec![
            Complex64::new(2.0, 0.0),
            Complex64::new(-0.5, 0.0),
            Complex64::new(0.5, 0.0),
        ],
    )
    .expect("the crafted example is well formed")
}

fn relative_gap(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(f64::MIN_POSITIVE)
}

/// Exact symmetry checks on a symmetrized spectrum: every nonzero entry has
/// a bitwise negation partner with the same multiplicity.
fn negation_closed(s: &Spectrum) -> bool {
    s.entries().iter().all(|e| {
        e.value == Complex64::ZERO
            || s.entries()
                .iter()
                .any(|o| o.value == -e.value && o.mult == e.mult)
    })
}

/// All checks for one corpus instance. Residual maxima accumulate into
/// `stats`; hard errors abort the instance and are reported by the caller.
fn verify_instance(
    j: &TridiagonalMatrix,
    x: Complex64,
    y: Complex64,
    cfg: &VerifyConfig,
    stats: &mut VerifyStats,
) -> Result<(), crate::Error> {
    let n = j.n();
    let p = PerturbationParams::new(x, y)?;

    // Symmetrization invariants, on the raw pipeline output.
    let chi = crate::charpoly::char_poly(j);
    let parts = crate::charpoly::parity_split(&chi)?;
    let raw = roots_via_parity(&parts, cfg.root_tol)?;
    let radius = default_cluster_radius(&raw);
    let sym = symmetrize_pm(&cluster(&raw, radius), radius)?;
    if !negation_closed(&sym) || sym.total() != n {
        stats.symmetry_violations += 1;
    }

    // Paired bookkeeping invariants.
    let ps = zero_diag_spectrum(j, cfg.root_tol)?;
    let pair_total = 2 * ps.pairs().iter().map(|&(_, r)| r).sum::<usize>() + ps.zero_mult();
    let parity_ok = if n % 2 == 0 { ps.zero_mult() == 0 } else { ps.zero_mult() % 2 == 1 };
    if pair_total != n || !parity_ok || ps.to_spectrum().total() != n {
        stats.symmetry_violations += 1;
    }

    // Closed-form spectrum and determinant of B against the dense oracle.
    let b = TridiagonalMatrix::make_two_periodic(j, &p)?;
    let bd = b.materialize_dense();
    let mapped = map_to_two_periodic(&ps, &p);
    fold(&mut stats.max_spectrum_match, match_spectra(&mapped, &dense_eigen(&bd)?)?);
    fold(&mut stats.max_det_rel, relative_gap(det_two_periodic(&ps, &p), dense_determinant(&bd)));
    if n % 2 == 0 {
        fold(
            &mut stats.max_det_even_rel,
            relative_gap(det_j_even(j)?, crate::charpoly::determinant(j)),
        );
    }

    // Square identity, gated by its own entry-scale rule.
    let square = check_square_identity(j, x);
    fold(&mut stats.max_square_dev, square.max_eigen_residual);
    if !square.passed {
        stats.square_violations += 1;
    }

    // Chains of J, A and B; every level must pass the scaled residual gate.
    let a = TridiagonalMatrix::make_alternating(j, x)?;
    for t in [j, &a, &b] {
        for ch in spectral_chains(t, cfg.root_tol, cfg.chain_tol)? {
            fold(
                &mut stats.max_eigen_residual,
                chain_residual(t, ch.eigenvalue(), &ch.vectors()[..1]),
            );
            if ch.len() > 1 {
                fold(
                    &mut stats.max_chain_residual,
                    chain_residual(t, ch.eigenvalue(), ch.vectors()),
                );
            }
            let lc = left_chain(t, &ch);
            fold(
                &mut stats.max_left_residual,
                left_chain_residual(t, lc.eigenvalue(), lc.vectors()),
            );
        }
    }

    // Reflection: solve once at the representative, reflect, re-check at the
    // negated eigenvalue without another solve.
    for &(lam, r) in ps.pairs() {
        let plus = jordan_chain_j(j, lam, r, cfg.chain_tol)?;
        let minus = reflect_chain(&plus);
        fold(
            &mut stats.max_reflect_residual,
            chain_residual(j, minus.eigenvalue(), minus.vectors()),
        );
    }

    // Exactly degenerate perturbation x = i * lambda: the mapped spectrum
    // must contain 0 with doubled multiplicity and the dense spectrum a
    // near-zero cluster whose sum is tiny (individual eigenvalues of a
    // defective zero scatter like eps^(1/m), their centroid does not).
    if let Some(&(lam, r)) = ps.pairs().first() {
        let xd = Complex64::i() * lam;
        let mapped_d = map_to_alternating(&ps, xd);
        let zero_mult: usize = mapped_d
            .entries()
            .iter()
            .filter(|e| e.value == Complex64::ZERO)
            .map(|e| e.mult)
            .sum();
        if zero_mult != 2 * r {
            stats.failures.push(format!(
                "degenerate mapping: zero multiplicity {zero_mult}, expected {}",
                2 * r
            ));
        }
        let ad = TridiagonalMatrix::make_alternating(j, xd)?;
        let mut eigs = dense_eigenvalues(&ad.materialize_dense())?;
        eigs.sort_by(|u, v| u.norm().total_cmp(&v.norm()));
        let sum: Complex64 = eigs.iter().take(2 * r).sum();
        stats.degenerate_instances += 1;
        fold(&mut stats.max_degenerate_sum, sum.norm());
        // The defective zero's chains also go through the residual gate.
        for ch in spectral_chains(&ad, cfg.root_tol, cfg.chain_tol)? {
            fold(
                &mut stats.max_eigen_residual,
                chain_residual(&ad, ch.eigenvalue(), &ch.vectors()[..1]),
            );
            if ch.len() > 1 {
                fold(
                    &mut stats.max_chain_residual,
                    chain_residual(&ad, ch.eigenvalue(), ch.vectors()),
                );
            }
        }
    }
    Ok(())
}

fn run_bench(count: usize, nmax: usize, seed: u64, tol: f64) -> Result<(), crate::Error> {
    use std::time::Instant;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nmax = nmax.max(2).min(MAX_DENSE_ORDER);
    let instances: Vec<(TridiagonalMatrix, PerturbationParams)> = (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=nmax);
            let j = random_zero_diag(&mut rng, n);
            let x = random_annulus(&mut rng, 0.0, 2.0);
            let y = random_annulus(&mut rng, 0.0, 2.0);
            (j, PerturbationParams::new(x, y).expect("finite parameters"))
        })
        .collect();

    let t0 = Instant::now();
    let mut mapped = Vec::with_capacity(instances.len());
    for (j, p) in &instances {
        mapped.push(map_to_two_periodic(&zero_diag_spectrum(j, tol)?, p));
    }
    let mapped_seconds = t0.elapsed().as_secs_f64();

    let t1 = Instant::now();
    let mut dense = Vec::with_capacity(instances.len());
    for (j, p) in &instances {
        let b = TridiagonalMatrix::make_two_periodic(j, p)?;
        dense.push(dense_eigen(&b.materialize_dense())?);
    }
    let oracle_seconds = t1.elapsed().as_secs_f64();

    let mut max_distance: f64 = 0.0;
    for (m, d) in mapped.iter().zip(&dense) {
        max_distance = max_distance.max(match_spectra(m, d)?);
    }
    println!(
        "{{\"instances\":{},\"mapped_seconds\":{:.6},\"oracle_seconds\":{:.6},\
         \"max_distance\":{:.3e}}}",
        instances.len(),
        mapped_seconds,
        oracle_seconds,
        max_distance
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_argument_forms() {
        assert_eq!(parse_complex("1.5").unwrap(), Complex64::new(1.5, 0.0));
        assert_eq!(parse_complex("-2,0.25").unwrap(), Complex64::new(-2.0, 0.25));
        assert_eq!(parse_complex(" 0 , -1 ").unwrap(), Complex64::new(0.0, -1.0));
        assert!(parse_complex("1,2,3").is_err());
        assert!(parse_complex("abc").is_err());
    }

    #[test]
    fn random_matrices_are_deterministic_per_seed() {
        let mut r1 = ChaCha8Rng::seed_from_u64(42);
        let mut r2 = ChaCha8Rng::seed_from_u64(42);
        assert_eq!(random_zero_diag(&mut r1, 6), random_zero_diag(&mut r2, 6));
        let mut r3 = ChaCha8Rng::seed_from_u64(43);
        assert_ne!(random_zero_diag(&mut r1, 6), random_zero_diag(&mut r3, 6));
    }

    #[test]
    fn corpus_entries_stay_in_the_annulus() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let j = random_zero_diag(&mut rng, 12);
        for z in j.sub().iter().chain(j.sup()) {
            assert!((0.1..=2.0).contains(&z.norm()), "entry {z} outside the annulus");
        }
    }

    #[test]
    fn small_corpus_passes() {
        let stats = run_verify(&VerifyConfig { count: 4, nmax: 5, seed: 11, ..Default::default() });
        assert!(stats.passed(), "stats: {stats:?}");
        assert_eq!(stats.instances, 6);
        assert!(stats.degenerate_instances >= 4);
        assert!(stats.failures.is_empty());
    }

    #[test]
    fn corpus_is_deterministic() {
        let cfg = VerifyConfig { count: 3, nmax: 4, seed: 9, ..Default::default() };
        assert_eq!(run_verify(&cfg), run_verify(&cfg));
    }

    #[test]
    fn report_collapse_keeps_the_worst_slot() {
        let mut stats = VerifyStats::new();
        stats.max_chain_residual = 1e-12;
        stats.max_reflect_residual = 3e-11;
        stats.max_left_residual = 2e-12;
        let report = stats.to_report();
        assert_eq!(report.max_chain_residual, 3e-11);
        assert!(report.passed);
    }

    #[test]
    fn builtin_example_is_the_quintuple_zero() {
        let m = quintuple_zero_example();
        let chi = crate::charpoly::char_poly(&m);
        let mut want = vec![Complex64::ZERO; 6];
        want[5] = Complex64::ONE;
        assert_eq!(chi.coeffs(), &want[..]);
    }
}
