//! The randomized self-check behind the CLI `verify` command: seeded random
//! matrices and perturbations, every closed-form result cross-checked
//! against an independent dense solver, exact invariants checked exactly.
//! This run uses a smaller corpus than the acceptance configuration so it
//! finishes instantly.

use periodiag::cli::{run_verify, VerifyConfig};

fn main() {
    let cfg = VerifyConfig { count: 40, nmax: 10, seed: 123, ..Default::default() };
    let stats = run_verify(&cfg);

    println!("instances checked:           {}", stats.instances);
    println!("  degenerate constructions:  {}", stats.degenerate_instances);
    println!("spectrum match vs oracle:    {:.2e}", stats.max_spectrum_match);
    println!("determinant rel error:       {:.2e}", stats.max_det_rel);
    println!("  even-order entries product {:.2e}", stats.max_det_even_rel);
    println!("eigenvector residual:        {:.2e}", stats.max_eigen_residual);
    println!("chain residual:              {:.2e}", stats.max_chain_residual);
    println!("reflected chain residual:    {:.2e}", stats.max_reflect_residual);
    println!("left chain residual:         {:.2e}", stats.max_left_residual);
    println!("square identity deviation:   {:.2e}", stats.max_square_dev);
    println!("degenerate cluster sum:      {:.2e}", stats.max_degenerate_sum);
    println!("symmetry violations:         {}", stats.symmetry_violations);
    for f in &stats.failures {
        println!("failure: {f}");
    }
    println!("\npassed: {}", stats.passed());
    assert!(stats.passed());
}
