//! Searches all four detector settings for the largest violation on the
//! one-particle state, then confirms that a product state cannot violate.

use fock_nonlocal::optimize::minimize_ch;
use fock_nonlocal::{SearchOptions, TwoModeState};

fn main() -> Result<(), fock_nonlocal::Error> {
    let opts = SearchOptions::default();

    let psi = TwoModeState::single_particle_antisymmetric();
    let best = minimize_ch(&psi, &opts)?;
    println!(
        "one-particle state: CH = {:.10} after {} evaluations",
        best.value, best.evaluations
    );
    println!("  coarse grid value  {:.10}", best.coarse_value);
    println!("  (1 - sqrt 2)/2   = {:.10}", (1.0 - 2f64.sqrt()) / 2.0);
    let s = &best.settings;
    for (label, m) in [
        ("a ", s.a),
        ("a'", s.a_prime),
        ("b ", s.b),
        ("b'", s.b_prime),
    ] {
        println!("  {label}: theta = {:.6}, phi = {:.6}", m.theta(), m.phi());
    }

    let product = TwoModeState::basis(1, 0);
    let best = minimize_ch(&product, &opts)?;
    println!("|10>: CH = {:.10}", best.value);
    Ok(())
}
