//! Expectation values and Clauser-Horne value for the one-particle state
//! `(|10⟩ - |01⟩)/√2` with presence detectors and vacuum/one-particle
//! superposition detectors on each side.

use fock_nonlocal::bell::{ch_terms, classify, lhv_bounds};
use fock_nonlocal::{ChSettings, TwoModeState};

fn main() {
    let psi = TwoModeState::single_particle_antisymmetric();
    let settings = ChSettings::reference();
    let t = ch_terms(&psi, &settings);

    println!("<P_a'>       = {:.6}", t.a_prime);
    println!("<P_b'>       = {:.6}", t.b_prime);
    println!("<P_a P_b>    = {:.6}", t.a_b);
    println!("<P_a P_b'>   = {:.6}", t.a_b_prime);
    println!("<P_a' P_b>   = {:.6}", t.a_prime_b);
    println!("<P_a' P_b'>  = {:.6}", t.a_prime_b_prime);

    let (lo, hi) = lhv_bounds();
    let result = classify(t.value());
    println!("CH           = {:.6}", result.value);
    println!("local bounds = [{lo}, {hi}] -> {}", result.classification);
}
