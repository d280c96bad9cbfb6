//! Enumerates every deterministic local strategy for the Clauser-Horne
//! expression. Mixtures of these are exactly the local models, so the
//! extreme values are the local bounds.

use fock_nonlocal::bell::lhv_bounds;
use fock_nonlocal::DeterministicStrategy;

fn main() {
    println!("a a' b b' | CH");
    for d in DeterministicStrategy::all() {
        println!(
            "{} {}  {} {}  | {}",
            d.out_a,
            d.out_a_prime,
            d.out_b,
            d.out_b_prime,
            d.ch_value()
        );
    }
    let (lo, hi) = lhv_bounds();
    println!("bounds: [{lo}, {hi}]");
}
