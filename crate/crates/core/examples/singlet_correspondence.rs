//! The one-particle state has the structure of a spin singlet: relabel
//! `|0⟩ → up`, `|1⟩ → down` on each mode. A Fock setting `(θ, φ)` is the
//! spin direction with polar angle `2θ` and azimuth `φ`, and the joint
//! firing probability is `(1 - n_a·n_b)/4`.

use fock_nonlocal::measure::expectation;
use fock_nonlocal::sampling::Sampler;
use fock_nonlocal::{MeasurementSetting, TwoModeState};

fn bloch(m: &MeasurementSetting) -> [f64; 3] {
    let (beta, alpha) = (2.0 * m.theta(), m.phi());
    [
        beta.sin() * alpha.cos(),
        beta.sin() * alpha.sin(),
        beta.cos(),
    ]
}

fn main() {
    let psi = TwoModeState::single_particle_antisymmetric();
    let mut sampler = Sampler::new(42);
    println!("{:>12} {:>12} {:>10}", "fock", "singlet", "diff");
    for _ in 0..8 {
        let (a, b) = (sampler.setting(), sampler.setting());
        let fock = expectation(&psi, &a.projector(), &b.projector()).unwrap();
        let (na, nb) = (bloch(&a), bloch(&b));
        let dot: f64 = na.iter().zip(&nb).map(|(x, y)| x * y).sum();
        let singlet = (1.0 - dot) / 4.0;
        println!(
            "{fock:>12.8} {singlet:>12.8} {:>10.1e}",
            (fock - singlet).abs()
        );
    }
}
