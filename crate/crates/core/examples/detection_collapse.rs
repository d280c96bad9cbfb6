//! A superposition detector on mode `a` turns a one-particle state into a
//! state with a two-particle component.

use fock_nonlocal::measure::post_measurement_state;
use fock_nonlocal::{MeasurementSetting, Outcome, Side, TwoModeState};

fn main() -> Result<(), fock_nonlocal::Error> {
    let psi = TwoModeState::single_particle_antisymmetric();
    println!(
        "before: <N> = {:.6}, |11> weight = {:.6}",
        psi.total_number_expectation(),
        psi.two_particle_weight()
    );

    for (label, setting) in [
        ("presence  ", MeasurementSetting::presence()),
        ("superposed", MeasurementSetting::superposition_plus()),
    ] {
        for outcome in Outcome::ALL {
            let (post, prob) = post_measurement_state(&psi, Side::A, &setting, outcome)?;
            println!(
                "{label} outcome {}: prob = {prob:.6}, <N> = {:.6}, |11> weight = {:.6}",
                outcome.index(),
                post.total_number_expectation(),
                post.two_particle_weight()
            );
        }
    }
    Ok(())
}
