//! Superposition projectors do not commute with the number operator;
//! presence and vacuum projectors do.

use std::f64::consts::FRAC_PI_2;

use fock_nonlocal::measure::commutator_norm;
use fock_nonlocal::MeasurementSetting;

fn main() -> Result<(), fock_nonlocal::Error> {
    println!("{:>10} {:>12} {:>12}", "theta", "||[P,N]||", "|cos sin|");
    for k in 0..=12 {
        let theta = FRAC_PI_2 * k as f64 / 12.0;
        let setting = MeasurementSetting::new(theta, 0.0)?;
        println!(
            "{theta:>10.6} {:>12.6} {:>12.6}",
            commutator_norm(&setting),
            (theta.cos() * theta.sin()).abs()
        );
    }
    Ok(())
}
