//! CH value at the reference settings across `p|10⟩ + q|01⟩ + r|00⟩` with
//! `p = -q = 1` and a growing vacuum amplitude `r`. Prints CSV.

use fock_nonlocal::optimize::sweep_state;
use fock_nonlocal::{ChSettings, SweepAxis, SweepGrid, SweepParam};

fn main() -> Result<(), fock_nonlocal::Error> {
    let grid = SweepGrid::new(vec![SweepAxis::new(SweepParam::R, -2.0, 2.0, 17)?])?;
    let records = sweep_state(&ChSettings::reference(), [1.0, -1.0, 0.0], &grid)?;
    println!("p,q,r,ch_value,classification");
    for rec in records {
        let [p, q, r] = rec.coefficients.expect("no zero points on this grid");
        let class = rec.classification.expect("evaluated");
        println!("{p},{q},{r},{},{class}", rec.ch_value);
    }
    Ok(())
}
