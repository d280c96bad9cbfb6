mod oracle;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, PI, TAU};

use fock_nonlocal::optimize::{minimize_ch, sweep_settings, sweep_state};
use fock_nonlocal::{
    ChSettings, Classification, SearchOptions, SweepAxis, SweepGrid, SweepParam, TwoModeState,
};

/// Minimum CH value on the antisymmetric one-particle state over a real-phase
/// grid of 240 points per θ axis, computed once offline by brute force.
const DENSE_GRID_MIN: f64 = -0.207_095_302_085_091_25;

fn five_point_grid() -> SweepGrid {
    let axes = SweepParam::ANGLES
        .iter()
        .map(|&p| {
            let hi = if p.is_theta() { FRAC_PI_2 } else { TAU };
            SweepAxis::new(p, 0.0, hi, 5).unwrap()
        })
        .collect();
    SweepGrid::new(axes).unwrap()
}

#[test]
fn sweep_matches_independent_arithmetic() {
    let psi = TwoModeState::single_particle_antisymmetric();
    let grid = five_point_grid();
    let recs = sweep_settings(&psi, &ChSettings::reference(), &grid).unwrap();
    assert_eq!(recs.len(), 5usize.pow(8));
    let v = oracle::antisymmetric();
    let mut worst: f64 = 0.0;
    for (rec, point) in recs.iter().zip(grid.points()) {
        let angles: [f64; 8] = point.try_into().unwrap();
        worst = worst.max((rec.ch_value - oracle::ch(&v, &angles)).abs());
    }
    assert!(worst <= 1e-12, "max deviation {worst:e}");
}

#[test]
fn sweep_is_deterministic() {
    let psi = TwoModeState::from_real_amplitudes([0.2, 0.5, -0.7, 0.1]).unwrap();
    let grid = SweepGrid::new(vec![
        SweepAxis::new(SweepParam::ThetaA, 0.0, FRAC_PI_2, 7).unwrap(),
        SweepAxis::new(SweepParam::PhiBPrime, 0.0, PI, 4).unwrap(),
    ])
    .unwrap();
    let c = ChSettings::reference();
    let first = sweep_settings(&psi, &c, &grid).unwrap();
    let second = sweep_settings(&psi, &c, &grid).unwrap();
    assert_eq!(first.len(), 28);
    for (x, y) in first.iter().zip(&second) {
        assert_eq!(x.ch_value.to_bits(), y.ch_value.to_bits());
        assert_eq!(x.values, y.values);
    }
}

#[test]
fn primed_axes_at_reference_values() {
    let psi = TwoModeState::single_particle_antisymmetric();
    let grid = SweepGrid::new(vec![
        SweepAxis::pinned(SweepParam::ThetaAPrime, FRAC_PI_6).unwrap(),
        SweepAxis::pinned(SweepParam::ThetaBPrime, FRAC_PI_6).unwrap(),
    ])
    .unwrap();
    let recs = sweep_settings(&psi, &ChSettings::reference(), &grid).unwrap();
    assert_eq!(recs.len(), 1);
    assert!((recs[0].ch_value + 0.125).abs() <= 1e-12);
}

#[test]
fn vacuum_never_violates_on_a_grid() {
    let recs = sweep_settings(
        &TwoModeState::vacuum(),
        &ChSettings::reference(),
        &five_point_grid(),
    )
    .unwrap();
    assert!(recs
        .iter()
        .all(|r| r.classification == Some(Classification::WithinClassical)));
}

#[test]
fn state_family_points() {
    let c = ChSettings::reference();
    let point = |p: f64, q: f64, r: f64| {
        let grid = SweepGrid::new(vec![
            SweepAxis::pinned(SweepParam::P, p).unwrap(),
            SweepAxis::pinned(SweepParam::Q, q).unwrap(),
            SweepAxis::pinned(SweepParam::R, r).unwrap(),
        ])
        .unwrap();
        sweep_state(&c, [0.0; 3], &grid).unwrap().remove(0)
    };
    let h = std::f64::consts::FRAC_1_SQRT_2;
    assert!((point(h, -h, 0.0).ch_value + 0.125).abs() <= 1e-12);

    let angles = c.angles();
    let rec = point(1.0, 0.0, 0.0);
    let expected = oracle::ch(&oracle::state(1.0, 0.0, 0.0), &angles);
    assert!((rec.ch_value - expected).abs() <= 1e-12);
    assert!((0.0..=1.0).contains(&rec.ch_value));

    let rec = point(0.0, 0.0, 1.0);
    assert!((0.0..=1.0).contains(&rec.ch_value));
    assert_eq!(rec.classification, Some(Classification::WithinClassical));
}

#[test]
fn state_sweep_records_use_unit_norm_states() {
    let c = ChSettings::reference();
    let grid = SweepGrid::new(vec![
        SweepAxis::new(SweepParam::P, -1.0, 1.0, 5).unwrap(),
        SweepAxis::new(SweepParam::Q, -1.0, 1.0, 5).unwrap(),
        SweepAxis::new(SweepParam::R, -1.0, 1.0, 5).unwrap(),
    ])
    .unwrap();
    let recs = sweep_state(&c, [0.0; 3], &grid).unwrap();
    assert_eq!(recs.len(), 125);
    assert_eq!(recs.iter().filter(|r| r.is_skipped()).count(), 1);
    for (rec, point) in recs.iter().zip(grid.points()) {
        if rec.is_skipped() {
            assert_eq!(point, vec![0.0, 0.0, 0.0]);
            continue;
        }
        let [p, q, r] = rec.coefficients.unwrap();
        assert!((p * p + q * q + r * r - 1.0).abs() <= 1e-12);
        let expected = oracle::ch(&oracle::state(point[0], point[1], point[2]), &c.angles());
        assert!((rec.ch_value - expected).abs() <= 1e-12);
    }
}

#[test]
fn dense_grid_oracle_is_consistent_with_known_extremum() {
    let extremum = (1.0 - 2f64.sqrt()) / 2.0;
    assert!(DENSE_GRID_MIN >= extremum - 1e-12);
    assert!(DENSE_GRID_MIN - extremum < 1e-4);
}

#[test]
fn optimizer_reaches_dense_grid_level() {
    let psi = TwoModeState::single_particle_antisymmetric();
    let out = minimize_ch(&psi, &SearchOptions::default()).unwrap();
    let extremum = (1.0 - 2f64.sqrt()) / 2.0;
    assert!(out.value <= extremum + 1e-4, "{}", out.value);
    assert!(out.value <= DENSE_GRID_MIN);
    // no local model or quantum state goes below the extremum
    assert!(out.value >= extremum - 1e-12);
    assert!(out.value <= out.coarse_value);
}

#[test]
fn optimizer_full_phase_mode() {
    let psi = TwoModeState::single_particle_antisymmetric();
    let opts = SearchOptions {
        full_phase: true,
        grid_points: 8,
        ..SearchOptions::default()
    };
    let out = minimize_ch(&psi, &opts).unwrap();
    assert!(out.value <= -0.2070, "{}", out.value);
}

#[test]
fn optimizer_on_product_states() {
    for state in [
        TwoModeState::basis(1, 0),
        TwoModeState::basis(0, 1),
        TwoModeState::vacuum(),
        TwoModeState::from_real_amplitudes([0.6, 0.0, 0.8, 0.0]).unwrap(),
    ] {
        let out = minimize_ch(&state, &SearchOptions::default()).unwrap();
        assert!(out.value >= -1e-10, "{state:?}: {}", out.value);
    }
}

#[test]
fn optimizer_is_deterministic() {
    let psi = TwoModeState::from_real_amplitudes([0.3, -0.6, 0.7, 0.0]).unwrap();
    let opts = SearchOptions {
        grid_points: 10,
        ..SearchOptions::default()
    };
    let x = minimize_ch(&psi, &opts).unwrap();
    let y = minimize_ch(&psi, &opts).unwrap();
    assert_eq!(x, y);
}

#[test]
fn pinned_box_returns_reference_value() {
    let psi = TwoModeState::single_particle_antisymmetric();
    let c = ChSettings::reference();
    let out = minimize_ch(&psi, &SearchOptions::default().pinned_to(&c)).unwrap();
    assert!((out.value + 0.125).abs() <= 1e-12);
}
