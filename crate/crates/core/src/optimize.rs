//! Grid sweeps and derivative-free search for Clauser-Horne violations.
//!
//! [`sweep_settings`] and [`sweep_state`] evaluate the CH expression on a
//! Cartesian grid, last axis varying fastest. [`minimize_ch`] scans a coarse
//! grid over all eight setting angles and refines the best point by cyclic
//! coordinate descent with geometrically shrinking steps.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::bell::{ch_value, classify, ChSettings, Classification};
use crate::error::{Error, Result};
use crate::state::TwoModeState;

/// A sweepable parameter: one of the eight setting angles or a real state
/// coefficient of `p|10⟩ + q|01⟩ + r|00⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SweepParam {
    ThetaA,
    PhiA,
    ThetaAPrime,
    PhiAPrime,
    ThetaB,
    PhiB,
    ThetaBPrime,
    PhiBPrime,
    P,
    Q,
    R,
}

impl SweepParam {
    /// Setting angles in [`ChSettings::angles`] order.
    pub const ANGLES: [SweepParam; 8] = [
        SweepParam::ThetaA,
        SweepParam::PhiA,
        SweepParam::ThetaAPrime,
        SweepParam::PhiAPrime,
        SweepParam::ThetaB,
        SweepParam::PhiB,
        SweepParam::ThetaBPrime,
        SweepParam::PhiBPrime,
    ];

    pub const COEFFICIENTS: [SweepParam; 3] = [SweepParam::P, SweepParam::Q, SweepParam::R];

    pub fn name(&self) -> &'static str {
        match self {
            SweepParam::ThetaA => "theta_a",
            SweepParam::PhiA => "phi_a",
            SweepParam::ThetaAPrime => "theta_ap",
            SweepParam::PhiAPrime => "phi_ap",
            SweepParam::ThetaB => "theta_b",
            SweepParam::PhiB => "phi_b",
            SweepParam::ThetaBPrime => "theta_bp",
            SweepParam::PhiBPrime => "phi_bp",
            SweepParam::P => "p",
            SweepParam::Q => "q",
            SweepParam::R => "r",
        }
    }

    /// Position in the eight-angle vector, `None` for state coefficients.
    pub fn angle_index(&self) -> Option<usize> {
        Self::ANGLES.iter().position(|p| p == self)
    }

    pub fn coefficient_index(&self) -> Option<usize> {
        Self::COEFFICIENTS.iter().position(|p| p == self)
    }

    pub fn is_theta(&self) -> bool {
        self.angle_index().is_some_and(|i| i % 2 == 0)
    }

    /// Closed range of admissible values.
    pub fn legal_range(&self) -> (f64, f64) {
        match self.angle_index() {
            Some(i) if i % 2 == 0 => (0.0, FRAC_PI_2),
            Some(_) => (0.0, TAU),
            None => (f64::MIN, f64::MAX),
        }
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepParam {
    type Err = Error;

    /// Accepts the canonical names and `'` in place of the `p` suffix
    /// (`theta_a'`).
    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.trim().replace('\'', "p");
        Self::ANGLES
            .iter()
            .chain(Self::COEFFICIENTS.iter())
            .find(|p| p.name() == normalized)
            .copied()
            .ok_or_else(|| Error::BadGrid(format!("unknown parameter `{s}`")))
    }
}

/// One grid axis: `steps` evenly spaced values from `lower` to `upper`
/// inclusive. A single-step axis must have `lower == upper`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepAxis {
    pub param: SweepParam,
    pub lower: f64,
    pub upper: f64,
    pub steps: usize,
}

impl SweepAxis {
    pub fn new(param: SweepParam, lower: f64, upper: f64, steps: usize) -> Result<Self> {
        let axis = Self {
            param,
            lower,
            upper,
            steps,
        };
        axis.validate()?;
        Ok(axis)
    }

    /// A one-point axis.
    pub fn pinned(param: SweepParam, value: f64) -> Result<Self> {
        Self::new(param, value, value, 1)
    }

    fn validate(&self) -> Result<()> {
        let name = self.param.name();
        if !self.lower.is_finite() || !self.upper.is_finite() {
            return Err(Error::BadGrid(format!("{name}: non-finite bound")));
        }
        if self.lower > self.upper {
            return Err(Error::BadGrid(format!("{name}: lower bound exceeds upper")));
        }
        match self.steps {
            0 => return Err(Error::BadGrid(format!("{name}: empty axis"))),
            1 if self.lower != self.upper => {
                return Err(Error::BadGrid(format!(
                    "{name}: a single step needs lower == upper"
                )))
            }
            _ => {}
        }
        let (lo, hi) = self.param.legal_range();
        if self.lower < lo || self.upper > hi {
            return Err(Error::BadGrid(format!(
                "{name}: [{}, {}] outside legal range [{lo}, {hi}]",
                self.lower, self.upper
            )));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        linspace(self.lower, self.upper, self.steps)
    }
}

fn linspace(lower: f64, upper: f64, steps: usize) -> Vec<f64> {
    if steps <= 1 {
        return vec![lower];
    }
    let span = upper - lower;
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|k| {
            if k == steps - 1 {
                upper
            } else {
                lower + span * (k as f64) / last
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepGrid {
    axes: Vec<SweepAxis>,
}

impl SweepGrid {
    pub fn new(axes: Vec<SweepAxis>) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::BadGrid("grid has no axes".into()));
        }
        for (i, axis) in axes.iter().enumerate() {
            axis.validate()?;
            if axes[..i].iter().any(|a| a.param == axis.param) {
                return Err(Error::BadGrid(format!("{} given twice", axis.param)));
            }
        }
        Ok(Self { axes })
    }

    pub fn axes(&self) -> &[SweepAxis] {
        &self.axes
    }

    pub fn params(&self) -> Vec<SweepParam> {
        self.axes.iter().map(|a| a.param).collect()
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.steps).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sweeps_settings_only(&self) -> bool {
        self.axes.iter().all(|a| a.param.angle_index().is_some())
    }

    pub fn sweeps_state_only(&self) -> bool {
        self.axes
            .iter()
            .all(|a| a.param.coefficient_index().is_some())
    }

    /// All grid points in row-major order (last axis fastest).
    pub fn points(&self) -> Vec<Vec<f64>> {
        let values: Vec<Vec<f64>> = self.axes.iter().map(SweepAxis::values).collect();
        let mut out = Vec::with_capacity(self.len());
        let mut idx = vec![0usize; values.len()];
        loop {
            out.push(idx.iter().zip(&values).map(|(&i, v)| v[i]).collect());
            let mut k = values.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < values[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    /// Swept parameter values in grid order. State coefficients are stored
    /// after normalization.
    pub values: Vec<(SweepParam, f64)>,
    /// Normalized `(p, q, r)` for state sweeps.
    pub coefficients: Option<[f64; 3]>,
    pub ch_value: f64,
    /// `None` when the point was skipped (all-zero state coefficients).
    pub classification: Option<Classification>,
}

impl SweepRecord {
    pub fn is_skipped(&self) -> bool {
        self.classification.is_none()
    }
}

/// Evaluates the CH value of `state` at every grid point. Angles not on the
/// grid are taken from `base`.
pub fn sweep_settings(
    state: &TwoModeState,
    base: &ChSettings,
    grid: &SweepGrid,
) -> Result<Vec<SweepRecord>> {
    if !grid.sweeps_settings_only() {
        return Err(Error::BadGrid(
            "settings sweep cannot include state coefficients".into(),
        ));
    }
    let params = grid.params();
    grid.points()
        .into_iter()
        .map(|point| {
            let mut angles = base.angles();
            for (param, &v) in params.iter().zip(&point) {
                angles[param.angle_index().expect("checked above")] = v;
            }
            let settings = ChSettings::from_angles(angles)?;
            let value = ch_value(state, &settings);
            Ok(SweepRecord {
                values: params.iter().copied().zip(point).collect(),
                coefficients: None,
                ch_value: value,
                classification: Some(classify(value).classification),
            })
        })
        .collect()
}

/// Evaluates the CH value at fixed `settings` across real states
/// `p|10⟩ + q|01⟩ + r|00⟩`. Coefficients not on the grid come from `base`.
/// All-zero points yield a skipped record with a NaN value.
pub fn sweep_state(
    settings: &ChSettings,
    base: [f64; 3],
    grid: &SweepGrid,
) -> Result<Vec<SweepRecord>> {
    if !grid.sweeps_state_only() {
        return Err(Error::BadGrid(
            "state sweep cannot include setting angles".into(),
        ));
    }
    let params = grid.params();
    let records = grid
        .points()
        .into_iter()
        .map(|point| {
            let mut coeffs = base;
            for (param, &v) in params.iter().zip(&point) {
                coeffs[param.coefficient_index().expect("checked above")] = v;
            }
            let [p, q, r] = coeffs.map(|x| Complex64::new(x, 0.0));
            match TwoModeState::from_coefficients(p, q, r) {
                Ok(state) => {
                    let norm = coeffs.iter().map(|x| x * x).sum::<f64>().sqrt();
                    let normalized = coeffs.map(|x| x / norm);
                    let value = ch_value(&state, settings);
                    SweepRecord {
                        values: params
                            .iter()
                            .map(|&prm| (prm, normalized[prm.coefficient_index().unwrap()]))
                            .collect(),
                        coefficients: Some(normalized),
                        ch_value: value,
                        classification: Some(classify(value).classification),
                    }
                }
                Err(_) => SweepRecord {
                    values: params.iter().copied().zip(point).collect(),
                    coefficients: None,
                    ch_value: f64::NAN,
                    classification: None,
                },
            }
        })
        .collect();
    Ok(records)
}

/// Tuning for [`minimize_ch`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOptions {
    /// Coarse grid points per `θ` axis (and per `φ` axis in full-phase mode).
    pub grid_points: usize,
    /// Maximum coordinate-descent cycles.
    pub iterations: usize,
    /// Initial coordinate step in radians.
    pub initial_step: f64,
    /// Step multiplier applied when a cycle stalls, in `(0, 1)`.
    pub shrink: f64,
    /// A cycle improving the value by less than this shrinks the step; the
    /// search stops once the step itself falls below it.
    pub tolerance: f64,
    /// Search `φ` continuously instead of restricting it to `{0, π}`.
    pub full_phase: bool,
    /// Search box per angle, in [`ChSettings::angles`] order.
    pub bounds: [(f64, f64); 8],
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            grid_points: 24,
            iterations: 200,
            initial_step: 0.1,
            shrink: 0.5,
            tolerance: 1e-10,
            full_phase: false,
            bounds: full_bounds(),
        }
    }
}

fn full_bounds() -> [(f64, f64); 8] {
    SweepParam::ANGLES.map(|p| p.legal_range())
}

impl SearchOptions {
    /// Confines the search to exactly these settings.
    pub fn pinned_to(mut self, settings: &ChSettings) -> Self {
        self.bounds = settings.angles().map(|x| (x, x));
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::BadGrid(msg));
        if self.grid_points == 0 {
            return bad("grid resolution must be positive".into());
        }
        if self.iterations == 0 {
            return bad("iteration budget must be positive".into());
        }
        if !(self.initial_step.is_finite() && self.initial_step > 0.0) {
            return bad("initial step must be positive".into());
        }
        if !(self.shrink > 0.0 && self.shrink < 1.0) {
            return bad("shrink factor must lie in (0, 1)".into());
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return bad("tolerance must be positive".into());
        }
        for (param, &(lo, hi)) in SweepParam::ANGLES.iter().zip(&self.bounds) {
            let (min, max) = param.legal_range();
            if !(lo.is_finite() && hi.is_finite() && min <= lo && lo <= hi && hi <= max) {
                return bad(format!("{param}: search box [{lo}, {hi}] invalid"));
            }
        }
        Ok(())
    }

    fn axis_candidates(&self, k: usize) -> Vec<f64> {
        let (lo, hi) = self.bounds[k];
        if lo == hi {
            return vec![lo];
        }
        if k.is_multiple_of(2) {
            return linspace(lo, hi, self.grid_points.max(2));
        }
        if self.full_phase {
            // the phase axis is periodic; do not sample both 0 and 2π
            let n = self.grid_points.max(2);
            if hi - lo >= TAU {
                return (0..n).map(|i| lo + TAU * i as f64 / n as f64).collect();
            }
            return linspace(lo, hi, n);
        }
        let real: Vec<f64> = [0.0, PI]
            .into_iter()
            .filter(|x| (lo..=hi).contains(x))
            .collect();
        if real.is_empty() {
            vec![lo]
        } else {
            real
        }
    }
}

/// Result of [`minimize_ch`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub settings: ChSettings,
    pub value: f64,
    /// CH value at the best coarse-grid point.
    pub coarse_value: f64,
    /// Number of CH evaluations, coarse grid included.
    pub evaluations: usize,
}

/// Per-state precomputation for scanning many settings: for an Alice target
/// `|m⟩`, the conditional Bob vector `(⟨m| ⊗ I)|s⟩` gives both the Alice
/// marginal and every joint term.
struct Scanner {
    amps: [Complex64; 4],
}

impl Scanner {
    fn bob_vector(&self, alice: &[Complex64; 2]) -> [Complex64; 2] {
        let s = &self.amps;
        [
            alice[0].conj() * s[0] + alice[1].conj() * s[2],
            alice[0].conj() * s[1] + alice[1].conj() * s[3],
        ]
    }

    fn bob_marginal(&self, bob: &[Complex64; 2]) -> f64 {
        let s = &self.amps;
        let x0 = bob[0].conj() * s[0] + bob[1].conj() * s[1];
        let x1 = bob[0].conj() * s[2] + bob[1].conj() * s[3];
        x0.norm_sqr() + x1.norm_sqr()
    }
}

fn joint_table(reduced: &[[Complex64; 2]], bob: &[[Complex64; 2]]) -> Vec<f64> {
    let mut out = Vec::with_capacity(reduced.len() * bob.len());
    for r in reduced {
        for m in bob {
            out.push((m[0].conj() * r[0] + m[1].conj() * r[1]).norm_sqr());
        }
    }
    out
}

/// Searches for the settings minimizing the CH value of `state`.
///
/// The coarse scan visits settings in row-major order of
/// `(θa, φa, θa', φa', θb, φb, θb', φb')`; the first strict minimum wins.
/// Refinement starts from that point and never returns a worse value.
pub fn minimize_ch(state: &TwoModeState, opts: &SearchOptions) -> Result<SearchOutcome> {
    opts.validate()?;

    // candidate (θ, φ) list per setting, θ-major
    let candidates: Vec<Vec<(f64, f64)>> = (0..4)
        .map(|s| {
            let thetas = opts.axis_candidates(2 * s);
            let phis = opts.axis_candidates(2 * s + 1);
            thetas
                .iter()
                .flat_map(|&t| phis.iter().map(move |&p| (t, p)))
                .collect()
        })
        .collect();
    let targets: Vec<Vec<[Complex64; 2]>> = candidates
        .iter()
        .map(|list| {
            list.iter()
                .map(|&(t, p)| {
                    [
                        Complex64::new(t.cos(), 0.0),
                        Complex64::from_polar(t.sin(), p),
                    ]
                })
                .collect()
        })
        .collect();
    let (ta, tap, tb, tbp) = (&targets[0], &targets[1], &targets[2], &targets[3]);

    let scanner = Scanner {
        amps: *state.amplitudes(),
    };
    let reduced_a: Vec<_> = ta.iter().map(|m| scanner.bob_vector(m)).collect();
    let reduced_ap: Vec<_> = tap.iter().map(|m| scanner.bob_vector(m)).collect();
    let marg_ap: Vec<f64> = reduced_ap
        .iter()
        .map(|r| r[0].norm_sqr() + r[1].norm_sqr())
        .collect();
    let marg_bp: Vec<f64> = tbp.iter().map(|m| scanner.bob_marginal(m)).collect();
    let j_ab = joint_table(&reduced_a, tb);
    let j_abp = joint_table(&reduced_a, tbp);
    let j_apb = joint_table(&reduced_ap, tb);
    let j_apbp = joint_table(&reduced_ap, tbp);
    let (nb, nbp) = (tb.len(), tbp.len());

    let mut best = f64::INFINITY;
    let mut best_idx = (0, 0, 0, 0);
    for ia in 0..ta.len() {
        for iap in 0..tap.len() {
            for ib in 0..nb {
                let partial = marg_ap[iap] - j_apb[iap * nb + ib] + j_ab[ia * nb + ib];
                for ibp in 0..nbp {
                    let v =
                        partial + marg_bp[ibp] - j_apbp[iap * nbp + ibp] - j_abp[ia * nbp + ibp];
                    if v < best {
                        best = v;
                        best_idx = (ia, iap, ib, ibp);
                    }
                }
            }
        }
    }
    let mut evaluations = ta.len() * tap.len() * nb * nbp;

    let (ia, iap, ib, ibp) = best_idx;
    let pick = [
        candidates[0][ia],
        candidates[1][iap],
        candidates[2][ib],
        candidates[3][ibp],
    ];
    let mut x = [0.0; 8];
    for (k, (t, p)) in pick.iter().enumerate() {
        x[2 * k] = *t;
        x[2 * k + 1] = *p;
    }

    let eval = |x: &[f64; 8]| -> Result<f64> { Ok(ch_value(state, &ChSettings::from_angles(*x)?)) };
    let coarse_value = eval(&x)?;
    evaluations += 1;

    let active: Vec<usize> = (0..8)
        .filter(|&k| {
            let (lo, hi) = opts.bounds[k];
            lo < hi && (k % 2 == 0 || opts.full_phase)
        })
        .collect();

    let mut value = coarse_value;
    let mut step = opts.initial_step;
    if !active.is_empty() {
        for _ in 0..opts.iterations {
            let start = value;
            for &k in &active {
                let (lo, hi) = opts.bounds[k];
                for dir in [1.0, -1.0] {
                    let moved = (x[k] + dir * step).clamp(lo, hi);
                    if moved == x[k] {
                        continue;
                    }
                    let mut trial = x;
                    trial[k] = moved;
                    let v = eval(&trial)?;
                    evaluations += 1;
                    if v < value {
                        value = v;
                        x = trial;
                        break;
                    }
                }
            }
            if start - value < opts.tolerance {
                step *= opts.shrink;
                if step < opts.tolerance {
                    break;
                }
            }
        }
    }

    Ok(SearchOutcome {
        settings: ChSettings::from_angles(x)?,
        value,
        coarse_value,
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn param_names_parse() {
        for p in SweepParam::ANGLES
            .iter()
            .chain(SweepParam::COEFFICIENTS.iter())
        {
            assert_eq!(p.name().parse::<SweepParam>().unwrap(), *p);
        }
        assert_eq!(
            "theta_a'".parse::<SweepParam>().unwrap(),
            SweepParam::ThetaAPrime
        );
        assert!("theta_c".parse::<SweepParam>().is_err());
    }

    #[test]
    fn axis_validation() {
        assert!(SweepAxis::new(SweepParam::ThetaA, 0.0, 1.0, 0).is_err());
        assert!(SweepAxis::new(SweepParam::ThetaA, 0.0, 1.0, 1).is_err());
        assert!(SweepAxis::new(SweepParam::ThetaA, 0.0, 2.0, 3).is_err());
        assert!(SweepAxis::new(SweepParam::PhiA, -0.1, 1.0, 3).is_err());
        assert!(SweepAxis::new(SweepParam::PhiA, 1.0, 0.5, 3).is_err());
        assert!(SweepAxis::new(SweepParam::P, -5.0, 5.0, 11).is_ok());
        assert!(SweepAxis::pinned(SweepParam::ThetaB, 0.3).is_ok());
        assert_eq!(
            SweepAxis::new(SweepParam::ThetaA, 0.0, FRAC_PI_2, 3)
                .unwrap()
                .values(),
            vec![0.0, FRAC_PI_2 / 2.0, FRAC_PI_2]
        );
    }

    #[test]
    fn grid_validation() {
        assert!(SweepGrid::new(vec![]).is_err());
        let a = SweepAxis::new(SweepParam::ThetaA, 0.0, 1.0, 2).unwrap();
        assert!(SweepGrid::new(vec![a, a]).is_err());
    }

    #[test]
    fn grid_points_row_major() {
        let g = SweepGrid::new(vec![
            SweepAxis::new(SweepParam::ThetaA, 0.0, 1.0, 2).unwrap(),
            SweepAxis::new(SweepParam::ThetaB, 0.0, 1.0, 3).unwrap(),
        ])
        .unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(
            g.points(),
            vec![
                vec![0.0, 0.0],
                vec![0.0, 0.5],
                vec![0.0, 1.0],
                vec![1.0, 0.0],
                vec![1.0, 0.5],
                vec![1.0, 1.0]
            ]
        );
    }

    #[test]
    fn sweeps_reject_mixed_grids() {
        let g = SweepGrid::new(vec![
            SweepAxis::new(SweepParam::ThetaA, 0.0, 1.0, 2).unwrap(),
            SweepAxis::pinned(SweepParam::P, 1.0).unwrap(),
        ])
        .unwrap();
        let psi = TwoModeState::single_particle_antisymmetric();
        let c = ChSettings::reference();
        assert!(matches!(
            sweep_settings(&psi, &c, &g),
            Err(Error::BadGrid(_))
        ));
        assert!(matches!(
            sweep_state(&c, [1.0, 0.0, 0.0], &g),
            Err(Error::BadGrid(_))
        ));
    }

    #[test]
    fn pinned_settings_sweep() {
        let psi = TwoModeState::single_particle_antisymmetric();
        let c = ChSettings::reference();
        let axes = SweepParam::ANGLES
            .iter()
            .zip(c.angles())
            .map(|(&p, v)| SweepAxis::pinned(p, v).unwrap())
            .collect();
        let recs = sweep_settings(&psi, &c, &SweepGrid::new(axes).unwrap()).unwrap();
        assert_eq!(recs.len(), 1);
        assert!((recs[0].ch_value + 0.125).abs() < 1e-12);
        assert_eq!(recs[0].classification, Some(Classification::BelowLower));
    }

    #[test]
    fn state_sweep_normalizes_and_skips_zero() {
        let g = SweepGrid::new(vec![
            SweepAxis::new(SweepParam::P, 0.0, 2.0, 3).unwrap(),
            SweepAxis::pinned(SweepParam::Q, 0.0).unwrap(),
            SweepAxis::pinned(SweepParam::R, 0.0).unwrap(),
        ])
        .unwrap();
        let recs = sweep_state(&ChSettings::reference(), [0.0; 3], &g).unwrap();
        assert_eq!(recs.len(), 3);
        assert!(recs[0].is_skipped() && recs[0].ch_value.is_nan());
        for r in &recs[1..] {
            assert_eq!(r.coefficients, Some([1.0, 0.0, 0.0]));
            assert_eq!(r.values[0], (SweepParam::P, 1.0));
            assert!((0.0..=1.0).contains(&r.ch_value));
        }
    }

    #[test]
    fn search_option_validation() {
        let ok = SearchOptions::default();
        assert!(ok.validate().is_ok());
        for bad in [
            SearchOptions {
                shrink: 1.0,
                ..ok.clone()
            },
            SearchOptions {
                shrink: 0.0,
                ..ok.clone()
            },
            SearchOptions {
                grid_points: 0,
                ..ok.clone()
            },
            SearchOptions {
                initial_step: -0.1,
                ..ok.clone()
            },
            SearchOptions {
                tolerance: 0.0,
                ..ok.clone()
            },
            SearchOptions {
                iterations: 0,
                ..ok.clone()
            },
        ] {
            assert!(bad.validate().is_err());
        }
        let mut b = ok.clone();
        b.bounds[0] = (0.0, 2.0);
        assert!(b.validate().is_err());
    }

    #[test]
    fn pinned_search_returns_the_pinned_value() {
        let psi = TwoModeState::single_particle_antisymmetric();
        let c = ChSettings::reference();
        let out = minimize_ch(&psi, &SearchOptions::default().pinned_to(&c)).unwrap();
        assert!((out.value + 0.125).abs() < 1e-12);
        assert_eq!(out.settings, c);
    }

    #[test]
    fn real_mode_phase_candidates() {
        let o = SearchOptions::default();
        assert_eq!(o.axis_candidates(1), vec![0.0, PI]);
        assert_eq!(o.axis_candidates(0).len(), 24);
        let full = SearchOptions {
            full_phase: true,
            grid_points: 4,
            ..o
        };
        assert_eq!(full.axis_candidates(1), vec![0.0, PI / 2.0, PI, 1.5 * PI]);
    }

    #[test]
    fn settings_from_best_point_are_valid() {
        let psi = TwoModeState::single_particle_antisymmetric();
        let opts = SearchOptions {
            grid_points: 6,
            iterations: 20,
            ..SearchOptions::default()
        };
        let out = minimize_ch(&psi, &opts).unwrap();
        assert!(out.value <= out.coarse_value);
        assert!((ch_value(&psi, &out.settings) - out.value).abs() < 1e-15);
    }
}
