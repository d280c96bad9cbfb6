//! Local projective measurements on the two modes.
//!
//! A detector on one mode tests the projector `|m⟩⟨m|` with
//! `|m⟩ = cos θ |0⟩ + e^{iφ} sin θ |1⟩`. Outcome [`Outcome::Fired`] means the
//! projector fired, [`Outcome::Quiet`] is the complement `I - P`. At `θ = π/2`
//! the detector tests the mere presence of a particle; for `0 < θ < π/2` it
//! tests a superposition of vacuum and one particle, which does not conserve
//! particle number.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::state::{basis_index, ModeVector, TwoModeState};
use crate::TOL;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Outcome probabilities at or below this cannot be conditioned on.
pub const MIN_OUTCOME_PROBABILITY: f64 = 1e-12;

/// Which mode a local operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Alice's mode `a`.
    A,
    /// Bob's mode `b`.
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Complement `I - P`.
    Quiet = 0,
    /// Projector `P` fired.
    Fired = 1,
}

impl Outcome {
    pub const ALL: [Outcome; 2] = [Outcome::Quiet, Outcome::Fired];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Angle pair `(θ, φ)` with `θ ∈ [0, π/2]`, `φ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementSetting {
    theta: f64,
    phi: f64,
}

impl MeasurementSetting {
    /// Validates `θ` and wraps `φ` into `[0, 2π)`. A `θ` within `1e-12` of a
    /// range end is clamped onto it.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::NonFinite("measurement setting"));
        }
        if !(-TOL..=FRAC_PI_2 + TOL).contains(&theta) {
            return Err(Error::InvalidSetting(format!(
                "theta = {theta} outside [0, pi/2]"
            )));
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Ok(Self {
            theta: theta.clamp(0.0, FRAC_PI_2),
            phi,
        })
    }

    /// Projector onto the one-particle state: tests the presence of a particle.
    pub fn presence() -> Self {
        Self {
            theta: FRAC_PI_2,
            phi: 0.0,
        }
    }

    /// Projector onto the vacuum.
    pub fn absence() -> Self {
        Self {
            theta: 0.0,
            phi: 0.0,
        }
    }

    /// `(|1⟩ + √3|0⟩)/2`.
    pub fn superposition_plus() -> Self {
        Self {
            theta: PI / 6.0,
            phi: 0.0,
        }
    }

    /// `(|1⟩ - √3|0⟩)/2`, up to a global phase.
    pub fn superposition_minus() -> Self {
        Self {
            theta: PI / 6.0,
            phi: PI,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn target(&self) -> ModeVector {
        ModeVector::from_angles(self.theta, self.phi)
    }

    pub fn projector(&self) -> ModeOperator {
        mode_projector(self)
    }

    /// `M_outcome`: the projector for `Fired`, its complement for `Quiet`.
    pub fn outcome_operator(&self, outcome: Outcome) -> ModeOperator {
        let p = self.projector();
        match outcome {
            Outcome::Fired => p,
            Outcome::Quiet => ModeOperator::identity().sub(&p),
        }
    }
}

impl fmt::Display for MeasurementSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(theta={}, phi={})", self.theta, self.phi)
    }
}

/// A 2×2 complex matrix on one mode's `{|0⟩, |1⟩}` space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeOperator {
    m: [[Complex64; 2]; 2],
}

impl ModeOperator {
    pub fn from_entries(m: [[Complex64; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        Self {
            m: [[ONE, ZERO], [ZERO, ONE]],
        }
    }

    /// Number operator `N = diag(0, 1)`.
    pub fn number() -> Self {
        Self {
            m: [[ZERO, ZERO], [ZERO, ONE]],
        }
    }

    pub fn entries(&self) -> [[Complex64; 2]; 2] {
        self.m
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.m;
        Self {
            m: [
                [m[0][0].conj(), m[1][0].conj()],
                [m[0][1].conj(), m[1][1].conj()],
            ],
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.m;
        for (row, orow) in m.iter_mut().zip(other.m.iter()) {
            for (x, y) in row.iter_mut().zip(orow.iter()) {
                *x += y;
            }
        }
        Self { m }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut m = self.m;
        for (row, orow) in m.iter_mut().zip(other.m.iter()) {
            for (x, y) in row.iter_mut().zip(orow.iter()) {
                *x -= y;
            }
        }
        Self { m }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let (a, b) = (&self.m, &other.m);
        let mut m = [[ZERO; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Self { m }
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(Complex64::norm_sqr)
            .sum::<f64>()
            .sqrt()
    }

    /// `‖M - M†‖_F`.
    pub fn hermiticity_defect(&self) -> f64 {
        self.sub(&self.adjoint()).frobenius_norm()
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermiticity_defect() <= TOL
    }

    /// Largest singular value, from the eigenvalues of `M†M`.
    pub fn spectral_norm(&self) -> f64 {
        let g = self.adjoint().matmul(self);
        let tr = g.m[0][0].re + g.m[1][1].re;
        let det = (g.m[0][0] * g.m[1][1] - g.m[0][1] * g.m[1][0]).re;
        let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
        ((tr + disc) / 2.0).max(0.0).sqrt()
    }

    /// `[self, other] = self·other - other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other).sub(&other.matmul(self))
    }
}

/// `|m⟩⟨m|` for the setting's target vector.
pub fn mode_projector(setting: &MeasurementSetting) -> ModeOperator {
    let v = setting.target().amplitudes();
    let mut m = [[ZERO; 2]; 2];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = v[i] * v[j].conj();
        }
    }
    ModeOperator::from_entries(m)
}

/// `(A ⊗ B)|s⟩`, unnormalized.
pub fn apply_product(
    state: &TwoModeState,
    op_a: &ModeOperator,
    op_b: &ModeOperator,
) -> [Complex64; 4] {
    let s = state.amplitudes();
    let mut out = [ZERO; 4];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = ZERO;
            for k in 0..2 {
                for l in 0..2 {
                    acc += op_a.get(i, k) * op_b.get(j, l) * s[basis_index(k, l)];
                }
            }
            out[basis_index(i, j)] = acc;
        }
    }
    out
}

/// `⟨s| A ⊗ B |s⟩` for Hermitian `A`, `B`. Pass the identity on one side for
/// a single-mode expectation.
pub fn expectation(state: &TwoModeState, op_a: &ModeOperator, op_b: &ModeOperator) -> Result<f64> {
    for op in [op_a, op_b] {
        let defect = op.hermiticity_defect();
        if defect > TOL {
            return Err(Error::NonHermitianOperator(defect));
        }
    }
    Ok(expectation_unchecked(state, op_a, op_b))
}

fn expectation_unchecked(state: &TwoModeState, op_a: &ModeOperator, op_b: &ModeOperator) -> f64 {
    let image = apply_product(state, op_a, op_b);
    let value: Complex64 = state
        .amplitudes()
        .iter()
        .zip(image.iter())
        .map(|(x, y)| x.conj() * y)
        .sum();
    debug_assert!(
        value.im.abs() <= 1e-10,
        "Hermitian expectation has imaginary part {}",
        value.im
    );
    value.re
}

/// Joint outcome probabilities `p[i][j]` for Alice outcome `i`, Bob outcome `j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbTable {
    pub p: [[f64; 2]; 2],
}

impl ProbTable {
    pub fn get(&self, a: Outcome, b: Outcome) -> f64 {
        self.p[a.index()][b.index()]
    }

    pub fn total(&self) -> f64 {
        self.p.iter().flatten().sum()
    }

    /// Alice's marginal `Σ_j p[i][j]`.
    pub fn marginal_a(&self, a: Outcome) -> f64 {
        self.p[a.index()].iter().sum()
    }

    /// Bob's marginal `Σ_i p[i][j]`.
    pub fn marginal_b(&self, b: Outcome) -> f64 {
        self.p.iter().map(|row| row[b.index()]).sum()
    }

    /// Probability that both projectors fire.
    pub fn both_fired(&self) -> f64 {
        self.p[1][1]
    }
}

pub fn joint_distribution(
    state: &TwoModeState,
    a: &MeasurementSetting,
    b: &MeasurementSetting,
) -> ProbTable {
    let ops_a = Outcome::ALL.map(|o| a.outcome_operator(o));
    let ops_b = Outcome::ALL.map(|o| b.outcome_operator(o));
    let mut p = [[0.0; 2]; 2];
    for (i, op_a) in ops_a.iter().enumerate() {
        for (j, op_b) in ops_b.iter().enumerate() {
            p[i][j] = expectation_unchecked(state, op_a, op_b);
        }
    }
    ProbTable { p }
}

/// Lüders update after a local measurement. Returns the collapsed state and
/// the probability of the observed outcome.
pub fn post_measurement_state(
    state: &TwoModeState,
    side: Side,
    setting: &MeasurementSetting,
    outcome: Outcome,
) -> Result<(TwoModeState, f64)> {
    let m = setting.outcome_operator(outcome);
    let id = ModeOperator::identity();
    let image = match side {
        Side::A => apply_product(state, &m, &id),
        Side::B => apply_product(state, &id, &m),
    };
    let prob: f64 = image.iter().map(Complex64::norm_sqr).sum();
    if prob <= MIN_OUTCOME_PROBABILITY {
        return Err(Error::ZeroProbabilityOutcome(prob));
    }
    Ok((TwoModeState::from_amplitudes(image)?, prob))
}

/// Spectral norm of `[P(m), N]`; equals `|cos θ sin θ|`.
pub fn commutator_norm(setting: &MeasurementSetting) -> f64 {
    setting
        .projector()
        .commutator(&ModeOperator::number())
        .spectral_norm()
}
