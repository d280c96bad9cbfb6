//! Clauser-Horne expression and its local-hidden-variable bounds.
//!
//! For settings `a, a'` on mode `a` and `b, b'` on mode `b`,
//!
//! ```text
//! CH = ⟨P_a'⟩ + ⟨P_b'⟩ - ⟨P_a' P_b'⟩ - ⟨P_a' P_b⟩ - ⟨P_a P_b'⟩ + ⟨P_a P_b⟩
//! ```
//!
//! Every local model keeps `CH` in `[0, 1]`. The bounds are not hard-coded:
//! [`lhv_bounds`] enumerates the 16 deterministic strategies, whose mixtures
//! are exactly the local models, and the expression is affine in their
//! weights.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::measure::{expectation, joint_distribution, MeasurementSetting, ModeOperator, Outcome};
use crate::state::TwoModeState;
use crate::TOL;

/// The four local settings entering the CH expression.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChSettings {
    pub a: MeasurementSetting,
    pub a_prime: MeasurementSetting,
    pub b: MeasurementSetting,
    pub b_prime: MeasurementSetting,
}

impl ChSettings {
    pub fn new(
        a: MeasurementSetting,
        a_prime: MeasurementSetting,
        b: MeasurementSetting,
        b_prime: MeasurementSetting,
    ) -> Self {
        Self {
            a,
            a_prime,
            b,
            b_prime,
        }
    }

    /// Presence tests for `a` and `b`, the superpositions
    /// `(|1⟩ + √3|0⟩)/2` for `a'` and `(|1⟩ - √3|0⟩)/2` for `b'`.
    pub fn reference() -> Self {
        Self {
            a: MeasurementSetting::presence(),
            a_prime: MeasurementSetting::superposition_plus(),
            b: MeasurementSetting::presence(),
            b_prime: MeasurementSetting::superposition_minus(),
        }
    }

    /// Builds settings from `[θa, φa, θa', φa', θb, φb, θb', φb']`.
    pub fn from_angles(angles: [f64; 8]) -> Result<Self> {
        Ok(Self {
            a: MeasurementSetting::new(angles[0], angles[1])?,
            a_prime: MeasurementSetting::new(angles[2], angles[3])?,
            b: MeasurementSetting::new(angles[4], angles[5])?,
            b_prime: MeasurementSetting::new(angles[6], angles[7])?,
        })
    }

    /// Inverse of [`ChSettings::from_angles`].
    pub fn angles(&self) -> [f64; 8] {
        [
            self.a.theta(),
            self.a.phi(),
            self.a_prime.theta(),
            self.a_prime.phi(),
            self.b.theta(),
            self.b.phi(),
            self.b_prime.theta(),
            self.b_prime.phi(),
        ]
    }

    /// Exchanges the roles of the two modes: `a ↔ b`, `a' ↔ b'`.
    pub fn mirrored(&self) -> Self {
        Self {
            a: self.b,
            a_prime: self.b_prime,
            b: self.a,
            b_prime: self.a_prime,
        }
    }
}

/// The six expectation values that make up the CH expression.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChTerms {
    pub a_prime: f64,
    pub b_prime: f64,
    pub a_b: f64,
    pub a_b_prime: f64,
    pub a_prime_b: f64,
    pub a_prime_b_prime: f64,
}

impl ChTerms {
    pub fn value(&self) -> f64 {
        self.a_prime + self.b_prime - self.a_prime_b_prime - self.a_prime_b - self.a_b_prime
            + self.a_b
    }
}

/// Individual CH terms via [`expectation`], identity on the partner mode for
/// the single-mode terms.
pub fn ch_terms(state: &TwoModeState, settings: &ChSettings) -> ChTerms {
    let id = ModeOperator::identity();
    let pa = settings.a.projector();
    let pa2 = settings.a_prime.projector();
    let pb = settings.b.projector();
    let pb2 = settings.b_prime.projector();
    // projectors built from a setting are Hermitian by construction
    let e = |x: &ModeOperator, y: &ModeOperator| {
        expectation(state, x, y).expect("setting projectors are Hermitian")
    };
    ChTerms {
        a_prime: e(&pa2, &id),
        b_prime: e(&id, &pb2),
        a_b: e(&pa, &pb),
        a_b_prime: e(&pa, &pb2),
        a_prime_b: e(&pa2, &pb),
        a_prime_b_prime: e(&pa2, &pb2),
    }
}

pub fn ch_value(state: &TwoModeState, settings: &ChSettings) -> f64 {
    ch_terms(state, settings).value()
}

/// The same expression assembled from joint outcome tables and their
/// marginals instead of direct expectation values.
pub fn ch_value_from_tables(state: &TwoModeState, settings: &ChSettings) -> f64 {
    let fired = Outcome::Fired;
    let t_ab = joint_distribution(state, &settings.a, &settings.b);
    let t_abp = joint_distribution(state, &settings.a, &settings.b_prime);
    let t_apb = joint_distribution(state, &settings.a_prime, &settings.b);
    let t_apbp = joint_distribution(state, &settings.a_prime, &settings.b_prime);
    t_apbp.marginal_a(fired) + t_apbp.marginal_b(fired)
        - t_apbp.both_fired()
        - t_apb.both_fired()
        - t_abp.both_fired()
        + t_ab.both_fired()
}

/// Fixed binary outcome for each of the four local settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DeterministicStrategy {
    pub out_a: u8,
    pub out_a_prime: u8,
    pub out_b: u8,
    pub out_b_prime: u8,
}

impl DeterministicStrategy {
    pub fn new(out_a: u8, out_a_prime: u8, out_b: u8, out_b_prime: u8) -> Self {
        assert!(
            [out_a, out_a_prime, out_b, out_b_prime]
                .iter()
                .all(|&o| o <= 1),
            "outcomes are binary"
        );
        Self {
            out_a,
            out_a_prime,
            out_b,
            out_b_prime,
        }
    }

    /// All 16 strategies, `(a, a', b, b')` read as a 4-bit number, ascending.
    pub fn all() -> impl Iterator<Item = Self> {
        (0u8..16).map(|k| Self::new((k >> 3) & 1, (k >> 2) & 1, (k >> 1) & 1, k & 1))
    }

    /// `a' + b' - a'b' - a'b - ab' + ab` on the fixed outcomes.
    pub fn ch_value(&self) -> i32 {
        let (a, ap, b, bp) = (
            i32::from(self.out_a),
            i32::from(self.out_a_prime),
            i32::from(self.out_b),
            i32::from(self.out_b_prime),
        );
        ap + bp - ap * bp - ap * b - a * bp + a * b
    }
}

impl fmt::Display for DeterministicStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            self.out_a, self.out_a_prime, self.out_b, self.out_b_prime
        )
    }
}

pub fn deterministic_ch_value(strategy: &DeterministicStrategy) -> f64 {
    f64::from(strategy.ch_value())
}

/// `(min, max)` of the CH expression over all local models.
pub fn lhv_bounds() -> (f64, f64) {
    let (lo, hi) = DeterministicStrategy::all()
        .map(|d| d.ch_value())
        .fold((i32::MAX, i32::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)));
    (f64::from(lo), f64::from(hi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    WithinClassical,
    BelowLower,
    AboveUpper,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::WithinClassical => "WITHIN_CLASSICAL",
            Classification::BelowLower => "BELOW_LOWER",
            Classification::AboveUpper => "ABOVE_UPPER",
        }
    }

    pub fn is_violation(&self) -> bool {
        *self != Classification::WithinClassical
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChResult {
    pub value: f64,
    pub classification: Classification,
}

/// Places `value` relative to the local bounds. Values within `1e-12` of a
/// bound count as classical.
pub fn classify(value: f64) -> ChResult {
    let (lo, hi) = lhv_bounds();
    let classification = if value < lo - TOL {
        Classification::BelowLower
    } else if value > hi + TOL {
        Classification::AboveUpper
    } else {
        Classification::WithinClassical
    };
    ChResult {
        value,
        classification,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn reference_violation() {
        let psi = TwoModeState::single_particle_antisymmetric();
        let c = ChSettings::reference();
        let t = ch_terms(&psi, &c);
        assert!((t.a_prime - 0.5).abs() < 1e-12);
        assert!((t.b_prime - 0.5).abs() < 1e-12);
        assert!(t.a_b.abs() < 1e-12);
        for x in [t.a_b_prime, t.a_prime_b, t.a_prime_b_prime] {
            assert!((x - 0.375).abs() < 1e-12);
        }
        assert!((ch_value(&psi, &c) + 0.125).abs() < 1e-12);
        assert_eq!(
            classify(ch_value(&psi, &c)).classification,
            Classification::BelowLower
        );
    }

    #[test]
    fn collapsed_primes_give_upper_bound() {
        let psi = TwoModeState::single_particle_antisymmetric();
        let p = MeasurementSetting::presence();
        let c = ChSettings::new(p, p, p, p);
        assert!((ch_value(&psi, &c) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn table_route_matches() {
        let psi = TwoModeState::single_particle_antisymmetric();
        let c = ChSettings::reference();
        assert!((ch_value(&psi, &c) - ch_value_from_tables(&psi, &c)).abs() < 1e-12);
    }

    #[test]
    fn angles_round_trip() {
        let c = ChSettings::reference();
        assert_eq!(ChSettings::from_angles(c.angles()).unwrap(), c);
        assert!(
            ChSettings::from_angles([FRAC_PI_2 + 0.1, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).is_err()
        );
    }

    #[test]
    fn strategies() {
        let all: Vec<_> = DeterministicStrategy::all().collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), 16);
        assert_eq!(DeterministicStrategy::new(0, 0, 0, 0).ch_value(), 0);
        assert_eq!(DeterministicStrategy::new(0, 1, 0, 1).ch_value(), 1);
        assert_eq!(DeterministicStrategy::new(1, 1, 1, 1).ch_value(), 0);
        assert_eq!(lhv_bounds(), (0.0, 1.0));
    }

    #[test]
    fn classification_thresholds() {
        assert_eq!(classify(-0.125).classification, Classification::BelowLower);
        assert_eq!(
            classify(0.5).classification,
            Classification::WithinClassical
        );
        assert_eq!(classify(1.2).classification, Classification::AboveUpper);
        assert_eq!(
            classify(-1e-13).classification,
            Classification::WithinClassical
        );
        assert_eq!(
            classify(1.0 + 1e-13).classification,
            Classification::WithinClassical
        );
        assert_eq!(classify(-2e-12).classification, Classification::BelowLower);
        assert_eq!(Classification::BelowLower.to_string(), "BELOW_LOWER");
    }
}
