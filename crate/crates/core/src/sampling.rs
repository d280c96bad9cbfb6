//! Seeded random states and settings for property checks and exploration.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::bell::ChSettings;
use crate::measure::MeasurementSetting;
use crate::state::{ModeVector, TwoModeState};

pub const DEFAULT_SEED: u64 = 0;

/// Deterministic sampler; identical seeds give identical sequences.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Default for Sampler {
    fn default() -> Self {
        Self::new(DEFAULT_SEED)
    }
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    /// Complex Gaussian with independent standard-normal parts.
    pub fn complex_normal(&mut self) -> Complex64 {
        Complex64::new(
            self.rng.sample(StandardNormal),
            self.rng.sample(StandardNormal),
        )
    }

    /// Unitarily invariant random state on the four-dimensional space.
    pub fn state(&mut self) -> TwoModeState {
        loop {
            let amps = [(); 4].map(|_| self.complex_normal());
            if let Ok(s) = TwoModeState::from_amplitudes(amps) {
                return s;
            }
        }
    }

    pub fn mode_vector(&mut self) -> ModeVector {
        loop {
            if let Ok(v) = ModeVector::new(self.complex_normal(), self.complex_normal()) {
                return v;
            }
        }
    }

    pub fn product_state(&mut self) -> TwoModeState {
        let a = self.mode_vector();
        let b = self.mode_vector();
        TwoModeState::product(&a, &b)
    }

    /// Setting with `θ` uniform on `[0, π/2]` and `φ` uniform on `[0, 2π)`.
    pub fn setting(&mut self) -> MeasurementSetting {
        let theta = self.rng.gen_range(0.0..=FRAC_PI_2);
        let phi = self.rng.gen_range(0.0..TAU);
        MeasurementSetting::new(theta, phi).expect("sampled inside the legal range")
    }

    pub fn ch_settings(&mut self) -> ChSettings {
        ChSettings::new(
            self.setting(),
            self.setting(),
            self.setting(),
            self.setting(),
        )
    }
}
