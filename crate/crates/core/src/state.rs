//! State vectors on the truncated two-mode Fock space.
//!
//! Each mode holds zero or one particle, so a joint state lives in a
//! four-dimensional space with basis `|n_a n_b⟩` stored at index
//! `2·n_a + n_b`: `[|00⟩, |01⟩, |10⟩, |11⟩]`.

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Squared norms below this are treated as the zero vector.
pub const DEGENERATE_NORM: f64 = 1e-12;

/// Index of basis state `|n_a n_b⟩`.
#[inline]
pub const fn basis_index(n_a: usize, n_b: usize) -> usize {
    2 * n_a + n_b
}

fn check_finite(values: &[Complex64], what: &'static str) -> Result<()> {
    if values.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

/// `(cos x, sin x)`, exact at multiples of `π/2` so that the vacuum,
/// presence and sign-flipped targets carry no roundoff.
fn cos_sin(x: f64) -> (f64, f64) {
    use std::f64::consts::{FRAC_PI_2, PI};
    let r = x.rem_euclid(std::f64::consts::TAU);
    if x == 0.0 || r == 0.0 {
        (1.0, 0.0)
    } else if x == FRAC_PI_2 || r == FRAC_PI_2 {
        (0.0, 1.0)
    } else if x == PI || r == PI {
        (-1.0, 0.0)
    } else if r == 3.0 * FRAC_PI_2 {
        (0.0, -1.0)
    } else {
        (x.cos(), x.sin())
    }
}

/// A normalized vector on one mode's `{|0⟩, |1⟩}` space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeVector {
    amps: [Complex64; 2],
}

impl ModeVector {
    /// Normalizes `c0|0⟩ + c1|1⟩`.
    pub fn new(c0: Complex64, c1: Complex64) -> Result<Self> {
        check_finite(&[c0, c1], "mode vector")?;
        let norm_sqr = c0.norm_sqr() + c1.norm_sqr();
        if norm_sqr <= DEGENERATE_NORM {
            return Err(Error::DegenerateState);
        }
        let norm = norm_sqr.sqrt();
        Ok(Self {
            amps: [c0 / norm, c1 / norm],
        })
    }

    pub fn vacuum() -> Self {
        Self { amps: [ONE, ZERO] }
    }

    pub fn one_particle() -> Self {
        Self { amps: [ZERO, ONE] }
    }

    /// `cos θ |0⟩ + e^{iφ} sin θ |1⟩`, unit norm by construction.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (ct, st) = cos_sin(theta);
        let (cp, sp) = cos_sin(phi);
        Self {
            amps: [Complex64::new(ct, 0.0), Complex64::new(st * cp, st * sp)],
        }
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        self.amps
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &ModeVector) -> Complex64 {
        self.amps[0].conj() * other.amps[0] + self.amps[1].conj() * other.amps[1]
    }
}

/// A normalized pure state of the two modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeState {
    amps: [Complex64; 4],
}

impl TwoModeState {
    /// Builds `p|10⟩ + q|01⟩ + r|00⟩`, renormalized. The `|11⟩` amplitude is zero.
    pub fn from_coefficients(p: Complex64, q: Complex64, r: Complex64) -> Result<Self> {
        let mut amps = [ZERO; 4];
        amps[basis_index(1, 0)] = p;
        amps[basis_index(0, 1)] = q;
        amps[basis_index(0, 0)] = r;
        check_finite(&amps, "state coefficients")?;
        Self::from_amplitudes(amps)
    }

    /// Normalizes an arbitrary amplitude vector in `[|00⟩, |01⟩, |10⟩, |11⟩]` order.
    pub fn from_amplitudes(amps: [Complex64; 4]) -> Result<Self> {
        check_finite(&amps, "state amplitudes")?;
        let norm_sqr: f64 = amps.iter().map(Complex64::norm_sqr).sum();
        if norm_sqr <= DEGENERATE_NORM {
            return Err(Error::DegenerateState);
        }
        let norm = norm_sqr.sqrt();
        Ok(Self {
            amps: amps.map(|z| z / norm),
        })
    }

    /// Real-amplitude convenience wrapper around [`TwoModeState::from_amplitudes`].
    pub fn from_real_amplitudes(amps: [f64; 4]) -> Result<Self> {
        Self::from_amplitudes(amps.map(|x| Complex64::new(x, 0.0)))
    }

    pub fn basis(n_a: usize, n_b: usize) -> Self {
        assert!(n_a < 2 && n_b < 2, "occupation numbers are truncated at 1");
        let mut amps = [ZERO; 4];
        amps[basis_index(n_a, n_b)] = ONE;
        Self { amps }
    }

    pub fn vacuum() -> Self {
        Self::basis(0, 0)
    }

    /// The one-particle state `(|10⟩ - |01⟩)/√2`: the particle is in mode
    /// `a` or mode `b`, with opposite signs and no vacuum component.
    pub fn single_particle_antisymmetric() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut amps = [ZERO; 4];
        amps[basis_index(1, 0)] = Complex64::new(h, 0.0);
        amps[basis_index(0, 1)] = Complex64::new(-h, 0.0);
        Self { amps }
    }

    /// Tensor product `|u⟩_a ⊗ |v⟩_b`.
    pub fn product(a: &ModeVector, b: &ModeVector) -> Self {
        let (ua, ub) = (a.amplitudes(), b.amplitudes());
        let mut amps = [ZERO; 4];
        for (i, x) in ua.iter().enumerate() {
            for (j, y) in ub.iter().enumerate() {
                amps[basis_index(i, j)] = x * y;
            }
        }
        Self { amps }
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amps
    }

    pub fn amplitude(&self, n_a: usize, n_b: usize) -> Complex64 {
        self.amps[basis_index(n_a, n_b)]
    }

    /// Basis probabilities `|⟨n_a n_b|s⟩|²` in storage order.
    pub fn probabilities(&self) -> [f64; 4] {
        self.amps.map(|z| z.norm_sqr())
    }

    /// Multiplies every amplitude by `e^{iα}`.
    pub fn with_global_phase(&self, alpha: f64) -> Self {
        let phase = Complex64::from_polar(1.0, alpha);
        Self {
            amps: self.amps.map(|z| z * phase),
        }
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &TwoModeState) -> Complex64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(x, y)| x.conj() * y)
            .sum()
    }

    /// Weight of the two-particle component, `|⟨11|s⟩|²`.
    pub fn two_particle_weight(&self) -> f64 {
        self.amplitude(1, 1).norm_sqr()
    }

    /// `⟨N_a ⊗ I + I ⊗ N_b⟩` with `N = |1⟩⟨1|` on each mode.
    pub fn total_number_expectation(&self) -> f64 {
        let w = self.probabilities();
        w[basis_index(0, 1)] + w[basis_index(1, 0)] + 2.0 * w[basis_index(1, 1)]
    }
}
