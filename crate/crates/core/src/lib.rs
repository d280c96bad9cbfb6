//! Two-mode Fock-space simulator for single-particle nonlocality.
//!
//! A single particle shared between two distant modes `a` and `b`, probed by
//! detectors that test for coherent superpositions of the vacuum and the
//! one-particle state, can violate the Clauser-Horne inequality. This crate
//! builds the states and projectors involved, evaluates the Clauser-Horne
//! expression, computes the exact local-hidden-variable bounds by
//! enumeration, exhibits the two-particle component created by the
//! measurement itself, and searches settings for the largest violation.
//!
//! ```
//! use fock_nonlocal::{bell, ChSettings, TwoModeState};
//!
//! let psi = TwoModeState::single_particle_antisymmetric();
//! let value = bell::ch_value(&psi, &ChSettings::reference());
//! assert!((value + 0.125).abs() < 1e-12);
//! ```

pub mod bell;
pub mod cli;
mod error;
pub mod measure;
pub mod optimize;
pub mod sampling;
pub mod state;

pub use bell::{ChResult, ChSettings, Classification, DeterministicStrategy};
pub use error::{Error, Result};
pub use measure::{MeasurementSetting, ModeOperator, Outcome, ProbTable, Side};
pub use optimize::{SearchOptions, SweepAxis, SweepGrid, SweepParam, SweepRecord};
pub use state::{ModeVector, TwoModeState};

pub use num_complex::Complex64;

/// Tolerance for normalization, hermiticity and golden-value checks.
pub const TOL: f64 = 1e-12;
