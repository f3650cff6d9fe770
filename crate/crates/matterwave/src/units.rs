//! Physical parameters and the natural unit system of the gradient problem.
//!
//! A two-level atom of mass `M` feels a constant gradient force `F` on its
//! upper internal state. The combination of `M`, `F` and `hbar` fixes a
//! length scale `d = (hbar^2 / 2 M F)^(1/3)` (the diffraction limit of a
//! monochromatic drive) and a time scale `tau = (2 hbar M / F^2)^(1/3)`.
//! They satisfy `F * d * tau = hbar` identically, so the natural-unit system
//! `d = tau = hbar = 1` implies `F = 1` and `M = 1/2`. All propagation code
//! works in these units; SI values enter and leave only at the CLI boundary.

use crate::error::{Error, Result};

/// 2018 CODATA reduced Planck constant, J s.
pub const HBAR_SI: f64 = 1.054_571_817e-34;
/// Unified atomic mass unit, kg.
pub const AMU_SI: f64 = 1.660_539_066_60e-27;

/// Mass, gradient force and hbar; these three numbers define every scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Atomic mass.
    pub mass: f64,
    /// Gradient force on the field-sensitive internal state, `F = alpha * mu_Bohr * g`.
    pub force: f64,
    /// Reduced Planck constant.
    pub hbar: f64,
    /// Bare transition frequency at `z = 0`. Stored for reference only; the
    /// rotating frame removes it from every equation of motion.
    pub omega21_0: f64,
}

impl PhysicalParams {
    pub fn new(mass: f64, force: f64, hbar: f64, omega21_0: f64) -> Result<Self> {
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(Error::Domain(format!("mass must be positive, got {mass}")));
        }
        if !(force > 0.0) || !force.is_finite() {
            return Err(Error::Domain(format!("force must be positive, got {force}")));
        }
        if !(hbar > 0.0) || !hbar.is_finite() {
            return Err(Error::Domain(format!("hbar must be positive, got {hbar}")));
        }
        Ok(Self { mass, force, hbar, omega21_0 })
    }

    /// Canonical natural-unit parameter set: `hbar = F = 1`, `M = 1/2`,
    /// for which `d = tau = 1`.
    pub fn natural() -> Self {
        Self { mass: 0.5, force: 1.0, hbar: 1.0, omega21_0: 0.0 }
    }
}

/// Derived length and time scales of a parameter set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NaturalUnits {
    /// Diffraction-limit length `d = (hbar^2 / 2 M F)^(1/3)`.
    pub length_d: f64,
    /// Characteristic time `tau = (2 hbar M / F^2)^(1/3)`.
    pub time_tau: f64,
}

impl NaturalUnits {
    /// Momentum unit `hbar / d`.
    pub fn momentum_unit(&self, hbar: f64) -> f64 {
        hbar / self.length_d
    }

    /// Drive-amplitude unit `hbar / tau`.
    pub fn amplitude_unit(&self, hbar: f64) -> f64 {
        hbar / self.time_tau
    }
}

/// Computes the natural length and time scales of a parameter set.
pub fn natural_units(params: &PhysicalParams) -> Result<NaturalUnits> {
    PhysicalParams::new(params.mass, params.force, params.hbar, params.omega21_0)?;
    let length_d = (params.hbar * params.hbar / (2.0 * params.mass * params.force)).cbrt();
    let time_tau = (2.0 * params.hbar * params.mass / (params.force * params.force)).cbrt();
    Ok(NaturalUnits { length_d, time_tau })
}
