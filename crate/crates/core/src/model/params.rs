//! Physical parameter set for the hybrid processing unit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Couplings, Rabi frequencies, detunings and decay times of the unit.
/// Energies in meV, decay times in ns, phases in radians.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PhysicalParams {
    /// QD-cavity coupling g1 (meV).
    pub g1: f64,
    /// NV-cavity coupling g2 (meV).
    pub g2: f64,
    /// Classical Rabi frequency on the QD vertical transitions (meV).
    pub omega1: f64,
    /// Classical Rabi frequency on the NV g-e transition (meV).
    pub omega2: f64,
    /// Vertical-polarized pulse Rabi frequency for local control (meV).
    pub omega_v: f64,
    /// Horizontal-polarized pulse Rabi frequency for local control (meV).
    pub omega_h: f64,
    /// sigma+-polarized pulse Rabi frequency for the NV Raman gate (meV).
    pub omega_plus: f64,
    /// Laser detuning from the QD transitions (meV).
    pub delta1: f64,
    /// Laser detuning from the NV transition (meV).
    pub delta2: f64,
    /// Electron Zeeman splitting delta_e (meV).
    pub delta_e: f64,
    /// Hole Zeeman splitting delta_h (meV).
    pub delta_h: f64,
    /// Cavity-fiber coupling nu (meV).
    pub nu: f64,
    /// Offset delta between cavity and laser detunings (meV);
    /// cavity detunings are delta_j + delta.
    pub delta_small: f64,
    /// Fiber propagation phase (radians).
    pub phi: f64,
    /// QD trion decay time (ns).
    pub tau_qd: f64,
    /// NV excited-level decay time (ns).
    pub tau_nv: f64,
    /// Fock truncation: keep levels 0..=n_max per bosonic mode.
    pub n_max: usize,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self::reference()
    }
}

impl PhysicalParams {
    /// The reference operating point: experimentally achievable couplings
    /// and detunings for the QD/NV unit.
    pub fn reference() -> Self {
        PhysicalParams {
            g1: 0.01,
            g2: 0.02,
            omega1: 0.1,
            omega2: 0.15,
            omega_v: 0.1,
            omega_h: 0.0,
            omega_plus: 0.1,
            delta1: 2.0,
            delta2: 2.2,
            delta_e: 0.05,
            delta_h: 0.05,
            nu: 0.0145,
            delta_small: 0.02,
            phi: 0.0,
            tau_qd: 1.4,
            tau_nv: 12.0,
            n_max: 2,
        }
    }

    /// Strong-coupling variant used for fast brute-force cross-checks:
    /// couplings scaled up so conditional phases accumulate within a few ns,
    /// detunings kept clear of the normal-mode resonance.
    pub fn desk_scale() -> Self {
        PhysicalParams {
            g1: 0.04,
            g2: 0.08,
            omega1: 0.4,
            omega2: 0.6,
            nu: 0.01,
            delta_small: 0.05,
            ..Self::reference()
        }
    }

    /// Weak-coupling variant that satisfies both elimination hierarchies
    /// comfortably; used for truncation and convergence properties.
    pub fn dispersive() -> Self {
        PhysicalParams {
            g1: 0.005,
            g2: 0.01,
            omega1: 0.05,
            omega2: 0.075,
            nu: 0.01,
            delta_small: 0.05,
            ..Self::reference()
        }
    }

    /// Total ground-state Zeeman splitting delta_e + delta_h.
    pub fn delta_total(&self) -> f64 {
        self.delta_e + self.delta_h
    }

    /// sqrt(2) nu, the normal-mode splitting.
    pub fn root2_nu(&self) -> f64 {
        std::f64::consts::SQRT_2 * self.nu
    }

    /// Scales the two-qubit couplings (g1, g2, omega1, omega2) by `s`.
    pub fn scaled_couplings(&self, s: f64) -> Self {
        PhysicalParams {
            g1: self.g1 * s,
            g2: self.g2 * s,
            omega1: self.omega1 * s,
            omega2: self.omega2 * s,
            ..self.clone()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("g1", self.g1),
            ("g2", self.g2),
            ("omega1", self.omega1),
            ("omega2", self.omega2),
            ("omega_v", self.omega_v),
            ("omega_h", self.omega_h),
            ("omega_plus", self.omega_plus),
            ("delta1", self.delta1),
            ("delta2", self.delta2),
            ("delta_e", self.delta_e),
            ("delta_h", self.delta_h),
            ("nu", self.nu),
            ("delta_small", self.delta_small),
            ("phi", self.phi),
            ("tau_qd", self.tau_qd),
            ("tau_nv", self.tau_nv),
        ];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(Error::InvalidArgument(format!("{name} is not finite")));
            }
        }
        if self.g1 < 0.0 || self.g2 < 0.0 || self.nu < 0.0 {
            return Err(Error::InvalidArgument(
                "couplings g1, g2, nu must be non-negative".into(),
            ));
        }
        if self.n_max < 1 {
            return Err(Error::InvalidArgument("n_max must be at least 1".into()));
        }
        if self.tau_qd <= 0.0 || self.tau_nv <= 0.0 {
            return Err(Error::InvalidArgument(
                "decay times must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Fock levels kept per bosonic mode.
    pub fn mode_levels(&self) -> usize {
        self.n_max + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_set_matches_symbol_table() {
        let p = PhysicalParams::reference();
        assert_eq!(
            [p.g1, p.g2, p.omega1, p.omega2],
            [0.01, 0.02, 0.1, 0.15]
        );
        assert_eq!(
            [p.delta1, p.delta2, p.delta_total(), p.nu, p.delta_small],
            [2.0, 2.2, 0.1, 0.0145, 0.02]
        );
        assert_eq!((p.tau_qd, p.tau_nv), (1.4, 12.0));
        p.validate().unwrap();
    }

    #[test]
    fn validation_catches_bad_values() {
        let mut p = PhysicalParams::reference();
        p.g1 = -1.0;
        assert!(p.validate().is_err());
        let mut p = PhysicalParams::reference();
        p.n_max = 0;
        assert!(p.validate().is_err());
        let mut p = PhysicalParams::reference();
        p.delta1 = f64::NAN;
        assert!(p.validate().is_err());
    }

    #[test]
    fn coupling_scaling() {
        let p = PhysicalParams::reference().scaled_couplings(2.0);
        assert_eq!(p.g1, 0.02);
        assert_eq!(p.omega2, 0.3);
        assert_eq!(p.delta1, 2.0);
    }
}
