//! Basis-state phase rates, the controlled-phase gate schedule and the
//! resulting gate unitary.

use num_complex::Complex64;
use serde::Serialize;

use crate::constants::HBAR_MEV_PS;
use crate::error::{Error, Result};
use crate::logical;
use crate::model::PhysicalParams;
use crate::operator::Operator;

use super::params::EffectiveParams;

/// Energy rates (meV) governing the evolution of the logical basis states:
/// each state |q, n> accumulates phase exp(-i E t / ħ) with
/// E(x+, g) = phi_plus + phi_g + phi_plus_g, E(x+, f) = phi_plus, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseSet {
    pub phi_plus: f64,
    pub phi_minus: f64,
    pub phi_g: f64,
    pub phi_plus_g: f64,
    pub phi_minus_g: f64,
}

fn second_stage_weights(p: &PhysicalParams) -> Result<[f64; 3]> {
    let r2nu = p.root2_nu();
    let dl = p.delta_small;
    const THRESHOLD: f64 = 1.0e-9;
    let checks = [
        (dl, "delta"),
        (dl - r2nu, "delta - sqrt2 nu"),
        (dl + r2nu, "delta + sqrt2 nu"),
    ];
    for (v, name) in checks {
        if !v.is_finite() || v.abs() < THRESHOLD {
            return Err(Error::DegenerateParameters {
                denominator: name.to_string(),
                value: v,
            });
        }
    }
    // order (c0, c1, c2)
    Ok([1.0 / dl, 1.0 / (dl - r2nu), 1.0 / (dl + r2nu)])
}

/// Second-stage phase rates from the effective coefficients. The cross rates
/// carry the +c.c. doubling and the fiber phase enters as cos(phi).
pub fn compute_phases(e: &EffectiveParams, p: &PhysicalParams) -> Result<PhaseSet> {
    let w = second_stage_weights(p)?;
    let sum_sq = |lam: &[f64; 3]| lam[0] * lam[0] * w[0] + lam[1] * lam[1] * w[1] + lam[2] * lam[2] * w[2];
    // the c0 cross term enters with opposite sign
    let cross = |lam: &[f64; 3]| {
        2.0 * p.phi.cos()
            * (lam[1] * e.lambda_g[1] * w[1] + lam[2] * e.lambda_g[2] * w[2]
                - lam[0] * e.lambda_g[0] * w[0])
    };
    Ok(PhaseSet {
        phi_plus: sum_sq(&e.lambda_plus) - e.eps0_plus,
        phi_minus: sum_sq(&e.lambda_minus) - e.eps0_minus,
        phi_g: sum_sq(&e.lambda_g) - e.eps0_g,
        phi_plus_g: cross(&e.lambda_plus),
        phi_minus_g: cross(&e.lambda_minus),
    })
}

impl PhaseSet {
    /// Conditional rate Phi_+g - Phi_-g (meV).
    pub fn conditional_rate(&self) -> f64 {
        self.phi_plus_g - self.phi_minus_g
    }

    /// Energy of each logical basis state in slot order
    /// [x+g, x+f, x-f, x-g] (meV).
    pub fn basis_energies(&self) -> [f64; 4] {
        [
            self.phi_plus + self.phi_g + self.phi_plus_g,
            self.phi_plus,
            self.phi_minus,
            self.phi_minus + self.phi_g + self.phi_minus_g,
        ]
    }

    /// Gate schedule at an arbitrary interaction time.
    pub fn schedule_at(&self, t_ps: f64) -> GateSchedule {
        let to_rad = t_ps / HBAR_MEV_PS;
        GateSchedule {
            t_gate: t_ps,
            corr_x_plus_rad: self.phi_plus * to_rad,
            corr_x_minus_rad: self.phi_minus * to_rad,
            corr_g_rad: (self.phi_g + self.phi_minus_g) * to_rad,
            conditional_phase_rad: self.conditional_rate() * to_rad,
        }
    }
}

/// Interaction time and single-qubit corrections realizing the
/// controlled-phase gate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GateSchedule {
    /// Interaction time (ps).
    pub t_gate: f64,
    /// Correction phase e^{+i .} on |x+> (radians).
    pub corr_x_plus_rad: f64,
    /// Correction phase on |x-> (radians).
    pub corr_x_minus_rad: f64,
    /// Correction phase on |g> (radians).
    pub corr_g_rad: f64,
    /// Conditional phase (Phi_+g - Phi_-g) t / ħ (radians).
    pub conditional_phase_rad: f64,
}

/// Solves (Phi_+g - Phi_-g) t = pi ħ for the controlled-phase-pi time.
pub fn gate_time(phases: &PhaseSet) -> Result<GateSchedule> {
    let rate = phases.conditional_rate();
    let t = std::f64::consts::PI * HBAR_MEV_PS / rate.abs();
    if !t.is_finite() {
        return Err(Error::DegeneratePhases(rate.abs()));
    }
    Ok(phases.schedule_at(t))
}

/// Diagonal two-qubit unitary realized after the correction phases: the
/// conditional phase sits on the |x+>|g> slot.
pub fn cz_unitary(sched: &GateSchedule) -> Operator {
    let one = Complex64::new(1.0, 0.0);
    logical::diagonal_logical([
        Complex64::from_polar(1.0, -sched.conditional_phase_rad),
        one,
        one,
        one,
    ])
    .expect("static 4x4")
}
