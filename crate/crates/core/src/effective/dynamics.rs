//! Brute-force cross-validation of the closed-form theory: propagate each
//! logical basis state under the full two-qubit interaction Hamiltonian and
//! compare extracted phases against the second-stage prediction.

use rayon::prelude::*;
use serde::Serialize;

use crate::constants::HBAR_MEV_PS;
use crate::error::Result;
use crate::logical;
use crate::model::builders::build_two_qubit_interaction_on;
use crate::model::scheme::{interaction_space, NV_E, NV_F, NV_G, QD_XM, QD_XP};
use crate::model::PhysicalParams;
use crate::propagate::{propagate_observed, PropagationOptions};
use crate::state::StateVector;

use super::params::effective_params;
use super::phases::compute_phases;

/// Wraps an angle to (-pi, pi].
pub fn wrap_angle(x: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut y = x % two_pi;
    if y > std::f64::consts::PI {
        y -= two_pi;
    } else if y <= -std::f64::consts::PI {
        y += two_pi;
    }
    y
}

#[derive(Debug, Clone, Serialize)]
pub struct EvolveRow {
    pub label: &'static str,
    /// arg <psi0 | psi(T)> from the brute-force propagation (radians).
    pub extracted_rad: f64,
    /// Closed-form prediction wrapped to (-pi, pi] (radians).
    pub effective_rad: f64,
    /// Unwrapped closed-form phase -E T / ħ (radians).
    pub effective_unwrapped_rad: f64,
    /// |wrap(extracted - effective)| / |effective_unwrapped|.
    pub relative_error: f64,
    /// Peak excited-level population during this run.
    pub max_excited_population: f64,
    /// Peak population of the top Fock level of any mode during this run.
    pub max_top_fock_population: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct EvolveReport {
    pub horizon_ps: f64,
    pub n_max: usize,
    pub rows: Vec<EvolveRow>,
    /// Conditional-phase combination from the brute-force runs (radians).
    pub combination_extracted_rad: f64,
    /// -(Phi_+g - Phi_-g) T / ħ wrapped to (-pi, pi] (radians).
    pub combination_effective_rad: f64,
    pub combination_relative_error: f64,
    pub max_excited_population: f64,
    pub max_top_fock_population: f64,
    pub total_steps: usize,
}

/// Propagates the four logical basis states (vacuum modes) for `horizon_ps`
/// under the full interaction Hamiltonian and extracts phases.
pub fn full_vs_effective(
    p: &PhysicalParams,
    horizon_ps: f64,
    tol: f64,
) -> Result<EvolveReport> {
    let e = effective_params(p)?;
    let phases = compute_phases(&e, p)?;
    let energies = phases.basis_energies();

    let levels = p.mode_levels();
    let space = interaction_space(levels)?;
    let h = build_two_qubit_interaction_on(p, &space)?;

    let qd_index = [QD_XP, QD_XP, QD_XM, QD_XM];
    let nv_index = [NV_G, NV_F, NV_F, NV_G];
    let opts = PropagationOptions {
        tol,
        ..Default::default()
    };

    let runs: Vec<Result<(f64, f64, f64, usize)>> = (0..4usize)
        .into_par_iter()
        .map(|slot| {
            let psi0 = StateVector::basis(&space, &[qd_index[slot], nv_index[slot], 0, 0, 0])?;
            let qd_slot = 0usize;
            let nv_slot = 1usize;
            let mut max_excited = 0.0f64;
            let mut max_top = 0.0f64;
            let top = levels - 1;
            let res = propagate_observed(&h, &psi0, 0.0, horizon_ps, &opts, |_t, amps| {
                let state = amps;
                // excited populations: QD trion levels (indices >= 2), NV e
                let mut exc = 0.0;
                let mut topf = 0.0;
                for (i, z) in state.iter().enumerate() {
                    let idx = space.unravel(i);
                    let p2 = z.norm_sqr();
                    if idx[qd_slot] >= 2 || idx[nv_slot] == NV_E {
                        exc += p2;
                    }
                    if idx[2] >= top || idx[3] >= top || idx[4] >= top {
                        topf += p2;
                    }
                }
                max_excited = max_excited.max(exc);
                max_top = max_top.max(topf);
            })?;
            let overlap = psi0.overlap(&res.state)?;
            Ok((overlap.arg(), max_excited, max_top, res.accepted_steps))
        })
        .collect();

    let mut rows = Vec::with_capacity(4);
    let mut total_steps = 0usize;
    let mut extracted = [0.0f64; 4];
    for (slot, run) in runs.into_iter().enumerate() {
        let (arg, max_excited, max_top, steps) = run?;
        extracted[slot] = arg;
        total_steps += steps;
        let eff_unwrapped = -energies[slot] * horizon_ps / HBAR_MEV_PS;
        let eff_wrapped = wrap_angle(eff_unwrapped);
        let diff = wrap_angle(arg - eff_wrapped).abs();
        rows.push(EvolveRow {
            label: logical::LABELS[slot],
            extracted_rad: arg,
            effective_rad: eff_wrapped,
            effective_unwrapped_rad: eff_unwrapped,
            relative_error: diff / eff_unwrapped.abs().max(1.0e-300),
            max_excited_population: max_excited,
            max_top_fock_population: max_top,
        });
    }

    let comb_extracted =
        wrap_angle(extracted[0] - extracted[1] - extracted[3] + extracted[2]);
    let comb_eff_unwrapped = -phases.conditional_rate() * horizon_ps / HBAR_MEV_PS;
    let comb_eff = wrap_angle(comb_eff_unwrapped);
    let comb_err = wrap_angle(comb_extracted - comb_eff).abs() / comb_eff.abs().max(1.0e-300);

    Ok(EvolveReport {
        horizon_ps,
        n_max: p.n_max,
        max_excited_population: rows
            .iter()
            .map(|r| r.max_excited_population)
            .fold(0.0, f64::max),
        max_top_fock_population: rows
            .iter()
            .map(|r| r.max_top_fock_population)
            .fold(0.0, f64::max),
        rows,
        combination_extracted_rad: comb_extracted,
        combination_effective_rad: comb_eff,
        combination_relative_error: comb_err,
        total_steps,
    })
}
