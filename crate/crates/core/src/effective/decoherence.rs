//! Excited-state occupation and the effective decoherence budget.

use serde::Serialize;

use crate::model::PhysicalParams;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecoherenceEstimate {
    /// Time-averaged trion occupation during the drive, Omega1^2 / Delta1^2.
    pub p_qd: f64,
    /// NV excited-level occupation, Omega2^2 / Delta2^2.
    pub p_nv: f64,
    /// Effective decoherence time min(tau_qd / p_qd, tau_nv / p_nv) in ns.
    pub t_eff_ns: f64,
}

pub fn decoherence_estimate(p: &PhysicalParams) -> DecoherenceEstimate {
    let p_qd = (p.omega1 / p.delta1).powi(2);
    let p_nv = (p.omega2 / p.delta2).powi(2);
    let t_eff_ns = (p.tau_qd / p_qd).min(p.tau_nv / p_nv);
    DecoherenceEstimate {
        p_qd,
        p_nv,
        t_eff_ns,
    }
}
