//! Single-qubit correction phases completing the controlled-phase gate.

use ndarray::Array2;
use num_complex::Complex64;

use crate::effective::GateSchedule;

use super::{GateProvenance, QubitTarget, SingleQubitGate};

fn phase_gate(target: QubitTarget, slot0_phase: f64) -> SingleQubitGate {
    let mut m = Array2::zeros((2, 2));
    m[[0, 0]] = Complex64::from_polar(1.0, slot0_phase);
    m[[1, 1]] = Complex64::new(1.0, 0.0);
    SingleQubitGate::new(target, m, GateProvenance::CorrectionPhase)
}

/// The three single-qubit corrections applied after the two-qubit
/// interaction: e^{+i Phi_+ t/ħ} on |x+>, e^{+i Phi_- t/ħ} on |x->, and
/// e^{+i (Phi_g + Phi_-g) t/ħ} on |g>.
///
/// QD gates act on (x+, x-); the NV gate acts on (g, f).
pub fn correction_phases(sched: &GateSchedule) -> [SingleQubitGate; 3] {
    let mut x_minus = Array2::zeros((2, 2));
    x_minus[[0, 0]] = Complex64::new(1.0, 0.0);
    x_minus[[1, 1]] = Complex64::from_polar(1.0, sched.corr_x_minus_rad);
    [
        phase_gate(QubitTarget::Qd, sched.corr_x_plus_rad),
        SingleQubitGate::new(QubitTarget::Qd, x_minus, GateProvenance::CorrectionPhase),
        phase_gate(QubitTarget::Nv, sched.corr_g_rad),
    ]
}
