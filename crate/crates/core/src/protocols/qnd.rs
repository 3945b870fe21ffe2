//! Ideal conditional maps of the measurement and cooling cycles.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::{JointState, LogicalState, BRANCH_FLAGS};

/// Measurement cycle: each branch emits its flag pattern, amplitudes are
/// carried along unchanged.
pub fn qnd_map(s: &LogicalState) -> Result<JointState> {
    let norm_sq: f64 = s.amplitudes.iter().map(|z| z.norm_sqr()).sum();
    if (norm_sq - 1.0).abs() > 1.0e-12 {
        return Err(Error::NotNormalized((norm_sq - 1.0).abs()));
    }
    let mut amplitudes = [Complex64::new(0.0, 0.0); 16];
    for (slot, amp) in s.amplitudes.iter().enumerate() {
        amplitudes[slot * 4 + BRANCH_FLAGS[slot].index()] = *amp;
    }
    Ok(JointState { amplitudes })
}

/// Cooling cycle: pumps all register population onto |x+>|g>, leaving the
/// four amplitudes on the photon flags. The input must lie in the image of
/// the measurement map.
pub fn cooling_transfer(j: &JointState) -> Result<JointState> {
    let mut forbidden = 0.0f64;
    for slot in 0..4 {
        for flag_index in 0..4 {
            if flag_index != BRANCH_FLAGS[slot].index() {
                forbidden += j.amplitudes[slot * 4 + flag_index].norm_sqr();
            }
        }
    }
    if forbidden > 1.0e-9 {
        return Err(Error::InvalidArgument(format!(
            "population {forbidden:.3e} outside the measurement-cycle image"
        )));
    }
    let mut amplitudes = [Complex64::new(0.0, 0.0); 16];
    for (slot, flags) in BRANCH_FLAGS.iter().enumerate() {
        // all branches land on |x+, g> (slot 0) keeping their flags
        amplitudes[flags.index()] += j.amplitudes[slot * 4 + flags.index()];
    }
    Ok(JointState { amplitudes })
}

/// Photonic marginal probabilities of a joint state, indexed by
/// `FlagOutcome::index`.
pub fn flag_marginals(j: &JointState) -> [f64; 4] {
    let mut p = [0.0; 4];
    for slot in 0..4 {
        for flag_index in 0..4 {
            p[flag_index] += j.amplitudes[slot * 4 + flag_index].norm_sqr();
        }
    }
    p
}
