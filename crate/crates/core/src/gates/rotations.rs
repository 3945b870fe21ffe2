//! Ideal single-qubit rotations.
//!
//! Fast detuned pulses rotate the dot spin much quicker than the cavity
//! couples, so dot single-qubit control is modeled as ideal rotations.

use ndarray::Array2;
use num_complex::Complex64;

use super::{GateProvenance, QubitTarget, SingleQubitGate};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Z,
}

/// exp(-i angle sigma_axis / 2).
pub fn rotation_matrix(axis: Axis, angle: f64) -> Array2<Complex64> {
    let half = 0.5 * angle;
    let c = Complex64::new(half.cos(), 0.0);
    let mut m = Array2::zeros((2, 2));
    match axis {
        Axis::X => {
            let s = Complex64::new(0.0, -half.sin());
            m[[0, 0]] = c;
            m[[1, 1]] = c;
            m[[0, 1]] = s;
            m[[1, 0]] = s;
        }
        Axis::Z => {
            m[[0, 0]] = Complex64::from_polar(1.0, -half);
            m[[1, 1]] = Complex64::from_polar(1.0, half);
        }
    }
    m
}

/// Ideal rotation of the dot spin about the given axis, on (x+, x-).
pub fn qd_rotation(axis: Axis, angle: f64) -> SingleQubitGate {
    SingleQubitGate::new(
        QubitTarget::Qd,
        rotation_matrix(axis, angle),
        GateProvenance::IdealRotation,
    )
}
