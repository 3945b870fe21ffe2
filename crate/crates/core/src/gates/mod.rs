//! Single-qubit operations and gate composition.

pub mod corrections;
pub mod raman;
pub mod rotations;
pub mod swap;

use ndarray::Array2;
use num_complex::Complex64;

use crate::linalg;

pub use corrections::correction_phases;
pub use raman::{
    nv_raman_effective_coupling, nv_raman_unitary, raman_full_hamiltonian,
    raman_reduced_hamiltonian, simulate_raman_full, RamanRun,
};
pub use rotations::{qd_rotation, rotation_matrix, Axis};
pub use swap::{compose_swap_sequence, swap_sequence, SwapStep};

/// Which physical qubit a single-qubit gate addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QubitTarget {
    /// Quantum dot, basis (x+, x-).
    Qd,
    /// NV center, basis (g, f) unless noted otherwise.
    Nv,
}

/// How a gate was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateProvenance {
    RamanEffective,
    IdealRotation,
    CorrectionPhase,
}

/// A 2x2 unitary on one of the two physical qubits.
#[derive(Debug, Clone)]
pub struct SingleQubitGate {
    pub target: QubitTarget,
    pub matrix: Array2<Complex64>,
    pub provenance: GateProvenance,
}

impl SingleQubitGate {
    pub fn new(
        target: QubitTarget,
        matrix: Array2<Complex64>,
        provenance: GateProvenance,
    ) -> Self {
        debug_assert_eq!(matrix.nrows(), 2);
        debug_assert_eq!(matrix.ncols(), 2);
        SingleQubitGate {
            target,
            matrix,
            provenance,
        }
    }

    pub fn unitarity_defect(&self) -> f64 {
        linalg::unitarity_defect(&self.matrix)
    }
}
