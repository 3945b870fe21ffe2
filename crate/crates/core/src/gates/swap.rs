//! SWAP composition from three controlled-phase gates and local gates,
//! letting the NV center hold the dot's state as a cache.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::Result;
use crate::logical::kron_logical;
use crate::operator::Operator;

use super::{GateProvenance, QubitTarget, SingleQubitGate};

/// One element of an entangling sequence.
#[derive(Debug, Clone)]
pub enum SwapStep {
    /// The two-qubit controlled-phase gate.
    Entangle,
    /// A local gate on one qubit.
    Local(SingleQubitGate),
}

fn hadamard() -> Array2<Complex64> {
    let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mut m = Array2::zeros((2, 2));
    m[[0, 0]] = s;
    m[[0, 1]] = s;
    m[[1, 0]] = s;
    m[[1, 1]] = -s;
    m
}

fn pauli_z() -> Array2<Complex64> {
    let mut m = Array2::zeros((2, 2));
    m[[0, 0]] = Complex64::new(1.0, 0.0);
    m[[1, 1]] = Complex64::new(-1.0, 0.0);
    m
}

fn local(target: QubitTarget, m: Array2<Complex64>) -> SwapStep {
    SwapStep::Local(SingleQubitGate::new(
        target,
        m,
        GateProvenance::IdealRotation,
    ))
}

/// SWAP decomposition with three entangling gates. The local gates are
/// Hadamard/phase combinations absorbing the conversion between the native
/// controlled-phase (phase on |x+>|g>) and the textbook CZ.
pub fn swap_sequence() -> Vec<SwapStep> {
    let h = hadamard();
    let z = pauli_z();
    let hz = h.dot(&z);
    vec![
        local(QubitTarget::Nv, h.clone()),
        SwapStep::Entangle,
        local(QubitTarget::Qd, hz.clone()),
        local(QubitTarget::Nv, hz.clone()),
        SwapStep::Entangle,
        local(QubitTarget::Qd, hz.clone()),
        local(QubitTarget::Nv, hz.clone()),
        SwapStep::Entangle,
        local(QubitTarget::Qd, z),
        local(QubitTarget::Nv, hz),
    ]
}

/// Composes a sequence into its 4x4 logical unitary, substituting `cz` for
/// every entangling step.
pub fn compose_swap_sequence(steps: &[SwapStep], cz: &Operator) -> Result<Operator> {
    let id = Array2::<Complex64>::eye(2);
    let mut u = Operator::identity(crate::logical::logical_space());
    for step in steps {
        let m = match step {
            SwapStep::Entangle => cz.clone(),
            SwapStep::Local(gate) => {
                let full = match gate.target {
                    QubitTarget::Qd => kron_logical(&gate.matrix, &id),
                    QubitTarget::Nv => kron_logical(&id, &gate.matrix),
                };
                Operator::new(crate::logical::logical_space(), full)?
            }
        };
        u = m.matmul(&u)?;
    }
    Ok(u)
}

/// Number of entangling steps in a sequence.
pub fn entangling_count(steps: &[SwapStep]) -> usize {
    steps
        .iter()
        .filter(|s| matches!(s, SwapStep::Entangle))
        .count()
}
