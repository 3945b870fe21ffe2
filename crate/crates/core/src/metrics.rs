//! State and gate fidelity measures.

use crate::error::{Error, Result};
use crate::operator::Operator;
use crate::state::StateVector;

/// |<psi|phi>|^2.
pub fn fidelity(psi: &StateVector, phi: &StateVector) -> Result<f64> {
    Ok(psi.overlap(phi)?.norm_sqr())
}

/// Average gate fidelity between two unitaries on a `d`-dimensional
/// subspace: `F = (d + |Tr(U^dag V)|^2) / (d (d + 1))`.
///
/// Invariant under a global phase on either input.
pub fn average_gate_fidelity(u: &Operator, v: &Operator, d: usize) -> Result<f64> {
    if u.dim() != d || v.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: u.dim().max(v.dim()),
        });
    }
    for (op, name) in [(u, "u"), (v, "v")] {
        let defect = op.unitarity_defect();
        if defect > 1.0e-10 {
            let _ = name;
            return Err(Error::NotUnitary {
                defect,
                tol: 1.0e-10,
            });
        }
    }
    let tr = u.adjoint().matmul(v)?.trace();
    let d = d as f64;
    Ok((d + tr.norm_sqr()) / (d * (d + 1.0)))
}
