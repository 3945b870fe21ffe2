//! The two-qubit logical basis and helpers for 4x4 gates.
//!
//! Logical amplitudes are ordered `{|x+>|g>, |x+>|f>, |x->|f>, |x->|g>}`
//! throughout the crate (the order in which the four branches appear in the
//! measurement and transfer protocols). Note this differs from the plain
//! Kronecker order of (x+, x-) x (g, f): the last two slots are swapped.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::Result;
use crate::operator::Operator;
use crate::space::{compose_space, HilbertSpace};

/// Number of logical basis states.
pub const DIM: usize = 4;

/// Human-readable labels in logical order.
pub const LABELS: [&str; DIM] = ["x+g", "x+f", "x-f", "x-g"];

/// QD index (0 = x+, 1 = x-) of each logical slot.
pub const QD_OF_SLOT: [usize; DIM] = [0, 0, 1, 1];

/// NV index (0 = g, 1 = f) of each logical slot.
pub const NV_OF_SLOT: [usize; DIM] = [0, 1, 1, 0];

/// Logical slot of the given (qd, nv) ground-state pair.
pub fn slot(qd: usize, nv: usize) -> usize {
    match (qd, nv) {
        (0, 0) => 0,
        (0, 1) => 1,
        (1, 1) => 2,
        (1, 0) => 3,
        _ => panic!("qubit indices must be 0 or 1"),
    }
}

/// The 4-dimensional logical space descriptor.
pub fn logical_space() -> HilbertSpace {
    compose_space(vec![("logical", DIM)]).expect("static space")
}

/// Builds the 4x4 operator acting as `qd_op` on the dot and `nv_op` on the
/// NV center, expressed in logical slot order.
pub fn kron_logical(qd_op: &Array2<Complex64>, nv_op: &Array2<Complex64>) -> Array2<Complex64> {
    let mut m = Array2::zeros((DIM, DIM));
    for r in 0..DIM {
        for c in 0..DIM {
            m[[r, c]] = qd_op[[QD_OF_SLOT[r], QD_OF_SLOT[c]]] * nv_op[[NV_OF_SLOT[r], NV_OF_SLOT[c]]];
        }
    }
    m
}

/// Diagonal 4x4 operator in logical order.
pub fn diagonal_logical(entries: [Complex64; DIM]) -> Result<Operator> {
    let mut m = Array2::zeros((DIM, DIM));
    for (k, z) in entries.into_iter().enumerate() {
        m[[k, k]] = z;
    }
    Operator::new(logical_space(), m)
}

/// Ideal controlled-phase gate: -1 on the |x+>|g> slot.
pub fn ideal_cz() -> Operator {
    diagonal_logical([
        Complex64::new(-1.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
    ])
    .expect("static operator")
}

/// Ideal SWAP under the encoding x+ <-> g <-> logical 0, x- <-> f <-> 1.
pub fn ideal_swap() -> Operator {
    let mut m = Array2::zeros((DIM, DIM));
    for (r, c) in [(0usize, 0usize), (2, 2), (1, 3), (3, 1)] {
        m[[r, c]] = Complex64::new(1.0, 0.0);
    }
    Operator::new(logical_space(), m).expect("static operator")
}

/// True when `a = e^{i phi} b` for some global phase, to within `tol` on
/// every entry.
pub fn equal_up_to_global_phase(
    a: &Array2<Complex64>,
    b: &Array2<Complex64>,
    tol: f64,
) -> bool {
    if a.dim() != b.dim() {
        return false;
    }
    // align on the largest entry of b
    let mut best = (0usize, 0usize);
    let mut best_mag = 0.0;
    for ((i, j), v) in b.indexed_iter() {
        if v.norm() > best_mag {
            best_mag = v.norm();
            best = (i, j);
        }
    }
    if best_mag == 0.0 {
        return a.iter().all(|z| z.norm() <= tol);
    }
    let phase = a[[best.0, best.1]] / b[[best.0, best.1]];
    if (phase.norm() - 1.0).abs() > tol {
        return false;
    }
    a.indexed_iter()
        .all(|((i, j), v)| (*v - phase * b[[i, j]]).norm() <= tol)
}
