//! Dense complex linear algebra: Hermitian eigendecomposition (cyclic Jacobi)
//! and the exact unitary propagator for time-independent Hamiltonians.
//!
//! Matrices here stay small (total dimensions up to ~1000), so a dependable
//! O(n^3) Jacobi sweep beats pulling in a LAPACK binding.

use ndarray::Array2;
use num_complex::Complex64;

use crate::constants::HBAR_MEV_PS;
use crate::error::{Error, Result};
use crate::operator::Operator;

/// Conjugate transpose.
pub fn adjoint(a: &Array2<Complex64>) -> Array2<Complex64> {
    let mut out = Array2::zeros((a.ncols(), a.nrows()));
    for ((i, j), v) in a.indexed_iter() {
        out[[j, i]] = v.conj();
    }
    out
}

/// Largest absolute entry.
pub fn max_abs(a: &Array2<Complex64>) -> f64 {
    a.iter().map(|v| v.norm()).fold(0.0, f64::max)
}

/// max |A - A^dag| / max |A|, or the absolute defect for a zero matrix.
pub fn hermiticity_defect(a: &Array2<Complex64>) -> f64 {
    let scale = max_abs(a).max(1.0e-300);
    let mut worst = 0.0f64;
    for i in 0..a.nrows() {
        for j in i..a.ncols() {
            let d = (a[[i, j]] - a[[j, i]].conj()).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    if max_abs(a) == 0.0 {
        0.0
    } else {
        worst / scale
    }
}

/// max |U^dag U - I|.
pub fn unitarity_defect(u: &Array2<Complex64>) -> f64 {
    let n = u.nrows();
    let prod = adjoint(u).dot(u);
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
            worst = worst.max((prod[[i, j]] - target).norm());
        }
    }
    worst
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns `(eigenvalues, eigenvectors)` with columns of the second matrix
/// holding the eigenvectors, sorted by ascending eigenvalue.
pub fn hermitian_eigen(a: &Array2<Complex64>) -> Result<(Vec<f64>, Array2<Complex64>)> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: a.ncols(),
        });
    }
    let defect = hermiticity_defect(a);
    if defect > 1.0e-10 {
        return Err(Error::NotHermitian {
            defect,
            tol: 1.0e-10,
        });
    }
    let mut m = a.clone();
    // symmetrize to kill rounding-level asymmetry
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (m[[i, j]] + m[[j, i]].conj());
            m[[i, j]] = avg;
            m[[j, i]] = avg.conj();
        }
        m[[i, i]] = Complex64::new(m[[i, i]].re, 0.0);
    }
    let mut v: Array2<Complex64> = Array2::eye(n);
    let scale = max_abs(&m).max(1.0e-300);
    let tol = 1.0e-15 * scale;

    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(m[[p, q]].norm());
            }
        }
        if off <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[[p, q]];
                let mag = apq.norm();
                if mag <= tol * 1.0e-2 {
                    continue;
                }
                let u = apq / mag;
                let theta = (m[[q, q]].re - m[[p, p]].re) / (2.0 * mag);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let su = s * u;
                let su_conj = s * u.conj();

                // column transform: M <- M J, with J[p,p]=J[q,q]=c,
                // J[p,q]=s*u, J[q,p]=-s*conj(u)
                for k in 0..n {
                    let mkp = m[[k, p]];
                    let mkq = m[[k, q]];
                    m[[k, p]] = c * mkp - su_conj * mkq;
                    m[[k, q]] = su * mkp + c * mkq;
                }
                // row transform: M <- J^dag M
                for k in 0..n {
                    let mpk = m[[p, k]];
                    let mqk = m[[q, k]];
                    m[[p, k]] = c * mpk - su * mqk;
                    m[[q, k]] = su_conj * mpk + c * mqk;
                }
                // keep the block exactly Hermitian against rounding drift
                m[[p, q]] = Complex64::new(0.0, 0.0);
                m[[q, p]] = Complex64::new(0.0, 0.0);
                m[[p, p]] = Complex64::new(m[[p, p]].re, 0.0);
                m[[q, q]] = Complex64::new(m[[q, q]].re, 0.0);

                for k in 0..n {
                    let vkp = v[[k, p]];
                    let vkq = v[[k, q]];
                    v[[k, p]] = c * vkp - su_conj * vkq;
                    v[[k, q]] = su * vkp + c * vkq;
                }
            }
        }
    }

    let mut evals: Vec<f64> = (0..n).map(|i| m[[i, i]].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| evals[i].partial_cmp(&evals[j]).unwrap());
    let sorted_vals: Vec<f64> = order.iter().map(|&i| evals[i]).collect();
    let mut sorted_vecs = Array2::zeros((n, n));
    for (new_col, &old_col) in order.iter().enumerate() {
        for k in 0..n {
            sorted_vecs[[k, new_col]] = v[[k, old_col]];
        }
    }
    evals = sorted_vals;
    Ok((evals, sorted_vecs))
}

/// Exact propagator `exp(-i H t / ħ)` for a time-independent Hermitian
/// Hamiltonian (energies in meV, `t` in ps).
pub fn matrix_propagator(h_const: &Operator, t: f64) -> Result<Operator> {
    let (evals, vecs) = hermitian_eigen(h_const.matrix())?;
    let n = evals.len();
    let mut phased = vecs.clone();
    for (j, &e) in evals.iter().enumerate() {
        let phase = Complex64::from_polar(1.0, -e * t / HBAR_MEV_PS);
        for i in 0..n {
            phased[[i, j]] *= phase;
        }
    }
    let u = phased.dot(&adjoint(&vecs));
    Operator::new(h_const.space().clone(), u)
}
