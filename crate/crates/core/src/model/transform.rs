//! Bosonic normal-mode transform diagonalizing the cavity-fiber coupling.
//!
//! The raw modes (a1, a2, b) mix into normal modes (c0, c1, c2):
//! a1 = (c1 + c2 + sqrt(2) c0) / 2, a2 = e^{i phi} (c1 + c2 - sqrt(2) c0) / 2,
//! b = (c1 - c2) / sqrt(2). In the new frame the coupling is
//! sqrt(2) nu (c1^dag c1 - c2^dag c2) and c0 is decoupled.

use ndarray::Array2;
use num_complex::Complex64;

use crate::linalg::adjoint;

use super::params::PhysicalParams;

/// The 3x3 unitary T with rows (a1, a2, b) and columns (c0, c1, c2):
/// raw-mode operators are `a_row = sum_col T[row, col] c_col`.
pub fn normal_mode_transform(p: &PhysicalParams) -> Array2<Complex64> {
    let half = Complex64::new(0.5, 0.0);
    let r2_half = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0); // 1/sqrt(2)
    let eip = Complex64::from_polar(1.0, p.phi);
    let mut t = Array2::zeros((3, 3));
    // a1 row
    t[[0, 0]] = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    t[[0, 1]] = half;
    t[[0, 2]] = half;
    // a2 row
    t[[1, 0]] = -eip * r2_half;
    t[[1, 1]] = eip * half;
    t[[1, 2]] = eip * half;
    // b row
    t[[2, 0]] = Complex64::new(0.0, 0.0);
    t[[2, 1]] = r2_half;
    t[[2, 2]] = -r2_half;
    t
}

/// Single-excitation matrix of the cavity-fiber coupling in the raw
/// (a1, a2, b) basis: `H = vec(a)^dag M vec(a)`.
pub fn fiber_coupling_matrix(p: &PhysicalParams) -> Array2<Complex64> {
    let nu = Complex64::new(p.nu, 0.0);
    let nu_phi = Complex64::from_polar(p.nu, p.phi);
    let mut m = Array2::zeros((3, 3));
    m[[0, 2]] = nu;
    m[[2, 0]] = nu.conj();
    m[[1, 2]] = nu_phi;
    m[[2, 1]] = nu_phi.conj();
    m
}

/// Conjugates the raw coupling matrix into the normal-mode frame:
/// `T^dag M T`, which is diagonal `(0, sqrt(2) nu, -sqrt(2) nu)`.
pub fn transformed_coupling_matrix(p: &PhysicalParams) -> Array2<Complex64> {
    let t = normal_mode_transform(p);
    adjoint(&t).dot(&fiber_coupling_matrix(p)).dot(&t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_eigen, unitarity_defect};

    #[test]
    fn transform_is_unitary() {
        for phi in [0.0, 0.7, -2.2, std::f64::consts::PI] {
            let mut p = PhysicalParams::reference();
            p.phi = phi;
            assert!(unitarity_defect(&normal_mode_transform(&p)) < 1.0e-14);
        }
    }

    #[test]
    fn conjugation_diagonalizes_coupling() {
        for phi in [0.0, 1.3, -0.4] {
            let mut p = PhysicalParams::reference();
            p.phi = phi;
            let d = transformed_coupling_matrix(&p);
            let r2nu = p.root2_nu();
            let want = [0.0, r2nu, -r2nu];
            for i in 0..3 {
                for j in 0..3 {
                    let expect = if i == j { want[i] } else { 0.0 };
                    assert!(
                        (d[[i, j]] - Complex64::new(expect, 0.0)).norm() < 1.0e-12,
                        "entry ({i},{j}) = {:?}",
                        d[[i, j]]
                    );
                }
            }
        }
    }

    #[test]
    fn single_excitation_eigenvalues() {
        let p = PhysicalParams::reference(); // nu = 0.0145
        let (vals, _) = hermitian_eigen(&fiber_coupling_matrix(&p)).unwrap();
        let r2nu = p.root2_nu();
        assert!((r2nu - 0.020506).abs() < 1.0e-6);
        let want = [-r2nu, 0.0, r2nu];
        for (v, w) in vals.iter().zip(want) {
            assert!((v - w).abs() < 1.0e-12);
        }
    }

    #[test]
    fn phi_only_phases_the_a2_row() {
        let p0 = {
            let mut p = PhysicalParams::reference();
            p.phi = 0.0;
            p
        };
        let p1 = {
            let mut p = PhysicalParams::reference();
            p.phi = 0.93;
            p
        };
        let t0 = normal_mode_transform(&p0);
        let t1 = normal_mode_transform(&p1);
        let eip = Complex64::from_polar(1.0, 0.93);
        for col in 0..3 {
            assert_eq!(t0[[0, col]], t1[[0, col]]);
            assert_eq!(t0[[2, col]], t1[[2, col]]);
            assert!((t1[[1, col]] - eip * t0[[1, col]]).norm() < 1.0e-15);
        }
    }
}
