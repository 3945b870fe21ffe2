//! Cross-checks between the adaptive integrator and the exact propagator,
//! plus the convergence and norm-preservation contracts.

use ndarray::Array2;
use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha12Rng;

use hqpu_core::linalg::matrix_propagator;
use hqpu_core::modulated::{Envelope, ModTerm, ModulatedHamiltonian};
use hqpu_core::operator::Operator;
use hqpu_core::propagate::{propagate, PropagationOptions};
use hqpu_core::space::compose_space;
use hqpu_core::state::StateVector;

fn random_hermitian(n: usize, scale: f64, seed: u64) -> Array2<Complex64> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut a = Array2::zeros((n, n));
    for i in 0..n {
        a[[i, i]] = Complex64::new(scale * (rng.random::<f64>() - 0.5), 0.0);
        for j in (i + 1)..n {
            let z = Complex64::new(
                scale * (rng.random::<f64>() - 0.5),
                scale * (rng.random::<f64>() - 0.5),
            );
            a[[i, j]] = z;
            a[[j, i]] = z.conj();
        }
    }
    a
}

fn constant_hamiltonian(m: Array2<Complex64>) -> ModulatedHamiltonian {
    let n = m.nrows();
    let space = compose_space(vec![("sys", n)]).unwrap();
    ModulatedHamiltonian::new(
        space.clone(),
        vec![ModTerm {
            op: Operator::new(space, m).unwrap(),
            amplitude: Complex64::new(1.0, 0.0),
            frequency: 0.0,
            include_hc: false,
            envelope: Envelope::Constant,
        }],
    )
    .unwrap()
}

fn random_state(n: usize, seed: u64) -> StateVector {
    let space = compose_space(vec![("sys", n)]).unwrap();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut amp = ndarray::Array1::<Complex64>::zeros(n);
    for z in amp.iter_mut() {
        *z = Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
    }
    let mut v = StateVector::new(space, amp).unwrap();
    v.normalize();
    v
}

#[test]
fn integrator_matches_exact_exponential_on_constant_h() {
    let n = 8;
    let m = random_hermitian(n, 0.4, 11);
    let h = constant_hamiltonian(m.clone());
    let op = Operator::new(compose_space(vec![("sys", n)]).unwrap(), m).unwrap();
    let t = 100.0;
    let u = matrix_propagator(&op, t).unwrap();
    let psi0 = random_state(n, 12);
    let want = u.matrix().dot(psi0.amplitudes());

    let opts = PropagationOptions {
        tol: 1.0e-10,
        ..Default::default()
    };
    let got = propagate(&h, &psi0, 0.0, t, &opts).unwrap();
    let diff: f64 = got
        .state
        .amplitudes()
        .iter()
        .zip(want.iter())
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    assert!(diff < 1.0e-8, "diff = {diff:?}");
}

#[test]
fn propagator_composition() {
    // stepping 0 -> t1 -> t2 equals 0 -> t2 for a modulated Hamiltonian
    let n = 6;
    let space = compose_space(vec![("sys", n)]).unwrap();
    let m0 = random_hermitian(n, 0.2, 21);
    let mut raise = Array2::<Complex64>::zeros((n, n));
    for k in 1..n {
        raise[[k, k - 1]] = Complex64::new(0.1, 0.05);
    }
    let h = ModulatedHamiltonian::new(
        space.clone(),
        vec![
            ModTerm {
                op: Operator::new(space.clone(), m0).unwrap(),
                amplitude: Complex64::new(1.0, 0.0),
                frequency: 0.0,
                include_hc: false,
                envelope: Envelope::Constant,
            },
            ModTerm {
                op: Operator::new(space.clone(), raise).unwrap(),
                amplitude: Complex64::new(1.0, 0.0),
                frequency: 1.3,
                include_hc: true,
                envelope: Envelope::Constant,
            },
        ],
    )
    .unwrap();

    let tol = 1.0e-9;
    let opts = PropagationOptions {
        tol,
        ..Default::default()
    };
    let psi0 = random_state(n, 22);
    let t1 = 37.7;
    let t2 = 81.1;
    let direct = propagate(&h, &psi0, 0.0, t2, &opts).unwrap();
    let mid = propagate(&h, &psi0, 0.0, t1, &opts).unwrap();
    let stepped = propagate(&h, &mid.state, t1, t2, &opts).unwrap();
    let diff: f64 = direct
        .state
        .amplitudes()
        .iter()
        .zip(stepped.state.amplitudes().iter())
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    assert!(diff < 10.0 * tol, "diff = {diff}");
}

#[test]
fn tightening_tol_converges_final_amplitudes() {
    let n = 6;
    let m = random_hermitian(n, 0.5, 31);
    let h = constant_hamiltonian(m);
    let psi0 = random_state(n, 32);
    let tol = 1.0e-8;
    let coarse = propagate(
        &h,
        &psi0,
        0.0,
        200.0,
        &PropagationOptions {
            tol,
            ..Default::default()
        },
    )
    .unwrap();
    let fine = propagate(
        &h,
        &psi0,
        0.0,
        200.0,
        &PropagationOptions {
            tol: tol / 2.0,
            ..Default::default()
        },
    )
    .unwrap();
    let diff: f64 = coarse
        .state
        .amplitudes()
        .iter()
        .zip(fine.state.amplitudes().iter())
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    assert!(diff < 10.0 * tol, "diff = {diff}");
}

#[test]
fn norm_preserved_without_projection() {
    // with renormalization disabled the raw integrator must still hold the
    // norm to 1e-8 over a long oscillatory run at tight tolerance
    let n = 4;
    let m = random_hermitian(n, 1.0, 41);
    let h = constant_hamiltonian(m);
    let psi0 = random_state(n, 42);
    let opts = PropagationOptions {
        tol: 1.0e-10,
        renormalize: false,
        ..Default::default()
    };
    let res = propagate(&h, &psi0, 0.0, 1200.0, &opts).unwrap();
    let drift = (res.state.norm_sq() - 1.0).abs();
    assert!(drift < 1.0e-8, "norm drift {drift} over {} steps", res.accepted_steps);
    assert!(res.accepted_steps < 1_000_000, "steps {}", res.accepted_steps);
}

#[test]
fn norm_exact_with_projection() {
    let n = 5;
    let m = random_hermitian(n, 0.8, 51);
    let h = constant_hamiltonian(m);
    let psi0 = random_state(n, 52);
    let res = propagate(&h, &psi0, 0.0, 500.0, &PropagationOptions::default()).unwrap();
    assert!((res.state.norm_sq() - 1.0).abs() < 1.0e-12);
}
