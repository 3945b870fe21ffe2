//! Adaptive time-dependent Schrödinger propagation.
//!
//! Uses the Dormand–Prince 5(4) embedded pair with proportional step
//! control. The local error of each step is held below `tol * h / (t_end -
//! t_start)`, so `tol` bounds the accumulated error over the whole interval.
//! Accepted steps are projected back onto the unit sphere; the exact flow is
//! unitary, so the projection removes only integration round-off in the norm
//! direction.

use ndarray::Array1;
use num_complex::Complex64;

use crate::constants::HBAR_MEV_PS;
use crate::error::{Error, Result};
use crate::modulated::ModulatedHamiltonian;
use crate::state::StateVector;

#[derive(Debug, Clone)]
pub struct PropagationOptions {
    /// Target accumulated amplitude error over the full interval.
    pub tol: f64,
    /// Renormalize after each accepted step.
    pub renormalize: bool,
    /// Hard cap on accepted + rejected steps.
    pub max_steps: usize,
    /// Collect `(t, state)` samples roughly every this many ps.
    pub sample_every: Option<f64>,
}

impl Default for PropagationOptions {
    fn default() -> Self {
        PropagationOptions {
            tol: 1.0e-8,
            renormalize: true,
            max_steps: 50_000_000,
            sample_every: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PropagationResult {
    pub state: StateVector,
    pub accepted_steps: usize,
    pub rejected_steps: usize,
    pub samples: Vec<(f64, StateVector)>,
}

// Dormand-Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// Propagates `psi0` from `t_start` to `t_end` under the modulated
/// Hamiltonian, calling `observer` after the initial state and after every
/// accepted step.
pub fn propagate_observed(
    h: &ModulatedHamiltonian,
    psi0: &StateVector,
    t_start: f64,
    t_end: f64,
    opts: &PropagationOptions,
    mut observer: impl FnMut(f64, &Array1<Complex64>),
) -> Result<PropagationResult> {
    if h.space() != psi0.space() {
        return Err(Error::SpaceMismatch);
    }
    if t_end < t_start {
        return Err(Error::InvalidInterval { t_start, t_end });
    }
    if opts.tol <= 0.0 {
        return Err(Error::InvalidArgument("tol must be positive".into()));
    }
    let norm_defect = (psi0.norm_sq() - 1.0).abs();
    if norm_defect > 1.0e-9 {
        return Err(Error::NotNormalized(norm_defect));
    }

    let n = h.space().total_dim();
    let span = t_end - t_start;
    let mut samples = Vec::new();
    let record =
        |t: f64, y: &Array1<Complex64>, samples: &mut Vec<(f64, StateVector)>| {
            if let Some(_every) = opts.sample_every {
                samples.push((
                    t,
                    StateVector::new(h.space().clone(), y.clone()).expect("finite amplitudes"),
                ));
            }
        };

    let mut y = psi0.amplitudes().clone();
    observer(t_start, &y);
    record(t_start, &y, &mut samples);
    if span == 0.0 {
        return Ok(PropagationResult {
            state: psi0.clone(),
            accepted_steps: 0,
            rejected_steps: 0,
            samples,
        });
    }

    // rhs(t, y) = -(i/hbar) H(t) y
    let minus_i_over_hbar = Complex64::new(0.0, -1.0 / HBAR_MEV_PS);
    let mut scratch = Array1::<Complex64>::zeros(n);
    let rhs = |t: f64, y: &Array1<Complex64>, out: &mut Array1<Complex64>,
                   scratch: &mut Array1<Complex64>| {
        scratch.fill(Complex64::new(0.0, 0.0));
        h.apply_into(t, y, scratch);
        for (o, s) in out.iter_mut().zip(scratch.iter()) {
            *o = minus_i_over_hbar * s;
        }
    };

    // initial step from the fastest energy scale
    let e_max = h.max_energy_scale().max(1.0e-12);
    let h_init = (2.0 * std::f64::consts::PI * HBAR_MEV_PS / (50.0 * e_max)).min(span);
    let mut dt = h_init;
    let mut t = t_start;
    let mut k: Vec<Array1<Complex64>> = (0..7).map(|_| Array1::zeros(n)).collect();
    let mut accepted = 0usize;
    let mut rejected = 0usize;
    let mut last_sample = t_start;
    let h_floor = span * 1.0e-14;

    // FSAL: k[0] at the current point
    {
        let (k0, rest) = k.split_first_mut().unwrap();
        let _ = rest;
        rhs(t, &y, k0, &mut scratch);
    }

    let mut y_stage = Array1::<Complex64>::zeros(n);
    let mut y5 = Array1::<Complex64>::zeros(n);
    let mut err_vec = Array1::<Complex64>::zeros(n);

    while t < t_end {
        if accepted + rejected >= opts.max_steps {
            return Err(Error::MaxStepsExceeded(opts.max_steps));
        }
        if dt < h_floor {
            return Err(Error::StepUnderflow { t, h: dt });
        }
        let step = dt.min(t_end - t);

        for stage in 1..7 {
            y_stage.assign(&y);
            for (j, kj) in k.iter().enumerate().take(stage) {
                let a = A[stage][j];
                if a != 0.0 {
                    let w = Complex64::new(a * step, 0.0);
                    for (ys, kv) in y_stage.iter_mut().zip(kj.iter()) {
                        *ys += w * kv;
                    }
                }
            }
            let tt = t + C[stage] * step;
            let (before, rest) = k.split_at_mut(stage);
            let _ = before;
            rhs(tt, &y_stage, &mut rest[0], &mut scratch);
        }

        y5.assign(&y);
        err_vec.fill(Complex64::new(0.0, 0.0));
        for (j, kj) in k.iter().enumerate() {
            let b5 = B5[j];
            let db = B5[j] - B4[j];
            if b5 != 0.0 {
                let w = Complex64::new(b5 * step, 0.0);
                for (ys, kv) in y5.iter_mut().zip(kj.iter()) {
                    *ys += w * kv;
                }
            }
            if db != 0.0 {
                let w = Complex64::new(db * step, 0.0);
                for (ev, kv) in err_vec.iter_mut().zip(kj.iter()) {
                    *ev += w * kv;
                }
            }
        }
        let err: f64 = err_vec.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let tol_step = opts.tol * (step / span);

        if err <= tol_step || step <= h_floor * 2.0 {
            t += step;
            y.assign(&y5);
            if y.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::NonFinite("propagated state"));
            }
            if opts.renormalize {
                let norm = y.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if norm > 0.0 {
                    let inv = Complex64::new(1.0 / norm, 0.0);
                    y.mapv_inplace(|z| z * inv);
                }
            }
            accepted += 1;
            // FSAL: last stage value is the derivative at the new point
            let k6 = k[6].clone();
            k[0].assign(&k6);
            if opts.renormalize {
                // renormalization invalidates FSAL slightly; recompute
                let (k0, _) = k.split_first_mut().unwrap();
                rhs(t, &y, k0, &mut scratch);
            }
            observer(t, &y);
            if let Some(every) = opts.sample_every {
                if t - last_sample >= every || t >= t_end {
                    record(t, &y, &mut samples);
                    last_sample = t;
                }
            }
        } else {
            rejected += 1;
        }

        // proportional controller with safety factor
        let ratio = if err > 0.0 {
            0.9 * (tol_step / err).powf(0.2)
        } else {
            5.0
        };
        dt = step * ratio.clamp(0.2, 5.0);
    }

    let state = StateVector::new(h.space().clone(), y)?;
    let final_defect = (state.norm_sq() - 1.0).abs();
    if final_defect > 1.0e-9 {
        return Err(Error::NotNormalized(final_defect));
    }
    Ok(PropagationResult {
        state,
        accepted_steps: accepted,
        rejected_steps: rejected,
        samples,
    })
}

/// Propagates `psi0` from `t_start` to `t_end`; see [`propagate_observed`].
pub fn propagate(
    h: &ModulatedHamiltonian,
    psi0: &StateVector,
    t_start: f64,
    t_end: f64,
    opts: &PropagationOptions,
) -> Result<PropagationResult> {
    propagate_observed(h, psi0, t_start, t_end, opts, |_, _| {})
}
