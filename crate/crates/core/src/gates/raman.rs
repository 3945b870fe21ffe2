//! Cavity-assisted Raman gate on the NV center.
//!
//! A sigma+ classical pulse and the detuned interface-cavity mode form a
//! Lambda configuration through the upper level. Eliminating that level
//! leaves a two-photon coupling g' = g2 omega_plus / delta2 between |f, 0>
//! and |g, 1>, plus light shifts on |f> and on |g> proportional to the
//! photon number. The shifts detune the flop unless they are canceled by
//! additional pulses; the simulation models that cancellation as explicit
//! counter-terms.

use ndarray::Array2;
use num_complex::Complex64;

use crate::constants::HBAR_MEV_PS;
use crate::error::{Error, Result};
use crate::model::scheme::{NV_DIM, NV_E, NV_F, NV_G};
use crate::model::PhysicalParams;
use crate::modulated::{Envelope, ModTerm, ModulatedHamiltonian};
use crate::operator::{annihilation, embed_many, number_op, projector, transition, Operator};
use crate::propagate::{propagate_observed, PropagationOptions};
use crate::space::{compose_space, HilbertSpace};
use crate::state::StateVector;

/// Two-photon coupling g' = g2 omega_plus / delta2 (meV).
pub fn nv_raman_effective_coupling(p: &PhysicalParams) -> Result<f64> {
    if p.delta2 == 0.0 {
        return Err(Error::DegenerateParameters {
            denominator: "delta2".into(),
            value: 0.0,
        });
    }
    Ok(p.g2 * p.omega_plus / p.delta2)
}

/// Evolution of the flop restricted to {|f, 0>, |g, 1>}, in basis (f, g):
/// exp(+i theta sigma_x) with theta = g' t / ħ.
pub fn nv_raman_unitary(g_prime: f64, t_ps: f64) -> Array2<Complex64> {
    let theta = g_prime * t_ps / HBAR_MEV_PS;
    let c = Complex64::new(theta.cos(), 0.0);
    let is = Complex64::new(0.0, theta.sin());
    let mut m = Array2::zeros((2, 2));
    m[[0, 0]] = c;
    m[[1, 1]] = c;
    m[[0, 1]] = is;
    m[[1, 0]] = is;
    m
}

/// NV ⊗ cavity space used by the Raman simulations.
pub fn raman_space(p: &PhysicalParams) -> Result<HilbertSpace> {
    compose_space(vec![("NV", NV_DIM), ("cav", p.mode_levels())])
}

/// Full Lambda-system Hamiltonian. With `compensate_stark` the two
/// counter-terms canceling the light shifts are included.
pub fn raman_full_hamiltonian(
    p: &PhysicalParams,
    compensate_stark: bool,
) -> Result<ModulatedHamiltonian> {
    p.validate()?;
    let space = raman_space(p)?;
    let levels = p.mode_levels();
    let a = annihilation(levels);
    let adag = crate::linalg::adjoint(&a);
    let re = |x: f64| Complex64::new(x, 0.0);

    let mut diag = Operator::zeros(space.clone());
    diag.add_assign(&embed_many(&space, &[("NV", &projector(NV_DIM, NV_E))])?.scale(re(p.delta2)))?;
    if compensate_stark {
        let s_f = p.omega_plus * p.omega_plus / p.delta2;
        let s_g = p.g2 * p.g2 / p.delta2;
        diag.add_assign(
            &embed_many(&space, &[("NV", &projector(NV_DIM, NV_F))])?.scale(re(s_f)),
        )?;
        diag.add_assign(
            &embed_many(
                &space,
                &[("NV", &projector(NV_DIM, NV_G)), ("cav", &number_op(levels))],
            )?
            .scale(re(s_g)),
        )?;
    }

    let terms = vec![
        ModTerm {
            op: diag,
            amplitude: re(1.0),
            frequency: 0.0,
            include_hc: false,
            envelope: Envelope::Constant,
        },
        ModTerm {
            op: embed_many(&space, &[("NV", &transition(NV_DIM, NV_G, NV_E)), ("cav", &adag)])?,
            amplitude: re(p.g2),
            frequency: 0.0,
            include_hc: true,
            envelope: Envelope::Constant,
        },
        ModTerm {
            op: embed_many(&space, &[("NV", &transition(NV_DIM, NV_F, NV_E))])?,
            amplitude: re(p.omega_plus),
            frequency: 0.0,
            include_hc: true,
            envelope: Envelope::Constant,
        },
    ];
    ModulatedHamiltonian::new(space, terms)
}

/// Reduced model after eliminating the upper level: the two-photon flop,
/// optionally with the light shifts kept explicit.
pub fn raman_reduced_hamiltonian(
    p: &PhysicalParams,
    with_stark: bool,
) -> Result<ModulatedHamiltonian> {
    let space = raman_space(p)?;
    let levels = p.mode_levels();
    let a = annihilation(levels);
    let g_prime = nv_raman_effective_coupling(p)?;
    let re = |x: f64| Complex64::new(x, 0.0);

    let mut terms = vec![ModTerm {
        // elimination of an upper level pushes both branches down
        op: embed_many(&space, &[("NV", &transition(NV_DIM, NV_F, NV_G)), ("cav", &a)])?,
        amplitude: re(-g_prime),
        frequency: 0.0,
        include_hc: true,
        envelope: Envelope::Constant,
    }];
    if with_stark {
        let s_f = p.omega_plus * p.omega_plus / p.delta2;
        let s_g = p.g2 * p.g2 / p.delta2;
        let mut diag = Operator::zeros(space.clone());
        diag.add_assign(
            &embed_many(&space, &[("NV", &projector(NV_DIM, NV_F))])?.scale(re(-s_f)),
        )?;
        diag.add_assign(
            &embed_many(
                &space,
                &[("NV", &projector(NV_DIM, NV_G)), ("cav", &number_op(levels))],
            )?
            .scale(re(-s_g)),
        )?;
        terms.push(ModTerm {
            op: diag,
            amplitude: re(1.0),
            frequency: 0.0,
            include_hc: false,
            envelope: Envelope::Constant,
        });
    }
    ModulatedHamiltonian::new(space, terms)
}

#[derive(Debug, Clone)]
pub struct RamanRun {
    /// Final state under the full Lambda dynamics.
    pub full: StateVector,
    /// Final state under the reduced model.
    pub reduced: StateVector,
    /// |<full | reduced>|^2.
    pub fidelity: f64,
    /// Peak upper-level population during the full run.
    pub max_excited_population: f64,
}

/// Propagates |f, 0> for `t_ps` under the full Lambda Hamiltonian and the
/// reduced model.
///
/// With `include_stark` the reduced model keeps the light shifts and the
/// full model runs unmodified; without it the full model includes the
/// compensation counter-terms and the reduced model is the bare flop, so
/// populations follow [`nv_raman_unitary`].
pub fn simulate_raman_full(
    p: &PhysicalParams,
    t_ps: f64,
    include_stark: bool,
) -> Result<RamanRun> {
    let full_h = raman_full_hamiltonian(p, !include_stark)?;
    let reduced_h = raman_reduced_hamiltonian(p, include_stark)?;
    let space = full_h.space().clone();
    let psi0 = StateVector::basis(&space, &[NV_F, 0])?;

    let opts = PropagationOptions {
        tol: 1.0e-9,
        ..Default::default()
    };
    let mut max_excited = 0.0f64;
    let full = propagate_observed(&full_h, &psi0, 0.0, t_ps, &opts, |_t, amps| {
        let mut pe = 0.0;
        for (i, z) in amps.iter().enumerate() {
            if space.unravel(i)[0] == NV_E {
                pe += z.norm_sqr();
            }
        }
        max_excited = max_excited.max(pe);
    })?;
    let reduced = crate::propagate::propagate(&reduced_h, &psi0, 0.0, t_ps, &opts)?;
    let fidelity = crate::metrics::fidelity(&full.state, &reduced.state)?;
    Ok(RamanRun {
        full: full.state,
        reduced: reduced.state,
        fidelity,
        max_excited_population: max_excited,
    })
}
