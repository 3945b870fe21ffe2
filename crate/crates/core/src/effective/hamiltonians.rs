//! Staged effective Hamiltonians on the ground manifold.
//!
//! After the excited levels are eliminated, the dynamics lives on
//! QD ground (x+, x-) ⊗ NV ground (g, f) ⊗ three bosonic modes. The first
//! stage keeps mode drives, mode hopping and Stark shifts; the second stage
//! freezes the modes; restricted to the vacuum it reduces to a diagonal
//! 4x4 on the logical basis.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::adjoint;
use crate::logical;
use crate::model::PhysicalParams;
use crate::modulated::{Envelope, ModTerm, ModulatedHamiltonian};
use crate::operator::{annihilation, embed_many, number_op, projector, Operator};
use crate::space::{compose_space, HilbertSpace};

use super::params::EffectiveParams;
use super::phases::compute_phases;

pub const QD_GROUND_LABEL: &str = "QDg";
pub const NV_GROUND_LABEL: &str = "NVg";

/// QD ground ⊗ NV ground ⊗ (c0, c1, c2) with `levels` Fock states per mode.
pub fn ground_space(levels: usize) -> Result<HilbertSpace> {
    compose_space(vec![
        (QD_GROUND_LABEL.to_string(), 2),
        (NV_GROUND_LABEL.to_string(), 2),
        ("c0".to_string(), levels),
        ("c1".to_string(), levels),
        ("c2".to_string(), levels),
    ])
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Per-mode (amplitude on x+, on x-, on g) with the sign conventions of the
/// mode-drive operators: the g component carries e^{-i phi}, and the c0
/// g-component enters negated.
fn lambda_amplitudes(e: &EffectiveParams, p: &PhysicalParams, mode: usize) -> [Complex64; 3] {
    let g_phase = Complex64::from_polar(1.0, -p.phi);
    let g_sign = if mode == 0 { -1.0 } else { 1.0 };
    [
        re(e.lambda_plus[mode]),
        re(e.lambda_minus[mode]),
        g_phase * re(g_sign * e.lambda_g[mode]),
    ]
}

/// First-stage effective Hamiltonian: mode drives at the slow detunings,
/// kappa mode hopping, and the epsilon Stark block.
pub fn build_heff1(
    e: &EffectiveParams,
    p: &PhysicalParams,
    space: &HilbertSpace,
) -> Result<ModulatedHamiltonian> {
    let levels = space.dim_of("c0")?;
    let a = annihilation(levels);
    let adag = adjoint(&a);
    let nop = number_op(levels);
    let r2nu = p.root2_nu();
    let dl = p.delta_small;

    let pq = [projector(2, 0), projector(2, 1)]; // x+, x-
    let pg = projector(2, 0); // g

    let mut terms = Vec::new();

    // mode drives: -Lambda_i c_i at (delta, delta -+ sqrt2 nu)
    let mode_freq = [dl, dl - r2nu, dl + r2nu];
    for mode in 0..3usize {
        let amps = lambda_amplitudes(e, p, mode);
        let mode_label = ["c0", "c1", "c2"][mode];
        for (k, amp) in amps.into_iter().enumerate() {
            let op = if k < 2 {
                embed_many(space, &[(QD_GROUND_LABEL, &pq[k]), (mode_label, &a)])?
            } else {
                embed_many(space, &[(NV_GROUND_LABEL, &pg), (mode_label, &a)])?
            };
            terms.push(ModTerm {
                op,
                amplitude: -amp,
                frequency: mode_freq[mode],
                include_hc: true,
                envelope: Envelope::Constant,
            });
        }
    }

    // kappa mode hopping: c2^dag c1 at -2 sqrt2 nu, c0^dag c2 and c1^dag c0
    // at +sqrt2 nu; the g projector enters with opposite sign.
    let hops: [(&str, &str, f64, [f64; 3]); 3] = [
        ("c2", "c1", -2.0 * r2nu, [e.kappa_plus[1], e.kappa_minus[1], e.kappa_g[1]]),
        ("c0", "c2", r2nu, [e.kappa_plus[2], e.kappa_minus[2], e.kappa_g[2]]),
        ("c1", "c0", r2nu, [e.kappa_plus[0], e.kappa_minus[0], e.kappa_g[0]]),
    ];
    for (up, down, freq, kappas) in hops {
        for (k, kap) in kappas.into_iter().enumerate() {
            let sign = if k == 2 { 1.0 } else { -1.0 };
            let op = if k < 2 {
                embed_many(
                    space,
                    &[(QD_GROUND_LABEL, &pq[k]), (up, &adag), (down, &a)],
                )?
            } else {
                embed_many(space, &[(NV_GROUND_LABEL, &pg), (up, &adag), (down, &a)])?
            };
            terms.push(ModTerm {
                op,
                amplitude: re(sign * kap),
                frequency: freq,
                include_hc: true,
                envelope: Envelope::Constant,
            });
        }
    }

    // static Stark block
    for (k, (eps, eps0)) in [
        (&e.eps_plus, e.eps0_plus),
        (&e.eps_minus, e.eps0_minus),
        (&e.eps_g, e.eps0_g),
    ]
    .into_iter()
    .enumerate()
    {
        let proj: Vec<(&str, &Array2<Complex64>)> = if k < 2 {
            vec![(QD_GROUND_LABEL, &pq[k])]
        } else {
            vec![(NV_GROUND_LABEL, &pg)]
        };
        for (mode, label) in ["c0", "c1", "c2"].into_iter().enumerate() {
            let mut locals = proj.clone();
            locals.push((label, &nop));
            terms.push(ModTerm {
                op: embed_many(space, &locals)?,
                amplitude: re(-eps[mode]),
                frequency: 0.0,
                include_hc: false,
                envelope: Envelope::Constant,
            });
        }
        terms.push(ModTerm {
            op: embed_many(space, &proj)?,
            amplitude: re(-eps0),
            frequency: 0.0,
            include_hc: false,
            envelope: Envelope::Constant,
        });
    }

    ModulatedHamiltonian::new(space.clone(), terms)
}

/// Second-stage (time-independent) effective Hamiltonian with the modes
/// still present: Lambda products, squared-kappa photon-number differences
/// and the Stark block.
pub fn build_heff2(
    e: &EffectiveParams,
    p: &PhysicalParams,
    space: &HilbertSpace,
) -> Result<Operator> {
    let levels = space.dim_of("c0")?;
    let nop = number_op(levels);
    let r2nu = p.root2_nu();
    let dl = p.delta_small;
    let w = [1.0 / dl, 1.0 / (dl - r2nu), 1.0 / (dl + r2nu)];

    let pq = [projector(2, 0), projector(2, 1)];
    let pg = projector(2, 0);

    let mut h = Operator::zeros(space.clone());

    // Lambda_i Lambda_i^* / w_i acts on the qubits only
    for mode in 0..3usize {
        let amps = lambda_amplitudes(e, p, mode);
        // 4x4 diagonal on QDg x NVg in Kronecker order
        let mut q = Array2::<Complex64>::zeros((4, 4));
        for qd in 0..2 {
            for nv in 0..2 {
                let lam = amps[qd] + if nv == 0 { amps[2] } else { re(0.0) };
                let idx = qd * 2 + nv;
                q[[idx, idx]] = re(lam.norm_sqr());
            }
        }
        // embed the 4x4 via per-qubit projectors
        for qd in 0..2 {
            for nv in 0..2 {
                let idx = qd * 2 + nv;
                let pn = projector(2, nv);
                let op = embed_many(
                    space,
                    &[(QD_GROUND_LABEL, &pq[qd]), (NV_GROUND_LABEL, &pn)],
                )?;
                h.add_assign(&op.scale(q[[idx, idx]] * re(w[mode])))?;
            }
        }
    }

    // squared-kappa photon-number differences
    let number_pairs: [(usize, &str, &str, f64, [f64; 3]); 3] = [
        (1, "c2", "c1", 1.0 / (2.0 * r2nu), [e.kappa_plus[1], e.kappa_minus[1], e.kappa_g[1]]),
        (2, "c1", "c0", 1.0 / r2nu, [e.kappa_plus[2], e.kappa_minus[2], e.kappa_g[2]]),
        (0, "c0", "c2", 1.0 / r2nu, [e.kappa_plus[0], e.kappa_minus[0], e.kappa_g[0]]),
    ];
    for (_set, plus_mode, minus_mode, weight, kappas) in number_pairs {
        // (kappa_+ P+ + kappa_- P- - kappa_g Pg)^2, diagonal per (qd, nv)
        for qd in 0..2 {
            for nv in 0..2 {
                let val = kappas[qd] + if nv == 0 { -kappas[2] } else { 0.0 };
                let coeff = re(val * val * weight);
                let pn = projector(2, nv);
                let plus = embed_many(
                    space,
                    &[
                        (QD_GROUND_LABEL, &pq[qd]),
                        (NV_GROUND_LABEL, &pn),
                        (plus_mode, &nop),
                    ],
                )?;
                let minus = embed_many(
                    space,
                    &[
                        (QD_GROUND_LABEL, &pq[qd]),
                        (NV_GROUND_LABEL, &pn),
                        (minus_mode, &nop),
                    ],
                )?;
                h.add_assign(&plus.scale(coeff))?;
                h.add_assign(&minus.scale(-coeff))?;
            }
        }
    }

    // Stark block (same as the first stage)
    for (k, (eps, eps0)) in [
        (&e.eps_plus, e.eps0_plus),
        (&e.eps_minus, e.eps0_minus),
        (&e.eps_g, e.eps0_g),
    ]
    .into_iter()
    .enumerate()
    {
        let proj: Vec<(&str, &Array2<Complex64>)> = if k < 2 {
            vec![(QD_GROUND_LABEL, &pq[k])]
        } else {
            vec![(NV_GROUND_LABEL, &pg)]
        };
        for (mode, label) in ["c0", "c1", "c2"].into_iter().enumerate() {
            let mut locals = proj.clone();
            locals.push((label, &nop));
            h.add_assign(&embed_many(space, &locals)?.scale(re(-eps[mode])))?;
        }
        h.add_assign(&embed_many(space, &proj)?.scale(re(-eps0)))?;
    }

    Ok(h)
}

/// Final effective Hamiltonian restricted to the logical basis: a diagonal
/// 4x4 whose entries are the basis-state energies.
pub fn build_heff_final(e: &EffectiveParams, p: &PhysicalParams) -> Result<Operator> {
    let phases = compute_phases(e, p)?;
    let energies = phases.basis_energies();
    logical::diagonal_logical([
        re(energies[0]),
        re(energies[1]),
        re(energies[2]),
        re(energies[3]),
    ])
}
