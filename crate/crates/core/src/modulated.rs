//! Harmonically modulated Hamiltonians.
//!
//! Every interaction-picture Hamiltonian in this crate is a sum of constant
//! operators, each multiplied by a complex amplitude (meV), an optional real
//! pulse envelope, and a harmonic factor `exp(i (freq / ħ) t)` with `freq`
//! in meV. Terms flagged with `include_hc` contribute their Hermitian
//! conjugate as well.

use ndarray::Array1;
use num_complex::Complex64;

use crate::constants::HBAR_MEV_PS;
use crate::error::{Error, Result};
use crate::operator::Operator;
use crate::space::HilbertSpace;

/// Real pulse envelope multiplying a term's amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Envelope {
    /// Always-on drive.
    Constant,
    /// Unit amplitude on `[t_on, t_off)`, zero outside.
    Rectangular { t_on: f64, t_off: f64 },
    /// Gaussian centered at `t0` with the given FWHM (ps).
    Gaussian { t0: f64, fwhm: f64 },
}

impl Envelope {
    pub fn eval(&self, t: f64) -> f64 {
        match *self {
            Envelope::Constant => 1.0,
            Envelope::Rectangular { t_on, t_off } => {
                if t >= t_on && t < t_off {
                    1.0
                } else {
                    0.0
                }
            }
            Envelope::Gaussian { t0, fwhm } => {
                let sigma = fwhm / (8.0 * std::f64::consts::LN_2).sqrt();
                (-(t - t0) * (t - t0) / (2.0 * sigma * sigma)).exp()
            }
        }
    }
}

/// One modulated term: `amplitude * envelope(t) * exp(i (frequency/ħ) t) * op`.
#[derive(Debug, Clone)]
pub struct ModTerm {
    pub op: Operator,
    /// Complex amplitude in meV.
    pub amplitude: Complex64,
    /// Modulation energy in meV; the term oscillates at `frequency / ħ` rad/ps.
    pub frequency: f64,
    /// Whether the Hermitian conjugate is implicitly added.
    pub include_hc: bool,
    pub envelope: Envelope,
}

/// Sparse triplets of one term's operator, precomputed for the propagation
/// hot path.
#[derive(Debug, Clone)]
struct SparseTerm {
    entries: Vec<(u32, u32, Complex64)>,
    amplitude: Complex64,
    frequency: f64,
    include_hc: bool,
    envelope: Envelope,
}

#[derive(Debug, Clone)]
pub struct ModulatedHamiltonian {
    space: HilbertSpace,
    terms: Vec<ModTerm>,
    sparse: Vec<SparseTerm>,
}

impl ModulatedHamiltonian {
    pub fn new(space: HilbertSpace, terms: Vec<ModTerm>) -> Result<Self> {
        for term in &terms {
            if term.op.space() != &space {
                return Err(Error::SpaceMismatch);
            }
            if !term.amplitude.is_finite() || !term.frequency.is_finite() {
                return Err(Error::NonFinite("modulated term"));
            }
        }
        let sparse = terms
            .iter()
            .map(|term| {
                let mut entries = Vec::new();
                for ((i, j), v) in term.op.matrix().indexed_iter() {
                    if v.norm_sqr() > 0.0 {
                        entries.push((i as u32, j as u32, *v));
                    }
                }
                SparseTerm {
                    entries,
                    amplitude: term.amplitude,
                    frequency: term.frequency,
                    include_hc: term.include_hc,
                    envelope: term.envelope,
                }
            })
            .collect();
        Ok(ModulatedHamiltonian {
            space,
            terms,
            sparse,
        })
    }

    pub fn space(&self) -> &HilbertSpace {
        &self.space
    }

    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
    }

    /// Number of modulated terms counting implicit Hermitian conjugates.
    pub fn term_count_expanded(&self) -> usize {
        self.terms
            .iter()
            .map(|t| if t.include_hc { 2 } else { 1 })
            .sum()
    }

    /// Dense H(t).
    pub fn evaluate(&self, t: f64) -> Operator {
        let n = self.space.total_dim();
        let mut m = ndarray::Array2::<Complex64>::zeros((n, n));
        for term in &self.terms {
            let phase = Complex64::from_polar(1.0, term.frequency * t / HBAR_MEV_PS);
            let factor = term.amplitude * term.envelope.eval(t) * phase;
            m.zip_mut_with(term.op.matrix(), |acc, v| *acc += factor * v);
            if term.include_hc {
                let fc = factor.conj();
                for ((i, j), v) in term.op.matrix().indexed_iter() {
                    m[[j, i]] += fc * v.conj();
                }
            }
        }
        Operator::new(self.space.clone(), m).expect("dimensions fixed by construction")
    }

    /// `out += H(t) psi` using the precomputed sparse terms.
    pub fn apply_into(&self, t: f64, psi: &Array1<Complex64>, out: &mut Array1<Complex64>) {
        let psi = psi
            .as_slice()
            .expect("state amplitudes are contiguous");
        let out = out
            .as_slice_mut()
            .expect("output amplitudes are contiguous");
        for term in &self.sparse {
            let env = term.envelope.eval(t);
            if env == 0.0 {
                continue;
            }
            let phase = Complex64::from_polar(1.0, term.frequency * t / HBAR_MEV_PS);
            let factor = term.amplitude * env * phase;
            if factor.norm_sqr() == 0.0 {
                continue;
            }
            for &(i, j, v) in &term.entries {
                out[i as usize] += factor * v * psi[j as usize];
            }
            if term.include_hc {
                let fc = factor.conj();
                for &(i, j, v) in &term.entries {
                    out[j as usize] += fc * v.conj() * psi[i as usize];
                }
            }
        }
    }

    /// Largest Hermiticity defect of H(t) over the given sample times.
    pub fn hermiticity_defect_at(&self, times: &[f64]) -> f64 {
        times
            .iter()
            .map(|&t| self.evaluate(t).hermiticity_defect())
            .fold(0.0, f64::max)
    }

    /// Conservative scale (meV) of the fastest dynamics: the largest
    /// modulation energy or amplitude-weighted operator row sum. Used to
    /// seed the integrator step size.
    pub fn max_energy_scale(&self) -> f64 {
        let mut emax: f64 = 0.0;
        for term in &self.terms {
            let mut row_sum_max: f64 = 0.0;
            for row in term.op.matrix().rows() {
                let s: f64 = row.iter().map(|z| z.norm()).sum();
                row_sum_max = row_sum_max.max(s);
            }
            let amp_scale = term.amplitude.norm() * row_sum_max;
            let scale = term.frequency.abs() + if term.include_hc { 2.0 } else { 1.0 } * amp_scale;
            emax = emax.max(scale);
        }
        emax
    }
}
