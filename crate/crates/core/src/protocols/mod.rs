//! QND measurement cycles and photonic state transfer.
//!
//! The measurement cycle excites each qubit conditionally and collects the
//! emitted photon through its auxiliary cavity; detecting the two flag
//! photons projects the register without destroying it. A subsequent
//! cooling cycle pumps all population to |x+>|g>, leaving the quantum
//! information on the photon flags.

pub mod qnd;
pub mod sampling;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Two-qubit state over the logical basis {|x+g>, |x+f>, |x-f>, |x-g>}.
#[derive(Debug, Clone, PartialEq)]
pub struct LogicalState {
    pub amplitudes: [Complex64; 4],
}

impl LogicalState {
    pub fn new(amplitudes: [Complex64; 4]) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > 1.0e-12 {
            return Err(Error::NotNormalized((norm_sq - 1.0).abs()));
        }
        Ok(LogicalState { amplitudes })
    }

    pub fn basis(slot: usize) -> Self {
        let mut amplitudes = [Complex64::new(0.0, 0.0); 4];
        amplitudes[slot] = Complex64::new(1.0, 0.0);
        LogicalState { amplitudes }
    }

    pub fn born_probabilities(&self) -> [f64; 4] {
        let mut p = [0.0; 4];
        for (k, z) in self.amplitudes.iter().enumerate() {
            p[k] = z.norm_sqr();
        }
        p
    }

    pub fn overlap(&self, other: &Self) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

/// Photon-flag occupation of the two auxiliary channels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FlagOutcome {
    pub n1: u8,
    pub n2: u8,
}

impl FlagOutcome {
    pub fn index(&self) -> usize {
        (self.n1 as usize) * 2 + self.n2 as usize
    }
}

/// Flag pattern emitted by each logical branch during the measurement
/// cycle, in slot order.
pub const BRANCH_FLAGS: [FlagOutcome; 4] = [
    FlagOutcome { n1: 1, n2: 1 }, // x+ g
    FlagOutcome { n1: 1, n2: 0 }, // x+ f
    FlagOutcome { n1: 0, n2: 0 }, // x- f
    FlagOutcome { n1: 0, n2: 1 }, // x- g
];

/// Joint state of the logical register and the two photon flags;
/// flat index = slot * 4 + (n1 * 2 + n2).
#[derive(Debug, Clone, PartialEq)]
pub struct JointState {
    pub amplitudes: [Complex64; 16],
}

impl JointState {
    pub fn amplitude(&self, slot: usize, flags: FlagOutcome) -> Complex64 {
        self.amplitudes[slot * 4 + flags.index()]
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

pub use qnd::{cooling_transfer, qnd_map};
pub use sampling::{qnd_sample, MeasurementRecord, SampleHistogram};
