//! Simulation and verification toolkit for a hybrid quantum processing unit
//! built from a quantum dot and an NV center coupled through fiber-linked
//! whispering-gallery cavities.
//!
//! The crate is organized in layers:
//!
//! - [`space`], [`operator`], [`state`], [`modulated`], [`propagate`],
//!   [`linalg`], [`metrics`]: Hilbert-space composition, dense operator
//!   algebra and time evolution for piecewise-harmonic Hamiltonians.
//! - [`model`]: the physical parameter set and constructors for every
//!   interaction Hamiltonian of the unit (laser-qubit, qubit-cavity,
//!   cavity-fiber, and the full two-qubit interaction in the normal-mode
//!   frame).
//! - [`effective`]: the closed-form effective theory — adiabatic-elimination
//!   coefficients, staged effective Hamiltonians, phase bookkeeping, the
//!   controlled-phase gate schedule, validity ratios and the decoherence
//!   budget — plus the brute-force cross-validation pipeline.
//! - [`gates`]: single-qubit operations (cavity-assisted Raman gate on the
//!   NV center, ideal rotations on the dot) and gate composition.
//! - [`protocols`]: QND measurement cycles and photonic state transfer.
//!
//! Energies are expressed in meV and times in ps throughout;
//! [`constants::HBAR_MEV_PS`] fixes the conversion between the two.

pub mod constants;
pub mod error;
pub mod linalg;
pub mod logical;
pub mod metrics;
pub mod modulated;
pub mod operator;
pub mod propagate;
pub mod space;
pub mod state;

pub mod effective;
pub mod gates;
pub mod model;
pub mod protocols;

pub use constants::HBAR_MEV_PS;
pub use error::{Error, Result};
pub use modulated::{Envelope, ModTerm, ModulatedHamiltonian};
pub use operator::Operator;
pub use propagate::{propagate, PropagationOptions, PropagationResult};
pub use space::HilbertSpace;
pub use state::StateVector;
