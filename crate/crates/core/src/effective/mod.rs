//! Closed-form effective theory of the two-qubit gate and its
//! cross-validation against brute-force propagation.

pub mod decoherence;
pub mod dynamics;
pub mod hamiltonians;
pub mod params;
pub mod phases;
pub mod validity;

pub use decoherence::{decoherence_estimate, DecoherenceEstimate};
pub use dynamics::{full_vs_effective, wrap_angle, EvolveReport, EvolveRow};
pub use hamiltonians::{build_heff1, build_heff2, build_heff_final, ground_space};
pub use params::{effective_params, EffectiveParams};
pub use phases::{compute_phases, cz_unitary, gate_time, GateSchedule, PhaseSet};
pub use validity::{validity_report, Flag, ValidityReport, ValidityRow, ValidityThresholds};
