//! Physical parameters and Hamiltonian constructors.

pub mod builders;
pub mod params;
pub mod scheme;
pub mod transform;

pub use builders::{
    build_cavity_fiber, build_laser_nv, build_laser_qd, build_qubit_cavity,
    build_two_qubit_interaction, build_two_qubit_interaction_on, excitation_counting_operator,
};
pub use params::PhysicalParams;
pub use transform::{fiber_coupling_matrix, normal_mode_transform, transformed_coupling_matrix};
