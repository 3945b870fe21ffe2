//! Fixed level ordering used by every Hamiltonian builder.
//!
//! QD (4 levels): `x+` = 0, `x-` = 1, `tau+` = 2, `tau-` = 3. The first two
//! are the electron ground states split along the magnetic-field axis; the
//! trion states follow.
//!
//! NV (3 levels): `g` = 0 (m_s = 0), `f` = 1 (m_s = +-1), `e` = 2.
//!
//! Bosonic normal modes are ordered `c0, c1, c2`; the pre-transform frame
//! orders them `a1, a2, b` (two cavity modes, then the fiber mode).

use crate::error::Result;
use crate::space::{compose_space, HilbertSpace};

pub const QD_DIM: usize = 4;
pub const QD_XP: usize = 0;
pub const QD_XM: usize = 1;
pub const QD_TP: usize = 2;
pub const QD_TM: usize = 3;

pub const NV_DIM: usize = 3;
pub const NV_G: usize = 0;
pub const NV_F: usize = 1;
pub const NV_E: usize = 2;

pub const QD_LABEL: &str = "QD";
pub const NV_LABEL: &str = "NV";
pub const MODE_LABELS: [&str; 3] = ["c0", "c1", "c2"];
pub const RAW_MODE_LABELS: [&str; 3] = ["a1", "a2", "b"];

/// 4-level QD space.
pub fn qd_space() -> HilbertSpace {
    compose_space(vec![(QD_LABEL, QD_DIM)]).expect("static space")
}

/// 3-level NV space.
pub fn nv_space() -> HilbertSpace {
    compose_space(vec![(NV_LABEL, NV_DIM)]).expect("static space")
}

/// QD ⊗ NV ⊗ (a1, a2) with `levels` Fock states per cavity mode.
pub fn qubit_cavity_space(levels: usize) -> Result<HilbertSpace> {
    compose_space(vec![
        (QD_LABEL, QD_DIM),
        (NV_LABEL, NV_DIM),
        ("a1", levels),
        ("a2", levels),
    ])
}

/// (a1, a2, b) with `levels` Fock states per mode.
pub fn raw_mode_space(levels: usize) -> Result<HilbertSpace> {
    compose_space(
        RAW_MODE_LABELS
            .iter()
            .map(|l| (l.to_string(), levels))
            .collect(),
    )
}

/// QD ⊗ NV ⊗ (c0, c1, c2) with `levels` Fock states per mode.
pub fn interaction_space(levels: usize) -> Result<HilbertSpace> {
    compose_space(vec![
        (QD_LABEL.to_string(), QD_DIM),
        (NV_LABEL.to_string(), NV_DIM),
        (MODE_LABELS[0].to_string(), levels),
        (MODE_LABELS[1].to_string(), levels),
        (MODE_LABELS[2].to_string(), levels),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interaction_space_dimension() {
        let s = interaction_space(3).unwrap();
        assert_eq!(s.total_dim(), 4 * 3 * 27);
    }
}
