//! Composite Hilbert-space descriptors.
//!
//! A [`HilbertSpace`] is an ordered list of labeled subsystems. Basis states
//! of the composite space are indexed row-major: the first subsystem is the
//! most significant digit.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    subsystems: Vec<(String, usize)>,
    total_dim: usize,
    /// Stride of each subsystem index in the flat basis index.
    strides: Vec<usize>,
}

/// Ordered composition of labeled subsystems. Cheap to clone and share.
#[derive(Clone)]
pub struct HilbertSpace {
    inner: Arc<Inner>,
}

impl fmt::Debug for HilbertSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HilbertSpace[")?;
        for (i, (l, d)) in self.inner.subsystems.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊗ ")?;
            }
            write!(f, "{l}:{d}")?;
        }
        write!(f, "]")
    }
}

impl PartialEq for HilbertSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}
impl Eq for HilbertSpace {}

/// Builds a composite space from `(label, dimension)` pairs.
///
/// Labels must be unique and dimensions at least 1.
pub fn compose_space<L: Into<String>>(subsystems: Vec<(L, usize)>) -> Result<HilbertSpace> {
    let subsystems: Vec<(String, usize)> = subsystems
        .into_iter()
        .map(|(l, d)| (l.into(), d))
        .collect();
    if subsystems.is_empty() {
        return Err(Error::InvalidArgument("empty subsystem list".into()));
    }
    for (i, (label, dim)) in subsystems.iter().enumerate() {
        if *dim == 0 {
            return Err(Error::InvalidDimension {
                label: label.clone(),
                dim: *dim,
            });
        }
        if subsystems[..i].iter().any(|(l, _)| l == label) {
            return Err(Error::DuplicateLabel(label.clone()));
        }
    }
    let total_dim = subsystems.iter().map(|(_, d)| d).product();
    let mut strides = vec![1usize; subsystems.len()];
    for i in (0..subsystems.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * subsystems[i + 1].1;
    }
    Ok(HilbertSpace {
        inner: Arc::new(Inner {
            subsystems,
            total_dim,
            strides,
        }),
    })
}

impl HilbertSpace {
    /// Total dimension (product of subsystem dimensions).
    pub fn total_dim(&self) -> usize {
        self.inner.total_dim
    }

    /// Subsystems in composition order.
    pub fn subsystems(&self) -> &[(String, usize)] {
        &self.inner.subsystems
    }

    /// Number of subsystems.
    pub fn len(&self) -> usize {
        self.inner.subsystems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.subsystems.is_empty()
    }

    /// Position and dimension of the subsystem with the given label.
    pub fn slot(&self, label: &str) -> Result<(usize, usize)> {
        self.inner
            .subsystems
            .iter()
            .position(|(l, _)| l == label)
            .map(|i| (i, self.inner.subsystems[i].1))
            .ok_or_else(|| Error::UnknownSlot(label.to_string()))
    }

    /// Dimension of the labeled subsystem.
    pub fn dim_of(&self, label: &str) -> Result<usize> {
        self.slot(label).map(|(_, d)| d)
    }

    /// Flat basis index of the product state with the given per-subsystem
    /// indices (one per subsystem, in composition order).
    pub fn basis_index(&self, indices: &[usize]) -> Result<usize> {
        if indices.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: indices.len(),
            });
        }
        let mut flat = 0usize;
        for (k, &ix) in indices.iter().enumerate() {
            let dim = self.inner.subsystems[k].1;
            if ix >= dim {
                return Err(Error::InvalidArgument(format!(
                    "index {ix} out of range for subsystem `{}` (dim {dim})",
                    self.inner.subsystems[k].0
                )));
            }
            flat += ix * self.inner.strides[k];
        }
        Ok(flat)
    }

    /// Per-subsystem indices of the flat basis index.
    pub fn unravel(&self, flat: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut rem = flat;
        for k in 0..self.len() {
            out.push(rem / self.inner.strides[k]);
            rem %= self.inner.strides[k];
        }
        out
    }

    /// Stride of subsystem `k` in the flat index.
    pub fn stride(&self, k: usize) -> usize {
        self.inner.strides[k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composes_products() {
        let s = compose_space(vec![
            ("QD", 4),
            ("NV", 3),
            ("c0", 3),
            ("c1", 3),
            ("c2", 3),
        ])
        .unwrap();
        assert_eq!(s.total_dim(), 324);

        let s = compose_space(vec![("NV", 3), ("cav", 2)]).unwrap();
        assert_eq!(s.total_dim(), 6);
    }

    #[test]
    fn rejects_duplicates_and_zero_dims() {
        assert!(matches!(
            compose_space(vec![("a", 2), ("a", 2)]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            compose_space(vec![("a", 2), ("b", 0)]),
            Err(Error::InvalidDimension { .. })
        ));
    }

    #[test]
    fn index_round_trip() {
        let s = compose_space(vec![("a", 4), ("b", 3), ("c", 5)]).unwrap();
        for flat in 0..s.total_dim() {
            let ix = s.unravel(flat);
            assert_eq!(s.basis_index(&ix).unwrap(), flat);
        }
        // first subsystem is most significant
        assert_eq!(s.basis_index(&[1, 0, 0]).unwrap(), 15);
        assert_eq!(s.basis_index(&[0, 1, 0]).unwrap(), 5);
        assert_eq!(s.basis_index(&[0, 0, 1]).unwrap(), 1);
    }
}
