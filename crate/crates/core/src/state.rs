//! State vectors on a composite Hilbert space.

use ndarray::Array1;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::space::HilbertSpace;

#[derive(Debug, Clone)]
pub struct StateVector {
    space: HilbertSpace,
    amplitudes: Array1<Complex64>,
}

impl StateVector {
    pub fn new(space: HilbertSpace, amplitudes: Array1<Complex64>) -> Result<Self> {
        if amplitudes.len() != space.total_dim() {
            return Err(Error::DimensionMismatch {
                expected: space.total_dim(),
                got: amplitudes.len(),
            });
        }
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite("state amplitudes"));
        }
        Ok(StateVector { space, amplitudes })
    }

    /// Product basis state with one index per subsystem.
    pub fn basis(space: &HilbertSpace, indices: &[usize]) -> Result<Self> {
        let flat = space.basis_index(indices)?;
        let mut amp = Array1::zeros(space.total_dim());
        amp[flat] = Complex64::new(1.0, 0.0);
        Ok(StateVector {
            space: space.clone(),
            amplitudes: amp,
        })
    }

    pub fn space(&self) -> &HilbertSpace {
        &self.space
    }

    pub fn amplitudes(&self) -> &Array1<Complex64> {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut Array1<Complex64> {
        &mut self.amplitudes
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            self.amplitudes.mapv_inplace(|z| z / n);
        }
    }

    /// <self|other>.
    pub fn overlap(&self, other: &Self) -> Result<Complex64> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Total population of basis states whose subsystem `slot` index
    /// satisfies the predicate.
    pub fn population_where(&self, slot: usize, pred: impl Fn(usize) -> bool) -> f64 {
        let stride = self.space.stride(slot);
        let dim = self.space.subsystems()[slot].1;
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| pred((i / stride) % dim))
            .map(|(_, z)| z.norm_sqr())
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::compose_space;

    #[test]
    fn basis_states_are_normalized_and_orthogonal() {
        let s = compose_space(vec![("a", 2), ("b", 3)]).unwrap();
        let v0 = StateVector::basis(&s, &[0, 1]).unwrap();
        let v1 = StateVector::basis(&s, &[1, 2]).unwrap();
        assert!((v0.norm_sq() - 1.0).abs() < 1.0e-15);
        assert_eq!(v0.overlap(&v1).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(v0.overlap(&v0).unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn population_by_slot() {
        let s = compose_space(vec![("a", 2), ("b", 2)]).unwrap();
        let mut amp = Array1::zeros(4);
        amp[0] = Complex64::new(0.6, 0.0);
        amp[3] = Complex64::new(0.8, 0.0);
        let v = StateVector::new(s, amp).unwrap();
        assert!((v.population_where(0, |k| k == 1) - 0.64).abs() < 1.0e-15);
        assert!((v.population_where(1, |k| k == 0) - 0.36).abs() < 1.0e-15);
    }
}
