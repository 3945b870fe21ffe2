//! Dense operators on a composite Hilbert space.

use ndarray::{linalg::kron, Array2};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg;
use crate::space::HilbertSpace;

/// A dense complex matrix tagged with the space it acts on.
#[derive(Debug, Clone)]
pub struct Operator {
    space: HilbertSpace,
    matrix: Array2<Complex64>,
}

impl Operator {
    pub fn new(space: HilbertSpace, matrix: Array2<Complex64>) -> Result<Self> {
        let n = space.total_dim();
        if matrix.nrows() != n || matrix.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: matrix.nrows().max(matrix.ncols()),
            });
        }
        if matrix.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("operator matrix"));
        }
        Ok(Operator { space, matrix })
    }

    pub fn zeros(space: HilbertSpace) -> Self {
        let n = space.total_dim();
        Operator {
            space,
            matrix: Array2::zeros((n, n)),
        }
    }

    pub fn identity(space: HilbertSpace) -> Self {
        let n = space.total_dim();
        Operator {
            space,
            matrix: Array2::eye(n),
        }
    }

    pub fn space(&self) -> &HilbertSpace {
        &self.space
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Array2<Complex64> {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.space.total_dim()
    }

    pub fn adjoint(&self) -> Self {
        Operator {
            space: self.space.clone(),
            matrix: linalg::adjoint(&self.matrix),
        }
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Operator {
            space: self.space.clone(),
            matrix: self.matrix.mapv(|v| v * z),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(Operator {
            space: self.space.clone(),
            matrix: &self.matrix + &other.matrix,
        })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(Operator {
            space: self.space.clone(),
            matrix: self.matrix.dot(&other.matrix),
        })
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        self.matrix += &other.matrix;
        Ok(())
    }

    /// max |A - A^dag| / max |A|.
    pub fn hermiticity_defect(&self) -> f64 {
        linalg::hermiticity_defect(&self.matrix)
    }

    /// max |A^dag A - I|.
    pub fn unitarity_defect(&self) -> f64 {
        linalg::unitarity_defect(&self.matrix)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.matrix[[i, i]]).sum()
    }
}

/// Embeds a local matrix into the composite space, acting as identity on
/// every other subsystem.
pub fn embed(local: &Array2<Complex64>, space: &HilbertSpace, slot: &str) -> Result<Operator> {
    embed_many(space, &[(slot, local)])
}

/// Embeds several local matrices at once (identity on unlisted slots).
/// Each label may appear at most once.
pub fn embed_many(space: &HilbertSpace, locals: &[(&str, &Array2<Complex64>)]) -> Result<Operator> {
    for (k, (label, local)) in locals.iter().enumerate() {
        let (_, dim) = space.slot(label)?;
        if local.nrows() != dim || local.ncols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: local.nrows().max(local.ncols()),
            });
        }
        if locals[..k].iter().any(|(l, _)| l == label) {
            return Err(Error::DuplicateLabel((*label).to_string()));
        }
    }
    let mut acc: Array2<Complex64> = Array2::eye(1);
    for (label, dim) in space.subsystems() {
        let factor: Array2<Complex64> = match locals.iter().find(|(l, _)| l == label) {
            Some((_, local)) => (*local).clone(),
            None => Array2::eye(*dim),
        };
        acc = kron(&acc, &factor);
    }
    Operator::new(space.clone(), acc)
}

/// Bosonic annihilation operator truncated to `levels` Fock states
/// (`a |n> = sqrt(n) |n-1>`).
pub fn annihilation(levels: usize) -> Array2<Complex64> {
    let mut a = Array2::zeros((levels, levels));
    for n in 1..levels {
        a[[n - 1, n]] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    a
}

/// Photon-number operator truncated to `levels` Fock states.
pub fn number_op(levels: usize) -> Array2<Complex64> {
    let mut n = Array2::zeros((levels, levels));
    for k in 0..levels {
        n[[k, k]] = Complex64::new(k as f64, 0.0);
    }
    n
}

/// |row><col| on a `dim`-dimensional subsystem.
pub fn transition(dim: usize, row: usize, col: usize) -> Array2<Complex64> {
    let mut m = Array2::zeros((dim, dim));
    m[[row, col]] = Complex64::new(1.0, 0.0);
    m
}

/// |k><k| on a `dim`-dimensional subsystem.
pub fn projector(dim: usize, k: usize) -> Array2<Complex64> {
    transition(dim, k, k)
}
