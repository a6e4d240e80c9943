//! Full-rank lattices in `Q^n`, given by an explicit rational basis.

use super::ConeError;
use crate::linalg::{self, QMat, QVec};
use crate::rat::{is_integer, Rat};

/// A full-rank lattice `Z b_1 + ... + Z b_n` inside `Q^n`, stored with its
/// basis as rows together with the inverse basis matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    rows: QMat,
    inv: QMat,
    n: usize,
}

impl LatticeBasis {
    /// Builds a lattice from basis rows; fails if they are not square and
    /// invertible.
    pub fn new(rows: QMat) -> Result<LatticeBasis, ConeError> {
        let n = rows.len();
        for r in &rows {
            if r.len() != n {
                return Err(ConeError::DimensionMismatch { expected: n, found: r.len() });
            }
        }
        let inv = linalg::inverse(&rows).ok_or(ConeError::SingularLattice)?;
        Ok(LatticeBasis { rows, inv, n })
    }

    /// The standard lattice `Z^n`.
    pub fn standard(n: usize) -> LatticeBasis {
        let rows: QMat = (0..n).map(|i| linalg::unit(n, i)).collect();
        LatticeBasis::new(rows).expect("identity basis")
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn basis_rows(&self) -> &QMat {
        &self.rows
    }

    /// Coordinates of `x` with respect to the basis (rational in general;
    /// integral exactly when `x` is a lattice point).
    pub fn coords(&self, x: &[Rat]) -> QVec {
        linalg::vec_mat(x, &self.inv)
    }

    /// The ambient vector with the given basis coordinates.
    pub fn from_coords(&self, c: &[Rat]) -> QVec {
        linalg::vec_mat(c, &self.rows)
    }

    /// Is `x` a point of the lattice?
    pub fn contains(&self, x: &[Rat]) -> bool {
        x.len() == self.n && self.coords(x).iter().all(is_integer)
    }

    /// Does this lattice contain every point of `other`?
    pub fn contains_lattice(&self, other: &LatticeBasis) -> bool {
        other.n == self.n && other.rows.iter().all(|b| self.contains(b))
    }

    /// The dual lattice `{y : y . x is an integer for all x in self}`.
    pub fn dual(&self) -> LatticeBasis {
        let rows = linalg::transpose(&self.inv);
        LatticeBasis::new(rows).expect("dual of a full-rank lattice")
    }

    /// Is the standard vector `e_i` a lattice point? Convenience for coroot
    /// containment checks.
    pub fn contains_unit(&self, i: usize) -> bool {
        self.contains(&linalg::unit(self.n, i))
    }
}
