//! Dense matrices over the active field, with the elimination kernels
//! used by every solver in the crate. Pivoting is deterministic
//! (leftmost nonzero column, topmost row) so repeated runs and emitted
//! certificates are reproducible.

use super::{Field, Scalar};
use crate::{Error, Result};

/// Dense row-major matrix. Values are immutable for callers; all
/// operations return new matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Result of Gauss-Jordan elimination: `reduced = transform * input`,
/// `transform` invertible, `pivots` the pivot columns in order.
#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub transform: Matrix,
}

/// A particular solution of `A x = b` together with a basis of `ker A`.
#[derive(Debug, Clone)]
pub struct LinSolution {
    /// One solution per column of `b`; shape `A.cols × b.cols`.
    pub particular: Matrix,
    /// Columns form a basis of the nullspace of `A`.
    pub nullspace: Matrix,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.add(self.get(i, j), other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.sub(self.get(i, j), other.get(i, j))
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.field.neg(self.get(i, j)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.field.mul(c, self.get(i, j)))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        Matrix::from_fn(self.field, self.rows, other.cols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                let t = self.field.mul(self.get(i, k), other.get(k, j));
                acc = self.field.add(&acc, &t);
            }
            acc
        })
    }

    /// Stack `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    pub fn column(&self, j: usize) -> Matrix {
        Matrix::from_fn(self.field, self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    /// Reduced row echelon form with the accumulated row transform.
    /// Deterministic pivoting: leftmost nonzero column, topmost row.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut r = self.clone();
        let mut t = Matrix::identity(f, self.rows);
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(piv) = (row..self.rows).find(|&i| !f.is_zero(r.get(i, col))) else {
                continue;
            };
            if piv != row {
                for j in 0..self.cols {
                    let a = r.get(row, j).clone();
                    let b = r.get(piv, j).clone();
                    r.set(row, j, b);
                    r.set(piv, j, a);
                }
                for j in 0..self.rows {
                    let a = t.get(row, j).clone();
                    let b = t.get(piv, j).clone();
                    t.set(row, j, b);
                    t.set(piv, j, a);
                }
            }
            let inv = f.inv(r.get(row, col));
            for j in 0..self.cols {
                r.set(row, j, f.mul(&inv, r.get(row, j)));
            }
            for j in 0..self.rows {
                t.set(row, j, f.mul(&inv, t.get(row, j)));
            }
            for i in 0..self.rows {
                if i == row || f.is_zero(r.get(i, col)) {
                    continue;
                }
                let factor = r.get(i, col).clone();
                for j in 0..self.cols {
                    let v = f.sub(r.get(i, j), &f.mul(&factor, r.get(row, j)));
                    r.set(i, j, v);
                }
                for j in 0..self.rows {
                    let v = f.sub(t.get(i, j), &f.mul(&factor, t.get(row, j)));
                    t.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { reduced: r, pivots, transform: t }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the nullspace, as columns. Free variables are set to one
    /// in increasing column order, so the basis is canonical.
    pub fn nullspace(&self) -> Matrix {
        let Rref { reduced, pivots, .. } = self.rref();
        let f = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zero(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, f.one());
            for (prow, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, f.neg(reduced.get(prow, fc)));
            }
        }
        basis
    }

    /// Solve `A x = b` for every column of `b`. Returns `None` when some
    /// column of `b` is outside the column space.
    pub fn solve(&self, b: &Matrix) -> Result<Option<LinSolution>> {
        if self.rows != b.rows {
            return Err(Error::DimMismatch(format!(
                "solve: lhs has {} rows, rhs has {}",
                self.rows, b.rows
            )));
        }
        let f = self.field;
        let aug = self.hstack(b);
        let Rref { reduced, pivots, .. } = aug.rref();
        // a pivot in the b-part means inconsistency
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut particular = Matrix::zero(f, self.cols, b.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                particular.set(pc, j, reduced.get(prow, self.cols + j).clone());
            }
        }
        Ok(Some(LinSolution { particular, nullspace: self.nullspace() }))
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let r = self.rref();
        if r.pivots.len() == self.rows {
            Some(r.transform)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Column indices whose images form a basis of the column space.
    pub fn column_basis(&self) -> Vec<usize> {
        self.rref().pivots
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mat_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_zero_matrix() {
        let f = Field::prime(5).unwrap();
        let m = Matrix::zero(f, 2, 2);
        let r = m.rref();
        assert!(r.reduced.is_zero());
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_identity() {
        let f = Field::rational();
        let m = Matrix::identity(f, 3);
        let r = m.rref();
        assert_eq!(r.reduced, m);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_rank_one_over_f5() {
        // hand row-reduction: [[2,4],[1,2]] ~ [[1,2],[0,0]]
        let f = Field::prime(5).unwrap();
        let m = mat_i64(f, &[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.reduced, mat_i64(f, &[&[1, 2], &[0, 0]]));
        // transform really conjugates
        assert_eq!(r.transform.mul(&m), r.reduced);
        assert!(r.transform.is_invertible());
    }

    #[test]
    fn rref_is_idempotent() {
        let f = Field::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let m = Matrix::from_fn(f, 4, 5, |_, _| f.random(&mut rng));
            let r = m.rref().reduced;
            assert_eq!(r.rref().reduced, r);
        }
    }

    #[test]
    fn solve_identity_and_empty_image() {
        let f = Field::rational();
        let b = mat_i64(f, &[&[3], &[-2]]);
        let sol = Matrix::identity(f, 2).solve(&b).unwrap().unwrap();
        assert_eq!(sol.particular, b);
        assert_eq!(sol.nullspace.cols(), 0);

        let zero = Matrix::zero(f, 2, 2);
        assert!(zero.solve(&b).unwrap().is_none());
    }

    #[test]
    fn solve_underdetermined_rational() {
        let f = Field::rational();
        let a = mat_i64(f, &[&[1, 1]]);
        let b = mat_i64(f, &[&[1]]);
        let sol = a.solve(&b).unwrap().unwrap();
        assert_eq!(sol.particular, mat_i64(f, &[&[1], &[0]]));
        assert_eq!(sol.nullspace.cols(), 1);
        // the stated basis vector (1,-1) spans the same line
        let v = mat_i64(f, &[&[1], &[-1]]);
        assert_eq!(sol.nullspace.hstack(&v).rank(), 1);
    }

    #[test]
    fn rank_nullity_on_seeded_random_matrices() {
        let f = Field::prime(13).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..100 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..6);
            let m = Matrix::from_fn(f, rows, cols, |_, _| f.random(&mut rng));
            assert_eq!(m.rank() + m.nullspace().cols(), cols);
        }
    }

    #[test]
    fn solve_then_multiply_back_on_seeded_systems() {
        let f = Field::prime(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let rows = rng.gen_range(1..5);
            let cols = rng.gen_range(1..5);
            let a = Matrix::from_fn(f, rows, cols, |_, _| f.random(&mut rng));
            let x = Matrix::from_fn(f, cols, 1, |_, _| f.random(&mut rng));
            let b = a.mul(&x);
            let sol = a.solve(&b).unwrap().expect("constructed to be solvable");
            assert_eq!(a.mul(&sol.particular), b);
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::prime(7).unwrap();
        let m = mat_i64(f, &[&[1, 2, 0], &[0, 1, 3], &[2, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 3));
        assert_eq!(inv.mul(&m), Matrix::identity(f, 3));
    }
}
