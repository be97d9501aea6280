//! Dense matrices over an exact field, with Gaussian elimination.

use std::fmt;

use super::{AlgebraError, Field, Rat};

pub type QMatrix = Matrix<Rat>;
pub type QVector = Vec<Rat>;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Column vector from a slice.
    pub fn column(v: &[F]) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out: Matrix<F> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Submatrix given by row and column index lists (repetitions allowed).
    pub fn select(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let mut out = Matrix::zero(row_idx.len(), col_idx.len());
        for (i, &ri) in row_idx.iter().enumerate() {
            for (j, &cj) in col_idx.iter().enumerate() {
                out.set(i, j, self.get(ri, cj).clone());
            }
        }
        out
    }

    /// Glue columns of `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = Matrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    ///
    /// Deterministic: the pivot is always the first row with a nonzero entry
    /// in the current column. With exact arithmetic no pivot-size heuristics
    /// are needed for correctness.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.entries.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = self.get(row, col).inv().expect("pivot nonzero");
            for j in col..self.cols {
                let v = self.get(row, j).mul(&inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for j in col..self.cols {
                    let v = self.get(r, j).sub(&factor.mul(self.get(row, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Rank together with a basis of the kernel.
    ///
    /// rank + kernel.len() == cols, each kernel vector maps to zero, and the
    /// basis is echelon (hence linearly independent).
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<F>>) {
        let mut m = self.clone();
        let pivots = m.rref();
        let rank = pivots.len();
        let mut kernel = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(r);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (&pc, pr) in pivots.iter().zip(0..rank) {
                v[pc] = m.get(pr, free).neg();
            }
            kernel.push(v);
        }
        (rank, kernel)
    }

    /// Exact inverse; errors on non-square or singular input.
    pub fn invert(&self) -> Result<Self, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(n));
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(AlgebraError::SingularMatrix);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(aug.select(&rows, &cols))
    }

    /// Solve self * x = rhs for a square invertible matrix.
    pub fn solve(&self, rhs: &[F]) -> Result<Vec<F>, AlgebraError> {
        if self.rows != self.cols || self.rows != rhs.len() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "solve: {}x{} with rhs of length {}",
                self.rows,
                self.cols,
                rhs.len()
            )));
        }
        let inv = self.invert()?;
        Ok(inv.apply(rhs))
    }

    /// One solution of self * x = rhs for a general (possibly non-square)
    /// system, free variables set to zero; None when inconsistent.
    pub fn solve_any(&self, rhs: &[F]) -> Option<Vec<F>> {
        assert_eq!(self.rows, rhs.len(), "solve_any rhs length");
        let mut aug = self.hstack(&Matrix::column(rhs));
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Column span basis: independent columns as vectors (echelon-reduced).
    pub fn column_space_basis(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        pivots
            .iter()
            .map(|&c| (0..self.rows).map(|i| self.get(i, c).clone()).collect())
            .collect()
    }
}

impl<F: Field + fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Laurent, RatFunc};

    fn qm(rows: &[&[i64]]) -> QMatrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_inverts_to_identity() {
        let id: QMatrix = Matrix::identity(4);
        assert_eq!(id.invert().unwrap(), id);
    }

    #[test]
    fn zero_matrix_rank_and_kernel() {
        let z: QMatrix = Matrix::zero(3, 3);
        let (rank, ker) = z.rank_and_kernel();
        assert_eq!(rank, 0);
        assert_eq!(ker.len(), 3);
    }

    #[test]
    fn identity_kernel_is_trivial() {
        let id: QMatrix = Matrix::identity(5);
        let (rank, ker) = id.rank_and_kernel();
        assert_eq!(rank, 5);
        assert!(ker.is_empty());
    }

    #[test]
    fn kernel_vectors_map_to_zero() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (rank, ker) = m.rank_and_kernel();
        assert_eq!(rank + ker.len(), 3);
        for v in &ker {
            assert!(m.apply(v).iter().all(|x| Field::is_zero(x)));
        }
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = qm(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.invert(), Err(AlgebraError::SingularMatrix));
    }

    #[test]
    fn splitting_two_point_inverse() {
        // [[u, 1], [1, u]] with u = q + q^-1 inverts to
        // 1/(u^2-1) * [[u, -1], [-1, u]]
        let u = RatFunc::from_laurent(Laurent::qdim_v());
        let one = RatFunc::one();
        let c = Matrix::from_rows(vec![
            vec![u.clone(), one.clone()],
            vec![one.clone(), u.clone()],
        ]);
        let b = c.invert().unwrap();
        let det_inv = RatFunc::new(
            Laurent::one(),
            &(&Laurent::qdim_v() * &Laurent::qdim_v()) - &Laurent::one(),
        )
        .unwrap();
        let expected = Matrix::from_rows(vec![
            vec![det_inv.mul(&u), det_inv.neg()],
            vec![det_inv.neg(), det_inv.mul(&u)],
        ]);
        assert_eq!(b, expected);
        assert_eq!(c.mul(&b), Matrix::identity(2));
        assert_eq!(b.mul(&c), Matrix::identity(2));
    }

    #[test]
    fn solve_round_trips() {
        let m = qm(&[&[2, 1, 0], &[1, -1, 3], &[0, 5, 1]]);
        let rhs = vec![rat(3), rat(7), rat(-2)];
        let x = m.solve(&rhs).unwrap();
        assert_eq!(m.apply(&x), rhs);
    }
}
