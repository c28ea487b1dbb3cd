//! Exact dense matrices over a [`Field`]: elimination, rank, null spaces,
//! and row-space comparisons. Row spaces are compared through reduced row
//! echelon form, which is a canonical basis.

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<FieldElement>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch);
            }
            for c in r {
                if c.field() != field {
                    return Err(Error::MixedFields);
                }
                data.push(c.raw());
            }
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub(crate) fn from_raw_rows(field: &Field, rows: Vec<Vec<u32>>, cols: usize) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            debug_assert_eq!(r.len(), cols);
            data.extend_from_slice(&r);
        }
        Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.field.element(self.data[r * self.cols + c])
    }

    #[inline]
    pub(crate) fn get_raw(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub(crate) fn set_raw(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub(crate) fn row_raw(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row(&self, r: usize) -> Vec<FieldElement> {
        self.row_raw(r)
            .iter()
            .map(|&v| self.field.element(v))
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    pub fn stack(&self, below: &Matrix) -> Result<Matrix> {
        if self.cols != below.cols {
            return Err(Error::LengthMismatch);
        }
        if self.field != below.field {
            return Err(Error::MixedFields);
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::LengthMismatch);
        }
        if self.field != rhs.field {
            return Err(Error::MixedFields);
        }
        let f = &self.field;
        let mut out = Matrix::zero(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.data[k * rhs.cols + j];
                    if b == 0 {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] = f.add_raw(out.data[idx], f.mul_raw(a, b));
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and the pivot column list.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get_raw(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.get_raw(row, c);
                    let b = m.get_raw(pr, c);
                    m.set_raw(row, c, b);
                    m.set_raw(pr, c, a);
                }
            }
            let inv = f.inv_raw(m.get_raw(row, col));
            if inv != 1 {
                for c in col..m.cols {
                    let v = m.get_raw(row, c);
                    m.set_raw(row, c, f.mul_raw(v, inv));
                }
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get_raw(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub_raw(m.get_raw(r, c), f.mul_raw(factor, m.get_raw(row, c)));
                    m.set_raw(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The canonical row basis: rref with zero rows dropped.
    pub fn row_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        Matrix {
            field: self.field.clone(),
            rows: rank,
            cols: self.cols,
            data: r.data[..rank * self.cols].to_vec(),
        }
    }

    /// Basis of the right null space: an (n - rank) x n matrix H with
    /// self * H^T = 0 and full row rank. Rows are ordered by free column.
    pub fn null_space(&self) -> Matrix {
        let f = self.field.clone();
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zero(&f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set_raw(i, fc, 1);
            for (j, &pc) in pivots.iter().enumerate().take(rank) {
                let v = r.get_raw(j, fc);
                if v != 0 {
                    out.set_raw(i, pc, f.neg_raw(v));
                }
            }
        }
        out
    }

    /// True when `row` lies in the row space.
    pub fn row_space_contains_raw(&self, row: &[u32]) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut v = row.to_vec();
        for (j, &pc) in pivots.iter().enumerate() {
            let c = v[pc];
            if c != 0 {
                for k in 0..self.cols {
                    let t = f.mul_raw(c, r.get_raw(j, k));
                    v[k] = f.sub_raw(v[k], t);
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn row_space_contains(&self, row: &[FieldElement]) -> Result<bool> {
        if row.len() != self.cols {
            return Err(Error::LengthMismatch);
        }
        let raw: Vec<u32> = row.iter().map(|e| e.raw()).collect();
        Ok(self.row_space_contains_raw(&raw))
    }

    /// Row spaces are equal iff the canonical bases coincide.
    pub fn row_space_eq(&self, other: &Matrix) -> bool {
        self.cols == other.cols
            && self.field == other.field
            && self.row_basis() == other.row_basis()
    }

    /// Some(beta) when self * self^T = beta * I with beta nonzero.
    pub fn scalar_gram(&self) -> Option<FieldElement> {
        let g = self.matmul(&self.transpose()).ok()?;
        let beta = g.get_raw(0, 0);
        if beta == 0 {
            return None;
        }
        for i in 0..g.rows {
            for j in 0..g.cols {
                let want = if i == j { beta } else { 0 };
                if g.get_raw(i, j) != want {
                    return None;
                }
            }
        }
        Some(self.field.element(beta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Field;

    fn m(field: &Field, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| r.iter().map(|&c| field.embed(c)).collect())
            .collect();
        Matrix::from_rows(field, &rows).unwrap()
    }

    #[test]
    fn rank_and_rref() {
        let f = Field::new(5, 1).unwrap();
        let a = m(&f, &[&[1, 2, 3], &[2, 4, 1], &[3, 1, 4]]);
        assert_eq!(a.rank(), 3);
        let b = m(&f, &[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn null_space_orthogonality() {
        let f = Field::new(7, 1).unwrap();
        let a = m(&f, &[&[1, 2, 3, 4], &[0, 1, 1, 6]]);
        let h = a.null_space();
        assert_eq!(h.rows(), 2);
        let prod = a.matmul(&h.transpose()).unwrap();
        assert_eq!(prod, Matrix::zero(&f, 2, 2));
        assert_eq!(h.rank(), 2);
    }

    #[test]
    fn row_space_operations() {
        let f = Field::new(5, 1).unwrap();
        let a = m(&f, &[&[1, 0, 2], &[0, 1, 3]]);
        let b = m(&f, &[&[1, 1, 0], &[2, 1, 2]]);
        assert!(a.row_space_eq(&b));
        assert!(a
            .row_space_contains(&[f.embed(3), f.embed(2), f.embed(2)])
            .unwrap());
        assert!(!a.row_space_contains(&[f.zero(), f.zero(), f.one()]).unwrap());
    }

    #[test]
    fn scalar_gram_detection() {
        let f = Field::new(5, 1).unwrap();
        let v1 = m(
            &f,
            &[
                &[1, 2, 1, 1],
                &[-2, 1, 1, -1],
                &[-1, -1, 1, 2],
                &[-1, 1, -2, 1],
            ],
        );
        assert_eq!(v1.scalar_gram(), Some(f.embed(2)));
        let skew = m(&f, &[&[1, 1], &[0, 1]]);
        assert_eq!(skew.scalar_gram(), None);
    }
}
