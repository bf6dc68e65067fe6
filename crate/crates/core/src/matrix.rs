//! Small dense integer matrices for block-level reasoning about adjacency
//! matrices (switching blocks, Kronecker patterns, permutation matrices).

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![1; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Matrix(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn adjacency(g: &Graph) -> Self {
        let n = g.order();
        let mut m = Matrix::zeros(n, n);
        for (u, v) in g.edges() {
            m[(u, v)] = 1;
            m[(v, u)] = 1;
        }
        m
    }

    /// Permutation matrix `P` with `P[i][p(i)] = 1`, so that
    /// `(P A Pᵀ)[i][j] = A[p(i)][p(j)]`.
    pub fn permutation(p: &Permutation) -> Self {
        let n = p.len();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, p.apply(i))] = 1;
        }
        m
    }

    /// Reads a permutation matrix back; `None` if it is not one.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if self.rows != self.cols {
            return None;
        }
        let mut map = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            if row.iter().any(|&x| x != 0 && x != 1) || row.iter().sum::<i64>() != 1 {
                return None;
            }
            map.push(row.iter().position(|&x| x == 1)?);
        }
        Permutation::new(map).ok()
    }

    /// Block matrix from a grid of blocks; blocks in a block row share a row
    /// count and blocks in a block column share a column count.
    pub fn from_blocks(blocks: &[Vec<&Matrix>]) -> Result<Self> {
        let heights: Vec<usize> = blocks.iter().map(|r| r[0].rows).collect();
        let widths: Vec<usize> = blocks
            .first()
            .map(|r| r.iter().map(|b| b.cols).collect())
            .unwrap_or_default();
        for (bi, r) in blocks.iter().enumerate() {
            if r.len() != widths.len() {
                return Err(Error::Matrix(format!("block row {bi} has wrong length")));
            }
            for (bj, b) in r.iter().enumerate() {
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(Error::Matrix(format!("block ({bi},{bj}) has wrong shape")));
                }
            }
        }
        let rows = heights.iter().sum();
        let cols = widths.iter().sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut r0 = 0;
        for (bi, r) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in r.iter().enumerate() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        m[(r0 + i, c0 + j)] = b[(i, j)];
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut k = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a == 0 {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        k[(i * other.rows + p, j * other.cols + q)] = a * other[(p, q)];
                    }
                }
            }
        }
        k
    }

    /// Rows and columns picked by index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)];
            }
        }
        m
    }

    /// Side-by-side concatenation `[self other]`.
    pub fn hcat(&self, other: &Matrix) -> Result<Matrix> {
        Matrix::from_blocks(&[vec![self, other]])
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|&x| x == 0 || x == 1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// The 0/1 rows as bytes, for [`Graph::from_adjacency`].
    pub fn to_u8_rows(&self) -> Result<Vec<Vec<u8>>> {
        if !self.is_binary() {
            return Err(Error::Matrix("entries must be 0 or 1".into()));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| x as u8).collect())
            .collect())
    }

    fn check_same_shape(&self, other: &Matrix, op: &str) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "{op}: shape {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = i64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.check_same_shape(rhs, "add");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.check_same_shape(rhs, "sub");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "mul: inner dimensions differ");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[i64]> = (0..self.rows).map(|i| self.row(i)).collect();
        rows.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_and_blocks() {
        let j2 = Matrix::ones(2, 2);
        let i2 = Matrix::identity(2);
        let z = &j2 - &i2;
        let r = Matrix::identity(3).kron(&z);
        assert_eq!(r.rows(), 6);
        assert_eq!(r.row(2), &[0, 0, 0, 1, 0, 0]);
        assert_eq!(&r * &r, Matrix::identity(6));

        let o = Matrix::zeros(2, 2);
        let b = Matrix::from_blocks(&[vec![&o, &i2], vec![&z, &o]]).unwrap();
        assert_eq!(b.row(0), &[0, 0, 1, 0]);
        assert_eq!(b.row(3), &[1, 0, 0, 0]);
        assert!(Matrix::from_blocks(&[vec![&o, &Matrix::zeros(3, 1)]]).is_err());
    }

    #[test]
    fn permutation_matrix_conjugation() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        let pm = Matrix::permutation(&p);
        let a = Matrix::adjacency(&g);
        let conj = &(&pm * &a) * &pm.transpose();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(conj[(i, j)], a[(p.apply(i), p.apply(j))]);
            }
        }
        assert_eq!(pm.to_permutation(), Some(p));
        assert_eq!(Matrix::ones(2, 2).to_permutation(), None);
    }
}
