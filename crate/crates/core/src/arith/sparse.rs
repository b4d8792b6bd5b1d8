use std::fmt;
use std::ops::Mul;

use num_traits::Zero;

use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Row-compressed matrix; every row is sorted by column and holds no zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, T)>>,
}

impl<T: Clone + Zero> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    /// Repeated positions are summed.
    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut data: Vec<Vec<(usize, T)>> = vec![Vec::new(); rows];
        for (i, j, v) in entries {
            assert!(i < rows && j < cols, "entry ({i}, {j}) outside {rows}x{cols}");
            data[i].push((j, v));
        }
        for row in &mut data {
            row.sort_by_key(|e| e.0);
            let mut merged: Vec<(usize, T)> = Vec::with_capacity(row.len());
            for (j, v) in row.drain(..) {
                match merged.last_mut() {
                    Some(last) if last.0 == j => last.1 = last.1.clone() + v,
                    _ => merged.push((j, v)),
                }
            }
            merged.retain(|e| !e.1.is_zero());
            *row = merged;
        }
        SparseMatrix { rows, cols, data }
    }

    /// Rows must already be sorted by column, without repeats or zeros.
    pub fn from_sorted_rows(rows: usize, cols: usize, data: Vec<Vec<(usize, T)>>) -> Self {
        assert_eq!(data.len(), rows, "row count");
        debug_assert!(data.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)
            && r.iter().all(|e| e.0 < cols && !e.1.is_zero())));
        SparseMatrix { rows, cols, data }
    }

    pub fn from_dense(m: &Matrix<T>) -> Self {
        let data = (0..m.rows())
            .map(|i| m.row(i).iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect())
            .collect();
        SparseMatrix { rows: m.rows(), cols: m.cols(), data }
    }

    pub fn to_dense(&self) -> Matrix<T> {
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out[(i, *j)] = v.clone();
            }
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(p) => self.data[i][p].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(j, v)| (*j, f(v))).filter(|e| !e.1.is_zero()).collect())
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn mul(&self, rhs: &SparseMatrix<T>) -> Result<SparseMatrix<T>>
    where
        T: Mul<Output = T>,
    {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut acc = vec![T::zero(); rhs.cols];
        let mut touched = vec![false; rhs.cols];
        let mut cols = Vec::new();
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row {
                for (j, b) in &rhs.data[*k] {
                    if !touched[*j] {
                        touched[*j] = true;
                        cols.push(*j);
                    }
                    acc[*j] = acc[*j].clone() + a.clone() * b.clone();
                }
            }
            cols.sort_unstable();
            let mut out = Vec::new();
            for &j in &cols {
                let v = std::mem::replace(&mut acc[j], T::zero());
                touched[j] = false;
                if !v.is_zero() {
                    out.push((j, v));
                }
            }
            cols.clear();
            data.push(out);
        }
        Ok(SparseMatrix { rows: self.rows, cols: rhs.cols, data })
    }
}

impl<T> SparseMatrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.data[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.data.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }
}

impl<T: Clone + Zero> From<&Matrix<T>> for SparseMatrix<T> {
    fn from(m: &Matrix<T>) -> Self {
        SparseMatrix::from_dense(m)
    }
}

impl<T: Clone + Zero> From<Matrix<T>> for SparseMatrix<T> {
    fn from(m: Matrix<T>) -> Self {
        SparseMatrix::from_dense(&m)
    }
}

impl<T: fmt::Debug> fmt::Debug for SparseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix {}x{} {:?}", self.rows, self.cols, self.data)
    }
}
