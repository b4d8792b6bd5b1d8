//! Linear algebra over F₂ on bit-packed rows.

use num_integer::Integer;

use super::matrix::Matrix;
use super::smith::LengthQueue;
use super::sparse::SparseMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn from_bools(rows: &[Vec<bool>], cols: usize) -> Self {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, &b) in r.iter().enumerate() {
                if b {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Reduction mod 2 of an integer matrix.
    pub fn from_int<T: Integer + Clone>(m: &Matrix<T>) -> Self {
        let two = T::one() + T::one();
        let mut out = BitMatrix::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for (j, x) in m.row(i).iter().enumerate() {
                if !x.is_zero() && !x.is_multiple_of(&two) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    pub fn from_sparse<T: Integer + Clone>(m: &SparseMatrix<T>) -> Self {
        let two = T::one() + T::one();
        let mut out = BitMatrix::zeros(m.rows(), m.cols());
        for (i, j, x) in m.iter() {
            if !x.is_multiple_of(&two) {
                out.set(i, j, true);
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let w = &mut self.data[i * self.words + j / 64];
        if value {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] ^= 1 << (j % 64);
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (w, s, d) = (self.words, src * self.words, dst * self.words);
        for k in 0..w {
            let v = self.data[s + k];
            self.data[d + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for k in 0..self.words {
                self.data.swap(a * self.words + k, b * self.words + k);
            }
        }
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, p);
            for i in r + 1..m.rows {
                if m.get(i, c) {
                    m.xor_row_into(r, i);
                }
            }
            r += 1;
        }
        r
    }

    /// Basis of the null space `{x : M·x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![false; self.cols];
                x[f] = true;
                for (r, &c) in pivots.iter().enumerate() {
                    x[c] = m.get(r, f);
                }
                x
            })
            .collect()
    }

    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| x[j] && self.get(i, j)).count() % 2 == 1)
            .collect()
    }
}

/// Rank over F₂ of an integer matrix.
pub fn rank_mod2<T: Integer + Clone>(m: &Matrix<T>) -> usize {
    BitMatrix::from_int(m).rank()
}

/// Rank over F₂ by sparse elimination; every odd entry is a pivot candidate.
pub fn rank_mod2_sparse<T: Integer + Clone>(m: &SparseMatrix<T>) -> usize {
    let two = T::one() + T::one();
    let mut rows: Vec<Vec<usize>> = (0..m.rows())
        .map(|i| m.row(i).iter().filter(|(_, v)| !v.is_multiple_of(&two)).map(|(j, _)| *j).collect())
        .collect();
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); m.cols()];
    let mut col_count = vec![0usize; m.cols()];
    let mut queue = LengthQueue::new(m.cols());
    for (r, row) in rows.iter().enumerate() {
        for &c in row {
            col_rows[c].push(r);
            col_count[c] += 1;
        }
        if !row.is_empty() {
            queue.push(row.len(), r);
        }
    }
    let mut alive = vec![true; rows.len()];
    let mut scratch = Vec::new();
    let mut rank = 0;
    while let Some((len, r)) = queue.pop() {
        if !alive[r] || rows[r].len() != len {
            continue;
        }
        let c = *rows[r].iter().min_by_key(|c| col_count[**c]).expect("queued rows are nonempty");
        let pivot = std::mem::take(&mut rows[r]);
        alive[r] = false;
        for &pc in &pivot {
            col_count[pc] -= 1;
        }
        for r2 in std::mem::take(&mut col_rows[c]) {
            if !alive[r2] || rows[r2].binary_search(&c).is_err() {
                continue;
            }
            symmetric_difference(&rows[r2], &pivot, &mut scratch, &mut col_rows, &mut col_count, r2);
            std::mem::swap(&mut rows[r2], &mut scratch);
            if !rows[r2].is_empty() {
                queue.push(rows[r2].len(), r2);
            }
        }
        rank += 1;
    }
    rank
}

fn symmetric_difference(
    row: &[usize],
    pivot: &[usize],
    out: &mut Vec<usize>,
    col_rows: &mut [Vec<usize>],
    col_count: &mut [usize],
    r: usize,
) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).copied().unwrap_or(usize::MAX);
        let cj = pivot.get(j).copied().unwrap_or(usize::MAX);
        if ci < cj {
            out.push(ci);
            i += 1;
        } else if cj < ci {
            out.push(cj);
            col_rows[cj].push(r);
            col_count[cj] += 1;
            j += 1;
        } else {
            col_count[ci] -= 1;
            i += 1;
            j += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_mod2(&Matrix::<i64>::identity(3)), 3);
        assert_eq!(rank_mod2(&m(vec![vec![2, 4], vec![6, 8]])), 0);
        assert_eq!(rank_mod2(&m(vec![vec![1, 1], vec![1, 1]])), 1);
        assert_eq!(rank_mod2(&m(vec![vec![1, -1], vec![3, 5]])), 1);
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let rows = vec![vec![1i64, 1, 0, 3], vec![0, 2, 1, 1], vec![1, 3, 1, 0], vec![5, 0, 0, 0]];
        let dense = m(rows);
        assert_eq!(rank_mod2_sparse(&SparseMatrix::from(&dense)), rank_mod2(&dense));
        assert_eq!(rank_mod2_sparse(&SparseMatrix::from(&dense)), 3);
    }

    #[test]
    fn kernels() {
        assert_eq!(BitMatrix::zeros(2, 3).kernel().len(), 3);
        assert!(BitMatrix::from_int(&Matrix::<i64>::identity(4)).kernel().is_empty());
        let row = BitMatrix::from_bools(&[vec![true, true, true]], 3);
        let k = row.kernel();
        assert_eq!(k.len(), 2);
        assert!(k.contains(&vec![true, true, false]));
        for x in &k {
            assert_eq!(row.mul_vec(x), vec![false]);
        }
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let mut a = BitMatrix::zeros(2, 130);
        a.set(0, 0, true);
        a.set(0, 129, true);
        a.set(1, 129, true);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.kernel().len(), 128);
        a.flip(1, 0);
        assert_eq!(a.rank(), 1);
    }
}
