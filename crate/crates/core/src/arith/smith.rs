//! Smith normal form over the integers.
//!
//! Two routes: a dense elimination that can record unimodular transforms, and
//! a sparse route that first removes every ±1 pivot (keeping the Schur
//! complement) and hands the small residual to the dense elimination. Both
//! are generic over the integer type; the `i64` instantiation reports
//! overflow and callers retry with [`BigInt`].

use num_bigint::BigInt;
use num_traits::One;

use super::matrix::{IntMatrix, Matrix};
use super::sparse::SparseMatrix;
use super::scalar::ExactInt;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithCertificate {
    /// Unimodular row transform.
    pub u: IntMatrix,
    /// Unimodular column transform.
    pub v: IntMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d₁ | d₂ | …`, all positive.
    pub invariant_factors: Vec<BigInt>,
    pub certificate: Option<SmithCertificate>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    /// `U·M·V`-shaped diagonal matrix for an input of the given shape.
    pub fn diagonal(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zeros(rows, cols);
        for (i, f) in self.invariant_factors.iter().enumerate() {
            d[(i, i)] = f.clone();
        }
        d
    }
}

fn checked_sub_mul<T: ExactInt>(a: &T, q: &T, b: &T) -> Result<T> {
    let prod = q.checked_mul(b).ok_or(Error::Overflow)?;
    a.checked_sub(&prod).ok_or(Error::Overflow)
}

fn checked_add<T: ExactInt>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

struct DenseSnf<T> {
    a: Matrix<T>,
    u: Option<Matrix<T>>,
    v: Option<Matrix<T>>,
}

impl<T: ExactInt> DenseSnf<T> {
    /// row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &T, from_col: usize) -> Result<()> {
        for j in from_col..self.a.cols() {
            if !self.a[(t, j)].is_zero() {
                self.a[(i, j)] = checked_sub_mul(&self.a[(i, j)], q, &self.a[(t, j)])?;
            }
        }
        if let Some(u) = self.u.as_mut() {
            for j in 0..u.cols() {
                if !u[(t, j)].is_zero() {
                    u[(i, j)] = checked_sub_mul(&u[(i, j)], q, &u[(t, j)])?;
                }
            }
        }
        Ok(())
    }

    /// col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &T, from_row: usize) -> Result<()> {
        for i in from_row..self.a.rows() {
            if !self.a[(i, t)].is_zero() {
                self.a[(i, j)] = checked_sub_mul(&self.a[(i, j)], q, &self.a[(i, t)])?;
            }
        }
        if let Some(v) = self.v.as_mut() {
            for i in 0..v.rows() {
                if !v[(i, t)].is_zero() {
                    v[(i, j)] = checked_sub_mul(&v[(i, j)], q, &v[(i, t)])?;
                }
            }
        }
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.a.swap_rows(a, b);
        if let Some(u) = self.u.as_mut() {
            u.swap_rows(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.a.swap_cols(a, b);
        if let Some(v) = self.v.as_mut() {
            v.swap_cols(a, b);
        }
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, T)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    let unit = ax.is_one();
                    best = Some((i, j, ax));
                    if unit {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) -> Result<Vec<T>> {
        let (rows, cols) = self.a.shape();
        let mut factors = Vec::new();
        for t in 0..rows.min(cols) {
            loop {
                let Some((pi, pj)) = self.min_entry(t) else {
                    return Ok(factors);
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let p = self.a[(t, t)].clone();
                let mut clean = true;
                for i in t + 1..rows {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = self.a[(i, t)].div_floor(&p);
                    self.row_sub(i, t, &q, t)?;
                    clean &= self.a[(i, t)].is_zero();
                }
                for j in t + 1..cols {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = self.a[(t, j)].div_floor(&p);
                    self.col_sub(j, t, &q, t)?;
                    clean &= self.a[(t, j)].is_zero();
                }
                if !clean {
                    continue;
                }
                // pivot must divide the whole remaining block
                let bad = if p.abs().is_one() {
                    None
                } else {
                    (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !self.a[(i, j)].is_multiple_of(&p)))
                };
                match bad {
                    Some(i) => {
                        // row_t += row_i, then the loop re-reduces
                        let minus_one = T::zero() - T::one();
                        for j in t..cols {
                            self.a[(t, j)] = checked_add(&self.a[(t, j)], &self.a[(i, j)])?;
                        }
                        if let Some(u) = self.u.as_mut() {
                            for j in 0..u.cols() {
                                u[(t, j)] = checked_sub_mul(&u[(t, j)], &minus_one, &u[(i, j)])?;
                            }
                        }
                    }
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                for j in t..cols {
                    self.a[(t, j)] = T::zero() - self.a[(t, j)].clone();
                }
                if let Some(u) = self.u.as_mut() {
                    for j in 0..u.cols() {
                        u[(t, j)] = T::zero() - u[(t, j)].clone();
                    }
                }
            }
            factors.push(self.a[(t, t)].clone());
        }
        Ok(factors)
    }
}

/// Invariant factors and, if requested, the transforms `(U, V)`.
pub type DenseSmith<T> = (Vec<T>, Option<(Matrix<T>, Matrix<T>)>);

/// Dense elimination with least-absolute-value pivoting.
pub fn dense_smith<T: ExactInt>(m: &Matrix<T>, certificate: bool) -> Result<DenseSmith<T>> {
    let mut calc = DenseSnf {
        a: m.clone(),
        u: certificate.then(|| Matrix::identity(m.rows())),
        v: certificate.then(|| Matrix::identity(m.cols())),
    };
    let factors = calc.run()?;
    let cert = match (calc.u, calc.v) {
        (Some(u), Some(v)) => Some((u, v)),
        _ => None,
    };
    Ok((factors, cert))
}

type SparseRow<T> = Vec<(usize, T)>;

/// Bucket queue of row indices keyed by row length.
pub(crate) struct LengthQueue {
    buckets: Vec<Vec<usize>>,
    min: usize,
}

impl LengthQueue {
    pub(crate) fn new(max_len: usize) -> Self {
        LengthQueue { buckets: vec![Vec::new(); max_len + 1], min: max_len + 1 }
    }

    pub(crate) fn push(&mut self, len: usize, row: usize) {
        self.buckets[len].push(row);
        self.min = self.min.min(len);
    }

    pub(crate) fn pop(&mut self) -> Option<(usize, usize)> {
        while self.min < self.buckets.len() {
            if let Some(r) = self.buckets[self.min].pop() {
                return Some((self.min, r));
            }
            self.min += 1;
        }
        None
    }
}

/// `row - f * pivot`, both sorted by column. Columns new to `row` are
/// appended to `fresh`.
fn merge_sub<T: ExactInt>(
    row: &[(usize, T)],
    pivot: &[(usize, T)],
    f: &T,
    out: &mut SparseRow<T>,
    fresh: &mut Vec<usize>,
    lost: &mut Vec<usize>,
) -> Result<()> {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            let v = checked_sub_mul(&T::zero(), f, &pivot[j].1)?;
            if !v.is_zero() {
                fresh.push(cj);
                out.push((cj, v));
            }
            j += 1;
        } else {
            let v = checked_sub_mul(&row[i].1, f, &pivot[j].1)?;
            if v.is_zero() {
                lost.push(ci);
            } else {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(())
}

/// Eliminates unit pivots from a sparse matrix. Returns the number of pivots
/// removed and the dense residual, whose invariant factors together with
/// that many ones are the invariant factors of the input.
fn eliminate_units<T: ExactInt>(mut rows: Vec<SparseRow<T>>, ncols: usize) -> Result<(usize, Matrix<T>)> {
    let nrows = rows.len();
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    let mut col_count = vec![0usize; ncols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c].push(r);
            col_count[c] += 1;
        }
    }
    let has_unit = |row: &SparseRow<T>| row.iter().any(|(_, v)| v.abs().is_one());
    let mut row_alive = vec![true; nrows];
    let mut unit_rows: Vec<bool> = rows.iter().map(has_unit).collect();
    let mut pivots = 0;
    let (mut fresh, mut lost, mut scratch) = (Vec::new(), Vec::new(), Vec::new());
    // minimum degree: shortest row holding a unit, then its sparsest unit
    // column; queue entries go stale when a row changes and are skipped
    let mut queue = LengthQueue::new(ncols);
    for r in (0..nrows).filter(|&r| unit_rows[r]) {
        queue.push(rows[r].len(), r);
    }
    while let Some((len, r)) = queue.pop() {
        if !row_alive[r] || !unit_rows[r] || rows[r].len() != len {
            continue;
        }
        let (c, unit) = rows[r]
            .iter()
            .filter(|(_, v)| v.abs().is_one())
            .min_by_key(|(c, _)| col_count[*c])
            .map(|(c, v)| (*c, v.clone()))
            .expect("row holds a unit");
        let pivot_row = std::mem::take(&mut rows[r]);
        row_alive[r] = false;
        for (pc, _) in &pivot_row {
            col_count[*pc] -= 1;
        }
        for r2 in std::mem::take(&mut col_rows[c]) {
            if !row_alive[r2] {
                continue;
            }
            let Ok(pos) = rows[r2].binary_search_by_key(&c, |e| e.0) else {
                continue;
            };
            // unit is ±1, so v / unit == v * unit
            let f = rows[r2][pos].1.clone() * unit.clone();
            fresh.clear();
            lost.clear();
            merge_sub(&rows[r2], &pivot_row, &f, &mut scratch, &mut fresh, &mut lost)?;
            std::mem::swap(&mut rows[r2], &mut scratch);
            for &nc in &fresh {
                col_rows[nc].push(r2);
                col_count[nc] += 1;
            }
            for &lc in &lost {
                col_count[lc] -= 1;
            }
            unit_rows[r2] = has_unit(&rows[r2]);
            if unit_rows[r2] {
                queue.push(rows[r2].len(), r2);
            }
        }
        pivots += 1;
    }
    let live_rows: Vec<usize> = (0..nrows).filter(|&r| row_alive[r] && !rows[r].is_empty()).collect();
    let mut col_index = vec![usize::MAX; ncols];
    let mut live_cols = 0;
    for &r in &live_rows {
        for &(c, _) in &rows[r] {
            if col_index[c] == usize::MAX {
                col_index[c] = live_cols;
                live_cols += 1;
            }
        }
    }
    let mut residual = Matrix::zeros(live_rows.len(), live_cols);
    for (i, &r) in live_rows.iter().enumerate() {
        for (c, v) in &rows[r] {
            residual[(i, col_index[*c])] = v.clone();
        }
    }
    Ok((pivots, residual))
}

fn sparse_rows<T: ExactInt>(m: &SparseMatrix<i64>) -> Vec<SparseRow<T>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|(j, v)| (*j, T::from(*v))).collect()).collect()
}

pub fn sparse_smith<T: ExactInt>(m: &SparseMatrix<i64>) -> Result<Vec<T>> {
    let (units, residual) = eliminate_units::<T>(sparse_rows(m), m.cols())?;
    let (rest, _) = dense_smith(&residual, false)?;
    let mut factors = vec![T::one(); units];
    factors.extend(rest);
    // unit pivots precede everything; the residual chain is already ordered
    Ok(factors)
}

/// Smith normal form of an arbitrary-precision matrix (dense route).
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (factors, _) = dense_smith(m, false).expect("BigInt elimination cannot overflow");
    SmithForm { invariant_factors: factors, certificate: None }
}

/// Smith normal form together with unimodular `U`, `V` such that `U·M·V` is
/// the diagonal of invariant factors.
pub fn smith_normal_form_certified(m: &IntMatrix) -> SmithForm {
    let (factors, cert) = dense_smith(m, true).expect("BigInt elimination cannot overflow");
    let (u, v) = cert.expect("certificate requested");
    SmithForm { invariant_factors: factors, certificate: Some(SmithCertificate { u, v }) }
}

/// Invariant factors of a small-entry matrix: machine integers first, and
/// arbitrary precision if any intermediate value overflows.
pub fn invariant_factors(m: &Matrix<i64>) -> SmithForm {
    invariant_factors_sparse(&SparseMatrix::from_dense(m))
}

/// As [`invariant_factors`], without ever densifying the input.
pub fn invariant_factors_sparse(m: &SparseMatrix<i64>) -> SmithForm {
    let factors = match sparse_smith::<i64>(m) {
        Ok(f) => f.into_iter().map(BigInt::from).collect(),
        Err(_) => sparse_smith::<BigInt>(m).expect("BigInt elimination cannot overflow"),
    };
    SmithForm { invariant_factors: factors, certificate: None }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        Matrix::from_rows(rows).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_and_zero() {
        let id = IntMatrix::identity(3);
        assert_eq!(smith_normal_form(&id).invariant_factors, big(&[1, 1, 1]));
        let z = IntMatrix::zeros(3, 2);
        assert!(smith_normal_form(&z).invariant_factors.is_empty());
        assert!(invariant_factors(&Matrix::zeros(4, 4)).invariant_factors.is_empty());
    }

    #[test]
    fn two_by_two() {
        // d1 = gcd(2,4,6,8) = 2, d1*d2 = |det| = |16 - 24| = 8
        let m = int(vec![vec![2, 4], vec![6, 8]]);
        assert_eq!(smith_normal_form(&IntMatrix::from(&m)).invariant_factors, big(&[2, 4]));
        assert_eq!(invariant_factors(&m).invariant_factors, big(&[2, 4]));
    }

    #[test]
    fn certificate_diagonalizes() {
        let m = IntMatrix::from(&int(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        let s = smith_normal_form_certified(&m);
        assert_eq!(s.invariant_factors, big(&[2, 6, 12]));
        let c = s.certificate.as_ref().unwrap();
        let d = c.u.mul(&m).unwrap().mul(&c.v).unwrap();
        assert_eq!(d, s.diagonal(3, 3));
    }

    #[test]
    fn overflow_falls_back() {
        let big_entry = i64::MAX / 2;
        let m = int(vec![vec![big_entry, 3], vec![5, big_entry]]);
        assert!(sparse_smith::<i64>(&SparseMatrix::from(&m)).is_err());
        let s = invariant_factors(&m);
        assert_eq!(s.rank(), 2);
        let expected = smith_normal_form(&IntMatrix::from(&m));
        assert_eq!(s, expected);
    }

    #[test]
    fn sparse_route_handles_non_unit_blocks() {
        let m = int(vec![vec![1, 2, 0, 0], vec![0, 2, 0, 0], vec![0, 0, 4, 6], vec![3, 0, 0, 0]]);
        let dense = smith_normal_form(&IntMatrix::from(&m));
        assert_eq!(invariant_factors(&m), dense);
    }
}
