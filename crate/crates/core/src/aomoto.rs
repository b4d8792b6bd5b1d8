//! The Orlik–Solomon algebra over F₂ in degrees ≤ 2 and the mod 2 Aomoto
//! complex `(H^•(X, F₂), ω∧)`.

use std::fmt;

use serde::Serialize;

use crate::arith::BitMatrix;
use crate::error::{Error, Result};
use crate::geometry::IntersectionData;

/// A nonzero class `ω = Σ ω_i e_i ∈ H¹(X, F₂)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OmegaClass {
    bits: Vec<bool>,
}

impl OmegaClass {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if !bits.iter().any(|&b| b) {
            return Err(Error::ZeroOmega);
        }
        Ok(OmegaClass { bits })
    }

    pub fn all(n: usize) -> Result<Self> {
        Self::new(vec![true; n])
    }

    /// From 1-based line positions.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut bits = vec![false; n];
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, len: n });
            }
            bits[i - 1] = true;
        }
        Self::new(bits)
    }

    /// Bit `i` of the integer `mask` is the coefficient of `e_{i+1}`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        Self::new((0..n).map(|i| (mask >> i) & 1 == 1).collect())
    }

    /// Accepts `all`, comma-separated 1-based positions (`1,2,3`) or a
    /// bitstring of length `n` (`110…`).
    pub fn parse(spec: &str, n: usize) -> Result<Self> {
        let spec = spec.trim();
        if spec == "all" {
            return Self::all(n);
        }
        if spec.len() == n && spec.chars().all(|c| c == '0' || c == '1') {
            return Self::new(spec.chars().map(|c| c == '1').collect());
        }
        let indices = spec
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidOmega(spec.to_string()))?;
        Self::from_indices(n, &indices)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    /// 1-based positions of nonzero coefficients.
    pub fn indices(&self) -> Vec<usize> {
        (0..self.bits.len()).filter(|&i| self.bits[i]).map(|i| i + 1).collect()
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.bits.len() != n {
            return Err(Error::OmegaLength { expected: n, got: self.bits.len() });
        }
        Ok(())
    }
}

impl fmt::Display for OmegaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Degrees 0–2 of the Orlik–Solomon algebra with F₂ coefficients.
///
/// The degree 2 basis has one element `e_{i(p)} e_j` for every intersection
/// point `p` and every line `j ≠ i(p)` through it, where `i(p)` is the
/// smallest line through `p`.
#[derive(Debug, Clone)]
pub struct OSAlgebraF2 {
    n: usize,
    basis2: Vec<(usize, usize)>,
    /// `products[i][j]`: `e_i e_j` expressed in the degree 2 basis.
    products: Vec<Vec<Vec<usize>>>,
}

impl OSAlgebraF2 {
    pub fn build<F>(data: &IntersectionData<F>) -> Self {
        let n = data.num_lines();
        let mut basis2 = Vec::new();
        let mut basis_index = vec![vec![usize::MAX; n]; n];
        for p in &data.points {
            let i0 = p.lines[0];
            for &j in &p.lines[1..] {
                basis_index[i0][j] = basis2.len();
                basis_index[j][i0] = basis2.len();
                basis2.push((i0, j));
            }
        }
        let mut products = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let Some(pid) = data.meet_point(i, j) else {
                    // parallel lines: e_i e_j = 0
                    continue;
                };
                let i0 = data.points[pid].lines[0];
                let mut v = if i == i0 {
                    vec![basis_index[i0][j]]
                } else {
                    // e_i e_j = e_{i0} e_j + e_{i0} e_i in characteristic 2
                    vec![basis_index[i0][i], basis_index[i0][j]]
                };
                v.sort_unstable();
                products[i][j] = v.clone();
                products[j][i] = v;
            }
        }
        OSAlgebraF2 { n, basis2, products }
    }

    pub fn num_generators(&self) -> usize {
        self.n
    }

    pub fn dim2(&self) -> usize {
        self.basis2.len()
    }

    /// Degree 2 basis as pairs `(i(p), j)` of 0-based lines.
    pub fn basis2(&self) -> &[(usize, usize)] {
        &self.basis2
    }

    /// `e_i e_j` in the degree 2 basis (list of basis indices).
    pub fn product(&self, i: usize, j: usize) -> &[usize] {
        &self.products[i][j]
    }

    pub fn wedge(&self, x: &[bool], y: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.n);
        assert_eq!(y.len(), self.n);
        let mut out = vec![false; self.dim2()];
        for i in 0..self.n {
            for j in i + 1..self.n {
                if (x[i] && y[j]) != (x[j] && y[i]) {
                    for &b in &self.products[i][j] {
                        out[b] ^= true;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ω∧ : H¹ → H²`, of shape `dim2 × n`.
    pub fn multiplication_matrix(&self, omega: &[bool]) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.dim2(), self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if omega[j] && i != j {
                    for &b in &self.products[j][i] {
                        m.flip(b, i);
                    }
                }
            }
        }
        m
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AomotoReport {
    /// `α_0, α_1, α_2`.
    pub alpha: [usize; 3],
    /// Basis of `ker(ω∧ : H¹ → H²)`; it contains `ω`.
    pub kernel_basis_deg1: Vec<Vec<bool>>,
}

/// Ranks of the cohomology of the mod 2 Aomoto complex.
pub fn aomoto_ranks(os: &OSAlgebraF2, omega: &OmegaClass) -> Result<AomotoReport> {
    omega.check_len(os.num_generators())?;
    let m = os.multiplication_matrix(omega.bits());
    let kernel = m.kernel();
    let rank = os.num_generators() - kernel.len();
    // H⁰ → H¹ is injective with image span(ω), and ω ∈ ker
    Ok(AomotoReport { alpha: [0, kernel.len() - 1, os.dim2() - rank], kernel_basis_deg1: kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{catalog, intersection_data};

    fn os(name: &str) -> OSAlgebraF2 {
        OSAlgebraF2::build(&intersection_data(&catalog::catalog(name).unwrap()))
    }

    #[test]
    fn omega_parsing() {
        assert_eq!(OmegaClass::parse("all", 3).unwrap().indices(), vec![1, 2, 3]);
        assert_eq!(OmegaClass::parse("1,3", 3).unwrap().to_string(), "101");
        assert_eq!(OmegaClass::parse("010", 3).unwrap().indices(), vec![2]);
        assert_eq!(OmegaClass::parse("000", 3).unwrap_err(), Error::ZeroOmega);
        assert!(OmegaClass::parse("4", 3).is_err());
        assert!(OmegaClass::parse("a,b", 3).is_err());
    }

    #[test]
    fn relations() {
        let p = os("pencil(3)");
        assert_eq!(p.dim2(), 2);
        // e_2 e_3 = e_1 e_3 + e_1 e_2
        let mut e23 = p.product(1, 2).to_vec();
        e23.sort();
        let mut expected = vec![p.product(0, 1)[0], p.product(0, 2)[0]];
        expected.sort();
        assert_eq!(e23, expected);
        let x = vec![true, false, true];
        assert!(p.wedge(&x, &x).iter().all(|b| !b));

        let par = OSAlgebraF2::build(&intersection_data(
            &crate::geometry::parse_arrangement("1 0 0\n1 0 1\n0 1 0").unwrap(),
        ));
        assert!(par.product(0, 1).is_empty());
    }

    #[test]
    fn generic_three_lines() {
        let g = os("generic(3)");
        assert_eq!(g.wedge(&[true, false, false], &[false, true, false]).iter().filter(|&&b| b).count(), 1);
        // ω∧ on generic 3 lines: columns e_2+e_3, e_1+e_3, e_1+e_2 in the
        // basis e_1e_2, e_1e_3, e_2e_3; kernel spanned by ω alone
        let r = aomoto_ranks(&g, &OmegaClass::all(3).unwrap()).unwrap();
        assert_eq!(r.alpha, [0, 0, 1]);
    }
}
