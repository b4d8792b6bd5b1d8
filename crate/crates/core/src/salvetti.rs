//! Salvetti-type cell complex of the complexified complement and its
//! decoration by a rank one local system with values in ℤ[t]/(t²−1).
//!
//! 0-cells are chambers. The 1-cell `(C, F)` runs from `C` to the chamber
//! across the edge `F`. The 2-cell `(C, p)` is a `2m_p`-gon bounded by the
//! two positive minimal paths from `C` to its opposite chamber around `p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::aomoto::OmegaClass;
use crate::arith::SparseMatrix;
use crate::error::{Error, Result};
use crate::geometry::FacePoset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OneCell {
    pub source: usize,
    pub target: usize,
    pub edge: usize,
    /// 0-based line crossed.
    pub line: usize,
    /// Whether the crossing goes from the negative to the positive side.
    pub upward: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathStep {
    pub cell: usize,
    /// `false` when the 1-cell is traversed against its direction.
    pub forward: bool,
    pub line: usize,
}

#[derive(Debug, Clone)]
pub struct TwoCell {
    pub base: usize,
    pub vertex: usize,
    /// Closed edge path starting and ending at `base`.
    pub path: Vec<PathStep>,
}

#[derive(Debug, Clone)]
pub struct CellComplex {
    pub num_lines: usize,
    pub cells0: usize,
    pub cells1: Vec<OneCell>,
    pub cells2: Vec<TwoCell>,
    pub boundary1: SparseMatrix<i64>,
    pub boundary2: SparseMatrix<i64>,
}

impl CellComplex {
    pub fn build<F>(poset: &FacePoset<F>) -> Self {
        let mut cells1 = Vec::with_capacity(2 * poset.edge_info.len());
        for (e, info) in poset.edge_info.iter().enumerate() {
            let [neg, pos] = info.chambers;
            cells1.push(OneCell { source: neg, target: pos, edge: e, line: info.line, upward: true });
            cells1.push(OneCell { source: pos, target: neg, edge: e, line: info.line, upward: false });
        }
        let cell_from = |edge: usize, source: usize| {
            let [neg, pos] = poset.edge_info[edge].chambers;
            if source == neg {
                2 * edge
            } else {
                assert_eq!(source, pos, "chamber not adjacent to edge");
                2 * edge + 1
            }
        };

        let mut cells2 = Vec::new();
        for v in 0..poset.vertices.len() {
            let sectors = poset.sectors(v);
            let k = sectors.len();
            let m = k / 2;
            let chamber = |i: usize| sectors[i % k].1;
            let edge = |i: usize| sectors[i % k].0;
            for s in 0..k {
                let mut path = Vec::with_capacity(k);
                // counter-clockwise half: D_s → D_{s+m}
                for step in 1..=m {
                    let (src, e) = (chamber(s + step - 1), edge(s + step));
                    path.push(PathStep { cell: cell_from(e, src), forward: true, line: poset.edge_info[e].line });
                }
                // clockwise half, walked back from D_{s−m} to D_s
                let mut cw = Vec::with_capacity(m);
                for step in 0..m {
                    let (src, e) = (chamber(s + k - step), edge(s + k - step));
                    cw.push(PathStep { cell: cell_from(e, src), forward: false, line: poset.edge_info[e].line });
                }
                path.extend(cw.into_iter().rev());
                cells2.push(TwoCell { base: chamber(s), vertex: v, path });
            }
        }

        let boundary1 = SparseMatrix::from_triplets(
            poset.chambers.len(),
            cells1.len(),
            cells1.iter().enumerate().flat_map(|(j, c)| [(c.target, j, 1), (c.source, j, -1)]),
        );
        let boundary2 = SparseMatrix::from_triplets(
            cells1.len(),
            cells2.len(),
            cells2.iter().enumerate().flat_map(|(j, c)| {
                c.path.iter().map(move |step| (step.cell, j, if step.forward { 1 } else { -1 }))
            }),
        );
        CellComplex {
            num_lines: poset.num_lines(),
            cells0: poset.chambers.len(),
            cells1,
            cells2,
            boundary1,
            boundary2,
        }
    }

    pub fn ranks(&self) -> [usize; 3] {
        [self.cells0, self.cells1.len(), self.cells2.len()]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells0 as i64 - self.cells1.len() as i64 + self.cells2.len() as i64
    }

    pub fn untwisted(&self) -> ZComplex {
        ZComplex { ranks: self.ranks(), d1: self.boundary1.clone(), d2: self.boundary2.clone() }
    }

    /// Exponent of `t` carried by a 1-cell: `ω_H` for upward crossings of
    /// `H`, 0 otherwise. A meridian loop crosses `H` once in each direction
    /// and so picks up `t^{ω_H}`.
    pub fn weight(&self, cell: usize, omega: &OmegaClass) -> u8 {
        let c = &self.cells1[cell];
        u8::from(c.upward && omega.get(c.line))
    }
}

/// `c0 + c1·t` with `t² = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct GroupRingElem {
    pub c0: i64,
    pub c1: i64,
}

impl GroupRingElem {
    pub const ONE: GroupRingElem = GroupRingElem { c0: 1, c1: 0 };
    pub const T: GroupRingElem = GroupRingElem { c0: 0, c1: 1 };

    pub fn new(c0: i64, c1: i64) -> Self {
        GroupRingElem { c0, c1 }
    }

    /// `±t^e`.
    pub fn monomial(sign: i64, exponent: u8) -> Self {
        if exponent.is_multiple_of(2) {
            GroupRingElem { c0: sign, c1: 0 }
        } else {
            GroupRingElem { c0: 0, c1: sign }
        }
    }

    pub fn eval(self, t: i64) -> i64 {
        self.c0 + self.c1 * t
    }
}

impl Add for GroupRingElem {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        GroupRingElem { c0: self.c0 + r.c0, c1: self.c1 + r.c1 }
    }
}

impl Sub for GroupRingElem {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        GroupRingElem { c0: self.c0 - r.c0, c1: self.c1 - r.c1 }
    }
}

impl Neg for GroupRingElem {
    type Output = Self;
    fn neg(self) -> Self {
        GroupRingElem { c0: -self.c0, c1: -self.c1 }
    }
}

impl Mul for GroupRingElem {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        GroupRingElem { c0: self.c0 * r.c0 + self.c1 * r.c1, c1: self.c0 * r.c1 + self.c1 * r.c0 }
    }
}

impl Zero for GroupRingElem {
    fn zero() -> Self {
        GroupRingElem::default()
    }
    fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}t", self.c0, self.c1)
    }
}

/// Integer chain complex `C₂ → C₁ → C₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZComplex {
    pub ranks: [usize; 3],
    pub d1: SparseMatrix<i64>,
    pub d2: SparseMatrix<i64>,
}

impl ZComplex {
    pub fn new(
        ranks: [usize; 3],
        d1: impl Into<SparseMatrix<i64>>,
        d2: impl Into<SparseMatrix<i64>>,
    ) -> Result<Self> {
        let (d1, d2) = (d1.into(), d2.into());
        if d1.shape() != (ranks[0], ranks[1]) || d2.shape() != (ranks[1], ranks[2]) {
            return Err(Error::Dimension(format!(
                "ranks {:?} incompatible with d1 {:?} and d2 {:?}",
                ranks,
                d1.shape(),
                d2.shape()
            )));
        }
        let cx = ZComplex { ranks, d1, d2 };
        if !cx.is_chain_complex() {
            return Err(Error::NonZeroSquare);
        }
        Ok(cx)
    }

    pub fn is_chain_complex(&self) -> bool {
        self.d1.mul(&self.d2).map(|m| m.is_zero()).unwrap_or(false)
    }
}

/// Chain complex of free ℤ[t]/(t²−1)-modules.
#[derive(Debug, Clone)]
pub struct DecoratedComplex {
    pub ranks: [usize; 3],
    pub d1: SparseMatrix<GroupRingElem>,
    pub d2: SparseMatrix<GroupRingElem>,
    pub omega: Option<OmegaClass>,
}

impl DecoratedComplex {
    pub fn new(
        ranks: [usize; 3],
        d1: impl Into<SparseMatrix<GroupRingElem>>,
        d2: impl Into<SparseMatrix<GroupRingElem>>,
    ) -> Result<Self> {
        let (d1, d2) = (d1.into(), d2.into());
        if d1.shape() != (ranks[0], ranks[1]) || d2.shape() != (ranks[1], ranks[2]) {
            return Err(Error::Dimension(format!("ranks {ranks:?} incompatible with boundary shapes")));
        }
        let dc = DecoratedComplex { ranks, d1, d2, omega: None };
        if !dc.is_chain_complex() {
            return Err(Error::NonZeroSquare);
        }
        Ok(dc)
    }

    pub fn is_chain_complex(&self) -> bool {
        self.d1.mul(&self.d2).map(|m| m.is_zero()).unwrap_or(false)
    }

    /// Substitutes `t = ±1`.
    pub fn specialize(&self, t: i64) -> ZComplex {
        assert!(t == 1 || t == -1, "t must be ±1");
        ZComplex { ranks: self.ranks, d1: self.d1.map(|x| x.eval(t)), d2: self.d2.map(|x| x.eval(t)) }
    }

    /// Cellular chains of the double cover: every cell `σ` becomes the pair
    /// `(σ, tσ)` and every entry `a + bt` the block `[[a, b], [b, a]]`.
    pub fn double_cover(&self) -> ZComplex {
        let expand = |m: &SparseMatrix<GroupRingElem>| {
            let mut data = Vec::with_capacity(2 * m.rows());
            for i in 0..m.rows() {
                // sheet 0 row holds (c0, c1) per column pair, sheet 1 row (c1, c0)
                for flip in [false, true] {
                    let mut row = Vec::with_capacity(2 * m.row(i).len());
                    for (j, x) in m.row(i) {
                        let (a, b) = if flip { (x.c1, x.c0) } else { (x.c0, x.c1) };
                        if a != 0 {
                            row.push((2 * j, a));
                        }
                        if b != 0 {
                            row.push((2 * j + 1, b));
                        }
                    }
                    data.push(row);
                }
            }
            SparseMatrix::from_sorted_rows(2 * m.rows(), 2 * m.cols(), data)
        };
        ZComplex { ranks: self.ranks.map(|r| 2 * r), d1: expand(&self.d1), d2: expand(&self.d2) }
    }
}

/// Decorates the Salvetti complex with the local system of `ω`.
pub fn decorate(cx: &CellComplex, omega: &OmegaClass) -> Result<DecoratedComplex> {
    omega.check_len(cx.num_lines)?;
    let weights: Vec<u8> = (0..cx.cells1.len()).map(|e| cx.weight(e, omega)).collect();
    let mut d1 = Vec::with_capacity(2 * cx.cells1.len());
    for (j, c) in cx.cells1.iter().enumerate() {
        d1.push((c.target, j, GroupRingElem::monomial(1, weights[j])));
        d1.push((c.source, j, -GroupRingElem::ONE));
    }
    let mut d2 = Vec::new();
    for (j, c) in cx.cells2.iter().enumerate() {
        // sheet of the lift reached so far, starting from the base lift
        let mut sheet = 0u8;
        for step in &c.path {
            let w = weights[step.cell];
            let entry = if step.forward {
                let e = GroupRingElem::monomial(1, sheet);
                sheet ^= w;
                e
            } else {
                sheet ^= w;
                GroupRingElem::monomial(-1, sheet)
            };
            d2.push((step.cell, j, entry));
        }
        debug_assert_eq!(sheet, 0, "boundary path of a 2-cell must lift to a closed path");
    }
    let d1 = SparseMatrix::from_triplets(cx.cells0, cx.cells1.len(), d1);
    let d2 = SparseMatrix::from_triplets(cx.cells1.len(), cx.cells2.len(), d2);
    Ok(DecoratedComplex { ranks: cx.ranks(), d1, d2, omega: Some(omega.clone()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{catalog, face_poset, parse_arrangement};

    fn complex(text: &str) -> CellComplex {
        CellComplex::build(&face_poset(&parse_arrangement(text).unwrap()).unwrap())
    }

    #[test]
    fn single_line() {
        let cx = complex("1 0 0");
        assert_eq!(cx.ranks(), [2, 2, 0]);
        let dc = decorate(&cx, &OmegaClass::all(1).unwrap()).unwrap();
        assert!(dc.d1.iter().any(|(_, _, x)| x.c1 != 0));
        let tw = dc.specialize(-1);
        // t·C' − C and C − C' at t = −1: determinant ±2
        let d = tw.d1.to_dense();
        assert_eq!((d[(0, 0)] * d[(1, 1)] - d[(0, 1)] * d[(1, 0)]).abs(), 2);
        assert_eq!(dc.double_cover().ranks, [4, 4, 0]);
    }

    #[test]
    fn crossing_lines_counts() {
        let cx = complex("1 0 0\n0 1 0");
        assert_eq!(cx.ranks(), [4, 8, 4]);
        assert_eq!(cx.euler_characteristic(), 0);
        assert!(cx.untwisted().is_chain_complex());
    }

    #[test]
    fn decorated_square_zero() {
        let arr = catalog::decid();
        let cx = CellComplex::build(&face_poset(&arr).unwrap());
        assert_eq!(cx.ranks(), [76, 230, 200]);
        assert_eq!(cx.euler_characteristic(), 46);
        for omega in [OmegaClass::all(15).unwrap(), OmegaClass::from_indices(15, &[2, 7, 11]).unwrap()] {
            let dc = decorate(&cx, &omega).unwrap();
            assert!(dc.is_chain_complex());
            assert_eq!(dc.specialize(1), cx.untwisted());
            assert!(dc.specialize(-1).is_chain_complex());
            let cover = dc.double_cover();
            assert_eq!(cover.ranks, [152, 460, 400]);
            assert!(cover.is_chain_complex());
        }
    }

    #[test]
    fn weights_only_on_upward_crossings() {
        let cx = complex("1 0 0\n0 1 0\n1 1 1");
        let all = OmegaClass::all(3).unwrap();
        for (e, c) in cx.cells1.iter().enumerate() {
            assert_eq!(cx.weight(e, &all), u8::from(c.upward));
        }
        let only_first = OmegaClass::from_indices(3, &[1]).unwrap();
        let dc = decorate(&cx, &only_first).unwrap();
        for (j, c) in cx.cells2.iter().enumerate() {
            if c.path.iter().all(|s| s.line != 0) {
                for i in 0..dc.d2.rows() {
                    assert_eq!(dc.d2.get(i, j).c1, 0);
                }
            }
        }
    }

    #[test]
    fn group_ring() {
        assert_eq!(GroupRingElem::T * GroupRingElem::T, GroupRingElem::ONE);
        assert_eq!(GroupRingElem::new(2, 3).eval(-1), -1);
    }
}
