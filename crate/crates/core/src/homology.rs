//! Homology of integer chain complexes of length two.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{invariant_factors_sparse, rank_mod2_sparse, Matrix};
use crate::error::{Error, Result};
use crate::salvetti::{DecoratedComplex, GroupRingElem, ZComplex};

/// `ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_s` with `1 < d₁ | d₂ | … | d_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    /// Drops unit factors; the rest must form a divisibility chain.
    pub fn from_factors(rank: usize, factors: &[BigInt]) -> Self {
        let torsion: Vec<BigInt> = factors.iter().filter(|d| !d.is_one()).cloned().collect();
        debug_assert!(torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        AbelianGroup { rank, torsion }
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Number of even invariant factors: the F₂-rank of the 2-torsion.
    pub fn two_torsion_rank(&self) -> usize {
        self.torsion.iter().filter(|d| d.is_even()).count()
    }

    /// Whether a `ℤ/4` summand occurs in the primary decomposition.
    pub fn has_z4_summand(&self) -> bool {
        self.torsion.iter().any(|d| two_adic_valuation(d) == 2)
    }

    /// Invariant factor form, repeated factors grouped: `Z^15+Z_2`,
    /// `Z_2^13+Z_4`, `0` for the trivial group.
    pub fn canonical_string(&self) -> String {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        push_grouped(&mut parts, &self.torsion);
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// Primary decomposition: every factor split into prime powers, sorted
    /// by prime then exponent.
    pub fn primary_string(&self) -> String {
        let mut powers: Vec<(BigInt, u32)> = Vec::new();
        for d in &self.torsion {
            powers.extend(prime_power_factors(d));
        }
        powers.sort();
        let values: Vec<BigInt> = powers.iter().map(|(p, e)| num_traits::pow(p.clone(), *e as usize)).collect();
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        push_grouped(&mut parts, &values);
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

fn push_grouped(parts: &mut Vec<String>, values: &[BigInt]) {
    let mut i = 0;
    while i < values.len() {
        let mut j = i;
        while j < values.len() && values[j] == values[i] {
            j += 1;
        }
        match j - i {
            1 => parts.push(format!("Z_{}", values[i])),
            k => parts.push(format!("Z_{}^{k}", values[i])),
        }
        i = j;
    }
}

fn two_adic_valuation(d: &BigInt) -> u64 {
    d.trailing_zeros().unwrap_or(0)
}

fn prime_power_factors(d: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    let mut n = d.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeHomology {
    pub group: AbelianGroup,
    /// Betti number.
    pub b: usize,
    /// Number of even invariant factors.
    pub tau: usize,
    /// `dim H_k(·, F₂)`, from elimination over F₂.
    pub mod2_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub degrees: [DegreeHomology; 3],
}

impl HomologyProfile {
    pub fn group(&self, k: usize) -> &AbelianGroup {
        &self.degrees[k].group
    }

    pub fn betti(&self, k: usize) -> usize {
        self.degrees[k].b
    }

    pub fn tau(&self, k: usize) -> usize {
        tau(self, k)
    }

    pub fn mod2_rank(&self, k: usize) -> usize {
        self.degrees[k].mod2_rank
    }

    /// Universal coefficients: `dim H_k(F₂) = b_k + τ_k + τ_{k−1}` for all `k`.
    pub fn uct_consistent(&self) -> bool {
        (0..3).all(|k| {
            let prev = if k == 0 { 0 } else { self.degrees[k - 1].tau };
            self.degrees[k].mod2_rank == self.degrees[k].b + self.degrees[k].tau + prev
        })
    }
}

/// `τ_k`, the number of even invariant factors in degree `k` (0 outside 0..=2).
pub fn tau(profile: &HomologyProfile, k: usize) -> usize {
    profile.degrees.get(k).map_or(0, |d| d.tau)
}

/// `H_k = ker d_k / im d_{k+1}` for `k = 0, 1, 2`.
///
/// `ker d_k` is a direct summand of `C_k` (its quotient embeds in the free
/// module `C_{k−1}`), so the torsion of `H_k` is read off the invariant
/// factors of `d_{k+1}` directly.
pub fn homology(cx: &ZComplex) -> Result<HomologyProfile> {
    let [n0, n1, n2] = cx.ranks;
    if cx.d1.shape() != (n0, n1) || cx.d2.shape() != (n1, n2) {
        return Err(Error::Dimension("boundary shapes do not match ranks".into()));
    }
    if !cx.is_chain_complex() {
        return Err(Error::NonZeroSquare);
    }
    let s1 = invariant_factors_sparse(&cx.d1);
    let s2 = invariant_factors_sparse(&cx.d2);
    let (r1, r2) = (s1.rank(), s2.rank());
    let (q1, q2) = (rank_mod2_sparse(&cx.d1), rank_mod2_sparse(&cx.d2));
    let groups = [
        AbelianGroup::from_factors(n0 - r1, &s1.invariant_factors),
        AbelianGroup::from_factors(n1 - r1 - r2, &s2.invariant_factors),
        AbelianGroup::free(n2 - r2),
    ];
    let mod2 = [n0 - q1, n1 - q1 - q2, n2 - q2];
    let degrees = std::array::from_fn(|k| {
        let g = groups[k].clone();
        DegreeHomology { b: g.rank, tau: g.two_torsion_rank(), mod2_rank: mod2[k], group: g }
    });
    Ok(HomologyProfile { degrees })
}

/// Only the F₂ dimensions `dim H_k(·, F₂)`, skipping all integer work.
pub fn mod2_betti(cx: &ZComplex) -> [usize; 3] {
    let [n0, n1, n2] = cx.ranks;
    let (q1, q2) = (rank_mod2_sparse(&cx.d1), rank_mod2_sparse(&cx.d2));
    [n0 - q1, n1 - q1 - q2, n2 - q2]
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ComplexJson {
    ranks: [usize; 3],
    d1: serde_json::Value,
    d2: serde_json::Value,
    #[serde(default)]
    decorated: bool,
}

#[derive(Debug, Clone)]
pub enum AbstractComplex {
    Plain(ZComplex),
    Decorated(DecoratedComplex),
}

fn plain_matrix(v: &serde_json::Value, rows: usize, cols: usize, name: &str) -> Result<Matrix<i64>> {
    let entries: Vec<Vec<i64>> =
        serde_json::from_value(v.clone()).map_err(|e| Error::Malformed(format!("{name}: {e}")))?;
    if rows > 0 && cols == 0 && entries.is_empty() {
        return Ok(Matrix::zeros(rows, 0));
    }
    Matrix::from_rows_with_shape(rows, cols, entries).map_err(|e| Error::Dimension(format!("{name}: {e}")))
}

fn decorated_matrix(v: &serde_json::Value, rows: usize, cols: usize, name: &str) -> Result<Matrix<GroupRingElem>> {
    let entries: Vec<Vec<[i64; 2]>> =
        serde_json::from_value(v.clone()).map_err(|e| Error::Malformed(format!("{name}: {e}")))?;
    if rows > 0 && cols == 0 && entries.is_empty() {
        return Ok(Matrix::zeros(rows, 0));
    }
    let entries = entries
        .into_iter()
        .map(|r| r.into_iter().map(|[a, b]| GroupRingElem::new(a, b)).collect())
        .collect();
    Matrix::from_rows_with_shape(rows, cols, entries).map_err(|e| Error::Dimension(format!("{name}: {e}")))
}

/// Reads `{ "ranks": [n0, n1, n2], "d1": [[…]], "d2": [[…]], "decorated": bool }`.
/// Decorated entries are `[c0, c1]` pairs meaning `c0 + c1·t`.
pub fn load_abstract_complex(json: &str) -> Result<AbstractComplex> {
    let raw: ComplexJson = serde_json::from_str(json).map_err(|e| Error::Malformed(e.to_string()))?;
    let [n0, n1, n2] = raw.ranks;
    if raw.decorated {
        let d1 = decorated_matrix(&raw.d1, n0, n1, "d1")?;
        let d2 = decorated_matrix(&raw.d2, n1, n2, "d2")?;
        Ok(AbstractComplex::Decorated(DecoratedComplex::new(raw.ranks, d1, d2)?))
    } else {
        let d1 = plain_matrix(&raw.d1, n0, n1, "d1")?;
        let d2 = plain_matrix(&raw.d2, n1, n2, "d2")?;
        Ok(AbstractComplex::Plain(ZComplex::new(raw.ranks, d1, d2)?))
    }
}
