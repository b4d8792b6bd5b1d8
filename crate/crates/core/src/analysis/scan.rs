use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::report::{Analyzer, Identities, InvariantReport};
use crate::aomoto::OmegaClass;
use crate::error::Result;
use crate::homology::AbelianGroup;

/// Up to this many lines the default scan is exhaustive.
pub const FULL_SCAN_MAX_LINES: usize = 12;
pub const DEFAULT_RANDOM_SAMPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OmegaSet {
    All,
    /// Random classes plus `ω = Σ e_i` and every interval `e_i + … + e_j`.
    Random { count: usize, seed: u64 },
    Explicit(Vec<OmegaClass>),
}

pub fn default_omega_set(n: usize) -> OmegaSet {
    if n <= FULL_SCAN_MAX_LINES {
        OmegaSet::All
    } else {
        OmegaSet::Random { count: DEFAULT_RANDOM_SAMPLES, seed: 0 }
    }
}

impl OmegaSet {
    /// Distinct classes, sorted by bit pattern.
    pub fn classes(&self, n: usize) -> Result<Vec<OmegaClass>> {
        let mut set = BTreeSet::new();
        match self {
            OmegaSet::All => {
                assert!(n < 63, "exhaustive scan over {n} lines");
                for mask in 1..(1u64 << n) {
                    set.insert(OmegaClass::from_mask(n, mask)?);
                }
            }
            OmegaSet::Random { count, seed } => {
                set.insert(OmegaClass::all(n)?);
                for i in 0..n {
                    for j in i..n {
                        set.insert(OmegaClass::new((0..n).map(|l| (i..=j).contains(&l)).collect())?);
                    }
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut drawn = 0;
                while drawn < *count {
                    let bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
                    if bits.iter().any(|&b| b) {
                        set.insert(OmegaClass::new(bits)?);
                        drawn += 1;
                    }
                }
            }
            OmegaSet::Explicit(list) => {
                for w in list {
                    w.check_len(n)?;
                    set.insert(w.clone());
                }
            }
        }
        Ok(set.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub omega: String,
    pub alpha1: usize,
    pub rho1: usize,
    pub tau1: usize,
    /// Invariant factors of the torsion of `H_1(X, L_ω)`.
    #[serde(serialize_with = "ser_factors")]
    pub torsion_local: Vec<BigInt>,
    pub has_z4: bool,
    #[serde(rename = "H1_cover")]
    pub h1_cover: String,
    #[serde(rename = "H1_local")]
    pub h1_local: String,
    pub identities: Identities,
}

fn ser_factors<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|f| f.to_string()))
}

impl ScanRow {
    fn from_report(r: &InvariantReport) -> Self {
        let local: &AbelianGroup = &r.degrees[1].h_local;
        ScanRow {
            omega: r.omega.to_string(),
            alpha1: r.alpha(1),
            rho1: r.rho(1),
            tau1: r.tau(1),
            torsion_local: local.torsion.clone(),
            has_z4: local.has_z4_summand(),
            h1_cover: r.degrees[1].h_cover.canonical_string(),
            h1_local: local.canonical_string(),
            identities: r.identities,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub rows: Vec<ScanRow>,
    pub total: usize,
    pub with_two_torsion: usize,
    pub with_z4: usize,
    pub identity_failures: usize,
}

pub fn scan(analyzer: &Analyzer, omegas: &OmegaSet) -> Result<ScanSummary> {
    let classes = omegas.classes(analyzer.num_lines())?;
    let rows = classes
        .par_iter()
        .map(|w| analyzer.analyze(w).map(|r| ScanRow::from_report(&r)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanSummary {
        total: rows.len(),
        with_two_torsion: rows.iter().filter(|r| r.tau1 > 0).count(),
        with_z4: rows.iter().filter(|r| r.has_z4).count(),
        identity_failures: rows.iter().filter(|r| !r.identities.all()).count(),
        rows,
    })
}

pub fn scan_tsv(summary: &ScanSummary) -> String {
    let mut s = String::from("omega\talpha1\trho1\ttau1\ttorsionL\thasZ4\tH1cover\n");
    for r in &summary.rows {
        let torsion: Vec<String> = r.torsion_local.iter().map(|f| f.to_string()).collect();
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.omega,
            r.alpha1,
            r.rho1,
            r.tau1,
            if torsion.is_empty() { "-".to_string() } else { torsion.join(",") },
            r.has_z4,
            r.h1_cover
        ));
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub omega: String,
    /// `H_1(X^ω)` has 2-torsion.
    pub two_torsion: bool,
    /// `H_1(X, L_ω)` has a `ℤ_4` summand.
    pub z4: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConjectureVerdict {
    Consistent,
    /// Classes where exactly one of the two flags holds.
    Counterexamples(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub rows: Vec<ConjectureRow>,
    pub verdict: ConjectureVerdict,
}

impl ConjectureReport {
    pub fn is_consistent(&self) -> bool {
        self.verdict == ConjectureVerdict::Consistent
    }

    pub fn from_scan(summary: &ScanSummary) -> Self {
        let rows: Vec<ConjectureRow> = summary
            .rows
            .iter()
            .map(|r| ConjectureRow { omega: r.omega.clone(), two_torsion: r.tau1 > 0, z4: r.has_z4 })
            .collect();
        let bad: Vec<String> = rows.iter().filter(|r| r.two_torsion != r.z4).map(|r| r.omega.clone()).collect();
        let verdict = if bad.is_empty() { ConjectureVerdict::Consistent } else { ConjectureVerdict::Counterexamples(bad) };
        ConjectureReport { rows, verdict }
    }
}

/// Compares "`H_1(X^ω)` has 2-torsion" with "`H_1(X, L_ω)` has a `ℤ_4` summand".
pub fn conjecture_check(analyzer: &Analyzer, omegas: &OmegaSet) -> Result<ConjectureReport> {
    Ok(ConjectureReport::from_scan(&scan(analyzer, omegas)?))
}
