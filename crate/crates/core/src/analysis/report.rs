use serde::Serialize;

use crate::aomoto::{aomoto_ranks, OSAlgebraF2, OmegaClass};
use crate::arith::OrderedField;
use crate::error::{Error, Result};
use crate::geometry::{Arrangement, FacePoset, IntersectionData};
use crate::homology::{homology, AbelianGroup, HomologyProfile};
use crate::salvetti::{decorate, CellComplex};

/// Combinatorial summary of an arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrangementSummary {
    pub name: String,
    pub lines: usize,
    pub labels: Vec<usize>,
    pub points: usize,
    /// `(multiplicity, count)` pairs.
    pub multiplicities: Vec<(usize, usize)>,
    pub parallel_classes: Vec<usize>,
    pub chambers: usize,
    pub edges: usize,
    pub vertices: usize,
    pub cells: [usize; 3],
}

/// Everything about an arrangement that does not depend on `ω`.
#[derive(Debug, Clone)]
pub struct Analyzer {
    summary: ArrangementSummary,
    os: OSAlgebraF2,
    complex: CellComplex,
    untwisted: HomologyProfile,
    b2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub k: usize,
    pub alpha: usize,
    pub rho: usize,
    pub tau: usize,
    pub b_x: usize,
    pub b_cover: usize,
    /// `dim H_k(X^ω, F₂)`.
    pub mod2_cover: usize,
    pub h_cover: AbelianGroup,
    pub h_local: AbelianGroup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Identities {
    /// `α_k = ρ_k + τ_k + τ_{k−1}`.
    pub main: bool,
    /// `b_k(X^ω) = b_k(X) + ρ_k`.
    pub leray: bool,
    /// `dim H_k(X^ω, F₂) = b_k(X) + α_k`.
    pub mod2: bool,
    /// `dim H_k(X^ω, F₂) = b_k(X^ω) + τ_k + τ_{k−1}`.
    pub uct: bool,
    /// `ρ_k ≤ α_k`.
    pub ps: bool,
    /// `b_k(X^ω) = b_k(X) + α_k − τ_k − τ_{k−1}`.
    pub betti: bool,
}

impl Identities {
    pub fn all(&self) -> bool {
        self.main && self.leray && self.mod2 && self.uct && self.ps && self.betti
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: &'static str,
    pub k: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub omega: OmegaClass,
    pub degrees: [DegreeReport; 3],
    pub identities: Identities,
    /// In order of identity, then degree.
    pub failures: Vec<IdentityFailure>,
}

impl InvariantReport {
    pub fn alpha(&self, k: usize) -> usize {
        self.degrees[k].alpha
    }

    pub fn rho(&self, k: usize) -> usize {
        self.degrees[k].rho
    }

    pub fn tau(&self, k: usize) -> usize {
        self.degrees[k].tau
    }

    pub fn first_failure(&self) -> Option<&IdentityFailure> {
        self.failures.first()
    }
}

impl Analyzer {
    pub fn new<F: OrderedField>(name: &str, arr: &Arrangement<F>) -> Result<Self> {
        let data = IntersectionData::compute(arr);
        if !data.pair_count_consistent() {
            return Err(Error::FaceCount("pairs of lines not accounted for by points and parallel classes".into()));
        }
        let poset = FacePoset::compute(arr, &data)?;
        let complex = CellComplex::build(&poset);
        let untwisted = homology(&complex.untwisted())?;
        let summary = ArrangementSummary {
            name: name.to_string(),
            lines: arr.len(),
            labels: arr.labels(),
            points: data.points.len(),
            multiplicities: data.multiplicity_histogram(),
            parallel_classes: data.parallel_classes.iter().map(Vec::len).collect(),
            chambers: poset.chambers.len(),
            edges: poset.edges.len(),
            vertices: poset.vertices.len(),
            cells: complex.ranks(),
        };
        Ok(Analyzer { summary, os: OSAlgebraF2::build(&data), complex, untwisted, b2: data.b2() })
    }

    pub fn summary(&self) -> &ArrangementSummary {
        &self.summary
    }

    pub fn num_lines(&self) -> usize {
        self.summary.lines
    }

    pub fn os_algebra(&self) -> &OSAlgebraF2 {
        &self.os
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn untwisted(&self) -> &HomologyProfile {
        &self.untwisted
    }

    /// `Σ_p (m_p − 1)` from the intersection data.
    pub fn b2(&self) -> usize {
        self.b2
    }

    /// The complement has torsion-free homology `(ℤ, ℤ^n, ℤ^{b₂})`.
    pub fn untwisted_is_standard(&self) -> bool {
        let h = &self.untwisted;
        (0..3).all(|k| h.group(k).is_torsion_free())
            && [h.betti(0), h.betti(1), h.betti(2)] == [1, self.num_lines(), self.b2]
    }

    pub fn analyze(&self, omega: &OmegaClass) -> Result<InvariantReport> {
        omega.check_len(self.num_lines())?;
        let aomoto = aomoto_ranks(&self.os, omega)?;
        let decorated = decorate(&self.complex, omega)?;
        let local = homology(&decorated.specialize(-1))?;
        let cover = homology(&decorated.double_cover())?;

        let degrees: [DegreeReport; 3] = std::array::from_fn(|k| DegreeReport {
            k,
            alpha: aomoto.alpha[k],
            rho: local.betti(k),
            tau: cover.tau(k),
            b_x: self.untwisted.betti(k),
            b_cover: cover.betti(k),
            mod2_cover: cover.mod2_rank(k),
            h_cover: cover.group(k).clone(),
            h_local: local.group(k).clone(),
        });

        let mut failures = Vec::new();
        let tau_prev = |k: usize| if k == 0 { 0 } else { degrees[k - 1].tau };
        type Check = fn(&DegreeReport, usize) -> (bool, String);
        let checks: [(&'static str, Check); 6] = [
            ("main", |d, tp| {
                (d.alpha == d.rho + d.tau + tp, format!("alpha={} rho={} tau={} tau_prev={}", d.alpha, d.rho, d.tau, tp))
            }),
            ("leray", |d, _| (d.b_cover == d.b_x + d.rho, format!("b_cover={} b_X={} rho={}", d.b_cover, d.b_x, d.rho))),
            ("mod2", |d, _| {
                (d.mod2_cover == d.b_x + d.alpha, format!("mod2_cover={} b_X={} alpha={}", d.mod2_cover, d.b_x, d.alpha))
            }),
            ("uct", |d, tp| {
                (
                    d.mod2_cover == d.b_cover + d.tau + tp,
                    format!("mod2_cover={} b_cover={} tau={} tau_prev={}", d.mod2_cover, d.b_cover, d.tau, tp),
                )
            }),
            ("ps", |d, _| (d.rho <= d.alpha, format!("rho={} alpha={}", d.rho, d.alpha))),
            ("betti", |d, tp| {
                let rhs = (d.b_x + d.alpha) as i64 - d.tau as i64 - tp as i64;
                (d.b_cover as i64 == rhs, format!("b_cover={} expected={rhs}", d.b_cover))
            }),
        ];
        let mut flags = [true; 6];
        for (ci, (name, check)) in checks.iter().enumerate() {
            for (k, d) in degrees.iter().enumerate() {
                let (ok, detail) = check(d, tau_prev(k));
                if !ok {
                    flags[ci] = false;
                    failures.push(IdentityFailure { identity: name, k, detail });
                }
            }
        }
        let identities = Identities {
            main: flags[0],
            leray: flags[1],
            mod2: flags[2],
            uct: flags[3],
            ps: flags[4],
            betti: flags[5],
        };
        Ok(InvariantReport { omega: omega.clone(), degrees, identities, failures })
    }

    /// Passes iff every identity holds in every degree.
    pub fn verify(&self, omega: &OmegaClass) -> Result<Verification> {
        let report = self.analyze(omega)?;
        Ok(match report.first_failure() {
            None => Verification::Pass(Box::new(report)),
            Some(f) => Verification::Fail { failure: f.clone(), report: Box::new(report) },
        })
    }
}

#[derive(Debug, Clone)]
pub enum Verification {
    Pass(Box<InvariantReport>),
    Fail { failure: IdentityFailure, report: Box<InvariantReport> },
}

impl Verification {
    pub fn passed(&self) -> bool {
        matches!(self, Verification::Pass(_))
    }

    pub fn report(&self) -> &InvariantReport {
        match self {
            Verification::Pass(r) => r,
            Verification::Fail { report, .. } => report,
        }
    }
}

#[derive(Debug, Serialize)]
struct DegreeJson {
    k: usize,
    alpha: usize,
    rho: usize,
    tau: usize,
    #[serde(rename = "b_X")]
    b_x: usize,
    b_cover: usize,
    mod2_cover: usize,
    #[serde(rename = "H_cover")]
    h_cover: String,
    #[serde(rename = "H_local")]
    h_local: String,
    #[serde(rename = "H_cover_primary")]
    h_cover_primary: String,
    #[serde(rename = "H_local_primary")]
    h_local_primary: String,
}

#[derive(Debug, Serialize)]
struct ReportJson<'a> {
    arrangement: &'a ArrangementSummary,
    omega: Vec<usize>,
    degrees: Vec<DegreeJson>,
    identities: Identities,
}

/// JSON rendering of a report.
pub fn report_json(summary: &ArrangementSummary, report: &InvariantReport) -> serde_json::Value {
    let degrees = report
        .degrees
        .iter()
        .map(|d| DegreeJson {
            k: d.k,
            alpha: d.alpha,
            rho: d.rho,
            tau: d.tau,
            b_x: d.b_x,
            b_cover: d.b_cover,
            mod2_cover: d.mod2_cover,
            h_cover: d.h_cover.canonical_string(),
            h_local: d.h_local.canonical_string(),
            h_cover_primary: d.h_cover.primary_string(),
            h_local_primary: d.h_local.primary_string(),
        })
        .collect();
    serde_json::to_value(ReportJson {
        arrangement: summary,
        omega: report.omega.indices(),
        degrees,
        identities: report.identities,
    })
    .expect("report serializes")
}

/// Plain-text table of a report.
pub fn report_text(summary: &ArrangementSummary, report: &InvariantReport) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "arrangement {}: {} lines, {} points, cells {:?}\n",
        summary.name, summary.lines, summary.points, summary.cells
    ));
    s.push_str(&format!("omega = {} (e_i for i in {:?})\n", report.omega, report.omega.indices()));
    s.push_str("k  alpha  rho  tau  b_X  b_cover  H_k(cover)            H_k(X, L)\n");
    for d in &report.degrees {
        s.push_str(&format!(
            "{}  {:>5}  {:>3}  {:>3}  {:>3}  {:>7}  {:<20}  {}\n",
            d.k,
            d.alpha,
            d.rho,
            d.tau,
            d.b_x,
            d.b_cover,
            d.h_cover.canonical_string(),
            d.h_local.canonical_string()
        ));
    }
    let id = report.identities;
    s.push_str(&format!(
        "identities: main={} leray={} mod2={} uct={} ps={} betti={}\n",
        id.main, id.leray, id.mod2, id.uct, id.ps, id.betti
    ));
    s
}
