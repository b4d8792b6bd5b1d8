//! Invariants of double covers, identity checks and scans over `ω`.

mod milnor;
mod report;
mod scan;

pub use milnor::{milnor_minus_one, MilnorReport};
pub use report::{
    report_json, report_text, Analyzer, ArrangementSummary, DegreeReport, Identities, IdentityFailure,
    InvariantReport, Verification,
};
pub use scan::{
    conjecture_check, default_omega_set, scan, scan_tsv, ConjectureReport, ConjectureRow, ConjectureVerdict, OmegaSet,
    ScanRow, ScanSummary,
    DEFAULT_RANDOM_SAMPLES, FULL_SCAN_MAX_LINES,
};
