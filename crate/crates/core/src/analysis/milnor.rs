use serde::Serialize;

use super::report::Analyzer;
use crate::aomoto::OmegaClass;
use crate::arith::OrderedField;
use crate::error::{Error, Result};
use crate::geometry::{decone, CentralArrangement};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MilnorReport {
    pub planes: usize,
    pub infinity: usize,
    pub alpha: [usize; 3],
    pub tau: [usize; 3],
    pub rho: [usize; 3],
    /// `α_k − τ_k − τ_{k−1}` for `k = 0, 1, 2`.
    pub eigenspace: [i64; 3],
}

/// Dimensions of the `−1` eigenspace of the monodromy on the Milnor fiber
/// homology of an even central arrangement, read off a deconing.
/// `infinity` is 1-based and defaults to the last plane.
pub fn milnor_minus_one<F: OrderedField>(
    central: &CentralArrangement<F>,
    infinity: Option<usize>,
) -> Result<MilnorReport> {
    let planes = central.len();
    if planes % 2 == 1 {
        return Err(Error::OddArrangement(planes));
    }
    let infinity = infinity.unwrap_or(planes);
    let affine = decone(central, infinity)?;
    let analyzer = Analyzer::new("decone", &affine)?;
    let report = analyzer.analyze(&OmegaClass::all(affine.len())?)?;
    let alpha = std::array::from_fn(|k| report.alpha(k));
    let tau: [usize; 3] = std::array::from_fn(|k| report.tau(k));
    let rho = std::array::from_fn(|k| report.rho(k));
    let eigenspace = std::array::from_fn(|k| {
        alpha[k] as i64 - tau[k] as i64 - if k == 0 { 0 } else { tau[k - 1] as i64 }
    });
    Ok(MilnorReport { planes, infinity, alpha, tau, rho, eigenspace })
}
