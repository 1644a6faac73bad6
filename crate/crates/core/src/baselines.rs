//! Classical eigenvalue-based enumerators used as comparison baselines.

use crate::covariance::{sorted_eigenvalues, CovMatrix};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which baseline criterion to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaselineKind {
    /// Minimum description length over the sorted spectrum.
    Mdl,
    /// Akaike information criterion over the sorted spectrum.
    Aic,
    /// Largest consecutive eigenvalue ratio, with a flat-spectrum guard.
    EigenGap,
}

/// No gap below this ratio counts as a detection.
const EIGEN_GAP_GUARD: f64 = 1.5;

/// Eigenvalues are clamped here before taking logarithms.
const EIG_FLOOR: f64 = 1e-12;

/// Estimate the source count from a covariance spectrum.
///
/// MDL and AIC use the standard geometric-to-arithmetic mean likelihood of
/// the `M - k` smallest eigenvalues; the eigen-gap variant returns the index
/// of the largest consecutive ratio. All variants return a value in
/// `[0, M - 1]`.
pub fn enumerate_baseline<T: Scalar>(
    r: &CovMatrix<T>,
    num_snapshots: usize,
    kind: BaselineKind,
) -> Result<usize> {
    let m = r.size();
    if m < 2 {
        return Err(Error::domain(format!(
            "baseline enumeration needs at least 2 sensors, got {m}"
        )));
    }
    let eigs: Vec<f64> = sorted_eigenvalues(r)
        .iter()
        .map(|v| v.to_f64().unwrap_or(f64::NAN).max(EIG_FLOOR))
        .collect();
    match kind {
        BaselineKind::EigenGap => Ok(eigen_gap(&eigs)),
        BaselineKind::Mdl | BaselineKind::Aic => {
            if num_snapshots < m {
                return Err(Error::domain(format!(
                    "information criteria need at least M = {m} snapshots, got {num_snapshots}"
                )));
            }
            Ok(information_criterion(&eigs, num_snapshots, kind))
        }
    }
}

fn eigen_gap(eigs: &[f64]) -> usize {
    let mut best = 0usize;
    let mut best_ratio = EIGEN_GAP_GUARD;
    for i in 0..eigs.len() - 1 {
        let ratio = eigs[i] / eigs[i + 1];
        if ratio > best_ratio {
            best_ratio = ratio;
            best = i + 1;
        }
    }
    best
}

fn information_criterion(eigs: &[f64], q: usize, kind: BaselineKind) -> usize {
    let m = eigs.len();
    let qf = q as f64;
    let mut best_k = 0usize;
    let mut best_score = f64::INFINITY;
    for k in 0..m {
        let noise = &eigs[k..];
        let n = noise.len() as f64;
        let geo = noise.iter().map(|&v| v.ln()).sum::<f64>() / n;
        let arith = noise.iter().sum::<f64>() / n;
        let log_ratio = geo - arith.max(EIG_FLOOR).ln();
        let dof = (k * (2 * m - k)) as f64;
        let score = match kind {
            BaselineKind::Aic => -2.0 * qf * n * log_ratio + 2.0 * dof,
            BaselineKind::Mdl => -qf * n * log_ratio + 0.5 * dof * qf.ln(),
            BaselineKind::EigenGap => unreachable!(),
        };
        if score < best_score {
            best_score = score;
            best_k = k;
        }
    }
    best_k
}

/// Stable label used in sweep outputs.
pub fn baseline_label(kind: BaselineKind) -> &'static str {
    match kind {
        BaselineKind::Mdl => "mdl",
        BaselineKind::Aic => "aic",
        BaselineKind::EigenGap => "eigengap",
    }
}
