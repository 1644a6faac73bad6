//! Covariance estimation, forward-backward smoothing, and eigen-spacing
//! diagnostics.

use nalgebra::{Complex, DMatrix, DVector};

use crate::array::{steering_matrix, ArrayConfig, Scenario, SnapshotMatrix};
use crate::error::{Error, Result};
use crate::scalar::{real, Scalar};

/// Snapshots per frame for frame-indexed diagnostics.
pub const FRAME_SNAPSHOTS: usize = 200;

/// Which estimator produced a covariance matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CovKind {
    Sample,
    FbSmoothed,
}

/// Hermitian M x M covariance matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CovMatrix<T: Scalar> {
    data: DMatrix<Complex<T>>,
    kind: CovKind,
}

impl<T: Scalar> CovMatrix<T> {
    /// Wrap a matrix, checking squareness and Hermitian symmetry
    /// (relative tolerance 1e-10).
    pub fn from_matrix(data: DMatrix<Complex<T>>, kind: CovKind) -> Result<Self> {
        if !data.is_square() || data.nrows() == 0 {
            return Err(Error::domain(format!(
                "covariance must be square and non-empty, got {}x{}",
                data.nrows(),
                data.ncols()
            )));
        }
        let dev = (&data - data.adjoint()).norm();
        if dev > real::<T>(1e-10) * data.norm().max(T::one()) {
            return Err(Error::domain(format!(
                "matrix is not Hermitian (asymmetry {})",
                dev.to_f64().unwrap_or(f64::NAN)
            )));
        }
        Ok(Self { data, kind })
    }

    pub fn data(&self) -> &DMatrix<Complex<T>> {
        &self.data
    }

    pub fn kind(&self) -> CovKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.data.nrows()
    }

    /// Check positive semidefiniteness up to numerical noise:
    /// all eigenvalues at least `-1e-8` times the largest.
    pub fn validate_psd(&self) -> Result<()> {
        let eigs = sorted_eigenvalues(self);
        let floor = -real::<T>(1e-8) * eigs[0].max(T::zero());
        if eigs[eigs.len() - 1] < floor {
            return Err(Error::domain(format!(
                "covariance is not positive semidefinite (eigenvalue {})",
                eigs[eigs.len() - 1].to_f64().unwrap_or(f64::NAN)
            )));
        }
        Ok(())
    }

    /// Deviation from persymmetry, `|| J conj(R) J - R ||_F`.
    pub fn persymmetry_deviation(&self) -> T {
        (exchange_conjugate(&self.data) - &self.data).norm()
    }
}

/// Mean-subtracted sample covariance
/// `R_X = (1/Q) (X - mean) (X - mean)^H`. Requires at least two snapshots.
pub fn sample_covariance<T: Scalar>(x: &SnapshotMatrix<T>) -> Result<CovMatrix<T>> {
    let q = x.num_snapshots();
    if q < 2 {
        return Err(Error::degenerate(format!(
            "sample covariance needs at least 2 snapshots, got {q}"
        )));
    }
    let data = x.data();
    let m = x.num_elements();
    let inv_q = Complex::new(T::one() / real(q as f64), T::zero());
    let mut centered = data.clone();
    for row in 0..m {
        let mean: Complex<T> = data.row(row).iter().copied().sum::<Complex<T>>() * inv_q;
        for col in 0..q {
            centered[(row, col)] -= mean;
        }
    }
    let cov = &centered * centered.adjoint() * inv_q;
    CovMatrix::from_matrix(hermitize(&cov), CovKind::Sample)
}

/// Forward-backward smoothing `R = (R_X + J conj(R_X) J) / 2`.
///
/// The result is persymmetric and the map is idempotent; trace and positive
/// semidefiniteness are preserved.
pub fn fb_smooth<T: Scalar>(r: &CovMatrix<T>) -> CovMatrix<T> {
    let half = Complex::new(real::<T>(0.5), T::zero());
    let smoothed = (r.data() + exchange_conjugate(r.data())) * half;
    CovMatrix {
        data: hermitize(&smoothed),
        kind: CovKind::FbSmoothed,
    }
}

/// Eigenvalues of a Hermitian covariance, sorted in descending order.
pub fn sorted_eigenvalues<T: Scalar>(r: &CovMatrix<T>) -> DVector<T> {
    let mut vals: Vec<T> = r
        .data()
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    // stable sort keeps tie order deterministic
    vals.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    DVector::from_vec(vals)
}

/// Eigen-spacing ratio `r = (s1 - s2) / (s2 - s3)` with a flagged infinity
/// when the denominator collapses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacingRatio<T> {
    pub value: T,
    /// True when `s2 - s3` fell below 1e-12 and `value` is the +inf sentinel.
    pub degenerate: bool,
}

/// Spacing ratio of a single covariance (its top three eigenvalues).
pub fn eigen_spacing_ratio<T: Scalar>(r: &CovMatrix<T>) -> Result<SpacingRatio<T>> {
    let eigs = sorted_eigenvalues(r);
    spacing_ratio_from_sorted(eigs.as_slice())
}

/// Spacing ratio from an already-sorted (descending) spectrum.
pub fn spacing_ratio_from_sorted<T: Scalar>(sorted: &[T]) -> Result<SpacingRatio<T>> {
    if sorted.len() < 3 {
        return Err(Error::domain(format!(
            "eigen-spacing ratio needs at least 3 eigenvalues, got {}",
            sorted.len()
        )));
    }
    let num = sorted[0] - sorted[1];
    let den = sorted[1] - sorted[2];
    if den < real(1e-12) {
        Ok(SpacingRatio {
            value: real(f64::INFINITY),
            degenerate: true,
        })
    } else {
        Ok(SpacingRatio {
            value: num / den,
            degenerate: false,
        })
    }
}

/// Frame-averaged spacing ratio: average each sorted value across frames
/// first, then form the ratio.
pub fn frame_averaged_spacing_ratio<T: Scalar>(frames: &[Vec<T>]) -> Result<SpacingRatio<T>> {
    if frames.is_empty() {
        return Err(Error::degenerate("no frames to average".to_string()));
    }
    let len = frames[0].len();
    if frames.iter().any(|f| f.len() != len) {
        return Err(Error::domain("frames have inconsistent spectrum sizes".to_string()));
    }
    let inv = T::one() / real(frames.len() as f64);
    let mean: Vec<T> = (0..len)
        .map(|i| frames.iter().fold(T::zero(), |acc, f| acc + f[i]) * inv)
        .collect();
    spacing_ratio_from_sorted(&mean)
}

/// Exact population covariance `A Rs A^H + diag(noise)` of a scenario,
/// the large-Q limit of [`sample_covariance`]. Not smoothed; pass the result
/// through [`fb_smooth`] for the smoothed limit.
pub fn population_covariance<T: Scalar>(
    cfg: &ArrayConfig<T>,
    sc: &Scenario<T>,
) -> Result<CovMatrix<T>> {
    let m = cfg.num_elements();
    if sc.noise_variances().len() != m {
        return Err(Error::domain(format!(
            "noise variance list has {} entries for an array of {} elements",
            sc.noise_variances().len(),
            m
        )));
    }
    let mut data = DMatrix::<Complex<T>>::zeros(m, m);
    if sc.num_sources() > 0 {
        let a = steering_matrix(cfg, sc.angles_deg())?;
        let power = sc.source_power();
        let rs = sc.correlation().map(|c| c.scale(power));
        data = &a * rs * a.adjoint();
    }
    for i in 0..m {
        data[(i, i)] += Complex::new(sc.noise_variances()[i], T::zero());
    }
    CovMatrix::from_matrix(hermitize(&data), CovKind::Sample)
}

/// `(X + X^H) / 2`, removing round-off asymmetry.
pub(crate) fn hermitize<T: Scalar>(x: &DMatrix<Complex<T>>) -> DMatrix<Complex<T>> {
    let half = Complex::new(real::<T>(0.5), T::zero());
    (x + x.adjoint()) * half
}

/// `J conj(X) J`: reverse both index orders and conjugate.
fn exchange_conjugate<T: Scalar>(x: &DMatrix<Complex<T>>) -> DMatrix<Complex<T>> {
    let n = x.nrows();
    DMatrix::from_fn(n, n, |i, j| x[(n - 1 - i, n - 1 - j)].conj())
}
