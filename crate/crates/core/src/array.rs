//! Uniform linear array geometry and snapshot synthesis.
//!
//! Models K far-field narrowband sources impinging on a ULA of M isotropic
//! sensors. The sampled data matrix is `X = A S + W` where `A` collects the
//! steering vectors, `S` the source symbols, and `W` additive sensor noise.

use nalgebra::{Complex, DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::{real, Scalar};

/// ULA geometry: element count, inter-element spacing, carrier wavelength.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrayConfig<T: Scalar> {
    num_elements: usize,
    spacing: T,
    wavelength: T,
}

impl<T: Scalar> ArrayConfig<T> {
    /// Validated constructor. Requires `num_elements >= 2` and positive lengths.
    pub fn new(num_elements: usize, spacing: T, wavelength: T) -> Result<Self> {
        if num_elements < 2 {
            return Err(Error::domain(format!(
                "array needs at least 2 elements, got {num_elements}"
            )));
        }
        if spacing <= T::zero() || wavelength <= T::zero() {
            return Err(Error::domain(
                "spacing and wavelength must be positive".to_string(),
            ));
        }
        Ok(Self {
            num_elements,
            spacing,
            wavelength,
        })
    }

    /// Half-wavelength spaced array (`d = lambda / 2`), the usual setup.
    pub fn half_wavelength(num_elements: usize, wavelength: T) -> Result<Self> {
        Self::new(num_elements, wavelength / real(2.0), wavelength)
    }

    pub fn num_elements(&self) -> usize {
        self.num_elements
    }

    pub fn spacing(&self) -> T {
        self.spacing
    }

    pub fn wavelength(&self) -> T {
        self.wavelength
    }

    /// Same geometry with a different element count.
    pub fn with_num_elements(&self, num_elements: usize) -> Result<Self> {
        Self::new(num_elements, self.spacing, self.wavelength)
    }
}

impl<T: Scalar> Default for ArrayConfig<T> {
    /// Three elements at `d = 2 cm`, `lambda = 4 cm`.
    fn default() -> Self {
        Self {
            num_elements: 3,
            spacing: real(0.02),
            wavelength: real(0.04),
        }
    }
}

/// Ground-truth scene: source angles, pairwise correlation, SNR, snapshot
/// count, per-sensor noise variances, and the RNG seed.
///
/// The correlation matrix is Hermitian with unit diagonal and may be
/// rank-deficient (`rho = 1` fully coherent sources are admitted).
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario<T: Scalar> {
    angles_deg: Vec<T>,
    correlation: DMatrix<Complex<T>>,
    snr_db: T,
    num_snapshots: usize,
    noise_variances: Vec<T>,
    seed: u64,
}

impl<T: Scalar> Scenario<T> {
    /// Validated constructor.
    ///
    /// `noise_variances` has one entry per sensor; its length is checked
    /// against the array at synthesis time.
    pub fn new(
        angles_deg: Vec<T>,
        correlation: DMatrix<Complex<T>>,
        snr_db: T,
        num_snapshots: usize,
        noise_variances: Vec<T>,
        seed: u64,
    ) -> Result<Self> {
        let k = angles_deg.len();
        for (i, &a) in angles_deg.iter().enumerate() {
            validate_angle(a)?;
            for &b in &angles_deg[..i] {
                if a == b {
                    return Err(Error::domain(format!(
                        "source angles must be pairwise distinct, {} repeats",
                        a.to_f64().unwrap_or(f64::NAN)
                    )));
                }
            }
        }
        validate_correlation(&correlation, k)?;
        if num_snapshots == 0 {
            return Err(Error::domain("snapshot count must be positive".to_string()));
        }
        if noise_variances.is_empty() || noise_variances.iter().any(|&v| v <= T::zero()) {
            return Err(Error::domain(
                "noise variances must be a non-empty list of positive values".to_string(),
            ));
        }
        Ok(Self {
            angles_deg,
            correlation,
            snr_db,
            num_snapshots,
            noise_variances,
            seed,
        })
    }

    /// Sources sharing a common real correlation coefficient `rho`, white
    /// noise of variance `noise_variance` on all `num_sensors` sensors.
    pub fn equicorrelated(
        angles_deg: Vec<T>,
        rho: T,
        snr_db: T,
        num_snapshots: usize,
        num_sensors: usize,
        noise_variance: T,
        seed: u64,
    ) -> Result<Self> {
        let k = angles_deg.len();
        let correlation = DMatrix::from_fn(k, k, |i, j| {
            if i == j {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::new(rho, T::zero())
            }
        });
        Self::new(
            angles_deg,
            correlation,
            snr_db,
            num_snapshots,
            vec![noise_variance; num_sensors],
            seed,
        )
    }

    pub fn num_sources(&self) -> usize {
        self.angles_deg.len()
    }

    pub fn angles_deg(&self) -> &[T] {
        &self.angles_deg
    }

    pub fn correlation(&self) -> &DMatrix<Complex<T>> {
        &self.correlation
    }

    pub fn snr_db(&self) -> T {
        self.snr_db
    }

    pub fn num_snapshots(&self) -> usize {
        self.num_snapshots
    }

    pub fn noise_variances(&self) -> &[T] {
        &self.noise_variances
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        let mut sc = self.clone();
        sc.seed = seed;
        sc
    }

    pub fn with_snr_db(&self, snr_db: T) -> Self {
        let mut sc = self.clone();
        sc.snr_db = snr_db;
        sc
    }

    pub fn with_num_snapshots(&self, num_snapshots: usize) -> Result<Self> {
        if num_snapshots == 0 {
            return Err(Error::domain("snapshot count must be positive".to_string()));
        }
        let mut sc = self.clone();
        sc.num_snapshots = num_snapshots;
        Ok(sc)
    }

    /// Replace the source angles, keeping the correlation matrix. The new
    /// list must have the same length as the old one.
    pub fn with_angles_deg(&self, angles_deg: Vec<T>) -> Result<Self> {
        Self::new(
            angles_deg,
            self.correlation.clone(),
            self.snr_db,
            self.num_snapshots,
            self.noise_variances.clone(),
            self.seed,
        )
    }

    /// Replace the correlation with a common-coefficient matrix.
    pub fn with_equicorrelation(&self, rho: T) -> Result<Self> {
        let k = self.num_sources();
        let correlation = DMatrix::from_fn(k, k, |i, j| {
            if i == j {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::new(rho, T::zero())
            }
        });
        Self::new(
            self.angles_deg.clone(),
            correlation,
            self.snr_db,
            self.num_snapshots,
            self.noise_variances.clone(),
            self.seed,
        )
    }

    /// Rebuild the per-sensor noise list for a different sensor count.
    /// Only valid when the current noise profile is uniform (white).
    pub fn with_num_sensors(&self, num_sensors: usize) -> Result<Self> {
        let first = self.noise_variances[0];
        if self.noise_variances.iter().any(|&v| v != first) {
            return Err(Error::domain(
                "cannot resize a non-uniform noise profile".to_string(),
            ));
        }
        Self::new(
            self.angles_deg.clone(),
            self.correlation.clone(),
            self.snr_db,
            self.num_snapshots,
            vec![first; num_sensors],
            self.seed,
        )
    }

    /// Per-source signal power implied by the SNR convention:
    /// `snr_db = 10 log10(sigma_s^2 / mean(noise_variances))`.
    pub fn source_power(&self) -> T {
        let mean_noise = self
            .noise_variances
            .iter()
            .fold(T::zero(), |acc, &v| acc + v)
            / real(self.noise_variances.len() as f64);
        mean_noise * real::<T>(10.0).powf(self.snr_db / real(10.0))
    }
}

/// Complex M x Q received-data matrix, one column per snapshot.
#[derive(Debug, Clone, PartialEq)]
pub struct SnapshotMatrix<T: Scalar> {
    data: DMatrix<Complex<T>>,
}

impl<T: Scalar> SnapshotMatrix<T> {
    /// Wrap an existing data matrix. Must be non-empty.
    pub fn from_matrix(data: DMatrix<Complex<T>>) -> Result<Self> {
        if data.nrows() == 0 || data.ncols() == 0 {
            return Err(Error::degenerate("empty snapshot matrix".to_string()));
        }
        Ok(Self { data })
    }

    pub fn data(&self) -> &DMatrix<Complex<T>> {
        &self.data
    }

    pub fn num_elements(&self) -> usize {
        self.data.nrows()
    }

    pub fn num_snapshots(&self) -> usize {
        self.data.ncols()
    }

    pub fn into_inner(self) -> DMatrix<Complex<T>> {
        self.data
    }
}

/// Everything `synthesize` produced, kept separate for diagnostics: the
/// received data plus the source and noise matrices that formed it.
#[derive(Debug, Clone)]
pub struct SynthesisParts<T: Scalar> {
    /// `X = A S + W`, M x Q.
    pub snapshots: SnapshotMatrix<T>,
    /// Source symbol matrix `S`, K x Q.
    pub sources: DMatrix<Complex<T>>,
    /// Noise matrix `W`, M x Q.
    pub noise: DMatrix<Complex<T>>,
}

/// Steering vector `a(theta)` of the ULA: element m is
/// `exp(j * 2 pi / lambda * m * d * sin(theta))`.
pub fn steering_vector<T: Scalar>(cfg: &ArrayConfig<T>, angle_deg: T) -> Result<DVector<Complex<T>>> {
    validate_angle(angle_deg)?;
    let phase_step = phase_increment(cfg, angle_deg);
    Ok(DVector::from_fn(cfg.num_elements(), |m, _| {
        let phase = phase_step * real(m as f64);
        Complex::new(phase.cos(), phase.sin())
    }))
}

/// Steering matrix `A = [a(theta_1), ..., a(theta_K)]`, M x K.
pub fn steering_matrix<T: Scalar>(cfg: &ArrayConfig<T>, angles_deg: &[T]) -> Result<DMatrix<Complex<T>>> {
    if angles_deg.is_empty() {
        return Err(Error::domain("steering matrix needs at least one angle".to_string()));
    }
    for (i, &a) in angles_deg.iter().enumerate() {
        for &b in &angles_deg[..i] {
            if a == b {
                return Err(Error::domain(format!(
                    "steering angles must be distinct, {} repeats",
                    a.to_f64().unwrap_or(f64::NAN)
                )));
            }
        }
    }
    let mut a = DMatrix::zeros(cfg.num_elements(), angles_deg.len());
    for (k, &angle) in angles_deg.iter().enumerate() {
        a.set_column(k, &steering_vector(cfg, angle)?);
    }
    Ok(a)
}

/// Generate one realization of the received data `X = A S + W`.
///
/// Deterministic given the scenario seed. Sources are iid circular complex
/// Gaussian symbols colored by the eigenvalue square root of the correlation
/// matrix, so a fully coherent scene (`rho = 1`) degrades gracefully to a
/// rank-deficient factor. Per-source power follows [`Scenario::source_power`].
pub fn synthesize<T: Scalar>(cfg: &ArrayConfig<T>, sc: &Scenario<T>) -> Result<SnapshotMatrix<T>> {
    Ok(synthesize_parts(cfg, sc)?.snapshots)
}

/// As [`synthesize`], additionally returning the source and noise matrices.
pub fn synthesize_parts<T: Scalar>(cfg: &ArrayConfig<T>, sc: &Scenario<T>) -> Result<SynthesisParts<T>> {
    let m = cfg.num_elements();
    let k = sc.num_sources();
    let q = sc.num_snapshots();
    if sc.noise_variances().len() != m {
        return Err(Error::domain(format!(
            "noise variance list has {} entries for an array of {} elements",
            sc.noise_variances().len(),
            m
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(sc.seed());

    // Source symbols: S = sigma_s * C^{1/2} U, drawn column by column so the
    // stream layout is part of the reproducibility contract.
    let mut unit = DMatrix::<Complex<T>>::zeros(k, q);
    for col in 0..q {
        for row in 0..k {
            unit[(row, col)] = complex_standard_normal(&mut rng);
        }
    }
    let sources = if k > 0 {
        let amp = sc.source_power().sqrt();
        let root = correlation_sqrt(sc.correlation())?;
        (root * unit).map(|z| z.scale(amp))
    } else {
        unit
    };

    let mut noise = DMatrix::<Complex<T>>::zeros(m, q);
    let sigmas: Vec<T> = sc.noise_variances().iter().map(|&v| v.sqrt()).collect();
    for col in 0..q {
        for row in 0..m {
            noise[(row, col)] = complex_standard_normal::<T, _>(&mut rng).scale(sigmas[row]);
        }
    }

    let data = if k > 0 {
        let a = steering_matrix(cfg, sc.angles_deg())?;
        a * &sources + &noise
    } else {
        noise.clone()
    };

    Ok(SynthesisParts {
        snapshots: SnapshotMatrix { data },
        sources,
        noise,
    })
}

fn validate_angle<T: Scalar>(angle_deg: T) -> Result<()> {
    let limit = real::<T>(90.0);
    if angle_deg <= -limit || angle_deg >= limit {
        return Err(Error::domain(format!(
            "angle of arrival must lie in (-90, 90) degrees, got {}",
            angle_deg.to_f64().unwrap_or(f64::NAN)
        )));
    }
    Ok(())
}

fn phase_increment<T: Scalar>(cfg: &ArrayConfig<T>, angle_deg: T) -> T {
    let theta = angle_deg * T::pi() / real(180.0);
    real::<T>(2.0) * T::pi() / cfg.wavelength() * cfg.spacing() * theta.sin()
}

fn complex_standard_normal<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    // Unit-variance circular complex Gaussian: re and im each N(0, 1/2).
    let scale = real::<T>(0.5).sqrt();
    let re = T::standard_normal(rng);
    let im = T::standard_normal(rng);
    Complex::new(re * scale, im * scale)
}

/// Hermitian PSD square root via eigendecomposition, clamping the tiny
/// negative eigenvalues a coherent (rank-deficient) correlation produces.
fn correlation_sqrt<T: Scalar>(c: &DMatrix<Complex<T>>) -> Result<DMatrix<Complex<T>>> {
    let eig = c.clone().symmetric_eigen();
    let floor = -real::<T>(1e-10);
    for &l in eig.eigenvalues.iter() {
        if l < floor {
            return Err(Error::domain(format!(
                "correlation matrix is not positive semidefinite (eigenvalue {})",
                l.to_f64().unwrap_or(f64::NAN)
            )));
        }
    }
    let sqrt_vals = eig
        .eigenvalues
        .map(|l| Complex::new(l.max(T::zero()).sqrt(), T::zero()));
    Ok(&eig.eigenvectors * DMatrix::from_diagonal(&sqrt_vals) * eig.eigenvectors.adjoint())
}

fn validate_correlation<T: Scalar>(c: &DMatrix<Complex<T>>, k: usize) -> Result<()> {
    if c.nrows() != k || c.ncols() != k {
        return Err(Error::domain(format!(
            "correlation matrix is {}x{}, expected {k}x{k}",
            c.nrows(),
            c.ncols()
        )));
    }
    if k == 0 {
        return Ok(());
    }
    let tol = real::<T>(1e-10);
    let herm_dev = (c - c.adjoint()).norm();
    if herm_dev > tol * c.norm().max(T::one()) {
        return Err(Error::domain("correlation matrix must be Hermitian".to_string()));
    }
    for i in 0..k {
        let d = c[(i, i)];
        if (d.re - T::one()).abs() > tol || d.im.abs() > tol {
            return Err(Error::domain(
                "correlation matrix must have unit diagonal".to_string(),
            ));
        }
    }
    // PSD check is shared with the square-root path.
    correlation_sqrt(c).map(|_| ())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    type C64 = Complex<f64>;

    fn cfg3() -> ArrayConfig<f64> {
        ArrayConfig::default()
    }

    #[test]
    fn steering_vector_boresight_is_all_ones() {
        let a = steering_vector(&cfg3(), 0.0).unwrap();
        for m in 0..3 {
            assert_eq!(a[m], C64::new(1.0, 0.0));
        }
    }

    #[test]
    fn steering_vector_thirty_degrees() {
        // d/lambda = 1/2 and sin 30 = 1/2 give a phase step of pi/2.
        let a = steering_vector(&cfg3(), 30.0).unwrap();
        let expect = [C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0)];
        for (got, want) in a.iter().zip(expect.iter()) {
            assert!((got - want).norm() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn steering_vector_minus_thirty_degrees_m4() {
        let cfg = ArrayConfig::half_wavelength(4, 0.04).unwrap();
        let a = steering_vector(&cfg, -30.0).unwrap();
        let expect = [
            C64::new(1.0, 0.0),
            C64::new(0.0, -1.0),
            C64::new(-1.0, 0.0),
            C64::new(0.0, 1.0),
        ];
        for (got, want) in a.iter().zip(expect.iter()) {
            assert!((got - want).norm() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn steering_vector_rejects_out_of_range_angles() {
        assert!(steering_vector(&cfg3(), 90.0).is_err());
        assert!(steering_vector(&cfg3(), -90.0).is_err());
        assert!(steering_vector(&cfg3(), 123.0).is_err());
        assert!(steering_vector(&cfg3(), 89.9).is_ok());
    }

    #[test]
    fn steering_vector_elements_have_unit_modulus() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let m = rng.random_range(2..9);
            let cfg = ArrayConfig::half_wavelength(m, 0.04).unwrap();
            let angle: f64 = rng.random_range(-89.9..89.9);
            let a = steering_vector(&cfg, angle).unwrap();
            for z in a.iter() {
                assert!((z.norm() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn steering_outer_product_is_toeplitz() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = rng.random_range(2..8);
            let cfg = ArrayConfig::half_wavelength(m, 0.04).unwrap();
            let angle = rng.random_range(-89.0..89.0);
            let a = steering_vector(&cfg, angle).unwrap();
            let outer = &a * a.adjoint();
            // every diagonal must be constant
            for lag in 0..m {
                for i in 0..m - lag {
                    let dev = (outer[(i, i + lag)] - outer[(0, lag)]).norm();
                    assert!(dev < 1e-12, "lag {lag} deviation {dev}");
                }
            }
        }
    }

    #[test]
    fn steering_matrix_single_angle_is_ones_column() {
        let a = steering_matrix(&cfg3(), &[0.0]).unwrap();
        assert_eq!(a.ncols(), 1);
        for m in 0..3 {
            assert_eq!(a[(m, 0)], C64::new(1.0, 0.0));
        }
    }

    #[test]
    fn steering_matrix_rank_via_svd_oracle() {
        let a = steering_matrix(&cfg3(), &[0.0, 30.0]).unwrap();
        let sv = a.svd(false, false).singular_values;
        assert!(sv[1] > 1e-8 * sv[0], "rank should be 2: {:?}", sv);

        let a = steering_matrix(&cfg3(), &[-30.0, 0.0, 30.0]).unwrap();
        let sv = a.svd(false, false).singular_values;
        assert!(sv[2] > 1e-8 * sv[0], "rank should be 3: {:?}", sv);
    }

    #[test]
    fn steering_matrix_rejects_duplicates() {
        assert!(steering_matrix(&cfg3(), &[10.0, 10.0]).is_err());
    }

    #[test]
    fn scenario_rejects_bad_inputs() {
        // duplicate angles
        assert!(Scenario::equicorrelated(vec![5.0, 5.0], 0.0, 0.0, 100, 3, 1.0, 1).is_err());
        // non-PSD correlation
        let c = DMatrix::from_row_slice(2, 2, &[
            C64::new(1.0, 0.0),
            C64::new(1.5, 0.0),
            C64::new(1.5, 0.0),
            C64::new(1.0, 0.0),
        ]);
        assert!(Scenario::new(vec![-10.0, 10.0], c, 0.0, 100, vec![1.0; 3], 1).is_err());
        // non-positive noise
        assert!(Scenario::equicorrelated(vec![0.0], 0.0, 0.0, 100, 3, 0.0, 1).is_err());
        // fully coherent is fine
        assert!(Scenario::equicorrelated(vec![-10.0, 10.0], 1.0, 0.0, 100, 3, 1.0, 1).is_ok());
    }

    #[test]
    fn synthesize_is_bit_reproducible() {
        let sc = Scenario::equicorrelated(vec![-20.0, 20.0], 0.5, 5.0, 64, 3, 1.0, 99).unwrap();
        let x1 = synthesize(&cfg3(), &sc).unwrap();
        let x2 = synthesize(&cfg3(), &sc).unwrap();
        assert_eq!(x1.data(), x2.data());
        let x3 = synthesize(&cfg3(), &sc.with_seed(100)).unwrap();
        assert_ne!(x1.data(), x3.data());
    }

    #[test]
    fn synthesize_single_source_dominates_at_extreme_snr() {
        // noise 200 dB below the signal: every column is proportional to a(0)
        let sc = Scenario::equicorrelated(vec![0.0], 0.0, 200.0, 32, 3, 1.0, 7).unwrap();
        let x = synthesize(&cfg3(), &sc).unwrap();
        let a = steering_vector(&cfg3(), 0.0).unwrap();
        for col in 0..x.num_snapshots() {
            let c = x.data().column(col);
            let dot: C64 = a.iter().zip(c.iter()).map(|(ai, ci)| ai.conj() * ci).sum();
            let cosine = dot.norm() / (a.norm() * c.norm());
            assert!(cosine > 1.0 - 1e-10, "column {col}: cosine {cosine}");
        }
    }

    #[test]
    fn synthesize_matches_requested_source_correlation() {
        let sc =
            Scenario::equicorrelated(vec![-30.0, 30.0], 0.8, 0.0, 100_000, 3, 1.0, 11).unwrap();
        let parts = synthesize_parts(&cfg3(), &sc).unwrap();
        let s = &parts.sources;
        let (mut p11, mut p22) = (0.0, 0.0);
        let mut cross = C64::new(0.0, 0.0);
        for q in 0..s.ncols() {
            p11 += s[(0, q)].norm_sqr();
            p22 += s[(1, q)].norm_sqr();
            cross += s[(0, q)] * s[(1, q)].conj();
        }
        let rho_hat = cross / C64::new((p11 * p22).sqrt(), 0.0);
        assert!(
            (rho_hat - C64::new(0.8, 0.0)).norm() < 0.02,
            "empirical correlation {rho_hat}"
        );
    }

    #[test]
    fn synthesize_source_power_matches_snr_target() {
        let snr_db = 7.0;
        let sc = Scenario::equicorrelated(vec![10.0], 0.0, snr_db, 20_000, 3, 2.0, 3).unwrap();
        let parts = synthesize_parts(&cfg3(), &sc).unwrap();
        let target = sc.source_power();
        let q = parts.sources.ncols();
        let mean_power: f64 =
            parts.sources.row(0).iter().map(|z| z.norm_sqr()).sum::<f64>() / q as f64;
        // |s|^2 is exponential with std = sigma_s^2, so 3 standard errors:
        let tol = 3.0 * target / (q as f64).sqrt();
        assert!(
            (mean_power - target).abs() < tol,
            "mean power {mean_power} vs target {target}"
        );
    }

    #[test]
    fn synthesize_noise_only_scene() {
        let sc = Scenario::new(
            vec![],
            DMatrix::zeros(0, 0),
            0.0,
            20_000,
            vec![1.0; 3],
            21,
        )
        .unwrap();
        let x = synthesize(&cfg3(), &sc).unwrap();
        assert_eq!(x.num_elements(), 3);
        // sample covariance of white noise is near the identity
        let q = x.num_snapshots() as f64;
        let cov = x.data() * x.data().adjoint() / C64::new(q, 0.0);
        let dev = (&cov - DMatrix::<C64>::identity(3, 3)).norm();
        assert!(dev < 5.0 * (9.0 / q).sqrt(), "deviation {dev}");
    }

    #[test]
    fn synthesize_checks_noise_length() {
        let sc = Scenario::equicorrelated(vec![0.0], 0.0, 0.0, 16, 4, 1.0, 1).unwrap();
        assert!(synthesize(&cfg3(), &sc).is_err());
    }
}
