//! Source enumeration for compact uniform linear arrays.
//!
//! The pipeline synthesizes array snapshots for possibly coherent narrowband
//! sources, forms the forward-backward smoothed sample covariance, decomposes
//! it into a low-rank Hermitian Toeplitz part plus a non-negative noise
//! diagonal with an ADMM iteration, and reports the rank of the Toeplitz part
//! as the number of sources. A Monte Carlo harness sweeps scene parameters
//! and measures the probability of correct detection against classical
//! eigenvalue baselines.
//!
//! All numerics are generic over the real scalar type (`f32` or `f64`);
//! concrete `*32`/`*64` aliases are exported below.
//!
//! ```
//! use srcenum::{ArrayConfig64, Scenario64, SolverParams64};
//! use srcenum::{covariance, array, solver};
//!
//! let cfg = ArrayConfig64::default(); // 3 elements, half-wavelength spacing
//! let sc = Scenario64::equicorrelated(vec![-35.0, 35.0], 0.8, 10.0, 200, 3, 1.0, 42).unwrap();
//! let x = array::synthesize(&cfg, &sc).unwrap();
//! let r = covariance::fb_smooth(&covariance::sample_covariance(&x).unwrap());
//! let res = solver::decompose(&r, &SolverParams64::new(6.0)).unwrap();
//! assert_eq!(res.est_num_sources, 2);
//! ```

pub mod array;
pub mod baselines;
pub mod covariance;
pub mod error;
pub mod experiments;
pub mod io;
pub mod scalar;
pub mod solver;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use array::{steering_matrix, steering_vector, synthesize, synthesize_parts};
pub use baselines::{enumerate_baseline, BaselineKind};
pub use covariance::{
    eigen_spacing_ratio, fb_smooth, population_covariance, sample_covariance, sorted_eigenvalues,
    CovKind, FRAME_SNAPSHOTS,
};
pub use experiments::{derive_seed, run_sweep, run_trial, singular_value_trace, SweepAxis};
pub use solver::{
    decompose, estimate_rank, project_nonneg_diag, project_toeplitz, svt_step, truncate_top_k,
};

// Concrete aliases for the two supported scalar types.

pub type ArrayConfig64 = array::ArrayConfig<f64>;
pub type Scenario64 = array::Scenario<f64>;
pub type SnapshotMatrix64 = array::SnapshotMatrix<f64>;
pub type CovMatrix64 = covariance::CovMatrix<f64>;
pub type SolverParams64 = solver::SolverParams<f64>;
pub type DecompResult64 = solver::DecompResult<f64>;
pub type Method64 = experiments::Method<f64>;
pub type SweepSpec64 = experiments::SweepSpec<f64>;
pub type SweepResult64 = experiments::SweepResult<f64>;
pub type FrameTrace64 = experiments::FrameTrace<f64>;

pub type ArrayConfig32 = array::ArrayConfig<f32>;
pub type Scenario32 = array::Scenario<f32>;
pub type SnapshotMatrix32 = array::SnapshotMatrix<f32>;
pub type CovMatrix32 = covariance::CovMatrix<f32>;
pub type SolverParams32 = solver::SolverParams<f32>;
pub type DecompResult32 = solver::DecompResult<f32>;
pub type Method32 = experiments::Method<f32>;
pub type SweepSpec32 = experiments::SweepSpec<f32>;
pub type SweepResult32 = experiments::SweepResult<f32>;
pub type FrameTrace32 = experiments::FrameTrace<f32>;
