//! Turn samples of clusterings (MCMC allocation traces) into posterior
//! similarity matrices, treat them as kernel matrices, and summarise or
//! combine them.
//!
//! The pipeline has three entry points of increasing generality:
//!
//! * [`kkmeans::summarise_psm`] clusters a single PSM with kernel k-means;
//! * [`mkkm::multiple_kernel_kmeans`] combines several PSMs with
//!   per-observation weights learned in an unsupervised fashion;
//! * [`mkl::outcome_guided_combine`] learns global kernel weights from a
//!   categorical response via simpleMKL, then clusters the weighted kernel.
//!
//! Model selection (silhouette sweep) and a full clustering-comparison
//! metric suite live in [`evaluation`]; [`synthetic`] and [`gibbs`] provide
//! a categorical-data generator and a collapsed Gibbs sampler so PSMs can
//! be produced end to end at desk scale.

pub mod error;
pub mod evaluation;
pub mod gibbs;
pub mod kkmeans;
pub mod mkkm;
pub mod mkl;
pub mod psm;
pub mod rng;
pub mod svm;
pub mod synthetic;

pub use error::Error;
pub use rng::RngSeed;

/// Re-export of the linear-algebra backend so downstream crates stay on one version.
pub use nalgebra;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
