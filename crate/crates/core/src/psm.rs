//! Posterior similarity matrices from clustering samples, and their
//! validation/repair as kernel matrices.
//!
//! A PSM averages the co-clustering indicators of B posterior draws, so its
//! entries are probabilities that two items share a cluster. Every PSM is a
//! convex combination of co-clustering matrices, each of which is permutable
//! to a block diagonal of all-ones blocks and hence positive semi-definite;
//! the PSM is therefore a valid kernel matrix and can feed any kernel method.

use nalgebra::DMatrix;

use crate::error::Error;
use crate::Result;

/// Symmetry tolerance baked into kernel validation.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Default tolerance on the smallest eigenvalue for the numerical PSD check.
pub const PSD_TOL: f64 = 1e-10;

/// B clustering vectors over N items: the raw MCMC allocation trace.
///
/// Labels are canonicalised row by row (first appearance maps to 0, the next
/// new label to 1, ...) so arbitrary integer labellings from external MCMC
/// output are ingested unchanged in meaning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllocationSampleSet {
    n_items: usize,
    labels: Vec<Vec<u32>>,
}

impl AllocationSampleSet {
    /// Build from raw draws, one inner vector per MCMC iteration.
    pub fn new(raw: Vec<Vec<i64>>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::NoSamples);
        }
        let n_items = raw[0].len();
        if n_items == 0 {
            return Err(Error::EmptyInput("allocation draw has no items"));
        }
        let mut labels = Vec::with_capacity(raw.len());
        for (b, row) in raw.iter().enumerate() {
            if row.len() != n_items {
                return Err(Error::DimensionMismatch(format!(
                    "draw {b} has {} items, expected {n_items}",
                    row.len()
                )));
            }
            labels.push(canonicalise_row(row));
        }
        Ok(Self { n_items, labels })
    }

    /// Number of items N.
    pub fn n_items(&self) -> usize {
        self.n_items
    }

    /// Number of draws B.
    pub fn n_samples(&self) -> usize {
        self.labels.len()
    }

    /// Canonicalised draws, one row per iteration.
    pub fn labels(&self) -> &[Vec<u32>] {
        &self.labels
    }

    /// Concatenate two traces over the same items.
    pub fn concat(&self, other: &AllocationSampleSet) -> Result<AllocationSampleSet> {
        if self.n_items != other.n_items {
            return Err(Error::DimensionMismatch(format!(
                "cannot concatenate traces over {} and {} items",
                self.n_items, other.n_items
            )));
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Ok(AllocationSampleSet {
            n_items: self.n_items,
            labels,
        })
    }

    /// Pairwise co-clustering counts: entry (i, j) counts the draws in which
    /// items i and j share a cluster. The PSM is this divided by B.
    pub fn co_clustering_counts(&self) -> DMatrix<u64> {
        let n = self.n_items;
        let b = self.n_samples() as u64;
        let mut counts = DMatrix::<u64>::zeros(n, n);
        for row in &self.labels {
            for i in 0..n {
                for j in (i + 1)..n {
                    if row[i] == row[j] {
                        counts[(i, j)] += 1;
                    }
                }
            }
        }
        for i in 0..n {
            counts[(i, i)] = b;
            for j in (i + 1)..n {
                counts[(j, i)] = counts[(i, j)];
            }
        }
        counts
    }
}

/// Map arbitrary integer labels to 0..K-1 by first appearance.
fn canonicalise_row(row: &[i64]) -> Vec<u32> {
    let mut seen: Vec<i64> = Vec::new();
    row.iter()
        .map(|&label| {
            if let Some(pos) = seen.iter().position(|&s| s == label) {
                pos as u32
            } else {
                seen.push(label);
                (seen.len() - 1) as u32
            }
        })
        .collect()
}

/// Binary co-clustering indicator matrix of a single draw.
///
/// Symmetric, unit diagonal, and transitive: reordering items makes it a
/// block diagonal of all-ones blocks, one block per cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct CoClusteringMatrix {
    entries: DMatrix<f64>,
}

impl CoClusteringMatrix {
    /// Indicator entries as a dense 0/1 matrix.
    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    /// Number of items.
    pub fn n(&self) -> usize {
        self.entries.nrows()
    }

    /// Check the transitivity invariant directly.
    pub fn is_transitive(&self) -> bool {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                if self.entries[(i, j)] == 0.0 {
                    continue;
                }
                for k in 0..n {
                    if self.entries[(j, k)] == 1.0 && self.entries[(i, k)] == 0.0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Co-clustering indicator of one clustering vector: entry (i, j) is 1 when
/// the two items share a label.
pub fn co_clustering(labels_row: &[i64]) -> Result<CoClusteringMatrix> {
    if labels_row.is_empty() {
        return Err(Error::EmptyInput("clustering vector"));
    }
    let n = labels_row.len();
    let entries = DMatrix::from_fn(n, n, |i, j| {
        if labels_row[i] == labels_row[j] {
            1.0
        } else {
            0.0
        }
    });
    Ok(CoClusteringMatrix { entries })
}

/// A symmetric positive semi-definite matrix usable as a precomputed kernel.
///
/// This is the type the kernel machinery consumes. It carries no probability
/// semantics: combined kernels produced by weighting do not in general have a
/// unit diagonal. Use [`SimilarityKernel`] for PSMs proper.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelMatrix {
    entries: DMatrix<f64>,
}

impl KernelMatrix {
    /// Validate a dense matrix as a kernel: square, symmetric within
    /// [`SYMMETRY_TOL`], smallest eigenvalue at least `-psd_tol`.
    pub fn new(entries: DMatrix<f64>, psd_tol: f64) -> Result<Self> {
        let report = check_psd(&entries, psd_tol)?;
        if !report.is_psd {
            return Err(Error::NotPsd {
                lambda_min: report.lambda_min,
                tol: psd_tol,
            });
        }
        Ok(Self { entries })
    }

    /// Wrap a matrix that is PSD by construction (e.g. a convex combination
    /// of validated kernels). Symmetry is still debug-asserted.
    pub(crate) fn new_unchecked(entries: DMatrix<f64>) -> Self {
        debug_assert!(entries.is_square());
        Self { entries }
    }

    /// Kernel entries.
    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    /// Number of items.
    pub fn n(&self) -> usize {
        self.entries.nrows()
    }
}

/// N x N posterior similarity matrix: entries are probabilities in [0, 1],
/// the diagonal is 1, and the matrix is numerically PSD.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityKernel {
    gram: KernelMatrix,
    provenance: String,
}

impl SimilarityKernel {
    /// Validate a dense matrix as a PSM.
    pub fn new(entries: DMatrix<f64>, provenance: impl Into<String>) -> Result<Self> {
        let n = entries.nrows();
        for i in 0..n {
            if (entries[(i, i)] - 1.0).abs() > SYMMETRY_TOL {
                return Err(Error::InvalidConfig(format!(
                    "similarity kernel diagonal entry {i} is {}, expected 1",
                    entries[(i, i)]
                )));
            }
        }
        if let Some(bad) = entries.iter().find(|v| **v < -SYMMETRY_TOL || **v > 1.0 + SYMMETRY_TOL)
        {
            return Err(Error::InvalidConfig(format!(
                "similarity kernel entry {bad} outside [0, 1]"
            )));
        }
        let gram = KernelMatrix::new(entries, PSD_TOL)?;
        Ok(Self {
            gram,
            provenance: provenance.into(),
        })
    }

    pub(crate) fn new_unchecked(entries: DMatrix<f64>, provenance: impl Into<String>) -> Self {
        Self {
            gram: KernelMatrix::new_unchecked(entries),
            provenance: provenance.into(),
        }
    }

    /// The underlying validated kernel matrix.
    pub fn gram(&self) -> &KernelMatrix {
        &self.gram
    }

    /// Similarity entries.
    pub fn entries(&self) -> &DMatrix<f64> {
        self.gram.entries()
    }

    /// Number of items.
    pub fn n(&self) -> usize {
        self.gram.n()
    }

    /// Free-text source tag (file name, sampler run id, ...).
    pub fn provenance(&self) -> &str {
        &self.provenance
    }
}

/// Monte Carlo estimate of the probability that each pair of items shares a
/// cluster: entry (i, j) averages the co-clustering indicator over draws.
///
/// Counts are accumulated as exact integers and divided by B once, so the
/// result is independent of summation order and invariant to relabelling any
/// draw.
pub fn compute_psm(samples: &AllocationSampleSet) -> SimilarityKernel {
    let counts = samples.co_clustering_counts();
    let b = samples.n_samples() as f64;
    let entries = counts.map(|c| c as f64 / b);
    SimilarityKernel::new_unchecked(entries, format!("psm of {} draws", samples.n_samples()))
}

/// Outcome of a positive semi-definiteness check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsdReport {
    /// True when the smallest eigenvalue is at least `-tol`.
    pub is_psd: bool,
    /// Smallest eigenvalue found.
    pub lambda_min: f64,
}

/// Numerical PSD check by full symmetric eigen-decomposition.
///
/// Errors if the matrix is not square or departs from symmetry by more than
/// [`SYMMETRY_TOL`]. N is small at desk scale, so exactness wins over speed.
pub fn check_psd(matrix: &DMatrix<f64>, tol: f64) -> Result<PsdReport> {
    require_symmetric(matrix, SYMMETRY_TOL)?;
    let lambda_min = smallest_eigenvalue(matrix);
    Ok(PsdReport {
        is_psd: lambda_min >= -tol,
        lambda_min,
    })
}

fn smallest_eigenvalue(matrix: &DMatrix<f64>) -> f64 {
    if matrix.nrows() == 0 {
        return 0.0;
    }
    matrix
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

fn require_symmetric(matrix: &DMatrix<f64>, tol: f64) -> Result<()> {
    if !matrix.is_square() {
        return Err(Error::NotSquare {
            rows: matrix.nrows(),
            cols: matrix.ncols(),
        });
    }
    let mut max_abs_diff: f64 = 0.0;
    for i in 0..matrix.nrows() {
        for j in (i + 1)..matrix.ncols() {
            max_abs_diff = max_abs_diff.max((matrix[(i, j)] - matrix[(j, i)]).abs());
        }
    }
    if max_abs_diff > tol {
        return Err(Error::Asymmetric { max_abs_diff, tol });
    }
    Ok(())
}

/// Repair round-off in an externally produced PSM and validate it.
///
/// Symmetrises as (A + A^T)/2, clips entries to [0, 1], sets the diagonal to
/// 1, then rejects if the repaired matrix is not PSD within `tol`. An exact
/// PSM passes through unchanged.
pub fn clamp_to_kernel(
    matrix: &DMatrix<f64>,
    tol: f64,
    provenance: impl Into<String>,
) -> Result<SimilarityKernel> {
    require_symmetric(matrix, 1e-6)?;
    let n = matrix.nrows();
    let mut repaired = DMatrix::zeros(n, n);
    for i in 0..n {
        repaired[(i, i)] = 1.0;
        for j in (i + 1)..n {
            let value = (0.5 * (matrix[(i, j)] + matrix[(j, i)])).clamp(0.0, 1.0);
            repaired[(i, j)] = value;
            repaired[(j, i)] = value;
        }
    }
    let lambda_min = smallest_eigenvalue(&repaired);
    if lambda_min < -tol {
        return Err(Error::NotPsd { lambda_min, tol });
    }
    Ok(SimilarityKernel::new_unchecked(repaired, provenance))
}
