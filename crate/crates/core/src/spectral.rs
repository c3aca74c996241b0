//! Laplacian, its pseudoinverse, and the spectrum of the simple random walk.

use serde::{Deserialize, Serialize};

use crate::error::LinalgError;
use crate::graph::Graph;
use crate::linalg::{symmetric_eigen, SymmetricMatrix};

/// `L = D - A`.
pub fn laplacian(g: &Graph) -> SymmetricMatrix {
    let mut l = SymmetricMatrix::zeros(g.n());
    for v in 0..g.n() {
        l.set(v, v, g.degree(v) as f64);
    }
    for &(u, v) in g.edges() {
        l.set(u, v, -1.0);
    }
    l
}

/// `S = D^{-1/2} A D^{-1/2}`, similar to the transition matrix `P = D^{-1} A`.
pub fn normalized_adjacency(g: &Graph) -> SymmetricMatrix {
    let mut s = SymmetricMatrix::zeros(g.n());
    for &(u, v) in g.edges() {
        s.set(u, v, 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt());
    }
    s
}

/// Moore–Penrose pseudoinverse of a connected-graph Laplacian.
///
/// Eigenvalues with `|λ| <= 1e-9 · max(1, λ_max)` are treated as zero; there
/// must be exactly one.
pub fn pseudoinverse(l: &SymmetricMatrix) -> Result<SymmetricMatrix, LinalgError> {
    let eig = symmetric_eigen(l)?;
    let lambda_max = eig.values.last().copied().unwrap_or(0.0);
    let cutoff = 1e-9 * lambda_max.max(1.0);
    let zeros = eig.values.iter().filter(|x| x.abs() <= cutoff).count();
    if zeros != 1 {
        return Err(LinalgError::RankDeficient { zeros });
    }
    let n = l.order();
    let kept: Vec<(f64, &Vec<f64>)> = eig
        .values
        .iter()
        .zip(&eig.vectors)
        .filter(|(x, _)| x.abs() > cutoff)
        .map(|(x, v)| (1.0 / x, v))
        .collect();
    Ok(SymmetricMatrix::from_fn(n, |i, j| {
        kept.iter().map(|(inv, v)| inv * v[i] * v[j]).sum()
    }))
}

/// Transition-matrix spectrum and the scalars derived from it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralData {
    /// Eigenvalues of `P`, descending; `lambda[0] == 1`.
    pub lambda: Vec<f64>,
    pub lambda2: f64,
    /// `σ = sqrt(tr(P²)/N)`.
    pub sigma: f64,
    /// `k = ⌊(λ₂(N-1)+1)/(λ₂+1)⌋`; `None` when `λ₂ = -1` (only `K₂`).
    pub k_param: Option<i64>,
    /// `θ = λ₂(N-k-2) - k + 2`; `None` together with `k_param`.
    pub theta: Option<f64>,
    /// `v[k][j]`: component `j` of the orthonormal eigenvector of `S` for
    /// `lambda[k]`. `v[0][j] = sqrt(π_j)`.
    pub v: Vec<Vec<f64>>,
    /// Stationary distribution `π_j = d_j / 2|E|`.
    pub pi: Vec<f64>,
}

/// Eigen-decomposes `S = D^{-1/2} A D^{-1/2}`, which shares its spectrum
/// with `P`. The top eigenvector is replaced by the exact `sqrt(π)`.
pub fn transition_spectrum(g: &Graph) -> Result<SpectralData, LinalgError> {
    let n = g.n();
    let two_m = 2.0 * g.edge_count() as f64;
    let pi: Vec<f64> = (0..n).map(|j| g.degree(j) as f64 / two_m).collect();

    let eig = symmetric_eigen(&normalized_adjacency(g))?;
    let mut lambda: Vec<f64> = eig.values.iter().rev().copied().collect();
    let mut v: Vec<Vec<f64>> = eig.vectors.iter().rev().cloned().collect();
    // the Perron vector is known in closed form
    v[0] = pi.iter().map(|p| p.sqrt()).collect();
    lambda[0] = 1.0;

    let lambda2 = lambda[1];
    let (k_param, theta) = gap_parameters(lambda2, n);
    Ok(SpectralData {
        lambda,
        lambda2,
        sigma: sigma(g),
        k_param,
        theta,
        v,
        pi,
    })
}

/// `k` and `θ` of the spectral-gap upper bounds. `k` is floored with a
/// `1e-9` allowance so that exact integers (e.g. `0` for `K_N`) survive
/// round-off.
pub fn gap_parameters(lambda2: f64, n: usize) -> (Option<i64>, Option<f64>) {
    if lambda2 <= -1.0 + 1e-12 {
        return (None, None);
    }
    let nf = n as f64;
    let k = ((lambda2 * (nf - 1.0) + 1.0) / (lambda2 + 1.0) + 1e-9).floor() as i64;
    let theta = lambda2 * (nf - k as f64 - 2.0) - k as f64 + 2.0;
    (Some(k), Some(theta))
}

/// `σ = sqrt((2/N) Σ_{(i,j)∈E} 1/(d_i d_j))`.
pub fn sigma(g: &Graph) -> f64 {
    let s: f64 = g
        .edges()
        .iter()
        .map(|&(u, v)| 1.0 / (g.degree(u) * g.degree(v)) as f64)
        .sum();
    (2.0 * s / g.n() as f64).sqrt()
}
