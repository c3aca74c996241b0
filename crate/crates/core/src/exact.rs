//! Effective resistances, the three Kirchhoff indices and random-walk hitting
//! times, plus checks of the exact identities that tie them together.

use serde::{Deserialize, Serialize};

use crate::error::LinalgError;
use crate::graph::Graph;
use crate::spectral::{laplacian, pseudoinverse, transition_spectrum, SpectralData};

/// `|a - b| / max(1, |a|, |b|)`.
pub fn rel_error(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

/// Pairwise effective resistances with unit edge resistors.
#[derive(Debug, Clone, PartialEq)]
pub struct ResistanceMatrix {
    n: usize,
    r: Vec<f64>,
    r_max: f64,
}

impl ResistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.r[i * self.n + j]
    }

    /// `max_{i<j} R_ij`.
    pub fn r_max(&self) -> f64 {
        self.r_max
    }
}

/// `R_ij = L⁺_ii + L⁺_jj - 2 L⁺_ij`.
pub fn effective_resistances(g: &Graph) -> Result<ResistanceMatrix, LinalgError> {
    let lp = pseudoinverse(&laplacian(g))?;
    let n = g.n();
    let mut r = vec![0.0; n * n];
    let mut r_max: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let x = lp.get(i, i) + lp.get(j, j) - 2.0 * lp.get(i, j);
            r[i * n + j] = x;
            r[j * n + i] = x;
            r_max = r_max.max(x);
        }
    }
    Ok(ResistanceMatrix { n, r, r_max })
}

/// `R(G) = Σ_{i<j} R_ij`.
pub fn kirchhoff_index(rm: &ResistanceMatrix) -> f64 {
    pair_sum(rm, |_, _| 1.0)
}

/// `R*(G) = Σ_{i<j} d_i d_j R_ij`.
pub fn multiplicative_index(g: &Graph, rm: &ResistanceMatrix) -> f64 {
    pair_sum(rm, |i, j| (g.degree(i) * g.degree(j)) as f64)
}

/// `R⁺(G) = Σ_{i<j} (d_i + d_j) R_ij`.
pub fn additive_index(g: &Graph, rm: &ResistanceMatrix) -> f64 {
    pair_sum(rm, |i, j| (g.degree(i) + g.degree(j)) as f64)
}

fn pair_sum(rm: &ResistanceMatrix, weight: impl Fn(usize, usize) -> f64) -> f64 {
    let mut s = 0.0;
    for i in 0..rm.n {
        for j in i + 1..rm.n {
            s += weight(i, j) * rm.get(i, j);
        }
    }
    s
}

/// `R*(G) = 2|E| Σ_{i≥2} 1/(1-λ_i)` from the transition spectrum.
pub fn multiplicative_index_spectral(g: &Graph) -> Result<f64, LinalgError> {
    Ok(multiplicative_index_from_spectrum(
        g,
        &transition_spectrum(g)?,
    ))
}

pub fn multiplicative_index_from_spectrum(g: &Graph, spec: &SpectralData) -> f64 {
    2.0 * g.edge_count() as f64
        * spec.lambda[1..]
            .iter()
            .map(|l| 1.0 / (1.0 - l))
            .sum::<f64>()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IndexValues {
    pub r: f64,
    pub r_star: f64,
    pub r_plus: f64,
}

impl IndexValues {
    pub fn from_resistances(g: &Graph, rm: &ResistanceMatrix) -> Self {
        IndexValues {
            r: kirchhoff_index(rm),
            r_star: multiplicative_index(g, rm),
            r_plus: additive_index(g, rm),
        }
    }

    pub fn compute(g: &Graph) -> Result<Self, LinalgError> {
        Ok(Self::from_resistances(g, &effective_resistances(g)?))
    }
}

/// Expected hitting times `h_ij = E_i T_j` of the simple random walk.
#[derive(Debug, Clone)]
pub struct HittingTimes {
    n: usize,
    h: Vec<f64>,
    pub pi: Vec<f64>,
}

impl HittingTimes {
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.h[i * self.n + j]
    }

    /// `Σ_i π_i E_i T_j`, the expected hitting time of `j` from stationarity.
    pub fn from_stationary(&self, j: usize) -> f64 {
        (0..self.n).map(|i| self.pi[i] * self.get(i, j)).sum()
    }

    /// Worst relative error of `h_ij + h_ji = 2|E| R_ij` over all pairs.
    pub fn max_commute_error(&self, g: &Graph, rm: &ResistanceMatrix) -> f64 {
        let two_m = 2.0 * g.edge_count() as f64;
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                worst = worst.max(rel_error(
                    self.get(i, j) + self.get(j, i),
                    two_m * rm.get(i, j),
                ));
            }
        }
        worst
    }
}

/// `E_i T_j = ½ Σ_v d_v (R_ij + R_jv - R_iv)`.
pub fn hitting_times(g: &Graph, rm: &ResistanceMatrix) -> HittingTimes {
    let n = g.n();
    let deg: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
    let two_m = 2.0 * g.edge_count() as f64;
    let mut h = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let rij = rm.get(i, j);
            let s: f64 = (0..n)
                .map(|v| deg[v] * (rij + rm.get(j, v) - rm.get(i, v)))
                .sum();
            h[i * n + j] = 0.5 * s;
        }
    }
    let pi = deg.iter().map(|d| d / two_m).collect();
    HittingTimes { n, h, pi }
}

/// Both sides of `R⁺ = (N/2|E|) R* + Σ_j Σ_i π_i E_i T_j`, once with `R*`
/// from resistances and once with `R*` from the spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub r_plus: f64,
    pub rhs: f64,
    pub rhs_spectral: f64,
    pub abs_error: f64,
    pub rel_error: f64,
    pub spectral_rel_error: f64,
}

impl DecompositionReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.rel_error <= tol && self.spectral_rel_error <= tol
    }
}

pub fn verify_decomposition(g: &Graph) -> Result<DecompositionReport, LinalgError> {
    let rm = effective_resistances(g)?;
    let spec = transition_spectrum(g)?;
    Ok(decomposition_from_parts(
        g,
        &rm,
        &hitting_times(g, &rm),
        &spec,
    ))
}

pub fn decomposition_from_parts(
    g: &Graph,
    rm: &ResistanceMatrix,
    ht: &HittingTimes,
    spec: &SpectralData,
) -> DecompositionReport {
    let n = g.n() as f64;
    let two_m = 2.0 * g.edge_count() as f64;
    let r_plus = additive_index(g, rm);
    // E_j T_j = 0, so summing over all i equals summing over i != j
    let hitting: f64 = (0..g.n()).map(|j| ht.from_stationary(j)).sum();
    let rhs = n / two_m * multiplicative_index(g, rm) + hitting;
    let rhs_spectral = n * spec.lambda[1..]
        .iter()
        .map(|l| 1.0 / (1.0 - l))
        .sum::<f64>()
        + hitting;
    DecompositionReport {
        r_plus,
        rhs,
        rhs_spectral,
        abs_error: (r_plus - rhs).abs(),
        rel_error: rel_error(r_plus, rhs),
        spectral_rel_error: rel_error(r_plus, rhs_spectral),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LovaszTerm {
    pub vertex: usize,
    /// `Σ_i π_i E_i T_j`
    pub hitting_side: f64,
    /// `(1/π_j) Σ_{k≥2} v_kj² / (1 - λ_k)`
    pub spectral_side: f64,
    pub rel_error: f64,
    /// `|Σ_{k≥2} v_kj² - (1 - π_j)|`
    pub weight_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LovaszReport {
    pub terms: Vec<LovaszTerm>,
    pub max_rel_error: f64,
    pub max_weight_residual: f64,
}

impl LovaszReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_rel_error <= tol && self.max_weight_residual <= tol
    }
}

pub fn verify_lovasz(g: &Graph) -> Result<LovaszReport, LinalgError> {
    let rm = effective_resistances(g)?;
    let spec = transition_spectrum(g)?;
    Ok(lovasz_from_parts(&hitting_times(g, &rm), &spec))
}

pub fn lovasz_from_parts(ht: &HittingTimes, spec: &SpectralData) -> LovaszReport {
    let n = spec.pi.len();
    let terms: Vec<LovaszTerm> = (0..n)
        .map(|j| {
            let pij = spec.pi[j];
            let hitting_side = ht.from_stationary(j);
            let mut weighted = 0.0;
            let mut weight = 0.0;
            for k in 1..n {
                let w = spec.v[k][j] * spec.v[k][j];
                weighted += w / (1.0 - spec.lambda[k]);
                weight += w;
            }
            let spectral_side = weighted / pij;
            LovaszTerm {
                vertex: j,
                hitting_side,
                spectral_side,
                rel_error: rel_error(hitting_side, spectral_side),
                weight_residual: (weight - (1.0 - pij)).abs(),
            }
        })
        .collect();
    let max_rel_error = terms.iter().fold(0.0, |m: f64, t| m.max(t.rel_error));
    let max_weight_residual = terms.iter().fold(0.0, |m: f64, t| m.max(t.weight_residual));
    LovaszReport {
        terms,
        max_rel_error,
        max_weight_residual,
    }
}
