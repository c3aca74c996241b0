//! Closed-form lower and upper bounds on the additive degree-Kirchhoff index.
//!
//! Each bound is a free function of the few invariants it needs, so it can be
//! called without building a graph. Formulas whose inputs are all integers
//! (`LB-3`, `LB-14`, `UB-26`, `UB-DR`) also have `*_exact` variants in
//! rational arithmetic. [`evaluate_all`] runs the whole catalog against one
//! graph and reports applicability as data rather than as errors.
//!
//! Identifiers are stable strings such as `LB-3` or `UB-DR`, in catalog order.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Inapplicable, LinalgError};
use crate::exact::{effective_resistances, ResistanceMatrix};
use crate::graph::{DegreeSequence, Graph};
use crate::spectral::{transition_spectrum, SpectralData};

pub type Rational = Ratio<i64>;
pub type BoundValue = Result<f64, Inapplicable>;

fn ratio_to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn int(x: usize) -> i64 {
    i64::try_from(x).expect("graph sizes fit in i64")
}

/// `R⁺ ≥ 2(N-1)²`, attained by `K_N`.
pub fn lb_universal(n: usize) -> f64 {
    ratio_to_f64(lb_universal_exact(n))
}

pub fn lb_universal_exact(n: usize) -> Rational {
    Rational::from_integer(2 * (int(n) - 1).pow(2))
}

/// `R⁺ ≥ N(N-4) + 2|E| Σ 1/d_j`.
pub fn lb_degree_harmonic(n: usize, m_edges: usize, harmonic_sum: f64) -> f64 {
    let n = n as f64;
    n * (n - 4.0) + 2.0 * m_edges as f64 * harmonic_sum
}

fn leaf_bracket(n: usize, m_edges: usize, m_leaves: usize) -> Result<f64, Inapplicable> {
    if m_leaves == 0 || m_leaves >= n {
        return Err(Inapplicable::new(format!(
            "needs 1 <= M < N leaves (M = {m_leaves}, N = {n})"
        )));
    }
    let denom = 2 * m_edges as i64 - m_leaves as i64;
    if denom <= 0 {
        return Err(Inapplicable::new("needs 2|E| - M > 0"));
    }
    let rest = (n - m_leaves) as f64;
    Ok(m_leaves as f64 + rest * rest / denom as f64)
}

/// `R⁺ ≥ N(N-4) + 2|E| [M + (N-M)²/(2|E|-M)]` for `1 ≤ M < N` leaves.
pub fn lb_leaves(n: usize, m_edges: usize, m_leaves: usize) -> BoundValue {
    let bracket = leaf_bracket(n, m_edges, m_leaves)?;
    let nf = n as f64;
    Ok(nf * (nf - 4.0) + 2.0 * m_edges as f64 * bracket)
}

/// Tree form of [`lb_leaves`] (`|E| = N - 1`); needs `M ≥ 2`, `N > 2`.
pub fn lb_leaves_tree(n: usize, m_leaves: usize) -> BoundValue {
    if n <= 2 || m_leaves < 2 {
        return Err(Inapplicable::new("needs N > 2 and at least 2 leaves"));
    }
    lb_leaves(n, n - 1, m_leaves)
}

/// `R⁺ ≥ N(N-2) + 2|E| Σ 1/d_j - 4|E|/(1+d_1)` for `N > 2`.
pub fn lb_mindeg_full(n: usize, m_edges: usize, harmonic_sum: f64, d1: usize) -> BoundValue {
    if n <= 2 {
        return Err(Inapplicable::new("needs N > 2"));
    }
    let nf = n as f64;
    let m = m_edges as f64;
    Ok(nf * (nf - 2.0) + 2.0 * m * harmonic_sum - 4.0 * m / (1.0 + d1 as f64))
}

/// `R⁺ ≥ 2N(N-1) - 4|E|/(1+d_1)` for `N > 2`.
pub fn lb_mindeg(n: usize, m_edges: usize, d1: usize) -> BoundValue {
    lb_mindeg_exact(n, m_edges, d1).map(ratio_to_f64)
}

pub fn lb_mindeg_exact(n: usize, m_edges: usize, d1: usize) -> Result<Rational, Inapplicable> {
    if n <= 2 {
        return Err(Inapplicable::new("needs N > 2"));
    }
    let n = int(n);
    Ok(Rational::from_integer(2 * n * (n - 1)) - Rational::new(4 * int(m_edges), 1 + int(d1)))
}

/// `R⁺ ≥ N(N-2) + 2|E| [M + (N-M)²/(2|E|-M)] - 2|E|`.
pub fn lb_leaves_v2(n: usize, m_edges: usize, m_leaves: usize) -> BoundValue {
    let bracket = leaf_bracket(n, m_edges, m_leaves)?;
    let nf = n as f64;
    let m = m_edges as f64;
    Ok(nf * (nf - 2.0) + 2.0 * m * bracket - 2.0 * m)
}

/// Tree form of [`lb_leaves_v2`]; always exceeds [`lb_leaves_tree`] by 2.
pub fn lb_leaves_tree_v2(n: usize, m_leaves: usize) -> BoundValue {
    if n <= 2 || m_leaves < 2 {
        return Err(Inapplicable::new("needs N > 2 and at least 2 leaves"));
    }
    lb_leaves_v2(n, n - 1, m_leaves)
}

/// Degree-ratio sums over the ascending degree sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioInvariants {
    /// `H = Σ_{i<j} d_j / d_i`
    pub h: f64,
    /// `H* = Σ_{i<j} d_i / d_j`
    pub h_star: f64,
}

pub fn ratio_invariants(degrees: &[usize]) -> RatioInvariants {
    let mut d: Vec<f64> = degrees.iter().map(|&x| x as f64).collect();
    d.sort_by(f64::total_cmp);
    let mut h = 0.0;
    let mut h_star = 0.0;
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            h += d[j] / d[i];
            h_star += d[i] / d[j];
        }
    }
    RatioInvariants { h, h_star }
}

fn majorization_form(n: usize, x: f64) -> f64 {
    let nf = n as f64;
    let pairs = nf * (nf - 1.0) / 2.0;
    nf * (nf - 3.0) + x + pairs * pairs / x
}

/// `R⁺ ≥ N(N-3) + H + [N(N-1)/2]² / H`.
pub fn lb_major_h(n: usize, h: f64) -> f64 {
    majorization_form(n, h)
}

/// Same form as [`lb_major_h`] with `H*`; never better than it.
pub fn lb_major_hstar(n: usize, h_star: f64) -> f64 {
    majorization_form(n, h_star)
}

/// `R⁺ ≥ N[1/(1+s) + (N-2)²/(N-1-s)] + (N-1)²` with `s = σ/√(N-1)`.
pub fn lb_sigma(n: usize, sigma: f64) -> BoundValue {
    let nf = n as f64;
    let s = sigma / (nf - 1.0).sqrt();
    if s.is_nan() || s >= nf - 1.0 {
        return Err(Inapplicable::new(format!("needs σ/√(N-1) < N-1 (got {s})")));
    }
    Ok(nf * (1.0 / (1.0 + s) + (nf - 2.0).powi(2) / (nf - 1.0 - s)) + (nf - 1.0).powi(2))
}

/// `(1+d_1)(N-1) > 2|E|`, exactly when `LB-14` beats `LB-3`.
pub fn condition_17(n: usize, m_edges: usize, d1: usize) -> bool {
    (1 + d1) * (n - 1) > 2 * m_edges
}

/// `Φ(x) = x + (N-x)²/(2|E|-x)`, increasing for `x ≥ 0`.
pub fn phi(x: f64, n: usize, m_edges: usize) -> f64 {
    let nf = n as f64;
    if x == nf {
        // the second term vanishes; avoids 0/0 when 2|E| = N (only K₂)
        return x;
    }
    x + (nf - x).powi(2) / (2.0 * m_edges as f64 - x)
}

/// `Ψ(x) = x [M + (N-M)²/(2x-M)]`, increasing for `x ≥ N-1`.
pub fn psi(x: f64, n: usize, m_leaves: usize) -> f64 {
    let m = m_leaves as f64;
    x * (m + (n as f64 - m).powi(2) / (2.0 * x - m))
}

/// `R⁺ ≤ 2|E|(N-1) R` with `R = max R_ij`.
pub fn ub_resistance(n: usize, m_edges: usize, r_max: f64) -> f64 {
    2.0 * m_edges as f64 * (n as f64 - 1.0) * r_max
}

/// `R⁺(T) ≤ 2(N-1)² D` for trees.
pub fn ub_tree(n: usize, diam: usize) -> f64 {
    ub_tree_exact(n, diam) as f64
}

pub fn ub_tree_exact(n: usize, diam: usize) -> i64 {
    2 * (int(n) - 1).pow(2) * int(diam)
}

/// `R⁺ ≤ (2 + 188/101)(N-1)²` for distance-regular graphs of degree `k > 2`.
pub fn ub_distance_regular(n: usize, k: usize) -> BoundValue {
    ub_distance_regular_exact(n, k).map(ratio_to_f64)
}

pub fn ub_distance_regular_exact(n: usize, k: usize) -> Result<Rational, Inapplicable> {
    if k <= 2 {
        return Err(Inapplicable::new(format!("needs degree k > 2 (k = {k})")));
    }
    Ok(Rational::new(390 * (int(n) - 1).pow(2), 101))
}

fn gap_guard(lambda2: f64, theta: f64) -> Result<(), Inapplicable> {
    if lambda2.is_nan() || lambda2 <= -1.0 || lambda2 >= 1.0 {
        return Err(Inapplicable::new(format!(
            "needs -1 < λ₂ < 1 (λ₂ = {lambda2})"
        )));
    }
    if theta.is_nan() || theta <= 0.0 {
        return Err(Inapplicable::new(format!("needs θ > 0 (θ = {theta})")));
    }
    Ok(())
}

fn hitting_tail(n: usize, m_edges: usize, harmonic_sum: f64, lambda2: f64) -> f64 {
    (2.0 * m_edges as f64 * harmonic_sum - n as f64) / (1.0 - lambda2)
}

/// Spectral-gap upper bound
/// `N((N-k-2)/(1-λ₂) + k/2 + 1/θ) + (2|E|Σ1/d_j - N)/(1-λ₂)`.
pub fn ub_spectral(
    n: usize,
    m_edges: usize,
    harmonic_sum: f64,
    lambda2: f64,
    k: i64,
    theta: f64,
) -> BoundValue {
    gap_guard(lambda2, theta)?;
    let nf = n as f64;
    let kf = k as f64;
    Ok(
        nf * ((nf - kf - 2.0) / (1.0 - lambda2) + kf / 2.0 + 1.0 / theta)
            + hitting_tail(n, m_edges, harmonic_sum, lambda2),
    )
}

/// Bipartite variant: `N(1/2 + (N-k-3)/(1-λ₂) + k/2 + 1/θ) + (2|E|Σ1/d_j - N)/(1-λ₂)`.
/// The caller is responsible for checking bipartiteness.
pub fn ub_spectral_bipartite(
    n: usize,
    m_edges: usize,
    harmonic_sum: f64,
    lambda2: f64,
    k: i64,
    theta: f64,
) -> BoundValue {
    gap_guard(lambda2, theta)?;
    let nf = n as f64;
    let kf = k as f64;
    Ok(
        nf * (0.5 + (nf - kf - 3.0) / (1.0 - lambda2) + kf / 2.0 + 1.0 / theta)
            + hitting_tail(n, m_edges, harmonic_sum, lambda2),
    )
}

/// Earlier general upper bound `(N⁴ - N³ - N² + N)/3`, kept as a reference line.
pub fn reference_upper(n: usize) -> f64 {
    let n = n as f64;
    (n.powi(4) - n.powi(3) - n * n + n) / 3.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundId {
    #[serde(rename = "LB-3")]
    Lb3,
    #[serde(rename = "LB-6")]
    Lb6,
    #[serde(rename = "LB-8")]
    Lb8,
    #[serde(rename = "LB-10")]
    Lb10,
    #[serde(rename = "LB-11")]
    Lb11,
    #[serde(rename = "LB-14")]
    Lb14,
    #[serde(rename = "LB-15")]
    Lb15,
    #[serde(rename = "LB-16")]
    Lb16,
    #[serde(rename = "LB-19")]
    Lb19,
    #[serde(rename = "LB-22")]
    Lb22,
    #[serde(rename = "LB-24")]
    Lb24,
    #[serde(rename = "UB-25")]
    Ub25,
    #[serde(rename = "UB-26")]
    Ub26,
    #[serde(rename = "UB-DR")]
    UbDr,
    #[serde(rename = "UB-29")]
    Ub29,
    #[serde(rename = "UB-30")]
    Ub30,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Need {
    DegreesOnly,
    Resistances,
    Spectrum,
    Structure,
}

impl BoundId {
    /// Catalog order, which is also the tie-break order.
    pub const ALL: [BoundId; 16] = [
        BoundId::Lb3,
        BoundId::Lb6,
        BoundId::Lb8,
        BoundId::Lb10,
        BoundId::Lb11,
        BoundId::Lb14,
        BoundId::Lb15,
        BoundId::Lb16,
        BoundId::Lb19,
        BoundId::Lb22,
        BoundId::Lb24,
        BoundId::Ub25,
        BoundId::Ub26,
        BoundId::UbDr,
        BoundId::Ub29,
        BoundId::Ub30,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::Lb3 => "LB-3",
            BoundId::Lb6 => "LB-6",
            BoundId::Lb8 => "LB-8",
            BoundId::Lb10 => "LB-10",
            BoundId::Lb11 => "LB-11",
            BoundId::Lb14 => "LB-14",
            BoundId::Lb15 => "LB-15",
            BoundId::Lb16 => "LB-16",
            BoundId::Lb19 => "LB-19",
            BoundId::Lb22 => "LB-22",
            BoundId::Lb24 => "LB-24",
            BoundId::Ub25 => "UB-25",
            BoundId::Ub26 => "UB-26",
            BoundId::UbDr => "UB-DR",
            BoundId::Ub29 => "UB-29",
            BoundId::Ub30 => "UB-30",
        }
    }

    pub fn kind(self) -> BoundKind {
        if self < BoundId::Ub25 {
            BoundKind::Lower
        } else {
            BoundKind::Upper
        }
    }

    pub fn needs(self) -> Vec<Need> {
        use BoundId::*;
        match self {
            Lb3 | Lb6 | Lb8 | Lb11 | Lb14 | Lb15 | Lb19 | Lb22 => vec![Need::DegreesOnly],
            // σ is a degree-pair sum over edges
            Lb24 => vec![Need::DegreesOnly, Need::Structure],
            Lb10 | Lb16 => vec![Need::DegreesOnly, Need::Structure],
            Ub25 => vec![Need::Resistances],
            Ub26 | UbDr => vec![Need::Structure],
            Ub29 => vec![Need::DegreesOnly, Need::Spectrum],
            Ub30 => vec![Need::DegreesOnly, Need::Spectrum, Need::Structure],
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown bound id {s:?}"))
    }
}

/// One evaluated catalog entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub id: BoundId,
    pub kind: BoundKind,
    pub value: Option<f64>,
    /// Exact rational value for the integer-input formulas.
    pub exact: Option<Rational>,
    pub applicable: bool,
    pub reason: Option<String>,
    pub needs: Vec<Need>,
}

impl BoundResult {
    fn new(id: BoundId, outcome: Result<(f64, Option<Rational>), Inapplicable>) -> Self {
        let (value, exact, reason) = match outcome {
            Ok((v, e)) if v.is_finite() => (Some(v), e, None),
            Ok((v, _)) => (None, None, Some(format!("non-finite value {v}"))),
            Err(Inapplicable(why)) => (None, None, Some(why)),
        };
        BoundResult {
            id,
            kind: id.kind(),
            applicable: value.is_some(),
            value,
            exact,
            reason,
            needs: id.needs(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BestBound {
    pub id: BoundId,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCatalog {
    pub results: Vec<BoundResult>,
    pub best_lower: Option<BestBound>,
    pub best_upper: Option<BestBound>,
}

impl BoundCatalog {
    pub fn get(&self, id: BoundId) -> Option<&BoundResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn value(&self, id: BoundId) -> Option<f64> {
        self.get(id).and_then(|r| r.value)
    }

    pub fn applicable(&self, kind: BoundKind) -> impl Iterator<Item = (BoundId, f64)> + '_ {
        self.results
            .iter()
            .filter(move |r| r.kind == kind)
            .filter_map(|r| r.value.map(|v| (r.id, v)))
    }
}

/// Spectral quantities the upper bounds use.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapInputs {
    pub lambda2: f64,
    pub k: Option<i64>,
    pub theta: Option<f64>,
}

/// Everything the catalog can consume for one graph. Spectral and
/// resistance inputs are optional; bounds needing them report inapplicable
/// when absent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundInputs {
    pub n: usize,
    pub m_edges: usize,
    pub degrees: DegreeSequence,
    pub ratios: RatioInvariants,
    pub sigma: f64,
    pub diameter: usize,
    pub is_tree: bool,
    pub is_bipartite: bool,
    /// Common degree when the graph is distance-regular.
    pub distance_regular_degree: Option<usize>,
    pub gap: Option<GapInputs>,
    pub r_max: Option<f64>,
}

impl BoundInputs {
    /// Degree and structure inputs only.
    pub fn structural(g: &Graph) -> Self {
        let degrees = g.degree_sequence();
        let ratios = ratio_invariants(&degrees.degrees);
        BoundInputs {
            n: g.n(),
            m_edges: g.edge_count(),
            ratios,
            degrees,
            sigma: crate::spectral::sigma(g),
            diameter: g.diameter(),
            is_tree: g.is_tree(),
            is_bipartite: g.is_bipartite(),
            distance_regular_degree: g.is_distance_regular().then(|| g.degree(0)),
            gap: None,
            r_max: None,
        }
    }

    pub fn with_spectrum(mut self, s: &SpectralData) -> Self {
        self.gap = Some(GapInputs {
            lambda2: s.lambda2,
            k: s.k_param,
            theta: s.theta,
        });
        self
    }

    pub fn with_resistances(mut self, rm: &ResistanceMatrix) -> Self {
        self.r_max = Some(rm.r_max());
        self
    }

    /// All inputs, computing the spectrum and resistances.
    pub fn full(g: &Graph) -> Result<Self, LinalgError> {
        let spec = transition_spectrum(g)?;
        let rm = effective_resistances(g)?;
        Ok(Self::structural(g)
            .with_spectrum(&spec)
            .with_resistances(&rm))
    }
}

fn evaluate_one(id: BoundId, x: &BoundInputs) -> Result<(f64, Option<Rational>), Inapplicable> {
    let float = |v: f64| (v, None);
    let exact = |r: Rational| (ratio_to_f64(r), Some(r));
    let n = x.n;
    let m = x.m_edges;
    let leaves = x.degrees.m_leaves;
    let hs = x.degrees.harmonic_sum;
    let d1 = x.degrees.min_degree;
    let need_tree = || {
        if x.is_tree {
            Ok(())
        } else {
            Err(Inapplicable::new("graph is not a tree"))
        }
    };
    let gap = || {
        let g = x
            .gap
            .ok_or_else(|| Inapplicable::new("spectrum not supplied"))?;
        match (g.k, g.theta) {
            (Some(k), Some(theta)) => Ok((g.lambda2, k, theta)),
            _ => Err(Inapplicable::new(
                "spectral-gap parameters undefined (λ₂ = -1)",
            )),
        }
    };
    match id {
        BoundId::Lb3 => Ok(exact(lb_universal_exact(n))),
        BoundId::Lb6 => Ok(float(lb_degree_harmonic(n, m, hs))),
        BoundId::Lb8 => lb_leaves(n, m, leaves).map(float),
        BoundId::Lb10 => need_tree()
            .and_then(|_| lb_leaves_tree(n, leaves))
            .map(float),
        BoundId::Lb11 => lb_mindeg_full(n, m, hs, d1).map(float),
        BoundId::Lb14 => lb_mindeg_exact(n, m, d1).map(exact),
        BoundId::Lb15 => lb_leaves_v2(n, m, leaves).map(float),
        BoundId::Lb16 => need_tree()
            .and_then(|_| lb_leaves_tree_v2(n, leaves))
            .map(float),
        BoundId::Lb19 => Ok(float(lb_major_h(n, x.ratios.h))),
        BoundId::Lb22 => Ok(float(lb_major_hstar(n, x.ratios.h_star))),
        BoundId::Lb24 => lb_sigma(n, x.sigma).map(float),
        BoundId::Ub25 => x
            .r_max
            .map(|r| float(ub_resistance(n, m, r)))
            .ok_or_else(|| Inapplicable::new("resistances not supplied")),
        BoundId::Ub26 => {
            need_tree()?;
            Ok(exact(Rational::from_integer(ub_tree_exact(n, x.diameter))))
        }
        BoundId::UbDr => {
            let k = x
                .distance_regular_degree
                .ok_or_else(|| Inapplicable::new("graph is not distance-regular"))?;
            ub_distance_regular_exact(n, k).map(exact)
        }
        BoundId::Ub29 => {
            let (l2, k, theta) = gap()?;
            ub_spectral(n, m, hs, l2, k, theta).map(float)
        }
        BoundId::Ub30 => {
            if !x.is_bipartite {
                return Err(Inapplicable::new("graph is not bipartite"));
            }
            let (l2, k, theta) = gap()?;
            ub_spectral_bipartite(n, m, hs, l2, k, theta).map(float)
        }
    }
}

fn is_tie(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * 1f64.max(a.abs()).max(b.abs())
}

/// Evaluates every catalog entry and picks the best applicable lower and
/// upper bound. Values within `1e-9` (relative) are ties, resolved in
/// favour of the earlier catalog entry.
pub fn evaluate_all(inputs: &BoundInputs) -> BoundCatalog {
    let results: Vec<BoundResult> = BoundId::ALL
        .iter()
        .map(|&id| BoundResult::new(id, evaluate_one(id, inputs)))
        .collect();

    let pick = |kind: BoundKind| {
        let mut best: Option<BestBound> = None;
        for r in results.iter().filter(|r| r.kind == kind) {
            let Some(v) = r.value else { continue };
            let better = match best {
                None => true,
                Some(b) if is_tie(v, b.value) => false,
                Some(b) => match kind {
                    BoundKind::Lower => v > b.value,
                    BoundKind::Upper => v < b.value,
                },
            };
            if better {
                best = Some(BestBound { id: r.id, value: v });
            }
        }
        best
    };
    let best_lower = pick(BoundKind::Lower);
    let best_upper = pick(BoundKind::Upper);
    BoundCatalog {
        results,
        best_lower,
        best_upper,
    }
}

/// Full catalog for a graph, computing every optional input.
pub fn evaluate_graph(g: &Graph) -> Result<BoundCatalog, LinalgError> {
    Ok(evaluate_all(&BoundInputs::full(g)?))
}
