//! Exhaustive search over labeled connected graphs on a few vertices.

use rayon::prelude::*;

use crate::exact::{additive_index, effective_resistances, rel_error};
use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct LabeledSearch {
    pub n: usize,
    /// Number of edge subsets that form a connected graph.
    pub connected: usize,
    pub min_r_plus: f64,
    /// Edge sets attaining the minimum (relative tolerance `1e-9`),
    /// lexicographically sorted.
    pub minimizers: Vec<Vec<(usize, usize)>>,
}

/// Minimizes `R⁺` over all `2^{n(n-1)/2}` edge subsets of `K_n` that are
/// connected. Masks are split across rayon workers; the reduction sorts the
/// candidates first, so the result does not depend on the partitioning.
pub fn min_additive_index_labeled(n: usize) -> LabeledSearch {
    assert!(
        (2..=7).contains(&n),
        "labeled search is only practical for 2 <= n <= 7"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let subsets = 1u64 << pairs.len();

    let mut values: Vec<(u64, f64)> = (0..subsets)
        .into_par_iter()
        .filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::new(n, edges).ok()?;
            let rm = effective_resistances(&g).ok()?;
            Some((mask, additive_index(&g, &rm)))
        })
        .collect();
    values.sort_by_key(|&(mask, _)| mask);

    let min_r_plus = values.iter().map(|&(_, v)| v).fold(f64::INFINITY, f64::min);
    let mut minimizers: Vec<Vec<(usize, usize)>> = values
        .iter()
        .filter(|&&(_, v)| rel_error(v, min_r_plus) <= 1e-9)
        .map(|&(mask, _)| {
            pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect();
    minimizers.sort();
    LabeledSearch {
        n,
        connected: values.len(),
        min_r_plus,
        minimizers,
    }
}
