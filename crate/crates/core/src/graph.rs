//! Simple connected undirected graphs.
//!
//! A [`Graph`] is validated once on construction and immutable afterwards.
//! Edges are stored canonically as `(min, max)` in lexicographic order and
//! adjacency lists are sorted, so every iteration order is deterministic.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A validated simple, undirected, connected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds and validates a graph from an edge list. Edges may be given in
    /// either orientation; they are canonicalized to `(min, max)`.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooSmall(n));
        }
        let mut canon = Vec::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let g = Graph {
            n,
            edges: canon,
            adjacency,
        };
        let reached = g.bfs(0).iter().filter(|d| d.is_some()).count();
        if reached != n {
            return Err(GraphError::Disconnected { reached, n });
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Degrees indexed by vertex (not sorted).
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs shortest-path lengths by repeated BFS.
    pub fn distances(&self) -> DistanceMatrix {
        let mut d = Vec::with_capacity(self.n * self.n);
        for s in 0..self.n {
            // connectivity is an invariant, so every entry is reached
            d.extend(self.bfs(s).into_iter().map(|x| x.unwrap_or(usize::MAX)));
        }
        DistanceMatrix { n: self.n, d }
    }

    pub fn diameter(&self) -> usize {
        self.distances().max()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees())
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() == self.n - 1
    }

    /// Two-coloring by BFS from vertex 0.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        color[0] = Some(false);
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap_or(false);
            for &w in &self.adjacency[u] {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return false,
                    Some(_) => {}
                }
            }
        }
        true
    }

    pub fn is_regular(&self) -> bool {
        let d0 = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d0)
    }

    /// Checks distance-regularity by direct enumeration: for every ordered
    /// pair `(u, v)` at distance `i`, the number of neighbours of `v` at
    /// distance `i - 1` from `u` (`c_i`) and at distance `i + 1` (`b_i`) must
    /// depend on `i` only.
    pub fn is_distance_regular(&self) -> bool {
        self.intersection_array().is_some()
    }

    /// The intersection numbers `(b_i, c_i)` for `i = 0..=diameter`, or
    /// `None` if the graph is not distance-regular.
    pub fn intersection_array(&self) -> Option<Vec<(usize, usize)>> {
        if !self.is_regular() {
            return None;
        }
        let dist = self.distances();
        let diam = dist.max();
        let mut numbers: Vec<Option<(usize, usize)>> = vec![None; diam + 1];
        for u in 0..self.n {
            for v in 0..self.n {
                let i = dist.get(u, v);
                let mut b = 0;
                let mut c = 0;
                for &w in self.neighbors(v) {
                    let dw = dist.get(u, w);
                    if dw + 1 == i {
                        c += 1;
                    } else if dw == i + 1 {
                        b += 1;
                    }
                }
                match numbers[i] {
                    None => numbers[i] = Some((b, c)),
                    Some(prev) if prev != (b, c) => return None,
                    Some(_) => {}
                }
            }
        }
        numbers.into_iter().collect()
    }
}

/// Shortest-path distances, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<usize>,
}

impl DistanceMatrix {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.d[i * self.n + j]
    }

    pub fn max(&self) -> usize {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Degrees sorted non-decreasingly, with the derived quantities the lower
/// bounds are written in: leaf count `M`, minimum degree `d_1` and `Σ 1/d_j`.
///
/// For `N = 2` (a single edge) both vertices are leaves, so `m_leaves == N`;
/// this is the only connected graph where that happens.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeSequence {
    pub degrees: Vec<usize>,
    pub m_leaves: usize,
    pub min_degree: usize,
    pub harmonic_sum: f64,
}

impl DegreeSequence {
    pub fn from_degrees(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        let m_leaves = degrees.iter().filter(|&&d| d == 1).count();
        let min_degree = degrees.first().copied().unwrap_or(0);
        let harmonic_sum = degrees.iter().map(|&d| 1.0 / d as f64).sum();
        DegreeSequence {
            degrees,
            m_leaves,
            min_degree,
            harmonic_sum,
        }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// `(degree, multiplicity)` pairs in increasing degree order.
    pub fn histogram(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &d in &self.degrees {
            match out.last_mut() {
                Some((deg, count)) if *deg == d => *count += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }
}
