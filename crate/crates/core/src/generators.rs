//! Generators for the graph families the bounds are studied on.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::Graph;

/// A graph family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// One centre joined to `n - 1` leaves.
    Star(usize),
    /// `K_{r,s}`: vertices `0..r` on one side, `r..r+s` on the other.
    CompleteBipartite(usize, usize),
    /// Vertex `i` is adjacent to `i ± o (mod n)` for every offset `o`.
    Circulant {
        n: usize,
        offsets: Vec<usize>,
    },
    /// `n1` vertices of degree `a` and `n2` of degree `b`, bipartite.
    BiregularBipartite {
        n1: usize,
        a: usize,
        n2: usize,
        b: usize,
    },
    /// `K_{n/2}` on `0..n/2` plus an `n/2`-cycle on `n/2..n`, cycle vertex
    /// `n/2 + i` joined to clique vertex `i`.
    Sun(usize),
    /// Complete binary tree of the given depth (root has degree 2).
    FullBinaryTree(usize),
    /// Full binary tree whose leaves are joined by a path in left-to-right order.
    LeafPathTree(usize),
    /// `K_{n-1}` with one pendant vertex attached.
    Lollipop(usize),
    /// Two `K_{n/3}` joined by a path of `n/3` edges. The path has
    /// `n/3 - 1` interior vertices, so the graph has `n - 1` vertices.
    BarbellThirds(usize),
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Star(_) => "star",
            FamilySpec::CompleteBipartite(..) => "complete_bipartite",
            FamilySpec::Circulant { .. } => "circulant",
            FamilySpec::BiregularBipartite { .. } => "biregular_bipartite",
            FamilySpec::Sun(_) => "sun",
            FamilySpec::FullBinaryTree(_) => "full_binary_tree",
            FamilySpec::LeafPathTree(_) => "leaf_path_tree",
            FamilySpec::Lollipop(_) => "lollipop",
            FamilySpec::BarbellThirds(_) => "barbell_thirds",
        }
    }

    fn infeasible(&self, reason: impl Into<String>) -> GraphError {
        GraphError::Infeasible {
            family: self.to_string(),
            reason: reason.into(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Star(n)
            | FamilySpec::Sun(n)
            | FamilySpec::Lollipop(n)
            | FamilySpec::BarbellThirds(n) => write!(f, "{}({})", self.name(), n),
            FamilySpec::FullBinaryTree(d) | FamilySpec::LeafPathTree(d) => {
                write!(f, "{}({})", self.name(), d)
            }
            FamilySpec::CompleteBipartite(r, s) => write!(f, "complete_bipartite({r},{s})"),
            FamilySpec::Circulant { n, offsets } => {
                let o: Vec<String> = offsets.iter().map(ToString::to_string).collect();
                write!(f, "circulant({n};{})", o.join(","))
            }
            FamilySpec::BiregularBipartite { n1, a, n2, b } => {
                write!(f, "biregular_bipartite({n1},{a},{n2},{b})")
            }
        }
    }
}

fn clique_edges(vertices: std::ops::Range<usize>) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in vertices.clone() {
        for v in u + 1..vertices.end {
            edges.push((u, v));
        }
    }
    edges
}

fn binary_tree_edges(depth: usize) -> (usize, Vec<(usize, usize)>) {
    // heap layout: children of i are 2i+1 and 2i+2
    let n = (1usize << (depth + 1)) - 1;
    let edges = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    (n, edges)
}

/// Builds the graph described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    let (n, edges) = match *spec {
        FamilySpec::Complete(n) => (n, clique_edges(0..n)),
        FamilySpec::Path(n) => (n, (1..n).map(|v| (v - 1, v)).collect()),
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(spec.infeasible("a cycle needs n >= 3"));
            }
            (n, (0..n).map(|v| (v, (v + 1) % n)).collect())
        }
        FamilySpec::Star(n) => (n, (1..n).map(|v| (0, v)).collect()),
        FamilySpec::CompleteBipartite(r, s) => {
            if r == 0 || s == 0 {
                return Err(spec.infeasible("both sides must be non-empty"));
            }
            let edges = (0..r)
                .flat_map(|u| (r..r + s).map(move |v| (u, v)))
                .collect();
            (r + s, edges)
        }
        FamilySpec::Circulant { n, ref offsets } => {
            if n < 3 {
                return Err(spec.infeasible("a circulant needs n >= 3"));
            }
            let mut offs = offsets.clone();
            offs.sort_unstable();
            offs.dedup();
            if offs.is_empty() || offs.iter().any(|&o| o == 0 || o > n / 2) {
                return Err(spec.infeasible("offsets must lie in 1..=n/2"));
            }
            let mut edges = Vec::new();
            for v in 0..n {
                for &o in &offs {
                    let w = (v + o) % n;
                    // offset n/2 on even n pairs each vertex only once
                    if 2 * o == n && w < v {
                        continue;
                    }
                    edges.push((v, w));
                }
            }
            (n, edges)
        }
        FamilySpec::BiregularBipartite { n1, a, n2, b } => {
            if n1 == 0 || n2 == 0 || a == 0 || b == 0 {
                return Err(spec.infeasible("all parameters must be positive"));
            }
            if n1 * a != n2 * b {
                return Err(spec.infeasible("requires n1*a == n2*b"));
            }
            if a > n2 || b > n1 {
                return Err(spec.infeasible("requires a <= n2 and b <= n1"));
            }
            // slot s = i*a + t goes to opposite vertex (s + s / n2) mod n2: each pass
            // over the opposite side hits every vertex once, and the shift per pass
            // keeps consecutive passes from repeating the same blocks
            let edges = (0..n1)
                .flat_map(|i| {
                    (0..a).map(move |t| {
                        let s = i * a + t;
                        (i, n1 + (s + s / n2) % n2)
                    })
                })
                .collect();
            (n1 + n2, edges)
        }
        FamilySpec::Sun(n) => {
            if n < 8 || n % 2 != 0 {
                return Err(spec.infeasible("requires even n >= 8"));
            }
            let h = n / 2;
            let mut edges = clique_edges(0..h);
            for i in 0..h {
                edges.push((h + i, h + (i + 1) % h));
                edges.push((i, h + i));
            }
            (n, edges)
        }
        FamilySpec::FullBinaryTree(depth) => {
            if depth == 0 || depth > 20 {
                return Err(spec.infeasible("depth must be in 1..=20"));
            }
            binary_tree_edges(depth)
        }
        FamilySpec::LeafPathTree(depth) => {
            if depth == 0 || depth > 20 {
                return Err(spec.infeasible("depth must be in 1..=20"));
            }
            let (n, mut edges) = binary_tree_edges(depth);
            // in the heap layout the leaves are the last 2^depth indices, left to right
            let first_leaf = (1usize << depth) - 1;
            edges.extend((first_leaf + 1..n).map(|v| (v - 1, v)));
            (n, edges)
        }
        FamilySpec::Lollipop(n) => {
            if n < 3 {
                return Err(spec.infeasible("requires n >= 3"));
            }
            let mut edges = clique_edges(0..n - 1);
            edges.push((n - 2, n - 1));
            (n, edges)
        }
        FamilySpec::BarbellThirds(n) => {
            if n < 6 || n % 3 != 0 {
                return Err(spec.infeasible("requires n divisible by 3 and n >= 6"));
            }
            let k = n / 3;
            // clique A on 0..k, path interior on k..2k-1, clique B on 2k-1..3k-1;
            // the path runs k-1 -> k -> ... -> 2k-2 -> 2k-1
            let total = 3 * k - 1;
            let mut edges = clique_edges(0..k);
            edges.extend(clique_edges(2 * k - 1..total));
            edges.extend((k..2 * k).map(|v| (v - 1, v)));
            (total, edges)
        }
    };
    Graph::new(n, edges).map_err(|e| match e {
        GraphError::Disconnected { .. } | GraphError::TooSmall(_) => spec.infeasible(e.to_string()),
        other => other,
    })
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, edges).expect("Petersen graph is valid")
}
