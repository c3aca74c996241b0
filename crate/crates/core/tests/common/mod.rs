#![allow(dead_code, clippy::needless_range_loop)]

use kirchhoff::generators::{generate, petersen, FamilySpec};
use kirchhoff::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5eed_2024;
pub const MAX_N: usize = 40;

pub fn family(spec: FamilySpec) -> Graph {
    generate(&spec).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

/// Every family instance with at most `MAX_N` vertices, plus Petersen.
pub fn family_corpus() -> Vec<(String, Graph)> {
    let mut specs = Vec::new();
    for n in 2..=MAX_N {
        specs.push(FamilySpec::Complete(n));
        specs.push(FamilySpec::Path(n));
    }
    for n in 3..=MAX_N {
        specs.push(FamilySpec::Cycle(n));
        specs.push(FamilySpec::Star(n));
    }
    for r in 1..=12 {
        for s in r..=12 {
            if r + s >= 3 {
                specs.push(FamilySpec::CompleteBipartite(r, s));
            }
        }
    }
    for (n, offsets) in [
        (8, vec![1, 2]),
        (12, vec![1, 3]),
        (13, vec![1, 5]),
        (20, vec![1, 4, 7]),
        (31, vec![1, 5, 11]),
    ] {
        specs.push(FamilySpec::Circulant { n, offsets });
    }
    for (n1, a, n2, b) in [
        (10, 4, 4, 10),
        (6, 2, 4, 3),
        (9, 2, 6, 3),
        (12, 3, 9, 4),
        (20, 3, 15, 4),
    ] {
        specs.push(FamilySpec::BiregularBipartite { n1, a, n2, b });
    }
    for n in (8..=MAX_N).step_by(2) {
        specs.push(FamilySpec::Sun(n));
    }
    for d in 1..=4 {
        specs.push(FamilySpec::FullBinaryTree(d));
    }
    for d in 2..=4 {
        specs.push(FamilySpec::LeafPathTree(d));
    }
    for n in 5..=MAX_N {
        specs.push(FamilySpec::Lollipop(n));
    }
    for n in (6..=MAX_N + 1).step_by(3) {
        specs.push(FamilySpec::BarbellThirds(n));
    }
    let mut out: Vec<(String, Graph)> = specs
        .into_iter()
        .filter_map(|s| generate(&s).ok().map(|g| (s.to_string(), g)))
        .filter(|(_, g)| g.n() <= MAX_N)
        .collect();
    out.push(("petersen".to_string(), petersen()));
    out
}

/// Random spanning tree on shuffled labels plus independent extra edges
/// with a per-graph density.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((labels[u].min(labels[v]), labels[u].max(labels[v])));
    }
    let p: f64 = rng.gen_range(0.0..0.5);
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("spanning tree keeps the graph connected")
}

pub fn random_corpus(count: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=MAX_N);
            (format!("random#{i}(n={n})"), random_connected(&mut rng, n))
        })
        .collect()
}

pub fn full_corpus() -> Vec<(String, Graph)> {
    let mut c = family_corpus();
    c.extend(random_corpus(200, CORPUS_SEED));
    c
}

/// `E_i T_j` for every `i`, from the first-step equations
/// `h_i = 1 + Σ_w h_w / d_i` (`h_j = 0`), solved by Gaussian elimination.
pub fn hitting_times_to(g: &Graph, j: usize) -> Vec<f64> {
    let n = g.n();
    let idx: Vec<usize> = (0..n).filter(|&v| v != j).collect();
    let pos = |v: usize| if v < j { v } else { v - 1 };
    let m = n - 1;
    let mut a = vec![vec![0.0; m + 1]; m];
    for (row, &i) in idx.iter().enumerate() {
        let d = g.degree(i) as f64;
        a[row][row] = d;
        for &w in g.neighbors(i) {
            if w != j {
                a[row][pos(w)] -= 1.0;
            }
        }
        a[row][m] = d;
    }
    for col in 0..m {
        let piv = (col..m)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        a.swap(col, piv);
        for row in 0..m {
            if row != col {
                let f = a[row][col] / a[col][col];
                if f != 0.0 {
                    for c in col..=m {
                        a[row][c] -= f * a[col][c];
                    }
                }
            }
        }
    }
    let mut h = vec![0.0; n];
    for (row, &i) in idx.iter().enumerate() {
        h[i] = a[row][m] / a[row][row];
    }
    h
}

/// `R⁺` of a tree is its degree distance `Σ_{i<j} (d_i + d_j) dist(i, j)`.
pub fn degree_distance(g: &Graph) -> f64 {
    let d = g.distances();
    let mut s = 0usize;
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            s += (g.degree(i) + g.degree(j)) * d.get(i, j);
        }
    }
    s as f64
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}
