//! Instance builders: complete digraphs, the 7-vertex circulant tournament,
//! the 49-vertex D(3,3) witness digraph, and seeded random D(k,l) members.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Digraph, Vertex};

/// Both orientations of every pair.
pub fn complete_digraph(n: usize) -> Digraph {
    let edges: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    Digraph::from_edges(n, &edges).expect("complete digraph is simple")
}

/// Out-neighbors of vertex `i` are `i+1, i+2, i+3 (mod 7)`.
pub fn circulant_tournament7() -> Digraph {
    Digraph::from_edges(7, &circulant_edges(0)).expect("circulant tournament is simple")
}

fn circulant_edges(offset: Vertex) -> Vec<(Vertex, Vertex)> {
    (0..7)
        .flat_map(|i| (1..=3).map(move |s| (offset + i, offset + (i + s) % 7)))
        .collect()
}

/// Vertex ids of the witness digraph: `x_1..x_7` are `0..7`, `y_1..y_7` are
/// `7..14`, and `z_{i,j,k}` follow in lexicographic order of `i < j < k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DStarLabels {
    triples: Vec<[usize; 3]>,
}

impl DStarLabels {
    fn new() -> Self {
        let mut triples = Vec::with_capacity(35);
        for i in 1..=7 {
            for j in i + 1..=7 {
                for k in j + 1..=7 {
                    triples.push([i, j, k]);
                }
            }
        }
        DStarLabels { triples }
    }

    /// `x_i`, `i` in `1..=7`.
    pub fn x(&self, i: usize) -> Vertex {
        assert!((1..=7).contains(&i));
        i - 1
    }

    /// `y_i`, `i` in `1..=7`.
    pub fn y(&self, i: usize) -> Vertex {
        assert!((1..=7).contains(&i));
        7 + i - 1
    }

    /// `z_{i,j,k}` for any three distinct indices in `1..=7`.
    pub fn z(&self, mut t: [usize; 3]) -> Vertex {
        t.sort_unstable();
        14 + self
            .triples
            .iter()
            .position(|&u| u == t)
            .expect("three distinct indices in 1..=7")
    }

    pub fn x_block(&self) -> std::ops::Range<Vertex> {
        0..7
    }

    pub fn y_block(&self) -> std::ops::Range<Vertex> {
        7..14
    }

    pub fn z_block(&self) -> std::ops::Range<Vertex> {
        14..49
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn name(&self, v: Vertex) -> String {
        match v {
            0..=6 => format!("x{}", v + 1),
            7..=13 => format!("y{}", v - 6),
            _ => {
                let [i, j, k] = self.triples[v - 14];
                format!("z_{i}_{j}_{k}")
            }
        }
    }

    /// One `<name> <id>` line per vertex.
    pub fn to_text(&self) -> String {
        (0..49).map(|v| format!("{} {}\n", self.name(v), v)).collect()
    }
}

/// The 49-vertex, 441-edge member of D(3,3): two copies of the circulant
/// tournament, a common out-neighbor for each triple of the first copy, and
/// every edge from the first copy and the triple vertices into the second
/// copy.
pub fn build_dstar() -> (Digraph, DStarLabels) {
    let labels = DStarLabels::new();
    let mut edges = circulant_edges(0);
    edges.extend(circulant_edges(7));
    for &t in labels.triples() {
        let z = labels.z(t);
        edges.extend(t.iter().map(|&i| (labels.x(i), z)));
    }
    for src in labels.x_block().chain(labels.z_block()) {
        edges.extend(labels.y_block().map(|y| (src, y)));
    }
    let d = Digraph::from_edges(49, &edges).expect("construction is simple");
    (d, labels)
}

/// Seeded random member of D(k,l). Ids `0..nx` form the X block (indegree
/// capped at `k`) and `nx..nx+ny` the Y block (outdegree capped at `l`).
/// Candidate edges are visited in a seeded random order and each is sampled
/// with probability `density`; sampled edges that would break a cap are
/// dropped, so `density` is an upper bound on the realized density.
pub fn random_dkl(nx: usize, ny: usize, k: usize, l: usize, density: f64, seed: u64) -> Digraph {
    let n = nx + ny;
    let density = density.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    candidates.shuffle(&mut rng);

    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in candidates {
        if !rng.gen_bool(density) {
            continue;
        }
        if v < nx && indeg[v] >= k {
            continue;
        }
        if u >= nx && outdeg[u] >= l {
            continue;
        }
        indeg[v] += 1;
        outdeg[u] += 1;
        edges.push((u, v));
    }
    Digraph::from_edges(n, &edges).expect("candidates are distinct non-loop pairs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::find_bipartition;

    #[test]
    fn complete_examples() {
        assert_eq!(complete_digraph(0).order(), 0);
        let two = complete_digraph(2);
        assert!(two.has_edge(0, 1) && two.has_edge(1, 0));
        assert_eq!(complete_digraph(7).edge_count(), 42);
    }

    #[test]
    fn circulant_examples() {
        let d = circulant_tournament7();
        assert_eq!(d.edge_count(), 21);
        // x_1 -> x_4 present, x_1 -> x_5 absent
        assert!(d.has_edge(0, 3));
        assert!(!d.has_edge(0, 4));
        assert!(d.has_edge(4, 0));
        for v in 0..7 {
            assert_eq!((d.in_degree(v), d.out_degree(v)), (3, 3));
        }
        for u in 0..7 {
            for v in u + 1..7 {
                assert!(d.has_edge(u, v) ^ d.has_edge(v, u));
            }
        }
    }

    #[test]
    fn dstar_labels() {
        let (_, labels) = build_dstar();
        assert_eq!(labels.z([1, 2, 3]), 14);
        assert_eq!(labels.z([3, 1, 2]), 14);
        assert_eq!(labels.z([5, 6, 7]), 48);
        assert_eq!(labels.name(14), "z_1_2_3");
        let text = labels.to_text();
        assert!(text.starts_with("x1 0\n"));
        assert!(text.contains("y1 7\n"));
        assert!(text.contains("z_1_2_3 14\n"));
        assert_eq!(text.lines().count(), 49);
    }

    #[test]
    fn random_is_deterministic_and_member() {
        let a = random_dkl(8, 6, 2, 3, 0.7, 42);
        let b = random_dkl(8, 6, 2, 3, 0.7, 42);
        assert_eq!(a, b);
        assert_ne!(a, random_dkl(8, 6, 2, 3, 0.7, 43));
        assert!(find_bipartition(&a, 2, 3).is_ok());
        assert_eq!(random_dkl(0, 0, 3, 3, 0.5, 1).order(), 0);
        assert_eq!(random_dkl(5, 5, 3, 3, 0.0, 1).edge_count(), 0);
    }
}
