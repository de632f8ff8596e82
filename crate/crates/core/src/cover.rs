//! Directed cut covers: representation, verification, and the generic
//! coloring-based constructions.
//!
//! A cover of width `k` is stored per vertex as a code word: bit `i` of
//! `code(v)` is set when `v` lies on the A side of cut `i + 1`. Edge `(u, v)`
//! is covered by cut `i + 1` exactly when `u` is in `A_i` and `v` in `B_i`,
//! so the whole cover works iff `code(u) \ code(v)` is nonempty on every edge.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::colors::{antichain_codes, CodeWord};
use crate::digraph::{find_bipartition, Digraph, NotMember, Side, Vertex};

pub type Edge = (Vertex, Vertex);

/// Maximum number of cuts a [`CutCover`] can hold.
pub const MAX_CUTS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("cover is over {cover} vertices but the digraph has {graph}")]
    VertexCountMismatch { cover: usize, graph: usize },
    #[error("code of vertex {vertex} has width {found}, expected {expected}")]
    WidthMismatch {
        vertex: Vertex,
        expected: u32,
        found: u32,
    },
    #[error("at most {MAX_CUTS} cuts are supported, got {0}")]
    TooManyCuts(usize),
    #[error("not in D({k},{k}): vertex {} has indegree {} and outdegree {}", .witness.vertex, .witness.in_degree, .witness.out_degree)]
    NotMember { k: usize, witness: NotMember },
    #[error("ordering is not a permutation of the present vertices")]
    BadOrdering,
    #[error("constructed cover leaves {} edge(s) uncovered, first {:?}", .0.len(), .0.first())]
    Unverified(Vec<Edge>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverFormatError {
    #[error("missing or malformed `k <k> n <n>` header")]
    Header,
    #[error("expected {expected} cut lines, found {found}")]
    CutCount { expected: usize, found: usize },
    #[error("cut line {line}: expected {n} characters over {{A,B}}")]
    CutLine { line: usize, n: usize },
    #[error("at most {MAX_CUTS} cuts are supported, got {0}")]
    TooManyCuts(usize),
}

/// An ordered list of `k` directed cuts, each a full A/B assignment of the
/// id space `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCover {
    k: usize,
    codes: Vec<u64>,
}

impl CutCover {
    /// Cover from per-vertex code bitmasks (bit `i` = side A of cut `i + 1`).
    pub fn from_bits(k: usize, codes: Vec<u64>) -> Result<Self, CoverError> {
        if k > MAX_CUTS {
            return Err(CoverError::TooManyCuts(k));
        }
        let mask = width_mask(k);
        Ok(CutCover {
            k,
            codes: codes.into_iter().map(|c| c & mask).collect(),
        })
    }

    pub fn from_codes(k: usize, codes: &[CodeWord]) -> Result<Self, CoverError> {
        if k > MAX_CUTS {
            return Err(CoverError::TooManyCuts(k));
        }
        for (v, c) in codes.iter().enumerate() {
            if c.width as usize != k {
                return Err(CoverError::WidthMismatch {
                    vertex: v,
                    expected: k as u32,
                    found: c.width,
                });
            }
        }
        Ok(CutCover {
            k,
            codes: codes.iter().map(|c| c.bits).collect(),
        })
    }

    /// Number of cuts.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of vertex ids covered by the membership table.
    pub fn n(&self) -> usize {
        self.codes.len()
    }

    /// Whether `v` is in `A_cut` (cuts are 0-based here).
    pub fn in_a(&self, cut: usize, v: Vertex) -> bool {
        self.codes[v] >> cut & 1 == 1
    }

    pub fn code(&self, v: Vertex) -> CodeWord {
        CodeWord::new(self.k as u32, self.codes[v])
    }

    pub fn code_bits(&self) -> &[u64] {
        &self.codes
    }

    /// Lowest 0-based cut containing `(u, v)` in its directed cut.
    pub fn covering_cut(&self, u: Vertex, v: Vertex) -> Option<usize> {
        (0..self.k).find(|&i| self.in_a(i, u) && !self.in_a(i, v))
    }

    /// Keeps only the listed cuts, in the given order.
    pub fn select_cuts(&self, cuts: &[usize]) -> CutCover {
        let codes = self
            .codes
            .iter()
            .map(|&c| {
                cuts.iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &i)| acc | ((c >> i) & 1) << j)
            })
            .collect();
        CutCover {
            k: cuts.len(),
            codes,
        }
    }

    /// Appends cut `A = {v : in_a(v)}` as the last cut.
    pub fn push_cut(&self, in_a: impl Fn(Vertex) -> bool) -> Result<CutCover, CoverError> {
        if self.k + 1 > MAX_CUTS {
            return Err(CoverError::TooManyCuts(self.k + 1));
        }
        let codes = self
            .codes
            .iter()
            .enumerate()
            .map(|(v, &c)| c | (in_a(v) as u64) << self.k)
            .collect();
        Ok(CutCover {
            k: self.k + 1,
            codes,
        })
    }

    /// Serializes to the cover file format: `k <k> n <n>` followed by one
    /// `A`/`B` line per cut.
    pub fn to_text(&self) -> String {
        let mut s = format!("k {} n {}\n", self.k, self.n());
        for i in 0..self.k {
            s.extend((0..self.n()).map(|v| if self.in_a(i, v) { 'A' } else { 'B' }));
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<CutCover, CoverFormatError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header: Vec<&str> = lines
            .next()
            .ok_or(CoverFormatError::Header)?
            .split_whitespace()
            .collect();
        let (k, n) = match header.as_slice() {
            ["k", k, "n", n] => (
                k.parse::<usize>().map_err(|_| CoverFormatError::Header)?,
                n.parse::<usize>().map_err(|_| CoverFormatError::Header)?,
            ),
            _ => return Err(CoverFormatError::Header),
        };
        if k > MAX_CUTS {
            return Err(CoverFormatError::TooManyCuts(k));
        }
        let mut codes = vec![0u64; n];
        let mut found = 0;
        for (i, line) in lines.enumerate() {
            if i >= k {
                return Err(CoverFormatError::CutCount {
                    expected: k,
                    found: i + 1,
                });
            }
            if line.len() != n {
                return Err(CoverFormatError::CutLine { line: i + 2, n });
            }
            for (v, ch) in line.chars().enumerate() {
                match ch {
                    'A' => codes[v] |= 1 << i,
                    'B' => {}
                    _ => return Err(CoverFormatError::CutLine { line: i + 2, n }),
                }
            }
            found += 1;
        }
        if found != k {
            return Err(CoverFormatError::CutCount { expected: k, found });
        }
        Ok(CutCover { k, codes })
    }
}

fn width_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Outcome of [`verify_cover`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverCheck {
    Covered,
    Uncovered(Vec<Edge>),
}

impl CoverCheck {
    pub fn is_covered(&self) -> bool {
        matches!(self, CoverCheck::Covered)
    }
}

/// Checks every edge against the cuts one at a time and lists the edges no
/// cut contains.
pub fn verify_cover(d: &Digraph, cover: &CutCover) -> Result<CoverCheck, CoverError> {
    if cover.n() != d.id_bound() {
        return Err(CoverError::VertexCountMismatch {
            cover: cover.n(),
            graph: d.id_bound(),
        });
    }
    let uncovered: Vec<Edge> = d
        .edges()
        .filter(|&(u, v)| cover.covering_cut(u, v).is_none())
        .collect();
    Ok(if uncovered.is_empty() {
        CoverCheck::Covered
    } else {
        CoverCheck::Uncovered(uncovered)
    })
}

/// `A_i = {v : i in code(v)}`. The codes must be indexed by vertex id and
/// share one width.
pub fn cover_from_codes(d: &Digraph, codes: &[CodeWord]) -> Result<CutCover, CoverError> {
    if codes.len() != d.id_bound() {
        return Err(CoverError::VertexCountMismatch {
            cover: codes.len(),
            graph: d.id_bound(),
        });
    }
    let k = codes.first().map_or(0, |c| c.width as usize);
    CutCover::from_codes(k, codes)
}

/// Drops cuts that cover no edge of `d`.
pub fn prune_idle_cuts(d: &Digraph, cover: &CutCover) -> CutCover {
    let busy: Vec<usize> = (0..cover.k())
        .filter(|&i| d.edges().any(|(u, v)| cover.in_a(i, u) && !cover.in_a(i, v)))
        .collect();
    cover.select_cuts(&busy)
}

/// Repeated minimum-degree removal on the underlying simple graph (ties go to
/// the lowest id). Returns the removal order and the degeneracy: every vertex
/// has at most that many neighbors later in the order.
pub fn degeneracy_order(d: &Digraph) -> (Vec<Vertex>, usize) {
    let mut deg = vec![0usize; d.id_bound()];
    let mut queue = BTreeSet::new();
    for v in d.vertices() {
        deg[v] = d.underlying_degree(v);
        queue.insert((deg[v], v));
    }
    let mut removed = vec![false; d.id_bound()];
    let mut order = Vec::with_capacity(queue.len());
    let mut degeneracy = 0;
    while let Some((dv, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(dv);
        removed[v] = true;
        order.push(v);
        for w in d.underlying_neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    (order, degeneracy)
}

/// Greedy proper coloring of the underlying graph, visiting vertices in the
/// given sequence and giving each the lowest class unused by its colored
/// neighbors. Returns a class per id (absent ids get class 0).
///
/// Feeding the reverse of [`degeneracy_order`] uses at most degeneracy + 1
/// classes.
pub fn greedy_color_underlying(d: &Digraph, sequence: &[Vertex]) -> Result<Vec<usize>, CoverError> {
    let mut seen = vec![false; d.id_bound()];
    for &v in sequence {
        if !d.is_present(v) || std::mem::replace(&mut seen[v], true) {
            return Err(CoverError::BadOrdering);
        }
    }
    if sequence.len() != d.order() {
        return Err(CoverError::BadOrdering);
    }

    let mut class: Vec<Option<usize>> = vec![None; d.id_bound()];
    for &v in sequence {
        let nbrs = d.underlying_neighbors(v);
        let mut used = vec![false; nbrs.len() + 1];
        for w in nbrs {
            if let Some(c) = class[w] {
                if c < used.len() {
                    used[c] = true;
                }
            }
        }
        class[v] = used.iter().position(|&u| !u);
    }
    Ok(class.into_iter().map(|c| c.unwrap_or(0)).collect())
}

/// Greedy-colors the underlying graph along the reverse degeneracy order and
/// hands each of the `m` classes one code from [`antichain_codes`], giving a
/// cover with `c(m)` cuts.
pub fn cover_via_coloring(d: &Digraph) -> CutCover {
    let (mut order, _) = degeneracy_order(d);
    order.reverse();
    let class = greedy_color_underlying(d, &order).expect("degeneracy order is a permutation");
    let m = d.vertices().map(|v| class[v] + 1).max().unwrap_or(0);
    let codes = antichain_codes(m as u64);
    let k = codes.first().map_or(0, |c| c.width as usize);
    let bits = class
        .iter()
        .map(|&c| codes.get(c).map_or(0, |w| w.bits))
        .collect();
    CutCover::from_bits(k, bits).expect("c(m) stays far below 64 for any realistic m")
}

/// Cover of a D(k,k) digraph with at most `c(2k+1) + 1` cuts: the canonical
/// bipartition's cut `E(X,Y)` goes last, and the rest of the edges (a
/// 2k-degenerate digraph) are covered by [`cover_via_coloring`].
pub fn theorem3_cover(d: &Digraph, k: usize) -> Result<CutCover, CoverError> {
    let p = find_bipartition(d, k, k).map_err(|witness| CoverError::NotMember { k, witness })?;
    let rest = d.filter_edges(|u, v| !(p.side(u) == Side::X && p.side(v) == Side::Y));
    let cover = cover_via_coloring(&rest).push_cut(|v| p.is_x(v))?;
    match verify_cover(d, &cover)? {
        CoverCheck::Covered => Ok(cover),
        CoverCheck::Uncovered(e) => Err(CoverError::Unverified(e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digraph(n: usize, edges: &[Edge]) -> Digraph {
        Digraph::from_edges(n, edges).unwrap()
    }

    fn complete(n: usize) -> Digraph {
        let edges: Vec<Edge> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        digraph(n, &edges)
    }

    #[test]
    fn verify_examples() {
        let edge = digraph(2, &[(0, 1)]);
        let one_cut = CutCover::from_bits(1, vec![1, 0]).unwrap();
        assert_eq!(verify_cover(&edge, &one_cut), Ok(CoverCheck::Covered));

        let cycle = digraph(2, &[(0, 1), (1, 0)]);
        assert_eq!(
            verify_cover(&cycle, &one_cut),
            Ok(CoverCheck::Uncovered(vec![(1, 0)]))
        );

        let short = CutCover::from_bits(1, vec![1]).unwrap();
        assert_eq!(
            verify_cover(&cycle, &short),
            Err(CoverError::VertexCountMismatch { cover: 1, graph: 2 })
        );
    }

    #[test]
    fn cover_from_code_examples() {
        let k2 = complete(2);
        let codes = [CodeWord::from_elems(2, &[1]), CodeWord::from_elems(2, &[2])];
        let cover = cover_from_codes(&k2, &codes).unwrap();
        assert_eq!(cover.k(), 2);
        assert!(verify_cover(&k2, &cover).unwrap().is_covered());

        let edge = digraph(2, &[(0, 1)]);
        let codes = [CodeWord::new(1, 0), CodeWord::new(1, 1)];
        let cover = cover_from_codes(&edge, &codes).unwrap();
        assert!(!verify_cover(&edge, &cover).unwrap().is_covered());

        let k5 = complete(5);
        let cover = cover_from_codes(&k5, &antichain_codes(5)).unwrap();
        assert_eq!(cover.k(), 4);
        assert!(verify_cover(&k5, &cover).unwrap().is_covered());

        let mixed = [CodeWord::new(2, 1), CodeWord::new(3, 1)];
        assert_eq!(
            cover_from_codes(&edge, &mixed),
            Err(CoverError::WidthMismatch {
                vertex: 1,
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn degeneracy_examples() {
        let path = digraph(3, &[(0, 1), (1, 2)]);
        assert_eq!(degeneracy_order(&path).1, 1);
        assert_eq!(degeneracy_order(&complete(7)).1, 6);
        assert_eq!(degeneracy_order(&Digraph::empty(3)), (vec![0, 1, 2], 0));
        assert_eq!(degeneracy_order(&Digraph::empty(0)), (vec![], 0));
    }

    #[test]
    fn greedy_examples() {
        let k4 = complete(4);
        let classes = greedy_color_underlying(&k4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(classes, vec![0, 1, 2, 3]);
        let empty = Digraph::empty(5);
        let classes = greedy_color_underlying(&empty, &[4, 3, 2, 1, 0]).unwrap();
        assert!(classes.iter().all(|&c| c == 0));
        assert_eq!(
            greedy_color_underlying(&k4, &[0, 1, 1, 3]),
            Err(CoverError::BadOrdering)
        );
        assert_eq!(
            greedy_color_underlying(&k4, &[0, 1, 2]),
            Err(CoverError::BadOrdering)
        );
    }

    #[test]
    fn coloring_cover_examples() {
        assert_eq!(cover_via_coloring(&Digraph::empty(4)).k(), 0);
        let cycle = digraph(2, &[(0, 1), (1, 0)]);
        let cover = cover_via_coloring(&cycle);
        assert_eq!(cover.k(), 2);
        assert!(verify_cover(&cycle, &cover).unwrap().is_covered());
        assert_eq!(cover_via_coloring(&Digraph::empty(0)).k(), 0);
    }

    #[test]
    fn theorem3_edgeless() {
        let cover = theorem3_cover(&Digraph::empty(3), 0).unwrap();
        assert_eq!(cover.k(), 1);
    }

    #[test]
    fn theorem3_rejects_non_members() {
        let err = theorem3_cover(&complete(4), 2).unwrap_err();
        assert!(matches!(err, CoverError::NotMember { k: 2, .. }));
    }

    #[test]
    fn prune_drops_idle_cuts() {
        let edge = digraph(2, &[(0, 1)]);
        // cut 1 is one-sided, cut 2 covers the edge, cut 3 is reversed
        let cover = CutCover::from_bits(3, vec![0b011, 0b101]).unwrap();
        let pruned = prune_idle_cuts(&edge, &cover);
        assert_eq!(pruned.k(), 1);
        assert!(verify_cover(&edge, &pruned).unwrap().is_covered());
    }

    #[test]
    fn cover_file_format() {
        let cover = CutCover::from_bits(2, vec![0b01, 0b10, 0b11]).unwrap();
        let text = cover.to_text();
        assert_eq!(text, "k 2 n 3\nABA\nBAA\n");
        assert_eq!(CutCover::parse(&text), Ok(cover));
        assert_eq!(CutCover::parse("k 2 n 3\nABA\n"), Err(CoverFormatError::CutCount { expected: 2, found: 1 }));
        assert_eq!(CutCover::parse("k 1 n 3\nAB\n"), Err(CoverFormatError::CutLine { line: 2, n: 3 }));
        assert_eq!(CutCover::parse("k 1 n 2\nAC\n"), Err(CoverFormatError::CutLine { line: 2, n: 2 }));
        assert_eq!(CutCover::parse("cuts 1\n"), Err(CoverFormatError::Header));
        assert_eq!(CutCover::parse("k 0 n 2\n").map(|c| c.k()), Ok(0));
    }
}
