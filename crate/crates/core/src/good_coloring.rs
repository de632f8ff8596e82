//! Good colorings and the five-cut cover for D(4,4).
//!
//! A coloring of the vertices with `S_1..S_10` is *good* for a bipartition
//! `(X, Y)` when every edge inside X or inside Y joins distinct colors and
//! every edge from Y to X joins intersecting colors. A good coloring turns
//! into five cuts: cut `i` puts an X vertex on the A side when `i` is not in
//! its color, and a Y vertex on the A side when `i` is in its color.
//!
//! [`theorem4_cover`] finds a good coloring for every member of D(4,4) by
//! peeling vertices off with a fixed set of reduction rules until both sides
//! have at most four vertices, coloring that base directly, and then putting
//! the removed vertices back in reverse order.

use std::fmt;

use thiserror::Error;

use crate::colors::{common_neighbors_or_all, cross_neighbor_pair, Color, ColorSet, CodeWord};
use crate::cover::{cover_from_codes, verify_cover, CoverCheck, CutCover};
use crate::digraph::{find_bipartition, Bipartition, Digraph, NotMember, Side, Vertex};

/// Per-id color assignment; `None` marks an uncolored (or absent) id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring {
            colors: vec![None; n],
        }
    }

    pub fn from_colors(colors: Vec<Option<Color>>) -> Self {
        Coloring { colors }
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: Vertex, c: Color) {
        self.colors[v] = Some(c);
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GoodColoringError {
    #[error("vertex {0} has no color")]
    Partial(Vertex),
    #[error("coloring covers {coloring} ids but the digraph has {graph}")]
    SizeMismatch { coloring: usize, graph: usize },
}

/// Checks the two good-coloring conditions on every edge. X to Y edges are
/// unconstrained.
pub fn is_good_coloring(
    d: &Digraph,
    p: &Bipartition,
    coloring: &Coloring,
) -> Result<bool, GoodColoringError> {
    if coloring.len() != d.id_bound() || p.len() != d.id_bound() {
        return Err(GoodColoringError::SizeMismatch {
            coloring: coloring.len(),
            graph: d.id_bound(),
        });
    }
    if let Some(v) = d.vertices().find(|&v| coloring.get(v).is_none()) {
        return Err(GoodColoringError::Partial(v));
    }
    Ok(d.edges().all(|(u, v)| {
        let (cu, cv) = (coloring.get(u).unwrap(), coloring.get(v).unwrap());
        match (p.side(u), p.side(v)) {
            (Side::X, Side::X) | (Side::Y, Side::Y) => cu != cv,
            (Side::Y, Side::X) => cu.adjacent(cv),
            (Side::X, Side::Y) => true,
        }
    }))
}

/// The five cuts of a coloring: `A_i` is the union of the X color classes
/// whose color misses `i` and the Y color classes whose color contains `i`.
/// Uncolored ids sit on the B side of every cut.
pub fn cuts_from_good_coloring(p: &Bipartition, coloring: &Coloring) -> CutCover {
    let n = coloring.len();
    let mut bits = vec![0u64; n];
    for cut in 1..=5u8 {
        for (v, slot) in bits.iter_mut().enumerate() {
            let Some(c) = coloring.get(v) else { continue };
            let has = c.elems().contains(&cut);
            let in_a = match p.side(v) {
                Side::X => !has,
                Side::Y => has,
            };
            if in_a {
                *slot |= 1 << (cut - 1);
            }
        }
    }
    CutCover::from_bits(5, bits).expect("five cuts")
}

/// The code word a colored vertex receives in the five-cut cover:
/// its color for Y vertices, the complement of its color for X vertices.
pub fn good_coloring_code(side: Side, c: Color) -> CodeWord {
    let mask = c.elem_mask() as u64;
    match side {
        Side::Y => CodeWord::new(5, mask),
        Side::X => CodeWord::new(5, !mask & 0x1f),
    }
}

/// A bipartition together with a total good coloring for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodColoringCertificate {
    pub bipartition: Bipartition,
    pub coloring: Coloring,
}

impl GoodColoringCertificate {
    /// Text form:
    ///
    /// ```text
    /// n <n>
    /// sides <X/Y string>
    /// colors <i_0> <i_1> ...
    /// ```
    ///
    /// Color indices are `1..=10`; `0` marks an uncolored id.
    pub fn to_text(&self) -> String {
        let colors: Vec<String> = self
            .coloring
            .as_slice()
            .iter()
            .map(|c| c.map_or(0, Color::index).to_string())
            .collect();
        format!(
            "n {}\nsides {}\ncolors {}\n",
            self.bipartition.len(),
            self.bipartition.to_side_string(),
            colors.join(" ")
        )
    }

    pub fn parse(text: &str) -> Option<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines.next()?.strip_prefix("n ")?.trim().parse().ok()?;
        let sides = lines.next()?.strip_prefix("sides")?.trim();
        let bipartition = Bipartition::parse_side_string(sides)?;
        let colors = lines
            .next()?
            .strip_prefix("colors")?
            .split_whitespace()
            .map(|t| match t.parse::<usize>().ok()? {
                0 => Some(None),
                i => Color::new(i).ok().map(Some),
            })
            .collect::<Option<Vec<_>>>()?;
        if bipartition.len() != n || colors.len() != n || lines.next().is_some() {
            return None;
        }
        Some(GoodColoringCertificate {
            bipartition,
            coloring: Coloring::from_colors(colors),
        })
    }
}

/// Reduction rule applied during elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// X vertex with more in- than out-edges inside X.
    A,
    /// Y vertex with more out- than in-edges inside Y.
    AMirror,
    /// Balanced X vertex with at most one in-neighbor in Y.
    B,
    /// Balanced Y vertex with at most one out-neighbor in X.
    BMirror,
    /// An edge from Y to X, both endpoints removed together.
    C,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::A => "A",
            Rule::AMirror => "A'",
            Rule::B => "B",
            Rule::BMirror => "B'",
            Rule::C => "C",
        };
        f.write_str(s)
    }
}

/// One elimination step, in the order performed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Removal {
    Single { rule: Rule, v: Vertex },
    Pair { x: Vertex, y: Vertex },
}

impl Removal {
    pub fn rule(&self) -> Rule {
        match self {
            Removal::Single { rule, .. } => *rule,
            Removal::Pair { .. } => Rule::C,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Theorem4Error {
    #[error("not in D(4,4): vertex {} has indegree {} and outdegree {}", .0.vertex, .0.in_degree, .0.out_degree)]
    NotMember(NotMember),
    /// A guarantee of the reduction argument failed. This is never expected
    /// on valid input and signals either a bug or a counterexample.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone)]
pub struct Theorem4Cover {
    pub certificate: GoodColoringCertificate,
    pub cover: CutCover,
    pub removals: Vec<Removal>,
}

struct Elimination<'a> {
    d: &'a Digraph,
    p: &'a Bipartition,
    present: Vec<bool>,
}

impl Elimination<'_> {
    fn count(&self, side: Side) -> usize {
        self.d
            .vertices()
            .filter(|&v| self.present[v] && self.p.side(v) == side)
            .count()
    }

    fn live<'s>(&'s self, list: &'s [Vertex]) -> impl Iterator<Item = Vertex> + 's {
        list.iter().copied().filter(|&w| self.present[w])
    }

    /// `(in_X, out_X, in_Y, out_Y)` in the current subdigraph.
    fn degrees(&self, v: Vertex) -> [usize; 4] {
        let mut r = [0; 4];
        for u in self.live(self.d.in_neighbors(v)) {
            r[if self.p.is_x(u) { 0 } else { 2 }] += 1;
        }
        for w in self.live(self.d.out_neighbors(v)) {
            r[if self.p.is_x(w) { 1 } else { 3 }] += 1;
        }
        r
    }

    fn find_single(&self, side: Side, pred: impl Fn([usize; 4]) -> bool) -> Option<Vertex> {
        self.d
            .vertices()
            .filter(|&v| self.present[v] && self.p.side(v) == side)
            .find(|&v| pred(self.degrees(v)))
    }

    fn next_removal(&self) -> Option<Removal> {
        let single = |rule, v| Removal::Single { rule, v };
        if let Some(x) = self.find_single(Side::X, |[ix, ox, _, _]| ix > ox) {
            return Some(single(Rule::A, x));
        }
        if let Some(y) = self.find_single(Side::Y, |[_, _, iy, oy]| oy > iy) {
            return Some(single(Rule::AMirror, y));
        }
        if let Some(x) = self.find_single(Side::X, |[ix, ox, iy, _]| ix == ox && iy <= 1) {
            return Some(single(Rule::B, x));
        }
        if let Some(y) = self.find_single(Side::Y, |[_, ox, iy, oy]| oy == iy && ox <= 1) {
            return Some(single(Rule::BMirror, y));
        }
        self.d
            .vertices()
            .filter(|&y| self.present[y] && !self.p.is_x(y))
            .find_map(|y| {
                self.live(self.d.out_neighbors(y))
                    .find(|&x| self.p.is_x(x))
                    .map(|x| Removal::Pair { x, y })
            })
    }
}

/// Colors `v` may take given the colored vertices: distinct from colored
/// same-side neighbors and adjacent to every colored neighbor across a
/// Y-to-X edge.
fn allowed_colors(d: &Digraph, p: &Bipartition, coloring: &Coloring, v: Vertex) -> ColorSet {
    let side = p.side(v);
    let colored = |w: &Vertex| coloring.get(*w).map(|c| (*w, c));
    let mut same = ColorSet::EMPTY;
    for (w, c) in d
        .in_neighbors(v)
        .iter()
        .chain(d.out_neighbors(v))
        .filter_map(colored)
    {
        if p.side(w) == side {
            same = same.with(c);
        }
    }
    let cross: &[Vertex] = match side {
        Side::X => d.in_neighbors(v),
        Side::Y => d.out_neighbors(v),
    };
    let constraint: Vec<Color> = cross
        .iter()
        .filter_map(colored)
        .filter(|&(w, _)| p.side(w) != side)
        .map(|(_, c)| c)
        .collect();
    common_neighbors_or_all(&constraint).minus(same)
}

/// Five-cut cover of a D(4,4) digraph via a good coloring of its canonical
/// bipartition.
pub fn theorem4_cover(d: &Digraph) -> Result<Theorem4Cover, Theorem4Error> {
    let p = find_bipartition(d, 4, 4).map_err(Theorem4Error::NotMember)?;
    let mut elim = Elimination {
        d,
        p: &p,
        present: (0..d.id_bound()).map(|v| d.is_present(v)).collect(),
    };

    let mut removals = Vec::new();
    while elim.count(Side::X) > 4 || elim.count(Side::Y) > 4 {
        let step = elim.next_removal().ok_or_else(|| {
            Theorem4Error::Invariant("no reduction rule applies and no Y-to-X edge exists".into())
        })?;
        match step {
            Removal::Single { v, .. } => elim.present[v] = false,
            Removal::Pair { x, y } => {
                elim.present[x] = false;
                elim.present[y] = false;
            }
        }
        removals.push(step);
    }

    let mut coloring = Coloring::uncolored(d.id_bound());
    for side in [Side::X, Side::Y] {
        let base = d
            .vertices()
            .filter(|&v| elim.present[v] && p.side(v) == side);
        for (v, idx) in base.zip(1..=4) {
            coloring.set(v, Color::new(idx).unwrap());
        }
    }

    for step in removals.iter().rev() {
        match *step {
            Removal::Single { rule, v } => {
                let c = allowed_colors(d, &p, &coloring, v).first().ok_or_else(|| {
                    Theorem4Error::Invariant(format!(
                        "no admissible color when reinserting vertex {v} (rule {rule})"
                    ))
                })?;
                coloring.set(v, c);
            }
            Removal::Pair { x, y } => {
                let two_lowest = |v: Vertex| -> Result<(Color, Color), Theorem4Error> {
                    let mut it = allowed_colors(d, &p, &coloring, v).iter();
                    match (it.next(), it.next()) {
                        (Some(a), Some(b)) => Ok((a, b)),
                        _ => Err(Theorem4Error::Invariant(format!(
                            "fewer than two admissible colors for vertex {v} of pair ({x}, {y})"
                        ))),
                    }
                };
                let (bx, by) = (two_lowest(x)?, two_lowest(y)?);
                let (cx, cy) = cross_neighbor_pair(bx, by)
                    .map_err(|e| Theorem4Error::Invariant(e.to_string()))?;
                coloring.set(x, cx);
                coloring.set(y, cy);
            }
        }
    }

    match is_good_coloring(d, &p, &coloring) {
        Ok(true) => {}
        Ok(false) => return Err(Theorem4Error::Invariant("final coloring is not good".into())),
        Err(e) => return Err(Theorem4Error::Invariant(e.to_string())),
    }
    let cover = cuts_from_good_coloring(&p, &coloring);
    match verify_cover(d, &cover) {
        Ok(CoverCheck::Covered) => {}
        other => {
            return Err(Theorem4Error::Invariant(format!(
                "five-cut cover failed verification: {other:?}"
            )))
        }
    }
    Ok(Theorem4Cover {
        certificate: GoodColoringCertificate {
            bipartition: p,
            coloring,
        },
        cover,
        removals,
    })
}

/// [`cuts_from_good_coloring`] computed through per-vertex code words instead
/// of the class unions.
pub fn cuts_via_codes(d: &Digraph, p: &Bipartition, coloring: &Coloring) -> CutCover {
    let codes: Vec<CodeWord> = (0..d.id_bound())
        .map(|v| match coloring.get(v) {
            Some(c) => good_coloring_code(p.side(v), c),
            None => CodeWord::new(5, 0),
        })
        .collect();
    cover_from_codes(d, &codes).expect("codes indexed by id with width 5")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: usize) -> Color {
        Color::new(i).unwrap()
    }

    fn sides(text: &str) -> Bipartition {
        Bipartition::parse_side_string(text).unwrap()
    }

    #[test]
    fn table_two_memberships() {
        // x colored S5 = {2,3}: A_1, B_2, B_3, A_4, A_5
        let p = sides("XY");
        let coloring = Coloring::from_colors(vec![Some(s(5)), Some(s(1))]);
        let cover = cuts_from_good_coloring(&p, &coloring);
        let x_sides: Vec<bool> = (0..5).map(|i| cover.in_a(i, 0)).collect();
        assert_eq!(x_sides, vec![true, false, false, true, true]);
        // y colored S1 = {1,2}: A_1, A_2, B_3, B_4, B_5
        let y_sides: Vec<bool> = (0..5).map(|i| cover.in_a(i, 1)).collect();
        assert_eq!(y_sides, vec![true, true, false, false, false]);
    }

    #[test]
    fn table_two_rows_match() {
        // Row i of the table lists which color classes sit in A_i.
        let rows_x: [&[usize]; 5] = [
            &[5, 6, 7, 8, 9, 10],
            &[2, 3, 4, 8, 9, 10],
            &[1, 3, 4, 6, 7, 10],
            &[1, 2, 4, 5, 7, 9],
            &[1, 2, 3, 5, 6, 8],
        ];
        let rows_y: [&[usize]; 5] = [
            &[1, 2, 3, 4],
            &[1, 5, 6, 7],
            &[2, 5, 8, 9],
            &[3, 6, 8, 10],
            &[4, 7, 9, 10],
        ];
        let p = sides(&format!("{}{}", "X".repeat(10), "Y".repeat(10)));
        let colors: Vec<Option<Color>> = (1..=10).chain(1..=10).map(|i| Some(s(i))).collect();
        let cover = cuts_from_good_coloring(&p, &Coloring::from_colors(colors));
        for i in 0..5 {
            let ax: Vec<usize> = (0..10).filter(|&v| cover.in_a(i, v)).map(|v| v + 1).collect();
            let ay: Vec<usize> = (10..20).filter(|&v| cover.in_a(i, v)).map(|v| v - 9).collect();
            assert_eq!(ax, rows_x[i]);
            assert_eq!(ay, rows_y[i]);
        }
    }

    #[test]
    fn good_coloring_examples() {
        // edge inside X with equal colors
        let d = Digraph::from_edges(2, &[(0, 1)]).unwrap();
        let same = Coloring::from_colors(vec![Some(s(1)), Some(s(1))]);
        assert_eq!(is_good_coloring(&d, &sides("XX"), &same), Ok(false));
        // Y to X edge with disjoint colors
        let d = Digraph::from_edges(2, &[(1, 0)]).unwrap();
        let disjoint = Coloring::from_colors(vec![Some(s(1)), Some(s(8))]);
        assert_eq!(is_good_coloring(&d, &sides("XY"), &disjoint), Ok(false));
        // X to Y is unconstrained
        let d = Digraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(is_good_coloring(&d, &sides("XY"), &disjoint), Ok(true));
        let partial = Coloring::from_colors(vec![Some(s(1)), None]);
        assert_eq!(
            is_good_coloring(&d, &sides("XY"), &partial),
            Err(GoodColoringError::Partial(1))
        );
    }

    #[test]
    fn four_by_four_needs_no_elimination() {
        // K_4 on 0..4, K_4 on 4..8, every edge from the first block to the
        // second: the second block has indegree 7 and lands in Y.
        let mut edges = Vec::new();
        for u in 0..8 {
            for v in 0..8 {
                if u != v && (u < 4 || v >= 4) {
                    edges.push((u, v));
                }
            }
        }
        let d = Digraph::from_edges(8, &edges).unwrap();
        let out = theorem4_cover(&d).unwrap();
        assert_eq!(out.certificate.bipartition.to_side_string(), "XXXXYYYY");
        assert!(out.removals.is_empty());
        assert_eq!(out.cover.k(), 5);
        let colors: Vec<usize> = out.certificate.coloring.as_slice().iter().map(|c| c.unwrap().index()).collect();
        assert_eq!(colors, vec![1, 2, 3, 4, 1, 2, 3, 4]);
    }

    #[test]
    fn certificate_round_trip() {
        let cert = GoodColoringCertificate {
            bipartition: sides("XYX"),
            coloring: Coloring::from_colors(vec![Some(s(1)), None, Some(s(10))]),
        };
        let text = cert.to_text();
        assert_eq!(text, "n 3\nsides XYX\ncolors 1 0 10\n");
        assert_eq!(GoodColoringCertificate::parse(&text), Some(cert));
        assert_eq!(GoodColoringCertificate::parse("n 2\nsides XY\ncolors 1 11\n"), None);
    }

    #[test]
    fn non_member_is_reported() {
        let edges: Vec<(usize, usize)> = (0..9)
            .flat_map(|u| (0..9).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        let k9 = Digraph::from_edges(9, &edges).unwrap();
        assert!(matches!(theorem4_cover(&k9), Err(Theorem4Error::NotMember(_))));
    }
}
