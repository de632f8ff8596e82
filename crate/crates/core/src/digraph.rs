//! Simple digraphs (no loops, no parallel edges) over dense integer ids.
//!
//! A [`Digraph`] may be *sparse*: [`Digraph::remove_vertices`] keeps the
//! original id space and marks the removed ids absent, so algorithms that
//! delete and later reinsert vertices keep stable identities.

use std::fmt;

use thiserror::Error;

/// Vertex identifier.
pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: loop edge ({vertex}, {vertex})")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing `<n> <m>` header")]
    MissingHeader,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge ({0}, {0})")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    Duplicate(usize, usize),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    present: Vec<bool>,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Digraph {
    /// Builds a digraph on ids `0..n`. Loops and duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for (u, list) in out_adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::Duplicate(u, w[0]));
            }
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }
        Ok(Digraph {
            present: vec![true; n],
            out_adj,
            in_adj,
            edge_count: edges.len(),
        })
    }

    pub fn empty(n: usize) -> Self {
        Digraph {
            present: vec![true; n],
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Size of the id space. Equals [`Digraph::order`] unless vertices were removed.
    pub fn id_bound(&self) -> usize {
        self.present.len()
    }

    /// Number of present vertices.
    pub fn order(&self) -> usize {
        self.present.iter().filter(|&&p| p).count()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_present(&self, v: Vertex) -> bool {
        self.present.get(v).copied().unwrap_or(false)
    }

    /// Present vertices in increasing id order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.present
            .iter()
            .enumerate()
            .filter_map(|(v, &p)| p.then_some(v))
    }

    /// Edges sorted by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.id_bound() && self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Neighbors in the underlying simple graph (2-cycles collapse), sorted.
    pub fn underlying_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let (a, b) = (&self.out_adj[v], &self.in_adj[v]);
        let mut merged = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some(&x), Some(&y)) if x == y => {
                    i += 1;
                    j += 1;
                    x
                }
                (Some(&x), Some(&y)) if x < y => {
                    i += 1;
                    x
                }
                (Some(&x), None) => {
                    i += 1;
                    x
                }
                (_, Some(&y)) => {
                    j += 1;
                    y
                }
                (None, None) => unreachable!(),
            };
            merged.push(next);
        }
        merged
    }

    pub fn underlying_degree(&self, v: Vertex) -> usize {
        self.underlying_neighbors(v).len()
    }

    /// Induced subdigraph on the present vertices outside `removed`.
    /// Ids are preserved; removed ids become absent.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> Digraph {
        let mut present = self.present.clone();
        for &v in removed {
            if v < present.len() {
                present[v] = false;
            }
        }
        self.restrict(present)
    }

    /// Same vertex set, keeping only the edges accepted by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(Vertex, Vertex) -> bool) -> Digraph {
        let n = self.id_bound();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in self.edges() {
            if keep(u, v) {
                out_adj[u].push(v);
                in_adj[v].push(u);
                edge_count += 1;
            }
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }
        Digraph {
            present: self.present.clone(),
            out_adj,
            in_adj,
            edge_count,
        }
    }

    fn restrict(&self, present: Vec<bool>) -> Digraph {
        let keep = |v: &Vertex| present[*v];
        let out_adj: Vec<Vec<Vertex>> = self
            .out_adj
            .iter()
            .enumerate()
            .map(|(u, l)| {
                if present[u] {
                    l.iter().copied().filter(keep).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        let in_adj: Vec<Vec<Vertex>> = self
            .in_adj
            .iter()
            .enumerate()
            .map(|(v, l)| {
                if present[v] {
                    l.iter().copied().filter(keep).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        let edge_count = out_adj.iter().map(Vec::len).sum();
        Digraph {
            present,
            out_adj,
            in_adj,
            edge_count,
        }
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("order", &self.order())
            .field("id_bound", &self.id_bound())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Parses the edge-list format: `#` comment lines, a `<n> <m>` header, then
/// exactly `m` lines `<u> <v>`. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = data.next().ok_or(ParseError::MissingHeader)?;
    let [n, m] = parse_pair(hline, header)?;

    let mut out_adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut edges = Vec::with_capacity(m);
    for (line, l) in data {
        let [u, v] = parse_pair(line, l)?;
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex: w, n });
            }
        }
        if u == v {
            return Err(ParseError::Loop { line, vertex: u });
        }
        if out_adj[u].contains(&v) {
            return Err(ParseError::Duplicate { line, u, v });
        }
        out_adj[u].push(v);
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Digraph::from_edges(n, &edges).expect("edges validated above"))
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(ParseError::Malformed {
            line,
            msg: format!("expected two integers, got `{text}`"),
        });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| ParseError::Malformed {
            line,
            msg: format!("`{f}` is not a nonnegative integer"),
        })?;
    }
    Ok(out)
}

/// Canonical edge-list text. For sparse digraphs the header carries the id
/// bound, so absent ids reappear as isolated vertices.
pub fn to_edge_list(d: &Digraph) -> String {
    let mut s = format!("{} {}\n", d.id_bound(), d.edge_count());
    for (u, v) in d.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn as_char(self) -> char {
        match self {
            Side::X => 'X',
            Side::Y => 'Y',
        }
    }
}

/// Per-vertex X/Y assignment over the id space of a digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    sides: Vec<Side>,
}

impl Bipartition {
    pub fn new(sides: Vec<Side>) -> Self {
        Bipartition { sides }
    }

    pub fn all_x(n: usize) -> Self {
        Bipartition {
            sides: vec![Side::X; n],
        }
    }

    pub fn side(&self, v: Vertex) -> Side {
        self.sides[v]
    }

    pub fn is_x(&self, v: Vertex) -> bool {
        self.sides[v] == Side::X
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    /// `X`/`Y` string, one character per id.
    pub fn to_side_string(&self) -> String {
        self.sides.iter().map(|s| s.as_char()).collect()
    }

    pub fn parse_side_string(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                'X' => Some(Side::X),
                'Y' => Some(Side::Y),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Bipartition::new)
    }
}

/// A vertex witnessing that a digraph is outside D(k, l).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotMember {
    pub vertex: Vertex,
    pub in_degree: usize,
    pub out_degree: usize,
}

/// Places `v` in X when `indeg(v) <= k`, otherwise in Y when `outdeg(v) <= l`.
/// Absent ids are placed in X.
pub fn find_bipartition(d: &Digraph, k: usize, l: usize) -> Result<Bipartition, NotMember> {
    let mut sides = vec![Side::X; d.id_bound()];
    for v in d.vertices() {
        if d.in_degree(v) <= k {
            continue;
        }
        if d.out_degree(v) <= l {
            sides[v] = Side::Y;
        } else {
            return Err(NotMember {
                vertex: v,
                in_degree: d.in_degree(v),
                out_degree: d.out_degree(v),
            });
        }
    }
    Ok(Bipartition::new(sides))
}

/// Degrees of one vertex split by the side of the other endpoint.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RestrictedDegrees {
    pub in_x: usize,
    pub out_x: usize,
    pub in_y: usize,
    pub out_y: usize,
}

pub fn restricted_degrees(d: &Digraph, p: &Bipartition, v: Vertex) -> RestrictedDegrees {
    let mut r = RestrictedDegrees::default();
    for &u in d.in_neighbors(v) {
        match p.side(u) {
            Side::X => r.in_x += 1,
            Side::Y => r.in_y += 1,
        }
    }
    for &w in d.out_neighbors(v) {
        match p.side(w) {
            Side::X => r.out_x += 1,
            Side::Y => r.out_y += 1,
        }
    }
    r
}
