//! Exact dicut cover search.
//!
//! A digraph has a cover by `k` directed cuts iff its vertices can be given
//! code words `code(v) ⊆ {1..k}` with `code(u) ⊄ code(v)` on every edge
//! `(u, v)`. The search assigns codes vertex by vertex (decreasing
//! underlying degree) with forward checking: assigning `a` to `u` deletes
//! every superset of `a` from the domains of `u`'s out-neighbors and every
//! subset of `a` from its in-neighbors' domains.
//!
//! Cut indices are interchangeable, so the search only tries codes that are
//! canonical under the permutations of `{1..k}` fixing every code assigned so
//! far: within each class of cut indices that no assigned code tells apart,
//! the chosen code must use the lowest indices first. For the first vertex
//! this leaves one code per cardinality.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::colors::CodeWord;
use crate::cover::{cover_via_coloring, CutCover};
use crate::digraph::{Digraph, Vertex};

/// Widest cover the code search handles directly (domains are 128-bit sets).
pub const MAX_SEARCH_WIDTH: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("search budget must have positive node and time limits")]
    EmptyBudget,
    #[error("exact search supports at most {MAX_SEARCH_WIDTH} cuts, got {0}")]
    WidthUnsupported(usize),
    #[error("a CNF with zero cuts cannot encode a digraph with edges")]
    CnfZeroWidth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub wall_time: Duration,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, wall_time: Duration) -> Result<Self, SolverError> {
        if max_nodes == 0 || wall_time.is_zero() {
            return Err(SolverError::EmptyBudget);
        }
        Ok(SearchBudget {
            max_nodes,
            wall_time,
        })
    }

    pub fn with_time(wall_time: Duration) -> Result<Self, SolverError> {
        SearchBudget::new(u64::MAX, wall_time)
    }

    /// Effectively unbounded (u64::MAX nodes, one year).
    pub fn unlimited() -> Self {
        SearchBudget {
            max_nodes: u64::MAX,
            wall_time: Duration::from_secs(365 * 24 * 3600),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub symmetry_breaking: bool,
    /// Explore disjoint top-level branches concurrently. The decision and the
    /// reported witness match the sequential search unless the budget runs
    /// out.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            symmetry_breaking: true,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    /// Codes indexed by vertex id, all of width `k`.
    Found(Vec<CodeWord>),
    /// Exhaustively refuted.
    None,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub status: SearchStatus,
    pub nodes_explored: u64,
}

impl SearchResult {
    pub fn witness(&self) -> Option<&[CodeWord]> {
        match &self.status {
            SearchStatus::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.status, SearchStatus::Found(_))
    }

    pub fn is_none(&self) -> bool {
        matches!(self.status, SearchStatus::None)
    }
}

pub fn exists_cover(d: &Digraph, k: usize, budget: SearchBudget) -> Result<SearchResult, SolverError> {
    exists_cover_with(d, k, budget, SearchOptions::default())
}

pub fn exists_cover_with(
    d: &Digraph,
    k: usize,
    budget: SearchBudget,
    options: SearchOptions,
) -> Result<SearchResult, SolverError> {
    let deadline = Instant::now() + budget.wall_time;
    exists_cover_until(d, k, budget.max_nodes, deadline, options)
}

fn exists_cover_until(
    d: &Digraph,
    k: usize,
    max_nodes: u64,
    deadline: Instant,
    options: SearchOptions,
) -> Result<SearchResult, SolverError> {
    let empty = |status| SearchResult {
        status,
        nodes_explored: 0,
    };
    if k == 0 {
        return Ok(empty(if d.edge_count() == 0 {
            SearchStatus::Found(vec![CodeWord::new(0, 0); d.id_bound()])
        } else {
            SearchStatus::None
        }));
    }
    if k > MAX_SEARCH_WIDTH {
        // Wide covers: fall back on the constructive bound, padded to width k.
        let cover = cover_via_coloring(d);
        if cover.k() <= k {
            return Ok(empty(SearchStatus::Found(pad_codes(&cover, k))));
        }
        return Err(SolverError::WidthUnsupported(k));
    }

    let problem = Problem::new(d, k);
    if problem.init_dom.contains(&0) {
        return Ok(empty(SearchStatus::None));
    }
    let shared = Shared {
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        lowest_found: AtomicUsize::new(usize::MAX),
        max_nodes,
        deadline,
    };

    let outcome = if options.parallel {
        run_parallel(&problem, &shared, options.symmetry_breaking)
    } else {
        let mut w = Worker::new(&problem, &shared, options.symmetry_breaking, 0);
        let r = w.search(0, problem.initial_classes());
        w.flush();
        match r {
            Step::Found => Outcome::Found(w.assign.clone()),
            Step::Exhausted => Outcome::Exhausted,
            Step::Aborted => Outcome::Aborted,
        }
    };

    let nodes_explored = shared.nodes.load(Ordering::Relaxed);
    let status = match outcome {
        Outcome::Found(assign) => SearchStatus::Found(problem.witness(d, &assign)),
        Outcome::Exhausted => SearchStatus::None,
        Outcome::Aborted => SearchStatus::Timeout,
    };
    Ok(SearchResult {
        status,
        nodes_explored,
    })
}

fn pad_codes(cover: &CutCover, k: usize) -> Vec<CodeWord> {
    cover
        .code_bits()
        .iter()
        .map(|&b| CodeWord::new(k as u32, b))
        .collect()
}

enum Outcome {
    Found(Vec<u8>),
    Exhausted,
    Aborted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Found,
    Exhausted,
    Aborted,
}

type Classes = [u8; MAX_SEARCH_WIDTH];

struct Problem {
    k: usize,
    order: Vec<Vertex>,
    /// Positions (in `order`) of later out-/in-neighbors.
    later_out: Vec<Vec<usize>>,
    later_in: Vec<Vec<usize>>,
    init_dom: Vec<u128>,
    superset: Vec<u128>,
    subset: Vec<u128>,
}

impl Problem {
    fn new(d: &Digraph, k: usize) -> Self {
        let ncodes = 1usize << k;
        let all: u128 = if ncodes == 128 {
            u128::MAX
        } else {
            (1u128 << ncodes) - 1
        };
        let full = ncodes - 1;

        let mut order: Vec<Vertex> = d.vertices().collect();
        let degree: Vec<usize> = (0..d.id_bound())
            .map(|v| if d.is_present(v) { d.underlying_degree(v) } else { 0 })
            .collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(degree[v]), v));
        let mut pos = vec![usize::MAX; d.id_bound()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }

        let later = |i: usize, list: &[Vertex]| -> Vec<usize> {
            let mut l: Vec<usize> = list.iter().map(|&w| pos[w]).filter(|&j| j > i).collect();
            l.sort_unstable();
            l
        };
        let later_out = order
            .iter()
            .enumerate()
            .map(|(i, &v)| later(i, d.out_neighbors(v)))
            .collect();
        let later_in = order
            .iter()
            .enumerate()
            .map(|(i, &v)| later(i, d.in_neighbors(v)))
            .collect();

        // Unit rules: the empty code covers no out-edge, the full code no in-edge.
        let init_dom = order
            .iter()
            .map(|&v| {
                let mut m = all;
                if d.out_degree(v) > 0 {
                    m &= !1;
                }
                if d.in_degree(v) > 0 {
                    m &= !(1u128 << full);
                }
                m
            })
            .collect();

        let superset = (0..ncodes)
            .map(|a| (0..ncodes).filter(|&b| a & !b == 0).fold(0u128, |m, b| m | 1 << b))
            .collect();
        let subset = (0..ncodes)
            .map(|b| (0..ncodes).filter(|&a| a & !b == 0).fold(0u128, |m, a| m | 1 << a))
            .collect();

        Problem {
            k,
            order,
            later_out,
            later_in,
            init_dom,
            superset,
            subset,
        }
    }

    fn initial_classes(&self) -> Classes {
        [0; MAX_SEARCH_WIDTH]
    }

    fn witness(&self, d: &Digraph, assign: &[u8]) -> Vec<CodeWord> {
        let mut codes = vec![CodeWord::new(self.k as u32, 0); d.id_bound()];
        for (i, &v) in self.order.iter().enumerate() {
            codes[v] = CodeWord::new(self.k as u32, assign[i] as u64);
        }
        codes
    }
}

/// Splits each class of interchangeable cut indices by membership in `code`
/// and renumbers classes by first occurrence.
fn refine(classes: &Classes, k: usize, code: u8) -> Classes {
    let mut keys: Vec<(u8, u8)> = Vec::with_capacity(k);
    let mut out = [0u8; MAX_SEARCH_WIDTH];
    for (i, slot) in out.iter_mut().enumerate().take(k) {
        let key = (classes[i], code >> i & 1);
        *slot = match keys.iter().position(|&x| x == key) {
            Some(p) => p as u8,
            None => {
                keys.push(key);
                (keys.len() - 1) as u8
            }
        };
    }
    out
}

/// Codes whose members within each class are the lowest indices of that class.
fn canonical_mask(classes: &Classes, k: usize) -> u128 {
    let mut mask = 0u128;
    'codes: for code in 0..(1usize << k) {
        for j in 0..k {
            if code >> j & 1 == 1 {
                for i in 0..j {
                    if classes[i] == classes[j] && code >> i & 1 == 0 {
                        continue 'codes;
                    }
                }
            }
        }
        mask |= 1 << code;
    }
    mask
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    lowest_found: AtomicUsize,
    max_nodes: u64,
    deadline: Instant,
}

const FLUSH_EVERY: u64 = 256;

struct Worker<'a> {
    p: &'a Problem,
    shared: &'a Shared,
    symmetry: bool,
    task: usize,
    dom: Vec<u128>,
    assign: Vec<u8>,
    trail: Vec<(usize, u128)>,
    pending: u64,
    canon: HashMap<Classes, u128>,
}

impl<'a> Worker<'a> {
    fn new(p: &'a Problem, shared: &'a Shared, symmetry: bool, task: usize) -> Self {
        Worker {
            p,
            shared,
            symmetry,
            task,
            dom: p.init_dom.clone(),
            assign: vec![0; p.order.len()],
            trail: Vec::new(),
            pending: 0,
            canon: HashMap::new(),
        }
    }

    fn flush(&mut self) {
        if self.pending > 0 {
            self.shared.nodes.fetch_add(self.pending, Ordering::Relaxed);
            self.pending = 0;
        }
    }

    /// Counts one node; returns false when the search must stop.
    fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending < FLUSH_EVERY {
            return true;
        }
        let total = self.shared.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        if total >= self.shared.max_nodes || Instant::now() >= self.shared.deadline {
            self.shared.stop.store(true, Ordering::Relaxed);
        }
        !self.shared.stop.load(Ordering::Relaxed)
            && self.shared.lowest_found.load(Ordering::Relaxed) >= self.task
    }

    fn candidates(&mut self, depth: usize, classes: &Classes) -> u128 {
        let dom = self.dom[depth];
        if !self.symmetry {
            return dom;
        }
        let k = self.p.k;
        let canon = *self
            .canon
            .entry(*classes)
            .or_insert_with(|| canonical_mask(classes, k));
        dom & canon
    }

    /// Assigns `code` at `depth` and filters later domains. Returns false on
    /// a domain wipeout; the trail entries are left for [`Worker::undo`].
    fn assign(&mut self, depth: usize, code: usize) -> bool {
        self.assign[depth] = code as u8;
        let (sup, sub) = (self.p.superset[code], self.p.subset[code]);
        for &j in &self.p.later_out[depth] {
            let old = self.dom[j];
            let new = old & !sup;
            if new != old {
                self.trail.push((j, old));
                self.dom[j] = new;
                if new == 0 {
                    return false;
                }
            }
        }
        for &j in &self.p.later_in[depth] {
            let old = self.dom[j];
            let new = old & !sub;
            if new != old {
                self.trail.push((j, old));
                self.dom[j] = new;
                if new == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (j, old) = self.trail.pop().unwrap();
            self.dom[j] = old;
        }
    }

    fn search(&mut self, depth: usize, classes: Classes) -> Step {
        if depth == self.p.order.len() {
            return Step::Found;
        }
        let mut cands = self.candidates(depth, &classes);
        while cands != 0 {
            let code = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if !self.tick() {
                return Step::Aborted;
            }
            let mark = self.trail.len();
            if self.assign(depth, code) {
                let next = if self.symmetry {
                    refine(&classes, self.p.k, code as u8)
                } else {
                    classes
                };
                match self.search(depth + 1, next) {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.undo(mark);
        }
        Step::Exhausted
    }
}

/// Branch prefixes (codes for the first few positions), in the order the
/// sequential search would visit them.
fn split_prefixes(p: &Problem, symmetry: bool, want: usize) -> Vec<Vec<u8>> {
    let shared = Shared {
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        lowest_found: AtomicUsize::new(usize::MAX),
        max_nodes: u64::MAX,
        deadline: Instant::now() + Duration::from_secs(3600),
    };
    let mut prefixes: Vec<Vec<u8>> = vec![Vec::new()];
    let max_depth = p.order.len().min(3);
    for depth in 0..max_depth {
        if prefixes.len() >= want {
            break;
        }
        let mut next = Vec::new();
        for prefix in &prefixes {
            let mut w = Worker::new(p, &shared, symmetry, 0);
            let Some(classes) = w.replay(prefix) else { continue };
            let mut cands = w.candidates(depth, &classes);
            while cands != 0 {
                let code = cands.trailing_zeros() as usize;
                cands &= cands - 1;
                let mark = w.trail.len();
                if w.assign(depth, code) {
                    let mut np = prefix.clone();
                    np.push(code as u8);
                    next.push(np);
                }
                w.undo(mark);
            }
        }
        prefixes = next;
    }
    prefixes
}

impl Worker<'_> {
    /// Re-applies a branch prefix; None if it wipes out a domain.
    fn replay(&mut self, prefix: &[u8]) -> Option<Classes> {
        let mut classes = self.p.initial_classes();
        for (depth, &code) in prefix.iter().enumerate() {
            if !self.assign(depth, code as usize) {
                return None;
            }
            if self.symmetry {
                classes = refine(&classes, self.p.k, code);
            }
        }
        Some(classes)
    }
}

fn run_parallel(p: &Problem, shared: &Shared, symmetry: bool) -> Outcome {
    let want = rayon::current_num_threads() * 8;
    let prefixes = split_prefixes(p, symmetry, want);
    if prefixes.iter().any(|pre| pre.len() == p.order.len()) {
        // Tiny instance: the split itself reached full assignments.
        let first = prefixes.iter().find(|pre| pre.len() == p.order.len()).unwrap();
        return Outcome::Found(first.clone());
    }
    let results: Vec<(Step, Vec<u8>)> = prefixes
        .par_iter()
        .enumerate()
        .map(|(task, prefix)| {
            if shared.lowest_found.load(Ordering::Relaxed) < task {
                return (Step::Aborted, Vec::new());
            }
            let mut w = Worker::new(p, shared, symmetry, task);
            let step = match w.replay(prefix) {
                None => Step::Exhausted,
                Some(classes) => w.search(prefix.len(), classes),
            };
            w.flush();
            if step == Step::Found {
                shared.lowest_found.fetch_min(task, Ordering::Relaxed);
            }
            (step, w.assign)
        })
        .collect();

    let mut aborted = false;
    for (step, assign) in results {
        match step {
            Step::Found => return Outcome::Found(assign),
            Step::Aborted => aborted = true,
            Step::Exhausted => {}
        }
    }
    if aborted {
        Outcome::Aborted
    } else {
        Outcome::Exhausted
    }
}

/// Result of [`min_cover_number`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinCover {
    /// The dicut cover number and a witness achieving it.
    Exact {
        value: usize,
        witness: Vec<CodeWord>,
        nodes_explored: u64,
    },
    /// Every `k <= k_max` was refuted.
    AboveMax { k_max: usize, nodes_explored: u64 },
    /// The budget ran out while deciding `k = proven_infeasible_below`.
    /// All smaller `k` were refuted, so the cover number is at least that.
    Timeout {
        proven_infeasible_below: usize,
        nodes_explored: u64,
    },
}

/// Smallest `k <= k_max` admitting a cover, trying `k = 0, 1, 2, ...` under a
/// single shared budget.
pub fn min_cover_number(
    d: &Digraph,
    k_max: usize,
    budget: SearchBudget,
    options: SearchOptions,
) -> Result<MinCover, SolverError> {
    let deadline = Instant::now() + budget.wall_time;
    let mut nodes = 0u64;
    for k in 0..=k_max {
        let left = budget.max_nodes.saturating_sub(nodes);
        if left == 0 || Instant::now() >= deadline {
            return Ok(MinCover::Timeout {
                proven_infeasible_below: k,
                nodes_explored: nodes,
            });
        }
        let r = exists_cover_until(d, k, left, deadline, options)?;
        nodes += r.nodes_explored;
        match r.status {
            SearchStatus::Found(witness) => {
                return Ok(MinCover::Exact {
                    value: k,
                    witness,
                    nodes_explored: nodes,
                })
            }
            SearchStatus::None => {}
            SearchStatus::Timeout => {
                return Ok(MinCover::Timeout {
                    proven_infeasible_below: k,
                    nodes_explored: nodes,
                })
            }
        }
    }
    Ok(MinCover::AboveMax {
        k_max,
        nodes_explored: nodes,
    })
}

/// Variable number of `x_{v,i}` ("v is on the A side of cut i"), `i` in `1..=k`.
pub fn cnf_vertex_var(k: usize, v: Vertex, i: usize) -> usize {
    v * k + i
}

/// Variable number of `z_{e,i}` ("cut i covers edge e"), `e` the 0-based
/// index of the edge in sorted order.
pub fn cnf_edge_var(n: usize, k: usize, e: usize, i: usize) -> usize {
    n * k + e * k + i
}

/// DIMACS CNF satisfiable iff `d` has a `k`-cut cover. Uses `k * (n + m)`
/// variables and `m * (2k + 1)` clauses, `n` the id bound.
pub fn export_cnf(d: &Digraph, k: usize) -> Result<String, SolverError> {
    let (n, m) = (d.id_bound(), d.edge_count());
    if k == 0 && m > 0 {
        return Err(SolverError::CnfZeroWidth);
    }
    let mut s = String::new();
    writeln!(s, "c directed cut cover: n={n} m={m} k={k}").unwrap();
    writeln!(s, "c x(v,i) = v*{k} + i for v in 0..{n}, i in 1..={k}: v on the A side of cut i").unwrap();
    writeln!(
        s,
        "c z(e,i) = {} + e*{k} + i: edge e covered by cut i; edges listed below",
        n * k
    )
    .unwrap();
    for (e, (u, v)) in d.edges().enumerate() {
        writeln!(s, "c e {e} {u} {v}").unwrap();
    }
    writeln!(s, "p cnf {} {}", k * (n + m), m * (2 * k + 1)).unwrap();
    for (e, (u, v)) in d.edges().enumerate() {
        for i in 1..=k {
            let z = cnf_edge_var(n, k, e, i);
            writeln!(s, "-{z} {} 0", cnf_vertex_var(k, u, i)).unwrap();
            writeln!(s, "-{z} -{} 0", cnf_vertex_var(k, v, i)).unwrap();
        }
        let zs: Vec<String> = (1..=k).map(|i| cnf_edge_var(n, k, e, i).to_string()).collect();
        writeln!(s, "{} 0", zs.join(" ")).unwrap();
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> SearchBudget {
        SearchBudget::with_time(Duration::from_secs(60)).unwrap()
    }

    #[test]
    fn budget_must_be_positive() {
        assert_eq!(
            SearchBudget::new(0, Duration::from_secs(1)),
            Err(SolverError::EmptyBudget)
        );
        assert_eq!(
            SearchBudget::new(10, Duration::ZERO),
            Err(SolverError::EmptyBudget)
        );
    }

    #[test]
    fn first_vertex_gets_one_code_per_size() {
        let classes = [0u8; MAX_SEARCH_WIDTH];
        let mask = canonical_mask(&classes, 3);
        let codes: Vec<u32> = (0..8).filter(|&c| mask >> c & 1 == 1).collect();
        assert_eq!(codes, vec![0b000, 0b001, 0b011, 0b111]);
    }

    #[test]
    fn refine_splits_classes() {
        let classes = [0u8; MAX_SEARCH_WIDTH];
        let r = refine(&classes, 4, 0b0011);
        assert_eq!(&r[..4], &[0, 0, 1, 1]);
        let r = refine(&r, 4, 0b0101);
        assert_eq!(&r[..4], &[0, 1, 2, 3]);
        assert_eq!(canonical_mask(&r, 4).count_ones(), 16);
    }

    #[test]
    fn two_cycle() {
        let d = Digraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(exists_cover(&d, 1, budget()).unwrap().is_none());
        let r = exists_cover(&d, 2, budget()).unwrap();
        let w = r.witness().unwrap();
        assert!(!w[0].comparable(w[1]));
    }

    #[test]
    fn zero_cuts() {
        assert!(exists_cover(&Digraph::empty(3), 0, budget()).unwrap().is_found());
        let edge = Digraph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(exists_cover(&edge, 0, budget()).unwrap().is_none());
    }

    #[test]
    fn node_budget_is_a_result() {
        let (d, _) = crate::instances::build_dstar();
        let b = SearchBudget::new(1000, Duration::from_secs(60)).unwrap();
        let r = exists_cover(&d, 4, b).unwrap();
        assert_eq!(r.status, SearchStatus::Timeout);
        assert!(r.nodes_explored >= 1000);
    }

    #[test]
    fn wide_k_uses_constructive_cover() {
        let d = crate::instances::complete_digraph(5);
        let r = exists_cover(&d, 9, budget()).unwrap();
        let w = r.witness().unwrap();
        assert!(w.iter().all(|c| c.width == 9));
        assert!(exists_cover(&crate::instances::complete_digraph(80), 8, budget()).is_err());
    }

    #[test]
    fn cnf_header_counts() {
        let edge = Digraph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(export_cnf(&edge, 1).unwrap().contains("p cnf 3 3\n"));
        let cycle = Digraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(export_cnf(&cycle, 2).unwrap().contains("p cnf 8 10\n"));
        assert_eq!(export_cnf(&edge, 0), Err(SolverError::CnfZeroWidth));
    }

    #[test]
    fn cnf_single_edge_clauses() {
        let edge = Digraph::from_edges(2, &[(0, 1)]).unwrap();
        let text = export_cnf(&edge, 1).unwrap();
        let clauses: Vec<&str> = text.lines().filter(|l| !l.starts_with('c') && !l.starts_with('p')).collect();
        // x(0,1)=1, x(1,1)=2, z(0,1)=3
        assert_eq!(clauses, vec!["-3 1 0", "-3 -2 0", "3 0"]);
    }
}
