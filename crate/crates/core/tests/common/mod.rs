//! Independent oracles shared by the integration tests. Nothing here calls
//! into the search or cover code it is used to check.
#![allow(dead_code)]

use dicut::Digraph;

/// Exhaustive enumeration of all `(2^k)^n` code assignments, no pruning.
pub fn brute_force_cover_exists(d: &Digraph, k: usize) -> bool {
    let n = d.id_bound();
    let edges: Vec<(usize, usize)> = d.edges().collect();
    let ncodes = 1u64 << k;
    let total = ncodes.pow(n as u32);
    let mut codes = vec![0u64; n];
    for idx in 0..total {
        let mut rest = idx;
        for c in codes.iter_mut() {
            *c = rest % ncodes;
            rest /= ncodes;
        }
        if edges.iter().all(|&(u, v)| codes[u] & !codes[v] != 0) {
            return true;
        }
    }
    false
}

/// Parses the clause section of a DIMACS file.
pub fn parse_dimacs(text: &str) -> (usize, Vec<Vec<i64>>) {
    let mut vars = 0;
    let mut clauses = Vec::new();
    for line in text.lines() {
        if line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p cnf ") {
            vars = rest.split_whitespace().next().unwrap().parse().unwrap();
            continue;
        }
        let lits: Vec<i64> = line.split_whitespace().map(|t| t.parse().unwrap()).collect();
        assert_eq!(lits.last(), Some(&0), "clause must end with 0");
        clauses.push(lits[..lits.len() - 1].to_vec());
    }
    (vars, clauses)
}

/// Plain DPLL with unit propagation.
pub fn dpll(vars: usize, clauses: &[Vec<i64>]) -> bool {
    fn go(clauses: &[Vec<i64>], assign: &mut [Option<bool>]) -> bool {
        loop {
            let mut unit = None;
            for c in clauses {
                let mut sat = false;
                let mut free = Vec::new();
                for &l in c {
                    match assign[l.unsigned_abs() as usize] {
                        Some(b) if b == (l > 0) => {
                            sat = true;
                            break;
                        }
                        Some(_) => {}
                        None => free.push(l),
                    }
                }
                if sat {
                    continue;
                }
                match free.len() {
                    0 => return false,
                    1 => {
                        unit = Some(free[0]);
                        break;
                    }
                    _ => {}
                }
            }
            match unit {
                Some(l) => assign[l.unsigned_abs() as usize] = Some(l > 0),
                None => break,
            }
        }
        let Some(var) = (1..assign.len()).find(|&v| assign[v].is_none()) else {
            return true;
        };
        for value in [true, false] {
            let mut next = assign.to_vec();
            next[var] = Some(value);
            if go(clauses, &mut next) {
                return true;
            }
        }
        false
    }
    let mut assign = vec![None; vars + 1];
    go(clauses, &mut assign)
}

/// All digraphs on `n` labeled vertices given by a bitmask over ordered pairs.
pub fn digraph_from_mask(n: usize, mask: u64) -> Digraph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Digraph::from_edges(n, &edges).unwrap()
}

/// Every tournament on `n` labeled vertices.
pub fn all_tournaments(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (u, v) } else { (v, u) })
                .collect();
            Digraph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Textbook binomial coefficient, used to evaluate `c(n)` independently.
pub fn binom(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (1..=r).fold(1, |acc, i| acc * (n - r + i) / i)
}

pub fn c_formula(n: u64) -> u64 {
    (0..).find(|&k| binom(k, k / 2) >= n).unwrap()
}
