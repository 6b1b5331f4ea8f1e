//! Naive reference oracles, written directly from the definitions with no
//! pruning and no code shared with the production search. They exist so the
//! optimized solvers can be checked against an independent route.

use lexdom::graph::Graph;
use lexdom::solvers::InvariantKind;

/// True iff `u` dominates `v` using closed neighborhoods.
fn dominates(g: &Graph, u: usize, v: usize) -> bool {
    u == v || g.has_edge(u, v)
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn naive_valid_set(g: &Graph, kind: InvariantKind, mask: u64) -> bool {
    let n = g.n();
    let sel = members(mask, n);
    match kind {
        InvariantKind::Domination => {
            (0..n).all(|v| sel.iter().any(|&u| dominates(g, u, v)))
        }
        InvariantKind::TotalDomination => {
            (0..n).all(|v| sel.iter().any(|&u| u != v && g.has_edge(u, v)))
        }
        InvariantKind::DoubleDomination => {
            (0..n).all(|v| sel.iter().filter(|&&u| dominates(g, u, v)).count() >= 2)
        }
        InvariantKind::DoubleTotalDomination => {
            (0..n).all(|v| sel.iter().filter(|&&u| u != v && g.has_edge(u, v)).count() >= 2)
        }
        InvariantKind::TwoPacking => {
            for (i, &u) in sel.iter().enumerate() {
                for &v in &sel[i + 1..] {
                    let meet = (0..n).any(|w| dominates(g, w, u) && dominates(g, w, v));
                    if meet {
                        return false;
                    }
                }
            }
            true
        }
        _ => panic!("naive_valid_set is for set-valued kinds"),
    }
}

pub fn naive_valid_function(g: &Graph, kind: InvariantKind, vals: &[u8]) -> bool {
    let n = g.n();
    for v in 0..n {
        let positive_neighbor = (0..n).any(|u| u != v && g.has_edge(u, v) && vals[u] > 0);
        if !positive_neighbor {
            return false;
        }
        if vals[v] == 0 {
            match kind {
                InvariantKind::TotalRoman => {
                    if !(0..n).any(|u| g.has_edge(u, v) && vals[u] == 2) {
                        return false;
                    }
                }
                InvariantKind::TotalRomanTwo => {
                    let supply: usize = (0..n)
                        .filter(|&u| g.has_edge(u, v))
                        .map(|u| vals[u] as usize)
                        .sum();
                    if supply < 2 {
                        return false;
                    }
                }
                _ => panic!("naive_valid_function is for function-valued kinds"),
            }
        }
    }
    true
}

/// Cardinality-ordered exhaustive scan. None when no candidate is valid.
pub fn naive_invariant(g: &Graph, kind: InvariantKind) -> Option<usize> {
    let n = g.n();
    if n == 0 {
        return Some(0);
    }
    if kind.is_function_valued() {
        let mut best: Option<usize> = None;
        let mut vals = vec![0u8; n];
        loop {
            if naive_valid_function(g, kind, &vals) {
                let w: usize = vals.iter().map(|&v| v as usize).sum();
                best = Some(best.map_or(w, |b: usize| b.min(w)));
            }
            // odometer over {0,1,2}^n
            let mut i = 0;
            while i < n && vals[i] == 2 {
                vals[i] = 0;
                i += 1;
            }
            if i == n {
                return best;
            }
            vals[i] += 1;
        }
    }
    let masks = 0..(1u64 << n);
    if kind.is_maximization() {
        masks
            .filter(|&m| naive_valid_set(g, kind, m))
            .map(|m| m.count_ones() as usize)
            .max()
    } else {
        let mut best: Option<usize> = None;
        for m in masks {
            if naive_valid_set(g, kind, m) {
                let size = m.count_ones() as usize;
                best = Some(best.map_or(size, |b: usize| b.min(size)));
            }
        }
        best
    }
}

/// Number of optimal sets found by the exhaustive scan.
pub fn naive_optimum_count(g: &Graph, kind: InvariantKind) -> usize {
    let n = g.n();
    let value = naive_invariant(g, kind).expect("feasible instance");
    (0..(1u64 << n))
        .filter(|&m| m.count_ones() as usize == value && naive_valid_set(g, kind, m))
        .count()
}
