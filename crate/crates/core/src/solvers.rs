//! Exact solvers for the seven domination-type invariants.
//!
//! Set-valued invariants run an iterative-deepening subset search that
//! branches on the suppliers of the most deficient vertex. Function-valued
//! invariants search weight levels with the same deficiency-first branching
//! over `{0,1,2}` assignments. The 2-packing number reduces to a maximum
//! clique in the complement of the closed-neighborhood conflict graph.
//!
//! All solvers are pure and deterministic; witnesses tie-break to the
//! lexicographically smallest candidate under ascending vertex order (and
//! ascending value per vertex for weight functions).

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// The invariants the toolkit computes exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    /// Domination number.
    Domination,
    /// Total domination number.
    TotalDomination,
    /// Double domination number: every closed neighborhood meets the set twice.
    DoubleDomination,
    /// Double total domination number: every vertex has two neighbors in the set.
    DoubleTotalDomination,
    /// 2-packing number: maximum set with pairwise disjoint closed neighborhoods.
    TwoPacking,
    /// Total Roman domination number (weight functions V -> {0,1,2}).
    TotalRoman,
    /// Total Roman {2}-domination number.
    TotalRomanTwo,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 7] = [
        InvariantKind::Domination,
        InvariantKind::TotalDomination,
        InvariantKind::DoubleDomination,
        InvariantKind::DoubleTotalDomination,
        InvariantKind::TwoPacking,
        InvariantKind::TotalRoman,
        InvariantKind::TotalRomanTwo,
    ];

    /// Short code used on the command line and in reports.
    pub fn code(self) -> &'static str {
        match self {
            InvariantKind::Domination => "g",
            InvariantKind::TotalDomination => "gt",
            InvariantKind::DoubleDomination => "gx2",
            InvariantKind::DoubleTotalDomination => "g2t",
            InvariantKind::TwoPacking => "rho",
            InvariantKind::TotalRoman => "gtr",
            InvariantKind::TotalRomanTwo => "gtr2",
        }
    }

    pub fn from_code(code: &str) -> Option<InvariantKind> {
        InvariantKind::ALL.into_iter().find(|k| k.code() == code)
    }

    /// Function-valued kinds witness with a [`WeightFn`]; the rest with a
    /// [`VertexSet`].
    pub fn is_function_valued(self) -> bool {
        matches!(self, InvariantKind::TotalRoman | InvariantKind::TotalRomanTwo)
    }

    /// The 2-packing number maximizes; every other kind minimizes.
    pub fn is_maximization(self) -> bool {
        self == InvariantKind::TwoPacking
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("{kind} is infeasible: {reason}")]
    Infeasible { kind: InvariantKind, reason: String },
    #[error("weight function values must lie in 0..=2")]
    BadWeightValue,
}

/// A function `V -> {0,1,2}` identified with its level sets `V0, V1, V2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightFn {
    values: Vec<u8>,
}

impl WeightFn {
    pub fn new(values: Vec<u8>) -> Result<WeightFn, SolverError> {
        if values.iter().any(|&v| v > 2) {
            return Err(SolverError::BadWeightValue);
        }
        Ok(WeightFn { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn value(&self, v: usize) -> u8 {
        self.values[v]
    }

    /// Total weight `|V1| + 2|V2|`.
    pub fn weight(&self) -> usize {
        self.values.iter().map(|&v| v as usize).sum()
    }

    /// The level set `V_i`.
    pub fn level_set(&self, level: u8) -> VertexSet {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == level)
            .map(|(i, _)| i)
            .collect()
    }

    /// Vertices with positive value, `V1 ∪ V2`.
    pub fn positive(&self) -> VertexSet {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Debug for WeightFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightFn({:?})", self.values)
    }
}

/// A candidate witness for an invariant: a vertex set or a weight function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Set(VertexSet),
    Function(WeightFn),
}

impl Witness {
    /// Cardinality of a set witness, weight of a function witness.
    pub fn cost(&self) -> usize {
        match self {
            Witness::Set(s) => s.len(),
            Witness::Function(f) => f.weight(),
        }
    }

    pub fn as_set(&self) -> Option<VertexSet> {
        match self {
            Witness::Set(s) => Some(*s),
            Witness::Function(_) => None,
        }
    }

    pub fn as_function(&self) -> Option<&WeightFn> {
        match self {
            Witness::Set(_) => None,
            Witness::Function(f) => Some(f),
        }
    }
}

/// Tests the definitional predicate of `kind` against a witness. Returns
/// false on structurally impossible inputs (wrong witness shape, members out
/// of range) instead of erroring.
pub fn validate(g: &Graph, kind: InvariantKind, witness: &Witness) -> bool {
    match (kind, witness) {
        (InvariantKind::Domination, Witness::Set(s)) => valid_cover(g, *s, true, 1),
        (InvariantKind::TotalDomination, Witness::Set(s)) => valid_cover(g, *s, false, 1),
        (InvariantKind::DoubleDomination, Witness::Set(s)) => valid_cover(g, *s, true, 2),
        (InvariantKind::DoubleTotalDomination, Witness::Set(s)) => valid_cover(g, *s, false, 2),
        (InvariantKind::TwoPacking, Witness::Set(s)) => valid_packing(g, *s),
        (InvariantKind::TotalRoman, Witness::Function(f)) => valid_function(g, f, true),
        (InvariantKind::TotalRomanTwo, Witness::Function(f)) => valid_function(g, f, false),
        _ => false,
    }
}

fn valid_cover(g: &Graph, s: VertexSet, closed: bool, demand: usize) -> bool {
    if !s.is_subset_of(g.vertex_set()) {
        return false;
    }
    g.vertices().all(|v| {
        let sup = if closed { g.closed_neighbors(v) } else { g.neighbors(v) };
        (sup & s).len() >= demand
    })
}

fn valid_packing(g: &Graph, s: VertexSet) -> bool {
    if !s.is_subset_of(g.vertex_set()) {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for v in s.iter() {
        let cn = g.closed_neighbors(v);
        if !(cn & seen).is_empty() {
            return false;
        }
        seen = seen | cn;
    }
    true
}

fn valid_function(g: &Graph, f: &WeightFn, roman: bool) -> bool {
    if f.len() != g.n() {
        return false;
    }
    let pos = f.positive();
    let twos = f.level_set(2);
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        // V1 ∪ V2 must totally dominate
        if (nbrs & pos).is_empty() {
            return false;
        }
        if f.value(v) == 0 {
            if roman {
                if (nbrs & twos).is_empty() {
                    return false;
                }
            } else {
                let supply: usize = (nbrs & pos).iter().map(|u| f.value(u) as usize).sum();
                if supply < 2 {
                    return false;
                }
            }
        }
    }
    true
}

fn feasibility(g: &Graph, kind: InvariantKind) -> Result<(), SolverError> {
    let infeasible = |reason: &str| {
        Err(SolverError::Infeasible { kind, reason: reason.to_string() })
    };
    match kind {
        InvariantKind::Domination | InvariantKind::TwoPacking => Ok(()),
        InvariantKind::TotalDomination
        | InvariantKind::DoubleDomination
        | InvariantKind::TotalRoman
        | InvariantKind::TotalRomanTwo => {
            if g.has_isolated_vertex() {
                infeasible("the graph has an isolated vertex")
            } else {
                Ok(())
            }
        }
        InvariantKind::DoubleTotalDomination => {
            if g.n() > 0 && g.min_degree() < 2 {
                infeasible("the graph has minimum degree below 2")
            } else {
                Ok(())
            }
        }
    }
}

/// Exact value of the invariant: the minimum candidate cost, or the maximum
/// cardinality for the 2-packing number.
pub fn exact_invariant(g: &Graph, kind: InvariantKind) -> Result<usize, SolverError> {
    if g.n() == 0 {
        return Ok(0);
    }
    feasibility(g, kind)?;
    Ok(match kind {
        InvariantKind::Domination => CoverProblem::new(g, true, false).minimum(),
        InvariantKind::TotalDomination => CoverProblem::new(g, false, false).minimum(),
        InvariantKind::DoubleDomination => CoverProblem::new(g, true, true).minimum(),
        InvariantKind::DoubleTotalDomination => CoverProblem::new(g, false, true).minimum(),
        InvariantKind::TwoPacking => PackingProblem::new(g).maximum(),
        InvariantKind::TotalRoman => FnProblem::new(g, true).minimum(),
        InvariantKind::TotalRomanTwo => FnProblem::new(g, false).minimum(),
    })
}

/// An optimal witness, deterministic: the lexicographically smallest optimal
/// vertex set (as an ascending member list), or the lexicographically
/// smallest optimal value vector for function-valued kinds.
pub fn min_witness(g: &Graph, kind: InvariantKind) -> Result<Witness, SolverError> {
    let value = exact_invariant(g, kind)?;
    if g.n() == 0 {
        return Ok(if kind.is_function_valued() {
            Witness::Function(WeightFn::new(Vec::new()).expect("empty"))
        } else {
            Witness::Set(VertexSet::EMPTY)
        });
    }
    Ok(match kind {
        InvariantKind::Domination => set_witness(CoverProblem::new(g, true, false), value),
        InvariantKind::TotalDomination => set_witness(CoverProblem::new(g, false, false), value),
        InvariantKind::DoubleDomination => set_witness(CoverProblem::new(g, true, true), value),
        InvariantKind::DoubleTotalDomination => set_witness(CoverProblem::new(g, false, true), value),
        InvariantKind::TwoPacking => {
            let bits = PackingProblem::new(g)
                .lex_min_of_size(value)
                .expect("a maximum packing exists");
            Witness::Set(VertexSet::from_bits(bits))
        }
        InvariantKind::TotalRoman => fn_witness(FnProblem::new(g, true), value),
        InvariantKind::TotalRomanTwo => fn_witness(FnProblem::new(g, false), value),
    })
}

fn set_witness(p: CoverProblem, value: usize) -> Witness {
    let bits = p.lex_min_of_size(value).expect("an optimal cover exists");
    Witness::Set(VertexSet::from_bits(bits))
}

fn fn_witness(p: FnProblem, value: usize) -> Witness {
    let vals = p.lex_min_of_weight(value).expect("an optimal function exists");
    Witness::Function(WeightFn::new(vals).expect("values in range"))
}

/// Every optimal witness, each exactly once, in ascending lexicographic
/// order. Intended for small graphs; the count can be exponential.
pub fn enumerate_minimum_sets(g: &Graph, kind: InvariantKind) -> Result<Vec<Witness>, SolverError> {
    let value = exact_invariant(g, kind)?;
    if g.n() == 0 {
        return Ok(vec![if kind.is_function_valued() {
            Witness::Function(WeightFn::new(Vec::new()).expect("empty"))
        } else {
            Witness::Set(VertexSet::EMPTY)
        }]);
    }
    Ok(match kind {
        InvariantKind::Domination => all_set_witnesses(CoverProblem::new(g, true, false), value),
        InvariantKind::TotalDomination => all_set_witnesses(CoverProblem::new(g, false, false), value),
        InvariantKind::DoubleDomination => all_set_witnesses(CoverProblem::new(g, true, true), value),
        InvariantKind::DoubleTotalDomination => all_set_witnesses(CoverProblem::new(g, false, true), value),
        InvariantKind::TwoPacking => PackingProblem::new(g)
            .all_of_size(value)
            .into_iter()
            .map(|bits| Witness::Set(VertexSet::from_bits(bits)))
            .collect(),
        InvariantKind::TotalRoman => all_fn_witnesses(FnProblem::new(g, true), value),
        InvariantKind::TotalRomanTwo => all_fn_witnesses(FnProblem::new(g, false), value),
    })
}

fn all_set_witnesses(p: CoverProblem, value: usize) -> Vec<Witness> {
    p.all_of_size(value)
        .into_iter()
        .map(|bits| Witness::Set(VertexSet::from_bits(bits)))
        .collect()
}

fn all_fn_witnesses(p: FnProblem, value: usize) -> Vec<Witness> {
    p.all_of_weight(value)
        .into_iter()
        .map(|vals| Witness::Function(WeightFn::new(vals).expect("values in range")))
        .collect()
}

// ---------------------------------------------------------------------------
// Subset cover search: find a minimum S with |S ∩ sup(v)| >= demand for all v.
// ---------------------------------------------------------------------------

struct CoverProblem {
    n: usize,
    full: u64,
    /// sup[v]: the vertices whose selection supplies v. Closed or open
    /// neighborhoods; both are symmetric, so sup[u] is also the set of
    /// vertices u supplies.
    sup: Vec<u64>,
    double: bool,
}

impl CoverProblem {
    fn new(g: &Graph, closed: bool, double: bool) -> CoverProblem {
        let sup = g
            .vertices()
            .map(|v| {
                if closed {
                    g.closed_neighbors(v).bits()
                } else {
                    g.neighbors(v).bits()
                }
            })
            .collect();
        CoverProblem { n: g.n(), full: g.vertex_set().bits(), sup, double }
    }

    fn demand(&self) -> usize {
        if self.double {
            2
        } else {
            1
        }
    }

    /// (mask of vertices still deficient, total missing supply units)
    fn deficits(&self, once: u64, twice: u64) -> (u64, usize) {
        let zero = self.full & !once;
        if self.double {
            let one = self.full & once & !twice;
            (zero | one, 2 * zero.count_ones() as usize + one.count_ones() as usize)
        } else {
            (zero, zero.count_ones() as usize)
        }
    }

    fn need(&self, v: usize, once: u64, twice: u64) -> usize {
        if once >> v & 1 == 0 {
            self.demand()
        } else if self.double && twice >> v & 1 == 0 {
            1
        } else {
            0
        }
    }

    /// Minimum cover size. Feasibility (demand <= |sup(v)|) must hold.
    fn minimum(&self) -> usize {
        let ub = self.greedy();
        let lb = self.lower_bound();
        for k in lb..ub {
            if self.exists(k) {
                return k;
            }
        }
        ub
    }

    fn lower_bound(&self) -> usize {
        let total = self.demand() * self.n;
        if total == 0 {
            return 0;
        }
        let max_supply = self.sup.iter().map(|m| m.count_ones() as usize).max().unwrap_or(1).max(1);
        (total.div_ceil(max_supply)).max(self.demand())
    }

    fn greedy(&self) -> usize {
        let mut once = 0u64;
        let mut twice = 0u64;
        let mut chosen = 0u64;
        let mut size = 0;
        loop {
            let (def, total) = self.deficits(once, twice);
            if total == 0 {
                return size;
            }
            let mut best = (0usize, usize::MAX);
            let mut avail = self.full & !chosen;
            while avail != 0 {
                let u = avail.trailing_zeros() as usize;
                avail &= avail - 1;
                let gain = (self.sup[u] & def).count_ones() as usize;
                if gain > best.0 {
                    best = (gain, u);
                }
            }
            debug_assert!(best.0 > 0, "greedy stalled on a feasible instance");
            let u = best.1;
            chosen |= 1u64 << u;
            twice |= once & self.sup[u];
            once |= self.sup[u];
            size += 1;
        }
    }

    fn exists(&self, k: usize) -> bool {
        self.exists_rec(0, 0, 0, 0, k)
    }

    fn exists_rec(&self, chosen: u64, banned: u64, once: u64, twice: u64, budget: usize) -> bool {
        let (def, total) = self.deficits(once, twice);
        if total == 0 {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let avail = self.full & !chosen & !banned;
        // pick the most deficient vertex, tie-breaking on fewest candidates
        let mut branch = usize::MAX;
        let mut branch_need = 0usize;
        let mut branch_cands = usize::MAX;
        let mut m = def;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let need = self.need(v, once, twice);
            let cands = (self.sup[v] & avail).count_ones() as usize;
            if need > budget || cands < need {
                return false;
            }
            if need > branch_need || (need == branch_need && cands < branch_cands) {
                branch = v;
                branch_need = need;
                branch_cands = cands;
            }
        }
        // counting bound: each selection supplies one unit per deficient vertex
        let mut best_unit = 0usize;
        let mut am = avail;
        while am != 0 {
            let u = am.trailing_zeros() as usize;
            am &= am - 1;
            let s = (self.sup[u] & def).count_ones() as usize;
            if s > best_unit {
                best_unit = s;
            }
        }
        if budget * best_unit < total {
            return false;
        }
        let mut cands = self.sup[branch] & avail;
        let mut local_banned = banned;
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let bit = 1u64 << c;
            let n_twice = twice | (once & self.sup[c]);
            let n_once = once | self.sup[c];
            if self.exists_rec(chosen | bit, local_banned, n_once, n_twice, budget - 1) {
                return true;
            }
            local_banned |= bit;
        }
        false
    }

    /// The lexicographically smallest valid set of exactly `k` vertices.
    fn lex_min_of_size(&self, k: usize) -> Option<u64> {
        let mut first = None;
        self.ascending_rec(0, 0, 0, 0, k, &mut |bits| {
            first = Some(bits);
            true
        });
        first
    }

    /// Every valid set of exactly `k` vertices, ascending.
    fn all_of_size(&self, k: usize) -> Vec<u64> {
        let mut out = Vec::new();
        self.ascending_rec(0, 0, 0, 0, k, &mut |bits| {
            out.push(bits);
            false
        });
        out
    }

    /// Ascending-label DFS over k-subsets; `sink` returns true to stop.
    fn ascending_rec(
        &self,
        start: usize,
        chosen: u64,
        once: u64,
        twice: u64,
        left: usize,
        sink: &mut impl FnMut(u64) -> bool,
    ) -> bool {
        let (def, total) = self.deficits(once, twice);
        if left == 0 {
            return total == 0 && sink(chosen);
        }
        if self.n - start < left {
            return false;
        }
        let avail = self.full & !low_mask(start);
        let mut m = def;
        let mut best_unit = 0usize;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let need = self.need(v, once, twice);
            if need > left || ((self.sup[v] & avail).count_ones() as usize) < need {
                return false;
            }
        }
        let mut am = avail;
        while am != 0 {
            let u = am.trailing_zeros() as usize;
            am &= am - 1;
            let s = (self.sup[u] & def).count_ones() as usize;
            if s > best_unit {
                best_unit = s;
            }
        }
        if left * best_unit < total {
            return false;
        }
        for c in start..self.n {
            let bit = 1u64 << c;
            let n_twice = twice | (once & self.sup[c]);
            let n_once = once | self.sup[c];
            if self.ascending_rec(c + 1, chosen | bit, n_once, n_twice, left - 1, sink) {
                return true;
            }
        }
        false
    }
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

// ---------------------------------------------------------------------------
// 2-packing: maximum independent set in the closed-neighborhood conflict
// graph, computed as a maximum clique in its complement.
// ---------------------------------------------------------------------------

struct PackingProblem {
    n: usize,
    /// comp[v]: vertices compatible with v (disjoint closed neighborhoods).
    comp: Vec<u64>,
}

impl PackingProblem {
    fn new(g: &Graph) -> PackingProblem {
        let n = g.n();
        let mut comp = vec![0u64; n];
        for u in 0..n {
            for v in u + 1..n {
                if (g.closed_neighbors(u) & g.closed_neighbors(v)).is_empty() {
                    comp[u] |= 1u64 << v;
                    comp[v] |= 1u64 << u;
                }
            }
        }
        PackingProblem { n, comp }
    }

    fn maximum(&self) -> usize {
        let mut best = 0;
        self.clique_rec(low_mask(self.n), 0, &mut best);
        best
    }

    fn clique_rec(&self, mut cand: u64, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.clique_rec(cand & self.comp[v], size + 1, best);
        }
    }

    fn lex_min_of_size(&self, k: usize) -> Option<u64> {
        let mut first = None;
        self.collect_rec(0, 0, low_mask(self.n), k, &mut |bits| {
            first = Some(bits);
            true
        });
        first
    }

    fn all_of_size(&self, k: usize) -> Vec<u64> {
        let mut out = Vec::new();
        self.collect_rec(0, 0, low_mask(self.n), k, &mut |bits| {
            out.push(bits);
            false
        });
        out
    }

    fn collect_rec(
        &self,
        start: usize,
        chosen: u64,
        allowed: u64,
        left: usize,
        sink: &mut impl FnMut(u64) -> bool,
    ) -> bool {
        if left == 0 {
            return sink(chosen);
        }
        let usable = allowed & !low_mask(start);
        if (usable.count_ones() as usize) < left {
            return false;
        }
        let mut m = usable;
        while m != 0 {
            let c = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.collect_rec(c + 1, chosen | (1u64 << c), allowed & self.comp[c], left - 1, sink) {
                return true;
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// Weight-function search for the total Roman kinds.
// ---------------------------------------------------------------------------

const UNASSIGNED: u8 = 3;

struct FnProblem {
    n: usize,
    full: u64,
    adj: Vec<u64>,
    /// Total Roman domination: zero vertices need a neighbor of value 2.
    /// Otherwise total Roman {2}: zero vertices need neighbor sum >= 2.
    roman: bool,
}

#[derive(Clone)]
struct FnState {
    vals: [u8; 64],
    supply: [u8; 64],
    unassigned: u64,
    pos: u64,
    twos: u64,
    budget: usize,
}

impl FnState {
    fn fresh(p: &FnProblem, budget: usize) -> FnState {
        FnState {
            vals: [UNASSIGNED; 64],
            supply: [0; 64],
            unassigned: p.full,
            pos: 0,
            twos: 0,
            budget,
        }
    }

    fn assign(&mut self, p: &FnProblem, v: usize, val: u8) {
        debug_assert_eq!(self.vals[v], UNASSIGNED);
        debug_assert!(val as usize <= self.budget);
        self.vals[v] = val;
        self.unassigned &= !(1u64 << v);
        if val > 0 {
            self.pos |= 1u64 << v;
            if val == 2 {
                self.twos |= 1u64 << v;
            }
            self.budget -= val as usize;
            let mut nbrs = p.adj[v];
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                self.supply[w] += val;
            }
        }
    }
}

impl FnProblem {
    fn new(g: &Graph, roman: bool) -> FnProblem {
        FnProblem {
            n: g.n(),
            full: g.vertex_set().bits(),
            adj: g.vertices().map(|v| g.neighbors(v).bits()).collect(),
            roman,
        }
    }

    /// Minimum weight. Requires an isolated-vertex-free graph.
    fn minimum(&self) -> usize {
        let max_deg = self.adj.iter().map(|m| m.count_ones() as usize).max().unwrap_or(1).max(1);
        let lb = self.n.div_ceil(max_deg);
        // doubling a minimum total dominating set is always valid, as is the
        // all-ones function
        let gt = CoverProblem { n: self.n, full: self.full, sup: self.adj.clone(), double: false }.minimum();
        let ub = self.n.min(2 * gt);
        for w in lb..ub {
            if self.exists(w) {
                return w;
            }
        }
        ub
    }

    fn exists(&self, weight: usize) -> bool {
        self.exists_rec(&FnState::fresh(self, weight))
    }

    /// Severity of the worst violation under the zero-fill completion, with
    /// the vertex to branch on. None means the zero-fill is already valid.
    fn most_violated(&self, st: &FnState) -> Option<usize> {
        let mut branch = None;
        let mut branch_sev = 0usize;
        let mut branch_helpers = usize::MAX;
        for v in 0..self.n {
            let val = st.vals[v];
            let positive = val == 1 || val == 2;
            let supply = st.supply[v] as usize;
            let mut sev = (if positive { 1usize } else { 2 }).saturating_sub(supply);
            if self.roman && !positive && self.adj[v] & st.twos == 0 {
                sev = sev.max(1);
            }
            if sev == 0 {
                continue;
            }
            let mut helpers = (self.adj[v] & st.unassigned).count_ones() as usize;
            if st.unassigned >> v & 1 == 1 {
                helpers += 1;
            }
            if sev > branch_sev || (sev == branch_sev && helpers < branch_helpers) {
                branch = Some(v);
                branch_sev = sev;
                branch_helpers = helpers;
            }
        }
        branch
    }

    /// Sound pruning bounds assuming the best possible future assignment.
    fn hopeless(&self, st: &FnState) -> bool {
        let mut total_deficit = 0usize;
        let mut deficient = 0u64;
        for v in 0..self.n {
            let val = st.vals[v];
            let supply = st.supply[v] as usize;
            let unassigned_nbrs = (self.adj[v] & st.unassigned).count_ones() as usize;
            let potential = supply + (2 * unassigned_nbrs).min(st.budget);
            // an unassigned vertex may still turn positive, so its floor
            // demand is one
            let demand_floor = if val == 0 { 2 } else { 1 };
            if potential < demand_floor {
                return true;
            }
            if self.roman && val == 0 && self.adj[v] & st.twos == 0 && (unassigned_nbrs == 0 || st.budget < 2) {
                return true;
            }
            if demand_floor > supply {
                total_deficit += demand_floor - supply;
                deficient |= 1u64 << v;
            }
        }
        if total_deficit == 0 {
            return false;
        }
        let mut best_unit = 0usize;
        let mut m = st.unassigned;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            let s = (self.adj[u] & deficient).count_ones() as usize;
            if s > best_unit {
                best_unit = s;
            }
        }
        st.budget * best_unit < total_deficit
    }

    fn exists_rec(&self, st: &FnState) -> bool {
        let Some(v) = self.most_violated(st) else {
            return true; // zero-filling the rest is a valid function
        };
        if self.hopeless(st) {
            return false;
        }
        // candidates that can help v: v itself (lowering its demand) and its
        // unassigned neighbors (raising its supply)
        let mut cands = self.adj[v] & st.unassigned;
        if st.unassigned >> v & 1 == 1 {
            cands |= 1u64 << v;
        }
        if cands == 0 {
            return false;
        }
        let mut cur = st.clone();
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            for val in [1u8, 2u8] {
                if (val as usize) <= cur.budget {
                    let mut child = cur.clone();
                    child.assign(self, c, val);
                    if self.exists_rec(&child) {
                        return true;
                    }
                }
            }
            // this candidate stays at zero in the remaining branches
            cur.assign(self, c, 0);
        }
        false
    }

    /// Lexicographically smallest valid value vector of total weight
    /// `weight`, assigning vertices in label order with values 0 < 1 < 2.
    fn lex_min_of_weight(&self, weight: usize) -> Option<Vec<u8>> {
        let mut first = None;
        self.vertex_order_rec(&FnState::fresh(self, weight), 0, &mut |vals| {
            first = Some(vals);
            true
        });
        first
    }

    fn all_of_weight(&self, weight: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        self.vertex_order_rec(&FnState::fresh(self, weight), 0, &mut |vals| {
            out.push(vals);
            false
        });
        out
    }

    fn vertex_order_rec(
        &self,
        st: &FnState,
        next: usize,
        sink: &mut impl FnMut(Vec<u8>) -> bool,
    ) -> bool {
        if next == self.n {
            if self.most_violated(st).is_none() {
                return sink(st.vals[..self.n].to_vec());
            }
            return false;
        }
        if self.hopeless(st) {
            return false;
        }
        for val in [0u8, 1, 2] {
            if (val as usize) <= st.budget {
                let mut child = st.clone();
                child.assign(self, next, val);
                if self.vertex_order_rec(&child, next + 1, sink) {
                    return true;
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn family(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    fn set(vs: &[usize]) -> Witness {
        Witness::Set(vs.iter().copied().collect())
    }

    #[test]
    fn validate_examples() {
        let p3 = family("path:3");
        assert!(validate(&p3, InvariantKind::DoubleDomination, &set(&[0, 1, 2])));

        // star with weight 2 on the center and 1 on one leaf
        let star = family("star:1,3");
        let f = WeightFn::new(vec![2, 1, 0, 0]).unwrap();
        assert_eq!(f.weight(), 3);
        assert!(validate(&star, InvariantKind::TotalRomanTwo, &Witness::Function(f)));

        // closed neighborhoods of opposite C4 vertices intersect
        let c4 = family("cycle:4");
        assert!(!validate(&c4, InvariantKind::TwoPacking, &set(&[0, 2])));

        // wrong witness shape is rejected, not an error
        assert!(!validate(&p3, InvariantKind::TotalRoman, &set(&[0, 1])));
        let out_of_range: Witness = set(&[0, 5]);
        assert!(!validate(&p3, InvariantKind::Domination, &out_of_range));
    }

    #[test]
    fn exact_invariant_examples() {
        assert_eq!(exact_invariant(&family("path:6"), InvariantKind::DoubleDomination), Ok(5));
        assert_eq!(exact_invariant(&family("cycle:7"), InvariantKind::DoubleDomination), Ok(5));
        assert_eq!(exact_invariant(&family("star:1,4"), InvariantKind::DoubleDomination), Ok(5));
        assert_eq!(exact_invariant(&family("star:1,4"), InvariantKind::TotalRomanTwo), Ok(3));
        assert_eq!(exact_invariant(&family("path:4"), InvariantKind::TotalDomination), Ok(2));
        assert_eq!(exact_invariant(&family("star:1,3"), InvariantKind::TwoPacking), Ok(1));
    }

    #[test]
    fn min_witness_examples() {
        let p4 = family("path:4");
        assert_eq!(
            min_witness(&p4, InvariantKind::TotalDomination).unwrap(),
            set(&[1, 2])
        );
        let k3 = family("complete:3");
        assert_eq!(min_witness(&k3, InvariantKind::Domination).unwrap(), set(&[0]));

        let c6 = family("cycle:6");
        let w = min_witness(&c6, InvariantKind::DoubleDomination).unwrap();
        assert!(validate(&c6, InvariantKind::DoubleDomination, &w));
        assert_eq!(w.cost(), exact_invariant(&c6, InvariantKind::DoubleDomination).unwrap());
    }

    #[test]
    fn enumerate_examples() {
        let c3 = family("cycle:3");
        let sets = enumerate_minimum_sets(&c3, InvariantKind::TotalDomination).unwrap();
        assert_eq!(sets, vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]);

        let p2 = family("path:2");
        assert_eq!(
            enumerate_minimum_sets(&p2, InvariantKind::DoubleDomination).unwrap(),
            vec![set(&[0, 1])]
        );
    }

    #[test]
    fn degenerate_single_vertex() {
        let k1 = family("complete:1");
        assert_eq!(exact_invariant(&k1, InvariantKind::Domination), Ok(1));
        assert_eq!(exact_invariant(&k1, InvariantKind::TwoPacking), Ok(1));
        for kind in [
            InvariantKind::TotalDomination,
            InvariantKind::DoubleDomination,
            InvariantKind::TotalRoman,
            InvariantKind::TotalRomanTwo,
        ] {
            assert!(matches!(
                exact_invariant(&k1, kind),
                Err(SolverError::Infeasible { .. })
            ));
        }
    }

    #[test]
    fn infeasible_reports_the_violated_precondition() {
        let p4 = family("path:4");
        match exact_invariant(&p4, InvariantKind::DoubleTotalDomination) {
            Err(SolverError::Infeasible { kind, reason }) => {
                assert_eq!(kind, InvariantKind::DoubleTotalDomination);
                assert!(reason.contains("minimum degree"));
            }
            other => panic!("expected infeasibility, got {other:?}"),
        }
    }

    #[test]
    fn inequality_chain_spot_checks() {
        for spec in ["path:5", "cycle:6", "star:1,4", "complete:4", "dstar:2,2"] {
            let g = family(spec);
            let gt = exact_invariant(&g, InvariantKind::TotalDomination).unwrap();
            let gtr2 = exact_invariant(&g, InvariantKind::TotalRomanTwo).unwrap();
            let gtr = exact_invariant(&g, InvariantKind::TotalRoman).unwrap();
            let gx2 = exact_invariant(&g, InvariantKind::DoubleDomination).unwrap();
            assert!(gt <= gtr2 && gtr2 <= gtr && gtr <= 2 * gt, "{spec}");
            assert!(gtr2 <= gx2, "{spec}");
        }
    }

    #[test]
    fn kind_codes_roundtrip() {
        for kind in InvariantKind::ALL {
            assert_eq!(InvariantKind::from_code(kind.code()), Some(kind));
        }
        assert_eq!(InvariantKind::from_code("nope"), None);
    }
}
