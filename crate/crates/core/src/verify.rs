//! Falsification harness: sixteen theorem checks swept over enumerated
//! corpora of graphs and factor pairs, with deterministic reports, skip
//! accounting, counterexample payloads in graph6 for replay, and an
//! exploratory scan for graphs whose double domination and total Roman {2}
//! numbers coincide.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::formulas::{
    classify_small_value_profiled, check_2gamma_t_equivalence, gamma_x2_lex_formula_profiled,
    FactorProfile, SmallValueClass,
};
use crate::graph::{labeled_graphs, write_graph6, FamilySpec, Graph, GraphError, MAX_VERTICES};
use crate::product::{lex_product, projection_profile};
use crate::solvers::{enumerate_minimum_sets, exact_invariant, InvariantKind, SolverError, Witness};

/// Identifier of one theorem check, `V1` through `V16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CheckId(u8);

impl CheckId {
    pub const COUNT: u8 = 16;

    pub fn all() -> impl Iterator<Item = CheckId> {
        (1..=Self::COUNT).map(CheckId)
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn title(self) -> &'static str {
        match self.0 {
            1 => "invariant inequality chain",
            2 => "minimum double dominating sets induce disjoint edges when the value meets total domination",
            3 => "doubled total domination weight equivalence",
            4 => "value-two characterization via two universal vertices",
            5 => "double domination never drops under edge deletion",
            6 => "double domination equals total Roman {2} domination on products",
            7 => "packing and total domination bounds on products",
            8 => "doubled total domination equality equivalence on products",
            9 => "two-thirds order bound for connected factors",
            10 => "some minimum product set has per-copy count at most two",
            11 => "universal-vertex and domination-regime bounds",
            12 => "equality consequences when outer bounds coincide",
            13 => "double total domination bounds on products",
            14 => "family grid: closed formulas match the oracle",
            15 => "small-value classifier agreement",
            16 => "projection conditions and path end-pattern",
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}", self.0)
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<CheckId, String> {
        let rest = s.strip_prefix(['V', 'v']).ok_or_else(|| format!("unknown check id `{s}`"))?;
        match rest.parse::<u8>() {
            Ok(k) if (1..=Self::COUNT).contains(&k) => Ok(CheckId(k)),
            _ => Err(format!("unknown check id `{s}`")),
        }
    }
}

/// Declarative description of the corpora the checks sweep.
#[derive(Clone, Debug)]
pub struct CorpusSpec {
    /// Orders of enumerated single graphs, `1..=single_max`.
    pub single_max: usize,
    /// Orders of enumerated isolated-vertex-free first factors, `2..=pair_g_max`.
    pub pair_g_max: usize,
    /// Orders of enumerated nontrivial second factors, `2..=pair_h_max`.
    pub pair_h_max: usize,
    /// Path and cycle lengths `3..=grid_max` for the family grid.
    pub grid_max: usize,
    /// Product order cap for pair checks.
    pub product_cap: usize,
    /// Product order cap for checks that enumerate every minimum set (V10).
    pub minset_cap: usize,
    /// Product order cap for the projection-condition check (V16).
    pub projection_cap: usize,
    /// Product order cap for checks that solve function-valued invariants on
    /// the product (V6, V8).
    pub function_cap: usize,
    /// When set, replaces the enumerated single graphs and the first factors
    /// of pairs; the family grid is dropped.
    pub file_graphs: Option<Vec<Graph>>,
}

impl Default for CorpusSpec {
    fn default() -> CorpusSpec {
        CorpusSpec {
            single_max: 6,
            pair_g_max: 4,
            pair_h_max: 3,
            grid_max: 10,
            product_cap: 36,
            minset_cap: 20,
            projection_cap: 24,
            function_cap: 30,
            file_graphs: None,
        }
    }
}

impl CorpusSpec {
    /// A corpus that generates nothing; every check passes vacuously.
    pub fn empty() -> CorpusSpec {
        CorpusSpec {
            single_max: 0,
            pair_g_max: 0,
            pair_h_max: 0,
            grid_max: 0,
            file_graphs: None,
            ..CorpusSpec::default()
        }
    }

    pub fn build(&self) -> Result<Corpus, GraphError> {
        let product_cap = self.product_cap.min(MAX_VERTICES);
        let singles: Vec<Graph> = match &self.file_graphs {
            Some(graphs) => graphs.clone(),
            None => {
                let mut out = Vec::new();
                for n in 1..=self.single_max.min(crate::graph::ENUMERATION_CAP) {
                    out.extend(labeled_graphs(n)?);
                }
                out
            }
        };
        let g_side: Vec<(Graph, Option<FamilySpec>)> = match &self.file_graphs {
            Some(graphs) => graphs.iter().map(|g| (g.clone(), None)).collect(),
            None => {
                let mut out = Vec::new();
                for n in 2..=self.pair_g_max.min(crate::graph::ENUMERATION_CAP) {
                    out.extend(
                        labeled_graphs(n)?
                            .filter(|g| !g.has_isolated_vertex())
                            .map(|g| (g, None)),
                    );
                }
                if self.grid_max >= 3 {
                    for n in 3..=self.grid_max {
                        for spec in [FamilySpec::Path(n), FamilySpec::Cycle(n)] {
                            out.push((spec.build()?, Some(spec)));
                        }
                    }
                }
                out
            }
        };
        let mut h_side: Vec<(Graph, Option<String>)> = Vec::new();
        for n in 2..=self.pair_h_max.min(crate::graph::ENUMERATION_CAP) {
            h_side.extend(labeled_graphs(n)?.map(|h| (h, None)));
        }
        if self.file_graphs.is_none() && self.grid_max >= 3 {
            for name in GRID_H_POOL {
                let h = name.parse::<FamilySpec>().expect("pool spec parses").build()?;
                h_side.push((h, Some(name.to_string())));
            }
        }

        let mut profiles: BTreeMap<String, FactorProfile> = BTreeMap::new();
        let mut profile_of = |g: &Graph| -> FactorProfile {
            profiles
                .entry(write_graph6(g))
                .or_insert_with(|| FactorProfile::of(g))
                .clone()
        };

        // keyed by graph6 so duplicates collapse deterministically; family
        // grid entries overwrite enumerated ones to keep their spec tag
        let mut pairs: BTreeMap<(String, String), PairEntry> = BTreeMap::new();
        for (g, g_spec) in &g_side {
            for (h, h_name) in &h_side {
                let Some(order) = g.n().checked_mul(h.n()).filter(|&m| m <= product_cap) else {
                    continue;
                };
                if h.n() < 2 {
                    continue;
                }
                let key = (write_graph6(g), write_graph6(h));
                let tagged = g_spec.is_some();
                if pairs.contains_key(&key) && !tagged {
                    continue;
                }
                pairs.insert(
                    key,
                    PairEntry {
                        g: g.clone(),
                        h: h.clone(),
                        g_spec: g_spec.clone(),
                        h_name: h_name.clone(),
                        product_order: order,
                        pg: profile_of(g),
                        ph: profile_of(h),
                    },
                );
            }
        }
        Ok(Corpus {
            singles,
            pairs: pairs.into_values().collect(),
            minset_cap: self.minset_cap.min(MAX_VERTICES),
            projection_cap: self.projection_cap.min(MAX_VERTICES),
            function_cap: self.function_cap.min(MAX_VERTICES),
        })
    }
}

/// The second factors used in the family grid.
pub const GRID_H_POOL: [&str; 7] =
    ["complete:2", "path:3", "path:4", "cycle:4", "empty:2", "empty:3", "star:1,3"];

/// One (G, H) pair of a built corpus, with factor profiles computed once.
#[derive(Clone, Debug)]
pub struct PairEntry {
    pub g: Graph,
    pub h: Graph,
    pub g_spec: Option<FamilySpec>,
    pub h_name: Option<String>,
    pub product_order: usize,
    pub pg: FactorProfile,
    pub ph: FactorProfile,
}

/// A built corpus: single graphs for the per-graph checks and factor pairs
/// for the product checks.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub singles: Vec<Graph>,
    pub pairs: Vec<PairEntry>,
    pub minset_cap: usize,
    pub projection_cap: usize,
    pub function_cap: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub g: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    pub observed: String,
    pub expected: String,
}

/// One evaluated cell of the family grid check.
#[derive(Clone, Debug, Serialize)]
pub struct GridCell {
    pub g: String,
    pub h: String,
    pub h_graph6: String,
    pub regime: String,
    pub formula: usize,
    pub oracle: usize,
}

/// Outcome of one check over one corpus.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub title: String,
    pub tested: usize,
    pub skipped: usize,
    pub skip_reasons: BTreeMap<String, usize>,
    pub verdict: String,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cells: Vec<GridCell>,
    pub wall_ms: u128,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }
}

enum Outcome {
    Pass,
    Skip(String),
    Fail(Counterexample),
    Cell(GridCell, Option<Counterexample>),
}

fn assemble(id: CheckId, outcomes: Vec<Outcome>, started: Instant) -> CheckReport {
    let mut tested = 0;
    let mut skip_reasons: BTreeMap<String, usize> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let mut cells = Vec::new();
    for outcome in outcomes {
        match outcome {
            Outcome::Pass => tested += 1,
            Outcome::Skip(reason) => *skip_reasons.entry(reason).or_insert(0) += 1,
            Outcome::Fail(ce) => {
                tested += 1;
                counterexamples.push(ce);
            }
            Outcome::Cell(cell, ce) => {
                tested += 1;
                cells.push(cell);
                counterexamples.extend(ce);
            }
        }
    }
    let skipped = skip_reasons.values().sum();
    let warning = (tested == 0).then(|| "SKIPPED-ALL: no corpus item met the premises".to_string());
    CheckReport {
        id: id.to_string(),
        title: id.title().to_string(),
        tested,
        skipped,
        skip_reasons,
        verdict: if counterexamples.is_empty() { "pass" } else { "fail" }.to_string(),
        counterexamples,
        warning,
        cells,
        wall_ms: started.elapsed().as_millis(),
    }
}

fn single_fail(g: &Graph, observed: String, expected: String) -> Outcome {
    Outcome::Fail(Counterexample { g: write_graph6(g), h: None, observed, expected })
}

fn pair_fail(entry: &PairEntry, observed: String, expected: String) -> Outcome {
    Outcome::Fail(Counterexample {
        g: write_graph6(&entry.g),
        h: Some(write_graph6(&entry.h)),
        observed,
        expected,
    })
}

fn sweep_singles(
    corpus: &Corpus,
    check: impl Fn(&Graph) -> Outcome + Sync + Send,
) -> Vec<Outcome> {
    corpus.singles.par_iter().map(check).collect()
}

fn sweep_pairs(
    corpus: &Corpus,
    check: impl Fn(&PairEntry) -> Outcome + Sync + Send,
) -> Vec<Outcome> {
    corpus.pairs.par_iter().map(check).collect()
}

fn solve(g: &Graph, kind: InvariantKind) -> Result<usize, SolverError> {
    exact_invariant(g, kind)
}

const ISOLATED_SKIP: &str = "graph has an isolated vertex";

/// Runs one check over the corpus. Deterministic given the corpus.
pub fn run_check(id: CheckId, corpus: &Corpus) -> CheckReport {
    let started = Instant::now();
    let outcomes = match id.number() {
        1 => check_inequality_chain(corpus),
        2 => check_disjoint_edges(corpus),
        3 => check_doubled_weight_equivalence(corpus),
        4 => check_value_two(corpus),
        5 => check_edge_deletion_monotone(corpus),
        6 => product_equality_outcomes(corpus, |p| solve(p, InvariantKind::DoubleDomination), |p| {
            solve(p, InvariantKind::TotalRomanTwo)
        }),
        7 => check_product_bounds(corpus),
        8 => check_doubled_equality_on_products(corpus),
        9 => check_two_thirds_bound(corpus),
        10 => check_per_copy_cap(corpus),
        11 => check_regime_bounds(corpus),
        12 => check_equality_consequences(corpus),
        13 => check_double_total_bounds(corpus),
        14 => check_family_grid(corpus),
        15 => check_classifier_agreement(corpus),
        16 => check_projection_conditions(corpus),
        _ => unreachable!(),
    };
    assemble(id, outcomes, started)
}

/// Runs every check; failures never abort the sweep.
pub fn run_all(corpus: &Corpus) -> Vec<CheckReport> {
    CheckId::all().map(|id| run_check(id, corpus)).collect()
}

fn check_inequality_chain(corpus: &Corpus) -> Vec<Outcome> {
    sweep_singles(corpus, |g| {
        if g.n() == 0 || g.has_isolated_vertex() {
            return Outcome::Skip(ISOLATED_SKIP.to_string());
        }
        let gt = solve(g, InvariantKind::TotalDomination).expect("feasible");
        let gtr2 = solve(g, InvariantKind::TotalRomanTwo).expect("feasible");
        let gtr = solve(g, InvariantKind::TotalRoman).expect("feasible");
        let gx2 = solve(g, InvariantKind::DoubleDomination).expect("feasible");
        if gt <= gtr2 && gtr2 <= gtr && gtr <= 2 * gt && gtr2 <= gx2 {
            Outcome::Pass
        } else {
            single_fail(
                g,
                format!("gt={gt} gtr2={gtr2} gtr={gtr} gx2={gx2}"),
                "gt <= gtr2 <= gtr <= 2*gt and gtr2 <= gx2".to_string(),
            )
        }
    })
}

fn check_disjoint_edges(corpus: &Corpus) -> Vec<Outcome> {
    sweep_singles(corpus, |g| {
        if g.n() == 0 || g.has_isolated_vertex() {
            return Outcome::Skip(ISOLATED_SKIP.to_string());
        }
        let gx2 = solve(g, InvariantKind::DoubleDomination).expect("feasible");
        let gt = solve(g, InvariantKind::TotalDomination).expect("feasible");
        if gx2 != gt {
            return Outcome::Pass; // implication holds vacuously
        }
        let sets = enumerate_minimum_sets(g, InvariantKind::DoubleDomination).expect("feasible");
        for witness in sets {
            let Witness::Set(d) = witness else { unreachable!() };
            let pairs_up = d.iter().all(|v| (g.neighbors(v) & d).len() == 1);
            if !pairs_up {
                return single_fail(
                    g,
                    format!("minimum set {d} does not induce disjoint edges"),
                    "every minimum double dominating set induces a disjoint union of edges".to_string(),
                );
            }
        }
        Outcome::Pass
    })
}

fn check_doubled_weight_equivalence(corpus: &Corpus) -> Vec<Outcome> {
    sweep_singles(corpus, |g| {
        if g.n() == 0 || g.has_isolated_vertex() {
            return Outcome::Skip(ISOLATED_SKIP.to_string());
        }
        let gamma = solve(g, InvariantKind::Domination).expect("feasible");
        let gt = solve(g, InvariantKind::TotalDomination).expect("feasible");
        let gtr2 = solve(g, InvariantKind::TotalRomanTwo).expect("feasible");
        let gtr = solve(g, InvariantKind::TotalRoman).expect("feasible");
        let a = gtr2 == 2 * gt;
        let b = gtr2 == gtr && gt == gamma;
        if a == b {
            Outcome::Pass
        } else {
            single_fail(
                g,
                format!("gtr2={gtr2} gtr={gtr} gt={gt} gamma={gamma} sides=({a},{b})"),
                "gtr2 = 2*gt holds exactly when gtr2 = gtr and gt = gamma".to_string(),
            )
        }
    })
}

fn check_value_two(corpus: &Corpus) -> Vec<Outcome> {
    sweep_singles(corpus, |g| {
        if g.n() == 0 || g.has_isolated_vertex() {
            return Outcome::Skip(ISOLATED_SKIP.to_string());
        }
        let gx2 = solve(g, InvariantKind::DoubleDomination).expect("feasible");
        let gtr2 = solve(g, InvariantKind::TotalRomanTwo).expect("feasible");
        let universal = g.universal_vertices().len();
        let a = gx2 == 2;
        let b = gtr2 == 2;
        let c = universal >= 2;
        if a == b && b == c {
            Outcome::Pass
        } else {
            single_fail(
                g,
                format!("gx2={gx2} gtr2={gtr2} universal={universal}"),
                "gx2 = 2, gtr2 = 2 and two universal vertices are equivalent".to_string(),
            )
        }
    })
}

fn check_edge_deletion_monotone(corpus: &Corpus) -> Vec<Outcome> {
    sweep_singles(corpus, |g| {
        if g.n() == 0 || g.has_isolated_vertex() {
            return Outcome::Skip(ISOLATED_SKIP.to_string());
        }
        let gx2 = solve(g, InvariantKind::DoubleDomination).expect("feasible");
        for (u, v) in g.edges() {
            let smaller = g.without_edge(u, v);
            if smaller.has_isolated_vertex() {
                continue;
            }
            let shrunk = solve(&smaller, InvariantKind::DoubleDomination).expect("feasible");
            if gx2 > shrunk {
                return single_fail(
                    g,
                    format!("gx2={gx2} but deleting edge ({u},{v}) gives {shrunk}"),
                    "edge deletion never decreases the double domination number".to_string(),
                );
            }
        }
        Outcome::Pass
    })
}

/// Core of the product equality check, parametric in the two value oracles so
/// tests can inject a corrupted side and watch the harness catch it.
fn product_equality_outcomes(
    corpus: &Corpus,
    side_a: impl Fn(&Graph) -> Result<usize, SolverError> + Sync + Send,
    side_b: impl Fn(&Graph) -> Result<usize, SolverError> + Sync + Send,
) -> Vec<Outcome> {
    sweep_pairs(corpus, |entry| {
        if !entry.pg.isolated_free {
            return Outcome::Skip(ISOLATED_SKIP.to_string());
        }
        if entry.product_order > corpus.function_cap {
            return Outcome::Skip("product exceeds the function-solve cap".to_string());
        }
        let (product, _) = lex_product(&entry.g, &entry.h).expect("within cap");
        let a = side_a(&product).expect("product has no isolated vertex");
        let b = side_b(&product).expect("product has no isolated vertex");
        if a == b {
            Outcome::Pass
        } else {
            pair_fail(entry, format!("gx2={a} gtr2={b}"), "gx2 = gtr2 on every product".to_string())
        }
    })
}

fn check_product_bounds(corpus: &Corpus) -> Vec<Outcome> {
    sweep_pairs(corpus, |entry| {
        if !entry.pg.isolated_free {
            return Outcome::Skip(ISOLATED_SKIP.to_string());
        }
        let (product, _) = lex_product(&entry.g, &entry.h).expect("within cap");
        let gx2 = solve(&product, InvariantKind::DoubleDomination).expect("feasible");
        let gt = entry.pg.gamma_t.expect("isolated-free");
        let lower = gt.max(2 * entry.pg.rho);
        let upper = 2 * gt;
        if lower <= gx2 && gx2 <= upper {
            Outcome::Pass
        } else {
            pair_fail(
                entry,
                format!("gx2={gx2} outside [{lower},{upper}]"),
                "max(gt(G), 2*rho(G)) <= gx2 <= 2*gt(G)".to_string(),
            )
        }
    })
}

fn check_doubled_equality_on_products(corpus: &Corpus) -> Vec<Outcome> {
    sweep_pairs(corpus, |entry| {
        if !entry.pg.isolated_free {
            return Outcome::Skip(ISOLATED_SKIP.to_string());
        }
        if entry.product_order > corpus.function_cap {
            return Outcome::Skip("product exceeds the function-solve cap".to_string());
        }
        let (a, b) = check_2gamma_t_equivalence(&entry.g, &entry.h).expect("premises hold");
        if a == b {
            Outcome::Pass
        } else {
            pair_fail(
                entry,
                format!("sides=({a},{b})"),
                "gx2 = 2*gt(G) holds exactly when the product attains its total Roman weight and the domination premise holds".to_string(),
            )
        }
    })
}

fn check_two_thirds_bound(corpus: &Corpus) -> Vec<Outcome> {
    sweep_pairs(corpus, |entry| {
        if !(entry.pg.connected && entry.g.n() >= 3) {
            return Outcome::Skip("G is not connected of order at least 3".to_string());
        }
        let (product, _) = lex_product(&entry.g, &entry.h).expect("within cap");
        let gx2 = solve(&product, InvariantKind::DoubleDomination).expect("feasible");
        let bound = 2 * (2 * entry.g.n() / 3);
        if gx2 <= bound {
            Outcome::Pass
        } else {
            pair_fail(entry, format!("gx2={gx2} > {bound}"), "gx2 <= 2*floor(2n/3)".to_string())
        }
    })
}

fn check_per_copy_cap(corpus: &Corpus) -> Vec<Outcome> {
    sweep_pairs(corpus, |entry| {
        if !entry.pg.isolated_free {
            return Outcome::Skip(ISOLATED_SKIP.to_string());
        }
        if entry.product_order > corpus.minset_cap {
            return Outcome::Skip("product exceeds the minimum-set enumeration cap".to_string());
        }
        let (product, idx) = lex_product(&entry.g, &entry.h).expect("within cap");
        let sets = enumerate_minimum_sets(&product, InvariantKind::DoubleDomination).expect("feasible");
        let found = sets.iter().any(|w| {
            let Witness::Set(s) = w else { unreachable!() };
            projection_profile(*s, &idx).counts.iter().all(|&c| c <= 2)
        });
        if found {
            Outcome::Pass
        } else {
            pair_fail(
                entry,
                "every minimum set has a copy holding three or more vertices".to_string(),
                "some minimum set has per-copy count at most two".to_string(),
            )
        }
    })
}

fn check_regime_bounds(corpus: &Corpus) -> Vec<Outcome> {
    sweep_pairs(corpus, |entry| {
        if !entry.pg.isolated_free {
            return Outcome::Skip(ISOLATED_SKIP.to_string());
        }
        let (product, _) = lex_product(&entry.g, &entry.h).expect("within cap");
        let gx2 = solve(&product, InvariantKind::DoubleDomination).expect("feasible");
        let gtr2_g = entry.pg.gamma_tr2.expect("isolated-free");
        let h_universal = entry.ph.universal;
        let mut failures = Vec::new();
        if entry.ph.gamma == 1 && gx2 > gtr2_g {
            failures.push(format!("gamma(H)=1 but gx2={gx2} > gtr2(G)={gtr2_g}"));
        }
        if h_universal >= 2 && gx2 > 2 * entry.pg.gamma {
            failures.push(format!("two universal vertices in H but gx2={gx2} > 2*gamma(G)"));
        }
        if h_universal == 1 && gx2 != gtr2_g {
            failures.push(format!("one universal vertex in H but gx2={gx2} != gtr2(G)={gtr2_g}"));
        }
        if entry.ph.gamma >= 2 && gx2 < gtr2_g {
            failures.push(format!("gamma(H)>=2 but gx2={gx2} < gtr2(G)={gtr2_g}"));
        }
        if failures.is_empty() {
            Outcome::Pass
        } else {
            pair_fail(entry, failures.join("; "), "regime bounds hold".to_string())
        }
    })
}

fn check_equality_consequences(corpus: &Corpus) -> Vec<Outcome> {
    sweep_pairs(corpus, |entry| {
        if !entry.pg.isolated_free {
            return Outcome::Skip(ISOLATED_SKIP.to_string());
        }
        let (product, _) = lex_product(&entry.g, &entry.h).expect("within cap");
        let gx2 = solve(&product, InvariantKind::DoubleDomination).expect("feasible");
        let pg = &entry.pg;
        let ph = &entry.ph;
        let gt = pg.gamma_t.expect("isolated-free");
        let gtr2 = pg.gamma_tr2.expect("isolated-free");
        let mut failures = Vec::new();
        if pg.gamma == pg.rho && ph.gamma_x2 == Some(2) && gx2 != 2 * pg.gamma {
            failures.push(format!("gamma=rho and gx2(H)=2 but gx2={gx2} != 2*gamma(G)"));
        }
        if (gtr2 == gt || gtr2 == 2 * pg.rho) && ph.gamma == 1 && gx2 != gtr2 {
            failures.push(format!("gtr2(G) meets an outer bound and gamma(H)=1 but gx2={gx2} != {gtr2}"));
        }
        if gtr2 == 2 * gt && ph.gamma >= 2 && gx2 != gtr2 {
            failures.push(format!("gtr2(G)=2*gt(G) and gamma(H)>=2 but gx2={gx2} != {gtr2}"));
        }
        if failures.is_empty() {
            Outcome::Pass
        } else {
            pair_fail(entry, failures.join("; "), "equality consequences hold".to_string())
        }
    })
}

fn check_double_total_bounds(corpus: &Corpus) -> Vec<Outcome> {
    sweep_pairs(corpus, |entry| {
        if entry.pg.min_degree < 2 {
            return Outcome::Skip("minimum degree of G below 2".to_string());
        }
        let (product, _) = lex_product(&entry.g, &entry.h).expect("within cap");
        let gx2 = solve(&product, InvariantKind::DoubleDomination).expect("feasible");
        let g2t_g = entry.pg.gamma_2t.expect("minimum degree 2");
        let g2t_product = solve(&product, InvariantKind::DoubleTotalDomination).expect("product degree >= 2");
        let mut failures = Vec::new();
        if gx2 > g2t_g {
            failures.push(format!("gx2={gx2} > g2t(G)={g2t_g}"));
        }
        if gx2 > entry.g.n() {
            failures.push(format!("gx2={gx2} > |V(G)|={}", entry.g.n()));
        }
        if g2t_product > g2t_g {
            failures.push(format!("g2t(product)={g2t_product} > g2t(G)={g2t_g}"));
        }
        if failures.is_empty() {
            Outcome::Pass
        } else {
            pair_fail(entry, failures.join("; "), "double total domination bounds hold".to_string())
        }
    })
}

fn regime_label(ph: &FactorProfile) -> String {
    match ph.gamma {
        1 => {
            if ph.gamma_x2 == Some(2) {
                "gamma(H)=1, gamma_x2(H)=2".to_string()
            } else {
                "gamma(H)=1, gamma_x2(H)>=3".to_string()
            }
        }
        2 => "gamma(H)=2".to_string(),
        _ => "gamma(H)>=3".to_string(),
    }
}

fn check_family_grid(corpus: &Corpus) -> Vec<Outcome> {
    sweep_pairs(corpus, |entry| {
        let Some(spec) = &entry.g_spec else {
            return Outcome::Skip("no closed formula for this first factor".to_string());
        };
        let formula = match gamma_x2_lex_formula_profiled(spec, &entry.ph) {
            Ok(result) => result.exact_value().expect("family formulas are exact"),
            Err(err) => {
                return Outcome::Skip(format!("formula not applicable: {err}"));
            }
        };
        let (product, _) = lex_product(&entry.g, &entry.h).expect("within cap");
        let oracle = solve(&product, InvariantKind::DoubleDomination).expect("feasible");
        let cell = GridCell {
            g: spec.to_string(),
            h: entry.h_name.clone().unwrap_or_else(|| write_graph6(&entry.h)),
            h_graph6: write_graph6(&entry.h),
            regime: regime_label(&entry.ph),
            formula,
            oracle,
        };
        let ce = (formula != oracle).then(|| Counterexample {
            g: write_graph6(&entry.g),
            h: Some(write_graph6(&entry.h)),
            observed: format!("formula={formula} oracle={oracle}"),
            expected: "formula = oracle".to_string(),
        });
        Outcome::Cell(cell, ce)
    })
}

fn check_classifier_agreement(corpus: &Corpus) -> Vec<Outcome> {
    sweep_pairs(corpus, |entry| {
        if !entry.pg.nontrivial || !entry.ph.nontrivial {
            return Outcome::Skip("a factor is trivial".to_string());
        }
        if !entry.pg.isolated_free {
            return Outcome::Skip(ISOLATED_SKIP.to_string());
        }
        let class = classify_small_value_profiled(&entry.g, &entry.pg, &entry.ph).expect("nontrivial");
        let (product, _) = lex_product(&entry.g, &entry.h).expect("within cap");
        let oracle = solve(&product, InvariantKind::DoubleDomination).expect("feasible");
        let agrees = match &class {
            SmallValueClass::Two => oracle == 2,
            SmallValueClass::Three { .. } => oracle == 3,
            SmallValueClass::AtLeastFour => oracle >= 4,
        };
        if agrees {
            Outcome::Pass
        } else {
            pair_fail(
                entry,
                format!("classifier={class} oracle={oracle}"),
                "classifier agrees with the oracle".to_string(),
            )
        }
    })
}

fn check_projection_conditions(corpus: &Corpus) -> Vec<Outcome> {
    sweep_pairs(corpus, |entry| {
        if !(entry.pg.connected && entry.pg.nontrivial) {
            return Outcome::Skip("G is not connected and nontrivial".to_string());
        }
        if entry.product_order > corpus.projection_cap {
            return Outcome::Skip("product exceeds the projection cap".to_string());
        }
        let (product, idx) = lex_product(&entry.g, &entry.h).expect("within cap");
        let sets = enumerate_minimum_sets(&product, InvariantKind::DoubleDomination).expect("feasible");
        let gamma_h = entry.ph.gamma;
        let mut end_pattern_seen = false;
        let n = entry.g.n();
        for witness in &sets {
            let Witness::Set(s) = witness else { unreachable!() };
            let profile = projection_profile(*s, &idx);
            if profile.counts.iter().any(|&c| c > 2) {
                continue;
            }
            let neighbor_sum = |x: usize| -> usize {
                entry.g.neighbors(x).iter().map(|u| profile.counts[u]).sum()
            };
            for x in entry.g.vertices() {
                let sum = neighbor_sum(x);
                if gamma_h >= 2 && profile.counts[x] <= 1 && sum < 2 {
                    return pair_fail(
                        entry,
                        format!("set {s}: copy {x} holds {} members but neighbor copies supply {sum}", profile.counts[x]),
                        "copies holding at most one member see at least two members next door".to_string(),
                    );
                }
                if gamma_h == 2 && profile.counts[x] >= 2 && sum < 1 {
                    return pair_fail(
                        entry,
                        format!("set {s}: copy {x} is full but neighbor copies supply {sum}"),
                        "full copies see at least one member next door".to_string(),
                    );
                }
                if gamma_h >= 3 && sum < 2 {
                    return pair_fail(
                        entry,
                        format!("set {s}: copy {x} sees only {sum} members next door"),
                        "every copy sees at least two members next door".to_string(),
                    );
                }
            }
            if n >= 4
                && profile.counts[n - 1] == 0
                && profile.counts[n - 4] == 0
                && profile.counts[n - 2] >= 2
                && profile.counts[n - 3] >= 2
            {
                end_pattern_seen = true;
            }
        }
        // on long paths with gamma(H) >= 3 some minimum set empties the last
        // copy and the one four from the end, filling the two between
        let path_len = match &entry.g_spec {
            Some(FamilySpec::Path(n)) => Some(*n),
            _ => None,
        };
        if let Some(n) = path_len {
            if n >= 6 && gamma_h >= 3 && !sets.is_empty() && !end_pattern_seen {
                return pair_fail(
                    entry,
                    "no minimum set shows the expected end pattern".to_string(),
                    "some minimum set empties the last copy and the fourth from the end".to_string(),
                );
            }
        }
        Outcome::Pass
    })
}

/// Graphs of the single-graph corpus whose double domination and total
/// Roman {2} numbers coincide, annotated with whether brute-force matching
/// recognizes them as a lexicographic product of smaller factors.
#[derive(Clone, Debug, Serialize)]
pub struct HuntEntry {
    pub graph6: String,
    pub value: usize,
    pub lex_product: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<(String, String)>,
}

pub fn hunt_equality(corpus: &Corpus) -> Vec<HuntEntry> {
    let mut hits: Vec<HuntEntry> = corpus
        .singles
        .par_iter()
        .filter_map(|g| {
            if g.n() == 0 || g.has_isolated_vertex() {
                return None;
            }
            let gx2 = solve(g, InvariantKind::DoubleDomination).expect("feasible");
            let gtr2 = solve(g, InvariantKind::TotalRomanTwo).expect("feasible");
            if gx2 != gtr2 {
                return None;
            }
            let factors = find_product_factorization(g);
            Some(HuntEntry {
                graph6: write_graph6(g),
                value: gx2,
                lex_product: factors.is_some(),
                factors,
            })
        })
        .collect();
    hits.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    hits
}

/// Brute product matching: search factor pairs (isolated-free G', nontrivial
/// H') whose product is isomorphic to `g`. Only factorizations with both
/// factors inside the enumeration cap are tried.
fn find_product_factorization(g: &Graph) -> Option<(String, String)> {
    let n = g.n();
    for a in 2..=n / 2 {
        if !n.is_multiple_of(a) {
            continue;
        }
        let b = n / a;
        if a > crate::graph::ENUMERATION_CAP || b > crate::graph::ENUMERATION_CAP {
            continue;
        }
        for gf in labeled_graphs(a).expect("within cap") {
            if gf.has_isolated_vertex() {
                continue;
            }
            for hf in labeled_graphs(b).expect("within cap") {
                if hf.n() < 2 {
                    continue;
                }
                let Ok((product, _)) = lex_product(&gf, &hf) else { continue };
                if brute_isomorphic(&product, g) {
                    return Some((write_graph6(&gf), write_graph6(&hf)));
                }
            }
        }
    }
    None
}

/// Brute-force isomorphism for the hunt annotation only; intended for the
/// enumeration scale (orders up to 8 or so).
fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut deg_a: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    let n = a.n();
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(a: &Graph, b: &Graph, v: usize, mapping: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = a.n();
        if v == n {
            return true;
        }
        for image in 0..n {
            if used[image] || a.degree(v) != b.degree(image) {
                continue;
            }
            let consistent = (0..v).all(|w| a.has_edge(v, w) == b.has_edge(image, mapping[w]));
            if !consistent {
                continue;
            }
            mapping[v] = image;
            used[image] = true;
            if extend(a, b, v + 1, mapping, used) {
                return true;
            }
            mapping[v] = usize::MAX;
            used[image] = false;
        }
        false
    }
    extend(a, b, 0, &mut mapping, &mut used)
}

pub fn emit_json(reports: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn emit_csv(reports: &[CheckReport]) -> String {
    let mut out = String::from("id,title,tested,skipped,verdict,counterexamples,wall_ms\n");
    for r in reports {
        out.push_str(&format!(
            "{},\"{}\",{},{},{},{},{}\n",
            r.id, r.title, r.tested, r.skipped, r.verdict, r.counterexamples.len(), r.wall_ms
        ));
    }
    out
}

pub fn emit_markdown(reports: &[CheckReport]) -> String {
    let mut out = String::from("# Verification report\n\n");
    out.push_str("| check | title | tested | skipped | verdict | time (ms) |\n");
    out.push_str("|-------|-------|-------:|--------:|---------|----------:|\n");
    for r in reports {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} |\n",
            r.id, r.title, r.tested, r.skipped, r.verdict, r.wall_ms
        ));
    }
    for r in reports {
        if !r.counterexamples.is_empty() {
            out.push_str(&format!("\n## Counterexamples for {}\n\n", r.id));
            for ce in &r.counterexamples {
                match &ce.h {
                    Some(h) => out.push_str(&format!(
                        "- G `{}` H `{}`: observed {}, expected {}\n",
                        ce.g, h, ce.observed, ce.expected
                    )),
                    None => out.push_str(&format!(
                        "- G `{}`: observed {}, expected {}\n",
                        ce.g, ce.observed, ce.expected
                    )),
                }
            }
        }
    }
    let cells: Vec<&GridCell> = reports.iter().flat_map(|r| r.cells.iter()).collect();
    if !cells.is_empty() {
        out.push_str("\n## Path and cycle family grid\n\n");
        out.push_str("Product values by length and copy regime; P = path factor, C = cycle factor.\n\n");
        let mut h_names: Vec<&str> = cells.iter().map(|c| c.h.as_str()).collect::<Vec<_>>();
        h_names.sort_unstable();
        h_names.dedup();
        let mut lengths: Vec<usize> = Vec::new();
        let mut table: BTreeMap<(usize, &str), [Option<usize>; 2]> = BTreeMap::new();
        for cell in &cells {
            let Ok(spec) = cell.g.parse::<FamilySpec>() else { continue };
            let (n, slot) = match spec {
                FamilySpec::Path(n) => (n, 0),
                FamilySpec::Cycle(n) => (n, 1),
                _ => continue,
            };
            lengths.push(n);
            table.entry((n, cell.h.as_str())).or_default()[slot] = Some(cell.oracle);
        }
        lengths.sort_unstable();
        lengths.dedup();
        out.push_str("| n |");
        for h in &h_names {
            out.push_str(&format!(" {h} |"));
        }
        out.push('\n');
        out.push_str("|---|");
        for _ in &h_names {
            out.push_str("---|");
        }
        out.push('\n');
        for n in lengths {
            out.push_str(&format!("| {n} |"));
            for h in &h_names {
                let entry = table.get(&(n, *h));
                let text = match entry {
                    Some([p, c]) => {
                        let p = p.map_or("-".to_string(), |v| format!("P={v}"));
                        let c = c.map_or("-".to_string(), |v| format!("C={v}"));
                        format!("{p} {c}")
                    }
                    None => "-".to_string(),
                };
                out.push_str(&format!(" {text} |"));
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    fn small_corpus() -> Corpus {
        CorpusSpec {
            single_max: 4,
            pair_g_max: 3,
            pair_h_max: 2,
            grid_max: 5,
            product_cap: 20,
            ..CorpusSpec::default()
        }
        .build()
        .unwrap()
    }

    #[test]
    fn check_ids_parse_and_print() {
        for id in CheckId::all() {
            let text = id.to_string();
            assert_eq!(text.parse::<CheckId>().unwrap(), id);
        }
        assert!("V0".parse::<CheckId>().is_err());
        assert!("V17".parse::<CheckId>().is_err());
        assert!("X3".parse::<CheckId>().is_err());
    }

    #[test]
    fn all_checks_pass_on_a_small_corpus() {
        let corpus = small_corpus();
        for report in run_all(&corpus) {
            assert!(report.passed(), "{}: {:?}", report.id, report.counterexamples);
            assert_eq!(report.tested + report.skipped, report_item_count(&report, &corpus));
            assert!(report.counterexamples.is_empty());
        }
    }

    fn report_item_count(report: &CheckReport, corpus: &Corpus) -> usize {
        let id: CheckId = report.id.parse().unwrap();
        if (1..=5).contains(&id.number()) {
            corpus.singles.len()
        } else {
            corpus.pairs.len()
        }
    }

    #[test]
    fn determinism_of_reports() {
        let corpus = small_corpus();
        let a = run_check("V6".parse().unwrap(), &corpus);
        let b = run_check("V6".parse().unwrap(), &corpus);
        assert_eq!(a.tested, b.tested);
        assert_eq!(a.skipped, b.skipped);
        assert_eq!(a.skip_reasons, b.skip_reasons);
        assert_eq!(a.verdict, b.verdict);
    }

    #[test]
    fn empty_corpus_passes_with_warning() {
        let corpus = CorpusSpec::empty().build().unwrap();
        for report in run_all(&corpus) {
            assert!(report.passed());
            assert_eq!(report.tested, 0);
            assert!(report.warning.as_deref().unwrap_or("").contains("SKIPPED-ALL"));
        }
    }

    #[test]
    fn corrupted_oracle_is_caught_with_replayable_payload() {
        let corpus = small_corpus();
        let started = Instant::now();
        // one side lies by one on products of order 6
        let outcomes = product_equality_outcomes(
            &corpus,
            |p| exact_invariant(p, InvariantKind::DoubleDomination),
            |p| exact_invariant(p, InvariantKind::TotalRomanTwo).map(|v| v + usize::from(p.n() == 6)),
        );
        let report = assemble("V6".parse().unwrap(), outcomes, started);
        assert!(!report.passed());
        assert!(!report.counterexamples.is_empty());
        // the payload replays: parse both graph6 strings, rebuild the
        // product, and observe the true values still agree
        let ce = &report.counterexamples[0];
        let g = parse_graph6(&ce.g).unwrap();
        let h = parse_graph6(ce.h.as_deref().unwrap()).unwrap();
        let (product, _) = lex_product(&g, &h).unwrap();
        assert_eq!(product.n(), 6);
        assert_eq!(
            exact_invariant(&product, InvariantKind::DoubleDomination).unwrap(),
            exact_invariant(&product, InvariantKind::TotalRomanTwo).unwrap()
        );
    }

    #[test]
    fn hunt_finds_equality_graphs_and_products() {
        let corpus = CorpusSpec { single_max: 4, ..CorpusSpec::default() }.build().unwrap();
        let hits = hunt_equality(&corpus);
        let k2 = write_graph6(&FamilySpec::Complete(2).build().unwrap());
        assert!(hits.iter().any(|e| e.graph6 == k2 && e.value == 2));
        let star = write_graph6(&FamilySpec::Star(3).build().unwrap());
        assert!(!hits.iter().any(|e| e.graph6 == star));
        // C4 = K2 o N2 is recognized as a product
        let c4 = write_graph6(&FamilySpec::Cycle(4).build().unwrap());
        let c4_hit = hits.iter().find(|e| e.graph6 == c4).expect("C4 attains equality");
        assert!(c4_hit.lex_product);
        // every 4-vertex product of K2 with a nontrivial H appears
        for h in labeled_graphs(2).unwrap() {
            let (p, _) = lex_product(&FamilySpec::Complete(2).build().unwrap(), &h).unwrap();
            let line = write_graph6(&p);
            assert!(hits.iter().any(|e| e.graph6 == line), "missing product {line}");
        }
    }

    #[test]
    fn emitters_produce_stable_shapes() {
        let corpus = small_corpus();
        let reports = vec![run_check("V14".parse().unwrap(), &corpus)];
        let json = emit_json(&reports);
        assert!(json.contains("\"verdict\": \"pass\""));
        let csv = emit_csv(&reports);
        assert_eq!(csv.lines().count(), reports.len() + 1);
        let md = emit_markdown(&reports);
        assert!(md.contains("| V14 |"));
        assert!(md.contains("family grid"));
        assert!(md.contains("| n |"));
    }
}
