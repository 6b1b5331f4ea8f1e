//! Explicit witness sets in product coordinates: the periodic path scheme for
//! doubly-dominated copies, the six small-value constructions, witnesses
//! lifted through universal vertices, and the cycle-with-blocks family
//! witness. Constructions check their premises with the exact solvers but are
//! never trusted: callers validate every output.

use thiserror::Error;

use crate::formulas::FactorProfile;
use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
use crate::product::PairIndex;
use crate::solvers::{min_witness, InvariantKind, SolverError, WeightFn, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("premise violation: {0}")]
    Premise(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

fn premise(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::Premise(msg.into())
}

/// Per-copy action of the periodic path scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CopyAction {
    /// Place a dominating pair of the copy.
    DomPair,
    /// Place a single vertex of the copy.
    Single,
    /// Leave the copy empty.
    Skip,
}

use CopyAction::{DomPair, Single, Skip};

/// The base rows for paths on two to eight copies.
fn base_row(n: usize) -> Vec<CopyAction> {
    match n {
        2 => vec![DomPair, Single],
        3 => vec![Skip, DomPair, Single],
        4 => vec![Skip, DomPair, DomPair, Skip],
        5 => vec![Skip, DomPair, Single, DomPair, Skip],
        6 => vec![Skip, DomPair, Single, Single, DomPair, Skip],
        7 => vec![Skip, DomPair, Single, Skip, Single, DomPair, Skip],
        8 => vec![Skip, DomPair, Single, Skip, Single, DomPair, DomPair, Skip],
        _ => unreachable!("base rows cover 2..=8"),
    }
}

/// The scheme row for a path on `n >= 2` copies: base rows up to eight
/// copies, and for larger `n = 7q + r` the seven-copy row repeated `q` times
/// followed by the row for the remainder, except that a remainder of one
/// merges with the last seven-copy block into the eight-copy row.
pub fn scheme_row(n: usize) -> Result<Vec<CopyAction>, ConstructionError> {
    if n < 2 {
        return Err(premise(format!("path scheme needs n >= 2, got {n}")));
    }
    if n <= 8 {
        return Ok(base_row(n));
    }
    let q = n / 7;
    let r = n % 7;
    let mut row = Vec::with_capacity(n);
    match r {
        0 => {
            for _ in 0..q {
                row.extend(base_row(7));
            }
        }
        1 => {
            for _ in 0..q - 1 {
                row.extend(base_row(7));
            }
            row.extend(base_row(8));
        }
        _ => {
            for _ in 0..q {
                row.extend(base_row(7));
            }
            row.extend(base_row(r));
        }
    }
    debug_assert_eq!(row.len(), n);
    Ok(row)
}

/// Number of product vertices the scheme for `n` copies places:
/// `n - floor(n/7)`, plus one when `n = 1, 2 (mod 7)`.
pub fn scheme_cardinality(n: usize) -> usize {
    n - n / 7 + usize::from(n % 7 == 1 || n % 7 == 2)
}

/// The lexicographically smallest dominating pair of `h` together with its
/// smaller vertex, the default choices for the path scheme.
pub fn default_dominating_pair(h: &Graph) -> Result<(VertexSet, usize), ConstructionError> {
    let full = h.vertex_set();
    for a in h.vertices() {
        for b in a + 1..h.n() {
            if (h.closed_neighbors(a) | h.closed_neighbors(b)) == full {
                let pair: VertexSet = [a, b].into_iter().collect();
                return Ok((pair, a));
            }
        }
    }
    Err(premise("H has no dominating pair of vertices"))
}

/// Builds the double dominating set of `P_n o H` described by the scheme row:
/// a dominating pair of H in each DomPair copy and `single` in each Single
/// copy. The result has exactly [`scheme_cardinality`]`(n)` members.
pub fn path_scheme_gamma2(
    n: usize,
    h: &Graph,
    dom_pair: VertexSet,
    single: usize,
) -> Result<VertexSet, ConstructionError> {
    if n.checked_mul(h.n()).filter(|&m| m <= MAX_VERTICES).is_none() {
        return Err(ConstructionError::Graph(GraphError::TooLarge(n.saturating_mul(h.n()))));
    }
    if dom_pair.len() != 2 {
        return Err(premise(format!("dominating pair must have two vertices, got {dom_pair}")));
    }
    if !dom_pair.is_subset_of(h.vertex_set()) || single >= h.n() {
        return Err(premise("pair or single vertex out of range for H"));
    }
    let covered = dom_pair
        .iter()
        .fold(VertexSet::EMPTY, |acc, v| acc | h.closed_neighbors(v));
    if covered != h.vertex_set() {
        return Err(premise(format!("{dom_pair} is not a dominating set of H")));
    }
    let row = scheme_row(n)?;
    let idx = PairIndex::new(n, h.n());
    let mut set = VertexSet::EMPTY;
    for (u, action) in row.iter().enumerate() {
        match action {
            DomPair => {
                for v in dom_pair.iter() {
                    set.insert(idx.encode(u, v));
                }
            }
            Single => set.insert(idx.encode(u, single)),
            Skip => {}
        }
    }
    debug_assert_eq!(set.len(), scheme_cardinality(n));
    Ok(set)
}

fn product_index(g: &Graph, h: &Graph) -> Result<PairIndex, ConstructionError> {
    if g.n().checked_mul(h.n()).filter(|&m| m <= MAX_VERTICES).is_none() {
        return Err(ConstructionError::Graph(GraphError::TooLarge(
            g.n().saturating_mul(h.n()),
        )));
    }
    Ok(PairIndex::new(g.n(), h.n()))
}

fn lex_min_set(g: &Graph, kind: InvariantKind) -> Result<VertexSet, ConstructionError> {
    match min_witness(g, kind)? {
        Witness::Set(s) => Ok(s),
        Witness::Function(_) => unreachable!("set-valued kind"),
    }
}

/// Builds the three-vertex double dominating set of `G o H` for one of the
/// six small-value conditions, after re-checking the condition's premises
/// with the oracle. Choices tie-break to smallest labels.
pub fn small_value_witness(g: &Graph, h: &Graph, case: u8) -> Result<VertexSet, ConstructionError> {
    let idx = product_index(g, h)?;
    let pg = FactorProfile::of(g);
    let ph = FactorProfile::of(h);
    if !pg.nontrivial || !ph.nontrivial {
        return Err(premise("both factors must be nontrivial"));
    }
    let is_p2 = g.n() == 2 && g.has_edge(0, 1);
    let g_universals = g.universal_vertices();
    let h_universals = h.universal_vertices();
    let column = |x: VertexSet, v: usize| -> VertexSet { x.iter().map(|u| idx.encode(u, v)).collect() };
    match case {
        1 => {
            if !is_p2 || ph.gamma != 2 {
                return Err(premise("case 1 needs G = P2 and gamma(H) = 2"));
            }
            let pair = lex_min_set(h, InvariantKind::Domination)?;
            let vs: Vec<usize> = pair.iter().collect();
            Ok([idx.encode(0, vs[0]), idx.encode(0, vs[1]), idx.encode(1, vs[0])]
                .into_iter()
                .collect())
        }
        2 => {
            if is_p2 || g_universals.len() < 2 || ph.gamma < 2 {
                return Err(premise(
                    "case 2 needs G != P2 with two universal vertices and gamma(H) >= 2",
                ));
            }
            let mut us = g_universals.iter();
            let u = us.next().expect("two universals");
            let w = us.next().expect("two universals");
            let z = g.vertices().find(|&z| z != u && z != w).expect("G != P2 has a third vertex");
            Ok([idx.encode(u, 0), idx.encode(w, 0), idx.encode(z, 0)].into_iter().collect())
        }
        3 => {
            if g_universals.len() != 1 || !(ph.gamma == 2 || h_universals.len() == 1) {
                return Err(premise(
                    "case 3 needs exactly one universal vertex in G and gamma(H) = 2 or exactly one universal vertex in H",
                ));
            }
            let u = g_universals.min().expect("one universal");
            let w = g.vertices().find(|&w| w != u).expect("G nontrivial");
            let (v1, v2) = if ph.gamma == 2 {
                let pair = lex_min_set(h, InvariantKind::Domination)?;
                let vs: Vec<usize> = pair.iter().collect();
                (vs[0], vs[1])
            } else {
                let v1 = h_universals.min().expect("one universal");
                let v2 = h.vertices().find(|&v| v != v1).expect("H nontrivial");
                (v1, v2)
            };
            Ok([idx.encode(u, v1), idx.encode(u, v2), idx.encode(w, v1)].into_iter().collect())
        }
        4 => {
            if g_universals.len() != 1 || pg.gamma_2t != Some(3) || ph.gamma < 3 {
                return Err(premise(
                    "case 4 needs exactly one universal vertex in G, gamma_2t(G) = 3 and gamma(H) >= 3",
                ));
            }
            Ok(column(lex_min_set(g, InvariantKind::DoubleTotalDomination)?, 0))
        }
        5 => {
            if pg.gamma != 2 || pg.gamma_2t != Some(3) {
                return Err(premise("case 5 needs gamma(G) = 2 and gamma_2t(G) = 3"));
            }
            Ok(column(lex_min_set(g, InvariantKind::DoubleTotalDomination)?, 0))
        }
        6 => {
            let gamma_2t_above_3 = pg.gamma_2t.is_none_or(|v| v > 3);
            if pg.gamma != 2 || pg.gamma_x2 != Some(3) || !gamma_2t_above_3 || ph.gamma != 1 {
                return Err(premise(
                    "case 6 needs gamma(G) = 2, gamma_x2(G) = 3 < gamma_2t(G) and gamma(H) = 1",
                ));
            }
            let v = h_universals
                .min()
                .ok_or_else(|| premise("gamma(H) = 1 requires a universal vertex"))?;
            Ok(column(lex_min_set(g, InvariantKind::DoubleDomination)?, v))
        }
        other => Err(premise(format!("case must be 1..=6, got {other}"))),
    }
}

/// Double dominating set of `G o H` of size 2 gamma(G): a minimum dominating
/// set of G crossed with two universal vertices of H.
pub fn two_universal_witness(g: &Graph, h: &Graph) -> Result<VertexSet, ConstructionError> {
    let idx = product_index(g, h)?;
    if g.n() == 0 || g.has_isolated_vertex() {
        return Err(premise("G must have no isolated vertex"));
    }
    let universals = h.universal_vertices();
    if universals.len() < 2 {
        return Err(premise("H needs at least two universal vertices"));
    }
    let mut us = universals.iter();
    let y1 = us.next().expect("two universals");
    let y2 = us.next().expect("two universals");
    let d = lex_min_set(g, InvariantKind::Domination)?;
    let mut set = VertexSet::EMPTY;
    for u in d.iter() {
        set.insert(idx.encode(u, y1));
        set.insert(idx.encode(u, y2));
    }
    Ok(set)
}

/// Lifts a minimum total Roman {2} function of G to the product through a
/// universal vertex of H: same values on the universal column, zero
/// elsewhere. The weight equals gamma_tR2(G).
pub fn universal_lift_witness(g: &Graph, h: &Graph) -> Result<WeightFn, ConstructionError> {
    let idx = product_index(g, h)?;
    if g.n() == 0 || g.has_isolated_vertex() {
        return Err(premise("G must have no isolated vertex"));
    }
    if h.n() < 2 {
        return Err(premise("H must be nontrivial"));
    }
    let v = h
        .universal_vertices()
        .min()
        .ok_or_else(|| premise("H needs a universal vertex"))?;
    let f = match min_witness(g, InvariantKind::TotalRomanTwo)? {
        Witness::Function(f) => f,
        Witness::Set(_) => unreachable!("function-valued kind"),
    };
    let mut values = vec![0u8; idx.len()];
    for u in g.vertices() {
        values[idx.encode(u, v)] = f.value(u);
    }
    Ok(WeightFn::new(values)?)
}

/// The cycle vertices `{0..k-1}` of the cycle-with-blocks family graph; a
/// double total dominating set of size k.
pub fn hk_witness(k: usize, blocks: &[usize]) -> Result<VertexSet, ConstructionError> {
    // building validates the parameters
    crate::graph::FamilySpec::Hk { k, blocks: blocks.to_vec() }.build()?;
    Ok(VertexSet::full(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use crate::product::{lex_product, projection_profile};
    use crate::solvers::{exact_invariant, validate, Witness};

    fn family(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    fn counts(row: &[CopyAction]) -> Vec<usize> {
        row.iter()
            .map(|a| match a {
                DomPair => 2,
                Single => 1,
                Skip => 0,
            })
            .collect()
    }

    #[test]
    fn base_rows_match_the_dot_patterns() {
        assert_eq!(counts(&scheme_row(2).unwrap()), vec![2, 1]);
        assert_eq!(counts(&scheme_row(3).unwrap()), vec![0, 2, 1]);
        assert_eq!(counts(&scheme_row(4).unwrap()), vec![0, 2, 2, 0]);
        assert_eq!(counts(&scheme_row(5).unwrap()), vec![0, 2, 1, 2, 0]);
        assert_eq!(counts(&scheme_row(6).unwrap()), vec![0, 2, 1, 1, 2, 0]);
        assert_eq!(counts(&scheme_row(7).unwrap()), vec![0, 2, 1, 0, 1, 2, 0]);
        assert_eq!(counts(&scheme_row(8).unwrap()), vec![0, 2, 1, 0, 1, 2, 2, 0]);
        assert!(scheme_row(1).is_err());
    }

    #[test]
    fn scheme_cardinality_matches_rows_up_to_30() {
        for n in 2..=30 {
            let total: usize = counts(&scheme_row(n).unwrap()).iter().sum();
            assert_eq!(total, scheme_cardinality(n), "n = {n}");
        }
        assert_eq!(scheme_cardinality(7), 6);
        assert_eq!(scheme_cardinality(8), 8);
        assert_eq!(scheme_cardinality(14), 12);
        assert_eq!(scheme_cardinality(15), 14);
    }

    #[test]
    fn path_scheme_on_p7_with_p4() {
        let h = family("path:4");
        let (pair, single) = default_dominating_pair(&h).unwrap();
        assert_eq!(pair.to_vec(), vec![0, 2]);
        let s = path_scheme_gamma2(7, &h, pair, single).unwrap();
        assert_eq!(s.len(), 6);
        let g = family("path:7");
        let (product, idx) = lex_product(&g, &h).unwrap();
        assert!(validate(&product, InvariantKind::DoubleDomination, &Witness::Set(s)));
        assert_eq!(projection_profile(s, &idx).counts, vec![0, 2, 1, 0, 1, 2, 0]);
    }

    #[test]
    fn path_scheme_with_caller_supplied_pair() {
        let h = family("path:4");
        let pair: VertexSet = [1, 2].into_iter().collect();
        let s = path_scheme_gamma2(8, &h, pair, 0).unwrap();
        assert_eq!(s.len(), 8);
        let (product, idx) = lex_product(&family("path:8"), &h).unwrap();
        assert!(validate(&product, InvariantKind::DoubleDomination, &Witness::Set(s)));
        assert_eq!(projection_profile(s, &idx).counts, vec![0, 2, 1, 0, 1, 2, 2, 0]);
    }

    #[test]
    fn path_scheme_concatenates_blocks() {
        let h = family("path:4");
        let (pair, single) = default_dominating_pair(&h).unwrap();
        let s = path_scheme_gamma2(14, &h, pair, single).unwrap();
        assert_eq!(s.len(), 12);
        let (product, _) = lex_product(&family("path:14"), &h).unwrap();
        assert!(validate(&product, InvariantKind::DoubleDomination, &Witness::Set(s)));
    }

    #[test]
    fn path_scheme_rejects_bad_inputs() {
        let h = family("path:4");
        let pair: VertexSet = [0, 1].into_iter().collect();
        assert!(matches!(
            path_scheme_gamma2(7, &h, pair, 0),
            Err(ConstructionError::Premise(_))
        ));
        // 20 copies of a 4-vertex graph exceed the vertex cap
        assert!(path_scheme_gamma2(20, &h, [0, 2].into_iter().collect(), 0).is_err());
    }

    #[test]
    fn scheme_set_also_works_on_the_cycle() {
        // the wrapped path scheme is optimal for C7 as well
        let h = family("path:4");
        let (pair, single) = default_dominating_pair(&h).unwrap();
        let s = path_scheme_gamma2(7, &h, pair, single).unwrap();
        let (product, idx) = lex_product(&family("cycle:7"), &h).unwrap();
        assert!(validate(&product, InvariantKind::DoubleDomination, &Witness::Set(s)));
        assert_eq!(s.len(), exact_invariant(&product, InvariantKind::DoubleDomination).unwrap());
        assert_eq!(projection_profile(s, &idx).counts, vec![0, 2, 1, 0, 1, 2, 0]);
    }

    fn check_small_value(g: &Graph, h: &Graph, case: u8) {
        let s = small_value_witness(g, h, case).unwrap();
        assert_eq!(s.len(), 3, "case {case}");
        let (product, _) = lex_product(g, h).unwrap();
        assert!(
            validate(&product, InvariantKind::DoubleDomination, &Witness::Set(s)),
            "case {case} witness {s} is not double dominating"
        );
        assert_eq!(exact_invariant(&product, InvariantKind::DoubleDomination), Ok(3), "case {case}");
    }

    #[test]
    fn small_value_cases_build_valid_triples() {
        // 1: P2 with a 2-dominated H
        check_small_value(&family("path:2"), &family("path:4"), 1);
        // 2: two universal vertices and gamma(H) >= 2
        check_small_value(&family("complete:4"), &family("empty:2"), 2);
        // 3: one universal vertex, gamma(H) = 2 or one universal vertex in H
        check_small_value(&family("star:1,3"), &family("path:4"), 3);
        check_small_value(&family("star:1,3"), &family("path:3"), 3);
        // 4: one universal vertex, gamma_2t(G) = 3, gamma(H) >= 3
        let fan = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]).unwrap();
        check_small_value(&fan, &family("empty:3"), 4);
        // 5: gamma(G) = 2 and gamma_2t(G) = 3
        let augmented_triangle = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)],
        )
        .unwrap();
        check_small_value(&augmented_triangle, &family("path:2"), 5);
        // 6: gamma(G) = 2, gamma_x2(G) = 3 < gamma_2t(G), gamma(H) = 1
        check_small_value(&family("cycle:4"), &family("complete:2"), 6);
    }

    #[test]
    fn small_value_rejects_failed_premises() {
        assert!(small_value_witness(&family("path:3"), &family("path:4"), 1).is_err());
        assert!(small_value_witness(&family("path:2"), &family("complete:2"), 1).is_err());
        assert!(small_value_witness(&family("path:2"), &family("path:4"), 7).is_err());
    }

    #[test]
    fn two_universal_witness_has_size_twice_gamma() {
        let g = family("path:4");
        let h = family("complete:3");
        let s = two_universal_witness(&g, &h).unwrap();
        assert_eq!(s.len(), 4);
        let (product, _) = lex_product(&g, &h).unwrap();
        assert!(validate(&product, InvariantKind::DoubleDomination, &Witness::Set(s)));
        assert!(two_universal_witness(&g, &family("path:4")).is_err());
    }

    #[test]
    fn universal_lift_has_weight_gamma_tr2() {
        let g = family("path:3");
        let h = family("path:3");
        let f = universal_lift_witness(&g, &h).unwrap();
        assert_eq!(f.weight(), 3);
        let (product, _) = lex_product(&g, &h).unwrap();
        assert!(validate(&product, InvariantKind::TotalRomanTwo, &Witness::Function(f)));
        assert!(universal_lift_witness(&g, &family("empty:3")).is_err());
    }

    #[test]
    fn hk_witness_is_an_optimal_double_total_dominating_set() {
        for (k, blocks) in [(4usize, vec![3usize, 2, 3, 2]), (3, vec![1, 1, 1]), (5, vec![2, 2, 2, 2, 2])] {
            let g = FamilySpec::Hk { k, blocks: blocks.clone() }.build().unwrap();
            let s = hk_witness(k, &blocks).unwrap();
            assert_eq!(s.len(), k);
            assert!(validate(&g, InvariantKind::DoubleTotalDomination, &Witness::Set(s)));
            assert_eq!(exact_invariant(&g, InvariantKind::DoubleTotalDomination), Ok(k));
        }
        assert!(hk_witness(2, &[1, 1]).is_err());
    }
}
