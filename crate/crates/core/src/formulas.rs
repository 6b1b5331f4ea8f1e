//! Closed-form evaluators and bound calculators for the double domination
//! number of lexicographic products, in terms of factor invariants.
//!
//! Every evaluator re-verifies its premises with the exact solvers instead of
//! trusting caller flags; a silently wrong premise would poison the
//! verification harness built on top.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{FamilySpec, Graph, GraphError};
use crate::product::lex_product;
use crate::solvers::{exact_invariant, InvariantKind, SolverError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("premise violation: {0}")]
    PremiseViolation(String),
    #[error("no closed formula for family {0}")]
    UnsupportedFamily(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Exact value or interval produced by a formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Exact(usize),
    Range { lower: usize, upper: usize },
}

/// A formula evaluation: the value, the rule that produced it, and the
/// premises that were verified (not trusted) along the way.
#[derive(Clone, Debug, Serialize)]
pub struct FormulaResult {
    pub value: Value,
    pub rule: &'static str,
    pub assumptions: Vec<String>,
}

impl FormulaResult {
    fn exact(value: usize, rule: &'static str, assumptions: Vec<String>) -> FormulaResult {
        FormulaResult { value: Value::Exact(value), rule, assumptions }
    }

    /// The exact value, when the result is not an interval.
    pub fn exact_value(&self) -> Option<usize> {
        match self.value {
            Value::Exact(v) => Some(v),
            Value::Range { .. } => None,
        }
    }
}

/// Double domination number of the path P_n (n >= 2); equals the total
/// Roman {2}-domination number of P_n for n >= 3.
pub fn gamma_x2_path(n: usize) -> Result<usize, FormulaError> {
    if n < 2 {
        return Err(FormulaError::OutOfRange(format!("path double domination needs n >= 2, got {n}")));
    }
    Ok(if n.is_multiple_of(3) { 2 * n.div_ceil(3) + 1 } else { 2 * n.div_ceil(3) })
}

/// Double domination number of the cycle C_n (n >= 3); equals the total
/// Roman {2}-domination number of C_n.
pub fn gamma_x2_cycle(n: usize) -> Result<usize, FormulaError> {
    if n < 3 {
        return Err(FormulaError::OutOfRange(format!("cycle double domination needs n >= 3, got {n}")));
    }
    Ok((2 * n).div_ceil(3))
}

/// Total domination number of P_n and C_n (n >= 3).
pub fn gamma_t_path_or_cycle(n: usize) -> Result<usize, FormulaError> {
    if n < 3 {
        return Err(FormulaError::OutOfRange(format!("total domination formula needs n >= 3, got {n}")));
    }
    Ok(match n % 4 {
        0 => n / 2,
        1 | 3 => n.div_ceil(2),
        _ => n / 2 + 1,
    })
}

/// Invariants of a factor graph, computed once by the exact solvers and
/// reused across a sweep. Infeasible invariants are None.
#[derive(Clone, Debug)]
pub struct FactorProfile {
    pub order: usize,
    pub nontrivial: bool,
    pub isolated_free: bool,
    pub connected: bool,
    pub min_degree: usize,
    pub universal: usize,
    pub gamma: usize,
    pub rho: usize,
    pub gamma_t: Option<usize>,
    pub gamma_x2: Option<usize>,
    pub gamma_2t: Option<usize>,
    pub gamma_tr2: Option<usize>,
}

impl FactorProfile {
    pub fn of(g: &Graph) -> FactorProfile {
        FactorProfile {
            order: g.n(),
            nontrivial: g.n() >= 2,
            isolated_free: g.n() > 0 && !g.has_isolated_vertex(),
            connected: g.is_connected(),
            min_degree: g.min_degree(),
            universal: g.universal_vertices().len(),
            gamma: exact_invariant(g, InvariantKind::Domination).unwrap_or(0),
            rho: exact_invariant(g, InvariantKind::TwoPacking).unwrap_or(0),
            gamma_t: exact_invariant(g, InvariantKind::TotalDomination).ok(),
            gamma_x2: exact_invariant(g, InvariantKind::DoubleDomination).ok(),
            gamma_2t: exact_invariant(g, InvariantKind::DoubleTotalDomination).ok(),
            gamma_tr2: exact_invariant(g, InvariantKind::TotalRomanTwo).ok(),
        }
    }

    /// True when the double domination number is at least 3 (equivalently,
    /// the graph does not have two universal vertices) or undefined.
    fn gamma_x2_at_least_3(&self) -> bool {
        self.gamma_x2.is_none_or(|v| v >= 3)
    }
}

fn require_isolated_free(pg: &FactorProfile, who: &str) -> Result<(), FormulaError> {
    if !pg.isolated_free {
        return Err(FormulaError::PremiseViolation(format!("{who} must have no isolated vertex")));
    }
    Ok(())
}

fn require_nontrivial(p: &FactorProfile, who: &str) -> Result<(), FormulaError> {
    if !p.nontrivial {
        return Err(FormulaError::PremiseViolation(format!("{who} must be nontrivial")));
    }
    Ok(())
}

/// Domination number of the product from factor invariants: gamma(G) when
/// gamma(H) = 1, else gamma_t(G).
pub fn gamma_lex(g: &Graph, h: &Graph) -> Result<FormulaResult, FormulaError> {
    let pg = FactorProfile::of(g);
    let ph = FactorProfile::of(h);
    require_isolated_free(&pg, "G")?;
    require_nontrivial(&ph, "H")?;
    let mut assumptions = vec![
        "G has no isolated vertex".to_string(),
        "H is nontrivial".to_string(),
    ];
    let value = if ph.gamma == 1 {
        assumptions.push("gamma(H) = 1 (oracle)".to_string());
        pg.gamma
    } else {
        assumptions.push(format!("gamma(H) = {} >= 2 (oracle)", ph.gamma));
        pg.gamma_t.expect("isolated-free graph has a total dominating set")
    };
    Ok(FormulaResult::exact(value, "lex-domination", assumptions))
}

/// Total domination number of the product: always gamma_t(G).
pub fn gamma_t_lex(g: &Graph, h: &Graph) -> Result<FormulaResult, FormulaError> {
    let pg = FactorProfile::of(g);
    let ph = FactorProfile::of(h);
    require_isolated_free(&pg, "G")?;
    require_nontrivial(&ph, "H")?;
    Ok(FormulaResult::exact(
        pg.gamma_t.expect("isolated-free graph has a total dominating set"),
        "lex-total-domination",
        vec!["G has no isolated vertex".to_string(), "H is nontrivial".to_string()],
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct AppliedBound {
    pub side: &'static str,
    pub value: usize,
    pub rule: &'static str,
    pub premise: String,
}

/// Intersection of every applicable bound on the double domination number of
/// the product, with per-rule provenance.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub lower: usize,
    pub upper: usize,
    pub applied: Vec<AppliedBound>,
}

/// Assembles all applicable lower and upper bounds on gamma_x2(G o H) from
/// factor invariants, each bound recorded with the premise that admits it.
pub fn gamma_x2_lex_bounds(g: &Graph, h: &Graph) -> Result<BoundsReport, FormulaError> {
    let pg = FactorProfile::of(g);
    let ph = FactorProfile::of(h);
    gamma_x2_lex_bounds_profiled(&pg, &ph)
}

/// Profile-based variant for sweeps that already hold factor profiles.
pub fn gamma_x2_lex_bounds_profiled(
    pg: &FactorProfile,
    ph: &FactorProfile,
) -> Result<BoundsReport, FormulaError> {
    require_isolated_free(pg, "G")?;
    require_nontrivial(ph, "H")?;
    let gamma_t = pg.gamma_t.expect("isolated-free graph has a total dominating set");
    let gamma_tr2 = pg.gamma_tr2.expect("isolated-free graph has a total Roman {2} function");
    let mut applied = vec![
        AppliedBound {
            side: "lower",
            value: gamma_t,
            rule: "total-domination-lower",
            premise: "always applicable".to_string(),
        },
        AppliedBound {
            side: "lower",
            value: 2 * pg.rho,
            rule: "two-packing-lower",
            premise: "always applicable".to_string(),
        },
        AppliedBound {
            side: "upper",
            value: 2 * gamma_t,
            rule: "twice-total-domination-upper",
            premise: "always applicable".to_string(),
        },
    ];
    if ph.gamma >= 2 {
        applied.push(AppliedBound {
            side: "lower",
            value: gamma_tr2,
            rule: "total-roman2-lower",
            premise: format!("gamma(H) = {} >= 2 (oracle)", ph.gamma),
        });
    } else if ph.universal == 1 {
        // exactly one universal vertex pins the value at gamma_tR2(G)
        applied.push(AppliedBound {
            side: "lower",
            value: gamma_tr2,
            rule: "total-roman2-lower",
            premise: "H has exactly one universal vertex".to_string(),
        });
    }
    if ph.gamma == 1 {
        applied.push(AppliedBound {
            side: "upper",
            value: gamma_tr2,
            rule: "total-roman2-upper",
            premise: "gamma(H) = 1 (oracle)".to_string(),
        });
    }
    if ph.universal >= 2 {
        applied.push(AppliedBound {
            side: "upper",
            value: 2 * pg.gamma,
            rule: "twice-domination-upper",
            premise: format!("H has {} >= 2 universal vertices", ph.universal),
        });
    }
    if pg.min_degree >= 2 {
        applied.push(AppliedBound {
            side: "upper",
            value: pg.gamma_2t.expect("minimum degree 2 admits a double total dominating set"),
            rule: "double-total-domination-upper",
            premise: "min degree of G >= 2".to_string(),
        });
        applied.push(AppliedBound {
            side: "upper",
            value: pg.order,
            rule: "order-upper",
            premise: "min degree of G >= 2".to_string(),
        });
    }
    if pg.connected && pg.order >= 3 {
        applied.push(AppliedBound {
            side: "upper",
            value: 2 * (2 * pg.order / 3),
            rule: "two-thirds-order-upper",
            premise: format!("G connected of order {} >= 3", pg.order),
        });
    }
    let lower = applied.iter().filter(|b| b.side == "lower").map(|b| b.value).max().unwrap_or(0);
    let upper = applied.iter().filter(|b| b.side == "upper").map(|b| b.value).min().unwrap_or(usize::MAX);
    Ok(BoundsReport { lower, upper, applied })
}

/// Outcome of the small-value characterization of gamma_x2(G o H).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SmallValueClass {
    Two,
    /// Lowest-numbered matching condition, plus every matching condition
    /// (the six conditions are not mutually exclusive).
    Three { condition: u8, all_matching: Vec<u8> },
    AtLeastFour,
}

impl std::fmt::Display for SmallValueClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SmallValueClass::Two => write!(f, "2"),
            SmallValueClass::Three { condition, .. } => write!(f, "3 (condition {condition})"),
            SmallValueClass::AtLeastFour => write!(f, ">=4"),
        }
    }
}

/// Decides gamma_x2(G o H) in {2, 3, >=4} from factor invariants alone.
pub fn classify_small_value(g: &Graph, h: &Graph) -> Result<SmallValueClass, FormulaError> {
    let pg = FactorProfile::of(g);
    let ph = FactorProfile::of(h);
    classify_small_value_profiled(g, &pg, &ph)
}

/// Profile-based variant for sweeps that already hold factor profiles.
pub fn classify_small_value_profiled(
    g: &Graph,
    pg: &FactorProfile,
    ph: &FactorProfile,
) -> Result<SmallValueClass, FormulaError> {
    require_nontrivial(pg, "G")?;
    require_nontrivial(ph, "H")?;
    if pg.gamma == 1 && ph.gamma == 1 && (pg.gamma_x2 == Some(2) || ph.gamma_x2 == Some(2)) {
        return Ok(SmallValueClass::Two);
    }
    let is_p2 = g.n() == 2 && g.has_edge(0, 1);
    let gamma_2t_is = |v: usize| pg.gamma_2t == Some(v);
    let conditions = [
        (1u8, is_p2 && ph.gamma == 2),
        (2, !is_p2 && pg.universal >= 2 && ph.gamma >= 2),
        (3, pg.universal == 1 && (ph.gamma == 2 || ph.universal == 1)),
        (4, pg.universal == 1 && gamma_2t_is(3) && ph.gamma >= 3),
        (5, pg.gamma == 2 && gamma_2t_is(3)),
        (
            // an infeasible double total domination number counts as infinite
            6,
            pg.gamma == 2
                && pg.gamma_x2 == Some(3)
                && pg.gamma_2t.is_none_or(|v| v > 3)
                && ph.gamma == 1,
        ),
    ];
    let all_matching: Vec<u8> = conditions.iter().filter(|(_, hit)| *hit).map(|(i, _)| *i).collect();
    match all_matching.first() {
        Some(&condition) => Ok(SmallValueClass::Three { condition, all_matching }),
        None => Ok(SmallValueClass::AtLeastFour),
    }
}

/// Closed formula for gamma_x2(G o H) when G is a named family, dispatching
/// on the domination regime of H as measured by the oracle.
pub fn gamma_x2_lex_formula(spec: &FamilySpec, h: &Graph) -> Result<FormulaResult, FormulaError> {
    gamma_x2_lex_formula_profiled(spec, &FactorProfile::of(h))
}

/// Profile-based variant for sweeps that already hold the H profile.
pub fn gamma_x2_lex_formula_profiled(
    spec: &FamilySpec,
    ph: &FactorProfile,
) -> Result<FormulaResult, FormulaError> {
    let unsupported = || Err(FormulaError::UnsupportedFamily(spec.to_string()));
    let trivial_h_rejected = |what: &str| {
        Err(FormulaError::PremiseViolation(format!("H must be nontrivial for {what}")))
    };
    let mut assumptions = vec![format!("gamma(H) = {} (oracle)", ph.gamma)];
    match spec {
        FamilySpec::Path(2) | FamilySpec::Complete(2) | FamilySpec::Star(1) => {
            if !ph.nontrivial {
                return trivial_h_rejected("a two-vertex complete factor");
            }
            let value = match ph.gamma {
                1 => 2,
                2 => 3,
                _ => 4,
            };
            Ok(FormulaResult::exact(value, "p2-characterization", assumptions))
        }
        FamilySpec::Path(n) => {
            let n = *n;
            if n < 2 {
                return Err(FormulaError::OutOfRange("path formula needs n >= 2".into()));
            }
            match ph.gamma {
                1 => {
                    if !ph.nontrivial {
                        return trivial_h_rejected("path factors");
                    }
                    let value = if ph.gamma_x2_at_least_3() && n.is_multiple_of(3) {
                        assumptions.push("gamma_x2(H) >= 3 (oracle)".to_string());
                        2 * n.div_ceil(3) + 1
                    } else {
                        assumptions.push(format!(
                            "gamma_x2(H) {} (oracle)",
                            if ph.gamma_x2 == Some(2) { "= 2" } else { ">= 3" }
                        ));
                        2 * n.div_ceil(3)
                    };
                    Ok(FormulaResult::exact(value, "path-h-domination-1", assumptions))
                }
                2 => Ok(FormulaResult::exact(seven_periodic(n), "path-h-domination-2", assumptions)),
                _ => Ok(FormulaResult::exact(
                    match n % 4 {
                        0 => n,
                        1 | 3 => n + 1,
                        _ => n + 2,
                    },
                    "path-h-domination-3plus",
                    assumptions,
                )),
            }
        }
        FamilySpec::Cycle(n) => {
            let n = *n;
            if n < 3 {
                return Err(FormulaError::OutOfRange("cycle formula needs n >= 3".into()));
            }
            match ph.gamma {
                // trivial H is admitted here: the product degenerates to C_n
                1 => Ok(FormulaResult::exact((2 * n).div_ceil(3), "cycle-h-domination-1", assumptions)),
                2 => Ok(FormulaResult::exact(seven_periodic(n), "cycle-h-domination-2", assumptions)),
                _ => Ok(FormulaResult::exact(n, "cycle-h-domination-3plus", assumptions)),
            }
        }
        FamilySpec::Complete(n) => {
            if *n < 2 {
                return Err(FormulaError::OutOfRange("complete formula needs n >= 2".into()));
            }
            if !ph.nontrivial {
                return trivial_h_rejected("complete factors");
            }
            let value = if ph.gamma == 1 { 2 } else { 3 };
            Ok(FormulaResult::exact(value, "complete-base", assumptions))
        }
        FamilySpec::Star(r) => {
            if *r < 2 {
                return Err(FormulaError::OutOfRange("star formula needs r >= 2".into()));
            }
            if !ph.nontrivial {
                return trivial_h_rejected("star factors");
            }
            assumptions.push(format!(
                "gamma_x2(H) {} (oracle)",
                if ph.gamma_x2 == Some(2) { "= 2" } else { ">= 3" }
            ));
            let value = if ph.gamma_x2 == Some(2) {
                2
            } else if ph.gamma <= 2 {
                3
            } else {
                4
            };
            Ok(FormulaResult::exact(value, "star-base", assumptions))
        }
        FamilySpec::DoubleStar(a, b) => {
            if *a.min(b) < 2 {
                return Err(FormulaError::OutOfRange("double star formula needs n1, n2 >= 2".into()));
            }
            if !ph.nontrivial {
                return trivial_h_rejected("double star factors");
            }
            Ok(FormulaResult::exact(4, "double-star-base", assumptions))
        }
        FamilySpec::CompleteBipartite(a, b) => {
            if *a.min(b) < 2 {
                return Err(FormulaError::OutOfRange(
                    "complete bipartite formula needs n1, n2 >= 2".into(),
                ));
            }
            if !ph.nontrivial {
                return trivial_h_rejected("complete bipartite factors");
            }
            let value = if *a.min(b) == 2 && ph.gamma == 1 { 3 } else { 4 };
            Ok(FormulaResult::exact(value, "complete-bipartite-base", assumptions))
        }
        FamilySpec::Empty(_) | FamilySpec::Hk { .. } => unsupported(),
    }
}

/// n - floor(n/7), plus one when n = 1, 2 (mod 7).
fn seven_periodic(n: usize) -> usize {
    n - n / 7 + usize::from(n % 7 == 1 || n % 7 == 2)
}

/// Evaluates both sides of the equivalence for gamma_x2(G o H) = 2 gamma_t(G):
/// (a) the equality itself; (b) gamma_x2(G o H) = gamma_tR(G o H) together
/// with gamma_t(G) = gamma(G) or gamma(H) >= 2. Both sides are computed by
/// oracles on the product; the harness asserts the flags agree.
pub fn check_2gamma_t_equivalence(g: &Graph, h: &Graph) -> Result<(bool, bool), FormulaError> {
    let pg = FactorProfile::of(g);
    let ph = FactorProfile::of(h);
    require_isolated_free(&pg, "G")?;
    require_nontrivial(&ph, "H")?;
    let (product, _) = lex_product(g, h)?;
    let gx2 = exact_invariant(&product, InvariantKind::DoubleDomination)?;
    let gamma_t = pg.gamma_t.expect("isolated-free graph has a total dominating set");
    let a = gx2 == 2 * gamma_t;
    let gtr_product = exact_invariant(&product, InvariantKind::TotalRoman)?;
    let b = gx2 == gtr_product && (gamma_t == pg.gamma || ph.gamma >= 2);
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn family(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn path_cycle_closed_forms() {
        assert_eq!(gamma_x2_path(9), Ok(7));
        assert_eq!(gamma_x2_path(6), Ok(5));
        assert_eq!(gamma_x2_path(2), Ok(2));
        assert_eq!(gamma_x2_cycle(8), Ok(6));
        assert_eq!(gamma_x2_cycle(7), Ok(5));
        assert_eq!(gamma_t_path_or_cycle(6), Ok(4));
        assert_eq!(gamma_t_path_or_cycle(4), Ok(2));
        assert!(gamma_x2_path(1).is_err());
        assert!(gamma_x2_cycle(2).is_err());
        assert!(gamma_t_path_or_cycle(2).is_err());
    }

    #[test]
    fn gamma_lex_branches() {
        let p4 = family("path:4");
        let r = gamma_lex(&p4, &family("complete:2")).unwrap();
        assert_eq!(r.exact_value(), Some(2)); // gamma(P4), since gamma(K2) = 1
        let r = gamma_lex(&p4, &family("empty:2")).unwrap();
        assert_eq!(r.exact_value(), Some(2)); // gamma_t(P4), since gamma(N2) = 2
        let r = gamma_t_lex(&family("cycle:5"), &family("path:3")).unwrap();
        assert_eq!(r.exact_value(), Some(3));
        assert!(gamma_lex(&family("empty:2"), &p4).is_err());
        assert!(gamma_lex(&p4, &family("complete:1")).is_err());
    }

    #[test]
    fn bounds_on_c4_with_n2() {
        let report = gamma_x2_lex_bounds(&family("cycle:4"), &family("empty:2")).unwrap();
        assert_eq!((report.lower, report.upper), (3, 4));
        let rules: Vec<&str> = report.applied.iter().map(|b| b.rule).collect();
        assert!(rules.contains(&"total-roman2-lower"));
        assert!(rules.contains(&"double-total-domination-upper"));
        assert!(rules.contains(&"order-upper"));
        assert!(rules.contains(&"twice-total-domination-upper"));
    }

    #[test]
    fn bounds_on_p2_stay_within_two_and_four() {
        for h in ["complete:2", "path:3", "empty:3", "star:1,3"] {
            let report = gamma_x2_lex_bounds(&family("path:2"), &family(h)).unwrap();
            assert!(report.lower >= 2 && report.upper <= 4, "{h}: {report:?}");
            assert!(report.lower <= report.upper, "{h}");
        }
    }

    #[test]
    fn bounds_collapse_for_trees_with_doubly_dominated_h() {
        // gamma_x2(H) = 2 pins the product value at 2 gamma(T) on trees
        let t = family("path:7");
        let report = gamma_x2_lex_bounds(&t, &family("complete:3")).unwrap();
        let expected = 2 * exact_invariant(&t, InvariantKind::Domination).unwrap();
        assert_eq!((report.lower, report.upper), (expected, expected));
    }

    #[test]
    fn classify_examples() {
        let got = classify_small_value(&family("path:2"), &family("path:4")).unwrap();
        assert_eq!(got, SmallValueClass::Three { condition: 1, all_matching: vec![1] });
        assert_eq!(
            classify_small_value(&family("complete:3"), &family("complete:2")).unwrap(),
            SmallValueClass::Two
        );
        assert_eq!(
            classify_small_value(&family("dstar:2,3"), &family("complete:2")).unwrap(),
            SmallValueClass::AtLeastFour
        );
        assert!(classify_small_value(&family("path:2"), &family("complete:1")).is_err());
    }

    #[test]
    fn family_formula_examples() {
        let cell = |g: &str, h: &str| {
            gamma_x2_lex_formula(&g.parse::<FamilySpec>().unwrap(), &family(h))
                .unwrap()
                .exact_value()
                .unwrap()
        };
        assert_eq!(cell("path:7", "path:4"), 6);
        assert_eq!(cell("cycle:9", "empty:3"), 9);
        assert_eq!(cell("path:6", "empty:3"), 8);
        assert_eq!(cell("star:1,4", "path:3"), 3);
        assert_eq!(cell("cbip:2,3", "complete:2"), 3);
        assert_eq!(cell("complete:4", "path:4"), 3);
        assert_eq!(cell("dstar:2,2", "path:2"), 4);
        assert_eq!(cell("path:2", "path:4"), 3);
    }

    #[test]
    fn family_formula_rejects_unsupported_inputs() {
        let h = family("path:3");
        assert!(matches!(
            gamma_x2_lex_formula(&"empty:3".parse().unwrap(), &h),
            Err(FormulaError::UnsupportedFamily(_))
        ));
        assert!(matches!(
            gamma_x2_lex_formula(&"cbip:1,3".parse().unwrap(), &h),
            Err(FormulaError::OutOfRange(_))
        ));
        // trivial H is admitted only for cycles with gamma(H) = 1
        let k1 = family("complete:1");
        assert!(gamma_x2_lex_formula(&"path:5".parse().unwrap(), &k1).is_err());
        assert_eq!(
            gamma_x2_lex_formula(&"cycle:5".parse().unwrap(), &k1).unwrap().exact_value(),
            Some(4)
        );
    }

    #[test]
    fn equivalence_flags() {
        // gamma_x2(P2 o N2) = 3 != 4 = 2 gamma_t(P2), so both flags are false
        let flags = check_2gamma_t_equivalence(&family("path:2"), &family("empty:2")).unwrap();
        assert_eq!(flags, (false, false));
        let flags = check_2gamma_t_equivalence(&family("cycle:4"), &family("empty:2")).unwrap();
        assert_eq!(flags.0, flags.1);
        assert!(flags.0); // gamma_x2(C4 o N2) = 4 = 2 gamma_t(C4)
    }
}
