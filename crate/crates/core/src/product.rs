//! Lexicographic product construction with the row-major pair indexing used
//! by every witness set and report in this crate.

use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};

/// Bijection between `V(G) x V(H)` and `0..nG*nH`.
///
/// The encoding is row-major: `(u, v) <-> u*nH + v`, so the copy of H above
/// `u` is the contiguous label block `u*nH .. (u+1)*nH`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairIndex {
    n_g: usize,
    n_h: usize,
}

impl PairIndex {
    pub fn new(n_g: usize, n_h: usize) -> PairIndex {
        PairIndex { n_g, n_h }
    }

    pub fn n_g(&self) -> usize {
        self.n_g
    }

    pub fn n_h(&self) -> usize {
        self.n_h
    }

    /// Order of the product graph.
    pub fn len(&self) -> usize {
        self.n_g * self.n_h
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encode(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.n_g && v < self.n_h);
        u * self.n_h + v
    }

    pub fn decode(&self, p: usize) -> (usize, usize) {
        debug_assert!(p < self.len());
        (p / self.n_h, p % self.n_h)
    }

    /// The label block of the copy of H above `u`.
    pub fn block(&self, u: usize) -> VertexSet {
        let mask = if self.n_h == MAX_VERTICES {
            u64::MAX
        } else {
            (1u64 << self.n_h) - 1
        };
        VertexSet::from_bits(mask << (u * self.n_h))
    }
}

/// Per-copy membership counts of a vertex set of a product, together with
/// the partition of `V(G)` by count: at least two, exactly one, none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionProfile {
    pub counts: Vec<usize>,
    /// Copies holding two or more members.
    pub two_plus: VertexSet,
    /// Copies holding exactly one member.
    pub one: VertexSet,
    /// Copies holding no member.
    pub zero: VertexSet,
}

impl ProjectionProfile {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// The lexicographic product `G o H`: vertices `V(G) x V(H)`, with `(u,v)`
/// adjacent to `(x,y)` iff `ux` is an edge of G, or `u = x` and `vy` is an
/// edge of H.
pub fn lex_product(g: &Graph, h: &Graph) -> Result<(Graph, PairIndex), GraphError> {
    if g.n() == 0 || h.n() == 0 {
        return Err(GraphError::BadFamily("lexicographic product needs nonempty factors".into()));
    }
    let order = g
        .n()
        .checked_mul(h.n())
        .filter(|&m| m <= MAX_VERTICES)
        .ok_or(GraphError::TooLarge(g.n().saturating_mul(h.n())))?;
    let idx = PairIndex::new(g.n(), h.n());
    let mut edges = Vec::new();
    for (u, x) in g.edges() {
        for v in h.vertices() {
            for y in h.vertices() {
                edges.push((idx.encode(u, v), idx.encode(x, y)));
            }
        }
    }
    for u in g.vertices() {
        for (v, y) in h.edges() {
            edges.push((idx.encode(u, v), idx.encode(u, y)));
        }
    }
    let product = Graph::from_edges(order, &edges)?;
    Ok((product, idx))
}

/// Counts the members of `s` in each copy of H and partitions `V(G)`
/// accordingly.
pub fn projection_profile(s: VertexSet, idx: &PairIndex) -> ProjectionProfile {
    let mut counts = vec![0usize; idx.n_g()];
    let mut two_plus = VertexSet::EMPTY;
    let mut one = VertexSet::EMPTY;
    let mut zero = VertexSet::EMPTY;
    for (u, count) in counts.iter_mut().enumerate() {
        let c = (s & idx.block(u)).len();
        *count = c;
        match c {
            0 => zero.insert(u),
            1 => one.insert(u),
            _ => two_plus.insert(u),
        }
    }
    ProjectionProfile { counts, two_plus, one, zero }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn family(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn k2_times_n2_is_c4() {
        let (p, idx) = lex_product(&family("complete:2"), &family("empty:2")).unwrap();
        assert_eq!(p.n(), 4);
        // exactly the four cross pairs
        assert_eq!(p.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(idx.encode(1, 0), 2);
        assert_eq!(idx.decode(3), (1, 1));
    }

    #[test]
    fn p2_times_p2_is_k4() {
        let (p, _) = lex_product(&family("path:2"), &family("path:2")).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.edge_count(), 6);
    }

    #[test]
    fn degree_law() {
        let g = family("cycle:3");
        let h = family("path:2");
        let (p, idx) = lex_product(&g, &h).unwrap();
        for u in g.vertices() {
            for v in h.vertices() {
                assert_eq!(p.degree(idx.encode(u, v)), h.n() * g.degree(u) + h.degree(v));
            }
        }
    }

    #[test]
    fn blocks_induce_copies_of_h() {
        let g = family("path:3");
        let h = family("cycle:4");
        let (p, idx) = lex_product(&g, &h).unwrap();
        for u in g.vertices() {
            for v in h.vertices() {
                for y in h.vertices() {
                    assert_eq!(
                        p.has_edge(idx.encode(u, v), idx.encode(u, y)),
                        h.has_edge(v, y),
                        "block {u} differs from H at ({v},{y})"
                    );
                }
            }
        }
    }

    #[test]
    fn size_cap_enforced() {
        let g = family("path:9");
        let h = family("cycle:8");
        assert!(matches!(lex_product(&g, &h), Err(GraphError::TooLarge(72))));
    }

    #[test]
    fn profile_of_full_block_and_empty_set() {
        let g = family("path:3");
        let h = family("path:2");
        let (_, idx) = lex_product(&g, &h).unwrap();
        let profile = projection_profile(idx.block(1), &idx);
        assert_eq!(profile.counts, vec![0, 2, 0]);
        assert_eq!(profile.two_plus, VertexSet::singleton(1));
        assert!(profile.one.is_empty());
        assert_eq!(profile.zero.to_vec(), vec![0, 2]);

        let empty = projection_profile(VertexSet::EMPTY, &idx);
        assert_eq!(empty.zero, VertexSet::full(3));
        assert_eq!(empty.total(), 0);
    }
}
