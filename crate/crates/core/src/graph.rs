//! Bitset-backed simple undirected graphs, named families, graph6 I/O and
//! exhaustive labeled enumeration of small graphs.
//!
//! Every graph is capped at [`MAX_VERTICES`] vertices (products included), so
//! a neighborhood is a single machine word and set operations over vertex
//! sets are single-word instructions.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Hard cap on the number of vertices of any graph, products included.
pub const MAX_VERTICES: usize = 64;

/// Largest order accepted by [`labeled_graphs`].
pub const ENUMERATION_CAP: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the {MAX_VERTICES}-vertex cap")]
    TooLarge(usize),
    #[error("edge endpoint {endpoint} out of range for order {order}")]
    EndpointOutOfRange { endpoint: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("invalid family parameters: {0}")]
    BadFamily(String),
    #[error("unknown family kind `{0}`")]
    UnknownFamily(String),
    #[error("enumeration order {0} exceeds the cap of {ENUMERATION_CAP}")]
    EnumerationTooLarge(usize),
    #[error("graph6: {0}")]
    Graph6(String),
}

/// A subset of the vertices `0..n` of some graph, stored as a 64-bit mask.
///
/// The set itself does not know the order of its graph; operations that need
/// it take `n` explicitly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is one 64-bit mask per vertex; the construction paths maintain
/// symmetry and loop-freedom.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list; duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange { endpoint: u, order: n });
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange { endpoint: v, order: n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// A graph is trivial when it has at most one vertex.
    pub fn is_trivial(&self) -> bool {
        self.n <= 1
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1u64 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.vertices().any(|v| self.adj[v] == 0)
    }

    /// Vertices `v` with `N[v] = V(G)`.
    pub fn universal_vertices(&self) -> VertexSet {
        let full = self.vertex_set().bits();
        VertexSet(
            self.vertices()
                .filter(|&v| self.adj[v] | 1u64 << v == full)
                .fold(0u64, |acc, v| acc | 1u64 << v),
        )
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            let mut higher = self.adj[u] & !VertexSet::full(u + 1).bits();
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Copy of the graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if u < g.n && v < g.n {
            g.adj[u] &= !(1u64 << v);
            g.adj[v] &= !(1u64 << u);
        }
        g
    }

    /// Connectivity over the whole vertex set; trivial and empty-order graphs
    /// count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let full = self.vertex_set().bits();
        let mut seen = 1u64;
        loop {
            let mut next = seen;
            let mut frontier = seen;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= self.adj[v];
            }
            if next == seen {
                return seen == full;
            }
            seen = next;
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A named graph family together with its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Path P_n.
    Path(usize),
    /// Cycle C_n.
    Cycle(usize),
    /// Complete graph K_n.
    Complete(usize),
    /// Star K_{1,r} with r leaves; the center is vertex 0.
    Star(usize),
    /// Double star S_{n1,n2}: two adjacent centers 0, 1 with n1 and n2 leaves.
    DoubleStar(usize, usize),
    /// Complete bipartite K_{n1,n2} with parts 0..n1 and n1..n1+n2.
    CompleteBipartite(usize, usize),
    /// Empty graph N_n.
    Empty(usize),
    /// Cycle C_k with an independent block of `blocks[i]` vertices joined to
    /// the consecutive cycle vertices i and i+1 (mod k). Cycle vertices come
    /// first, then the blocks in order.
    Hk { k: usize, blocks: Vec<usize> },
}

impl FamilySpec {
    /// Order of the graph the spec describes.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) | FamilySpec::Empty(n) => *n,
            FamilySpec::Star(r) => r + 1,
            FamilySpec::DoubleStar(a, b) => a + b + 2,
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::Hk { k, blocks } => k + blocks.iter().sum::<usize>(),
        }
    }

    /// Builds the canonical labeled instance.
    pub fn build(&self) -> Result<Graph, GraphError> {
        let bad = |msg: &str| Err(GraphError::BadFamily(format!("{self}: {msg}")));
        let order = self.order();
        if order > MAX_VERTICES {
            return Err(GraphError::TooLarge(order));
        }
        match self {
            FamilySpec::Path(n) => {
                if *n < 1 {
                    return bad("path needs n >= 1");
                }
                let edges: Vec<_> = (1..*n).map(|v| (v - 1, v)).collect();
                Graph::from_edges(*n, &edges)
            }
            FamilySpec::Cycle(n) => {
                if *n < 3 {
                    return bad("cycle needs n >= 3");
                }
                let edges: Vec<_> = (0..*n).map(|v| (v, (v + 1) % n)).collect();
                Graph::from_edges(*n, &edges)
            }
            FamilySpec::Complete(n) => {
                if *n < 1 {
                    return bad("complete needs n >= 1");
                }
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(*n, &edges)
            }
            FamilySpec::Star(r) => {
                if *r < 1 {
                    return bad("star needs r >= 1");
                }
                let edges: Vec<_> = (1..=*r).map(|v| (0, v)).collect();
                Graph::from_edges(r + 1, &edges)
            }
            FamilySpec::DoubleStar(a, b) => {
                if *a < 1 || *b < 1 {
                    return bad("double star needs n1, n2 >= 1");
                }
                let mut edges = vec![(0, 1)];
                edges.extend((0..*a).map(|i| (0, 2 + i)));
                edges.extend((0..*b).map(|i| (1, 2 + a + i)));
                Graph::from_edges(a + b + 2, &edges)
            }
            FamilySpec::CompleteBipartite(a, b) => {
                if *a < 1 || *b < 1 {
                    return bad("complete bipartite needs n1, n2 >= 1");
                }
                let mut edges = Vec::new();
                for u in 0..*a {
                    for v in 0..*b {
                        edges.push((u, a + v));
                    }
                }
                Graph::from_edges(a + b, &edges)
            }
            FamilySpec::Empty(n) => {
                if *n < 1 {
                    return bad("empty graph needs n >= 1");
                }
                Graph::empty(*n)
            }
            FamilySpec::Hk { k, blocks } => {
                if *k < 3 {
                    return bad("hk needs k >= 3");
                }
                if blocks.len() != *k {
                    return bad("hk needs exactly k block sizes");
                }
                if blocks.iter().any(|&s| s < 1) {
                    return bad("hk block sizes must be >= 1");
                }
                let mut edges: Vec<_> = (0..*k).map(|v| (v, (v + 1) % k)).collect();
                let mut next = *k;
                for (i, &s) in blocks.iter().enumerate() {
                    for _ in 0..s {
                        edges.push((next, i));
                        edges.push((next, (i + 1) % k));
                        next += 1;
                    }
                }
                Graph::from_edges(order, &edges)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(r) => write!(f, "star:1,{r}"),
            FamilySpec::DoubleStar(a, b) => write!(f, "dstar:{a},{b}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "cbip:{a},{b}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::Hk { k, blocks } => {
                let list: Vec<String> = blocks.iter().map(|s| s.to_string()).collect();
                write!(f, "hk:{k}:{}", list.join(","))
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Parses CLI-style specs: `path:7`, `cycle:5`, `complete:4`, `star:1,4`
    /// (or `star:4`), `dstar:2,3`, `cbip:2,3`, `empty:3`, `hk:4:3,2,3,2`.
    fn from_str(s: &str) -> Result<Self, GraphError> {
        let bad = || GraphError::BadFamily(s.to_string());
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let ints = |text: &str| -> Result<Vec<usize>, GraphError> {
            text.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        match kind {
            "path" => Ok(FamilySpec::Path(rest.parse().map_err(|_| bad())?)),
            "cycle" => Ok(FamilySpec::Cycle(rest.parse().map_err(|_| bad())?)),
            "complete" => Ok(FamilySpec::Complete(rest.parse().map_err(|_| bad())?)),
            "empty" => Ok(FamilySpec::Empty(rest.parse().map_err(|_| bad())?)),
            "star" => match ints(rest)?.as_slice() {
                [r] => Ok(FamilySpec::Star(*r)),
                [1, r] => Ok(FamilySpec::Star(*r)),
                _ => Err(bad()),
            },
            "dstar" => match ints(rest)?.as_slice() {
                [a, b] => Ok(FamilySpec::DoubleStar(*a, *b)),
                _ => Err(bad()),
            },
            "cbip" => match ints(rest)?.as_slice() {
                [a, b] => Ok(FamilySpec::CompleteBipartite(*a, *b)),
                _ => Err(bad()),
            },
            "hk" => {
                let (k_text, list) = rest.split_once(':').ok_or_else(bad)?;
                let k = k_text.parse().map_err(|_| bad())?;
                Ok(FamilySpec::Hk { k, blocks: ints(list)? })
            }
            other => Err(GraphError::UnknownFamily(other.to_string())),
        }
    }
}

/// Parses a graph argument: `family:<spec>`, a bare family spec like
/// `path:7`, or a graph6 line.
pub fn graph_from_spec(s: &str) -> Result<Graph, GraphError> {
    if let Some(rest) = s.strip_prefix("family:") {
        return rest.parse::<FamilySpec>()?.build();
    }
    if let Ok(spec) = s.parse::<FamilySpec>() {
        return spec.build();
    }
    parse_graph6(s)
}

/// Rooted product: one copy of `h` per vertex of `g`, with vertex `i` of `g`
/// identified with `root` in copy `i`. Copy `i` occupies the contiguous
/// label block `i*|V(h)| ..`.
pub fn rooted_product(g: &Graph, h: &Graph, root: usize) -> Result<Graph, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::BadFamily("rooted product needs a nonempty first factor".into()));
    }
    if h.n() < 2 {
        return Err(GraphError::BadFamily("rooted product needs a nontrivial second factor".into()));
    }
    if root >= h.n() {
        return Err(GraphError::VertexOutOfRange { vertex: root, order: h.n() });
    }
    let order = g
        .n()
        .checked_mul(h.n())
        .filter(|&m| m <= MAX_VERTICES)
        .ok_or(GraphError::TooLarge(g.n().saturating_mul(h.n())))?;
    let mut edges = Vec::new();
    for i in g.vertices() {
        let base = i * h.n();
        for (u, v) in h.edges() {
            edges.push((base + u, base + v));
        }
    }
    for (i, j) in g.edges() {
        edges.push((i * h.n() + root, j * h.n() + root));
    }
    Graph::from_edges(order, &edges)
}

const G6_MIN: u8 = 63;
const G6_MAX: u8 = 126;

/// Parses one line in graph6 format.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let err = |msg: &str| GraphError::Graph6(format!("{msg} in {line:?}"));
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(err("empty line"));
    }
    if bytes.iter().any(|&b| !(G6_MIN..=G6_MAX).contains(&b)) {
        return Err(err("byte outside the printable graph6 range"));
    }
    let vals: Vec<u64> = bytes.iter().map(|&b| (b - G6_MIN) as u64).collect();
    let (n, header_len) = if vals[0] < 63 {
        (vals[0] as usize, 1)
    } else if vals.len() >= 4 && vals[1] < 63 {
        (((vals[1] << 12) | (vals[2] << 6) | vals[3]) as usize, 4)
    } else {
        // 8-byte headers encode n >= 2^18, far beyond the cap.
        return Err(err("malformed or oversized header"));
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge(n));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = header_len + bit_count.div_ceil(6);
    if vals.len() < expected {
        return Err(err("truncated bit stream"));
    }
    if vals.len() > expected {
        return Err(err("trailing bytes after bit stream"));
    }
    let mut g = Graph::empty(n)?;
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let word = vals[header_len + pos / 6];
            if word >> (5 - pos % 6) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            pos += 1;
        }
    }
    Ok(g)
}

/// Writes the canonical graph6 line for a graph.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + G6_MIN);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + G6_MIN);
        out.push(((n >> 6) & 63) as u8 + G6_MIN);
        out.push((n & 63) as u8 + G6_MIN);
    }
    let mut word = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(word + G6_MIN);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + G6_MIN);
    }
    String::from_utf8(out).expect("graph6 bytes are printable")
}

/// Iterator over all labeled graphs on `n` vertices.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let mut g = Graph::empty(self.n).expect("order within cap");
        for (bit, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                g.add_edge_unchecked(u, v);
            }
        }
        Some(g)
    }
}

/// Enumerates the `2^(n(n-1)/2)` labeled graphs on `n` vertices, each exactly
/// once. Filtering (connectivity, isolated vertices, ...) is left to the
/// caller via `Iterator::filter`.
pub fn labeled_graphs(n: usize) -> Result<LabeledGraphs, GraphError> {
    if !(1..=ENUMERATION_CAP).contains(&n) {
        return Err(GraphError::EnumerationTooLarge(n));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let end = 1u64 << pairs.len();
    Ok(LabeledGraphs { n, pairs, next: 0, end })
}
