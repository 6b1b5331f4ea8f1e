//! Exact computation of domination-type invariants on small graphs and their
//! lexicographic products: bitset graphs and named families, pruned exact
//! solvers for seven invariants, closed-formula evaluators with premise
//! checks, witness-set constructions, and a falsification harness that sweeps
//! every identity over enumerated corpora.

pub mod constructions;
pub mod formulas;
pub mod graph;
pub mod product;
pub mod solvers;
pub mod verify;

pub use graph::{Graph, FamilySpec, GraphError, VertexSet};
pub use product::{lex_product, PairIndex, ProjectionProfile};
pub use solvers::{exact_invariant, min_witness, validate, InvariantKind, SolverError, WeightFn, Witness};
