//! Graphs, digraphs and simplicial complexes defined on finite universal
//! algebras, with exact recognizers and invariants for the resulting graphs.

pub mod algebra;
pub mod algebra_graphs;
pub mod arith;
pub mod catalog;
pub mod classes;
pub mod complexes;
pub mod error;
pub mod graph;
pub mod limits;
pub mod verify;

pub use algebra_graphs::{build_digraph, build_graph, DigraphKind, EnhancedVariant, GraphKind};
pub use algebra::{BuilderSpec, ElemSet, FiniteAlgebra, Operation, SubalgebraSet};
pub use classes::{classify, graph_invariant, ClassWitness, GraphClass, Invariant, InvariantValue};
pub use complexes::{build_complex, is_matroid, one_skeleton, ComplexKind, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::{complement_graph, edge_difference, induced_subgraph, is_spanning_subgraph, Digraph, SimpleGraph};
pub use limits::Limits;
pub use verify::{run_suite, Family, Suite, SuiteSpec, VerificationReport};
