/// Search caps shared by every combinatorial routine.
///
/// All targets are desk-scale; the defaults keep every catalog computation
/// well inside a few seconds while still rejecting accidental blowups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest subset size tried when searching for a generating set.
    pub max_generating_set: usize,
    /// Largest subalgebra lattice that will be materialized.
    pub max_lattice: usize,
    /// Node budget for the endomorphism backtracking search.
    pub endomorphism_nodes: usize,
    /// Largest simplex enumerated when building complexes.
    pub max_simplex: usize,
    /// Largest number of enumerated sets (generating sets, simplices).
    pub max_enumerated: usize,
    /// Vertex cap for graph containers.
    pub max_graph: usize,
    /// Vertex cap for chordal, cograph, split and threshold recognition.
    pub max_classify: usize,
    /// Vertex cap for the exhaustive perfection test.
    pub max_perfect: usize,
    /// Vertex cap for clique and chromatic number.
    pub max_clique: usize,
    /// Vertex cap for matching number.
    pub max_matching: usize,
    /// Vertex cap for spread.
    pub max_spread: usize,
    /// Largest spread value checked before reporting "at least".
    pub spread_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_generating_set: 6,
            max_lattice: 4096,
            endomorphism_nodes: 20_000_000,
            max_simplex: 8,
            max_enumerated: 1_000_000,
            max_graph: 512,
            max_classify: 128,
            max_perfect: 64,
            max_clique: 96,
            max_matching: 256,
            max_spread: 128,
            spread_cap: 4,
        }
    }
}
