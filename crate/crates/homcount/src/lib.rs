//! Exact counting and decision procedures for graph homomorphisms.
//!
//! * [`graph`]: the graph type, colorings, products, quotients, canonical forms, probes.
//! * [`generators`]: Kneser graphs, grids, and the bit-string encoding.
//! * [`counting`]: brute-force counters for every map species, the treewidth DP,
//!   colorful inclusion–exclusion, matchings.
//! * [`quantum`]: quantum graphs, Möbius inversion and basis changes, constituent extraction.
//! * [`linegraph`]: line graphs, root reconstruction, the line-target decision procedure
//!   and the line-pattern quantum graph.
//! * [`reductions`]: clique gadgets, crowns, the Kneser universality encoding, certificates.
//! * [`oracle`] and [`acceptance`]: independent reference implementations and the
//!   acceptance checks built on them.

pub mod acceptance;
pub mod counting;
pub mod generators;
pub mod graph;
pub mod linegraph;
pub mod oracle;
pub mod par;
pub mod partition;
pub mod quantum;
pub mod reductions;

pub use graph::{Graph, VertexColoring};
pub use par::Exec;

/// Size limits shared by the exponential routines.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Largest pattern for uncolored brute-force map counting.
    pub pattern_budget: usize,
    /// Largest pattern for color-prescribed and colorful counting.
    pub colored_pattern_budget: usize,
    /// Largest number of colors in an inclusion–exclusion sum.
    pub subset_budget: usize,
    /// Largest generated graph.
    pub vertex_budget: usize,
    /// Largest test graph used by constituent extraction.
    pub test_graph_vertices: usize,
    pub exec: Exec,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            pattern_budget: 10,
            colored_pattern_budget: 64,
            subset_budget: 16,
            vertex_budget: 2_000_000,
            test_graph_vertices: 6,
            exec: Exec::default(),
        }
    }
}

impl Limits {
    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_pattern_budget(mut self, n: usize) -> Self {
        self.pattern_budget = n;
        self
    }
}
