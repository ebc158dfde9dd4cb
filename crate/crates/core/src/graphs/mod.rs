//! Graph representation, BFS distances, generators and the text format.

mod distance;
mod format;
mod generators;
mod graph;
mod label;

pub use distance::{all_pairs_distances, bfs, DistanceMatrix};
pub use format::{from_text, read_graph, to_text, write_graph};
pub use generators::{
    complete_bipartite, cycle, fibonacci_cube, fibonacci_strings, hypercube, lucas_cube, path,
    path_subcube, Generators, DEFAULT_DIMENSION_CAP,
};
pub use graph::{GraphMode, LabeledGraph};
pub use label::{BitLabel, MAX_LABEL_BITS};

/// Minimum degree `δ(g)`.
pub fn min_degree(g: &LabeledGraph) -> crate::Result<usize> {
    g.min_degree()
}
