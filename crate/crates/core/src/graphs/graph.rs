use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use super::label::{BitLabel, MAX_LABEL_BITS};
use crate::error::{Error, Result};

/// How the edge set of a [`LabeledGraph`] was determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphMode {
    /// Edges are exactly the label pairs at Hamming distance 1.
    InducedSubcube,
    /// Edges were supplied explicitly.
    ExplicitEdges,
}

impl GraphMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphMode::InducedSubcube => "induced-subcube",
            GraphMode::ExplicitEdges => "explicit-edges",
        }
    }
}

impl fmt::Display for GraphMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A simple undirected graph whose vertices carry binary-string labels.
///
/// Immutable after construction. Adjacency lists are sorted by vertex index.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    dimension: usize,
    labels: Vec<BitLabel>,
    adjacency: Vec<Vec<usize>>,
    mode: GraphMode,
    genuine_labels: bool,
    index: HashMap<BitLabel, usize>,
}

impl LabeledGraph {
    /// Subgraph of `Q_n` induced by `labels`. Vertices are re-sorted
    /// lexicographically.
    pub fn induced(dimension: usize, labels: impl IntoIterator<Item = BitLabel>) -> Result<Self> {
        let labels = sorted_unique(dimension, labels)?;
        let index = index_of(&labels);
        let adjacency = labels
            .iter()
            .map(|x| {
                let mut nbrs: Vec<usize> = (1..=dimension)
                    .filter_map(|i| index.get(&x.flipped(i)).copied())
                    .collect();
                nbrs.sort_unstable();
                nbrs
            })
            .collect();
        Ok(LabeledGraph {
            dimension,
            labels,
            adjacency,
            mode: GraphMode::InducedSubcube,
            genuine_labels: true,
            index,
        })
    }

    /// Graph with an explicit edge list over the given (distinct) labels.
    /// Vertex order is the order of `labels`.
    ///
    /// The labels count as a genuine hypercube labeling when every edge joins
    /// labels at Hamming distance 1; otherwise they are placeholders.
    pub fn explicit(
        dimension: usize,
        labels: Vec<BitLabel>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        check_labels(dimension, &labels)?;
        let index = index_of(&labels);
        if index.len() != labels.len() {
            return Err(Error::Precondition("duplicate labels".into()));
        }
        let n = labels.len();
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex(u));
            }
            if v >= n {
                return Err(Error::InvalidVertex(v));
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            if !sets[u].insert(v) {
                return Err(Error::Precondition(format!("duplicate edge {u}-{v}")));
            }
            sets[v].insert(u);
        }
        let adjacency: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let genuine_labels = adjacency
            .iter()
            .enumerate()
            .all(|(u, nbrs)| nbrs.iter().all(|&v| labels[u].hamming(&labels[v]) == 1));
        Ok(LabeledGraph {
            dimension,
            labels,
            adjacency,
            mode: GraphMode::ExplicitEdges,
            genuine_labels,
            index,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn mode(&self) -> GraphMode {
        self.mode
    }

    /// Whether labels form a hypercube labeling (always true for induced graphs).
    pub fn has_genuine_labels(&self) -> bool {
        self.genuine_labels
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[BitLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> BitLabel {
        self.labels[v]
    }

    pub fn vertex_of(&self, label: &BitLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Parses `s` as a label and looks it up.
    pub fn vertex_named(&self, s: &str) -> Option<usize> {
        s.parse().ok().and_then(|l| self.vertex_of(&l))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// `N[v]` in ascending index order.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let mut inserted = false;
        for &u in &self.adjacency[v] {
            if !inserted && u > v {
                out.push(v);
                inserted = true;
            }
            out.push(u);
        }
        if !inserted {
            out.push(v);
        }
        out
    }

    /// Edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.labels.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.num_vertices()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.num_vertices()
    }

    /// Minimum vertex degree.
    pub fn min_degree(&self) -> Result<usize> {
        self.adjacency
            .iter()
            .map(Vec::len)
            .min()
            .ok_or(Error::EmptyGraph)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Recomputes the Hamming-1 pairs among the labels.
    pub fn hamming_one_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, x) in self.labels.iter().enumerate() {
            for i in 1..=self.dimension {
                if let Some(v) = self.vertex_of(&x.flipped(i)) {
                    if v > u {
                        out.push((u, v));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub(crate) fn require_genuine_labels(&self) -> Result<()> {
        if self.genuine_labels {
            Ok(())
        } else {
            Err(Error::PlaceholderLabels)
        }
    }
}

fn check_labels(dimension: usize, labels: &[BitLabel]) -> Result<()> {
    if dimension > MAX_LABEL_BITS {
        return Err(Error::DimensionCap {
            n: dimension,
            cap: MAX_LABEL_BITS,
        });
    }
    if let Some(bad) = labels.iter().find(|l| l.len() != dimension) {
        return Err(Error::Precondition(format!(
            "label {bad} has length {} but the graph dimension is {dimension}",
            bad.len()
        )));
    }
    Ok(())
}

fn sorted_unique(dimension: usize, labels: impl IntoIterator<Item = BitLabel>) -> Result<Vec<BitLabel>> {
    let mut labels: Vec<BitLabel> = labels.into_iter().collect();
    check_labels(dimension, &labels)?;
    labels.sort_unstable();
    let before = labels.len();
    labels.dedup();
    if labels.len() != before {
        return Err(Error::Precondition("duplicate labels".into()));
    }
    Ok(labels)
}

fn index_of(labels: &[BitLabel]) -> HashMap<BitLabel, usize> {
    labels.iter().enumerate().map(|(i, &l)| (l, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> BitLabel {
        s.parse().unwrap()
    }

    #[test]
    fn induced_sorts_and_links() {
        let g = LabeledGraph::induced(3, ["101", "000", "001", "100"].map(l)).unwrap();
        let names: Vec<String> = g.labels().iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["000", "001", "100", "101"]);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(g.closed_neighborhood(1), vec![0, 1, 3]);
    }

    #[test]
    fn explicit_rejects_self_loops_and_duplicates() {
        let labels = vec![l("00"), l("01")];
        assert!(LabeledGraph::explicit(2, labels.clone(), [(0, 0)]).is_err());
        assert!(LabeledGraph::explicit(2, labels.clone(), [(0, 1), (1, 0)]).is_err());
        assert!(LabeledGraph::explicit(2, labels, [(0, 2)]).is_err());
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(LabeledGraph::induced(2, ["01", "01"].map(l)).is_err());
    }

    #[test]
    fn placeholder_detection() {
        let g = LabeledGraph::explicit(2, vec![l("00"), l("11")], [(0, 1)]).unwrap();
        assert!(!g.has_genuine_labels());
        let g = LabeledGraph::explicit(2, vec![l("00"), l("10")], [(0, 1)]).unwrap();
        assert!(g.has_genuine_labels());
    }

    #[test]
    fn empty_graph_min_degree_errors() {
        let g = LabeledGraph::induced(2, []).unwrap();
        assert!(matches!(g.min_degree(), Err(Error::EmptyGraph)));
    }
}
