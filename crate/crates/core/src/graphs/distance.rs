use std::collections::VecDeque;

use rayon::prelude::*;

use super::graph::LabeledGraph;

/// All-pairs hop distances, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u16>,
}

impl DistanceMatrix {
    /// Marker for vertex pairs in different components.
    pub const INFINITY: u16 = u16::MAX;

    /// BFS from every vertex.
    pub fn new(g: &LabeledGraph) -> Self {
        let n = g.num_vertices();
        let mut dist = vec![Self::INFINITY; n * n];
        if n > 0 {
            dist.par_chunks_mut(n)
                .enumerate()
                .for_each(|(s, row)| bfs_into(g, s, row));
        }
        DistanceMatrix { n, dist }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u16 {
        self.dist[u * self.n + v]
    }

    pub fn is_finite(&self, u: usize, v: usize) -> bool {
        self.get(u, v) != Self::INFINITY
    }

    pub fn row(&self, u: usize) -> &[u16] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, u: usize) -> u16 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }

    pub fn radius(&self) -> u16 {
        (0..self.n).map(|u| self.eccentricity(u)).min().unwrap_or(0)
    }

    pub fn diameter(&self) -> u16 {
        (0..self.n).map(|u| self.eccentricity(u)).max().unwrap_or(0)
    }

    /// Smallest distance from `v` to any vertex of `set` (`INFINITY` if empty).
    pub fn to_set(&self, v: usize, set: &[usize]) -> u16 {
        set.iter().map(|&c| self.get(v, c)).min().unwrap_or(Self::INFINITY)
    }
}

/// Single-source BFS distances.
pub fn bfs(g: &LabeledGraph, source: usize) -> Vec<u16> {
    let mut row = vec![DistanceMatrix::INFINITY; g.num_vertices()];
    bfs_into(g, source, &mut row);
    row
}

fn bfs_into(g: &LabeledGraph, source: usize, row: &mut [u16]) {
    row[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = row[u] + 1;
        for &v in g.neighbors(u) {
            if row[v] == DistanceMatrix::INFINITY {
                row[v] = next;
                queue.push_back(v);
            }
        }
    }
}

pub fn all_pairs_distances(g: &LabeledGraph) -> DistanceMatrix {
    DistanceMatrix::new(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{fibonacci_cube, hypercube, path, BitLabel};

    #[test]
    fn q2_antipodal() {
        let g = hypercube(2).unwrap();
        let d = DistanceMatrix::new(&g);
        let a = g.vertex_named("00").unwrap();
        let b = g.vertex_named("11").unwrap();
        assert_eq!(d.get(a, b), 2);
    }

    #[test]
    fn gamma5_radius_three() {
        let g = fibonacci_cube(5).unwrap();
        let d = DistanceMatrix::new(&g);
        let center = g.vertex_named("00000").unwrap();
        assert_eq!(d.eccentricity(center), 3);
        assert_eq!(d.radius(), 3);
        // 10101 and 01010 disagree everywhere.
        assert_eq!(d.diameter(), 5);
    }

    #[test]
    fn disconnected_pair_is_infinite() {
        let labels = vec!["0".parse::<BitLabel>().unwrap(), "1".parse().unwrap()];
        let g = LabeledGraph::explicit(1, labels, []).unwrap();
        let d = DistanceMatrix::new(&g);
        assert_eq!(d.get(0, 1), DistanceMatrix::INFINITY);
        assert_eq!(d.get(0, 0), 0);
    }

    #[test]
    fn path_diameter() {
        let d = DistanceMatrix::new(&path(5).unwrap());
        assert_eq!(d.diameter(), 4);
    }
}
