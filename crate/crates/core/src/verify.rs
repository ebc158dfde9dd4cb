//! Structural predicates: hypercube isometry, medians, common-neighbor
//! counts, retractions, domination and two-ball centers.
//!
//! Every check returns a [`CheckReport`]. When a check fails, its witness is
//! the first violation in lexicographic order of vertex indices, so repeated
//! runs report the same counterexample.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::{DistanceMatrix, LabeledGraph};

/// Counterexample attached to a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: &'static str,
    pub indices: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind)?;
        for (i, v) in self.indices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Outcome of a structural check. `witness` is present iff `verdict` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport {
            verdict: true,
            witness: None,
        }
    }

    pub fn fail(kind: &'static str, indices: Vec<usize>, detail: impl Into<String>) -> Self {
        CheckReport {
            verdict: false,
            witness: Some(Witness {
                kind,
                indices,
                detail: detail.into(),
            }),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verdict={}", self.verdict)?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        Ok(())
    }
}

/// Total map from source vertex indices to target vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap(pub Vec<usize>);

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap((0..n).collect())
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &VertexMap) -> VertexMap {
        VertexMap(self.0.iter().map(|&v| other.0[v]).collect())
    }
}

/// True iff `g` is connected and graph distance equals label Hamming distance
/// for every pair, i.e. the labeling is an isometric embedding into `Q_n`.
pub fn verify_isometric_in_hypercube(g: &LabeledGraph) -> Result<CheckReport> {
    g.require_genuine_labels()?;
    let dist = DistanceMatrix::new(g);
    Ok(isometry_with(g, &dist))
}

pub(crate) fn isometry_with(g: &LabeledGraph, dist: &DistanceMatrix) -> CheckReport {
    let n = g.num_vertices();
    for u in 0..n {
        for v in u + 1..n {
            let d = dist.get(u, v);
            if d == DistanceMatrix::INFINITY {
                return CheckReport::fail("disconnected", vec![u, v], "vertices lie in different components");
            }
            let h = g.label(u).hamming(&g.label(v));
            if u32::from(d) != h {
                return CheckReport::fail(
                    "pair",
                    vec![u, v],
                    format!(
                        "d_G({}, {}) = {d} but Hamming distance is {h}",
                        g.label(u),
                        g.label(v)
                    ),
                );
            }
        }
    }
    CheckReport::pass()
}

/// True iff every vertex triple has exactly one median.
pub fn is_median(g: &LabeledGraph) -> Result<CheckReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.num_vertices();
    let dist = DistanceMatrix::new(g);
    let intervals = Intervals::new(&dist);
    let mut scratch = vec![0u64; intervals.words];
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let uv = intervals.get(u, v);
                let uw = intervals.get(u, w);
                let vw = intervals.get(v, w);
                for (s, ((a, b), c)) in scratch.iter_mut().zip(uv.iter().zip(uw).zip(vw)) {
                    *s = a & b & c;
                }
                let count: u32 = scratch.iter().map(|x| x.count_ones()).sum();
                if count != 1 {
                    return Ok(CheckReport::fail(
                        "triple",
                        vec![u, v, w],
                        format!(
                            "triple ({}, {}, {}) has {count} medians",
                            g.label(u),
                            g.label(v),
                            g.label(w)
                        ),
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass())
}

/// Geodesic intervals `I(u, v)` as bitsets over vertices.
struct Intervals {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Intervals {
    fn new(dist: &DistanceMatrix) -> Self {
        let n = dist.len();
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * n * words];
        for u in 0..n {
            for v in 0..n {
                let duv = dist.get(u, v);
                let slot = &mut bits[(u * n + v) * words..(u * n + v + 1) * words];
                for m in 0..n {
                    if u32::from(dist.get(u, m)) + u32::from(dist.get(m, v)) == u32::from(duv) {
                        slot[m / 64] |= 1 << (m % 64);
                    }
                }
            }
        }
        Intervals { n, words, bits }
    }

    fn get(&self, u: usize, v: usize) -> &[u64] {
        let at = (u * self.n + v) * self.words;
        &self.bits[at..at + self.words]
    }
}

/// Result of [`check_lemma31`]: the report plus, on success, a histogram
/// mapping common-neighbor count to the number of distance-2 pairs with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonNeighborReport {
    pub report: CheckReport,
    pub histogram: Option<BTreeMap<usize, usize>>,
}

impl fmt::Display for CommonNeighborReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.report)?;
        if let Some(h) = &self.histogram {
            f.write_str(" histogram=")?;
            for (i, (k, v)) in h.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{k}:{v}")?;
            }
        }
        Ok(())
    }
}

/// Every pair at distance 2 has at most two common neighbors.
///
/// Graphs carrying a genuine labeling must be partial cubes under it;
/// placeholder-labeled graphs are counted directly, which is how negative
/// controls such as `K_{2,3}` enter.
pub fn check_lemma31(g: &LabeledGraph) -> Result<CommonNeighborReport> {
    let dist = DistanceMatrix::new(g);
    if g.has_genuine_labels() {
        let iso = isometry_with(g, &dist);
        if !iso.verdict {
            return Err(Error::Precondition(format!(
                "graph is not a partial cube under its labeling ({})",
                iso.witness.map(|w| w.to_string()).unwrap_or_default()
            )));
        }
    }
    let n = g.num_vertices();
    let mut histogram = BTreeMap::new();
    for u in 0..n {
        for v in u + 1..n {
            if dist.get(u, v) != 2 {
                continue;
            }
            let common = count_common(g.neighbors(u), g.neighbors(v));
            if common > 2 {
                return Ok(CommonNeighborReport {
                    report: CheckReport::fail(
                        "pair",
                        vec![u, v],
                        format!("{common} common neighbors at distance 2"),
                    ),
                    histogram: None,
                });
            }
            *histogram.entry(common).or_insert(0) += 1;
        }
    }
    Ok(CommonNeighborReport {
        report: CheckReport::pass(),
        histogram: Some(histogram),
    })
}

fn count_common(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Checks that `r` retracts `g` onto the subgraph induced by `h_vertices`:
/// it fixes those vertices and sends each edge to an edge or a single vertex.
pub fn verify_retraction(g: &LabeledGraph, h_vertices: &[usize], r: &VertexMap) -> Result<CheckReport> {
    let n = g.num_vertices();
    if r.len() != n {
        return Err(Error::Precondition(format!(
            "map has {} entries for a graph with {n} vertices",
            r.len()
        )));
    }
    let mut in_h = vec![false; n];
    for &h in h_vertices {
        if h >= n {
            return Err(Error::InvalidVertex(h));
        }
        in_h[h] = true;
    }
    if let Some(v) = (0..n).find(|&v| r.apply(v) >= n || !in_h[r.apply(v)]) {
        return Err(Error::Precondition(format!(
            "vertex {v} maps to {}, outside the target subgraph",
            r.apply(v)
        )));
    }
    if let Some(v) = (0..n).find(|&v| in_h[v] && r.apply(v) != v) {
        return Ok(CheckReport::fail(
            "unfixed",
            vec![v],
            format!("{} is in H but maps to {}", g.label(v), g.label(r.apply(v))),
        ));
    }
    for (u, v) in g.edges() {
        let (ru, rv) = (r.apply(u), r.apply(v));
        if ru != rv && !g.has_edge(ru, rv) {
            return Ok(CheckReport::fail(
                "edge",
                vec![u, v],
                format!(
                    "edge {}-{} maps to non-adjacent {}, {}",
                    g.label(u),
                    g.label(v),
                    g.label(ru),
                    g.label(rv)
                ),
            ));
        }
    }
    Ok(CheckReport::pass())
}

/// Every vertex is in `d` or adjacent to a member of `d`.
pub fn is_dominating_set(g: &LabeledGraph, d: &[usize]) -> Result<CheckReport> {
    let n = g.num_vertices();
    let mut covered = vec![false; n];
    for &x in d {
        if x >= n {
            return Err(Error::InvalidVertex(x));
        }
        covered[x] = true;
        for &y in g.neighbors(x) {
            covered[y] = true;
        }
    }
    Ok(match covered.iter().position(|&c| !c) {
        Some(v) => CheckReport::fail("vertex", vec![v], format!("{} is not dominated", g.label(v))),
        None => CheckReport::pass(),
    })
}

/// Result of [`two_ball_center`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoBallReport {
    pub report: CheckReport,
    /// First vertex whose closed 2-ball is the whole graph.
    pub center: Option<usize>,
}

impl fmt::Display for TwoBallReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.report)?;
        if let Some(c) = self.center {
            write!(f, " center={c}")?;
        }
        Ok(())
    }
}

/// Looks for a vertex `x` with `N_2[x] = V(g)`.
///
/// On failure the witness pairs the first most-central vertex with the first
/// vertex it cannot reach within two steps.
pub fn two_ball_center(g: &LabeledGraph) -> Result<TwoBallReport> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dist = DistanceMatrix::new(g);
    let n = g.num_vertices();
    if let Some(c) = (0..n).find(|&x| dist.eccentricity(x) <= 2) {
        return Ok(TwoBallReport {
            report: CheckReport::pass(),
            center: Some(c),
        });
    }
    let best = (0..n).min_by_key(|&x| (dist.eccentricity(x), x)).unwrap_or(0);
    let far = (0..n).find(|&y| dist.get(best, y) > 2).unwrap_or(0);
    Ok(TwoBallReport {
        report: CheckReport::fail(
            "eccentric",
            vec![best, far],
            format!(
                "radius is {}; {} is at distance {} from the most central vertex {}",
                dist.eccentricity(best),
                g.label(far),
                dist.get(best, far),
                g.label(best)
            ),
        ),
        center: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_bipartite, fibonacci_cube, hypercube, path, path_subcube, BitLabel};

    fn labels(ss: &[&str]) -> Vec<BitLabel> {
        ss.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn induced(ss: &[&str]) -> LabeledGraph {
        LabeledGraph::induced(ss[0].len(), labels(ss)).unwrap()
    }

    #[test]
    fn fibonacci_is_partial_cube() {
        assert!(verify_isometric_in_hypercube(&fibonacci_cube(6).unwrap()).unwrap().verdict);
        assert!(verify_isometric_in_hypercube(&fibonacci_cube(0).unwrap()).unwrap().verdict);
    }

    #[test]
    fn non_isometric_path_reports_pair() {
        let g = induced(&["000", "001", "011", "111", "110"]);
        let rep = verify_isometric_in_hypercube(&g).unwrap();
        assert!(!rep.verdict);
        let w = rep.witness.unwrap();
        let a = g.vertex_named("000").unwrap();
        let b = g.vertex_named("110").unwrap();
        assert_eq!(w.kind, "pair");
        assert_eq!(w.indices, vec![a, b]);
        assert_eq!(rep_line(&g), format!("verdict=false witness=pair:{a},{b}"));
    }

    fn rep_line(g: &LabeledGraph) -> String {
        verify_isometric_in_hypercube(g).unwrap().to_string()
    }

    #[test]
    fn disconnected_is_not_partial_cube() {
        let g = induced(&["00", "11"]);
        let rep = verify_isometric_in_hypercube(&g).unwrap();
        assert_eq!(rep.witness.unwrap().kind, "disconnected");
    }

    #[test]
    fn placeholder_labels_rejected() {
        assert!(matches!(
            verify_isometric_in_hypercube(&path(5).unwrap()),
            Err(Error::PlaceholderLabels)
        ));
    }

    #[test]
    fn median_checks() {
        assert!(is_median(&fibonacci_cube(4).unwrap()).unwrap().verdict);
        assert!(is_median(&path(6).unwrap()).unwrap().verdict);
        let c6 = induced(&["000", "001", "011", "111", "110", "100"]);
        let rep = is_median(&c6).unwrap();
        assert!(!rep.verdict);
        // Hand check: 000, 011, 110 are pairwise at distance 2 on the hexagon
        // and no vertex lies on all three geodesics.
        let t: Vec<usize> = ["000", "011", "110"].iter().map(|s| c6.vertex_named(s).unwrap()).collect();
        let w = rep.witness.unwrap();
        assert_eq!(w.kind, "triple");
        assert_eq!(w.indices, t);
        assert!(w.detail.contains("0 medians"));
    }

    #[test]
    fn median_rejects_disconnected() {
        assert!(matches!(is_median(&induced(&["00", "11"])), Err(Error::Disconnected)));
    }

    #[test]
    fn lemma31_hypercube_pairs_have_two() {
        let rep = check_lemma31(&hypercube(4).unwrap()).unwrap();
        assert!(rep.report.verdict);
        let h = rep.histogram.unwrap();
        // 16 vertices × C(4,2) pairs at distance two, each counted once.
        assert_eq!(h, BTreeMap::from([(2, 48)]));
    }

    #[test]
    fn lemma31_k23_fails() {
        let k = complete_bipartite(2, 3).unwrap();
        let rep = check_lemma31(&k).unwrap();
        assert!(!rep.report.verdict);
        assert_eq!(rep.report.witness.unwrap().indices, vec![0, 1]);
    }

    #[test]
    fn lemma31_requires_partial_cube() {
        let g = induced(&["000", "001", "011", "111", "110"]);
        assert!(check_lemma31(&g).is_err());
    }

    #[test]
    fn retraction_examples() {
        let q2 = hypercube(2).unwrap();
        let v = |s: &str| q2.vertex_named(s).unwrap();
        assert!(verify_retraction(&q2, &[0, 1, 2, 3], &VertexMap::identity(4)).unwrap().verdict);

        let mut map = vec![0; 4];
        map[v("00")] = v("00");
        map[v("01")] = v("01");
        map[v("10")] = v("00");
        map[v("11")] = v("01");
        assert!(verify_retraction(&q2, &[v("00"), v("01")], &VertexMap(map)).unwrap().verdict);

        let mut map = vec![0; 4];
        map[v("00")] = v("00");
        map[v("11")] = v("11");
        map[v("01")] = v("00");
        map[v("10")] = v("11");
        let rep = verify_retraction(&q2, &[v("00"), v("11")], &VertexMap(map)).unwrap();
        assert!(!rep.verdict);
        assert_eq!(rep.witness.unwrap().kind, "edge");
    }

    #[test]
    fn retraction_image_outside_h_errors() {
        let q2 = hypercube(2).unwrap();
        assert!(verify_retraction(&q2, &[0], &VertexMap::identity(4)).is_err());
    }

    #[test]
    fn domination_examples() {
        let star = complete_bipartite(1, 3).unwrap();
        assert!(is_dominating_set(&star, &[0]).unwrap().verdict);
        assert!(!is_dominating_set(&star, &[]).unwrap().verdict);
        let g3 = fibonacci_cube(3).unwrap();
        let rep = is_dominating_set(&g3, &[g3.vertex_named("000").unwrap()]).unwrap();
        assert_eq!(rep.witness.unwrap().indices, vec![g3.vertex_named("101").unwrap()]);
    }

    #[test]
    fn two_ball_examples() {
        let g3 = fibonacci_cube(3).unwrap();
        assert_eq!(two_ball_center(&g3).unwrap().center, g3.vertex_named("000"));
        let g4 = fibonacci_cube(4).unwrap();
        assert_eq!(two_ball_center(&g4).unwrap().center, g4.vertex_named("0000"));
        let rep = two_ball_center(&fibonacci_cube(5).unwrap()).unwrap();
        assert!(!rep.report.verdict);
        assert!(rep.center.is_none());
    }

    #[test]
    fn path_subcube_is_median_partial_cube() {
        let p = path_subcube(6).unwrap();
        assert!(verify_isometric_in_hypercube(&p).unwrap().verdict);
        assert!(is_median(&p).unwrap().verdict);
    }
}
