//! Robber that survives forever against fewer than `⌈δ/2⌉` cops on a partial
//! cube: it always sits at distance at least 2 from every cop.
//!
//! In a partial cube the graph distance is the Hamming distance of the labels,
//! so the free functions work on labels directly. They check the cop budget
//! but trust the caller that `g` is a partial cube; [`EvasionRobber::new`]
//! verifies that once up front.

use rand_chacha::ChaCha8Rng;

use super::{Arena, RobberStrategy, Turn};
use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::verify;

fn check_budget(g: &LabeledGraph, k: usize) -> Result<()> {
    g.require_genuine_labels()?;
    let delta = g.min_degree()?;
    let allowed = delta.div_ceil(2).saturating_sub(1);
    if k == 0 || k > allowed {
        return Err(Error::Precondition(format!(
            "evasion needs 1 <= k <= ceil(delta/2) - 1 = {allowed} (delta = {delta}, k = {k})"
        )));
    }
    Ok(())
}

fn safe(g: &LabeledGraph, v: usize, cops: &[usize]) -> bool {
    let l = g.label(v);
    cops.iter().all(|&c| g.label(c).hamming(&l) >= 2)
}

fn smallest_safe(g: &LabeledGraph, candidates: impl Iterator<Item = usize>, cops: &[usize]) -> Option<usize> {
    candidates.filter(|&v| safe(g, v, cops)).min_by_key(|&v| g.label(v))
}

/// Lexicographically smallest vertex at distance at least 2 from all cops.
pub fn robber_place(g: &LabeledGraph, cops: &[usize]) -> Result<usize> {
    check_budget(g, cops.len())?;
    smallest_safe(g, 0..g.num_vertices(), cops)
        .ok_or_else(|| Error::Precondition("no vertex is at distance >= 2 from every cop".into()))
}

/// Lexicographically smallest vertex of `N[robber]` at distance at least 2
/// from all cops (their positions after the cop move).
pub fn robber_step(g: &LabeledGraph, cops: &[usize], robber: usize) -> Result<usize> {
    check_budget(g, cops.len())?;
    if robber >= g.num_vertices() {
        return Err(Error::InvalidVertex(robber));
    }
    smallest_safe(g, g.closed_neighborhood(robber).into_iter(), cops).ok_or_else(|| {
        Error::Precondition("no neighbor of the robber is at distance >= 2 from every cop".into())
    })
}

/// [`RobberStrategy`] wrapper around [`robber_place`] / [`robber_step`].
#[derive(Clone, Debug)]
pub struct EvasionRobber {
    k: usize,
}

impl EvasionRobber {
    /// Checks that `g` is a partial cube and `k ≤ ⌈δ/2⌉ - 1`.
    pub fn new(g: &LabeledGraph, k: usize) -> Result<Self> {
        check_budget(g, k)?;
        let rep = verify::verify_isometric_in_hypercube(g)?;
        if !rep.verdict {
            return Err(Error::Incompatible {
                strategy: "thm31-evasion".into(),
                reason: "graph is not a partial cube under its labeling".into(),
            });
        }
        Ok(EvasionRobber { k })
    }
}

impl RobberStrategy for EvasionRobber {
    fn name(&self) -> String {
        "thm31-evasion".into()
    }

    fn place(&mut self, arena: &Arena<'_>, cops: &[usize], _rng: &mut ChaCha8Rng) -> Result<usize> {
        debug_assert_eq!(cops.len(), self.k);
        robber_place(arena.graph, cops)
    }

    fn step(&mut self, arena: &Arena<'_>, turn: &Turn<'_>, _rng: &mut ChaCha8Rng) -> Result<usize> {
        robber_step(arena.graph, turn.cops, turn.robber)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{fibonacci_cube, hypercube, path_subcube};

    #[test]
    fn hypercube_examples() {
        let q3 = hypercube(3).unwrap();
        let c = q3.vertex_named("000").unwrap();
        assert_eq!(q3.label(robber_place(&q3, &[c]).unwrap()).to_string(), "011");
        let r = q3.vertex_named("011").unwrap();
        assert_eq!(robber_step(&q3, &[c], r).unwrap(), r);

        let q5 = hypercube(5).unwrap();
        let cops = [q5.vertex_named("00000").unwrap(), q5.vertex_named("11111").unwrap()];
        assert_eq!(q5.label(robber_place(&q5, &cops).unwrap()).to_string(), "00011");
    }

    #[test]
    fn budget_enforced() {
        let q3 = hypercube(3).unwrap();
        assert!(robber_place(&q3, &[0, 1]).is_err());
        // δ(Γ_6) = 2 leaves no budget; δ(Γ_9) = 3 allows one cop.
        assert!(EvasionRobber::new(&fibonacci_cube(6).unwrap(), 1).is_err());
        assert!(EvasionRobber::new(&fibonacci_cube(9).unwrap(), 1).is_ok());
        assert!(EvasionRobber::new(&path_subcube(4).unwrap(), 1).is_err());
        assert!(EvasionRobber::new(&q3, 1).is_ok());
    }
}
