use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use super::{Arena, CopStrategy, RobberStrategy, Turn};
use crate::error::{Error, Result};

/// One step of a shortest path from `from` toward `to`, lowest index first.
pub(crate) fn toward(arena: &Arena<'_>, from: usize, to: usize) -> usize {
    let d = arena.dist.get(from, to);
    if d == 0 {
        return from;
    }
    arena
        .graph
        .neighbors(from)
        .iter()
        .copied()
        .find(|&w| arena.dist.get(w, to) < d)
        .unwrap_or(from)
}

/// Cops start on a most central vertex and walk shortest paths at the robber.
#[derive(Clone, Debug)]
pub struct GreedyCops {
    k: usize,
}

impl GreedyCops {
    pub fn new(k: usize) -> Self {
        GreedyCops { k }
    }
}

impl CopStrategy for GreedyCops {
    fn name(&self) -> String {
        "greedy".into()
    }

    fn num_cops(&self) -> usize {
        self.k
    }

    fn place(&mut self, arena: &Arena<'_>, _rng: &mut ChaCha8Rng) -> Result<Vec<usize>> {
        let n = arena.graph.num_vertices();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let center = (0..n).min_by_key(|&v| (arena.dist.eccentricity(v), v)).unwrap_or(0);
        Ok(vec![center; self.k])
    }

    fn step(&mut self, arena: &Arena<'_>, turn: &Turn<'_>, _rng: &mut ChaCha8Rng) -> Result<Vec<usize>> {
        Ok(turn.cops.iter().map(|&c| toward(arena, c, turn.robber)).collect())
    }
}

/// Cops that wander uniformly over their closed neighborhoods.
#[derive(Clone, Debug)]
pub struct RandomCops {
    k: usize,
}

impl RandomCops {
    pub fn new(k: usize) -> Self {
        RandomCops { k }
    }
}

impl CopStrategy for RandomCops {
    fn name(&self) -> String {
        "random".into()
    }

    fn num_cops(&self) -> usize {
        self.k
    }

    fn place(&mut self, arena: &Arena<'_>, rng: &mut ChaCha8Rng) -> Result<Vec<usize>> {
        let all: Vec<usize> = (0..arena.graph.num_vertices()).collect();
        (0..self.k)
            .map(|_| all.choose(rng).copied().ok_or(Error::EmptyGraph))
            .collect()
    }

    fn step(&mut self, arena: &Arena<'_>, turn: &Turn<'_>, rng: &mut ChaCha8Rng) -> Result<Vec<usize>> {
        Ok(turn
            .cops
            .iter()
            .map(|&c| {
                let nb = arena.graph.closed_neighborhood(c);
                *nb.choose(rng).expect("closed neighborhood is never empty")
            })
            .collect())
    }
}

/// Robber that wanders uniformly over its closed neighborhood.
#[derive(Clone, Copy, Debug, Default)]
pub struct RandomRobber;

impl RobberStrategy for RandomRobber {
    fn name(&self) -> String {
        "random".into()
    }

    fn place(&mut self, arena: &Arena<'_>, _cops: &[usize], rng: &mut ChaCha8Rng) -> Result<usize> {
        let all: Vec<usize> = (0..arena.graph.num_vertices()).collect();
        all.choose(rng).copied().ok_or(Error::EmptyGraph)
    }

    fn step(&mut self, arena: &Arena<'_>, turn: &Turn<'_>, rng: &mut ChaCha8Rng) -> Result<usize> {
        let nb = arena.graph.closed_neighborhood(turn.robber);
        Ok(*nb.choose(rng).expect("closed neighborhood is never empty"))
    }
}

/// Robber maximizing its distance to the nearest cop, ties to the
/// lexicographically smallest label.
#[derive(Clone, Copy, Debug, Default)]
pub struct GreedyEvader;

impl GreedyEvader {
    fn best(arena: &Arena<'_>, candidates: impl Iterator<Item = usize>, cops: &[usize]) -> Option<usize> {
        let g = arena.graph;
        candidates.max_by(|&a, &b| {
            let (da, db) = (arena.dist.to_set(a, cops), arena.dist.to_set(b, cops));
            da.cmp(&db).then_with(|| g.label(b).cmp(&g.label(a)))
        })
    }
}

impl RobberStrategy for GreedyEvader {
    fn name(&self) -> String {
        "greedy-evader".into()
    }

    fn place(&mut self, arena: &Arena<'_>, cops: &[usize], _rng: &mut ChaCha8Rng) -> Result<usize> {
        Self::best(arena, 0..arena.graph.num_vertices(), cops).ok_or(Error::EmptyGraph)
    }

    fn step(&mut self, arena: &Arena<'_>, turn: &Turn<'_>, _rng: &mut ChaCha8Rng) -> Result<usize> {
        let nb = arena.graph.closed_neighborhood(turn.robber);
        Ok(Self::best(arena, nb.into_iter(), turn.cops).unwrap_or(turn.robber))
    }
}
