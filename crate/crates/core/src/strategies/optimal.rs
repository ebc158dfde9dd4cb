//! Players that read their moves off a solved game table.

use rand_chacha::ChaCha8Rng;

use super::baseline::toward;
use super::{Arena, CopStrategy, RobberStrategy, Turn};
use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::solver::{cop_win_k_with, GamePosition, Side, SolveTable, SolverConfig};

/// Cops playing the table's capture-shortening move. From positions the
/// table does not win they fall back to walking shortest paths.
#[derive(Clone, Debug)]
pub struct SolverCops {
    table: SolveTable,
    last: &'static str,
}

impl SolverCops {
    pub fn new(g: &LabeledGraph, k: usize, config: &SolverConfig) -> Result<Self> {
        let (_, table) = cop_win_k_with(g, k, config)?;
        Ok(Self::from_table(table))
    }

    pub fn from_table(table: SolveTable) -> Self {
        SolverCops { table, last: "-" }
    }

    pub fn table(&self) -> &SolveTable {
        &self.table
    }
}

impl CopStrategy for SolverCops {
    fn name(&self) -> String {
        "solver".into()
    }

    fn num_cops(&self) -> usize {
        self.table.num_cops()
    }

    fn place(&mut self, arena: &Arena<'_>, _rng: &mut ChaCha8Rng) -> Result<Vec<usize>> {
        if let Some(p) = self.table.winning_placement() {
            return Ok(p);
        }
        let n = arena.graph.num_vertices();
        let center = (0..n).min_by_key(|&v| (arena.dist.eccentricity(v), v)).ok_or(Error::EmptyGraph)?;
        Ok(vec![center; self.num_cops()])
    }

    fn step(&mut self, arena: &Arena<'_>, turn: &Turn<'_>, _rng: &mut ChaCha8Rng) -> Result<Vec<usize>> {
        let pos = GamePosition::new(turn.cops.to_vec(), turn.robber, Side::Cops);
        match self.table.optimal_cop_move(&pos) {
            Ok(sorted_targets) => {
                // Targets follow the sorted cop order; hand them back in ours.
                let mut order: Vec<usize> = (0..turn.cops.len()).collect();
                order.sort_by_key(|&i| turn.cops[i]);
                let mut out = vec![0; turn.cops.len()];
                for (slot, &i) in order.iter().enumerate() {
                    out[i] = sorted_targets[slot];
                }
                self.last = "table";
                Ok(out)
            }
            Err(Error::NotWinning) => {
                self.last = "greedy-fallback";
                Ok(turn.cops.iter().map(|&c| toward(arena, c, turn.robber)).collect())
            }
            Err(e) => Err(e),
        }
    }

    fn note(&self) -> String {
        self.last.to_string()
    }
}

/// Robber that escapes whenever the table says it can, and otherwise
/// delays capture as long as possible.
#[derive(Clone, Debug)]
pub struct SolverRobber {
    table: SolveTable,
}

impl SolverRobber {
    pub fn new(g: &LabeledGraph, k: usize, config: &SolverConfig) -> Result<Self> {
        let (_, table) = cop_win_k_with(g, k, config)?;
        Ok(SolverRobber { table })
    }

    pub fn from_table(table: SolveTable) -> Self {
        SolverRobber { table }
    }

    pub fn table(&self) -> &SolveTable {
        &self.table
    }
}

impl RobberStrategy for SolverRobber {
    fn name(&self) -> String {
        "solver".into()
    }

    fn place(&mut self, _arena: &Arena<'_>, cops: &[usize], _rng: &mut ChaCha8Rng) -> Result<usize> {
        self.table.best_robber_placement(cops)
    }

    fn step(&mut self, _arena: &Arena<'_>, turn: &Turn<'_>, _rng: &mut ChaCha8Rng) -> Result<usize> {
        let pos = GamePosition::new(turn.cops.to_vec(), turn.robber, Side::Robber);
        self.table.optimal_robber_move(&pos)
    }
}
