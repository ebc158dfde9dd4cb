//! Playable strategies and the round-based simulation harness.
//!
//! A game is driven by [`simulate`]: cops place, the robber places, then each
//! round the cops move followed by the robber. Strategies only ever see
//! positions, never each other's internal state.

mod baseline;
mod blocks;
mod evasion;
mod optimal;
mod simulate;

pub use baseline::{GreedyCops, GreedyEvader, RandomCops, RandomRobber};
pub use blocks::{
    block_cop_strategy_step, BlockCopStrategy, BlockPartition, CopAction, CopStrategyState, Phase,
};
pub use evasion::{robber_place, robber_step, EvasionRobber};
pub use optimal::{SolverCops, SolverRobber};
pub use simulate::{changed_block, simulate, GameTrace, Outcome, RoundRecord};

use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graphs::{DistanceMatrix, LabeledGraph};

/// The board shared by both players: graph plus precomputed distances.
pub struct Arena<'g> {
    pub graph: &'g LabeledGraph,
    pub dist: DistanceMatrix,
}

impl<'g> Arena<'g> {
    pub fn new(graph: &'g LabeledGraph) -> Self {
        Arena {
            graph,
            dist: DistanceMatrix::new(graph),
        }
    }
}

/// What a player sees when it is asked to move.
#[derive(Clone, Copy, Debug)]
pub struct Turn<'a> {
    pub round: usize,
    /// Current cop positions (after the cop move when the robber is asked).
    pub cops: &'a [usize],
    pub robber: usize,
    /// Robber position one robber-move earlier, if any.
    pub prev_robber: Option<usize>,
}

pub trait CopStrategy {
    fn name(&self) -> String;

    fn num_cops(&self) -> usize;

    fn place(&mut self, arena: &Arena<'_>, rng: &mut ChaCha8Rng) -> Result<Vec<usize>>;

    /// New positions for every cop, in the same order as `turn.cops`.
    fn step(&mut self, arena: &Arena<'_>, turn: &Turn<'_>, rng: &mut ChaCha8Rng) -> Result<Vec<usize>>;

    /// Annotation for the trace line of the round just played.
    fn note(&self) -> String {
        String::from("-")
    }
}

pub trait RobberStrategy {
    fn name(&self) -> String;

    fn place(&mut self, arena: &Arena<'_>, cops: &[usize], rng: &mut ChaCha8Rng) -> Result<usize>;

    fn step(&mut self, arena: &Arena<'_>, turn: &Turn<'_>, rng: &mut ChaCha8Rng) -> Result<usize>;
}
