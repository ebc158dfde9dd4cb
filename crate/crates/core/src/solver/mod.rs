//! Exact "do `k` cops win on `G`" by backward induction over game positions.
//!
//! Positions are `(cop multiset, robber vertex, side to move)`. Cop multisets
//! are stored canonically (sorted); robber positions are packed into
//! bitsets so one word operation advances up to 64 positions at once.
//!
//! Round structure: cops place, the robber places seeing them, then every
//! round all cops move (each to its closed neighborhood) followed by the
//! robber. Capture is checked after each side moves; a robber placed on a cop
//! is caught immediately.

mod table;

pub use table::{SolveTable, STEPS_NONE};

use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;

/// Default ceiling on solver memory: 2 GiB.
pub const DEFAULT_MEMORY_CAP: u64 = 2 << 30;

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    pub memory_cap_bytes: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            memory_cap_bytes: DEFAULT_MEMORY_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Cops,
    Robber,
}

impl Side {
    pub fn as_str(&self) -> &'static str {
        match self {
            Side::Cops => "C",
            Side::Robber => "R",
        }
    }
}

/// A game position with the cop multiset in canonical (sorted) form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GamePosition {
    pub cops: Vec<usize>,
    pub robber: usize,
    pub to_move: Side,
}

impl GamePosition {
    pub fn new(mut cops: Vec<usize>, robber: usize, to_move: Side) -> Self {
        cops.sort_unstable();
        GamePosition { cops, robber, to_move }
    }

    pub fn is_capture(&self) -> bool {
        self.cops.contains(&self.robber)
    }
}

impl fmt::Display for GamePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cops.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "/{}/{}", self.robber, self.to_move.as_str())
    }
}

/// Outcome of [`cop_number_exact`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CopNumber {
    Exact(usize),
    /// No `k ≤ k_max` wins.
    Exceeds(usize),
}

impl fmt::Display for CopNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CopNumber::Exact(c) => write!(f, "{c}"),
            CopNumber::Exceeds(k) => write!(f, "exceeds {k}"),
        }
    }
}

/// Solves the `k`-cop game on `g` with the default memory cap.
pub fn cop_win_k(g: &LabeledGraph, k: usize) -> Result<(bool, SolveTable)> {
    cop_win_k_with(g, k, &SolverConfig::default())
}

pub fn cop_win_k_with(g: &LabeledGraph, k: usize, config: &SolverConfig) -> Result<(bool, SolveTable)> {
    if k == 0 {
        return Err(Error::Precondition("at least one cop is required".into()));
    }
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let table = SolveTable::solve(g, k, config)?;
    Ok((table.cops_win(), table))
}

/// Smallest `k ≤ k_max` for which `k` cops win.
pub fn cop_number_exact(g: &LabeledGraph, k_max: usize) -> Result<CopNumber> {
    cop_number_exact_with(g, k_max, &SolverConfig::default())
}

pub fn cop_number_exact_with(g: &LabeledGraph, k_max: usize, config: &SolverConfig) -> Result<CopNumber> {
    for k in 1..=k_max {
        if cop_win_k_with(g, k, config)?.0 {
            return Ok(CopNumber::Exact(k));
        }
    }
    Ok(CopNumber::Exceeds(k_max))
}

/// Joint cop move that strictly shortens the capture count.
pub fn optimal_cop_move(table: &SolveTable, pos: &GamePosition) -> Result<Vec<usize>> {
    table.optimal_cop_move(pos)
}

/// Robber reply that escapes if possible, otherwise survives longest.
pub fn optimal_robber_move(table: &SolveTable, pos: &GamePosition) -> Result<usize> {
    table.optimal_robber_move(pos)
}
