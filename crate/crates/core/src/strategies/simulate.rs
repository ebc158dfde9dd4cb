use std::fmt::{self, Write as _};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Arena, CopStrategy, RobberStrategy, Turn};
use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Robber caught in this round (0 means caught at placement).
    Captured(usize),
    /// Robber still free after this many rounds.
    Survived(usize),
}

impl Outcome {
    pub fn is_capture(&self) -> bool {
        matches!(self, Outcome::Captured(_))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Captured(r) => write!(f, "captured:{r}"),
            Outcome::Survived(r) => write!(f, "survived:{r}"),
        }
    }
}

/// One round. Round 0 is the placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundRecord {
    pub round: usize,
    pub cops_before: Vec<usize>,
    pub cops_after: Vec<usize>,
    pub robber_before: usize,
    pub robber_after: usize,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameTrace {
    pub cop_strategy: String,
    pub robber_strategy: String,
    pub rounds: Vec<RoundRecord>,
    pub outcome: Outcome,
}

impl GameTrace {
    /// Line-oriented log: one `round=… cops=… robber=… note=…` line per
    /// round, then `outcome=…`.
    pub fn to_log(&self, g: &LabeledGraph) -> String {
        let mut out = String::new();
        for r in &self.rounds {
            let cops: Vec<String> = r.cops_after.iter().map(|&c| g.label(c).to_string()).collect();
            let _ = writeln!(
                out,
                "round={} cops={} robber={} note={}",
                r.round,
                cops.join(","),
                g.label(r.robber_after),
                r.note
            );
        }
        let _ = writeln!(out, "outcome={}", self.outcome);
        out
    }
}

/// Block index the robber changed between two labels, for block-based cops.
pub fn changed_block(g: &LabeledGraph, from: usize, to: usize, block_width: usize) -> Option<usize> {
    let diff = g.label(from).bits() ^ g.label(to).bits();
    (diff != 0).then(|| diff.trailing_zeros() as usize / block_width)
}

fn check_cops(arena: &Arena<'_>, name: &str, before: &[usize], after: &[usize]) -> Result<()> {
    if after.len() != before.len() {
        return Err(Error::IllegalMove {
            strategy: name.to_string(),
            detail: format!("returned {} cops, expected {}", after.len(), before.len()),
        });
    }
    for (&a, &b) in before.iter().zip(after) {
        if b >= arena.graph.num_vertices() || (a != b && !arena.graph.has_edge(a, b)) {
            return Err(Error::IllegalMove {
                strategy: name.to_string(),
                detail: format!("cop cannot go from vertex {a} to {b}"),
            });
        }
    }
    Ok(())
}

fn check_robber(arena: &Arena<'_>, name: &str, from: usize, to: usize) -> Result<()> {
    if to >= arena.graph.num_vertices() || (from != to && !arena.graph.has_edge(from, to)) {
        return Err(Error::IllegalMove {
            strategy: name.to_string(),
            detail: format!("robber cannot go from vertex {from} to {to}"),
        });
    }
    Ok(())
}

/// Plays one game under the standard rules with a seeded generator.
pub fn simulate(
    g: &LabeledGraph,
    cops: &mut dyn CopStrategy,
    robber: &mut dyn RobberStrategy,
    max_rounds: usize,
    seed: u64,
) -> Result<GameTrace> {
    let arena = Arena::new(g);
    simulate_in(&arena, cops, robber, max_rounds, seed)
}

/// [`simulate`] on a prepared arena.
pub fn simulate_in(
    arena: &Arena<'_>,
    cops: &mut dyn CopStrategy,
    robber: &mut dyn RobberStrategy,
    max_rounds: usize,
    seed: u64,
) -> Result<GameTrace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (cop_name, robber_name) = (cops.name(), robber.name());
    let n = arena.graph.num_vertices();

    let mut cop_pos = cops.place(arena, &mut rng)?;
    if cop_pos.len() != cops.num_cops() || cop_pos.iter().any(|&c| c >= n) {
        return Err(Error::IllegalMove {
            strategy: cop_name,
            detail: "invalid placement".into(),
        });
    }
    let mut robber_pos = robber.place(arena, &cop_pos, &mut rng)?;
    if robber_pos >= n {
        return Err(Error::IllegalMove {
            strategy: robber_name,
            detail: "invalid placement".into(),
        });
    }
    let mut rounds = vec![RoundRecord {
        round: 0,
        cops_before: cop_pos.clone(),
        cops_after: cop_pos.clone(),
        robber_before: robber_pos,
        robber_after: robber_pos,
        note: "placement".into(),
    }];
    let finish = |rounds, outcome| GameTrace {
        cop_strategy: cop_name.clone(),
        robber_strategy: robber_name.clone(),
        rounds,
        outcome,
    };
    if cop_pos.contains(&robber_pos) {
        return Ok(finish(rounds, Outcome::Captured(0)));
    }

    let mut prev_robber = None;
    for round in 1..=max_rounds {
        let turn = Turn {
            round,
            cops: &cop_pos,
            robber: robber_pos,
            prev_robber,
        };
        let next = cops.step(arena, &turn, &mut rng)?;
        check_cops(arena, &cop_name, &cop_pos, &next)?;
        let cops_before = std::mem::replace(&mut cop_pos, next);
        let note = cops.note();
        if cop_pos.contains(&robber_pos) {
            rounds.push(RoundRecord {
                round,
                cops_before,
                cops_after: cop_pos.clone(),
                robber_before: robber_pos,
                robber_after: robber_pos,
                note,
            });
            return Ok(finish(rounds, Outcome::Captured(round)));
        }

        let turn = Turn {
            round,
            cops: &cop_pos,
            robber: robber_pos,
            prev_robber,
        };
        let moved = robber.step(arena, &turn, &mut rng)?;
        check_robber(arena, &robber_name, robber_pos, moved)?;
        rounds.push(RoundRecord {
            round,
            cops_before,
            cops_after: cop_pos.clone(),
            robber_before: robber_pos,
            robber_after: moved,
            note,
        });
        prev_robber = Some(robber_pos);
        robber_pos = moved;
        if cop_pos.contains(&robber_pos) {
            return Ok(finish(rounds, Outcome::Captured(round)));
        }
    }
    Ok(finish(rounds, Outcome::Survived(max_rounds)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{fibonacci_cube, path};
    use crate::strategies::{GreedyCops, RandomRobber};

    struct Teleport;

    impl CopStrategy for Teleport {
        fn name(&self) -> String {
            "teleport".into()
        }
        fn num_cops(&self) -> usize {
            1
        }
        fn place(&mut self, _: &Arena<'_>, _: &mut ChaCha8Rng) -> Result<Vec<usize>> {
            Ok(vec![0])
        }
        fn step(&mut self, arena: &Arena<'_>, _: &Turn<'_>, _: &mut ChaCha8Rng) -> Result<Vec<usize>> {
            Ok(vec![arena.graph.num_vertices() - 1])
        }
    }

    #[test]
    fn illegal_cop_move_is_fatal() {
        let g = path(5).unwrap();
        let err = simulate(&g, &mut Teleport, &mut RandomRobber, 10, 1).unwrap_err();
        match err {
            Error::IllegalMove { strategy, .. } => assert_eq!(strategy, "teleport"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn greedy_cop_catches_on_tree() {
        let g = path(6).unwrap();
        let t = simulate(&g, &mut GreedyCops::new(1), &mut RandomRobber, 100, 3).unwrap();
        assert!(t.outcome.is_capture());
        let log = t.to_log(&g);
        assert!(log.lines().last().unwrap().starts_with("outcome=captured:"));
        assert!(log.starts_with("round=0 cops="));
    }

    #[test]
    fn seeded_runs_repeat() {
        let g = fibonacci_cube(6).unwrap();
        let a = simulate(&g, &mut GreedyCops::new(1), &mut RandomRobber, 50, 9).unwrap();
        let b = simulate(&g, &mut GreedyCops::new(1), &mut RandomRobber, 50, 9).unwrap();
        assert_eq!(a, b);
    }
}
