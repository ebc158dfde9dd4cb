//! The distance-2 evasion robber against too few cops.
use cubecops::graphs::{fibonacci_cube, hypercube, LabeledGraph};
use cubecops::solver::SolverConfig;
use cubecops::strategies::{simulate, CopStrategy, EvasionRobber, GreedyCops, RandomCops, SolverCops};

fn play(name: &str, g: &LabeledGraph, cops: &mut dyn CopStrategy) -> cubecops::Result<()> {
    let k = cops.num_cops();
    let mut robber = EvasionRobber::new(g, k)?;
    let t = simulate(g, cops, &mut robber, 1000, 7)?;
    println!("{name:<5} k={k} vs {:<7} -> {}", t.cop_strategy, t.outcome);
    Ok(())
}

fn main() -> cubecops::Result<()> {
    let cases = [("Q_5", hypercube(5)?), ("Γ_9", fibonacci_cube(9)?)];
    for (name, g) in &cases {
        let k = g.min_degree()?.div_ceil(2) - 1;
        play(name, g, &mut GreedyCops::new(k))?;
        play(name, g, &mut RandomCops::new(k))?;
        play(name, g, &mut SolverCops::new(g, k, &SolverConfig::default())?)?;
    }
    Ok(())
}
