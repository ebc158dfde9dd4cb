//! Block-matching cops on Fibonacci cubes against the greedy evader.
//! Pass `trace` to print the first rounds of the Γ_9 game.
use cubecops::graphs::fibonacci_cube;
use cubecops::strategies::{simulate, BlockCopStrategy, GreedyEvader, RandomRobber};

fn main() -> cubecops::Result<()> {
    let show = std::env::args().any(|a| a == "trace");
    for (w, range) in [(3, 7..=10), (4, 9..=12)] {
        for n in range {
            let g = fibonacci_cube(n)?;
            let cut = 50 * g.num_vertices();
            let mut cops = BlockCopStrategy::new(&g, w)?;
            let t = simulate(&g, &mut cops, &mut GreedyEvader, cut, 0)?;
            let mut cops = BlockCopStrategy::new(&g, w)?;
            let r = simulate(&g, &mut cops, &mut RandomRobber, cut, 1)?;
            println!(
                "blocks{w} on Γ_{n:<2} k={}: greedy evader {}, random robber {}",
                n.div_ceil(w),
                t.outcome,
                r.outcome
            );
            if show && n == 9 && w == 3 {
                t.to_log(&g).lines().take(12).for_each(|l| println!("    {l}"));
            }
        }
    }
    Ok(())
}
