//! Exact cop numbers of small Fibonacci and Lucas cubes.
use std::time::Instant;

use cubecops::graphs::{fibonacci_cube, lucas_cube};
use cubecops::solver::cop_number_exact;

fn main() -> cubecops::Result<()> {
    for n in 0..=7 {
        let t = Instant::now();
        let c = cop_number_exact(&fibonacci_cube(n)?, 3)?;
        println!("c(Γ_{n}) = {c}  ({:.2?})", t.elapsed());
    }
    for n in 1..=8 {
        let t = Instant::now();
        let c = cop_number_exact(&lucas_cube(n)?, 3)?;
        println!("c(Λ_{n}) = {c}  ({:.2?})", t.elapsed());
    }
    Ok(())
}
