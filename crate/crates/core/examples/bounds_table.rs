//! Lower and upper bounds for Γ_n, with exact values where cheap.
use cubecops::bounds::{bounds_report, Family, Subject};

fn main() -> cubecops::Result<()> {
    for n in 1..=16 {
        let exact = n <= 7;
        let rep = bounds_report(Subject::Family(Family::Fibonacci, n), exact, 3)?;
        println!("Γ_{n:<3} {rep}");
    }
    for n in [8, 9, 12, 16] {
        let rep = bounds_report(Subject::Family(Family::Lucas, n), n == 8, 3)?;
        println!("Λ_{n:<3} {rep}");
    }
    Ok(())
}
