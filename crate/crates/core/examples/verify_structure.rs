//! Structural checks on the families and on the K_{2,3} negative control.
use cubecops::graphs::{complete_bipartite, fibonacci_cube, hypercube, lucas_cube, LabeledGraph};
use cubecops::verify::{check_lemma31, is_median, two_ball_center, verify_isometric_in_hypercube};

fn report(name: &str, g: &LabeledGraph) -> cubecops::Result<()> {
    println!(
        "{name:<6} partial-cube: {} | median: {} | lemma31: {} | two-ball: {}",
        verify_isometric_in_hypercube(g)?,
        is_median(g)?,
        check_lemma31(g)?,
        two_ball_center(g)?,
    );
    Ok(())
}

fn main() -> cubecops::Result<()> {
    for n in 3..=6 {
        report(&format!("Γ_{n}"), &fibonacci_cube(n)?)?;
    }
    report("Λ_5", &lucas_cube(5)?)?;
    report("Q_3", &hypercube(3)?)?;
    // K_{2,3} has placeholder labels, so only the common-neighbor count applies.
    println!("K_2,3  lemma31: {}", check_lemma31(&complete_bipartite(2, 3)?)?);
    Ok(())
}
