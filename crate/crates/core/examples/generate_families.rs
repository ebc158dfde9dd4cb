//! Vertex and edge counts of the three cube families, plus one file dump.
use cubecops::graphs::{fibonacci_cube, hypercube, lucas_cube, to_text};

fn main() -> cubecops::Result<()> {
    println!("{:>3} {:>12} {:>12} {:>12}", "n", "Q_n", "Γ_n", "Λ_n");
    for n in 1..=10 {
        let (q, f, l) = (hypercube(n)?, fibonacci_cube(n)?, lucas_cube(n)?);
        println!(
            "{n:>3} {:>12} {:>12} {:>12}",
            format!("{}/{}", q.num_vertices(), q.num_edges()),
            format!("{}/{}", f.num_vertices(), f.num_edges()),
            format!("{}/{}", l.num_vertices(), l.num_edges()),
        );
    }
    print!("\n{}", to_text(&fibonacci_cube(3)?));
    Ok(())
}
