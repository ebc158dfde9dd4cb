//! Every partial cube inside Q_4, up to symmetry, against ⌈(d+1)/2⌉.
use cubecops::cli::probe_conjecture;

fn main() -> cubecops::Result<()> {
    let rep = probe_conjecture(4, 3)?;
    let mut by_dim = [0usize; 5];
    for r in &rep.rows {
        by_dim[r.dim] += 1;
    }
    println!("classes by isometric dimension: {by_dim:?}");
    let tight = rep.rows.iter().filter(|r| r.cop_number == r.bound).count();
    println!("bound attained by {tight} of {} classes", rep.rows.len());
    println!("violations: {}", rep.violations().count());
    Ok(())
}
