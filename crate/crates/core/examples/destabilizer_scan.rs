// Ranking torus-invariant subschemes of the blown-up plane.

use slopestab::exact::rat;
use slopestab::toric::{destabilizer_scan, Halfspace, Polytope};

pub fn run_example() -> anyhow::Result<()> {
    let blp2 = Polytope::from_halfspaces(
        2,
        vec![
            Halfspace::new(vec![1, 0], rat(0, 1)),
            Halfspace::new(vec![0, 1], rat(0, 1)),
            Halfspace::new(vec![-1, -1], rat(-1, 1)),
            Halfspace::new(vec![1, 1], rat(1, 2)),
        ],
    )?;
    for h in destabilizer_scan(&blp2, 2, 8)?.iter().take(5) {
        println!(
            "{:<14} eps = {:<4} F1 = {} at c = {}",
            h.subscheme.to_string(),
            h.seshadri.to_string(),
            h.futaki,
            h.c
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
