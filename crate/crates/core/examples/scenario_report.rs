// Parsing a scenario file, printing its report and a CSV table.

use slopestab::exact::rat;
use slopestab::report::{profile_csv, render};
use slopestab::scenario::{analyse, shipped, Scenario};

pub fn run_example() -> anyhow::Result<()> {
    let text = shipped("p2_point_toric.scenario").expect("shipped");
    let scn = Scenario::parse(text)?;
    let analysis = analyse(&scn)?;
    print!("{}", render(&analysis));
    let grid = [rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)];
    print!("{}", profile_csv(&scn, Some(&grid))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
