// Exact polynomials, Sturm sign analysis and piecewise integration.

use slopestab::engine::EqualityPoint;
use slopestab::exact::{isolate_roots, rat, sign_regions, PiecewisePolynomial, Polynomial};

pub fn run_example() -> anyhow::Result<()> {
    // N(c) = c(-3/32 + c/8 + 5c^2/24), the margin of the blown-up plane
    let n = Polynomial::from_ratios(&[(0, 1), (-3, 32), (1, 8), (5, 24)]);
    println!("N(c) = {}", n.render("c"));
    for r in sign_regions(&n, &rat(0, 1), &rat(1, 2), true) {
        println!("  sign {:+} on ({}, {})", r.sign, r.lo, r.hi);
    }
    for root in isolate_roots(&n, &rat(0, 1), &rat(1, 2)) {
        println!("  root at {}", EqualityPoint::from(root.location));
    }

    // a hat function, integrated across its kink
    let hat = PiecewisePolynomial::new(
        vec![rat(0, 1), rat(1, 2), rat(1, 1)],
        vec![Polynomial::x(), &Polynomial::constant(rat(1, 1)) - &Polynomial::x()],
    )?;
    println!("continuous: {}", hat.is_continuous());
    println!("integral over [0, 1] = {}", hat.integral(&rat(0, 1), &rat(1, 1))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
