// A point in the projective plane, straight from a₀ and a₁.

use slopestab::engine::{
    alphas_from_profile, futaki, margin_polynomial, mu_ideal, mu_quotient, normal_cone_weights, slope_of_variety,
    verdict, weight_sum_oracle, Saturation, Seshadri, SlopeProfile,
};
use slopestab::exact::{rat, Polynomial};

pub fn run_example() -> anyhow::Result<()> {
    let p = SlopeProfile::new(
        2,
        Polynomial::from_ratios(&[(1, 2), (0, 1), (-1, 2)]),
        Polynomial::from_ratios(&[(3, 2), (-1, 2)]),
        Seshadri::Exact(rat(1, 1)),
        Saturation::Yes,
    )?;
    let (a0, a1) = (p.a0_at_zero(), p.a1_at_zero());
    println!("mu(X) = {}", slope_of_variety(&a0, &a1)?);
    println!("N(c) = {}", margin_polynomial(&p).render("c"));
    for c in [rat(1, 3), rat(1, 2), rat(1, 1)] {
        let w = normal_cone_weights(&p, &c)?;
        println!(
            "c = {c}: mu_c(I_Z) = {}, mu_c(O_Z) = {}, F1 = {}",
            mu_ideal(&p, &c)?,
            mu_quotient(&p, &c)?,
            futaki(&a0, &a1, &w)?
        );
    }

    // the same weights by summing over the graded pieces
    let (al1, al2) = alphas_from_profile(&p)?;
    let w = weight_sum_oracle(2, &al1, &al2, &rat(1, 1), &[1, 2, 3, 4, 5, 6])?;
    println!("oracle at c = 1: b0 = {}, b1 = {}", w.b0, w.b1);
    println!("verdict: {}", verdict(&p));
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
