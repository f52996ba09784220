// P(O ⊕ O(p)) over an elliptic curve and its subbundle P(O(p)).

use slopestab::bundles::{
    bundle_verdict, mu_sheaf, projbundle_a0a1, subbundle_slope_gap, tilde_m, BaseData, BundleScenario, SheafData,
    Subsheaf,
};
use slopestab::exact::int;

pub fn run_example() -> anyhow::Result<()> {
    let base = BaseData::curve(1, int(1));
    let e = SheafData::new(2, int(1));
    let f = SheafData::new(1, int(1));
    let m = int(2);
    println!("mu_E = {}, mu_F = {}", mu_sheaf(&base, &e), mu_sheaf(&base, &f));
    println!("m~ = {}", tilde_m(&base, &e, &m).0);
    let (a0, a1) = projbundle_a0a1(&base, &e, &m)?;
    println!("a0 = {a0}, a1 = {a1}");
    println!("slope gap = {}", subbundle_slope_gap(&base, &e, &f, &m)?);

    let report = bundle_verdict(&BundleScenario {
        base,
        e,
        m,
        subsheaves: vec![Subsheaf {
            sheaf: f,
            not_direct_summand: false,
        }],
    })?;
    for s in &report.subsheaves {
        println!("F1 = {}, {}", s.futaki, s.verdict);
    }
    println!("aggregate: {}", report.aggregate);
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
