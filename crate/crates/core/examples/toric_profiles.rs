// Slicing polygons: a₀ as area, a₁ as half the lattice perimeter, checked
// against lattice-point counts and Donaldson's boundary weights.

use slopestab::engine::{futaki, normal_cone_weights, verdict};
use slopestab::exact::{rat, Rational};
use slopestab::toric::{
    donaldson_normal_cone, donaldson_weights, lattice_count_level, slice, toric_profile_auto, FaceSpec, Halfspace,
    Polytope, ToricSubscheme,
};

pub fn run_example() -> anyhow::Result<()> {
    let p2 = Polytope::from_halfspaces(
        2,
        vec![
            Halfspace::new(vec![1, 0], rat(0, 1)),
            Halfspace::new(vec![0, 1], rat(0, 1)),
            Halfspace::new(vec![-1, -1], rat(-1, 1)),
        ],
    )?;
    let point = ToricSubscheme::new(vec![
        FaceSpec {
            facet: 0,
            multiplicity: 1,
        },
        FaceSpec {
            facet: 1,
            multiplicity: 1,
        },
    ]);
    let prof = toric_profile_auto(&p2, &point)?;
    println!("a0(x) = {}", prof.a0().render("x"));
    println!("a1(x) = {}", prof.a1().render("x"));
    println!(
        "P_(1/2) = {:?}",
        slice(&p2, &point, &rat(1, 2))?
            .iter()
            .map(|[x, y]| format!("({x}, {y})"))
            .collect::<Vec<_>>()
    );
    for k in [4u32, 8, 12] {
        println!(
            "  k = {k}: {} lattice points in kP_(1/4)",
            lattice_count_level(&p2, &point, k, &rat(1, 4))?
        );
    }

    let c = rat(1, 1);
    let (a0, a1) = (prof.a0_at_zero(), prof.a1_at_zero());
    let engine: Rational = futaki(&a0, &a1, &normal_cone_weights(&prof, &c)?)?;
    let raw = donaldson_weights(&p2, &point, &c)?;
    let don = futaki(&a0, &a1, &donaldson_normal_cone(&raw, &c, &a0, &a1))?;
    println!("F1(1): engine {engine}, Donaldson {don}");
    println!("verdict: {}", verdict(&prof));
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
