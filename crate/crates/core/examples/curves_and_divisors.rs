// Smooth curves, a line in P³ and the P³ blow-up as a divisor.

use slopestab::engine::{mu_quotient, verdict, Saturation, Seshadri};
use slopestab::exact::{int, rat};
use slopestab::geom::{
    curve_in_nfold_quotient_slope, divisor_quotient_slope, smooth_curve_verdict, CurveInNfoldData, DivisorData,
};

pub fn run_example() -> anyhow::Result<()> {
    for g in 0..=2 {
        for d in 1..=2 {
            println!(
                "genus {g}, deg L = 2, d = {d}: {}",
                smooth_curve_verdict(g, &int(2), d)?
            );
        }
    }

    let line = CurveInNfoldData {
        n: 3,
        genus: 0,
        lz: int(1),
        c1nu: int(2),
    };
    let p = line.profile(&rat(1, 6), &int(1), Seshadri::Exact(int(1)), Saturation::Yes)?;
    let c = rat(1, 2);
    println!(
        "line in P3: mu_c(O_Z) = {} (closed form {}), {}",
        mu_quotient(&p, &c)?,
        curve_in_nfold_quotient_slope(&line, &c)?,
        verdict(&p)
    );

    // P³ blown up at a point, L = H − E/3, Z = E
    let q = rat(1, 3);
    let e = DivisorData {
        n: 3,
        lnj_zj: vec![int(1) - &q * &q * &q, &q * &q, -&q, int(1)],
        lzk: vec![int(-4) + int(3) * &q * &q, int(-3) * &q, int(3)],
    };
    let p = e.profile(Seshadri::Exact(int(1) - &q), Saturation::Yes)?;
    println!(
        "Bl P3: mu_(1/2)(O_E) = {} (closed form {}), {}",
        mu_quotient(&p, &c)?,
        divisor_quotient_slope(&e, &c)?,
        verdict(&p)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
