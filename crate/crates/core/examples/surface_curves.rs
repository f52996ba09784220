// The blown-up plane with L = H − qE, destabilised by E for every q.

use slopestab::engine::{mu_quotient, verdict, Saturation, Seshadri};
use slopestab::exact::{int, rat};
use slopestab::geom::{surface_curve, SurfaceCurveData};

pub fn run_example() -> anyhow::Result<()> {
    for q in [rat(1, 10), rat(1, 3), rat(1, 2), rat(3, 4), rat(9, 10)] {
        let data = SurfaceCurveData {
            kl: &q - int(3),
            l2: int(1) - &q * &q,
            lz: q.clone(),
            kz: int(-1),
            z2: int(-1),
            genus: Some(0),
        };
        let eps = int(1) - &q;
        let (mu_x, mu_q) = surface_curve(&data, &eps)?;
        let p = data.profile(Seshadri::Exact(eps.clone()), Saturation::Yes)?;
        assert_eq!(mu_q, mu_quotient(&p, &eps)?);
        println!("q = {q}: mu(X) = {mu_x}, mu_eps(O_E) = {mu_q}, {}", verdict(&p));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
