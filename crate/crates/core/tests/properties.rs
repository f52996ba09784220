use num_traits::{Signed, Zero};
use proptest::prelude::*;

use slopestab::engine::{
    alphas_from_profile, futaki, mu_ideal, mu_quotient, normal_cone_weights, slope_of_variety, thicken, twist, verdict,
    weight_sum_oracle, Saturation, Seshadri, SlopeProfile, Verdict,
};
use slopestab::exact::{rat, sign_on_interval, PiecewisePolynomial, Polynomial, Rational, SignSummary};
use slopestab::geom::{curve_in_nfold_quotient_slope, divisor_quotient_slope, surface_curve, SurfaceCurveData};
use slopestab::toric::{
    donaldson_normal_cone, donaldson_weights, lattice_count_level, lattice_length, toric_profile, Point, Polytope,
    ToricSubscheme,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 1..=max_deg + 1).prop_map(Polynomial::new)
}

/// A profile with ε = 1: a₀ = A − ∫₀ˣα with α > 0 on [0, 1] and A > ∫₀¹α,
/// so a₀ is positive and strictly decreasing there; a₁ arbitrary.
fn profile() -> impl Strategy<Value = SlopeProfile> {
    (1usize..=4)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(positive(), n),
                positive(),
                prop::collection::vec(rational(), n),
                prop::bool::ANY,
            )
        })
        .prop_map(|(n, alpha, slack, a1, sat)| {
            let alpha = Polynomial::new(alpha);
            let total = alpha.integral_unchecked(&Rational::zero(), &rat(1, 1));
            let a0 = &Polynomial::constant(total + slack) - &alpha.antiderivative();
            SlopeProfile::new(
                n,
                a0,
                Polynomial::new(a1),
                Seshadri::Exact(rat(1, 1)),
                if sat { Saturation::Yes } else { Saturation::Unknown },
            )
            .expect("constructed valid")
        })
}

fn lattice_polygon() -> impl Strategy<Value = Polytope> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 3..=6).prop_filter_map("degenerate", |pts| {
        let pts: Vec<Point> = pts.into_iter().map(|(x, y)| [rat(x, 1), rat(y, 1)]).collect();
        Polytope::from_vertices(&pts).ok()
    })
}

/// ∫_P g by fanning P into triangles from its first vertex; g is affine, so
/// each triangle contributes area times g at the centroid.
fn integrate_over(p: &Polytope, g: impl Fn(&Point) -> Rational) -> Rational {
    let v = p.vertices();
    let mut total = Rational::zero();
    for i in 1..v.len() - 1 {
        let (a, b, c) = (&v[0], &v[i], &v[i + 1]);
        let area = ((&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])) / rat(2, 1);
        let centroid = [(&a[0] + &b[0] + &c[0]) / rat(3, 1), (&a[1] + &b[1] + &c[1]) / rat(3, 1)];
        total += area.abs() * g(&centroid);
    }
    total
}

fn c_value() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=12).prop_map(|(a, b)| rat(a.min(b), b.max(a)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn integral_is_additive(p in poly(8), a in rational(), b in rational(), t in 1i64..10) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let mid = &lo + (&hi - &lo) * rat(t, 10);
        let whole = p.definite_integral(&lo, &hi).unwrap();
        let split = p.definite_integral(&lo, &mid).unwrap() + p.definite_integral(&mid, &hi).unwrap();
        prop_assert_eq!(&whole, &split);
        if lo < mid && mid < hi {
            let pw = PiecewisePolynomial::new(vec![lo.clone(), mid.clone(), hi.clone()], vec![p.clone(), p.derivative()]).unwrap();
            let q = &lo + (&mid - &lo) * rat(1, 3);
            prop_assert_eq!(pw.integral(&lo, &hi).unwrap(), pw.integral(&lo, &q).unwrap() + pw.integral(&q, &hi).unwrap());
        }
    }

    #[test]
    fn derivative_then_integral(p in poly(8), c in rational()) {
        let zero = Rational::zero();
        prop_assert_eq!(p.derivative().integral_unchecked(&zero, &c), p.eval(&c) - p.eval(&zero));
    }

    #[test]
    fn sign_summary_matches_samples(p in poly(8), lo in -3i64..3, len in 1i64..4, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let (lo, hi) = (rat(lo, 1), rat(lo + len, 1));
        let rep = sign_on_interval(&p, &lo, &hi, false);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut seen = (false, false);
        for _ in 0..1000 {
            let x = &lo + (&hi - &lo) * rat(rng.gen_range(1..100_000), 100_000);
            let v = p.eval(&x);
            seen.0 |= v.is_positive();
            seen.1 |= v.is_negative();
            match &rep.interior {
                SignSummary::StrictlyPositive => prop_assert!(v.is_positive()),
                SignSummary::StrictlyNegative => prop_assert!(v.is_negative()),
                SignSummary::IdenticallyZero => prop_assert!(v.is_zero()),
                SignSummary::NonNegative(_) => prop_assert!(!v.is_negative()),
                SignSummary::NonPositive(_) => prop_assert!(!v.is_positive()),
                SignSummary::Mixed(_) => {}
            }
        }
        if seen.0 && seen.1 {
            prop_assert!(matches!(rep.interior, SignSummary::Mixed(_)));
        }
    }

    #[test]
    fn equivalence_chain_and_futaki_identity(p in profile(), c in c_value()) {
        let (a0, a1) = (p.a0_at_zero(), p.a1_at_zero());
        let mu_x = slope_of_variety(&a0, &a1).unwrap();
        let mi = mu_ideal(&p, &c).unwrap();
        let mq = mu_quotient(&p, &c).unwrap();
        prop_assert_eq!((&mi - &mu_x).signum(), -(&mq - &mu_x).signum());
        let w = normal_cone_weights(&p, &c).unwrap();
        prop_assert!(w.b0.is_negative());
        prop_assert_eq!(futaki(&a0, &a1, &w).unwrap(), -&w.b0 / &a0 * (mq - mu_x));
    }

    #[test]
    fn oracle_and_alpha_reconstruction(p in profile(), which in 0usize..3) {
        let c = [rat(1, 3), rat(1, 2), rat(1, 1)][which].clone();
        let (al1, al2) = alphas_from_profile(&p).unwrap();
        let ks: Vec<i64> = (1..=12).map(|k| k * 6).collect();
        let w = normal_cone_weights(&p, &c).unwrap();
        prop_assert_eq!(&w, &weight_sum_oracle(p.dim(), &al1, &al2, &c, &ks).unwrap());
        let tail = Polynomial::new(vec![c.clone(), rat(-1, 1)]);
        let zero = Rational::zero();
        let num = (&tail * &al2).integral_unchecked(&zero, &c) + &c / rat(2, 1) * al1.eval(&zero);
        let den = (&tail * &al1).integral_unchecked(&zero, &c);
        prop_assert_eq!(mu_quotient(&p, &c).unwrap(), num / den);
    }

    #[test]
    fn thickening_penalty(p in profile(), c in c_value(), m in 2u32..5) {
        let t = thicken(&p, m).unwrap();
        let mr = rat(m.into(), 1);
        let zero = Rational::zero();
        let i0 = p.a0().integral(&zero, &c).unwrap();
        let da0 = p.a0().eval(&c).unwrap() - p.a0_at_zero();
        let lhs = mu_ideal(&t, &(&c / &mr)).unwrap();
        let base = mu_ideal(&p, &c).unwrap();
        prop_assert_eq!(&lhs, &(&base + (&mr - rat(1, 1)) * da0 / (rat(2, 1) * i0)));
        prop_assert!(lhs < base);
    }

    #[test]
    fn twisting_keeps_the_verdict(p in profile(), r in 2u32..4) {
        let v = verdict(&p);
        let tv = verdict(&twist(&p, r).unwrap());
        prop_assert_eq!(v.tag(), tv.tag());
        if let Verdict::SemistableOnly { .. } = v {
            prop_assert_eq!(v.rescaled(&rat(r.into(), 1)), tv);
        }
    }

    #[test]
    fn surface_formulas_agree(
        l2 in positive(), lz in positive(), kl in rational(), z2 in -4i64..=4, g in 0u32..4, t in 1i64..10,
    ) {
        let z2 = rat(z2, 1);
        let kz = rat(2 * i64::from(g) - 2, 1) - &z2;
        let d = SurfaceCurveData { kl, l2, lz: lz.clone(), kz, z2: z2.clone(), genus: Some(g) };
        prop_assert!(d.adjunction_warning().is_none());
        // keep both denominators positive
        let c = &lz / (z2.abs() + rat(1, 1)) * rat(t, 10);
        let (_, mq) = surface_curve(&d, &c).unwrap();
        prop_assert_eq!(&mq, &divisor_quotient_slope(&d.as_divisor(), &c).unwrap());
        prop_assert_eq!(&mq, &curve_in_nfold_quotient_slope(&d.as_curve(g), &c).unwrap());
    }

    #[test]
    fn fubini_for_the_area_profile(p in lattice_polygon(), j in 0usize..8) {
        let j = j % p.halfspaces().len();
        let z = ToricSubscheme::divisor(j, 1);
        let prof = toric_profile(&p, &z, Seshadri::Unknown, Saturation::Unknown).unwrap();
        let end = prof.a0().end().unwrap().clone();
        let h = &p.halfspaces()[j];
        let direct = integrate_over(&p, |q| h.eval(&q[..]));
        prop_assert_eq!(prof.a0().integral(&Rational::zero(), &end).unwrap(), direct);
        prop_assert_eq!(prof.a0_at_zero(), p.area());
    }

    #[test]
    fn slices_are_nested(p in lattice_polygon(), j in 0usize..8, s in 1i64..10, t in 1i64..10) {
        let j = j % p.halfspaces().len();
        let z = ToricSubscheme::divisor(j, 1);
        let prof = toric_profile(&p, &z, Seshadri::Unknown, Saturation::Unknown).unwrap();
        let end = prof.a0().end().unwrap().clone();
        let (x1, x2) = (&end * rat(s.min(t), 10), &end * rat(s.max(t), 10));
        prop_assert!(prof.a0().eval(&x1).unwrap() >= prof.a0().eval(&x2).unwrap());
        let k = 6;
        prop_assert!(lattice_count_level(&p, &z, k, &x1).unwrap() >= lattice_count_level(&p, &z, k, &x2).unwrap());
    }

    #[test]
    fn donaldson_matches_engine(p in lattice_polygon(), j in 0usize..8, t in 1i64..=10) {
        let j = j % p.halfspaces().len();
        let z = ToricSubscheme::divisor(j, 1);
        let prof = toric_profile(&p, &z, Seshadri::Unknown, Saturation::Unknown).unwrap();
        let c = prof.a0().end().unwrap() * rat(t, 10);
        let raw = donaldson_weights(&p, &z, &c).unwrap();
        let moved = donaldson_normal_cone(&raw, &c, &prof.a0_at_zero(), &prof.a1_at_zero());
        prop_assert_eq!(moved, normal_cone_weights(&prof, &c).unwrap());
    }

    #[test]
    fn bundle_gap_agrees_with_the_engine(
        g in 1u32..4, d in 1i64..4, m in 1i64..4, r in 2u32..4, deg in -4i64..=4, s in 1u32..3, fdeg in -4i64..=4,
    ) {
        use slopestab::bundles::{subbundle_profile, subbundle_slope_gap, BaseData, SheafData, mu_sheaf};
        prop_assume!(s < r);
        let base = BaseData::curve(g, rat(d, 1));
        let e = SheafData::new(r, rat(deg, 1));
        let f = SheafData::new(s, rat(fdeg, 1));
        let m = rat(m, 1);
        // a₀ must stay positive on [0, 1] for ε = 1; otherwise skip
        if let (Ok(gap), Ok(prof)) = (subbundle_slope_gap(&base, &e, &f, &m), subbundle_profile(&base, &e, &f, &m)) {
            let one = rat(1, 1);
            let f1 = futaki(&prof.a0_at_zero(), &prof.a1_at_zero(), &normal_cone_weights(&prof, &one).unwrap()).unwrap();
            prop_assert_eq!(gap.signum(), f1.signum());
            let diff = mu_sheaf(&base, &e) - mu_sheaf(&base, &f);
            prop_assert_eq!(gap.signum(), diff.signum());
        }
    }
}

#[test]
fn hypotenuse_has_lattice_length_one() {
    assert_eq!(lattice_length(&[rat(-1, 1), rat(1, 1)]), rat(1, 1));
    assert_eq!(lattice_length(&[rat(-3, 1), rat(3, 1)]), rat(3, 1));
    assert_eq!(lattice_length(&[rat(-1, 2), rat(1, 2)]), rat(1, 2));
}
