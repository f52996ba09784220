//! Golden checks behind `verify-paper`: every worked example, each an
//! exact comparison between a stored rational string and a computed value.

use std::fmt::Write as _;

use num_traits::Signed;

use crate::bundles::{bundle_verdict, mu_sheaf, tilde_m, BaseData, BundleScenario, SheafData, Subsheaf};
use crate::engine::{
    futaki, margin_polynomial, mu_quotient, normal_cone_weights, slope_of_variety, verdict, Saturation, Seshadri,
    SlopeProfile,
};
use crate::exact::{rat, Polynomial, Rational};
use crate::geom::{smooth_curve_verdict, SurfaceCurveData};
use crate::scenario::{analyse, Scenario, SHIPPED};
use crate::toric::{
    destabilizer_scan, donaldson_normal_cone, donaldson_weights, toric_profile_auto, FaceSpec, Halfspace, Polytope,
    ToricSubscheme,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub tag: &'static str,
    pub name: String,
    pub expected: String,
    pub actual: Result<String, String>,
}

impl Check {
    pub fn new(
        tag: &'static str,
        name: impl Into<String>,
        expected: impl ToString,
        actual: Result<String, String>,
    ) -> Self {
        Check {
            tag,
            name: name.into(),
            expected: expected.to_string(),
            actual,
        }
    }

    pub fn passed(&self) -> bool {
        self.actual.as_deref() == Ok(self.expected.as_str())
    }

    pub fn line(&self) -> String {
        match (&self.actual, self.passed()) {
            (Ok(v), true) => format!("ok    [{}] {} = {v}", self.tag, self.name),
            (Ok(v), false) => format!(
                "FAIL  [{}] {}: expected {}, got {v}",
                self.tag, self.name, self.expected
            ),
            (Err(e), _) => format!(
                "FAIL  [{}] {}: expected {}, error: {e}",
                self.tag, self.name, self.expected
            ),
        }
    }
}

fn ok<T: ToString, E: ToString>(r: Result<T, E>) -> Result<String, String> {
    r.map(|v| v.to_string()).map_err(|e| e.to_string())
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// L = H − qE on Bl_p ℙ², Z = E, K = −3H + E.
pub fn blp2(q_: &Rational) -> SurfaceCurveData {
    SurfaceCurveData {
        kl: q_ - q(3),
        l2: q(1) - q_ * q_,
        lz: q_.clone(),
        kz: q(-1),
        z2: q(-1),
        genus: Some(0),
    }
}

/// ℙ² blown up at two infinitely near points, L = H − E₁/2 − rE₂, Z the −2-curve.
pub fn minus_two(r: &Rational) -> SurfaceCurveData {
    SurfaceCurveData {
        kl: r - q(3),
        l2: rat(1, 2) + r - r * r,
        lz: q(1) - r,
        kz: q(0),
        z2: q(-2),
        genus: Some(0),
    }
}

pub fn p2_halfspaces() -> Polytope {
    Polytope::from_halfspaces(
        2,
        vec![
            Halfspace::new(vec![1, 0], q(0)),
            Halfspace::new(vec![0, 1], q(0)),
            Halfspace::new(vec![-1, -1], q(-1)),
        ],
    )
    .expect("standard triangle")
}

pub fn blp2_polytope(q_: &Rational) -> Polytope {
    Polytope::from_halfspaces(
        2,
        vec![
            Halfspace::new(vec![1, 0], q(0)),
            Halfspace::new(vec![0, 1], q(0)),
            Halfspace::new(vec![-1, -1], q(-1)),
            Halfspace::new(vec![1, 1], q_.clone()),
        ],
    )
    .expect("truncated triangle")
}

fn origin_point() -> ToricSubscheme {
    ToricSubscheme::new(vec![
        FaceSpec {
            facet: 0,
            multiplicity: 1,
        },
        FaceSpec {
            facet: 1,
            multiplicity: 1,
        },
    ])
}

fn geom_checks(out: &mut Vec<Check>) {
    for q_ in [rat(1, 10), rat(1, 3), rat(1, 2), rat(3, 4), rat(9, 10)] {
        let eps = q(1) - &q_;
        let p = blp2(&q_).profile(Seshadri::Exact(eps.clone()), Saturation::Yes);
        let mu_x = (q(3) - &q_) / (q(1) - &q_ * &q_);
        let mu_q = q(3) / ((q(1) - &q_) * (q(2) * &q_ + q(1)));
        out.push(Check::new(
            "geom",
            format!("Bl1P2 q = {q_}: mu(X, L)"),
            mu_x,
            ok(p.as_ref()
                .map_err(|e| e.to_string())
                .and_then(|p| slope_of_variety(&p.a0_at_zero(), &p.a1_at_zero()).map_err(|e| e.to_string()))),
        ));
        out.push(Check::new(
            "geom",
            format!("Bl1P2 q = {q_}: mu_eps(O_E)"),
            mu_q,
            ok(p.as_ref()
                .map_err(|e| e.to_string())
                .and_then(|p| mu_quotient(p, &eps).map_err(|e| e.to_string()))),
        ));
        out.push(Check::new(
            "geom",
            format!("Bl1P2 q = {q_}: verdict"),
            "unstable",
            ok(p.map(|p| verdict(&p).tag())),
        ));
    }
    // (3−q)(1−q)(2q+1) − 3(1−q²) − 2q(1−q)², identically zero
    let qp = Polynomial::x();
    let c = |n: i64| Polynomial::constant(q(n));
    let one_minus = &c(1) - &qp;
    let lhs = &(&(&c(3) - &qp) * &one_minus) * &(&qp.scale(&q(2)) + &c(1));
    let rhs = &(&c(1) - &(&qp * &qp)).scale(&q(3)) + &(&qp * &(&one_minus * &one_minus)).scale(&q(2));
    out.push(Check::new(
        "geom",
        "Bl1P2 identity (3-q)(1-q)(2q+1) - 3(1-q^2) - 2q(1-q)^2",
        "0",
        Ok((&lhs - &rhs).render("q")),
    ));

    let r = rat(9, 10);
    let d = minus_two(&r);
    let c2 = &r - rat(1, 2);
    let p = d.profile(Seshadri::Exact(c2.clone()), Saturation::Unknown);
    out.push(Check::new(
        "geom",
        "-2-curve r = 9/10: mu(X, L)",
        rat(210, 59),
        ok(p.as_ref()
            .map_err(|e| e.to_string())
            .and_then(|p| slope_of_variety(&p.a0_at_zero(), &p.a1_at_zero()).map_err(|e| e.to_string()))),
    ));
    out.push(Check::new(
        "geom",
        "-2-curve r = 9/10: mu_{2/5}(O_Z)",
        rat(75, 22),
        ok(p.as_ref()
            .map_err(|e| e.to_string())
            .and_then(|p| mu_quotient(p, &c2).map_err(|e| e.to_string()))),
    ));
    out.push(Check::new(
        "geom",
        "-2-curve r = 9/10: verdict",
        "unstable",
        ok(p.map(|p| verdict(&p).tag())),
    ));
    let mut last = (q(100), q(100));
    let mut trend = true;
    for r in [rat(9, 10), rat(99, 100), rat(999, 1000)] {
        let d = minus_two(&r);
        let c = &r - rat(1, 2);
        let lz = q(1) - &r;
        let mu_x = (q(3) - &r) / (rat(1, 2) + &r - &r * &r);
        let mu_q = q(3) * (&lz + &c) / (&c * (q(3) * &lz + q(2) * &c));
        let p = d.profile(Seshadri::Exact(c.clone()), Saturation::Unknown);
        let got = p.as_ref().map_err(|e| e.to_string()).and_then(|p| {
            Ok((
                slope_of_variety(&p.a0_at_zero(), &p.a1_at_zero()).map_err(|e| e.to_string())?,
                mu_quotient(p, &c).map_err(|e| e.to_string())?,
            ))
        });
        if r != rat(9, 10) {
            out.push(Check::new(
                "geom",
                format!("-2-curve r = {r}: mu(X, L)"),
                &mu_x,
                ok(got.clone().map(|g| g.0)),
            ));
            out.push(Check::new(
                "geom",
                format!("-2-curve r = {r}: mu_c(O_Z)"),
                &mu_q,
                ok(got.map(|g| g.1)),
            ));
        }
        let dist = ((&mu_x - q(4)).abs(), (&mu_q - q(3)).abs());
        trend &= dist.0 < last.0 && dist.1 < last.1;
        last = dist;
    }
    out.push(Check::new(
        "geom",
        "-2-curve: mu(X,L) -> 4 and mu(O_Z) -> 3 monotonically",
        true,
        Ok(trend.to_string()),
    ));

    for g in 0..=3u32 {
        for deg in 1..=3i64 {
            for d in 1..=3u32 {
                let expected = if g == 0 && d == 1 { "semistable" } else { "stable" };
                out.push(Check::new(
                    "geom",
                    format!("curve g = {g}, deg L = {deg}, d = {d}"),
                    expected,
                    ok(smooth_curve_verdict(g, &q(deg), d).map(|v| v.tag())),
                ));
            }
        }
    }
    for d in 1..=4u32 {
        out.push(Check::new(
            "geom",
            format!("genus 2, L = K, d = {d}"),
            "stable",
            ok(smooth_curve_verdict(2, &q(2), d).map(|v| v.tag())),
        ));
    }
}

fn engine_checks(out: &mut Vec<Check>) {
    let point = SlopeProfile::new(
        2,
        Polynomial::from_ratios(&[(1, 2), (0, 1), (-1, 2)]),
        Polynomial::from_ratios(&[(3, 2), (-1, 2)]),
        Seshadri::Exact(q(1)),
        Saturation::Yes,
    );
    match point {
        Ok(p) => {
            let n = margin_polynomial(&p);
            out.push(Check::new(
                "engine",
                "point in P2: N(1/2)",
                rat(-1, 32),
                ok(n.eval(&rat(1, 2))),
            ));
            let w = normal_cone_weights(&p, &q(1));
            out.push(Check::new(
                "engine",
                "point in P2: (b0, b1) at c = 1",
                "(-1/6, -1/2)",
                ok(w.as_ref().map(|w| format!("({}, {})", w.b0, w.b1))),
            ));
            out.push(Check::new(
                "engine",
                "point in P2: F1(1)",
                "0",
                ok(w.and_then(|w| futaki(&p.a0_at_zero(), &p.a1_at_zero(), &w))),
            ));
            out.push(Check::new(
                "engine",
                "point in P2: verdict",
                "semistable",
                Ok(verdict(&p).tag().to_string()),
            ));
        }
        Err(e) => out.push(Check::new("engine", "point in P2 profile", "valid", Err(e.to_string()))),
    }
    let h = rat(1, 2);
    match blp2(&h).profile(Seshadri::Exact(h.clone()), Saturation::Yes) {
        Ok(p) => {
            out.push(Check::new(
                "engine",
                "Bl1P2 q = 1/2: N(1/2)",
                rat(1, 96),
                ok(margin_polynomial(&p).eval(&h)),
            ));
            out.push(Check::new(
                "engine",
                "Bl1P2 q = 1/2: F1(1/2)",
                rat(-2, 27),
                ok(normal_cone_weights(&p, &h).and_then(|w| futaki(&p.a0_at_zero(), &p.a1_at_zero(), &w))),
            ));
        }
        Err(e) => out.push(Check::new("engine", "Bl1P2 profile", "valid", Err(e.to_string()))),
    }
}

fn toric_checks(out: &mut Vec<Check>) {
    let p2 = p2_halfspaces();
    match toric_profile_auto(&p2, &origin_point()) {
        Ok(p) => {
            let x = rat(1, 2);
            out.push(Check::new(
                "toric",
                "P2 point: a0(1/2) = (1 - x^2)/2",
                rat(3, 8),
                ok(p.a0().eval(&x)),
            ));
            out.push(Check::new(
                "toric",
                "P2 point: a1(1/2) = (3 - x)/2",
                rat(5, 4),
                ok(p.a1().eval(&x)),
            ));
            out.push(Check::new("toric", "P2 point: eps", "1", Ok(p.seshadri().to_string())));
            let c = q(1);
            let eng = normal_cone_weights(&p, &c).and_then(|w| futaki(&p.a0_at_zero(), &p.a1_at_zero(), &w));
            out.push(Check::new("toric", "P2 point: F1(1)", "0", ok(eng.clone())));
            let don = donaldson_weights(&p2, &origin_point(), &c)
                .map_err(|e| e.to_string())
                .and_then(|raw| {
                    let w = donaldson_normal_cone(&raw, &c, &p.a0_at_zero(), &p.a1_at_zero());
                    futaki(&p.a0_at_zero(), &p.a1_at_zero(), &w).map_err(|e| e.to_string())
                });
            out.push(Check::new(
                "toric",
                "P2 point: F1(1) from Donaldson weights",
                "0",
                ok(don),
            ));
        }
        Err(e) => out.push(Check::new("toric", "P2 point profile", "valid", Err(e.to_string()))),
    }
    let bl = blp2_polytope(&rat(1, 2));
    match destabilizer_scan(&bl, 2, 8) {
        Ok(hits) => {
            let top = hits.first();
            out.push(Check::new(
                "toric",
                "Bl1P2 scan: top candidate",
                "D3^1",
                top.map(|h| h.subscheme.to_string())
                    .ok_or_else(|| "no candidates".to_string()),
            ));
            out.push(Check::new(
                "toric",
                "Bl1P2 scan: top F1",
                rat(-2, 27),
                top.map(|h| h.futaki.to_string())
                    .ok_or_else(|| "no candidates".to_string()),
            ));
        }
        Err(e) => out.push(Check::new("toric", "Bl1P2 scan", "runs", Err(e.to_string()))),
    }
    match destabilizer_scan(&p2, 2, 8) {
        Ok(hits) => out.push(Check::new(
            "toric",
            "P2 scan: strict destabilizers",
            0,
            Ok(hits.iter().filter(|h| h.futaki.is_negative()).count().to_string()),
        )),
        Err(e) => out.push(Check::new("toric", "P2 scan", "runs", Err(e.to_string()))),
    }
}

fn bundle_checks(out: &mut Vec<Check>) {
    let base = BaseData::curve(1, q(1));
    let e = SheafData::new(2, q(1));
    let f = SheafData::new(1, q(1));
    out.push(Check::new(
        "bundles",
        "elliptic O + O(p): mu_E",
        rat(1, 2),
        Ok(mu_sheaf(&base, &e).to_string()),
    ));
    out.push(Check::new(
        "bundles",
        "elliptic O(p): mu_F",
        1,
        Ok(mu_sheaf(&base, &f).to_string()),
    ));
    out.push(Check::new(
        "bundles",
        "elliptic, m = 2: m~",
        rat(3, 2),
        Ok(tilde_m(&base, &e, &q(2)).0.to_string()),
    ));
    let scn = |e: SheafData, f: SheafData, m: i64| BundleScenario {
        base: base.clone(),
        e,
        m: q(m),
        subsheaves: vec![Subsheaf {
            sheaf: f,
            not_direct_summand: true,
        }],
    };
    let rep = bundle_verdict(&scn(e.clone(), f.clone(), 2));
    out.push(Check::new(
        "bundles",
        "elliptic O + O(p) against P(O(p)): gap sign",
        -1,
        ok(rep.as_ref().map(|r| crate::exact::signum(&r.subsheaves[0].gap))),
    ));
    out.push(Check::new(
        "bundles",
        "elliptic O + O(p): verdict",
        "unstable",
        ok(rep.map(|r| r.aggregate.tag())),
    ));
    let rep = bundle_verdict(&scn(SheafData::new(2, q(2)), f, 3));
    out.push(Check::new(
        "bundles",
        "equal slopes: F1 at c = 1",
        0,
        ok(rep.as_ref().map(|r| r.subsheaves[0].futaki.clone())),
    ));
    out.push(Check::new(
        "bundles",
        "equal slopes: verdict",
        "semistable",
        ok(rep.map(|r| r.aggregate.tag())),
    ));
}

fn scenario_checks(out: &mut Vec<Check>) {
    for (name, text) in SHIPPED {
        let scn = match Scenario::parse(text) {
            Ok(s) => s,
            Err(e) => {
                out.push(Check::new("scenarios", *name, "parses", Err(e.to_string())));
                continue;
            }
        };
        let expected = scn.expect.map_or("-", |e| e.tag());
        out.push(Check::new(
            "scenarios",
            *name,
            expected,
            ok(analyse(&scn).map(|a| a.verdict().tag())),
        ));
    }
}

/// All checks, in a fixed order.
pub fn catalogue() -> Vec<Check> {
    let mut out = Vec::new();
    engine_checks(&mut out);
    geom_checks(&mut out);
    toric_checks(&mut out);
    bundle_checks(&mut out);
    scenario_checks(&mut out);
    out
}

pub struct Suite {
    pub checks: Vec<Check>,
}

impl Suite {
    /// Runs the catalogue, keeping only checks tagged `only` when given.
    pub fn run(only: Option<&str>) -> Suite {
        let checks = catalogue()
            .into_iter()
            .filter(|c| only.is_none_or(|t| c.tag == t))
            .collect();
        Suite { checks }
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{}", c.line());
        }
        let _ = writeln!(
            out,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - self.failures(),
            self.failures()
        );
        out
    }

    pub fn exit_code(&self) -> i32 {
        if self.failures() == 0 {
            0
        } else {
            1
        }
    }
}

pub const TAGS: &[&str] = &["engine", "geom", "toric", "bundles", "scenarios"];
