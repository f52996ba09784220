//! Deterministic text reports, CSV tables and scan listings.
//!
//! Every rational is printed exactly. Decimals appear only in columns
//! marked `~`, rendered at 12 significant digits.

use std::fmt::Write as _;

use num_traits::Signed;

use crate::bundles::BundleReport;
use crate::engine::{
    futaki, margin_polynomial, mu_ideal, mu_quotient, normal_cone_weights, slope_of_variety, SlopeProfile,
};
use crate::exact::{to_sci, Rational};
use crate::scenario::{
    build_profile, bundle_profiles, even_grid, grid_bound, toric_polytope, Analysis, Kind, Outcome, ProfileAnalysis,
    Scenario, ScenarioError,
};
use crate::toric::{destabilizer_scan, ScanHit};

const DIGITS: usize = 12;

fn approx(q: &Rational) -> String {
    to_sci(q, DIGITS)
}

/// Exact value followed by its decimal approximation.
fn both(q: &Rational) -> String {
    format!("{q}  (~{})", approx(q))
}

/// The report body for an analysed scenario. The `[inputs]` block is the
/// scenario re-serialized, so it parses back to the same scenario.
pub fn render(a: &Analysis) -> String {
    let mut out = String::new();
    let scn = &a.scenario;
    let _ = writeln!(out, "scenario: {}", scn.name);
    let _ = writeln!(out, "kind: {}", scn.kind);
    if !scn.description.is_empty() {
        let _ = writeln!(out, "description: {}", scn.description);
    }
    out.push_str("\n[inputs]\n");
    out.push_str(&scn.to_toml());
    out.push_str("[end inputs]\n\n");
    match &a.outcome {
        Outcome::Profile(p) => render_profile(&mut out, scn, p),
        Outcome::Bundle(b) => render_bundle(&mut out, b),
    }
    for w in &a.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    let _ = writeln!(out, "verdict: {}", a.verdict());
    if let Some(ok) = a.meets_expectation() {
        let e = scn.expect.expect("has expectation").tag();
        let _ = writeln!(out, "expected: {e} ({})", if ok { "match" } else { "MISMATCH" });
    }
    let _ = writeln!(out, "exit code: {}", a.exit_code());
    out
}

/// Recovers the scenario echoed in a report.
pub fn echoed_inputs(report: &str) -> Option<&str> {
    let start = report.find("[inputs]\n")? + "[inputs]\n".len();
    let end = report[start..].find("[end inputs]")? + start;
    Some(&report[start..end])
}

fn render_profile(out: &mut String, scn: &Scenario, p: &ProfileAnalysis) {
    let prof = &p.profile;
    let _ = writeln!(out, "dimension: {}", prof.dim());
    let _ = writeln!(out, "a0(x) = {}", prof.a0().render("x"));
    let _ = writeln!(out, "a1(x) = {}", prof.a1().render("x"));
    let _ = writeln!(out, "mu(X) = {}", both(&p.mu_x));
    let note = scn
        .seshadri
        .as_ref()
        .and_then(|s| s.note.as_deref())
        .map(|n| format!("; {n}"))
        .unwrap_or_default();
    let _ = writeln!(out, "seshadri: {} ({}{note})", prof.seshadri(), p.provenance);
    let _ = writeln!(out, "saturation at eps: {}", prof.saturation());
    let _ = writeln!(
        out,
        "margin N(c) = a0(0) int(a1 + a0'/2) - a1(0) int a0 = {}",
        p.margin.render("c")
    );
    for e in &p.evaluations {
        let _ = writeln!(out, "at c = {}:", e.c);
        let _ = writeln!(out, "  mu_c(I_Z) = {}", both(&e.mu_ideal));
        let _ = writeln!(out, "  mu_c(O_Z) = {}", both(&e.mu_quotient));
        let _ = writeln!(out, "  N(c)      = {}", both(&e.margin));
        let _ = writeln!(out, "  F1        = {}", both(&e.futaki));
        if let Some((label, v, engine)) = &e.cross_check {
            let tag = if v == engine { "agrees" } else { "DISAGREES" };
            let _ = writeln!(out, "  {label}: mu_c(O_Z) = {v} ({tag})");
        }
    }
}

fn render_bundle(out: &mut String, b: &BundleReport) {
    let _ = writeln!(out, "mu_E = {}", both(&b.mu_e));
    let _ = writeln!(out, "m~ = {}", both(&b.tilde_m));
    let _ = writeln!(out, "a0 = {}, a1 = {}", b.a0, b.a1);
    let mu = slope_of_variety(&b.a0, &b.a1).expect("a0 is positive");
    let _ = writeln!(out, "mu(P(E), L_m) = {}", both(&mu));
    for s in &b.subsheaves {
        let _ = writeln!(out, "subsheaf rank {} deg {}:", s.sheaf.rank, s.sheaf.deg);
        let _ = writeln!(out, "  mu_F = {}", both(&s.mu_f));
        let _ = writeln!(out, "  mu_1(O_P(F)) - mu(P(E)) = {}", both(&s.gap));
        let _ = writeln!(out, "  F1 at c = 1 = {}", both(&s.futaki));
        let _ = writeln!(out, "  verdict: {}", s.verdict);
        for n in &s.notes {
            let _ = writeln!(out, "  note: {n}");
        }
    }
}

/// Optional trailer with the wall-clock time. Kept out of the body so the
/// body stays byte-identical across runs.
pub fn timestamp_footer() -> String {
    let secs = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    format!("-- generated at unix time {secs}\n")
}

pub const CSV_HEADER: [&str; 12] = [
    "c",
    "mu_ideal",
    "mu_quotient",
    "mu_x",
    "margin",
    "futaki",
    "c~",
    "mu_ideal~",
    "mu_quotient~",
    "margin~",
    "futaki~",
    "note",
];

fn profile_rows(p: &SlopeProfile, grid: &[Rational], label: &str) -> Vec<Vec<String>> {
    let mu_x = slope_of_variety(&p.a0_at_zero(), &p.a1_at_zero()).expect("a0(0) is positive");
    let margin = margin_polynomial(p);
    let bound = grid_bound(p);
    let prefix = |s: &str| {
        [label, s]
            .iter()
            .filter(|t| !t.is_empty())
            .copied()
            .collect::<Vec<_>>()
            .join("; ")
    };
    grid.iter()
        .map(|c| {
            let inside = c.is_positive() && bound.as_ref().is_none_or(|b| c <= b);
            let values = inside
                .then(|| -> Result<_, crate::engine::EngineError> {
                    let w = normal_cone_weights(p, c)?;
                    Ok([
                        mu_ideal(p, c)?,
                        mu_quotient(p, c)?,
                        margin.eval(c)?,
                        futaki(&p.a0_at_zero(), &p.a1_at_zero(), &w)?,
                    ])
                })
                .transpose();
            match values {
                Ok(Some([mi, mq, n, f])) => vec![
                    c.to_string(),
                    mi.to_string(),
                    mq.to_string(),
                    mu_x.to_string(),
                    n.to_string(),
                    f.to_string(),
                    approx(c),
                    approx(&mi),
                    approx(&mq),
                    approx(&n),
                    approx(&f),
                    prefix(""),
                ],
                Ok(None) => {
                    let b = bound.as_ref().map_or("?".to_string(), |b| b.to_string());
                    row_with_note(c, &mu_x, &prefix(&format!("outside (0, {b}]")))
                }
                Err(e) => row_with_note(c, &mu_x, &prefix(&e.to_string())),
            }
        })
        .collect()
}

fn row_with_note(c: &Rational, mu_x: &Rational, note: &str) -> Vec<String> {
    let mut row = vec![String::new(); CSV_HEADER.len()];
    row[0] = c.to_string();
    row[3] = mu_x.to_string();
    row[6] = approx(c);
    row[11] = note.to_string();
    row
}

/// μ_c-vs-c table. With no grid, eight evenly spaced points in (0, ε] (or
/// up to the end of the support when ε is unknown). Bundles get one block
/// of rows per listed subsheaf, named in the note column.
pub fn profile_csv(scn: &Scenario, grid: Option<&[Rational]>) -> Result<String, ScenarioError> {
    let blocks: Vec<(String, SlopeProfile)> = if scn.kind == Kind::Bundle {
        bundle_profiles(scn)?
            .into_iter()
            .map(|(f, p)| (format!("F rank {} deg {}", f.rank, f.deg), p))
            .collect()
    } else {
        vec![(String::new(), build_profile(scn)?.0)]
    };
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for (label, p) in &blocks {
        let pts = match grid {
            Some(g) => g.to_vec(),
            None => grid_bound(p).map(|b| even_grid(&b, 8)).unwrap_or_default(),
        };
        for row in profile_rows(p, &pts, label) {
            w.write_record(&row).expect("in-memory write");
        }
    }
    let bytes = w.into_inner().expect("in-memory flush");
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Result of a toric destabilizer scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub name: String,
    pub hits: Vec<ScanHit>,
}

impl ScanReport {
    /// 2 when the top candidate has negative Futaki invariant, else 0.
    pub fn exit_code(&self) -> i32 {
        match self.hits.first() {
            Some(h) if h.futaki.is_negative() => 2,
            _ => 0,
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scan: {}", self.name);
        let _ = writeln!(out, "candidates: {}", self.hits.len());
        for (i, h) in self.hits.iter().enumerate() {
            let mark = if h.futaki.is_negative() { "destabilizing" } else { "-" };
            let _ = writeln!(
                out,
                "{:>3}. {}  eps = {}  min F1 = {} at c = {}  (~{})  {mark}",
                i + 1,
                h.subscheme,
                h.seshadri,
                h.futaki,
                h.c,
                approx(&h.futaki)
            );
        }
        let _ = writeln!(out, "exit code: {}", self.exit_code());
        out
    }
}

pub fn scan(scn: &Scenario, budget: u32, grid: u32) -> Result<ScanReport, ScenarioError> {
    let p = toric_polytope(scn)?;
    Ok(ScanReport {
        name: scn.name.clone(),
        hits: destabilizer_scan(&p, budget, grid)?,
    })
}
