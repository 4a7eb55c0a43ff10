//! End-to-end acceptance run: one line per criterion, non-zero exit if any
//! criterion fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use diracred::suites::{
    brackets_suite, cyclicity_suite, product_suite, projector_coefficients, solutions_suite, truncated_projector_suite,
};
use diracred::coset::{verify_diamond_formulas, verify_presentation, SolutionSpace};
use diracred::weyl_clifford::{verify_adjoint_suite, verify_osp_suite};
use diracred::{Metric, Report, Status};

const SEED: u64 = 20_240_601;

fn metrics(ns: &[usize]) -> Vec<(String, Arc<Metric>)> {
    let mut out = Vec::new();
    for &n in ns {
        out.push((format!("euclidean({n})"), Metric::euclidean(n).unwrap()));
        out.push((format!("lorentzian({n})"), Metric::lorentzian(n).unwrap()));
        out.push((format!("offdiag({n})"), Metric::offdiag(n).unwrap()));
    }
    out
}

struct Outcome {
    ok: bool,
    detail: String,
}

/// Runs a suite on every metric; fails on the first failing entry, or on
/// skipped entries when `strict`.
fn over(grid: &[(String, Arc<Metric>)], strict: bool, run: impl Fn(&Arc<Metric>) -> diracred::Result<Report>) -> Outcome {
    let mut checked = 0;
    for (name, m) in grid {
        let r = match run(m) {
            Ok(r) => r,
            Err(e) => return Outcome { ok: false, detail: format!("{name}: error {e}") },
        };
        if let Some(f) = r.failures().next() {
            return Outcome {
                ok: false,
                detail: format!("{name}: {} {:?}: {}", f.relation, f.indices, f.witness.clone().unwrap_or_default()),
            };
        }
        if strict && (r.count(Status::Skipped) > 0 || r.warning_count() > 0) {
            return Outcome {
                ok: false,
                detail: format!("{name}: {} skipped, {} warnings", r.count(Status::Skipped), r.warning_count()),
            };
        }
        checked += r.count(Status::Pass);
    }
    Outcome { ok: true, detail: format!("{checked} checks on {} metrics", grid.len()) }
}

fn main() {
    let all = metrics(&[1, 2, 3, 4]);
    let cyc = metrics(&[1, 3, 4]);
    let big = metrics(&[3, 4]);

    type Criterion<'a> = (&'a str, Duration, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("osp embedding and index identities", Duration::from_secs(5), Box::new(|| over(&all, true, |m| Ok(verify_osp_suite(m))))),
        ("adjoint table", Duration::from_secs(5), Box::new(|| over(&all, true, |m| Ok(verify_adjoint_suite(m))))),
        (
            "projector coefficients",
            Duration::from_secs(1),
            Box::new(|| over(&all[..1], true, |_| Ok(projector_coefficients(20)))),
        ),
        (
            "truncated projector on V up to degree 6",
            Duration::from_secs(30),
            Box::new(|| over(&cyc, true, |m| truncated_projector_suite(m, 6))),
        ),
        ("diamond product formulas", Duration::from_secs(10), Box::new(|| over(&all, true, |m| Ok(verify_diamond_formulas(m))))),
        (
            "presentation relations at degree bound 4",
            Duration::from_secs(120),
            Box::new(|| over(&big, true, |m| Ok(verify_presentation(&SolutionSpace::new(m, 4)?)))),
        ),
        ("bracket lemmas, m <= 5", Duration::from_secs(60), Box::new(|| over(&all, true, |m| brackets_suite(m, 5)))),
        ("product formula, m <= 4", Duration::from_secs(120), Box::new(|| over(&all, true, |m| product_suite(m, 4)))),
        ("closed-form solutions, m <= 5", Duration::from_secs(60), Box::new(|| over(&all, true, |m| solutions_suite(m, 5, SEED)))),
        (
            "cyclicity, reconstruction and top coefficients",
            Duration::from_secs(120),
            Box::new(|| over(&cyc, true, |m| cyclicity_suite(m, 4, 50, SEED))),
        ),
    ];

    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut out = run();
        let took = start.elapsed();
        if out.ok && took > *limit {
            out = Outcome { ok: false, detail: format!("{} but exceeded {limit:?}", out.detail) };
        }
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {}: {name} ({:.2?}; {})", k + 1, took, out.detail);
        failed += usize::from(!out.ok);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
