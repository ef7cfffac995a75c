//! End-to-end acceptance run: one line per criterion, non-zero exit if any
//! fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use contact_core::config::AnalyzeConfig;
use contact_core::linalg::Rat;
use contact_core::verify::{run_suite, Status, VerifyOptions, VerifyResult};

struct Criterion {
    id: usize,
    title: &'static str,
    suite: &'static str,
    /// Extra condition on top of every case passing.
    extra: fn(&VerifyResult, Duration) -> Result<(), String>,
}

fn none(_: &VerifyResult, _: Duration) -> Result<(), String> {
    Ok(())
}

fn count_at_least(r: &VerifyResult, n: usize) -> Result<(), String> {
    if r.cases.len() >= n {
        Ok(())
    } else {
        Err(format!("{} cases, need {n}", r.cases.len()))
    }
}

fn sweep(r: &VerifyResult, t: Duration) -> Result<(), String> {
    // 35 grid points, one q and one r algebra each
    count_at_least(r, 70)?;
    if t > Duration::from_secs(600) {
        return Err(format!("took {t:?}"));
    }
    Ok(())
}

fn bar_sweep(r: &VerifyResult, _: Duration) -> Result<(), String> {
    // r-bar needs b >= 1, which drops five grid points
    count_at_least(r, 65)
}

fn tiny_bounds(r: &VerifyResult, _: Duration) -> Result<(), String> {
    let tiny = Rat::new(1.into(), 10u64.pow(16).into());
    match r.cases.iter().filter_map(|c| c.bound.as_ref()).find(|b| **b >= tiny) {
        Some(b) => Err(format!("failure bound {b} not below 1e-16")),
        None => Ok(()),
    }
}

fn rais_count(r: &VerifyResult, _: Duration) -> Result<(), String> {
    count_at_least(r, 15)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "index of q(a,b) and r(a,b) on the grid", suite: "t-ind", extra: sweep },
    Criterion { id: 2, title: "index of the bar quotients", suite: "bar", extra: bar_sweep },
    Criterion { id: 3, title: "contact affine seaweeds with explicit forms", suite: "sw1", extra: none },
    Criterion { id: 4, title: "qbar(1,b) not contact, rbar(1,2) contact", suite: "notc", extra: tiny_bounds },
    Criterion { id: 5, title: "Borel of sl3 semi-invariants", suite: "borel", extra: none },
    Criterion { id: 6, title: "Heisenberg p and f", suite: "heisenberg", extra: none },
    Criterion { id: 7, title: "sp4 parabolic", suite: "sp4", extra: none },
    Criterion { id: 8, title: "stable non-conical point of sl2 ⋉ k^2", suite: "dirpr", extra: none },
    Criterion { id: 9, title: "k ⋉ k^2 with two characters", suite: "ex-k", extra: none },
    Criterion { id: 10, title: "contact, non-conical and stable agree", suite: "equivalence", extra: none },
    Criterion { id: 11, title: "index formula for semi-direct products", suite: "rais", extra: rais_count },
    Criterion { id: 12, title: "truncation and Takiff indices", suite: "takiff", extra: none },
    Criterion { id: 13, title: "sl2 ⋉ 4k^2 and its torus extension", suite: "not-free", extra: none },
    Criterion { id: 14, title: "probabilistic and symbolic index agree", suite: "modes", extra: none },
];

fn main() -> ExitCode {
    let cfg = AnalyzeConfig::default();
    let opts = VerifyOptions::default();
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = run_suite(c.suite, &opts, &cfg).map_err(|e| e.to_string()).and_then(|r| {
            let t = start.elapsed();
            let bad: Vec<String> = r
                .cases
                .iter()
                .filter(|k| k.status == Status::Fail)
                .map(|k| format!("{}: expected {}, computed {}", k.instance, k.expected, k.computed))
                .collect();
            if !bad.is_empty() {
                return Err(bad.join("; "));
            }
            (c.extra)(&r, t)?;
            Ok((r.cases.len(), r.max_failure_bound.clone(), t))
        });
        match outcome {
            Ok((n, bound, t)) => println!(
                "PASS  {:>2}  {:<44} {n} cases, {:.1}s{}",
                c.id,
                c.title,
                t.as_secs_f64(),
                bound.map(|b| format!(", max failure bound {b}")).unwrap_or_default()
            ),
            Err(e) => {
                failed += 1;
                println!("FAIL  {:>2}  {:<44} {e}", c.id, c.title);
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
