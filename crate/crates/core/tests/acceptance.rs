//! Acceptance criteria. Each test prints one PASS/FAIL line.

use std::io::Write;
use std::time::Instant;

use zigzag::suites::{run, Scope, Suite};

fn criterion(suite: Suite) {
    let start = Instant::now();
    let r = run(suite, &Scope::default());
    let verdict = if r.passed { "PASS" } else { "FAIL" };
    // Written to the handle directly so the line survives output capture.
    let mut out = std::io::stdout().lock();
    writeln!(
        out,
        "criterion {:>2} {:<14} {verdict}  checked {} uncertified {} failures {}  {:.1}s  [{}]",
        r.criterion,
        r.suite,
        r.checked,
        r.uncertified,
        r.failure_count,
        start.elapsed().as_secs_f64(),
        r.scope
    )
    .unwrap();
    for f in &r.failures {
        writeln!(out, "    {f}").unwrap();
    }
    assert!(r.passed, "criterion {} ({}) failed", r.criterion, r.suite);
}

#[test]
fn c01_algebra_exactness() {
    criterion(Suite::Algebra);
}

#[test]
fn c02_functor_closed_forms() {
    criterion(Suite::Functors);
}

#[test]
fn c03_invertibility() {
    criterion(Suite::Invertibility);
}

#[test]
fn c04_standard_metric() {
    criterion(Suite::Metric1);
}

#[test]
fn c05_dual_metric() {
    criterion(Suite::Metric2);
}

#[test]
fn c06_exotic_metric() {
    criterion(Suite::Exotic);
}

#[test]
fn c07_ping_pong() {
    criterion(Suite::Pingpong);
}

#[test]
fn c08_hurwitz_spherical() {
    criterion(Suite::Hurwitz);
}

#[test]
fn c09_equivalent_criteria() {
    criterion(Suite::Equiv);
}

#[test]
fn c10_faithfulness() {
    criterion(Suite::Faithful);
}
