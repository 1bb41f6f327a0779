//! Acceptance run: one pass/fail line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use kp_core::kpalg::{enumerate_basis_filtered, BasisFilter, BasisShape, Window};
use kp_core::verify::{
    check_class_oracles, check_confluence, check_kp_relations, check_lemma12, check_lemma13, check_lemma3,
    check_lemma8, check_normal_forms, check_pair_counts, check_quotient_laws, CheckConfig, CheckReport,
};
use kp_core::{GraphConfig, Integers, IntegersMod, Point};

const GRAPHS: [(usize, u32); 4] = [(1, 1), (1, 2), (2, 1), (2, 2)];

fn graph(k: usize, l: u32) -> GraphConfig {
    GraphConfig::new(k, l).unwrap()
}

fn cfg(k: usize, l: u32, radius: i64, bound: usize, seed: u64, cases: usize) -> CheckConfig {
    CheckConfig::new(graph(k, l), Window::cube(k, -radius, radius, bound).unwrap(), seed, cases)
}

/// Collects reports for one criterion; detail lines for failures.
struct Criterion {
    ok: bool,
    notes: Vec<String>,
}

impl Criterion {
    fn new() -> Self {
        Criterion { ok: true, notes: Vec::new() }
    }

    fn report(&mut self, label: &str, r: &CheckReport) {
        if !r.passed() {
            self.ok = false;
            self.notes.push(format!("{label}: {r}"));
        }
    }

    fn require(&mut self, cond: bool, what: String) {
        if !cond {
            self.ok = false;
            self.notes.push(what);
        }
    }
}

fn kp_relations() -> Criterion {
    let mut c = Criterion::new();
    for (k, l) in GRAPHS {
        let r = check_kp_relations(&cfg(k, l, 2, 2, 0, 0), &Integers);
        c.report(&format!("k={k} l={l}"), &r);
    }
    c
}

/// Criteria 2 and 3 read the same runs: shape of normal forms, and the
/// measure decrease of each recorded step.
fn normal_form_runs() -> Vec<CheckReport> {
    let mut out = vec![check_normal_forms(&cfg(2, 2, 2, 3, 2024, 5000), &Integers)];
    for (k, l) in [(1, 1), (1, 2), (2, 1)] {
        out.push(check_normal_forms(&cfg(k, l, 2, 3, 2024, 1000), &Integers));
    }
    out
}

fn normal_form_shape(runs: &[CheckReport]) -> Criterion {
    let mut c = Criterion::new();
    c.require(runs[0].cases == 5000, format!("ran {} cases", runs[0].cases));
    for r in runs {
        let bad: Vec<_> = r
            .failures
            .iter()
            .filter(|f| ["non-basis", "fixed point", "failed"].iter().any(|s| f.detail.contains(s)))
            .collect();
        c.require(bad.is_empty(), format!("{} shape failures, first: {:?}", bad.len(), bad.first()));
    }
    c
}

fn measure_monotone(runs: &[CheckReport]) -> Criterion {
    let mut c = Criterion::new();
    for r in runs {
        let bad = r
            .failures
            .iter()
            .filter(|f| f.detail.contains("measure") || f.detail.contains("ordering"))
            .count();
        c.require(bad == 0, format!("{bad} measure violations"));
    }
    c
}

fn confluence(runs: &[CheckReport]) -> Criterion {
    let mut c = Criterion::new();
    let main = check_confluence(&cfg(2, 2, 2, 3, 99, 2000), &Integers);
    c.report("k=2 l=2", &main);
    for fam in ["(1),(1)", "(1),(2)", "(1),(3)", "(1),(4)", "(1),(5)", "(2),(2)", "(2),(3)", "(2),(4)", "(2),(5)", "(3),(4)", "(3),(5)", "(4),(4)"] {
        let n = main.note(&format!("family {fam}"));
        c.require(n > 0, format!("family {fam} never sampled"));
    }
    for (k, l) in [(1, 1), (1, 2), (2, 1)] {
        c.report(&format!("k={k} l={l}"), &check_confluence(&cfg(k, l, 2, 3, 99, 500), &Integers));
    }
    for r in runs {
        let bad = r.failures.iter().filter(|f| f.detail.contains("random strategy")).count();
        c.require(bad == 0, format!("{bad} leftmost/random mismatches"));
    }
    c
}

fn identity_oracles() -> Criterion {
    let mut c = Criterion::new();
    for (k, l) in GRAPHS {
        let cf = cfg(k, l, 3, 3, 500 + k as u64 * 10 + l as u64, 500);
        for r in [
            check_lemma3(&cf, &Integers),
            check_lemma8(&cf, &Integers),
            check_lemma12(&cf, &Integers),
            check_lemma13(&cf, &Integers),
        ] {
            c.require(r.cases == 500, format!("{} ran {} cases", r.name, r.cases));
            c.report(&format!("k={k} l={l}"), &r);
        }
    }
    c
}

fn class_oracles() -> Criterion {
    let mut c = Criterion::new();
    for (k, l) in GRAPHS {
        let r = check_class_oracles(&graph(k, l), &Window::cube(k, -2, 2, 2).unwrap());
        c.report(&format!("k={k} l={l}"), &r);
    }
    c
}

fn derived_count() -> Criterion {
    let mut c = Criterion::new();
    let window = Window::cube(1, -2, 2, 1).unwrap();
    let filter = BasisFilter {
        shapes: Some(vec![BasisShape::Pair]),
        range_left: Some(Point::from_i64s(&[0])),
        range_right: Some(Point::from_i64s(&[0])),
    };
    let n = enumerate_basis_filtered(&graph(1, 2), &window, &filter).unwrap().len();
    c.require(n == 3, format!("found {n} pair words, expected 3"));
    c.report("degree pairs up to 3", &check_pair_counts(2, 3));
    c
}

fn quotient_laws() -> Criterion {
    let mut c = Criterion::new();
    let main = check_quotient_laws(&cfg(2, 2, 2, 2, 8, 2000));
    c.require(main.cases == 2000, format!("ran {} cases", main.cases));
    c.require(main.note("nonzero products") > 500, format!("only {} nonzero products", main.note("nonzero products")));
    c.report("k=2 l=2", &main);
    for (k, l) in [(1, 1), (1, 2), (2, 1)] {
        c.report(&format!("k={k} l={l}"), &check_quotient_laws(&cfg(k, l, 2, 2, 8, 500)));
    }
    // The same check over Z/5 directly, as a sanity check of the generic path.
    let z5 = IntegersMod::new(5.into()).unwrap();
    c.report("normal forms over Z/5", &check_normal_forms(&cfg(2, 2, 2, 2, 8, 300), &z5));
    c
}

fn determinism() -> Criterion {
    let mut c = Criterion::new();
    c.require(common::GOLDENS.len() == 20, format!("{} golden invocations", common::GOLDENS.len()));
    for (name, args) in common::GOLDENS {
        if let Err(e) = common::check_golden(name, args) {
            c.require(false, e);
        }
    }
    c
}

type Run<'a> = Box<dyn FnOnce() -> Criterion + 'a>;

fn main() -> ExitCode {
    let start = Instant::now();
    let runs = normal_form_runs();
    let criteria: Vec<(&str, Run<'_>)> = vec![
        ("KP-relation soundness", Box::new(kp_relations)),
        ("normal-form shape", Box::new(|| normal_form_shape(&runs))),
        ("termination monotonicity", Box::new(|| measure_monotone(&runs))),
        ("empirical confluence", Box::new(|| confluence(&runs))),
        ("identity oracles", Box::new(identity_oracles)),
        ("class oracle equivalence", Box::new(class_oracles)),
        ("derived pair count", Box::new(derived_count)),
        ("quotient-algebra laws", Box::new(quotient_laws)),
        ("CLI determinism", Box::new(determinism)),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let c = run();
        all &= c.ok;
        let verdict = if c.ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} {name} ({:.1}s)", i + 1, t.elapsed().as_secs_f64());
        for n in &c.notes {
            println!("    {n}");
        }
    }
    println!("acceptance: {} ({:.1}s)", if all { "PASS" } else { "FAIL" }, start.elapsed().as_secs_f64());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
