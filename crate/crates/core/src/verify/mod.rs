//! Executable consistency checks: algebraic identities with brute-force right
//! hand sides, empirical confluence over the ambiguity families, and the
//! defining relations of the algebra.
//!
//! Each check returns a [`CheckReport`]. Randomized checks draw every case
//! from its own stream of a single seed, run cases in parallel and collect
//! results by case index, so reports depend only on the configuration.

mod classes;
mod confluence;
mod laws;
mod identities;
pub mod oracle;
mod relations;
pub mod sample;

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::kgraph::GraphConfig;
use crate::kpalg::Window;
use crate::ring::Ring;

pub use classes::{check_class_oracles, check_pair_counts, pair_class_count_brute};
pub use confluence::{check_confluence, Family};
pub use laws::{check_normal_forms, check_quotient_laws};
pub use identities::{check_lemma12, check_lemma13, check_lemma3, check_lemma8};
pub use relations::check_kp_relations;

/// Parameters shared by every check.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub graph: GraphConfig,
    pub window: Window,
    pub seed: u64,
    pub cases: usize,
    /// Run only this case index (for reproducing a failure).
    pub only_case: Option<usize>,
}

impl CheckConfig {
    pub fn new(graph: GraphConfig, window: Window, seed: u64, cases: usize) -> Self {
        CheckConfig {
            graph,
            window,
            seed,
            cases,
            only_case: None,
        }
    }

    fn case_indices(&self) -> Vec<usize> {
        match self.only_case {
            Some(i) => vec![i],
            None => (0..self.cases).collect(),
        }
    }

    /// `--window` argument reproducing this window.
    pub fn window_arg(&self) -> String {
        let (lo, hi) = (self.window.lo().coords(), self.window.hi().coords());
        let uniform = lo.iter().all(|c| c == &lo[0]) && hi.iter().all(|c| c == &hi[0]);
        if uniform {
            format!("{}..{}", lo[0], hi[0])
        } else {
            let join = |v: &[num_bigint::BigInt]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
            format!("{}..{}", join(lo), join(hi))
        }
    }

    fn repro<R: Ring>(&self, name: &str, ring: &R, case: Option<usize>) -> String {
        let mut cmd = format!(
            "kpalg check {name} --k {} --level {} --ring {ring} --window={} --degree-bound {} --seed {} --cases {}",
            self.graph.k(),
            self.graph.level(),
            self.window_arg(),
            self.window.degree_bound(),
            self.seed,
            self.cases
        );
        if let Some(i) = case {
            cmd.push_str(&format!(" --case {i}"));
        }
        cmd
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Failure {
    pub case: usize,
    pub input: String,
    pub detail: String,
    pub repro: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub seed: Option<u64>,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Extra tallies, e.g. how many instances each ambiguity family got.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<(String, usize)>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn note(&self, key: &str) -> usize {
        self.notes.iter().find(|(k, _)| k == key).map_or(0, |(_, n)| *n)
    }
}

impl fmt::Display for CheckReport {
    /// Line-oriented text; wall time is left out so output is reproducible.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "check {}: {verdict} cases={}", self.name, self.cases)?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        write!(f, " failures={}", self.failures.len())?;
        for (k, n) in &self.notes {
            write!(f, "\n  {k}: {n}")?;
        }
        for fail in &self.failures {
            write!(
                f,
                "\n  case {}: input={}\n    detail: {}\n    repro: {}",
                fail.case, fail.input, fail.detail, fail.repro
            )?;
        }
        Ok(())
    }
}

/// What one case produced.
pub(crate) enum Outcome {
    Pass,
    /// Passed; counts towards the named tally.
    Tally(String),
    Fail { input: String, detail: String },
}

impl Outcome {
    pub(crate) fn fail(input: impl fmt::Display, detail: impl Into<String>) -> Outcome {
        Outcome::Fail {
            input: input.to_string(),
            detail: detail.into(),
        }
    }
}

/// Run `case` for every index in parallel and aggregate by index.
pub(crate) fn run_seeded<R: Ring, F>(name: &str, cfg: &CheckConfig, ring: &R, case: F) -> CheckReport
where
    F: Fn(&mut rand_chacha::ChaCha8Rng, usize) -> Outcome + Sync,
{
    let start = Instant::now();
    let indices = cfg.case_indices();
    let outcomes: Vec<(usize, Outcome)> = indices
        .par_iter()
        .map(|&i| {
            let mut rng = sample::case_rng(cfg.seed, i);
            (i, case(&mut rng, i))
        })
        .collect();
    let mut report = aggregate(name, Some(cfg.seed), outcomes, |i| cfg.repro(name, ring, Some(i)));
    report.wall_time = start.elapsed();
    report
}

pub(crate) fn aggregate(
    name: &str,
    seed: Option<u64>,
    outcomes: Vec<(usize, Outcome)>,
    repro: impl Fn(usize) -> String,
) -> CheckReport {
    let mut failures = Vec::new();
    let mut notes: Vec<(String, usize)> = Vec::new();
    let cases = outcomes.len();
    for (i, o) in outcomes {
        match o {
            Outcome::Pass => {}
            Outcome::Tally(key) => match notes.iter_mut().find(|(k, _)| *k == key) {
                Some((_, n)) => *n += 1,
                None => notes.push((key, 1)),
            },
            Outcome::Fail { input, detail } => failures.push(Failure {
                case: i,
                input,
                detail,
                repro: repro(i),
            }),
        }
    }
    notes.sort();
    CheckReport {
        name: name.to_string(),
        seed,
        cases,
        failures,
        notes,
        wall_time: Duration::ZERO,
    }
}

/// The named checks exposed on the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckName {
    Lemma3,
    Lemma8,
    Lemma12,
    Lemma13,
    Confluence,
    Kp,
}

impl CheckName {
    pub const ALL: [CheckName; 6] = [
        CheckName::Lemma3,
        CheckName::Lemma8,
        CheckName::Lemma12,
        CheckName::Lemma13,
        CheckName::Confluence,
        CheckName::Kp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Lemma3 => "lemma3",
            CheckName::Lemma8 => "lemma8",
            CheckName::Lemma12 => "lemma12",
            CheckName::Lemma13 => "lemma13",
            CheckName::Confluence => "confluence",
            CheckName::Kp => "kp",
        }
    }

    pub fn parse(s: &str) -> Option<CheckName> {
        CheckName::ALL.into_iter().find(|c| c.as_str() == s)
    }

    pub fn run<R: Ring>(self, cfg: &CheckConfig, ring: &R) -> CheckReport {
        match self {
            CheckName::Lemma3 => check_lemma3(cfg, ring),
            CheckName::Lemma8 => check_lemma8(cfg, ring),
            CheckName::Lemma12 => check_lemma12(cfg, ring),
            CheckName::Lemma13 => check_lemma13(cfg, ring),
            CheckName::Confluence => check_confluence(cfg, ring),
            CheckName::Kp => check_kp_relations(cfg, ring),
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
