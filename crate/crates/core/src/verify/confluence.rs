//! Empirical confluence: on words with overlapping redexes, every possible
//! first rewrite must lead to the same normal form.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use super::sample::{LetterKind, PairMode, Sampler};
use super::{run_seeded, CheckConfig, CheckReport, Outcome};
use crate::freealg::{Element, Word};
use crate::rewrite::{all_redexes, apply_rule, normalize, RedexMatch, RuleId};
use crate::ring::Ring;

/// An ambiguity family `(a),(b)`, numbered by rule.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Family(pub u8, pub u8);

fn rule_number(r: RuleId) -> u8 {
    match r {
        RuleId::Compose => 1,
        RuleId::Ortho => 2,
        RuleId::GhostPath => 3,
        RuleId::Expand => 4,
        RuleId::Representative => 5,
    }
}

impl Family {
    pub fn of(a: &RedexMatch, b: &RedexMatch) -> Family {
        let (x, y) = (rule_number(a.rule), rule_number(b.rule));
        Family(x.min(y), x.max(y))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}),({})", self.0, self.1)
    }
}

const KINDS: [LetterKind; 3] = [LetterKind::Vertex, LetterKind::Path, LetterKind::Ghost];
const MODES: [PairMode; 3] = [PairMode::Any, PairMode::NotInA, PairMode::NonRepresentative];

/// A two- or three-letter word with at least two redexes.
fn ambiguous_word(s: &Sampler<'_>, rng: &mut rand_chacha::ChaCha8Rng) -> Option<(Word, Vec<RedexMatch>)> {
    use LetterKind::{Ghost as G, Path as P};
    // Templates where expansions and representative moves overlap with
    // other rules; drawn half of the time, the rest is uniform.
    let focused: [&[LetterKind]; 5] = [&[P, G, P], &[G, P, G], &[P, G], &[P, P, G], &[P, G, G]];
    for _ in 0..1000 {
        let kinds: Vec<LetterKind> = if rng.gen_bool(0.5) {
            focused.choose(rng).unwrap().to_vec()
        } else {
            let len = if rng.gen_bool(0.2) { 2 } else { 3 };
            (0..len).map(|_| *KINDS.choose(rng).unwrap()).collect()
        };
        let modes: Vec<PairMode> = (0..kinds.len()).map(|_| *MODES.choose(rng).unwrap()).collect();
        let w = s.chain(rng, &kinds, &modes, 0.15);
        let redexes = all_redexes(&w);
        if redexes.len() >= 2 {
            return Some((w, redexes));
        }
    }
    None
}

pub fn check_confluence<R: Ring>(cfg: &CheckConfig, ring: &R) -> CheckReport {
    let g = &cfg.graph;
    run_seeded("confluence", cfg, ring, |rng, _| {
        let s = Sampler::new(g, &cfg.window);
        let Some((w, redexes)) = ambiguous_word(&s, rng) else {
            return Outcome::fail("-", "no ambiguous word found");
        };
        let mut picked: Vec<&RedexMatch> = redexes.iter().collect();
        picked.shuffle(rng);
        let family = Family::of(picked[0], picked[1]);
        let x = Element::from_word(ring.clone(), w.clone());
        let reference = match normalize(g, &x) {
            Ok(nf) => nf,
            Err(e) => return Outcome::fail(&w, format!("normalization failed: {e}")),
        };
        // The sampled pair first, then every other redex.
        for r in picked {
            let result = apply_rule(g, ring, &w, r).and_then(|y| normalize(g, &y));
            match result {
                Ok(nf) if nf == reference => {}
                Ok(nf) => {
                    return Outcome::fail(
                        &w,
                        format!(
                            "family {family}: {} at {} gives {nf}, leftmost gives {reference}",
                            r.rule, r.position
                        ),
                    )
                }
                Err(e) => return Outcome::fail(&w, format!("{} at {}: {e}", r.rule, r.position)),
            }
        }
        Outcome::Tally(format!("family {family}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kgraph::GraphConfig;
    use crate::kpalg::Window;
    use crate::ring::Integers;

    #[test]
    fn small_confluence_run() {
        let g = GraphConfig::new(2, 2).unwrap();
        let cfg = CheckConfig::new(g, Window::cube(2, -2, 2, 2).unwrap(), 3, 100);
        let report = check_confluence(&cfg, &Integers);
        assert!(report.passed(), "{report}");
        assert!(report.notes.len() >= 6, "{report}");
    }
}
