//! The five-rule reduction system on `R⟨X⟩` and normalization.
//!
//! Every rule has a two-letter left-hand side:
//!
//! | rule | pattern            | condition                                   |
//! |------|--------------------|---------------------------------------------|
//! | R1   | `λμ`, `μ*λ*`       | composable (vertices count as either kind)  |
//! | R2   | any `xy`           | endpoints differ, result is `0`             |
//! | R3   | `λ*μ`              | `r(λ) = r(μ)`, expands over `S(λ, μ)`       |
//! | R4   | `λμ*`              | `(λ, μ) ∉ A`: peel a common all-ones tail   |
//! | R5   | `λμ*`              | `(λ, μ) ∈ A \ R`: move to the representative|
//!
//! Each rewrite strictly lowers the word measure `(l, e, f, g, h)` of every
//! produced word; [`apply_rule`] checks this and reports an
//! [`Error::OrderingViolation`] otherwise.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canonical::{classify, representative, ClassKey, PairClass, PathPair};
use crate::error::{Error, Result};
use crate::freealg::{Element, Generator, Word};
use crate::kgraph::{compositions, GraphConfig, Point};
use crate::ring::Ring;

pub const DEFAULT_STEP_GUARD: u64 = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum RuleId {
    #[serde(rename = "R1_COMPOSE")]
    Compose,
    #[serde(rename = "R2_ORTHO")]
    Ortho,
    #[serde(rename = "R3_GHOST_PATH")]
    GhostPath,
    #[serde(rename = "R4_EXPAND")]
    Expand,
    #[serde(rename = "R5_REPRESENTATIVE")]
    Representative,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleId::Compose => "R1_COMPOSE",
            RuleId::Ortho => "R2_ORTHO",
            RuleId::GhostPath => "R3_GHOST_PATH",
            RuleId::Expand => "R4_EXPAND",
            RuleId::Representative => "R5_REPRESENTATIVE",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Instance {
    None,
    /// The degree `n` of the all-ones tail peeled by R4.
    Expand(Point),
    /// The class whose representative R5 moves to.
    Representative(ClassKey),
}

/// A rule application site: `position` is the 1-based index of the first
/// of the two matched letters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RedexMatch {
    pub rule: RuleId,
    pub position: usize,
    pub instance: Instance,
}

/// `(l, e, f, g, h)`; the derived order is the lexicographic one used for
/// termination.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct WordMeasure {
    pub len: usize,
    pub entropy: usize,
    pub degree_value: usize,
    pub one_level_value: usize,
    pub ar_value: usize,
}

impl fmt::Display for WordMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.len, self.entropy, self.degree_value, self.one_level_value, self.ar_value
        )
    }
}

fn pair_class(x: &Generator, y: &Generator) -> Option<PairClass> {
    match (x, y) {
        (Generator::Path(l), Generator::Ghost(m)) if l.source() == m.source() => Some(classify(
            &PathPair::new(l.clone(), m.clone()).expect("source-matched nonzero paths"),
        )),
        _ => None,
    }
}

pub fn word_measure(w: &Word) -> WordMeasure {
    let letters = w.letters();
    let mut m = WordMeasure {
        len: letters.len(),
        entropy: 0,
        degree_value: 0,
        one_level_value: 0,
        ar_value: 0,
    };
    for (i, x) in letters.iter().enumerate() {
        if let Generator::Path(p) = x {
            m.entropy += i + 1;
            m.degree_value += p.degree_norm();
            m.one_level_value += p.levels().count_ones();
        }
    }
    m.ar_value = letters
        .windows(2)
        .filter(|xy| pair_class(&xy[0], &xy[1]) == Some(PairClass::NonRepresentative))
        .count();
    m
}

/// Every R4 tail degree for `λμ*`: `0 < n ≤ d(λ) ∧ d(μ)` with the bottom
/// `|n|` levels of both paths equal to 1. With `minimal_only`, just `e_i`
/// for the least admissible `i`.
fn expand_instances(
    lambda: &crate::kgraph::Path,
    mu: &crate::kgraph::Path,
    minimal_only: bool,
) -> Vec<Point> {
    let (ll, ml) = (lambda.levels().low_first(), mu.levels().low_first());
    let ones = ll
        .iter()
        .zip(ml)
        .take_while(|(a, b)| **a == 1 && **b == 1)
        .count();
    if ones == 0 {
        return Vec::new();
    }
    let cap = lambda.degree().meet(&mu.degree());
    let k = cap.dim();
    if minimal_only {
        return cap
            .first_positive()
            .map(|i| vec![Point::unit(k, i)])
            .unwrap_or_default();
    }
    (1..=ones)
        .flat_map(|t| compositions(k, t))
        .map(|c| Point::from_i64s(&c.iter().map(|&x| x as i64).collect::<Vec<_>>()))
        .filter(|n| n.leq(&cap))
        .collect()
}

fn redexes_at(w: &Word, at: usize, all: bool) -> Vec<RedexMatch> {
    let (x, y) = (&w.letters()[at], &w.letters()[at + 1]);
    let position = at + 1;
    let single = |rule| {
        vec![RedexMatch {
            rule,
            position,
            instance: Instance::None,
        }]
    };
    if x.right_end() != y.left_end() {
        return single(RuleId::Ortho);
    }
    match (x, y) {
        (Generator::Vertex(_), _)
        | (_, Generator::Vertex(_))
        | (Generator::Path(_), Generator::Path(_))
        | (Generator::Ghost(_), Generator::Ghost(_)) => single(RuleId::Compose),
        (Generator::Ghost(_), Generator::Path(_)) => single(RuleId::GhostPath),
        (Generator::Path(l), Generator::Ghost(m)) => {
            let pair = PathPair::new(l.clone(), m.clone()).expect("source-matched nonzero paths");
            match classify(&pair) {
                PairClass::Representative => Vec::new(),
                PairClass::NonRepresentative => vec![RedexMatch {
                    rule: RuleId::Representative,
                    position,
                    instance: Instance::Representative(
                        crate::canonical::class_key(&pair).expect("pair is in A"),
                    ),
                }],
                PairClass::NotInA => expand_instances(l, m, !all)
                    .into_iter()
                    .map(|n| RedexMatch {
                        rule: RuleId::Expand,
                        position,
                        instance: Instance::Expand(n),
                    })
                    .collect(),
            }
        }
    }
}

/// The leftmost redex, using the fixed priority and the minimal R4 tail.
pub fn find_redex(w: &Word) -> Option<RedexMatch> {
    (0..w.len().saturating_sub(1)).find_map(|at| redexes_at(w, at, false).into_iter().next())
}

/// Every redex of `w`, including every admissible R4 tail.
pub fn all_redexes(w: &Word) -> Vec<RedexMatch> {
    (0..w.len().saturating_sub(1))
        .flat_map(|at| redexes_at(w, at, true))
        .collect()
}

pub fn is_irreducible(w: &Word) -> bool {
    find_redex(w).is_none()
}

/// The right-hand side of `m` with the context of `w` kept in place.
pub fn apply_rule<R: Ring>(
    graph: &GraphConfig,
    ring: &R,
    w: &Word,
    m: &RedexMatch,
) -> Result<Element<R>> {
    let at = m
        .position
        .checked_sub(1)
        .filter(|&at| at + 1 < w.len())
        .ok_or_else(|| Error::RedexMismatch(format!("position {} in {w}", m.position)))?;
    let valid = redexes_at(w, at, true);
    let found = valid.iter().any(|r| r.rule == m.rule && r.instance == m.instance);
    if !found {
        return Err(Error::RedexMismatch(format!("{} at {} in {w}", m.rule, m.position)));
    }
    let (x, y) = (&w.letters()[at], &w.letters()[at + 1]);
    let mut out = Element::zero(ring.clone());
    let splice = |middle: &[Generator]| -> Option<Word> {
        if middle.is_empty() && w.len() == 2 {
            None
        } else {
            Some(w.splice(at, 2, middle))
        }
    };
    match m.rule {
        RuleId::Ortho => {}
        RuleId::Compose => {
            let letter = match (x, y) {
                (Generator::Ghost(mu), Generator::Ghost(lambda)) => {
                    Generator::Ghost(lambda.compose(mu)?)
                }
                (Generator::Ghost(g), Generator::Vertex(_)) | (Generator::Vertex(_), Generator::Ghost(g)) => {
                    Generator::Ghost(g.clone())
                }
                _ => Generator::of_path(x.path().compose(y.path())?),
            };
            out.add_term(splice(&[letter]).expect("nonempty"), ring.one());
        }
        RuleId::GhostPath => {
            for (alpha, beta) in graph.s_of(x.path(), y.path())? {
                let word = splice(Word::pair(alpha, beta).letters()).expect("nonempty");
                out.add_term(word, ring.one());
            }
        }
        RuleId::Expand => {
            let Instance::Expand(n) = &m.instance else {
                return Err(Error::RedexMismatch("R4 needs a tail degree".into()));
            };
            let (lambda, mu) = (x.path(), y.path());
            let lambda_head = lambda.strip_bottom(n);
            let mu_head = mu.strip_bottom(n);
            let v = lambda_head.source().clone();
            out.add_term(
                splice(Word::pair(lambda_head.clone(), mu_head.clone()).letters()).expect("nonempty"),
                ring.one(),
            );
            for xi in graph.enumerate_paths(&v, n)? {
                if xi.levels().is_all_ones() {
                    continue;
                }
                let word = Word::pair(lambda_head.compose(&xi)?, mu_head.compose(&xi)?);
                out.add_term(splice(word.letters()).expect("nonempty"), ring.minus_one());
            }
        }
        RuleId::Representative => {
            let Instance::Representative(key) = &m.instance else {
                return Err(Error::RedexMismatch("R5 needs a class key".into()));
            };
            let (lambda, mu) = representative(key)?.into_paths();
            out.add_term(splice(Word::pair(lambda, mu).letters()).expect("nonempty"), ring.one());
        }
    }
    let before = word_measure(w);
    for (produced, _) in out.terms() {
        let after = word_measure(produced);
        if after >= before {
            return Err(Error::OrderingViolation {
                rule: m.rule.to_string(),
                position: m.position,
                original: format!("{w} {before}"),
                produced: format!("{produced} {after}"),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    /// Leftmost redex, fixed rule priority, minimal R4 tail.
    Leftmost,
    /// Random pending term and random redex (any R4 tail), seeded.
    Random(u64),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TraceStep {
    pub rule: RuleId,
    pub position: usize,
    pub measure: WordMeasure,
    /// Measures of the words the rewrite produced (before merging).
    pub produced: Vec<WordMeasure>,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule={} pos={} measure={}", self.rule, self.position, self.measure)
    }
}

#[derive(Clone, Debug)]
pub struct Normalized<R: Ring> {
    pub element: Element<R>,
    pub steps: u64,
    pub trace: Vec<TraceStep>,
}

#[derive(Clone, Debug)]
pub struct Normalizer {
    graph: GraphConfig,
    step_guard: u64,
    strategy: Strategy,
    trace: bool,
}

impl Normalizer {
    pub fn new(graph: GraphConfig) -> Self {
        Normalizer {
            graph,
            step_guard: DEFAULT_STEP_GUARD,
            strategy: Strategy::Leftmost,
            trace: false,
        }
    }

    pub fn step_guard(mut self, guard: u64) -> Self {
        self.step_guard = guard;
        self
    }

    pub fn strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn trace(mut self, on: bool) -> Self {
        self.trace = on;
        self
    }

    pub fn graph(&self) -> &GraphConfig {
        &self.graph
    }

    pub fn run<R: Ring>(&self, x: &Element<R>) -> Result<Normalized<R>> {
        let ring = x.ring().clone();
        let mut rng = match self.strategy {
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            Strategy::Leftmost => None,
        };
        let mut done = Element::zero(ring.clone());
        let mut pending = Element::zero(ring.clone());
        for (w, c) in x.terms() {
            if is_irreducible(w) {
                done.add_term(w.clone(), c.clone());
            } else {
                pending.add_term(w.clone(), c.clone());
            }
        }
        let mut steps = 0u64;
        let mut trace = Vec::new();
        loop {
            let next = match rng.as_mut() {
                None => pending.take_last(),
                Some(rng) if !pending.is_empty() => {
                    let i = rng.gen_range(0..pending.len());
                    pending.take_nth(i)
                }
                Some(_) => None,
            };
            let Some((word, coeff)) = next else { break };
            if steps >= self.step_guard {
                return Err(Error::StepGuard(self.step_guard));
            }
            steps += 1;
            let redex = match rng.as_mut() {
                None => find_redex(&word).expect("pending words are reducible"),
                Some(rng) => {
                    let mut all = all_redexes(&word);
                    let i = rng.gen_range(0..all.len());
                    all.swap_remove(i)
                }
            };
            let image = apply_rule(&self.graph, &ring, &word, &redex)?;
            if self.trace {
                trace.push(TraceStep {
                    rule: redex.rule,
                    position: redex.position,
                    measure: word_measure(&word),
                    produced: image.terms().map(|(w, _)| word_measure(w)).collect(),
                });
            }
            for (w, c) in image.terms() {
                let c = ring.mul(&coeff, c);
                if is_irreducible(w) {
                    done.add_term(w.clone(), c);
                } else {
                    pending.add_term(w.clone(), c);
                }
            }
        }
        Ok(Normalized {
            element: done,
            steps,
            trace,
        })
    }

    pub fn normalize<R: Ring>(&self, x: &Element<R>) -> Result<Element<R>> {
        Ok(self.run(x)?.element)
    }
}

/// Normal form with the default strategy and step guard.
pub fn normalize<R: Ring>(graph: &GraphConfig, x: &Element<R>) -> Result<Element<R>> {
    Normalizer::new(*graph).normalize(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kgraph::{Levels, Path};
    use crate::ring::Integers;

    fn pt(c: &[i64]) -> Point {
        Point::from_i64s(c)
    }

    fn path(r: &[i64], s: &[i64], lv: &[u32]) -> Path {
        Path::new(pt(r), pt(s), Levels::from_display(lv)).unwrap()
    }

    fn word(letters: Vec<Generator>) -> Word {
        Word::new(letters).unwrap()
    }

    fn g(k: usize, l: u32) -> GraphConfig {
        GraphConfig::new(k, l).unwrap()
    }

    fn measure(t: [usize; 5]) -> WordMeasure {
        WordMeasure {
            len: t[0],
            entropy: t[1],
            degree_value: t[2],
            one_level_value: t[3],
            ar_value: t[4],
        }
    }

    #[test]
    fn measures() {
        let lam = path(&[1, 1], &[1, 0], &[2]);
        assert_eq!(word_measure(&Word::pair(lam.clone(), lam)), measure([2, 1, 1, 0, 0]));
        let lam2 = path(&[1, 1], &[0, 1], &[2]);
        assert_eq!(word_measure(&Word::pair(lam2.clone(), lam2)), measure([2, 1, 1, 0, 1]));
        let v = word(vec![Generator::vertex(pt(&[0, 0]))]);
        assert_eq!(word_measure(&v), measure([1, 0, 0, 0, 0]));
    }

    #[test]
    fn redex_detection() {
        let a = path(&[2, 1], &[1, 1], &[1]);
        let b = path(&[1, 1], &[0, 1], &[2]);
        let r = find_redex(&word(vec![Generator::Path(a.clone()), Generator::Path(b.clone())])).unwrap();
        assert_eq!((r.rule, r.position), (RuleId::Compose, 1));

        let c = path(&[1, 1], &[1, 0], &[1]);
        let r = find_redex(&word(vec![Generator::Ghost(b.clone()), Generator::Path(c)])).unwrap();
        assert_eq!((r.rule, r.position), (RuleId::GhostPath, 1));

        let ones = path(&[1, 0], &[0, 0], &[1]);
        let r = find_redex(&Word::pair(ones.clone(), ones)).unwrap();
        assert_eq!(r.rule, RuleId::Expand);
        assert_eq!(r.instance, Instance::Expand(pt(&[1, 0])));

        let rep = path(&[1, 1], &[1, 0], &[2]);
        assert!(find_redex(&Word::pair(rep.clone(), rep)).is_none());

        // Leftmost wins even over a higher-priority rule further right.
        let w = word(vec![
            Generator::Path(a.clone()),
            Generator::Path(b.clone()),
            Generator::vertex(pt(&[5, 5])),
        ]);
        assert_eq!(find_redex(&w).unwrap().position, 1);
    }

    #[test]
    fn basic_rewrites() {
        let gr = g(2, 2);
        let v = Generator::vertex(pt(&[0, 0]));
        let w = Generator::vertex(pt(&[1, 0]));
        let vv = word(vec![v.clone(), v.clone()]);
        let m = find_redex(&vv).unwrap();
        assert_eq!(apply_rule(&gr, &Integers, &vv, &m).unwrap(), Element::from_letter(Integers, v.clone()));

        let vw = word(vec![v.clone(), w]);
        let m = find_redex(&vw).unwrap();
        assert_eq!(m.rule, RuleId::Ortho);
        assert!(apply_rule(&gr, &Integers, &vw, &m).unwrap().is_zero());

        // λ*λ rewrites to s(λ)s(λ) by R3, then R1 merges the vertices.
        let lam = path(&[1, 1], &[1, 0], &[2]);
        let gl = word(vec![Generator::Ghost(lam.clone()), Generator::Path(lam.clone())]);
        let m = find_redex(&gl).unwrap();
        let step = apply_rule(&gr, &Integers, &gl, &m).unwrap();
        let s = Generator::Vertex(lam.source_vertex());
        assert_eq!(step, Element::from_word(Integers, word(vec![s.clone(), s.clone()])));
        assert_eq!(normalize(&gr, &Element::from_word(Integers, gl)).unwrap(), Element::from_letter(Integers, s));
    }

    #[test]
    fn mismatched_redex_is_rejected() {
        let gr = g(2, 2);
        let v = Generator::vertex(pt(&[0, 0]));
        let vv = word(vec![v.clone(), v]);
        let bad = RedexMatch {
            rule: RuleId::Ortho,
            position: 1,
            instance: Instance::None,
        };
        assert!(matches!(apply_rule(&gr, &Integers, &vv, &bad), Err(Error::RedexMismatch(_))));
        let out_of_range = RedexMatch {
            rule: RuleId::Compose,
            position: 2,
            instance: Instance::None,
        };
        assert!(apply_rule(&gr, &Integers, &vv, &out_of_range).is_err());
    }

    #[test]
    fn single_path_projection_level_one() {
        let gr = g(1, 1);
        let lam = path(&[1], &[0], &[1]);
        let x = Element::from_word(Integers, Word::pair(lam.clone(), lam));
        assert_eq!(normalize(&gr, &x).unwrap(), Element::from_letter(Integers, Generator::vertex(pt(&[1]))));
    }

    #[test]
    fn non_representative_moves_to_representative() {
        let gr = g(2, 2);
        let lam2 = path(&[1, 1], &[0, 1], &[2]);
        let lam = path(&[1, 1], &[1, 0], &[2]);
        let x = Element::from_word(Integers, Word::pair(lam2.clone(), lam2));
        assert_eq!(normalize(&gr, &x).unwrap(), Element::from_word(Integers, Word::pair(lam.clone(), lam)));
    }

    #[test]
    fn expansion_then_representative() {
        // Hand computation: R4 with n = e_1 gives v(1,0) - ξξ*, ξ = p[(1,0)->(0,0);2];
        // R5 then moves ξξ* to the class representative with source (1,-1).
        let gr = g(2, 2);
        let lam = path(&[1, 0], &[0, 0], &[1]);
        let x = Element::from_word(Integers, Word::pair(lam.clone(), lam));
        let xi = path(&[1, 0], &[1, -1], &[2]);
        let mut expected = Element::from_letter(Integers, Generator::vertex(pt(&[1, 0])));
        expected.add_term(Word::pair(xi.clone(), xi), Integers.minus_one());
        assert_eq!(normalize(&gr, &x).unwrap(), expected);
    }

    #[test]
    fn representative_rewrite_lowers_h_by_one_in_any_context() {
        let lam2 = path(&[1, 1], &[0, 1], &[2]);
        let lam = path(&[1, 1], &[1, 0], &[2]);
        let contexts = [
            vec![],
            vec![Generator::Path(path(&[2, 1], &[1, 1], &[2]))],
            vec![Generator::Path(path(&[2, 2], &[1, 1], &[2, 2])), Generator::Ghost(lam2.clone())],
            vec![Generator::Ghost(lam2.clone())],
        ];
        for left in &contexts {
            for right in &contexts {
                let build = |a: &Path| {
                    let mut v = left.clone();
                    v.extend_from_slice(Word::pair(a.clone(), a.clone()).letters());
                    v.extend_from_slice(right);
                    word(v)
                };
                let before = word_measure(&build(&lam2));
                let after = word_measure(&build(&lam));
                assert_eq!(before.ar_value, after.ar_value + 1);
                assert_eq!(
                    (before.len, before.entropy, before.degree_value, before.one_level_value),
                    (after.len, after.entropy, after.degree_value, after.one_level_value)
                );
            }
        }
    }

    #[test]
    fn step_guard_trips() {
        let gr = g(2, 2);
        let lam = path(&[1, 0], &[0, 0], &[1]);
        let x = Element::from_word(Integers, Word::pair(lam.clone(), lam));
        let err = Normalizer::new(gr).step_guard(1).normalize(&x).unwrap_err();
        assert_eq!(err, Error::StepGuard(1));
    }

    #[test]
    fn all_redexes_lists_every_tail() {
        let lam = path(&[1, 1], &[0, 0], &[1, 1]);
        let found: Vec<Instance> = all_redexes(&Word::pair(lam.clone(), lam))
            .into_iter()
            .map(|r| r.instance)
            .collect();
        assert_eq!(
            found,
            vec![
                Instance::Expand(pt(&[0, 1])),
                Instance::Expand(pt(&[1, 0])),
                Instance::Expand(pt(&[1, 1])),
            ]
        );
    }

    #[test]
    fn trace_records_decreasing_measures() {
        let gr = g(2, 2);
        let lam = path(&[1, 1], &[0, 0], &[1, 1]);
        let x = Element::from_word(Integers, Word::pair(lam.clone(), lam));
        let out = Normalizer::new(gr).trace(true).run(&x).unwrap();
        assert_eq!(out.trace.len() as u64, out.steps);
        for step in &out.trace {
            assert!(step.produced.iter().all(|m| *m < step.measure));
        }
        assert!(out.trace[0].to_string().starts_with("rule=R4_EXPAND pos=1 measure=(2,1,2,2,0)"));
    }
}
