//! Identities between sums of `αβ*` terms. Both sides are built without the
//! rewriting code (right-hand sides by exhaustive search) and compared after
//! normalization.

use rand::seq::SliceRandom;
use rand::Rng;

use super::oracle::{matching_pairs, s_set_brute};
use super::sample::Sampler;
use super::{run_seeded, CheckConfig, CheckReport, Outcome};
use crate::canonical::class_key;
use crate::freealg::{Element, Generator, Word};
use crate::kgraph::{GraphConfig, Levels, Path, Point};
use crate::rewrite::normalize;
use crate::ring::Ring;

pub(crate) fn sum_of_pairs<R: Ring>(ring: &R, pairs: &[(Path, Path)]) -> Element<R> {
    let mut x = Element::zero(ring.clone());
    for (a, b) in pairs {
        x.add_term(Word::pair(a.clone(), b.clone()), ring.one());
    }
    x
}

pub(crate) fn compare<R: Ring>(
    graph: &GraphConfig,
    input: String,
    lhs: &Element<R>,
    rhs: &Element<R>,
) -> Outcome {
    match (normalize(graph, lhs), normalize(graph, rhs)) {
        (Ok(a), Ok(b)) if a == b => Outcome::Pass,
        (Ok(a), Ok(b)) => Outcome::fail(input, format!("normal forms differ: {a} vs {b}")),
        (Err(e), _) | (_, Err(e)) => Outcome::fail(input, format!("normalization failed: {e}")),
    }
}

fn random_units(rng: &mut impl Rng, k: usize) -> Point {
    Point::from_i64s(&(0..k).map(|_| rng.gen_range(0..=1)).collect::<Vec<_>>())
}

/// `λ*μ = Σ_{λ∘α = μ∘β, d(λ∘α) = q} αβ*` for `d(λ) ∨ d(μ) <= q <= d(λ) ∨ d(μ) + (1,...,1)`.
pub fn check_lemma3<R: Ring>(cfg: &CheckConfig, ring: &R) -> CheckReport {
    let g = &cfg.graph;
    run_seeded("lemma3", cfg, ring, |rng, _| {
        let s = Sampler::new(g, &cfg.window);
        let b = s.bound();
        let r = s.vertex(rng);
        let dl = s.degree(rng, 0, b);
        let lam = s.path_from(rng, &r, &dl);
        let dm = s.degree(rng, 0, b);
        let mu = if rng.gen_bool(0.5) {
            let len = usize::try_from(dm.norm()).expect("small degree");
            let lv = s.compatible_levels(rng, lam.levels(), len);
            Path::new(r.clone(), r.sub(&dm), lv).expect("valid shape")
        } else {
            s.path_from(rng, &r, &dm)
        };
        let q = dl.join(&dm).add(&random_units(rng, g.k()));
        let lhs = Element::from_word(
            ring.clone(),
            Word::new(vec![Generator::ghost_of(lam.clone()), Generator::of_path(mu.clone())]).expect("nonempty"),
        );
        let rhs = sum_of_pairs(ring, &matching_pairs(g, &lam, &mu, &q));
        match compare(g, format!("lambda={lam} mu={mu} q={q}"), &lhs, &rhs) {
            Outcome::Pass if !rhs.is_zero() => Outcome::Tally("nonempty sums".into()),
            other => other,
        }
    })
}

/// Equivalent pairs of `A` give equal `λμ*`.
pub fn check_lemma8<R: Ring>(cfg: &CheckConfig, ring: &R) -> CheckReport {
    let g = &cfg.graph;
    run_seeded("lemma8", cfg, ring, |rng, _| {
        let s = Sampler::new(g, &cfg.window);
        let Some(pair) = s.a_pair(rng) else {
            return Outcome::Tally("no pair in A found".into());
        };
        let key = class_key(&pair).expect("sampled in A");
        let members = match key.members() {
            Ok(m) => m,
            Err(e) => return Outcome::fail(&key, format!("cannot list class: {e}")),
        };
        let a = members.choose(rng).expect("class is nonempty").clone();
        let b = members.choose(rng).expect("class is nonempty").clone();
        let word = |p: &crate::canonical::PathPair| {
            Element::from_word(ring.clone(), Word::pair(p.left().clone(), p.right().clone()))
        };
        match compare(g, format!("{a} ~ {b}"), &word(&a), &word(&b)) {
            Outcome::Pass if members.len() > 1 => Outcome::Tally("multi-member classes".into()),
            other => other,
        }
    })
}

/// A random `n̂ <= cap` with `|n̂| = norm`.
fn random_below(rng: &mut impl Rng, cap: &Point, norm: usize) -> Point {
    let k = cap.dim();
    let mut out = Point::zero(k);
    for _ in 0..norm {
        let open: Vec<usize> = (1..=k).filter(|&i| out.coord(i - 1) < cap.coord(i - 1)).collect();
        let i = *open.choose(rng).expect("norm <= |cap|");
        out = out.add(&Point::unit(k, i));
    }
    out
}

/// Shrinking both degrees of an S-set by a common `n̂` keeps the sum.
pub fn check_lemma12<R: Ring>(cfg: &CheckConfig, ring: &R) -> CheckReport {
    let g = &cfg.graph;
    run_seeded("lemma12", cfg, ring, |rng, _| {
        let s = Sampler::new(g, &cfg.window);
        let b = s.bound();
        let v = s.vertex(rng);
        let w = s.vertex(rng);
        let m = s.degree(rng, 0, b);
        let mm = usize::try_from(m.norm()).expect("small degree");
        let sl = rng.gen_range(0..=mm);
        let rlen = mm - sl;
        let t = rng.gen_range(0..=b);
        let n = s.degree(rng, t + rlen, t + rlen);
        let p = s.levels(rng, sl);
        let q = s.levels(rng, t);
        let cap = m.meet(&n);
        let most = rlen.min(usize::try_from(cap.norm()).expect("small degree"));
        let h = if most > 0 && rng.gen_bool(0.8) {
            rng.gen_range(1..=most)
        } else {
            rng.gen_range(0..=most)
        };
        let nhat = random_below(rng, &cap, h);
        let input = format!("v={v} w={w} m={m} n={n} p=({p}) q=({q}) nhat={nhat}");
        let left = s_set_brute(g, &v, &w, &m, &n, &p, &q);
        let mut closed = match g.s_set(&v, &w, &m, &n, &p, &q) {
            Ok(c) => c,
            Err(e) => return Outcome::fail(input, format!("s_set rejected valid parameters: {e}")),
        };
        closed.sort();
        if closed != left {
            return Outcome::fail(input, "closed-form S-set differs from the searched one");
        }
        let right = s_set_brute(g, &v, &w, &m.sub(&nhat), &n.sub(&nhat), &p, &q);
        match compare(g, input, &sum_of_pairs(ring, &left), &sum_of_pairs(ring, &right)) {
            Outcome::Pass if h > 0 => Outcome::Tally("nonzero shrink".into()),
            other => other,
        }
    })
}

/// The paths `ξ_{p,q}` for `n = e_{i_1} + ... + e_{i_{|n|}}`, `i` increasing.
pub(crate) fn telescoping_tails(graph: &GraphConfig, v: &Point, n: &Point) -> Vec<Path> {
    let k = graph.k();
    let idx: Vec<usize> = (1..=k)
        .flat_map(|i| std::iter::repeat_n(i, usize::try_from(n.coord(i - 1)).expect("small degree")))
        .collect();
    let mut out = Vec::new();
    let mut deg = Point::zero(k);
    for p in 1..=idx.len() {
        deg = deg.add(&Point::unit(k, idx[idx.len() - p]));
        for q in 2..=graph.level() {
            let mut lv = vec![1; p - 1];
            lv.push(q);
            out.push(Path::new(v.clone(), v.sub(&deg), Levels::from_display(&lv)).expect("valid shape"));
        }
    }
    out
}

/// `Σ_{ξ ∈ vΛ^n, ξ ≠ λ^{v,n}} (λ∘ξ)(μ∘ξ)* = Σ_{p,q} (λ∘ξ_{p,q})(μ∘ξ_{p,q})*`.
pub fn check_lemma13<R: Ring>(cfg: &CheckConfig, ring: &R) -> CheckReport {
    let g = &cfg.graph;
    run_seeded("lemma13", cfg, ring, |rng, _| {
        let s = Sampler::new(g, &cfg.window);
        let b = s.bound().max(1);
        let v = s.vertex(rng);
        let n = s.degree(rng, 1, b);
        let dl = s.degree(rng, 0, b);
        let dm = s.degree(rng, 0, b);
        let lam = s.path_to(rng, &v, &dl);
        let mu = s.path_to(rng, &v, &dm);
        let term = |xi: &Path| {
            Word::pair(lam.compose(xi).expect("composable"), mu.compose(xi).expect("composable"))
        };
        let mut lhs = Element::zero(ring.clone());
        for xi in g.enumerate_paths(&v, &n).expect("valid degree") {
            if !xi.levels().is_all_ones() {
                lhs.add_term(term(&xi), ring.one());
            }
        }
        let mut rhs = Element::zero(ring.clone());
        for xi in telescoping_tails(g, &v, &n) {
            rhs.add_term(term(&xi), ring.one());
        }
        compare(g, format!("lambda={lam} mu={mu} n={n}"), &lhs, &rhs)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kpalg::Window;
    use crate::ring::Integers;

    #[test]
    fn tails_for_two_steps() {
        let g = GraphConfig::new(2, 2).unwrap();
        let v = Point::from_i64s(&[0, 0]);
        let tails = telescoping_tails(&g, &v, &Point::from_i64s(&[1, 1]));
        let shown: Vec<String> = tails.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["p[(0,0)->(0,-1);2]", "p[(0,0)->(-1,-1);1,2]"]);
        let g1 = GraphConfig::new(2, 1).unwrap();
        assert!(telescoping_tails(&g1, &v, &Point::from_i64s(&[1, 1])).is_empty());
    }

    #[test]
    fn identity_checks_small() {
        for (k, l) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let g = GraphConfig::new(k, l).unwrap();
            let cfg = CheckConfig::new(g, Window::cube(k, -2, 2, 2).unwrap(), 7, 40);
            for report in [
                check_lemma3(&cfg, &Integers),
                check_lemma8(&cfg, &Integers),
                check_lemma12(&cfg, &Integers),
                check_lemma13(&cfg, &Integers),
            ] {
                assert!(report.passed(), "{report}");
                assert_eq!(report.cases, 40);
            }
        }
    }
}
