//! Brute-force reference implementations, built straight from the
//! definitions and deliberately independent of the closed forms used by the
//! rewriting code.

use std::collections::{BTreeMap, BTreeSet};

use crate::canonical::PathPair;
use crate::kgraph::{compositions, GraphConfig, Levels, Path, Point};

fn degree_of(c: &[usize]) -> Point {
    Point::from_i64s(&c.iter().map(|&x| x as i64).collect::<Vec<_>>())
}

/// All degrees `n` with `1 <= |n| <= max`.
fn nonzero_degrees(k: usize, max: usize) -> Vec<Point> {
    (1..=max).flat_map(|t| compositions(k, t)).map(|c| degree_of(&c)).collect()
}

/// `{(α, β) | λ∘α = μ∘β, d(λ∘α) = q}` by searching `s(λ)Λ^{q-d(λ)}` and
/// `s(μ)Λ^{q-d(μ)}` for coinciding composites.
pub fn matching_pairs(graph: &GraphConfig, lambda: &Path, mu: &Path, q: &Point) -> Vec<(Path, Path)> {
    if lambda.range() != mu.range() {
        return Vec::new();
    }
    let (da, db) = (q.sub(&lambda.degree()), q.sub(&mu.degree()));
    if !da.is_nonneg() || !db.is_nonneg() {
        return Vec::new();
    }
    let alphas = graph.enumerate_paths(lambda.source(), &da).expect("valid degree");
    let betas = graph.enumerate_paths(mu.source(), &db).expect("valid degree");
    let mut by_composite: BTreeMap<Path, Vec<Path>> = BTreeMap::new();
    for a in alphas {
        by_composite.entry(lambda.compose(&a).expect("composable")).or_default().push(a);
    }
    let mut out = Vec::new();
    for b in betas {
        let composite = mu.compose(&b).expect("composable");
        if let Some(alphas) = by_composite.get(&composite) {
            out.extend(alphas.iter().map(|a| (a.clone(), b.clone())));
        }
    }
    out.sort();
    out
}

/// `S(λ, μ)` from its definition.
pub fn s_of_brute(graph: &GraphConfig, lambda: &Path, mu: &Path) -> Vec<(Path, Path)> {
    let q = lambda.degree().join(&mu.degree());
    matching_pairs(graph, lambda, mu, &q)
}

/// `S(v, w, m, n, p, q)` by filtering `vΛ^m × wΛ^n`.
pub fn s_set_brute(
    graph: &GraphConfig,
    v: &Point,
    w: &Point,
    m: &Point,
    n: &Point,
    p: &Levels,
    q: &Levels,
) -> Vec<(Path, Path)> {
    let alphas = graph.enumerate_paths(v, m).expect("valid degree");
    let betas = graph.enumerate_paths(w, n).expect("valid degree");
    let mut out = Vec::new();
    for a in &alphas {
        let la = a.levels();
        if la.len() < p.len() || la.high_part(p.len()) != *p {
            continue;
        }
        let r = la.low_part(la.len() - p.len());
        for b in &betas {
            let lb = b.levels();
            if lb.len() == q.len() + r.len() && lb.high_part(q.len()) == *q && lb.low_part(r.len()) == r {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out.sort();
    out
}

/// Membership in `A` by searching for a common all-ones tail `λ^{~,n}`.
pub fn in_a_brute(graph: &GraphConfig, pair: &PathPair) -> bool {
    let (l, m) = (pair.left(), pair.right());
    let max = l.degree_norm().min(m.degree_norm());
    for n in nonzero_degrees(graph.k(), max) {
        if !n.leq(&l.degree()) || !n.leq(&m.degree()) {
            continue;
        }
        let tail = |p: &Path| p.factorize(&p.degree().sub(&n), &n).expect("n <= d").1;
        let (tl, tm) = (tail(l), tail(m));
        if tl.levels().is_all_ones() && tm.levels().is_all_ones() {
            return false;
        }
    }
    true
}

/// `{(λ∘λ^{~,m}, μ∘λ^{~,m}) | 1 <= |m| <= max}`; two pairs of `A` are
/// equivalent exactly when their witness sets meet.
pub fn witnesses(graph: &GraphConfig, pair: &PathPair, max: usize) -> BTreeSet<(Path, Path)> {
    let s = pair.source();
    nonzero_degrees(graph.k(), max)
        .into_iter()
        .map(|m| {
            let tail = graph.all_ones_path(s, &m).expect("valid degree");
            (
                pair.left().compose(&tail).expect("composable"),
                pair.right().compose(&tail).expect("composable"),
            )
        })
        .collect()
}

pub fn equivalent_brute(graph: &GraphConfig, a: &PathPair, b: &PathPair, max: usize) -> bool {
    let wa = witnesses(graph, a, max);
    witnesses(graph, b, max).iter().any(|w| wa.contains(w))
}
