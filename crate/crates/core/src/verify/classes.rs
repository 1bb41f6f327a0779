//! Exhaustive comparisons of the closed-form class machinery (membership in
//! `A`, class keys, class counts) with definitional searches.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::oracle::{equivalent_brute, in_a_brute, witnesses};
use super::{aggregate, CheckReport, Outcome};
use crate::canonical::{class_key, in_a, ClassKey, PathPair};
use crate::error::Result;
use crate::kgraph::{degrees_up_to, level_vectors, GraphConfig, Path, Point};
use crate::kpalg::{enumerate_basis_filtered, BasisFilter, BasisShape, BasisWord, Window};

/// Witness search depth for `~`: `1 <= |m|, |n| <= WITNESS_DEPTH`.
pub const WITNESS_DEPTH: usize = 3;

/// Every source-matched pair of nonzero paths with all three vertices in the
/// window and `|d| <= window.degree_bound()`.
fn universe(graph: &GraphConfig, window: &Window) -> Vec<PathPair> {
    let mut out = Vec::new();
    let degrees: Vec<Point> = degrees_up_to(graph.k(), window.degree_bound())
        .into_iter()
        .filter(|d| !d.is_zero())
        .collect();
    for s in window.vertices() {
        let mut paths = Vec::new();
        for d in &degrees {
            let r = s.add(d);
            if window.contains(&r) {
                paths.extend(graph.enumerate_paths(&r, d).expect("valid degree"));
            }
        }
        for l in &paths {
            for m in &paths {
                out.push(PathPair::new(l.clone(), m.clone()).expect("matched nonzero paths"));
            }
        }
    }
    out
}

/// Membership in `A` agrees with the tail search, and key equality agrees
/// with the witness search, over every pair in the window; pairs with
/// `d(λ) ∧ d(μ) = 0` form singleton classes.
pub fn check_class_oracles(graph: &GraphConfig, window: &Window) -> CheckReport {
    let start = Instant::now();
    let pairs = universe(graph, window);
    let member: Vec<bool> = pairs.par_iter().map(in_a).collect();
    let in_a_pairs: Vec<usize> = (0..pairs.len()).filter(|&i| member[i]).collect();
    let depth = WITNESS_DEPTH.max(window.degree_bound());

    let wits: Vec<BTreeSet<(Path, Path)>> = in_a_pairs
        .par_iter()
        .map(|&i| witnesses(graph, &pairs[i], depth))
        .collect();
    let mut by_witness: BTreeMap<&(Path, Path), BTreeSet<usize>> = BTreeMap::new();
    let mut by_key: BTreeMap<ClassKey, BTreeSet<usize>> = BTreeMap::new();
    for (j, &i) in in_a_pairs.iter().enumerate() {
        for w in &wits[j] {
            by_witness.entry(w).or_default().insert(j);
        }
        by_key.entry(class_key(&pairs[i]).expect("in A")).or_default().insert(j);
    }

    let mut outcomes: Vec<(usize, Outcome)> = (0..pairs.len())
        .into_par_iter()
        .map(|i| {
            let brute = in_a_brute(graph, &pairs[i]);
            let o = if brute != member[i] {
                Outcome::fail(&pairs[i], format!("in_a = {} but tail search says {brute}", member[i]))
            } else if member[i] {
                Outcome::Tally("pairs in A".into())
            } else {
                Outcome::Tally("pairs outside A".into())
            };
            (i, o)
        })
        .collect();

    let class_outcomes: Vec<(usize, Outcome)> = in_a_pairs
        .par_iter()
        .enumerate()
        .map(|(j, &i)| {
            let pair = &pairs[i];
            let mut related = BTreeSet::new();
            for w in &wits[j] {
                related.extend(by_witness[w].iter().copied());
            }
            let key = class_key(pair).expect("in A");
            let same_key = &by_key[&key];
            if &related != same_key {
                let odd = related.symmetric_difference(same_key).next().copied().expect("sets differ");
                return (
                    pairs.len() + j,
                    Outcome::fail(pair, format!("witness search and class key disagree on {}", pairs[in_a_pairs[odd]])),
                );
            }
            let meet_zero = pair.left().degree().meet(&pair.right().degree()).is_zero();
            if meet_zero {
                match key.members() {
                    Ok(m) if m.len() == 1 && &m[0] == pair => {}
                    Ok(m) => {
                        return (pairs.len() + j, Outcome::fail(pair, format!("expected a singleton class, found {}", m.len())))
                    }
                    Err(e) => return (pairs.len() + j, Outcome::fail(pair, e.to_string())),
                }
                return (pairs.len() + j, Outcome::Tally("singleton classes".into()));
            }
            (pairs.len() + j, Outcome::Pass)
        })
        .collect();
    outcomes.extend(class_outcomes);

    let repro = format!("k={} level={} window=[{}, {}]", graph.k(), graph.level(), window.lo(), window.hi());
    let mut report = aggregate("class-oracles", None, outcomes, |_| repro.clone());
    report.wall_time = start.elapsed();
    report
}

/// Classes of `A` with ranges `0` and `b - a` and degrees `a`, `b` in the
/// rank-one graph, counted by grouping definitionally equivalent pairs.
pub fn pair_class_count_brute(level: u32, a: usize, b: usize) -> Result<usize> {
    let graph = GraphConfig::new(1, level)?;
    let source = Point::from_i64s(&[-(a as i64)]);
    let rl = Point::from_i64s(&[0]);
    let rm = Point::from_i64s(&[b as i64 - a as i64]);
    let mut pairs = Vec::new();
    for ll in level_vectors(a, level) {
        for ml in level_vectors(b, level) {
            let pair = PathPair::new(
                Path::new(rl.clone(), source.clone(), ll.clone())?,
                Path::new(rm.clone(), source.clone(), ml)?,
            )?;
            if in_a_brute(&graph, &pair) {
                pairs.push(pair);
            }
        }
    }
    // Union-find over the witness relation.
    let mut parent: Vec<usize> = (0..pairs.len()).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..pairs.len() {
        for j in 0..i {
            if equivalent_brute(&graph, &pairs[i], &pairs[j], WITNESS_DEPTH) {
                let (x, y) = (root(&mut parent, i), root(&mut parent, j));
                parent[x] = y;
            }
        }
    }
    Ok((0..pairs.len()).filter(|&i| root(&mut parent, i) == i).count())
}

/// For each degree pair `(a, b)` up to `max_degree`: the enumerated basis,
/// the brute-force class count and `l^{a+b} - l^{a+b-2}` agree.
pub fn check_pair_counts(level: u32, max_degree: usize) -> CheckReport {
    let start = Instant::now();
    let graph = GraphConfig::new(1, level).expect("level >= 1");
    let mut outcomes = Vec::new();
    let mut case = 0;
    for a in 1..=max_degree {
        for b in 1..=max_degree {
            let span = (a + b) as i64;
            let window = Window::cube(1, -span, span, a.max(b)).expect("valid window");
            let filter = BasisFilter {
                shapes: Some(vec![BasisShape::Pair]),
                range_left: Some(Point::from_i64s(&[0])),
                range_right: Some(Point::from_i64s(&[b as i64 - a as i64])),
            };
            let enumerated = enumerate_basis_filtered(&graph, &window, &filter).map(|words| {
                words
                    .iter()
                    .filter(|w| matches!(w, BasisWord::Pair(p) if p.left().degree_norm() == a && p.right().degree_norm() == b))
                    .count()
            });
            let l = BigInt::from(level);
            let formula = l.pow((a + b) as u32) - l.pow((a + b - 2) as u32);
            let input = format!("a={a} b={b}");
            let o = match (enumerated, pair_class_count_brute(level, a, b)) {
                (Ok(e), Ok(brute)) if BigInt::from(e) == formula && e == brute => Outcome::Tally(format!("a={a} b={b} classes={e}")),
                (Ok(e), Ok(brute)) => Outcome::fail(input, format!("enumerated {e}, brute force {brute}, formula {formula}")),
                (Err(e), _) | (_, Err(e)) => Outcome::fail(input, e.to_string()),
            };
            outcomes.push((case, o));
            case += 1;
        }
    }
    let mut report = aggregate("pair-counts", None, outcomes, |_| format!("level={level}"));
    report.wall_time = start.elapsed();
    report
}
