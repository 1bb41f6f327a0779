//! The defining relations (KP1)-(KP4), instantiated exhaustively inside a
//! window, must all normalize to zero.

use std::time::Instant;

use rayon::prelude::*;

use super::{aggregate, CheckConfig, CheckReport, Outcome};
use crate::freealg::{Element, Generator, Word};
use crate::kgraph::{degrees_up_to, GraphConfig, Path, Point};
use crate::rewrite::normalize;
use crate::ring::Ring;

/// Degrees above this are not instantiated, whatever the window says.
pub const RELATION_DEGREE_CAP: usize = 2;

fn letters<R: Ring>(ring: &R, gens: Vec<Generator>) -> Element<R> {
    Element::from_word(ring.clone(), Word::new(gens).expect("nonempty"))
}

fn windowed_paths(graph: &GraphConfig, cfg: &CheckConfig, bound: usize) -> Vec<Path> {
    let mut out = Vec::new();
    for v in cfg.window.vertices() {
        for n in degrees_up_to(graph.k(), bound) {
            if n.is_zero() || !cfg.window.contains(&v.sub(&n)) {
                continue;
            }
            out.extend(graph.enumerate_paths(&v, &n).expect("valid degree"));
        }
    }
    out
}

/// Every relation instance as `(label, lhs - rhs)`.
fn instances<R: Ring>(cfg: &CheckConfig, ring: &R) -> Vec<(String, Element<R>)> {
    let g = &cfg.graph;
    let bound = cfg.window.degree_bound().min(RELATION_DEGREE_CAP);
    let vertices = cfg.window.vertices();
    let paths = windowed_paths(g, cfg, bound);
    let vx = |p: &Point| Generator::vertex(p.clone());
    let mut out: Vec<(String, Element<R>)> = Vec::new();
    let mut push = |label: String, lhs: Element<R>, rhs: Element<R>| {
        out.push((label, lhs.sub(&rhs).expect("same ring")));
    };
    let zero = Element::zero(ring.clone());

    for v in &vertices {
        for w in &vertices {
            let prod = letters(ring, vec![vx(v), vx(w)]);
            if v == w {
                push(format!("KP1 {v}.{v} = {v}"), prod, letters(ring, vec![vx(v)]));
            } else {
                push(format!("KP1 {v}.{w} = 0"), prod, zero.clone());
            }
        }
    }

    for l in &paths {
        let (pl, gl) = (Generator::Path(l.clone()), Generator::Ghost(l.clone()));
        let (r, s) = (vx(l.range()), vx(l.source()));
        push(format!("KP2 r.{l} = {l}"), letters(ring, vec![r.clone(), pl.clone()]), letters(ring, vec![pl.clone()]));
        push(format!("KP2 {l}.s = {l}"), letters(ring, vec![pl.clone(), s.clone()]), letters(ring, vec![pl.clone()]));
        push(format!("KP2 s.{l}* = {l}*"), letters(ring, vec![s, gl.clone()]), letters(ring, vec![gl.clone()]));
        push(format!("KP2 {l}*.r = {l}*"), letters(ring, vec![gl.clone(), r]), letters(ring, vec![gl.clone()]));
        for m in paths.iter().filter(|m| m.range() == l.source()) {
            let c = l.compose(m).expect("composable");
            push(
                format!("KP2 {l}.{m} = {c}"),
                letters(ring, vec![pl.clone(), Generator::Path(m.clone())]),
                letters(ring, vec![Generator::Path(c.clone())]),
            );
            push(
                format!("KP2 {m}*.{l}* = {c}*"),
                letters(ring, vec![Generator::Ghost(m.clone()), gl.clone()]),
                letters(ring, vec![Generator::Ghost(c)]),
            );
        }
        for m in paths.iter().filter(|m| m.degree() == l.degree()) {
            let lhs = letters(ring, vec![gl.clone(), Generator::Path(m.clone())]);
            let rhs = if l == m {
                letters(ring, vec![vx(l.source())])
            } else {
                zero.clone()
            };
            push(format!("KP3 {l}*.{m}"), lhs, rhs);
        }
    }

    for v in &vertices {
        for n in degrees_up_to(g.k(), bound) {
            if n.is_zero() {
                continue;
            }
            let mut sum = Element::zero(ring.clone());
            for l in g.enumerate_paths(v, &n).expect("valid degree") {
                sum.add_term(Word::pair(l.clone(), l), ring.one());
            }
            push(format!("KP4 {v} n={n}"), letters(ring, vec![vx(v)]), sum);
        }
    }
    out
}

pub fn check_kp_relations<R: Ring>(cfg: &CheckConfig, ring: &R) -> CheckReport {
    let start = Instant::now();
    let g = &cfg.graph;
    let outcomes: Vec<(usize, Outcome)> = instances(cfg, ring)
        .into_par_iter()
        .enumerate()
        .map(|(i, (label, diff))| {
            let o = match normalize(g, &diff) {
                Ok(nf) if nf.is_zero() => Outcome::Tally(label[..3].to_string()),
                Ok(nf) => Outcome::fail(&label, format!("difference normalizes to {nf}")),
                Err(e) => Outcome::fail(&label, format!("normalization failed: {e}")),
            };
            (i, o)
        })
        .collect();
    let repro = format!(
        "kpalg check kp --k {} --level {} --ring {ring} --window={} --degree-bound {}",
        g.k(),
        g.level(),
        cfg.window_arg(),
        cfg.window.degree_bound()
    );
    let mut report = aggregate("kp", None, outcomes, |_| repro.clone());
    report.wall_time = start.elapsed();
    report
}
