//! Properties of normalization itself and of the quotient multiplication.

use num_bigint::BigInt;
use rand::Rng;

use super::sample::Sampler;
use super::{run_seeded, CheckConfig, CheckReport, Outcome};
use crate::freealg::Element;
use crate::kpalg::{is_basis_word, KpAlgebra};
use crate::rewrite::{Normalizer, Strategy};
use crate::ring::{Integers, IntegersMod, Ring};

/// Random elements (up to four terms of up to four letters) normalize to
/// basis words; every recorded step lowers the measure of each word it
/// produces; normal forms are fixed points; a randomized strategy reaches
/// the same normal form.
pub fn check_normal_forms<R: Ring>(cfg: &CheckConfig, ring: &R) -> CheckReport {
    let g = &cfg.graph;
    run_seeded("normal-form", cfg, ring, |rng, _| {
        let s = Sampler::new(g, &cfg.window);
        let x = s.element(rng, ring, 4, 4);
        let run = match Normalizer::new(*g).trace(true).run(&x) {
            Ok(r) => r,
            Err(e) => return Outcome::fail(&x, format!("normalization failed: {e}")),
        };
        if let Some((w, _)) = run.element.terms().find(|(w, _)| !is_basis_word(w)) {
            return Outcome::fail(&x, format!("normal form contains non-basis word {w}"));
        }
        for step in &run.trace {
            if let Some(m) = step.produced.iter().find(|m| **m >= step.measure) {
                return Outcome::fail(&x, format!("{step} produced a word with measure {m}"));
            }
        }
        match Normalizer::new(*g).normalize(&run.element) {
            Ok(y) if y == run.element => {}
            Ok(y) => return Outcome::fail(&x, format!("normal form {} is not a fixed point: {y}", run.element)),
            Err(e) => return Outcome::fail(&x, format!("renormalization failed: {e}")),
        }
        let seed: u64 = rng.gen();
        match Normalizer::new(*g).strategy(Strategy::Random(seed)).normalize(&x) {
            Ok(y) if y == run.element => {}
            Ok(y) => {
                return Outcome::fail(&x, format!("random strategy {seed} gives {y}, leftmost gives {}", run.element))
            }
            Err(e) => return Outcome::fail(&x, format!("random strategy {seed} failed: {e}")),
        }
        if run.steps > 0 {
            Outcome::Tally("cases with rewrites".into())
        } else {
            Outcome::Pass
        }
    })
}

/// Associativity and `(xy)* = y*x*` on random triples of basis words, over
/// the integers and over `Z/5`, with the integer results reduced mod 5
/// required to equal the `Z/5` results.
pub fn check_quotient_laws(cfg: &CheckConfig) -> CheckReport {
    let g = &cfg.graph;
    let z5 = IntegersMod::new(BigInt::from(5)).expect("5 >= 2");
    run_seeded("quotient-laws", cfg, &Integers, |rng, _| {
        let s = Sampler::new(g, &cfg.window);
        let words: [_; 3] = s.basis_chain(rng, 3).try_into().expect("three words");
        let input = format!("x={} y={} z={}", words[0], words[1], words[2]);
        let over_z = laws(&KpAlgebra::new(*g, Integers), &words);
        let over_z5 = laws(&KpAlgebra::new(*g, z5.clone()), &words);
        match (over_z, over_z5) {
            (Ok(a), Ok(b)) => {
                let reduced: Vec<_> = a.iter().map(|e| e.map_ring(z5.clone(), |c| z5.from_integer(c))).collect();
                if reduced != b {
                    Outcome::fail(input, "results over Z reduced mod 5 differ from results over Z/5")
                } else if a.iter().any(|e| !e.is_zero()) {
                    Outcome::Tally("nonzero products".into())
                } else {
                    Outcome::Pass
                }
            }
            (Err(e), _) | (_, Err(e)) => Outcome::fail(input, e),
        }
    })
}

/// `[xy, (xy)z, (xy)*]` after checking both laws.
fn laws<R: Ring>(alg: &KpAlgebra<R>, words: &[crate::kpalg::BasisWord; 3]) -> Result<Vec<Element<R>>, String> {
    let [x, y, z] = words.each_ref().map(|w| alg.basis_element(w));
    let err = |e: crate::error::Error| e.to_string();
    let xy = alg.mul(&x, &y).map_err(err)?;
    let left = alg.mul(&xy, &z).map_err(err)?;
    let yz = alg.mul(&y, &z).map_err(err)?;
    let right = alg.mul(&x, &yz).map_err(err)?;
    if left != right {
        return Err(format!("(xy)z = {left} but x(yz) = {right} over {}", alg.ring()));
    }
    let star_xy = alg.star(&xy).map_err(err)?;
    let swapped = alg.mul(&alg.star(&y).map_err(err)?, &alg.star(&x).map_err(err)?).map_err(err)?;
    if star_xy != swapped {
        return Err(format!("(xy)* = {star_xy} but y*x* = {swapped} over {}", alg.ring()));
    }
    if !alg.is_normal(&left) || !alg.is_normal(&xy) {
        return Err("product is not a combination of basis words".into());
    }
    Ok(vec![xy, left, star_xy])
}
