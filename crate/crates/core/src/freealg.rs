//! The free algebra `R⟨X⟩` on vertices, paths and ghost paths.
//!
//! Words are nonempty (the algebra is non-unital) and elements are finite
//! maps from words to nonzero coefficients, keyed by the canonical word
//! order: length first, then letterwise.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::kgraph::{Path, Point};
use crate::ring::Ring;

/// A letter of `X = Λ⁰ ∪ Λ^{≠0} ∪ (Λ^{≠0})*`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Generator {
    Vertex(Path),
    Path(Path),
    Ghost(Path),
}

impl Generator {
    pub fn vertex(v: Point) -> Generator {
        Generator::Vertex(Path::vertex(v))
    }

    /// The letter for `λ ∈ Λ`; a vertex when `d(λ) = 0`.
    pub fn of_path(p: Path) -> Generator {
        if p.is_vertex() {
            Generator::Vertex(p)
        } else {
            Generator::Path(p)
        }
    }

    /// The letter for `λ*`; uses `v* = v` for vertices.
    pub fn ghost_of(p: Path) -> Generator {
        if p.is_vertex() {
            Generator::Vertex(p)
        } else {
            Generator::Ghost(p)
        }
    }

    /// The underlying path (`λ` for both `λ` and `λ*`).
    pub fn path(&self) -> &Path {
        match self {
            Generator::Vertex(p) | Generator::Path(p) | Generator::Ghost(p) => p,
        }
    }

    /// The vertex this letter can be multiplied against on its left.
    pub fn left_end(&self) -> &Point {
        match self {
            Generator::Vertex(p) | Generator::Path(p) => p.range(),
            Generator::Ghost(p) => p.source(),
        }
    }

    /// The vertex this letter can be multiplied against on its right.
    pub fn right_end(&self) -> &Point {
        match self {
            Generator::Vertex(p) | Generator::Path(p) => p.source(),
            Generator::Ghost(p) => p.range(),
        }
    }

    pub fn is_vertex(&self) -> bool {
        matches!(self, Generator::Vertex(_))
    }

    pub fn star(&self) -> Generator {
        match self {
            Generator::Vertex(p) => Generator::Vertex(p.clone()),
            Generator::Path(p) => Generator::Ghost(p.clone()),
            Generator::Ghost(p) => Generator::Path(p.clone()),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Vertex(p) | Generator::Path(p) => write!(f, "{p}"),
            Generator::Ghost(p) => write!(f, "{p}*"),
        }
    }
}

/// A nonempty word `x_1 ... x_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new(letters: Vec<Generator>) -> Result<Word> {
        if letters.is_empty() {
            return Err(Error::Shape("words are nonempty".into()));
        }
        Ok(Word(letters))
    }

    pub fn single(letter: Generator) -> Word {
        Word(vec![letter])
    }

    /// The word `λμ*`, using vertex letters where either side has degree 0.
    pub fn pair(lambda: Path, mu: Path) -> Word {
        Word(vec![Generator::of_path(lambda), Generator::ghost_of(mu)])
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reverse the word and star every letter.
    pub fn star(&self) -> Word {
        Word(self.0.iter().rev().map(Generator::star).collect())
    }

    /// Replace `len` letters starting at 0-based `at` with `middle`
    /// (which may be empty as long as the context is not).
    pub(crate) fn splice(&self, at: usize, len: usize, middle: &[Generator]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() - len + middle.len());
        v.extend_from_slice(&self.0[..at]);
        v.extend_from_slice(middle);
        v.extend_from_slice(&self.0[at + len..]);
        debug_assert!(!v.is_empty());
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" . ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A finite `R`-linear combination of words with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element<R: Ring> {
    ring: R,
    terms: BTreeMap<Word, R::Elem>,
}

impl<R: Ring> Element<R> {
    pub fn zero(ring: R) -> Self {
        Element {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(ring: R, word: Word) -> Self {
        let one = ring.one();
        Self::from_term(ring, word, one)
    }

    pub fn from_term(ring: R, word: Word, coeff: R::Elem) -> Self {
        let mut e = Element::zero(ring);
        e.add_term(word, coeff);
        e
    }

    pub fn from_letter(ring: R, letter: Generator) -> Self {
        Self::from_word(ring, Word::single(letter))
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> R::Elem {
        self.terms.get(word).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn into_terms(self) -> BTreeMap<Word, R::Elem> {
        self.terms
    }

    /// Add `coeff · word`, dropping the term if it cancels.
    pub fn add_term(&mut self, word: Word, coeff: R::Elem) {
        if self.ring.is_zero(&coeff) {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = self.ring.add(slot.get(), &coeff);
                if self.ring.is_zero(&sum) {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn take_last(&mut self) -> Option<(Word, R::Elem)> {
        self.terms.pop_last()
    }

    pub(crate) fn take_nth(&mut self, index: usize) -> Option<(Word, R::Elem)> {
        let word = self.terms.keys().nth(index)?.clone();
        let coeff = self.terms.remove(&word)?;
        Some((word, coeff))
    }

    pub(crate) fn add_scaled(&mut self, other: &Element<R>, scale: &R::Elem) {
        for (w, c) in &other.terms {
            let c = self.ring.mul(scale, c);
            self.add_term(w.clone(), c);
        }
    }

    pub fn add(&self, other: &Element<R>) -> Result<Element<R>> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        out.add_scaled(other, &self.ring.one());
        Ok(out)
    }

    pub fn sub(&self, other: &Element<R>) -> Result<Element<R>> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        out.add_scaled(other, &self.ring.minus_one());
        Ok(out)
    }

    pub fn neg(&self) -> Element<R> {
        self.scale(&self.ring.minus_one())
    }

    pub fn scale(&self, c: &R::Elem) -> Element<R> {
        let mut out = Element::zero(self.ring.clone());
        out.add_scaled(self, c);
        out
    }

    /// Product in the free algebra: bilinear extension of concatenation.
    pub fn mul(&self, other: &Element<R>) -> Result<Element<R>> {
        self.ring.check_same(&other.ring)?;
        let mut out = Element::zero(self.ring.clone());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), self.ring.mul(ca, cb));
            }
        }
        Ok(out)
    }

    /// The anti-involution `*`: reverses words, swaps paths and ghosts.
    pub fn star(&self) -> Element<R> {
        Element {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.star(), c.clone())).collect(),
        }
    }

    /// Map coefficients through `Z -> S` for a ring reachable by integers.
    pub fn map_ring<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> Element<S> {
        let mut out = Element::zero(target);
        for (w, c) in &self.terms {
            let c = f(c);
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl<R: Ring> fmt::Display for Element<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} * {w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kgraph::Levels;
    use crate::ring::{Integers, IntegersMod};
    use num_bigint::BigInt;

    fn pt(c: &[i64]) -> Point {
        Point::from_i64s(c)
    }

    fn path(r: &[i64], s: &[i64], lv: &[u32]) -> Path {
        Path::new(pt(r), pt(s), Levels::from_display(lv)).unwrap()
    }

    fn letter(g: Generator) -> Element<Integers> {
        Element::from_letter(Integers, g)
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let lam = letter(Generator::Path(path(&[1, 1], &[1, 0], &[2])));
        let zero = Element::zero(Integers);
        assert_eq!(lam.add(&zero).unwrap(), lam);
        assert!(lam.add(&lam.neg()).unwrap().is_zero());

        let z2 = IntegersMod::new(BigInt::from(2)).unwrap();
        let lam2 = lam.map_ring(z2.clone(), |c| z2.from_integer(c));
        assert!(lam2.add(&lam2).unwrap().is_zero());
    }

    #[test]
    fn product_is_bilinear() {
        let v = Generator::vertex(pt(&[0, 0]));
        let lam = Generator::Path(path(&[0, 0], &[-1, 0], &[1]));
        let two_v = letter(v.clone()).scale(&BigInt::from(2));
        let three_l = letter(lam.clone()).scale(&BigInt::from(3));
        let prod = two_v.mul(&three_l).unwrap();
        let w = Word::new(vec![v, lam]).unwrap();
        assert_eq!(prod, Element::from_term(Integers, w, BigInt::from(6)));
        assert!(prod.mul(&Element::zero(Integers)).unwrap().is_zero());
    }

    #[test]
    fn distributivity_example() {
        let a = letter(Generator::Path(path(&[1], &[0], &[1])));
        let b = letter(Generator::Path(path(&[1], &[0], &[2])));
        let c = letter(Generator::Ghost(path(&[1], &[0], &[1])));
        let lhs = a.add(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 2);
    }

    #[test]
    fn star_reverses_and_swaps() {
        let lam = path(&[1, 1], &[1, 0], &[2]);
        let mu = path(&[1, 0], &[0, 0], &[1]);
        let w = Word::new(vec![Generator::Path(lam.clone()), Generator::Ghost(mu.clone())]).unwrap();
        let expected = Word::new(vec![Generator::Path(mu), Generator::Ghost(lam)]).unwrap();
        assert_eq!(w.star(), expected);
        assert_eq!(w.star().star(), w);
        let v = Word::single(Generator::vertex(pt(&[3, 3])));
        assert_eq!(v.star(), v);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let z3 = IntegersMod::new(BigInt::from(3)).unwrap();
        let z5 = IntegersMod::new(BigInt::from(5)).unwrap();
        let a = Element::from_letter(z3, Generator::vertex(pt(&[0])));
        let b = Element::from_letter(z5, Generator::vertex(pt(&[0])));
        assert!(matches!(a.add(&b), Err(Error::RingMismatch(..))));
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn canonical_order_is_length_first() {
        let long = Word::new(vec![Generator::vertex(pt(&[0])), Generator::vertex(pt(&[0]))]).unwrap();
        let short = Word::single(Generator::Ghost(path(&[5], &[0], &[1, 1, 1, 1, 1])));
        assert!(short < long);
        assert!(Word::new(vec![]).is_err());
    }

    #[test]
    fn display_format() {
        let lam = path(&[1, 1], &[1, 0], &[2]);
        let e = Element::from_word(Integers, Word::pair(lam.clone(), lam));
        assert_eq!(e.to_string(), "1 * p[(1,1)->(1,0);2] . p[(1,1)->(1,0);2]*");
        assert_eq!(Element::zero(Integers).to_string(), "0");
    }
}
