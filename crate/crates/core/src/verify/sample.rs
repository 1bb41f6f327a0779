//! Seeded random instances. Every case gets its own ChaCha stream derived
//! from the report seed and the case index, so cases can run in any order.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonical::{class_key, in_a, in_r, PathPair};
use crate::freealg::{Element, Generator, Word};
use crate::kgraph::{compositions, GraphConfig, Levels, Path, Point};
use crate::kpalg::{BasisWord, Window};
use crate::ring::Ring;

pub fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case as u64);
    rng
}

/// How the two paths of a `λμ*` junction relate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairMode {
    Any,
    /// A common all-ones tail, so an expansion applies.
    NotInA,
    /// In `A` but not the class representative.
    NonRepresentative,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LetterKind {
    Vertex,
    Path,
    Ghost,
}

pub struct Sampler<'a> {
    graph: &'a GraphConfig,
    window: &'a Window,
}

fn translate(p: &Path, by: &Point) -> Path {
    Path::new(p.range().add(by), p.source().add(by), p.levels().clone()).expect("translation keeps shape")
}

impl<'a> Sampler<'a> {
    pub fn new(graph: &'a GraphConfig, window: &'a Window) -> Self {
        Sampler { graph, window }
    }

    pub fn graph(&self) -> &GraphConfig {
        self.graph
    }

    pub fn bound(&self) -> usize {
        self.window.degree_bound()
    }

    pub fn vertex(&self, rng: &mut ChaCha8Rng) -> Point {
        let coords = self
            .window
            .lo()
            .coords()
            .iter()
            .zip(self.window.hi().coords())
            .map(|(lo, hi)| {
                let span = i64::try_from(hi - lo).expect("window fits i64");
                lo + BigInt::from(rng.gen_range(0..=span))
            })
            .collect();
        Point::new(coords)
    }

    /// A degree with norm drawn uniformly from `min..=max`, then a uniform
    /// composition of that norm.
    pub fn degree(&self, rng: &mut ChaCha8Rng, min: usize, max: usize) -> Point {
        let norm = rng.gen_range(min..=max.max(min));
        let comps = compositions(self.graph.k(), norm);
        let c = comps.choose(rng).expect("compositions are nonempty");
        Point::from_i64s(&c.iter().map(|&x| x as i64).collect::<Vec<_>>())
    }

    pub fn levels(&self, rng: &mut ChaCha8Rng, len: usize) -> Levels {
        Levels::from_low_first((0..len).map(|_| rng.gen_range(1..=self.graph.level())).collect())
    }

    /// Levels of length `len` agreeing with `base` on their common top part.
    pub fn compatible_levels(&self, rng: &mut ChaCha8Rng, base: &Levels, len: usize) -> Levels {
        let common = len.min(base.len());
        let top: Vec<u32> = base.high_first().take(common).collect();
        let rest = self.levels(rng, len - common);
        Levels::from_display(&top).concat(&rest)
    }

    pub fn path_from(&self, rng: &mut ChaCha8Rng, range: &Point, degree: &Point) -> Path {
        let lv = self.levels(rng, degree.norm().try_into().expect("small degree"));
        Path::new(range.clone(), range.sub(degree), lv).expect("valid shape")
    }

    pub fn path_to(&self, rng: &mut ChaCha8Rng, source: &Point, degree: &Point) -> Path {
        self.path_from(rng, &source.add(degree), degree)
    }

    /// A path with range in the window and `min <= |d| <= max`.
    pub fn path(&self, rng: &mut ChaCha8Rng, min: usize, max: usize) -> Path {
        let v = self.vertex(rng);
        let d = self.degree(rng, min, max);
        self.path_from(rng, &v, &d)
    }

    /// A source-matched pair of nonzero paths, anchored at a window vertex.
    pub fn pair(&self, rng: &mut ChaCha8Rng, mode: PairMode) -> PathPair {
        let bound = self.bound().max(1);
        match mode {
            PairMode::Any => {
                let s = self.vertex(rng);
                let dl = self.degree(rng, 1, bound);
                let dm = self.degree(rng, 1, bound);
                let l = self.path_to(rng, &s, &dl);
                let m = self.path_to(rng, &s, &dm);
                PathPair::new(l, m).expect("nonzero, matched")
            }
            PairMode::NotInA => {
                let s = self.vertex(rng);
                let t = self.degree(rng, 1, bound);
                let tail = self.graph.all_ones_path(&s.add(&t), &t).expect("valid tail");
                let room = bound - usize::try_from(t.norm()).expect("small degree");
                let head = |rng: &mut ChaCha8Rng| {
                    let d = self.degree(rng, 0, room);
                    self.path_to(rng, tail.range(), &d).compose(&tail).expect("composable")
                };
                let l = head(rng);
                let m = head(rng);
                PathPair::new(l, m).expect("nonzero, matched")
            }
            PairMode::NonRepresentative => {
                for _ in 0..200 {
                    let p = self.pair(rng, PairMode::Any);
                    if !in_a(&p) {
                        continue;
                    }
                    let key = class_key(&p).expect("in A");
                    let members = key.members().expect("realizable");
                    let others: Vec<_> = members
                        .into_iter()
                        .filter(|m| !in_r(m).expect("in A"))
                        .collect();
                    if let Some(m) = others.choose(rng) {
                        return m.clone();
                    }
                }
                self.pair(rng, PairMode::Any)
            }
        }
    }

    /// A pair in `A`, biased towards classes with more than one member.
    /// `None` when rejection sampling finds none (for `k = l = 1`, `A` is
    /// empty).
    pub fn a_pair(&self, rng: &mut ChaCha8Rng) -> Option<PathPair> {
        // One coordinate, one colour: every pair has all-ones tails and
        // overlapping degrees, so A is empty.
        if self.graph.k() == 1 && self.graph.level() == 1 {
            return None;
        }
        for _ in 0..1000 {
            let mode = if rng.gen_bool(0.5) {
                PairMode::NonRepresentative
            } else {
                PairMode::Any
            };
            let p = self.pair(rng, mode);
            if in_a(&p) {
                return Some(p);
            }
        }
        None
    }

    pub fn basis_word(&self, rng: &mut ChaCha8Rng) -> BasisWord {
        let bound = self.bound().max(1);
        match rng.gen_range(0..4) {
            0 => BasisWord::Vertex(self.vertex(rng)),
            1 => BasisWord::Path(self.path(rng, 1, bound)),
            2 => BasisWord::Ghost(self.path(rng, 1, bound)),
            _ => match self.a_pair(rng) {
                Some(p) => {
                    let key = class_key(&p).expect("in A");
                    BasisWord::Pair(crate::canonical::representative(&key).expect("realizable"))
                }
                None => BasisWord::Vertex(self.vertex(rng)),
            },
        }
    }

    /// A basis word whose left end is `left`.
    pub fn basis_word_at(&self, rng: &mut ChaCha8Rng, left: &Point) -> BasisWord {
        let b = self.basis_word(rng);
        let w = b.to_word();
        let by = left.sub(w.letters()[0].left_end());
        match b {
            BasisWord::Vertex(v) => BasisWord::Vertex(v.add(&by)),
            BasisWord::Path(p) => BasisWord::Path(translate(&p, &by)),
            BasisWord::Ghost(p) => BasisWord::Ghost(translate(&p, &by)),
            BasisWord::Pair(pair) => {
                let (l, m) = pair.into_paths();
                BasisWord::Pair(PathPair::new(translate(&l, &by), translate(&m, &by)).expect("translation keeps shape"))
            }
        }
    }

    /// Basis words `x_1, ..., x_n`, each usually starting where the previous
    /// one ends.
    pub fn basis_chain(&self, rng: &mut ChaCha8Rng, n: usize) -> Vec<BasisWord> {
        let mut out: Vec<BasisWord> = Vec::with_capacity(n);
        for _ in 0..n {
            let next = match out.last() {
                Some(prev) if rng.gen_bool(0.75) => {
                    let w = prev.to_word();
                    let end = w.letters().last().expect("nonempty").right_end().clone();
                    self.basis_word_at(rng, &end)
                }
                _ => self.basis_word(rng),
            };
            out.push(next);
        }
        out
    }

    /// A word whose letters follow `kinds`. Junctions are matched except with
    /// probability `break_prob`; each path-ghost junction uses `mode`.
    pub fn chain(
        &self,
        rng: &mut ChaCha8Rng,
        kinds: &[LetterKind],
        modes: &[PairMode],
        break_prob: f64,
    ) -> Word {
        let bound = self.bound().max(1);
        let mut u = self.vertex(rng);
        let mut letters = Vec::new();
        let mut i = 0;
        let mut junction = 0;
        while i < kinds.len() {
            if i > 0 && rng.gen_bool(break_prob) {
                u = u.add(&self.degree(rng, 1, 1));
            }
            match kinds[i] {
                LetterKind::Vertex => letters.push(Generator::vertex(u.clone())),
                LetterKind::Path if kinds.get(i + 1) == Some(&LetterKind::Ghost) => {
                    let mode = modes.get(junction).copied().unwrap_or(PairMode::Any);
                    junction += 1;
                    let pair = self.pair(rng, mode);
                    let by = u.sub(pair.left().range());
                    let (l, m) = pair.into_paths();
                    let (l, m) = (translate(&l, &by), translate(&m, &by));
                    letters.push(Generator::Path(l));
                    if rng.gen_bool(break_prob) {
                        let m = translate(&m, &self.degree(rng, 1, 1));
                        u = m.range().clone();
                        letters.push(Generator::Ghost(m));
                    } else {
                        u = m.range().clone();
                        letters.push(Generator::Ghost(m));
                    }
                    i += 2;
                    continue;
                }
                LetterKind::Path => {
                    let d = self.degree(rng, 1, bound);
                    let p = self.path_from(rng, &u, &d);
                    u = p.source().clone();
                    letters.push(Generator::Path(p));
                }
                LetterKind::Ghost => {
                    let d = self.degree(rng, 1, bound);
                    let p = self.path_to(rng, &u, &d);
                    u = p.range().clone();
                    letters.push(Generator::Ghost(p));
                }
            }
            i += 1;
        }
        Word::new(letters).expect("nonempty")
    }

    /// A random word of `1..=max_letters` letters.
    pub fn word(&self, rng: &mut ChaCha8Rng, max_letters: usize) -> Word {
        let len = rng.gen_range(1..=max_letters.max(1));
        let kinds: Vec<LetterKind> = (0..len)
            .map(|_| match rng.gen_range(0..5) {
                0 => LetterKind::Vertex,
                1 | 2 => LetterKind::Path,
                _ => LetterKind::Ghost,
            })
            .collect();
        let modes: Vec<PairMode> = (0..len)
            .map(|_| *[PairMode::Any, PairMode::NotInA, PairMode::NonRepresentative].choose(rng).unwrap())
            .collect();
        self.chain(rng, &kinds, &modes, 0.1)
    }

    /// A combination of up to `max_terms` random words with small integer
    /// coefficients.
    pub fn element<R: Ring>(&self, rng: &mut ChaCha8Rng, ring: &R, max_terms: usize, max_letters: usize) -> Element<R> {
        let mut x = Element::zero(ring.clone());
        for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
            let c: i64 = *[-2, -1, 1, 1, 2, 3].choose(rng).unwrap();
            x.add_term(self.word(rng, max_letters), ring.from_integer(&BigInt::from(c)));
        }
        x
    }
}
