//! The Kumjian-Pask algebra as a quotient of the free algebra, with
//! multiplication and involution computed through normal forms, and the
//! basis of irreducible words enumerated inside finite windows.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::canonical::{in_r, representative, ClassKey, PathPair};
use crate::error::{Error, Result};
use crate::freealg::{Element, Generator, Word};
use crate::kgraph::{level_vectors, GraphConfig, Path, Point};
use crate::rewrite::Normalizer;
use crate::ring::Ring;

/// One of the four shapes of basis element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BasisWord {
    Vertex(Point),
    Path(Path),
    Ghost(Path),
    /// `λμ*` with `(λ, μ) ∈ R`.
    Pair(PathPair),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisShape {
    Vertex,
    Path,
    Ghost,
    Pair,
}

impl BasisWord {
    pub fn shape(&self) -> BasisShape {
        match self {
            BasisWord::Vertex(_) => BasisShape::Vertex,
            BasisWord::Path(_) => BasisShape::Path,
            BasisWord::Ghost(_) => BasisShape::Ghost,
            BasisWord::Pair(_) => BasisShape::Pair,
        }
    }

    pub fn to_word(&self) -> Word {
        match self {
            BasisWord::Vertex(v) => Word::single(Generator::vertex(v.clone())),
            BasisWord::Path(p) => Word::single(Generator::Path(p.clone())),
            BasisWord::Ghost(p) => Word::single(Generator::Ghost(p.clone())),
            BasisWord::Pair(pair) => Word::pair(pair.left().clone(), pair.right().clone()),
        }
    }

    /// Recognize a word as a basis element.
    pub fn from_word(w: &Word) -> Option<BasisWord> {
        match w.letters() {
            [Generator::Vertex(v)] => Some(BasisWord::Vertex(v.range().clone())),
            [Generator::Path(p)] => Some(BasisWord::Path(p.clone())),
            [Generator::Ghost(p)] => Some(BasisWord::Ghost(p.clone())),
            [Generator::Path(l), Generator::Ghost(m)] => {
                let pair = PathPair::new(l.clone(), m.clone()).ok()?;
                in_r(&pair).ok()?.then_some(BasisWord::Pair(pair))
            }
            _ => None,
        }
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

pub fn is_basis_word(w: &Word) -> bool {
    BasisWord::from_word(w).is_some()
}

/// A box `[lo, hi]` of vertices together with a bound on `|d|`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Window {
    lo: Point,
    hi: Point,
    degree_bound: usize,
}

impl Window {
    pub fn new(lo: Point, hi: Point, degree_bound: usize) -> Result<Window> {
        lo.check_dim(&hi)?;
        if !lo.leq(&hi) {
            return Err(Error::Config(format!("window lower corner {lo} is not below {hi}")));
        }
        Ok(Window { lo, hi, degree_bound })
    }

    /// `[lo, hi]^k`.
    pub fn cube(k: usize, lo: i64, hi: i64, degree_bound: usize) -> Result<Window> {
        Window::new(Point::from_i64s(&vec![lo; k]), Point::from_i64s(&vec![hi; k]), degree_bound)
    }

    pub fn lo(&self) -> &Point {
        &self.lo
    }

    pub fn hi(&self) -> &Point {
        &self.hi
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn contains(&self, v: &Point) -> bool {
        self.lo.leq(v) && v.leq(&self.hi)
    }

    /// Every vertex of the box, lexicographically increasing.
    pub fn vertices(&self) -> Vec<Point> {
        let mut out = vec![Vec::<BigInt>::new()];
        for (lo, hi) in self.lo.coords().iter().zip(self.hi.coords()) {
            let mut next = Vec::new();
            for prefix in &out {
                let mut c = lo.clone();
                while &c <= hi {
                    let mut p = prefix.clone();
                    p.push(c.clone());
                    next.push(p);
                    c += 1;
                }
            }
            out = next;
        }
        out.into_iter().map(Point::new).collect()
    }
}

/// Restrictions applied while enumerating basis words.
#[derive(Clone, Debug, Default)]
pub struct BasisFilter {
    pub shapes: Option<Vec<BasisShape>>,
    /// Range of the path, of the ghost's path, or of `λ` in `λμ*`.
    pub range_left: Option<Point>,
    /// Range of `μ` in `λμ*`.
    pub range_right: Option<Point>,
}

impl BasisFilter {
    fn wants(&self, shape: BasisShape) -> bool {
        self.shapes.as_ref().is_none_or(|s| s.contains(&shape))
    }

    fn left_ok(&self, v: &Point) -> bool {
        self.range_left.as_ref().is_none_or(|r| r == v)
    }

    fn right_ok(&self, v: &Point) -> bool {
        self.range_right.as_ref().is_none_or(|r| r == v)
    }
}

fn windowed_paths(graph: &GraphConfig, win: &Window, range: &Point) -> Vec<Path> {
    let mut out = Vec::new();
    for n in crate::kgraph::degrees_up_to(graph.k(), win.degree_bound) {
        if !win.contains(&range.sub(&n)) {
            continue;
        }
        out.extend(graph.enumerate_paths(range, &n).expect("rank checked"));
    }
    out
}

/// Basis words inside `win`: vertices first, then paths, ghosts and pairs.
pub fn enumerate_basis(graph: &GraphConfig, win: &Window) -> Result<Vec<BasisWord>> {
    enumerate_basis_filtered(graph, win, &BasisFilter::default())
}

pub fn enumerate_basis_filtered(
    graph: &GraphConfig,
    win: &Window,
    filter: &BasisFilter,
) -> Result<Vec<BasisWord>> {
    graph.check_point(&win.lo)?;
    let vertices = win.vertices();
    let mut out = Vec::new();
    if filter.wants(BasisShape::Vertex) {
        out.extend(
            vertices
                .iter()
                .filter(|v| filter.left_ok(v))
                .cloned()
                .map(BasisWord::Vertex),
        );
    }
    for (shape, make) in [
        (BasisShape::Path, BasisWord::Path as fn(Path) -> BasisWord),
        (BasisShape::Ghost, BasisWord::Ghost as fn(Path) -> BasisWord),
    ] {
        if filter.wants(shape) {
            for v in vertices.iter().filter(|v| filter.left_ok(v)) {
                out.extend(windowed_paths(graph, win, v).into_iter().map(make));
            }
        }
    }
    if filter.wants(BasisShape::Pair) {
        let bound = win.degree_bound;
        for rl in vertices.iter().filter(|v| filter.left_ok(v)) {
            for rm in vertices.iter().filter(|v| filter.right_ok(v)) {
                for a in 1..=bound {
                    for b in 1..=bound {
                        if rl.norm() - BigInt::from(a) != rm.norm() - BigInt::from(b) {
                            continue;
                        }
                        for ll in level_vectors(a, graph.level()) {
                            for ml in level_vectors(b, graph.level()) {
                                let key = ClassKey::new(rl.clone(), rm.clone(), ll.clone(), ml)?;
                                if !key.is_realizable() {
                                    continue;
                                }
                                let rep = representative(&key)?;
                                if win.contains(rep.source()) {
                                    out.push(BasisWord::Pair(rep));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `KP_R(Λ)` for a fixed graph and coefficient ring.
#[derive(Clone, Debug)]
pub struct KpAlgebra<R: Ring> {
    ring: R,
    normalizer: Normalizer,
}

impl<R: Ring> KpAlgebra<R> {
    pub fn new(graph: GraphConfig, ring: R) -> Self {
        KpAlgebra {
            ring,
            normalizer: Normalizer::new(graph),
        }
    }

    pub fn with_normalizer(normalizer: Normalizer, ring: R) -> Self {
        KpAlgebra { ring, normalizer }
    }

    pub fn graph(&self) -> &GraphConfig {
        self.normalizer.graph()
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn normalizer(&self) -> &Normalizer {
        &self.normalizer
    }

    pub fn normalize(&self, x: &Element<R>) -> Result<Element<R>> {
        self.ring.check_same(x.ring())?;
        self.normalizer.normalize(x)
    }

    pub fn mul(&self, x: &Element<R>, y: &Element<R>) -> Result<Element<R>> {
        self.normalize(&x.mul(y)?)
    }

    pub fn star(&self, x: &Element<R>) -> Result<Element<R>> {
        self.normalize(&x.star())
    }

    pub fn basis_element(&self, b: &BasisWord) -> Element<R> {
        Element::from_word(self.ring.clone(), b.to_word())
    }

    /// Whether every term of `x` is a basis word.
    pub fn is_normal(&self, x: &Element<R>) -> bool {
        x.terms().all(|(w, _)| is_basis_word(w))
    }
}

pub fn kp_mul<R: Ring>(graph: &GraphConfig, x: &Element<R>, y: &Element<R>) -> Result<Element<R>> {
    KpAlgebra::new(*graph, x.ring().clone()).mul(x, y)
}

pub fn kp_star<R: Ring>(graph: &GraphConfig, x: &Element<R>) -> Result<Element<R>> {
    KpAlgebra::new(*graph, x.ring().clone()).star(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kgraph::Levels;
    use crate::ring::Integers;

    fn pt(c: &[i64]) -> Point {
        Point::from_i64s(c)
    }

    fn path(r: &[i64], s: &[i64], lv: &[u32]) -> Path {
        Path::new(pt(r), pt(s), Levels::from_display(lv)).unwrap()
    }

    fn g(k: usize, l: u32) -> GraphConfig {
        GraphConfig::new(k, l).unwrap()
    }

    fn el(w: Word) -> Element<Integers> {
        Element::from_word(Integers, w)
    }

    #[test]
    fn ghost_times_path() {
        let gr = g(2, 2);
        let lam = path(&[1, 1], &[1, 0], &[2]);
        let x = el(Word::single(Generator::Ghost(lam.clone())));
        let y = el(Word::single(Generator::Path(lam.clone())));
        assert_eq!(kp_mul(&gr, &x, &y).unwrap(), el(Word::single(Generator::Vertex(lam.source_vertex()))));
    }

    #[test]
    fn vertices_are_orthogonal_idempotents() {
        let gr = g(2, 2);
        let v = el(Word::single(Generator::vertex(pt(&[0, 0]))));
        let w = el(Word::single(Generator::vertex(pt(&[0, 1]))));
        assert_eq!(kp_mul(&gr, &v, &v).unwrap(), v);
        assert!(kp_mul(&gr, &v, &w).unwrap().is_zero());
    }

    #[test]
    fn ghost_path_product_two_terms() {
        // S(λ, μ) for λ = p[(1,1)->(0,1);2], μ = p[(1,1)->(1,0);2] has two
        // pairs; both products α β* are already basis words.
        let gr = g(2, 2);
        let lam = path(&[1, 1], &[0, 1], &[2]);
        let mu = path(&[1, 1], &[1, 0], &[2]);
        let prod = kp_mul(
            &gr,
            &el(Word::single(Generator::Ghost(lam))),
            &el(Word::single(Generator::Path(mu))),
        )
        .unwrap();
        let mut expected = Element::zero(Integers);
        for q in [1, 2] {
            expected.add_term(
                Word::pair(path(&[0, 1], &[0, 0], &[q]), path(&[1, 0], &[0, 0], &[q])),
                Integers.one(),
            );
        }
        assert_eq!(prod, expected);
    }

    #[test]
    fn basis_word_recognition() {
        assert!(is_basis_word(&Word::single(Generator::vertex(pt(&[0, 0])))));
        let lam2 = path(&[1, 1], &[0, 1], &[2]);
        assert!(!is_basis_word(&Word::pair(lam2.clone(), lam2.clone())));
        let lam = path(&[1, 1], &[1, 0], &[2]);
        assert!(is_basis_word(&Word::pair(lam.clone(), lam.clone())));
        let w = Word::new(vec![Generator::Ghost(lam), Generator::Path(lam2)]).unwrap();
        assert!(!is_basis_word(&w));
    }

    #[test]
    fn pair_count_rank_one() {
        let gr = g(1, 2);
        let win = Window::cube(1, -2, 2, 1).unwrap();
        let filter = BasisFilter {
            shapes: Some(vec![BasisShape::Pair]),
            range_left: Some(pt(&[0])),
            range_right: Some(pt(&[0])),
        };
        assert_eq!(enumerate_basis_filtered(&gr, &win, &filter).unwrap().len(), 3);
    }

    #[test]
    fn degree_bound_zero_gives_vertices() {
        let gr = g(2, 2);
        let win = Window::cube(2, -1, 1, 0).unwrap();
        let basis = enumerate_basis(&gr, &win).unwrap();
        assert_eq!(basis.len(), 9);
        assert!(basis.iter().all(|b| b.shape() == BasisShape::Vertex));
    }

    #[test]
    fn paths_from_a_vertex() {
        let gr = g(1, 2);
        let win = Window::cube(1, -2, 2, 2).unwrap();
        let filter = BasisFilter {
            shapes: Some(vec![BasisShape::Path]),
            range_left: Some(pt(&[0])),
            range_right: None,
        };
        let paths = enumerate_basis_filtered(&gr, &win, &filter).unwrap();
        assert_eq!(paths.iter().filter(|b| matches!(b, BasisWord::Path(p) if p.degree_norm() == 2)).count(), 4);
    }

    #[test]
    fn star_on_quotient() {
        let gr = g(2, 2);
        let lam = path(&[1, 1], &[1, 0], &[2]);
        let mu = path(&[2, 0], &[1, 0], &[1]);
        let x = el(Word::pair(lam.clone(), mu.clone()));
        assert_eq!(kp_star(&gr, &x).unwrap(), normalize_word(&gr, Word::pair(mu, lam)));
        let v = el(Word::single(Generator::vertex(pt(&[0, 0]))));
        assert_eq!(kp_star(&gr, &v).unwrap(), v);
    }

    fn normalize_word(gr: &GraphConfig, w: Word) -> Element<Integers> {
        crate::rewrite::normalize(gr, &el(w)).unwrap()
    }

    #[test]
    fn window_validation() {
        assert!(Window::new(pt(&[1, 0]), pt(&[0, 0]), 1).is_err());
        assert_eq!(Window::cube(2, 0, 1, 0).unwrap().vertices().len(), 4);
    }
}
