//! Source-matched path pairs, the set `A`, the equivalence `~` and the
//! representative set `R`.
//!
//! A class of `~` is determined by the two ranges and the two level
//! vectors of any member, so classes are handled through [`ClassKey`].
//! Representatives are chosen by a fixed rule: the member whose common
//! source is lexicographically greatest. Any other total choice would also
//! give a basis; only normal-form goldens depend on this one.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::kgraph::{compositions, Levels, Path, Point};

/// An element `(λ, μ)` of `Â`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PathPair {
    left: Path,
    right: Path,
}

impl PathPair {
    pub fn new(left: Path, right: Path) -> Result<PathPair> {
        left.range().check_dim(right.range())?;
        if left.is_vertex() || right.is_vertex() {
            return Err(Error::Shape("pair entries need nonzero degree".into()));
        }
        if left.source() != right.source() {
            return Err(Error::Shape(format!(
                "pair sources differ: {} vs {}",
                left.source(),
                right.source()
            )));
        }
        Ok(PathPair { left, right })
    }

    pub fn left(&self) -> &Path {
        &self.left
    }

    pub fn right(&self) -> &Path {
        &self.right
    }

    pub fn source(&self) -> &Point {
        self.left.source()
    }

    pub fn into_paths(self) -> (Path, Path) {
        (self.left, self.right)
    }
}

impl fmt::Display for PathPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// Membership in `A`: some bottom level differs from 1, or the degrees
/// have disjoint support.
pub fn in_a(pair: &PathPair) -> bool {
    pair.left.levels().bottom() != Some(1)
        || pair.right.levels().bottom() != Some(1)
        || pair.left.degree().meet(&pair.right.degree()).is_zero()
}

/// The invariant `(r(λ), r(μ), lv(λ), lv(μ))` of a `~`-class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ClassKey {
    left_range: Point,
    right_range: Point,
    left_levels: Levels,
    right_levels: Levels,
}

impl ClassKey {
    pub fn new(
        left_range: Point,
        right_range: Point,
        left_levels: Levels,
        right_levels: Levels,
    ) -> Result<ClassKey> {
        left_range.check_dim(&right_range)?;
        if left_levels.is_empty() || right_levels.is_empty() {
            return Err(Error::Shape("class keys need nonempty level vectors".into()));
        }
        let key = ClassKey {
            left_range,
            right_range,
            left_levels,
            right_levels,
        };
        let a = key.left_range.norm() - BigInt::from(key.left_levels.len());
        let b = key.right_range.norm() - BigInt::from(key.right_levels.len());
        if a != b {
            return Err(Error::Shape(format!(
                "key {key} has inconsistent source norms {a} and {b}"
            )));
        }
        Ok(key)
    }

    pub fn left_range(&self) -> &Point {
        &self.left_range
    }

    pub fn right_range(&self) -> &Point {
        &self.right_range
    }

    pub fn left_levels(&self) -> &Levels {
        &self.left_levels
    }

    pub fn right_levels(&self) -> &Levels {
        &self.right_levels
    }

    /// `|s|` shared by every member.
    pub fn source_norm(&self) -> BigInt {
        self.left_range.norm() - BigInt::from(self.left_levels.len())
    }

    fn cap(&self) -> Point {
        self.left_range.meet(&self.right_range)
    }

    /// `|r(λ) ∧ r(μ)| - |s|`, the freedom in choosing a source.
    pub fn slack(&self) -> BigInt {
        self.cap().norm() - self.source_norm()
    }

    /// Whether the members of this key lie in `A` (and there is at least one).
    pub fn is_realizable(&self) -> bool {
        let slack = self.slack();
        if slack.is_negative() {
            return false;
        }
        let both_one = self.left_levels.bottom() == Some(1) && self.right_levels.bottom() == Some(1);
        !both_one || slack == BigInt::from(0)
    }

    fn check_realizable(&self) -> Result<()> {
        if self.is_realizable() {
            Ok(())
        } else {
            Err(Error::UnrealizableKey(self.to_string()))
        }
    }

    /// The member of the class whose paths have source `source`.
    pub fn member_at(&self, source: Point) -> Result<PathPair> {
        let left = Path::new(self.left_range.clone(), source.clone(), self.left_levels.clone())?;
        let right = Path::new(self.right_range.clone(), source, self.right_levels.clone())?;
        Ok(PathPair { left, right })
    }

    /// Source of the representative: the cap with all slack taken from the
    /// last coordinate.
    pub fn representative_source(&self) -> Result<Point> {
        self.check_realizable()?;
        let cap = self.cap();
        let k = cap.dim();
        let last = cap.coord(k - 1) - self.slack();
        Ok(cap.with_coord(k - 1, last))
    }

    /// Every member of the class, sources in lexicographically decreasing
    /// order. Only sensible for small slack.
    pub fn members(&self) -> Result<Vec<PathPair>> {
        self.check_realizable()?;
        let slack = self
            .slack()
            .to_usize()
            .ok_or_else(|| Error::Shape("class too large to enumerate".into()))?;
        let cap = self.cap();
        let mut sources: Vec<Point> = compositions(cap.dim(), slack)
            .into_iter()
            .map(|t| {
                let t = Point::from_i64s(&t.iter().map(|&x| x as i64).collect::<Vec<_>>());
                cap.sub(&t)
            })
            .collect();
        sources.sort_by(|a, b| b.cmp(a));
        sources.into_iter().map(|s| self.member_at(s)).collect()
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},({}),({}))",
            self.left_range, self.right_range, self.left_levels, self.right_levels
        )
    }
}

pub fn class_key(pair: &PathPair) -> Result<ClassKey> {
    if !in_a(pair) {
        return Err(Error::NotInA(pair.to_string()));
    }
    Ok(ClassKey {
        left_range: pair.left.range().clone(),
        right_range: pair.right.range().clone(),
        left_levels: pair.left.levels().clone(),
        right_levels: pair.right.levels().clone(),
    })
}

pub fn equivalent(a: &PathPair, b: &PathPair) -> Result<bool> {
    Ok(class_key(a)? == class_key(b)?)
}

pub fn representative(key: &ClassKey) -> Result<PathPair> {
    key.member_at(key.representative_source()?)
}

pub fn in_r(pair: &PathPair) -> Result<bool> {
    let key = class_key(pair)?;
    Ok(&key.representative_source()? == pair.source())
}

/// Where a source-matched pair of nonzero-degree paths sits relative to `A`
/// and `R`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairClass {
    NotInA,
    Representative,
    NonRepresentative,
}

pub fn classify(pair: &PathPair) -> PairClass {
    if !in_a(pair) {
        return PairClass::NotInA;
    }
    let key = class_key(pair).expect("pair is in A");
    let rep = key.representative_source().expect("keys of A-pairs are realizable");
    if &rep == pair.source() {
        PairClass::Representative
    } else {
        PairClass::NonRepresentative
    }
}
