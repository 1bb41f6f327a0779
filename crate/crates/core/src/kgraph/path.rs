use std::fmt;

use num_traits::ToPrimitive;

use super::lattice::Point;
use crate::error::{Error, Result};

/// A level vector `(lv_{|d|}, ..., lv_1)`.
///
/// Entries are stored low index first (`entries[0] = lv_1`) so that the
/// shared bottom segments used by factorization and the S-sets are
/// prefixes; display and parsing use the high-first convention.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Levels(Vec<u32>);

impl Levels {
    pub fn empty() -> Self {
        Levels(Vec::new())
    }

    /// Build from entries listed high index first, as printed.
    pub fn from_display(high_first: &[u32]) -> Self {
        Levels(high_first.iter().rev().copied().collect())
    }

    /// Build from entries listed low index first (`lv_1` first).
    pub fn from_low_first(low_first: Vec<u32>) -> Self {
        Levels(low_first)
    }

    pub fn all_ones(len: usize) -> Self {
        Levels(vec![1; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `lv_j` for `1 <= j <= len`.
    pub fn get(&self, j: usize) -> u32 {
        self.0[j - 1]
    }

    /// `lv_1`, the entry nearest the source.
    pub fn bottom(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn low_first(&self) -> &[u32] {
        &self.0
    }

    pub fn high_first(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().rev().copied()
    }

    /// `p × q`: `self` occupies the high indices, `low` the low ones.
    pub fn concat(&self, low: &Levels) -> Levels {
        let mut v = Vec::with_capacity(self.len() + low.len());
        v.extend_from_slice(&low.0);
        v.extend_from_slice(&self.0);
        Levels(v)
    }

    /// `(lv_n, ..., lv_1)`; empty when `n == 0`.
    pub fn low_part(&self, n: usize) -> Levels {
        Levels(self.0[..n].to_vec())
    }

    /// The top `n` entries `(lv_len, ..., lv_{len-n+1})`.
    pub fn high_part(&self, n: usize) -> Levels {
        Levels(self.0[self.len() - n..].to_vec())
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&e| e == 1)
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&e| e == 1).count()
    }

    /// `p ~ q`: the top `min(|p|, |q|)` entries agree.
    pub fn compatible(&self, other: &Levels) -> bool {
        self.0
            .iter()
            .rev()
            .zip(other.0.iter().rev())
            .all(|(a, b)| a == b)
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }
}

impl fmt::Display for Levels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.high_first().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// A morphism `(r, s, p)` of the standard k-graph. Vertices are the paths
/// with `r = s` and an empty level vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Path {
    range: Point,
    source: Point,
    levels: Levels,
}

pub(crate) fn norm_as_len(p: &Point) -> Option<usize> {
    p.norm().to_usize()
}

impl Path {
    pub fn new(range: Point, source: Point, levels: Levels) -> Result<Path> {
        range.check_dim(&source)?;
        if !source.leq(&range) {
            return Err(Error::InvalidPath(format!(
                "source {source} is not below range {range}"
            )));
        }
        let degree = range.sub(&source);
        if norm_as_len(&degree) != Some(levels.len()) {
            return Err(Error::InvalidPath(format!(
                "degree {degree} needs {} level entries, found {}",
                degree.norm(),
                levels.len()
            )));
        }
        if levels.low_first().contains(&0) {
            return Err(Error::InvalidPath("level entries start at 1".into()));
        }
        Ok(Path {
            range,
            source,
            levels,
        })
    }

    pub fn vertex(v: Point) -> Path {
        Path {
            range: v.clone(),
            source: v,
            levels: Levels::empty(),
        }
    }

    pub fn range(&self) -> &Point {
        &self.range
    }

    pub fn source(&self) -> &Point {
        &self.source
    }

    pub fn levels(&self) -> &Levels {
        &self.levels
    }

    pub fn degree(&self) -> Point {
        self.range.sub(&self.source)
    }

    /// `|d(λ)|`, which always equals the level-vector length.
    pub fn degree_norm(&self) -> usize {
        self.levels.len()
    }

    pub fn dim(&self) -> usize {
        self.range.dim()
    }

    pub fn is_vertex(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn range_vertex(&self) -> Path {
        Path::vertex(self.range.clone())
    }

    pub fn source_vertex(&self) -> Path {
        Path::vertex(self.source.clone())
    }

    /// `self ∘ other`, defined when `s(self) = r(other)`.
    pub fn compose(&self, other: &Path) -> Result<Path> {
        self.range.check_dim(&other.range)?;
        if self.source != other.range {
            return Err(Error::Composition {
                source_vertex: self.source.to_string(),
                range: other.range.to_string(),
            });
        }
        Ok(Path {
            range: self.range.clone(),
            source: other.source.clone(),
            levels: self.levels.concat(&other.levels),
        })
    }

    /// The unique `(μ, ν)` with `μ ∘ ν = self`, `d(μ) = m`, `d(ν) = n`.
    pub fn factorize(&self, m: &Point, n: &Point) -> Result<(Path, Path)> {
        self.range.check_dim(m)?;
        self.range.check_dim(n)?;
        if !m.is_nonneg() || !n.is_nonneg() || m.add(n) != self.degree() {
            return Err(Error::DegreeSplit {
                m: m.to_string(),
                n: n.to_string(),
                degree: self.degree().to_string(),
            });
        }
        let top = norm_as_len(m).expect("degree norm fits in memory");
        let bottom = self.levels.len() - top;
        let mid = self.range.sub(m);
        let head = Path {
            range: self.range.clone(),
            source: mid.clone(),
            levels: self.levels.high_part(top),
        };
        let tail = Path {
            range: mid,
            source: self.source.clone(),
            levels: self.levels.low_part(bottom),
        };
        Ok((head, tail))
    }

    /// Split off the bottom factor of degree `n`, returning the top factor.
    pub(crate) fn strip_bottom(&self, n: &Point) -> Path {
        let head = self.degree().sub(n);
        self.factorize(&head, n).expect("caller checked n <= d").0
    }

    pub fn check_levels(&self, level: u32) -> Result<()> {
        match self.levels.max_entry() {
            Some(e) if e > level => Err(Error::LevelOutOfRange { entry: e, level }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_vertex() {
            write!(f, "v{}", self.range)
        } else {
            write!(f, "p[{}->{};{}]", self.range, self.source, self.levels)
        }
    }
}
