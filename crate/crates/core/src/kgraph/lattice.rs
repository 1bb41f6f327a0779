//! Points of `Z^k` with the pointwise lattice structure.
//!
//! The same type carries vertices (`Z^k`) and degrees (`N^k`); the
//! degree invariant is checked by [`Point::is_nonneg`] where it matters.
//! Coordinates are arbitrary precision.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Point(Vec<BigInt>);

impl Point {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Point(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(k: usize) -> Self {
        Point(vec![BigInt::zero(); k])
    }

    /// The basis vector `e_i`, with `i` counted from 1.
    pub fn unit(k: usize, i: usize) -> Self {
        assert!((1..=k).contains(&i), "basis index {i} outside 1..={k}");
        let mut p = Point::zero(k);
        p.0[i - 1] = BigInt::from(1);
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coord(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    pub fn check_dim(&self, other: &Point) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Point, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Point {
        assert_eq!(self.dim(), other.dim(), "lattice operation on points of different rank");
        Point(self.0.iter().zip(&other.0).map(|(a, b)| f(a, b)).collect())
    }

    /// Pointwise maximum `m ∨ n`. Panics on rank mismatch; see [`Point::try_join`].
    pub fn join(&self, other: &Point) -> Point {
        self.zip_with(other, |a, b| a.max(b).clone())
    }

    /// Pointwise minimum `m ∧ n`.
    pub fn meet(&self, other: &Point) -> Point {
        self.zip_with(other, |a, b| a.min(b).clone())
    }

    pub fn add(&self, other: &Point) -> Point {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Point) -> Point {
        self.zip_with(other, |a, b| a - b)
    }

    /// `(self - other) ∨ 0`.
    pub fn truncated_sub(&self, other: &Point) -> Point {
        self.zip_with(other, |a, b| {
            let d = a - b;
            if d.is_negative() {
                BigInt::zero()
            } else {
                d
            }
        })
    }

    pub fn try_join(&self, other: &Point) -> Result<Point> {
        self.check_dim(other)?;
        Ok(self.join(other))
    }

    pub fn try_meet(&self, other: &Point) -> Result<Point> {
        self.check_dim(other)?;
        Ok(self.meet(other))
    }

    pub fn try_truncated_sub(&self, other: &Point) -> Result<Point> {
        self.check_dim(other)?;
        Ok(self.truncated_sub(other))
    }

    pub fn try_leq(&self, other: &Point) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.leq(other))
    }

    /// `|m| = m_1 + ... + m_k`.
    pub fn norm(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Pointwise order `self ≤ other`. This is the lattice order, not the
    /// derived lexicographic `Ord`.
    pub fn leq(&self, other: &Point) -> bool {
        assert_eq!(self.dim(), other.dim(), "comparison of points of different rank");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    /// Smallest `i` (1-based) with a positive coordinate.
    pub fn first_positive(&self) -> Option<usize> {
        self.0.iter().position(|c| c.is_positive()).map(|i| i + 1)
    }

    /// Replace the coordinate at 0-based index `i`.
    pub(crate) fn with_coord(mut self, i: usize, value: BigInt) -> Point {
        self.0[i] = value;
        self
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Point {
        Point::from_i64s(c)
    }

    #[test]
    fn meet_join_norm() {
        assert_eq!(p(&[1, 0]).meet(&p(&[0, 1])), p(&[0, 0]));
        assert_eq!(p(&[1, 0]).join(&p(&[0, 1])), p(&[1, 1]));
        assert_eq!(p(&[2, 3]).norm(), BigInt::from(5));
    }

    #[test]
    fn truncated_subtraction() {
        assert_eq!(p(&[3, 1]).truncated_sub(&p(&[1, 4])), p(&[2, 0]));
        assert_eq!(p(&[0, 0]).truncated_sub(&p(&[1, 1])), p(&[0, 0]));
    }

    #[test]
    fn unit_vectors_and_order() {
        assert_eq!(Point::unit(3, 2), p(&[0, 1, 0]));
        assert!(p(&[0, 1]).leq(&p(&[1, 1])));
        assert!(!p(&[2, 0]).leq(&p(&[1, 1])));
        assert_eq!(p(&[0, 2, 1]).first_positive(), Some(2));
        assert_eq!(p(&[0, 0]).first_positive(), None);
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let err = p(&[1, 0]).try_join(&p(&[1])).unwrap_err();
        assert_eq!(err, Error::Dimension { expected: 2, found: 1 });
        assert!(p(&[1]).try_meet(&p(&[1, 2])).is_err());
        assert!(p(&[1]).try_leq(&p(&[1, 2])).is_err());
    }

    #[test]
    fn big_coordinates_do_not_overflow() {
        let big = Point::new(vec![BigInt::from(i64::MAX) * 4, BigInt::from(-7)]);
        let sum = big.add(&big);
        assert_eq!(sum.coord(0), &(BigInt::from(i64::MAX) * 8));
    }
}
