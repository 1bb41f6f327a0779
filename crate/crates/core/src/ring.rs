//! Exact commutative coefficient rings.

use std::fmt::{self, Debug};
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A commutative ring with identity. Values of `Elem` are kept in a
/// canonical representation so that `==` is ring equality.
pub trait Ring: Clone + PartialEq + Eq + Debug + fmt::Display + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// The image of an integer under `Z -> R`.
    #[allow(clippy::wrong_self_convention)]
    fn from_integer(&self, n: &BigInt) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn minus_one(&self) -> Self::Elem {
        self.neg(&self.one())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch(self.to_string(), other.to_string()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Integers;

impl fmt::Display for Integers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("int")
    }
}

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn from_integer(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
}

/// `Z/nZ` for `n >= 2`, elements stored in `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntegersMod {
    modulus: BigInt,
}

impl IntegersMod {
    pub fn new(modulus: BigInt) -> Result<Self> {
        if modulus < BigInt::from(2) {
            return Err(Error::Config(format!("modulus must be at least 2, got {modulus}")));
        }
        Ok(IntegersMod { modulus })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    fn reduce(&self, n: BigInt) -> BigInt {
        let r = n % &self.modulus;
        if r.is_negative() {
            r + &self.modulus
        } else {
            r
        }
    }
}

impl fmt::Display for IntegersMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zmod:{}", self.modulus)
    }
}

impl Ring for IntegersMod {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a + b)
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(-a)
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a * b)
    }

    fn from_integer(&self, n: &BigInt) -> BigInt {
        self.reduce(n.clone())
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_axioms<R: Ring>(ring: &R, a: i64, b: i64, c: i64) {
        let [a, b, c] = [a, b, c].map(|x| ring.from_integer(&BigInt::from(x)));
        assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
        assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
        assert_eq!(
            ring.mul(&a, &ring.add(&b, &c)),
            ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
        );
        assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
        assert_eq!(ring.mul(&ring.one(), &a), a);
        assert!(ring.is_zero(&ring.add(&a, &ring.neg(&a))));
    }

    proptest! {
        #[test]
        fn integer_ring_axioms(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000) {
            check_axioms(&Integers, a, b, c);
        }

        #[test]
        fn modular_ring_axioms(n in 2i64..50, a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000) {
            check_axioms(&IntegersMod::new(BigInt::from(n)).unwrap(), a, b, c);
        }
    }

    #[test]
    fn modular_reduction_is_canonical() {
        let z5 = IntegersMod::new(BigInt::from(5)).unwrap();
        assert_eq!(z5.from_integer(&BigInt::from(-1)), BigInt::from(4));
        assert_eq!(z5.minus_one(), BigInt::from(4));
        assert!(IntegersMod::new(BigInt::from(1)).is_err());
        assert!(z5.check_same(&IntegersMod::new(BigInt::from(7)).unwrap()).is_err());
    }
}
