//! Kumjian-Pask algebras of the standard k-graphs `Δ_{k,l}`, computed via a
//! terminating, confluent rewriting system on the free algebra.
//!
//! Modules build bottom-up: [`kgraph`] (vertices, paths, factorization),
//! [`freealg`] (words and sparse linear combinations), [`canonical`] (the
//! relation `R` and its class representatives), [`rewrite`] (rules,
//! orderings, normalization), [`kpalg`] (quotient operations and the basis)
//! and [`verify`] (randomized and exhaustive consistency checks).

pub mod canonical;
pub mod error;
pub mod freealg;
pub mod kgraph;
pub mod kpalg;
pub mod rewrite;
pub mod ring;
pub mod syntax;
pub mod verify;

pub use canonical::{classify, in_a, in_r, representative, ClassKey, PairClass, PathPair};
pub use error::{Error, Result};
pub use freealg::{Element, Generator, Word};
pub use kgraph::{GraphConfig, Levels, Path, Point};
pub use kpalg::{enumerate_basis, is_basis_word, kp_mul, kp_star, BasisWord, KpAlgebra, Window};
pub use rewrite::{normalize, Normalizer, RuleId, Strategy, WordMeasure};
pub use ring::{Integers, IntegersMod, Ring};
pub use syntax::{format_element, parse_element};
