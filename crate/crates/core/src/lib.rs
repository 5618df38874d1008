//! Exact combinatorics of matchings in k-partite hypergraphs: data model,
//! extremal constructions, exact and heuristic matching solvers, an
//! exact-rational LP layer for fractional matchings and covers, structural
//! predicates (closeness, absorbing, sparsification, nibble covers), and a
//! staged perfect-matching pipeline for families of 3-partite 3-graphs.
//!
//! Everything combinatorial is exact; the LP layer works over arbitrary-
//! precision rationals (the [`Rational`] alias) through a scalar-generic
//! simplex engine, so no result depends on floating-point rounding.

pub mod constructions;
pub mod error;
pub mod family;
pub mod fractional;
pub mod hypergraph;
pub mod io;
pub mod pipeline;
pub mod rng;
pub mod solvers;
pub mod structure;

/// Exact rational scalar used by the LP layer and everything downstream.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer backing [`Rational`].
pub type Int = num_bigint::BigInt;

pub use error::{Error, Result};
pub use family::Family;
pub use hypergraph::{Edge, HypergraphBuilder, KPartiteHypergraph, ReindexMap, VertexId, VertexSet};

/// Build a `Rational` from an integer pair, `p / q`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(Int::from(p), Int::from(q))
}

/// Build a `Rational` from an integer.
pub fn ratio_int(p: i64) -> Rational {
    Rational::from_integer(Int::from(p))
}
