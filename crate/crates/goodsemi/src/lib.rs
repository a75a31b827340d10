//! Exact computation with good semigroups of ℤ^s and their semigroup ideals.
//!
//! A good semigroup is a submonoid of ℕ^s that is closed under componentwise
//! minimum, admits a conductor (a point past which every lattice point is a
//! member), and satisfies a completion axiom for pairs of members sharing a
//! coordinate. Such semigroups and their ideals are value sets of rings of
//! algebroid curves; unlike numerical semigroups they are not finitely
//! generated, but they are determined by the finite set of members below the
//! conductor. Everything in this crate works with that finite representation
//! and is exact: no floating point, no sampling.
//!
//! Module map:
//!
//! * [`lattice`]: points of ℤ^s, the componentwise partial order, boxes,
//!   saturated unit chains.
//! * [`semigroup`]: [`semigroup::GoodSemigroup`], [`semigroup::Ideal`], the
//!   membership rule, axiom validation, and the Δ-set emptiness tests that
//!   drive everything else.
//! * [`idealops`]: translation, ideal difference, and filtration by a point.
//! * [`metric`]: the distance function on nested pairs of ideals, computed by
//!   counting Δ̄-supported steps along unit chains.
//! * [`duality`]: the normalized canonical ideal, duals against it, and the
//!   four equivalent symmetry conditions relating an ideal to its dual.
//! * [`poincare`]: Poincaré polynomials of ideals and the symmetry theorem
//!   that mirrors the polynomial of a dual.
//! * [`oracle`]: deliberately naive reference implementations used to
//!   cross-check the fast paths.
//! * [`catalog`]: constructors (numerical, product, from explicit data),
//!   exhaustive enumeration of small instances, and a counterexample hunt
//!   over the enumerated universe.
//! * [`format`]: the `goodsemi/1` JSON interchange format.
//! * [`render`]: ASCII and SVG staircase pictures for s = 2.

pub mod catalog;
pub mod duality;
mod error;
pub mod format;
pub mod idealops;
pub mod lattice;
pub mod limits;
pub mod metric;
pub mod oracle;
pub mod poincare;
pub mod render;
pub mod semigroup;

pub use error::{Error, Result};
