//! Distances between nested ideals and their filtrations, measured by
//! saturated chains and computed as Δ̄ step counts along unit chains.

use crate::lattice::{le_unchecked, unit_chain, ChainPolicy, Point, Window};
use crate::semigroup::{Ideal, SmallElements};
use crate::{Error, Result};

/// A saturated chain presented as checkable evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCertificate {
    pub points: Vec<Point>,
}

impl ChainCertificate {
    /// Number of steps, one less than the number of points.
    pub fn len(&self) -> usize {
        self.points.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// True when the chain is nonempty, strictly increasing, fully inside
    /// `set`, and saturated: no member of `set` strictly between consecutive
    /// entries.
    pub fn verify<T: SmallElements>(&self, set: &T) -> bool {
        if self.points.is_empty() || self.points.iter().any(|p| p.dim() != set.dim()) {
            return false;
        }
        if self.points.iter().any(|p| !set.contains_unchecked(p)) {
            return false;
        }
        self.points.windows(2).all(|w| {
            w[0] != w[1] && le_unchecked(&w[0], &w[1]) && consecutive_unchecked(set, &w[0], &w[1])
        })
    }
}

/// True when `a < b` with no member of `set` strictly between them.
pub fn consecutive<T: SmallElements>(set: &T, a: &Point, b: &Point) -> Result<bool> {
    if !set.contains(a)? {
        return Err(Error::NotMember { point: a.clone() });
    }
    if !set.contains(b)? {
        return Err(Error::NotMember { point: b.clone() });
    }
    if a == b || !le_unchecked(a, b) {
        return Ok(false);
    }
    Ok(consecutive_unchecked(set, a, b))
}

fn consecutive_unchecked<T: SmallElements>(set: &T, a: &Point, b: &Point) -> bool {
    Window::new(a.clone(), b.clone())
        .expect("endpoints are comparable")
        .iter()
        .all(|z| z == *a || z == *b || !set.contains_unchecked(&z))
}

/// Length of every saturated chain from `a` to `b` inside `e`; both points
/// must be members with `a ≤ b`.
///
/// For a member `a` the filtration E^a has minimum exactly `a`, so the chain
/// length coincides with dist(E^a ∖ E^b) and the Δ̄ step count answers
/// without enumerating chains.
pub fn element_distance(e: &Ideal, a: &Point, b: &Point) -> Result<u64> {
    if !e.contains(a)? {
        return Err(Error::NotMember { point: a.clone() });
    }
    if !e.contains(b)? {
        return Err(Error::NotMember { point: b.clone() });
    }
    filtration_distance(e, a, b)
}

/// dist(E^a ∖ E^b) for any `a ≤ b`; membership is not required.
pub fn filtration_distance(e: &Ideal, a: &Point, b: &Point) -> Result<u64> {
    filtration_distance_with(e, a, b, ChainPolicy::AxisMajor)
}

/// Same as [`filtration_distance`] along a caller-chosen unit chain; the
/// count does not depend on the policy.
pub fn filtration_distance_with(
    e: &Ideal,
    a: &Point,
    b: &Point,
    policy: ChainPolicy,
) -> Result<u64> {
    if a.dim() != e.dim() {
        return Err(Error::DimensionMismatch {
            expected: e.dim(),
            got: a.dim(),
        });
    }
    let mut d = 0u64;
    for (at, axis) in unit_chain(a, b, policy)? {
        if e.delta_nonempty(&at, axis, true)? {
            d += 1;
        }
    }
    Ok(d)
}

/// dist(F∖E) for nested ideals `inner ⊆ outer` of the same parent.
///
/// The count runs along the unit chain μ^F → μ^E → γ^E: the Δ̄^F steps of
/// both legs minus the Δ̄^E steps of the second. Each second-leg step has
/// Δ̄^E ⊆ Δ̄^F, so the running total never dips below zero.
pub fn ideal_distance(outer: &Ideal, inner: &Ideal) -> Result<u64> {
    if !inner.is_subset_of(outer)? {
        return Err(Error::NotSubset);
    }
    let mut d = 0u64;
    for (at, axis) in unit_chain(outer.minimum(), inner.minimum(), ChainPolicy::AxisMajor)? {
        if outer.delta_nonempty(&at, axis, true)? {
            d += 1;
        }
    }
    for (at, axis) in unit_chain(inner.minimum(), inner.conductor(), ChainPolicy::AxisMajor)? {
        let step_outer = outer.delta_nonempty(&at, axis, true)?;
        let step_inner = inner.delta_nonempty(&at, axis, true)?;
        assert!(
            step_outer || !step_inner,
            "Δ̄ of a subset escaped the superset at {at}, axis {axis}"
        );
        if step_outer && !step_inner {
            d += 1;
        }
    }
    Ok(d)
}

/// Equality of nested ideals by zero distance; requires `e ⊆ f`.
pub fn equals(e: &Ideal, f: &Ideal) -> Result<bool> {
    let same = ideal_distance(f, e)? == 0;
    assert_eq!(
        same,
        e == f,
        "zero distance must coincide with representation equality"
    );
    Ok(same)
}
