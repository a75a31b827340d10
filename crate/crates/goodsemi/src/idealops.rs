//! Arithmetic on ideals of a fixed good semigroup: translation, the ideal
//! difference E − F, filtration by a lower bound, and the conductor ideal.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::lattice::{add_unchecked, join_unchecked, sub_unchecked, Point, Window};
use crate::limits::Budget;
use crate::semigroup::{GoodSemigroup, Goodness, Ideal, SmallElements};
use crate::{Error, Result};

/// Shifts every element of `e` by `v`.
///
/// Translation commutes with semigroup addition and preserves the partial
/// order, so the representation moves rigidly and goodness is unchanged.
pub fn translate(e: &Ideal, v: &Point) -> Result<Ideal> {
    if v.dim() != e.dim() {
        return Err(Error::DimensionMismatch {
            expected: e.dim(),
            got: v.dim(),
        });
    }
    let small: BTreeSet<Point> = e.small().iter().map(|p| add_unchecked(p, v)).collect();
    Ok(Ideal::from_validated_parts(
        e.parent(),
        add_unchecked(e.minimum(), v),
        add_unchecked(e.conductor(), v),
        small,
        e.goodness(),
    ))
}

/// Computes the difference E − F = {α : α + F ⊆ E} of two ideals of the same
/// parent.
///
/// Every member satisfies α + μ^F ∈ E, so α ≥ μ^E − μ^F; every α ≥ γ^E − μ^F
/// sends all of F past γ^E, so that point is a conductor of the result. The
/// membership test consults F only inside [μ^F, join(γ^F, γ^E − lo) + 1]:
/// a member of F outside that box exceeds γ^F somewhere, dropping it back to
/// the box face keeps it in F, and both sums land at or above γ^E in the
/// raised coordinates, so the outer test follows from the inner one.
///
/// The result need not be good; its goodness field records what validation
/// established.
pub fn difference(e: &Ideal, f: &Ideal) -> Result<Ideal> {
    if e.parent() != f.parent() {
        return Err(Error::ParentMismatch);
    }
    let budget = Budget::default();
    let lo = sub_unchecked(e.minimum(), f.minimum());
    let hi = sub_unchecked(e.conductor(), f.minimum());
    let candidates = Window::new(lo.clone(), hi.clone())?;
    budget.check_box_cells(candidates.volume())?;
    let probe_hi = join_unchecked(f.conductor(), &sub_unchecked(e.conductor(), &lo)).shift(1);
    let probe = Window::new(f.minimum().clone(), probe_hi)?;
    budget.check_box_cells(probe.volume())?;
    let tests = f.members_in(&probe);
    let mut members = BTreeSet::new();
    'candidate: for alpha in candidates.iter() {
        for t in &tests {
            if !e.contains_unchecked(&add_unchecked(&alpha, t)) {
                continue 'candidate;
            }
        }
        members.insert(alpha);
    }
    Ok(Ideal::from_members(e.parent(), members, hi))
}

/// Restricts `e` to the up-set of `at`: E^at = {β ∈ E : β ≥ at}.
///
/// join(at, γ^E) is already the minimal conductor of the result: lowering it
/// along an axis pinned by `at` exits the up-set, and lowering it along an
/// axis pinned by γ^E recreates the point that witnessed minimality of γ^E.
pub fn filtration(e: &Ideal, at: &Point) -> Result<Ideal> {
    if at.dim() != e.dim() {
        return Err(Error::DimensionMismatch {
            expected: e.dim(),
            got: at.dim(),
        });
    }
    let g = join_unchecked(at, e.conductor());
    let lo = join_unchecked(at, e.minimum());
    let members: BTreeSet<Point> = e
        .members_in(&Window::new(lo, g.clone())?)
        .into_iter()
        .collect();
    let out = Ideal::from_members(e.parent(), members, g.clone());
    debug_assert_eq!(out.conductor(), &g);
    debug_assert!(
        e.goodness() != Goodness::VerifiedGood || out.goodness() == Goodness::VerifiedGood,
        "filtration of a verified ideal must stay verified"
    );
    Ok(out)
}

/// The ideal of all points at or above the parent's conductor.
pub fn conductor_ideal(parent: &Arc<GoodSemigroup>) -> Ideal {
    Ideal::up_set(parent, parent.conductor()).expect("conductor matches parent dimension")
}
