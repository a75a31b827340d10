//! Brute-force reference implementations that follow the definitions
//! directly. They share only core types with the optimized paths, so the
//! two sides can check each other in tests.

use std::collections::BTreeSet;

use crate::lattice::{
    add_unchecked, join_unchecked, le_unchecked, meet_unchecked, sub_unchecked, Point, Window,
};
use crate::limits::Budget;
use crate::metric::ChainCertificate;
use crate::poincare::PoincarePolynomial;
use crate::semigroup::{Goodness, Ideal, SmallElements};
use crate::{Error, Result};

/// Everything an exhaustive saturated-chain enumeration observed between
/// two fixed members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCensus {
    /// Length of the first chain found in deterministic search order.
    pub length: u64,
    /// Every distinct saturated-chain length; a single entry on any set
    /// satisfying the equal-length chain axiom.
    pub lengths: BTreeSet<u64>,
    /// The first complete chain, replayable as evidence.
    pub witness: ChainCertificate,
}

impl ChainCensus {
    /// True when all enumerated chains had the same length.
    pub fn is_uniform(&self) -> bool {
        self.lengths.len() == 1
    }
}

/// Enumerates every saturated chain in `e` from `a` to `b` by backtracking
/// over the members between them.
///
/// Both endpoints must be comparable members. The box volume and the number
/// of complete chains are bounded by `budget`; exceeding either fails loudly
/// so a passed run always means a finished search.
pub fn oracle_element_distance(
    e: &Ideal,
    a: &Point,
    b: &Point,
    budget: &Budget,
) -> Result<ChainCensus> {
    if !e.contains(a)? {
        return Err(Error::NotMember { point: a.clone() });
    }
    if !e.contains(b)? {
        return Err(Error::NotMember { point: b.clone() });
    }
    if !a.le(b)? {
        return Err(Error::NotComparable {
            lo: a.clone(),
            hi: b.clone(),
        });
    }
    let window = Window::new(a.clone(), b.clone())?;
    budget.check_box_cells(window.volume())?;
    let members: BTreeSet<Point> = e.members_in(&window).into_iter().collect();
    census_over(&members, a, b, budget)
}

/// Core backtracking search over a finite member set. Both endpoints must be
/// in `members`, and every point of `members` must lie in [a, b].
fn census_over(
    members: &BTreeSet<Point>,
    a: &Point,
    b: &Point,
    budget: &Budget,
) -> Result<ChainCensus> {
    let mut lengths = BTreeSet::new();
    let mut witness: Option<Vec<Point>> = None;
    let mut chains = 0u64;
    let mut path = vec![a.clone()];
    explore(
        members,
        b,
        &mut path,
        &mut chains,
        &mut lengths,
        &mut witness,
        budget,
    )?;
    let witness = ChainCertificate {
        points: witness.expect("at least one saturated chain reaches the upper endpoint"),
    };
    Ok(ChainCensus {
        length: witness.len() as u64,
        lengths,
        witness,
    })
}

fn explore(
    members: &BTreeSet<Point>,
    top: &Point,
    path: &mut Vec<Point>,
    chains: &mut u64,
    lengths: &mut BTreeSet<u64>,
    witness: &mut Option<Vec<Point>>,
    budget: &Budget,
) -> Result<()> {
    let here = path.last().expect("path starts nonempty").clone();
    if &here == top {
        *chains += 1;
        budget.check_chains(*chains)?;
        lengths.insert(path.len() as u64 - 1);
        if witness.is_none() {
            *witness = Some(path.clone());
        }
        return Ok(());
    }
    // Successors: minimal members strictly above the current point. Iteration
    // over a sorted set keeps the search order deterministic.
    for next in members.iter() {
        if next == &here || !le_unchecked(&here, next) {
            continue;
        }
        let skipped = members
            .iter()
            .any(|z| z != &here && z != next && le_unchecked(&here, z) && le_unchecked(z, next));
        if skipped {
            continue;
        }
        path.push(next.clone());
        explore(members, top, path, chains, lengths, witness, budget)?;
        path.pop();
    }
    Ok(())
}

/// Computes E − F = {α : α + F ⊆ E} by scanning candidates and testing the
/// definition pointwise.
///
/// Candidates range over [μ^E − μ^F − 𝟏, γ^E − μ^F + 𝟏]. For each candidate
/// the quantifier over F is cut to the members below
/// join(γ^F, γ^E − α): any other member of F exceeds that corner somewhere,
/// clamping it back to the corner stays inside F, and on the clamped axes
/// both sums land at or past γ^E, so the finite test settles the infinite
/// one.
pub fn oracle_difference(e: &Ideal, f: &Ideal, budget: &Budget) -> Result<Ideal> {
    if e.parent() != f.parent() {
        return Err(Error::ParentMismatch);
    }
    let lo = sub_unchecked(
        &sub_unchecked(e.minimum(), f.minimum()),
        &Point::ones(e.dim()),
    );
    let hi = add_unchecked(
        &sub_unchecked(e.conductor(), f.minimum()),
        &Point::ones(e.dim()),
    );
    let candidates = Window::new(lo.clone(), hi.clone())?;
    budget.check_box_cells(candidates.volume())?;
    let mut members = BTreeSet::new();
    for alpha in candidates.iter() {
        let cut = join_unchecked(f.conductor(), &sub_unchecked(e.conductor(), &alpha));
        let probe = Window::new(f.minimum().clone(), join_unchecked(&cut, f.minimum()))?;
        budget.check_box_cells(probe.volume())?;
        let ok = f
            .members_in(&probe)
            .iter()
            .all(|t| e.contains_unchecked(&add_unchecked(&alpha, t)));
        if ok {
            members.insert(alpha);
        }
    }
    Ok(Ideal::from_members(e.parent(), members, hi))
}

/// Computes the Poincaré polynomial from first principles: local distances
/// come from exhaustive chain enumeration on nested filtrations, the
/// windowed series is multiplied by Π(t_i − 1), and the product is truncated
/// to the support box [μ^E, γ^E].
pub fn oracle_poincare(e: &Ideal, budget: &Budget) -> Result<PoincarePolynomial> {
    if e.goodness() != Goodness::VerifiedGood {
        return Err(Error::NotVerifiedGood);
    }
    let s = e.dim();
    let window = Window::new(e.minimum().shift(-2), e.conductor().shift(1))?;
    budget.check_box_cells(window.volume())?;
    let mut series: Vec<(Point, i64)> = Vec::new();
    for alpha in window.iter() {
        series.push((
            alpha.clone(),
            oracle_local_distance(e, &alpha, budget)? as i64,
        ));
    }
    // Multiply the windowed series by Π(t_i − 1): each subset of axes
    // contributes its unit shift with sign (−1)^(s − |subset|).
    let mut terms: Vec<(Point, i64)> = Vec::new();
    for (alpha, d) in &series {
        for mask in 0u32..(1u32 << s) {
            let mut exp = alpha.clone();
            for axis in 0..s {
                if mask & (1 << axis) != 0 {
                    exp = exp.bump(axis, 1);
                }
            }
            let sign = if (s - mask.count_ones() as usize).is_multiple_of(2) {
                1
            } else {
                -1
            };
            terms.push((exp, sign * d));
        }
    }
    let support = Window::new(e.minimum().clone(), e.conductor().clone())?;
    PoincarePolynomial::from_terms(
        s,
        terms.into_iter().filter(|(exp, _)| support.contains(exp)),
    )
}

/// dist over the unit box at α, measured by chains alone: the difference of
/// the saturated-chain lengths of the two nested filtrations E^α ⊇ E^(α+𝟏),
/// taken up to a shared bound past both conductors.
fn oracle_local_distance(e: &Ideal, alpha: &Point, budget: &Budget) -> Result<u64> {
    let top = join_unchecked(&alpha.shift(1), e.conductor());
    let outer = chain_length_of_cut(e, alpha, &top, budget)?;
    let inner = chain_length_of_cut(e, &alpha.shift(1), &top, budget)?;
    debug_assert!(outer >= inner);
    Ok(outer - inner)
}

/// Saturated-chain length of {x ∈ E : x ≥ at} from its true minimum up to
/// `top`, which must dominate the cut's conductor.
fn chain_length_of_cut(e: &Ideal, at: &Point, top: &Point, budget: &Budget) -> Result<u64> {
    let window = Window::new(join_unchecked(at, e.minimum()), top.clone())?;
    budget.check_box_cells(window.volume())?;
    let members: BTreeSet<Point> = e.members_in(&window).into_iter().collect();
    // top is past both the parent conductor and the cut, so it is a member;
    // the meet of the boxed members is the minimum of the whole cut, because
    // meeting any member with top stays in the cut and inside the box.
    let minimum = members
        .iter()
        .fold(None::<Point>, |acc, p| {
            Some(match acc {
                None => p.clone(),
                Some(m) => meet_unchecked(&m, p),
            })
        })
        .expect("the cut contains its conductor corner");
    debug_assert!(
        members.contains(&minimum),
        "meet closure puts the minimum in the box"
    );
    let census = census_over(&members, &minimum, top, budget)?;
    assert!(
        census.is_uniform(),
        "saturated chains of different lengths inside a verified good ideal"
    );
    Ok(census.length)
}
