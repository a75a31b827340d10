//! Constructors for standard families and exhaustive catalogs of small
//! instances.
//!
//! The enumerators walk every candidate representation inside explicit
//! bounds, prefilter with cheap bitmask tests, and keep exactly those the
//! authoritative validator accepts. Output order is fully deterministic:
//! conductors (and minima) in lexicographic order, candidate subsets in
//! ascending mask order.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::duality::{symmetry_report, SymmetryReport};
use crate::lattice::{add_unchecked, le_unchecked, meet_unchecked, Point, Window};
use crate::limits::{self, Budget};
use crate::semigroup::{
    validate_good, validate_semigroup_parts, GoodSemigroup, Goodness, Ideal, SmallElements,
};
use crate::{Error, Result};

/// Hard cap on the value sieve used by [`numerical`].
const SIEVE_CAP: usize = 1 << 20;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The numerical semigroup generated by `generators`, as a good semigroup of
/// ℕ^1.
///
/// Generators must be positive with overall gcd 1, so the complement is
/// finite and a conductor exists. Reachability is sieved upward until the
/// smallest generator many consecutive values are members, which pins the
/// conductor exactly.
pub fn numerical(generators: &[i64]) -> Result<GoodSemigroup> {
    if generators.is_empty() || generators.iter().any(|&g| g <= 0) {
        return Err(Error::BadGenerators);
    }
    if generators.iter().copied().fold(0, gcd) != 1 {
        return Err(Error::BadGenerators);
    }
    let min_gen = *generators.iter().min().unwrap() as usize;
    let mut member = vec![true];
    let mut run = 1usize;
    while run < min_gen {
        let n = member.len();
        if n > SIEVE_CAP {
            return Err(Error::BudgetExceeded {
                what: "numerical semigroup sieve",
                needed: n as u64,
                limit: SIEVE_CAP as u64,
            });
        }
        let reachable = generators
            .iter()
            .any(|&g| n >= g as usize && member[n - g as usize]);
        member.push(reachable);
        run = if reachable { run + 1 } else { 0 };
    }
    let conductor = member.iter().rposition(|&m| !m).map_or(0, |f| f + 1);
    let small: BTreeSet<Point> = (0..=conductor)
        .filter(|&n| member[n])
        .map(|n| Point::new(vec![n as i64]))
        .collect();
    Ok(GoodSemigroup::from_validated_parts(
        1,
        Point::new(vec![conductor as i64]),
        small,
    ))
}

/// The direct product A × B ⊆ ℕ^{dim A + dim B}.
pub fn product(a: &GoodSemigroup, b: &GoodSemigroup) -> Result<GoodSemigroup> {
    let dim = a.dim() + b.dim();
    limits::check_dim(dim)?;
    let gamma = concat(a.conductor(), b.conductor());
    let mut small = BTreeSet::new();
    for p in a.small() {
        for q in b.small() {
            small.insert(concat(p, q));
        }
    }
    GoodSemigroup::from_parts(dim, gamma, small).map_err(Error::Invalid)
}

fn concat(a: &Point, b: &Point) -> Point {
    let mut coords = a.coords().to_vec();
    coords.extend_from_slice(b.coords());
    Point::new(coords)
}

/// Builds a good semigroup from explicit small-element data, canonicalizing
/// the conductor and validating every axiom.
pub fn from_small(dim: usize, gamma: Point, small: BTreeSet<Point>) -> Result<GoodSemigroup> {
    limits::check_dim(dim)?;
    GoodSemigroup::from_parts(dim, gamma, small).map_err(Error::Invalid)
}

/// Every good semigroup of ℕ^dim whose conductor lies in [0, gamma_max],
/// each in canonical representation, ordered by conductor then by small-set
/// mask.
pub fn enumerate_good(
    dim: usize,
    gamma_max: &Point,
    budget: &Budget,
) -> Result<Vec<GoodSemigroup>> {
    limits::check_dim(dim)?;
    if gamma_max.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: gamma_max.dim(),
        });
    }
    let zero = Point::zero(dim);
    let conductors = Window::new(zero.clone(), gamma_max.clone())?;
    let mut out = Vec::new();
    for g in conductors.iter() {
        scan_subsets(&zero, &g, budget, |small| {
            if validate_semigroup_parts(dim, &g, &small).passed() {
                out.push(GoodSemigroup::from_validated_parts(dim, g.clone(), small));
            }
        })?;
    }
    Ok(out)
}

/// Every good ideal of `parent` with minimum in `mu_box` and conductor in
/// `gamma_box`, each in canonical representation, ordered by minimum, then
/// conductor, then small-set mask.
///
/// Conductors past minimum + parent conductor are skipped: closure under
/// adding parent elements forces every ideal conductor under that bound.
pub fn enumerate_ideals(
    parent: &Arc<GoodSemigroup>,
    mu_box: &Window,
    gamma_box: &Window,
    budget: &Budget,
) -> Result<Vec<Ideal>> {
    let dim = parent.dim();
    if mu_box.dim() != dim || gamma_box.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: mu_box.dim().max(gamma_box.dim()),
        });
    }
    let mut out = Vec::new();
    for mu in mu_box.iter() {
        let bound = add_unchecked(&mu, parent.conductor());
        for c in gamma_box.iter() {
            if !(le_unchecked(&mu, &c) && le_unchecked(&c, &bound)) {
                continue;
            }
            scan_subsets(&mu, &c, budget, |small| {
                if validate_good(dim, &mu, &c, &small, Some(parent)).passed() {
                    out.push(Ideal::from_validated_parts(
                        parent,
                        mu.clone(),
                        c.clone(),
                        small,
                        Goodness::VerifiedGood,
                    ));
                }
            })?;
        }
    }
    Ok(out)
}

/// Enumerates candidate small sets for the box [mu, c]: subsets containing
/// both corners, closed under meet, with no member one step under the
/// conductor (such a member would make the conductor non-minimal).
///
/// These prefilters repeat checks the validator performs, so they discard
/// nothing the validator would keep; they exist to prune the mask space
/// cheaply before the expensive completion and closure checks run.
fn scan_subsets(
    mu: &Point,
    c: &Point,
    budget: &Budget,
    mut accept: impl FnMut(BTreeSet<Point>),
) -> Result<()> {
    let cells: Vec<Point> = Window::new(mu.clone(), c.clone())
        .expect("scan ranges are ordered")
        .iter()
        .collect();
    let v = cells.len();
    if v > 64 {
        return Err(Error::BudgetExceeded {
            what: "subset enumeration cells",
            needed: v as u64,
            limit: 64,
        });
    }
    if v == 1 {
        accept(std::iter::once(cells[0].clone()).collect());
        return Ok(());
    }
    budget.check_candidates(1u64 << (v - 2))?;

    // Lexicographic cell order puts mu at index 0 and c at index v-1.
    let dim = mu.dim();
    let mut meet_idx = vec![0u8; v * v];
    for i in 0..v {
        for j in 0..v {
            let m = meet_unchecked(&cells[i], &cells[j]);
            let k = cells.binary_search(&m).expect("meet stays in the box");
            meet_idx[i * v + j] = k as u8;
        }
    }
    let mut forbidden: u64 = 0;
    for axis in 0..dim {
        if c.coord(axis) > mu.coord(axis) {
            let adjacent = c.bump(axis, -1);
            let k = cells
                .binary_search(&adjacent)
                .expect("conductor-adjacent cell is in the box");
            forbidden |= 1 << k;
        }
    }

    let forced: u64 = 1 | (1 << (v - 1));
    for mask in 0u64..(1 << (v - 2)) {
        let bits = forced | (mask << 1);
        if bits & forbidden != 0 {
            continue;
        }
        if !meet_closed(bits, v, &meet_idx) {
            continue;
        }
        let small: BTreeSet<Point> = (0..v)
            .filter(|i| bits >> i & 1 == 1)
            .map(|i| cells[i].clone())
            .collect();
        accept(small);
    }
    Ok(())
}

fn meet_closed(bits: u64, v: usize, meet_idx: &[u8]) -> bool {
    for i in 0..v {
        if bits >> i & 1 == 0 {
            continue;
        }
        for j in (i + 1)..v {
            if bits >> j & 1 == 0 {
                continue;
            }
            if bits >> meet_idx[i * v + j] & 1 == 0 {
                return false;
            }
        }
    }
    true
}

/// Search ranges for [`hunt_asymmetric`]: every good semigroup of the given
/// dimension with conductor at most `gamma_max`, crossed with every good
/// ideal whose minimum and conductor land in the two boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuntParams {
    pub dim: usize,
    pub gamma_max: Point,
    pub mu_box: Window,
    pub gamma_box: Window,
}

/// One ideal whose symmetry report came back not all-true, kept with enough
/// context to recheck it in isolation.
#[derive(Debug, Clone, PartialEq)]
pub struct HuntFailure {
    pub semigroup: GoodSemigroup,
    pub ideal: Ideal,
    pub report: SymmetryReport,
}

/// Outcome of a full search: the parameters echoed back, how many pairs
/// were tested, and every failure in enumeration order.
///
/// `elapsed` is wall-clock bookkeeping; it does not take part in equality,
/// so reports from repeated runs compare equal exactly when their
/// mathematical content matches.
#[derive(Debug, Clone)]
pub struct HuntReport {
    pub params: HuntParams,
    pub tested: u64,
    pub failures: Vec<HuntFailure>,
    pub elapsed: Duration,
}

impl PartialEq for HuntReport {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params
            && self.tested == other.tested
            && self.failures == other.failures
    }
}

/// Runs the symmetry conditions over the whole enumerated universe and
/// records every ideal whose report is not all-true.
///
/// Nothing is assumed about the outcome: an all-false report is recorded as
/// a finding, not an error, and the search always visits the entire range.
/// Checks fan out across the current thread pool, then results are restored
/// to enumeration order, so the report is identical for any worker count.
pub fn hunt_asymmetric(params: &HuntParams, budget: &Budget) -> Result<HuntReport> {
    let start = Instant::now();
    let mut ideals = Vec::new();
    for s in enumerate_good(params.dim, &params.gamma_max, budget)? {
        let parent = Arc::new(s);
        ideals.extend(enumerate_ideals(
            &parent,
            &params.mu_box,
            &params.gamma_box,
            budget,
        )?);
    }
    let tested = ideals.len() as u64;
    let reports = ideals
        .par_iter()
        .map(symmetry_report)
        .collect::<Result<Vec<SymmetryReport>>>()?;
    let failures = ideals
        .into_iter()
        .zip(reports)
        .filter(|(_, report)| !report.all_true())
        .map(|(ideal, report)| HuntFailure {
            semigroup: ideal.parent().as_ref().clone(),
            ideal,
            report,
        })
        .collect();
    Ok(HuntReport {
        params: params.clone(),
        tested,
        failures,
        elapsed: start.elapsed(),
    })
}
