//! Points of ℤ^s under the componentwise partial order.
//!
//! `Point` doubles as a lattice element (meet = componentwise min, join =
//! componentwise max) and as a plain coordinate vector. The derived `Ord` is
//! lexicographic and exists only to make collections deterministic; the
//! partial order of the theory is [`Point::compare`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A lattice point of ℤ^s, s ≥ 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    coords: Vec<i64>,
}

/// Outcome of comparing two points in the componentwise partial order.
///
/// The four cases are mutually exclusive: `Less` and `Greater` imply the
/// points differ in at least one coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    /// Componentwise ≤ and not equal.
    Less,
    /// Componentwise ≥ and not equal.
    Greater,
    Incomparable,
}

impl Point {
    /// Wraps a coordinate vector. The dimension must be at least 1.
    pub fn new(coords: Vec<i64>) -> Point {
        assert!(!coords.is_empty(), "points must have dimension >= 1");
        Point { coords }
    }

    pub fn zero(dim: usize) -> Point {
        Point::new(vec![0; dim])
    }

    pub fn ones(dim: usize) -> Point {
        Point::new(vec![1; dim])
    }

    /// The standard basis vector along `axis`.
    pub fn unit(dim: usize, axis: usize) -> Point {
        assert!(axis < dim, "axis {axis} out of range for dimension {dim}");
        let mut coords = vec![0; dim];
        coords[axis] = 1;
        Point::new(coords)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, axis: usize) -> i64 {
        self.coords[axis]
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Sum of coordinates, the grading used for graded-lexicographic order.
    pub fn total(&self) -> i64 {
        self.coords.iter().sum()
    }

    fn check_dim(&self, other: &Point) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(())
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Point) -> Result<Point> {
        self.check_dim(other)?;
        Ok(meet_unchecked(self, other))
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Point) -> Result<Point> {
        self.check_dim(other)?;
        Ok(join_unchecked(self, other))
    }

    /// Compares in the componentwise partial order.
    pub fn compare(&self, other: &Point) -> Result<Comparison> {
        self.check_dim(other)?;
        let mut some_less = false;
        let mut some_greater = false;
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if a < b {
                some_less = true;
            } else if a > b {
                some_greater = true;
            }
        }
        Ok(match (some_less, some_greater) {
            (false, false) => Comparison::Equal,
            (true, false) => Comparison::Less,
            (false, true) => Comparison::Greater,
            (true, true) => Comparison::Incomparable,
        })
    }

    /// Componentwise ≤ (equality allowed).
    pub fn le(&self, other: &Point) -> Result<bool> {
        Ok(matches!(
            self.compare(other)?,
            Comparison::Equal | Comparison::Less
        ))
    }

    pub fn add(&self, other: &Point) -> Result<Point> {
        self.check_dim(other)?;
        Ok(add_unchecked(self, other))
    }

    pub fn sub(&self, other: &Point) -> Result<Point> {
        self.check_dim(other)?;
        Ok(sub_unchecked(self, other))
    }

    /// Adds `delta` to a single coordinate.
    pub fn bump(&self, axis: usize, delta: i64) -> Point {
        assert!(axis < self.dim());
        let mut coords = self.coords.clone();
        coords[axis] = coords[axis]
            .checked_add(delta)
            .expect("coordinate overflow");
        Point::new(coords)
    }

    /// Adds the same offset to every coordinate.
    pub fn shift(&self, delta: i64) -> Point {
        Point::new(
            self.coords
                .iter()
                .map(|c| c.checked_add(delta).expect("coordinate overflow"))
                .collect(),
        )
    }
}

pub(crate) fn meet_unchecked(a: &Point, b: &Point) -> Point {
    Point::new(
        a.coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| *x.min(y))
            .collect(),
    )
}

pub(crate) fn join_unchecked(a: &Point, b: &Point) -> Point {
    Point::new(
        a.coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| *x.max(y))
            .collect(),
    )
}

pub(crate) fn add_unchecked(a: &Point, b: &Point) -> Point {
    Point::new(
        a.coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x.checked_add(*y).expect("coordinate overflow"))
            .collect(),
    )
}

pub(crate) fn sub_unchecked(a: &Point, b: &Point) -> Point {
    Point::new(
        a.coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x.checked_sub(*y).expect("coordinate overflow"))
            .collect(),
    )
}

pub(crate) fn le_unchecked(a: &Point, b: &Point) -> bool {
    a.coords().iter().zip(b.coords()).all(|(x, y)| x <= y)
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Axis-aligned box `[lo, hi]`, both corners included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    lo: Point,
    hi: Point,
}

impl Window {
    /// Builds `[lo, hi]`; requires `lo ≤ hi` componentwise.
    pub fn new(lo: Point, hi: Point) -> Result<Window> {
        if !lo.le(&hi)? {
            return Err(Error::NotComparable { lo, hi });
        }
        Ok(Window { lo, hi })
    }

    pub fn lo(&self) -> &Point {
        &self.lo
    }

    pub fn hi(&self) -> &Point {
        &self.hi
    }

    pub fn dim(&self) -> usize {
        self.lo.dim()
    }

    /// Number of lattice points inside, saturating at `u64::MAX`.
    pub fn volume(&self) -> u64 {
        let mut v: u64 = 1;
        for (a, b) in self.lo.coords().iter().zip(self.hi.coords()) {
            let side = (b - a + 1) as u64;
            v = v.saturating_mul(side);
        }
        v
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim() && le_unchecked(&self.lo, p) && le_unchecked(p, &self.hi)
    }

    /// Grows the box by `margin` in every direction.
    pub fn expand(&self, margin: i64) -> Window {
        Window {
            lo: self.lo.shift(-margin),
            hi: self.hi.shift(margin),
        }
    }

    /// Iterates every lattice point in lexicographic order, first coordinate
    /// most significant.
    pub fn iter(&self) -> WindowIter {
        WindowIter {
            window: self.clone(),
            next: Some(self.lo.clone()),
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

pub struct WindowIter {
    window: Window,
    next: Option<Point>,
}

impl Iterator for WindowIter {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let current = self.next.take()?;
        let mut coords = current.coords().to_vec();
        let mut axis = coords.len();
        while axis > 0 {
            axis -= 1;
            if coords[axis] < self.window.hi.coord(axis) {
                coords[axis] += 1;
                for (i, c) in coords.iter_mut().enumerate() {
                    if i > axis {
                        *c = self.window.lo.coord(i);
                    }
                }
                self.next = Some(Point::new(coords));
                return Some(current);
            }
        }
        self.next = None;
        Some(current)
    }
}

/// Policy for serializing a saturated unit chain between comparable points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChainPolicy {
    /// Raise axis 0 to its target, then axis 1, and so on.
    #[default]
    AxisMajor,
    /// Round-robin over the axes that still need raising.
    Interleaved,
}

/// Unit chain from `a` to `b`: the list of `(point, axis)` steps, where each
/// step raises `axis` by one starting at `point`. Requires `a ≤ b`.
///
/// The chain has exactly `sum(b - a)` steps; the two policies produce the
/// same multiset of axis labels in different orders.
pub fn unit_chain(a: &Point, b: &Point, policy: ChainPolicy) -> Result<Vec<(Point, usize)>> {
    if !a.le(b)? {
        return Err(Error::NotComparable {
            lo: a.clone(),
            hi: b.clone(),
        });
    }
    let dim = a.dim();
    let mut steps = Vec::new();
    let mut current = a.clone();
    match policy {
        ChainPolicy::AxisMajor => {
            for axis in 0..dim {
                while current.coord(axis) < b.coord(axis) {
                    let next = current.bump(axis, 1);
                    steps.push((current, axis));
                    current = next;
                }
            }
        }
        ChainPolicy::Interleaved => loop {
            let mut raised = false;
            for axis in 0..dim {
                if current.coord(axis) < b.coord(axis) {
                    let next = current.bump(axis, 1);
                    steps.push((current.clone(), axis));
                    current = next;
                    raised = true;
                }
            }
            if !raised {
                break;
            }
        },
    }
    debug_assert_eq!(&current, b);
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    use proptest::prelude::*;

    fn pt(coords: &[i64]) -> Point {
        Point::new(coords.to_vec())
    }

    #[test]
    fn meet_is_componentwise_min() {
        assert_eq!(pt(&[3, 1]).meet(&pt(&[2, 5])).unwrap(), pt(&[2, 1]));
        assert_eq!(pt(&[0]).meet(&pt(&[7])).unwrap(), pt(&[0]));
    }

    #[test]
    fn join_is_componentwise_max() {
        assert_eq!(pt(&[3, 1]).join(&pt(&[2, 5])).unwrap(), pt(&[3, 5]));
    }

    #[test]
    fn meet_rejects_dimension_mismatch() {
        assert!(matches!(
            pt(&[1, 2]).meet(&pt(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn compare_classifies_pairs() {
        assert_eq!(pt(&[0, 0]).compare(&pt(&[1, 1])).unwrap(), Comparison::Less);
        assert_eq!(
            pt(&[2, 2]).compare(&pt(&[2, 2])).unwrap(),
            Comparison::Equal
        );
        assert_eq!(
            pt(&[0, 3]).compare(&pt(&[1, 1])).unwrap(),
            Comparison::Incomparable
        );
        assert_eq!(
            pt(&[4, 4]).compare(&pt(&[1, 1])).unwrap(),
            Comparison::Greater
        );
    }

    #[test]
    fn unit_chain_axis_major_layout() {
        let steps = unit_chain(&pt(&[0, 0]), &pt(&[1, 1]), ChainPolicy::AxisMajor).unwrap();
        assert_eq!(steps, vec![(pt(&[0, 0]), 0), (pt(&[1, 0]), 1)]);
    }

    #[test]
    fn unit_chain_interleaved_layout() {
        let steps = unit_chain(&pt(&[0, 0]), &pt(&[2, 1]), ChainPolicy::Interleaved).unwrap();
        assert_eq!(
            steps,
            vec![(pt(&[0, 0]), 0), (pt(&[1, 0]), 1), (pt(&[1, 1]), 0)]
        );
    }

    #[test]
    fn unit_chain_rejects_incomparable_endpoints() {
        assert!(matches!(
            unit_chain(&pt(&[1, 0]), &pt(&[0, 1]), ChainPolicy::AxisMajor),
            Err(Error::NotComparable { .. })
        ));
    }

    #[test]
    fn unit_chain_of_equal_points_is_empty() {
        assert!(
            unit_chain(&pt(&[2, 2]), &pt(&[2, 2]), ChainPolicy::AxisMajor)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn window_iterates_in_lex_order() {
        let w = Window::new(pt(&[0, 0]), pt(&[1, 1])).unwrap();
        let points: Vec<Point> = w.iter().collect();
        assert_eq!(
            points,
            vec![pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0]), pt(&[1, 1])]
        );
        assert_eq!(w.volume(), 4);
    }

    #[test]
    fn window_volume_counts_cells() {
        let w = Window::new(pt(&[-1, -1]), pt(&[2, 2])).unwrap();
        assert_eq!(w.volume(), 16);
        assert_eq!(w.iter().count(), 16);
    }

    fn small_point() -> impl Strategy<Value = Point> {
        prop::collection::vec(-6i64..7, 1..=3).prop_map(Point::new)
    }

    fn small_pair() -> impl Strategy<Value = (Point, Point)> {
        (1usize..=3).prop_flat_map(|dim| {
            (
                prop::collection::vec(-6i64..7, dim),
                prop::collection::vec(-6i64..7, dim),
            )
                .prop_map(|(a, b)| (Point::new(a), Point::new(b)))
        })
    }

    proptest! {
        #[test]
        fn meet_commutes((a, b) in small_pair()) {
            prop_assert_eq!(a.meet(&b).unwrap(), b.meet(&a).unwrap());
        }

        #[test]
        fn meet_is_idempotent(a in small_point()) {
            prop_assert_eq!(a.meet(&a).unwrap(), a.clone());
        }

        #[test]
        fn meet_join_absorb((a, b) in small_pair()) {
            let m = a.meet(&b).unwrap();
            let j = a.join(&b).unwrap();
            prop_assert_eq!(m.join(&a).unwrap(), a.clone());
            prop_assert_eq!(j.meet(&a).unwrap(), a);
        }

        #[test]
        fn meet_is_lower_bound((a, b) in small_pair()) {
            let m = a.meet(&b).unwrap();
            prop_assert!(m.le(&a).unwrap());
            prop_assert!(m.le(&b).unwrap());
        }

        #[test]
        fn compare_agrees_with_meet((a, b) in small_pair()) {
            let c = a.compare(&b).unwrap();
            let m = a.meet(&b).unwrap();
            match c {
                Comparison::Equal => prop_assert_eq!(&a, &b),
                Comparison::Less => prop_assert_eq!(&m, &a),
                Comparison::Greater => prop_assert_eq!(&m, &b),
                Comparison::Incomparable => {
                    prop_assert_ne!(&m, &a);
                    prop_assert_ne!(&m, &b);
                }
            }
        }

        #[test]
        fn chains_have_equal_length((a, b) in small_pair()) {
            let lo = a.meet(&b).unwrap();
            let hi = a.join(&b).unwrap();
            let major = unit_chain(&lo, &hi, ChainPolicy::AxisMajor).unwrap();
            let inter = unit_chain(&lo, &hi, ChainPolicy::Interleaved).unwrap();
            let expected = hi.sub(&lo).unwrap().total() as usize;
            prop_assert_eq!(major.len(), expected);
            prop_assert_eq!(inter.len(), expected);
        }

        #[test]
        fn chain_steps_are_adjacent((a, b) in small_pair()) {
            let lo = a.meet(&b).unwrap();
            let hi = a.join(&b).unwrap();
            for policy in [ChainPolicy::AxisMajor, ChainPolicy::Interleaved] {
                let steps = unit_chain(&lo, &hi, policy).unwrap();
                let mut current = lo.clone();
                for (point, axis) in &steps {
                    prop_assert_eq!(point, &current);
                    current = current.bump(*axis, 1);
                }
                prop_assert_eq!(current, hi.clone());
            }
        }
    }
}
