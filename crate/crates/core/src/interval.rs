//! Closed rational intervals inside `[0,1]` and finite unions of them.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A closed interval `[lo, hi]` with `0 ≤ lo ≤ hi ≤ 1`. A point is `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if !rational::in_unit_interval(&lo) || !rational::in_unit_interval(&hi) {
            return Err(Error::InvalidInput(format!(
                "interval [{lo}, {hi}] is not contained in [0,1]"
            )));
        }
        if lo > hi {
            return Err(Error::InvalidInput(format!(
                "interval [{lo}, {hi}] has lo > hi"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub(crate) fn new_unchecked(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn point(x: Rational) -> Result<Self> {
        Self::new(x.clone(), x)
    }

    pub fn unit() -> Self {
        Self::new_unchecked(Rational::zero(), Rational::one())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// `other ⊆ (lo, hi)`.
    pub fn interior_contains(&self, other: &Interval) -> bool {
        self.lo < other.lo && other.hi < self.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersection(&self, other: &Interval) -> Option<Interval> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then(|| Interval::new_unchecked(lo, hi))
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval::new_unchecked(
            (&self.lo).min(&other.lo).clone(),
            (&self.hi).max(&other.hi).clone(),
        )
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [rational::format(&self.lo), rational::format(&self.hi)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let [lo, hi] = <[String; 2]>::deserialize(d)?;
        let lo = rational::parse(&lo).map_err(D::Error::custom)?;
        let hi = rational::parse(&hi).map_err(D::Error::custom)?;
        Interval::new(lo, hi).map_err(D::Error::custom)
    }
}

/// Sorted, pairwise disjoint closed intervals. Intervals that touch are merged,
/// so every set has exactly one representation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_intervals(mut intervals: Vec<Interval>) -> Self {
        intervals.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
        let mut merged: Vec<Interval> = Vec::with_capacity(intervals.len());
        for iv in intervals {
            match merged.last_mut() {
                Some(last) if iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => merged.push(iv),
            }
        }
        Self { intervals: merged }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        // Sorted by lo: find the last interval starting at or before x.
        let idx = self.intervals.partition_point(|iv| &iv.lo <= x);
        idx > 0 && self.intervals[idx - 1].contains(x)
    }

    pub fn hull(&self) -> Option<Interval> {
        let first = self.intervals.first()?;
        let last = self.intervals.last()?;
        Some(Interval::new_unchecked(first.lo.clone(), last.hi.clone()))
    }

    pub fn intersection(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let (mut i, mut k) = (0, 0);
        while i < self.intervals.len() && k < other.intervals.len() {
            let (a, b) = (&self.intervals[i], &other.intervals[k]);
            if let Some(c) = a.intersection(b) {
                out.push(c);
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                k += 1;
            }
        }
        IntervalSet::from_intervals(out)
    }

    /// Closures of the connected components of `[0,1]` minus this set, in order.
    /// Unlike an `IntervalSet`, neighbouring gaps may share an endpoint.
    pub fn gaps(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        let mut cursor: Option<&Rational> = None;
        let zero = Rational::zero();
        let one = Rational::one();
        for iv in &self.intervals {
            let start = cursor.unwrap_or(&zero);
            // The leading gap [0, lo] only exists when 0 is not in the set.
            if (cursor.is_some() || iv.lo > zero) && start < &iv.lo {
                out.push(Interval::new_unchecked(start.clone(), iv.lo.clone()));
            }
            cursor = Some(&iv.hi);
        }
        match cursor {
            None => out.push(Interval::unit()),
            Some(end) if end < &one => out.push(Interval::new_unchecked(end.clone(), one)),
            Some(_) => {}
        }
        out
    }
}

impl<'de> Deserialize<'de> for IntervalSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let intervals = Vec::<Interval>::deserialize(d)?;
        let set = IntervalSet::from_intervals(intervals.clone());
        if set.intervals != intervals {
            return Err(D::Error::custom(
                "interval set is not sorted, disjoint and merged",
            ));
        }
        Ok(set)
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{iv}")?;
        }
        f.write_str("}")
    }
}
