//! Orientation-preserving PL homeomorphisms of `[0,1]` with rational data.
//!
//! A [`PlMap`] is stored as its breakpoint list in canonical form: it starts
//! at `(0,0)`, ends at `(1,1)`, both coordinates strictly increase, and no
//! three consecutive breakpoints are collinear. Canonical form makes map
//! equality a structural comparison.
//!
//! Composition follows function notation: `compose(f, g)` applies `g`
//! first. Conjugation is `c^j = j∘c∘j⁻¹` and the commutator is
//! `[a,b] = a∘b∘a⁻¹∘b⁻¹`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSet};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlMap {
    breakpoints: Vec<(Rational, Rational)>,
}

/// Right derivative at 0 and left derivative at 1.
///
/// The endpoint homomorphism is kept multiplicatively as a slope pair: the
/// map `g ↦ (log g'(0), log g'(1))` is recovered by taking logarithms, which
/// would leave the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EtaValue {
    #[serde(with = "rational::serde_str")]
    pub slope0: Rational,
    #[serde(with = "rational::serde_str")]
    pub slope1: Rational,
}

impl EtaValue {
    pub fn is_trivial(&self) -> bool {
        self.slope0.is_one() && self.slope1.is_one()
    }

    pub fn mul(&self, other: &EtaValue) -> EtaValue {
        EtaValue {
            slope0: &self.slope0 * &other.slope0,
            slope1: &self.slope1 * &other.slope1,
        }
    }
}

fn interpolate(
    (x0, y0): (&Rational, &Rational),
    (x1, y1): (&Rational, &Rational),
    x: &Rational,
) -> Rational {
    if x == x0 {
        return y0.clone();
    }
    if x == x1 {
        return y1.clone();
    }
    y0 + (x - x0) * (y1 - y0) / (x1 - x0)
}

fn collinear(a: &(Rational, Rational), b: &(Rational, Rational), c: &(Rational, Rational)) -> bool {
    (&b.1 - &a.1) * (&c.0 - &b.0) == (&c.1 - &b.1) * (&b.0 - &a.0)
}

/// Drops interior breakpoints where the slope does not change.
fn canonicalize(points: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
    for p in points {
        while out.len() >= 2 && collinear(&out[out.len() - 2], &out[out.len() - 1], &p) {
            out.pop();
        }
        out.push(p);
    }
    out
}

impl PlMap {
    pub fn identity() -> Self {
        Self {
            breakpoints: vec![
                (Rational::zero(), Rational::zero()),
                (Rational::one(), Rational::one()),
            ],
        }
    }

    /// Validates a breakpoint list and returns the canonical map through it.
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        let zero_zero = (Rational::zero(), Rational::zero());
        let one_one = (Rational::one(), Rational::one());
        if points.len() < 2 {
            return Err(Error::InvalidMap(
                "need at least the breakpoints (0,0) and (1,1)".into(),
            ));
        }
        if points[0] != zero_zero {
            return Err(Error::InvalidMap("first breakpoint must be (0,0)".into()));
        }
        if points[points.len() - 1] != one_one {
            return Err(Error::InvalidMap("last breakpoint must be (1,1)".into()));
        }
        for w in points.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(Error::InvalidMap(format!(
                    "x coordinates not strictly increasing at {}",
                    w[1].0
                )));
            }
            if w[1].1 <= w[0].1 {
                return Err(Error::InvalidMap(format!(
                    "y coordinates not strictly increasing at {}",
                    w[1].1
                )));
            }
        }
        Ok(Self {
            breakpoints: canonicalize(points),
        })
    }

    /// Like [`PlMap::new`], but rejects lists that are not already canonical.
    pub fn from_canonical(points: Vec<(Rational, Rational)>) -> Result<Self> {
        let n = points.len();
        let map = Self::new(points)?;
        if map.breakpoints.len() != n {
            return Err(Error::InvalidMap("collinear interior breakpoint".into()));
        }
        Ok(map)
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.breakpoints
    }

    pub fn is_identity(&self) -> bool {
        self.breakpoints.len() == 2
    }

    /// Slopes of the linear pieces, left to right.
    pub fn slopes(&self) -> impl Iterator<Item = Rational> + '_ {
        self.breakpoints
            .windows(2)
            .map(|w| (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0))
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if !rational::in_unit_interval(x) {
            return Err(Error::DomainError(x.clone()));
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &Rational) -> Rational {
        let bp = &self.breakpoints;
        let idx = bp.partition_point(|(bx, _)| bx <= x);
        if idx == 0 {
            return bp[0].1.clone();
        }
        if idx == bp.len() {
            return bp[idx - 1].1.clone();
        }
        let (a, b) = (&bp[idx - 1], &bp[idx]);
        interpolate((&a.0, &a.1), (&b.0, &b.1), x)
    }

    /// Image of a closed interval (maps are increasing).
    pub fn image(&self, iv: &Interval) -> Interval {
        Interval::new_unchecked(self.eval_unchecked(iv.lo()), self.eval_unchecked(iv.hi()))
    }

    pub fn invert(&self) -> PlMap {
        PlMap {
            breakpoints: self
                .breakpoints
                .iter()
                .map(|(x, y)| (y.clone(), x.clone()))
                .collect(),
        }
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &PlMap) -> PlMap {
        if self.is_identity() {
            return inner.clone();
        }
        if inner.is_identity() {
            return self.clone();
        }
        let g = &inner.breakpoints;
        let f = &self.breakpoints;
        // Walk the middle coordinate u from 0 to 1, stopping at every g
        // breakpoint value and every f breakpoint abscissa.
        let mut out = Vec::with_capacity(g.len() + f.len());
        let (mut gi, mut fi) = (0usize, 0usize);
        while gi < g.len() && fi < f.len() {
            let gu = &g[gi].1;
            let fu = &f[fi].0;
            let (x, y) = if gu == fu {
                let p = (g[gi].0.clone(), f[fi].1.clone());
                gi += 1;
                fi += 1;
                p
            } else if gu < fu {
                // u = gu sits strictly inside f's segment [fi-1, fi].
                let y = interpolate((&f[fi - 1].0, &f[fi - 1].1), (&f[fi].0, &f[fi].1), gu);
                let p = (g[gi].0.clone(), y);
                gi += 1;
                p
            } else {
                // u = fu sits strictly inside g's segment [gi-1, gi]; pull back.
                let x = interpolate((&g[gi - 1].1, &g[gi - 1].0), (&g[gi].1, &g[gi].0), fu);
                let p = (x, f[fi].1.clone());
                fi += 1;
                p
            };
            out.push((x, y));
        }
        PlMap {
            breakpoints: canonicalize(out),
        }
    }

    /// `k`-fold composite; negative `k` uses the inverse.
    pub fn power(&self, k: i64) -> PlMap {
        let mut base = if k < 0 { self.invert() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = PlMap::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base);
            }
        }
        acc
    }

    /// `c^j = j ∘ c ∘ j⁻¹`.
    pub fn conjugate(&self, j: &PlMap) -> PlMap {
        j.compose(&self.compose(&j.invert()))
    }

    /// `[a,b] = a ∘ b ∘ a⁻¹ ∘ b⁻¹`.
    pub fn commutator(&self, b: &PlMap) -> PlMap {
        self.compose(b).compose(&self.invert()).compose(&b.invert())
    }

    pub fn eta(&self) -> EtaValue {
        let bp = &self.breakpoints;
        let n = bp.len();
        EtaValue {
            slope0: &bp[1].1 / &bp[1].0,
            slope1: (Rational::one() - &bp[n - 2].1) / (Rational::one() - &bp[n - 2].0),
        }
    }

    /// Whether the map is the identity near both endpoints.
    pub fn in_eta_kernel(&self) -> bool {
        self.eta().is_trivial()
    }

    pub fn fixed_set(&self) -> IntervalSet {
        let mut pieces = Vec::new();
        for w in self.breakpoints.windows(2) {
            let (x0, y0) = (&w[0].0, &w[0].1);
            let (x1, y1) = (&w[1].0, &w[1].1);
            let d0 = y0 - x0;
            let d1 = y1 - x1;
            match (d0.is_zero(), d1.is_zero()) {
                (true, true) => pieces.push(Interval::new_unchecked(x0.clone(), x1.clone())),
                (true, false) => pieces.push(Interval::new_unchecked(x0.clone(), x0.clone())),
                (false, true) => pieces.push(Interval::new_unchecked(x1.clone(), x1.clone())),
                (false, false) => {
                    if d0.is_positive() != d1.is_positive() {
                        // Displacement is linear on the segment; solve for its zero.
                        let x = x0 + &d0 * (x1 - x0) / (&d0 - &d1);
                        pieces.push(Interval::new_unchecked(x.clone(), x));
                    }
                }
            }
        }
        IntervalSet::from_intervals(pieces)
    }

    /// Closure of the set of moved points.
    pub fn support_set(&self) -> IntervalSet {
        IntervalSet::from_intervals(self.fixed_set().gaps())
    }

    /// Smallest interval containing the support; `None` for the identity.
    pub fn support_hull(&self) -> Option<Interval> {
        self.support_set().hull()
    }

    /// Whether `self(J)` and `J` are disjoint.
    pub fn displaces(&self, j: &Interval) -> bool {
        &self.eval_unchecked(j.hi()) < j.lo() || &self.eval_unchecked(j.lo()) > j.hi()
    }
}

impl fmt::Display for PlMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (x, y)) in self.breakpoints.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({x}, {y})")?;
        }
        f.write_str("]")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPlMap {
    breakpoints: Vec<[String; 2]>,
}

impl Serialize for PlMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawPlMap {
            breakpoints: self
                .breakpoints
                .iter()
                .map(|(x, y)| [rational::format(x), rational::format(y)])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawPlMap::deserialize(d)?;
        let points = raw
            .breakpoints
            .iter()
            .map(|[x, y]| Ok((rational::parse(x)?, rational::parse(y)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| D::Error::custom(Error::InvalidMap(e.to_string())))?;
        PlMap::from_canonical(points).map_err(D::Error::custom)
    }
}
