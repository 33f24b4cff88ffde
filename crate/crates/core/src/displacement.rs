//! Fixed sets of finitely generated subgroups and displacing elements.
//!
//! For `H = ⟨env⟩`, the common fixed set `fix(H)` is a finite union of points
//! and intervals, and its complement is finitely many open intervals whose
//! closures are the components `I₁..Iₙ`. An interval `J` inside the interior
//! of a component is displaced by some element of `H`; the search for one is
//! a budgeted breadth-first enumeration of reduced words in shortlex order.
//!
//! [`find_displacer_simultaneous`] builds one element displacing a target in
//! each of several components by induction on the number of components.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSet};
use crate::plmap::PlMap;
use crate::words::{eval_word, GeneratorAssignment, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDecomposition {
    pub components: Vec<Interval>,
    pub fixed: IntervalSet,
}

impl ComponentDecomposition {
    /// Index of the component whose interior contains `j`.
    pub fn component_of(&self, j: &Interval) -> Option<usize> {
        self.components.iter().position(|c| c.interior_contains(j))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisplacerResult {
    pub map: PlMap,
    pub targets: Vec<Interval>,
    pub word: Word,
}

impl DisplacerResult {
    pub fn inverse(&self) -> DisplacerResult {
        DisplacerResult {
            map: self.map.invert(),
            targets: self.targets.clone(),
            word: self.word.inverse(),
        }
    }
}

pub fn group_fixed_set(env: &GeneratorAssignment) -> ComponentDecomposition {
    let fixed = env
        .maps()
        .map(PlMap::fixed_set)
        .reduce(|acc, f| acc.intersection(&f))
        .unwrap_or_else(|| IntervalSet::from_intervals(vec![Interval::unit()]));
    ComponentDecomposition {
        components: fixed.gaps(),
        fixed,
    }
}

/// Per component, the hull of all element supports meeting it.
///
/// Fails when a support reaches a component endpoint, which means the element
/// does not fix a neighbourhood of the endpoints of its component.
pub fn supports_per_component(
    elements: &[PlMap],
    dec: &ComponentDecomposition,
) -> Result<Vec<(usize, Interval)>> {
    let mut hulls: Vec<Option<Interval>> = vec![None; dec.components.len()];
    for (ei, e) in elements.iter().enumerate() {
        for s in e.support_set().intervals() {
            let Some(ci) = dec.components.iter().position(|c| c.intersects(s)) else {
                return Err(Error::PreconditionViolated(format!(
                    "support {s} of element {ei} meets no component"
                )));
            };
            if !dec.components[ci].interior_contains(s) {
                return Err(Error::SupportTouchesBoundary {
                    element: ei,
                    component: ci,
                });
            }
            hulls[ci] = Some(match hulls[ci].take() {
                Some(h) => h.hull(s),
                None => s.clone(),
            });
        }
    }
    Ok(hulls
        .into_iter()
        .enumerate()
        .filter_map(|(i, h)| h.map(|h| (i, h)))
        .collect())
}

/// Generators in sorted name order, then their inverses in the same order.
fn alphabet(env: &GeneratorAssignment) -> Vec<(Letter, PlMap)> {
    let forward: Vec<_> = env
        .iter()
        .map(|(n, m)| (Letter::new(n, 1), m.clone()))
        .collect();
    let backward: Vec<_> = env
        .iter()
        .map(|(n, m)| (Letter::new(n, -1), m.invert()))
        .collect();
    forward.into_iter().chain(backward).collect()
}

/// Shortlex-first reduced word of length ≤ `budget` whose value displaces `j`.
pub fn find_displacer_single(
    env: &GeneratorAssignment,
    j: &Interval,
    budget: usize,
) -> Result<DisplacerResult> {
    let alpha = alphabet(env);
    let k = env.len();
    // Letter i and letter (i + k) mod 2k are mutually inverse.
    let inverse_of = |i: usize| (i + k) % (2 * k);
    let displaces = |path: &[usize]| {
        let apply = |x: &crate::Rational| {
            path.iter()
                .rev()
                .fold(x.clone(), |acc, &i| alpha[i].1.eval_unchecked(&acc))
        };
        &apply(j.hi()) < j.lo() || &apply(j.lo()) > j.hi()
    };

    for len in 1..=budget {
        if k == 0 {
            break;
        }
        let mut path = vec![0usize; len];
        // Lexicographic odometer over reduced index sequences of this length.
        let mut pos = 0usize;
        let mut next_start = vec![0usize; len];
        loop {
            let mut i = next_start[pos];
            while i < 2 * k && pos > 0 && i == inverse_of(path[pos - 1]) {
                i += 1;
            }
            if i >= 2 * k {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                next_start[pos] = path[pos] + 1;
                continue;
            }
            path[pos] = i;
            if pos + 1 == len {
                if displaces(&path) {
                    let word = Word::from_letters(path.iter().map(|&i| alpha[i].0.clone()));
                    let map = eval_word(&word, env)?;
                    debug_assert!(map.displaces(j));
                    return Ok(DisplacerResult {
                        map,
                        targets: vec![j.clone()],
                        word,
                    });
                }
                next_start[pos] = i + 1;
            } else {
                pos += 1;
                next_start[pos] = 0;
            }
        }
    }
    Err(Error::BudgetExhausted { budget })
}

/// Returns `d` or its inverse so that the image of `j` lies to the right of `j`.
pub fn orient_right(d: &DisplacerResult, j: &Interval) -> DisplacerResult {
    debug_assert!(d.map.displaces(j));
    if &d.map.eval_unchecked(j.lo()) > j.hi() {
        d.clone()
    } else {
        d.inverse()
    }
}

/// One element displacing every target at once.
///
/// Targets must sit in the interiors of distinct components of `fix(env)`,
/// listed in component order.
pub fn find_displacer_simultaneous(
    env: &GeneratorAssignment,
    targets: &[Interval],
    budget: usize,
) -> Result<DisplacerResult> {
    if targets.is_empty() {
        return Ok(DisplacerResult {
            map: PlMap::identity(),
            targets: vec![],
            word: Word::empty(),
        });
    }
    let dec = group_fixed_set(env);
    let mut indexed = Vec::with_capacity(targets.len());
    for t in targets {
        let ci = dec.component_of(t).ok_or_else(|| {
            Error::PreconditionViolated(format!("target {t} is not inside a component interior"))
        })?;
        if let Some(&(prev, _)) = indexed.last() {
            if ci <= prev {
                return Err(Error::PreconditionViolated(
                    "targets must lie in distinct components, in component order".into(),
                ));
            }
        }
        indexed.push((ci, t.clone()));
    }
    simultaneous(env, &dec, &indexed, budget)
}

fn simultaneous(
    env: &GeneratorAssignment,
    dec: &ComponentDecomposition,
    targets: &[(usize, Interval)],
    budget: usize,
) -> Result<DisplacerResult> {
    let (_, first) = &targets[0];
    let found = find_displacer_single(env, first, budget)?;
    if targets.len() == 1 {
        return Ok(found);
    }
    let j1 = orient_right(&found, first);

    let j1_inv = j1.map.invert();
    let mut widened = Vec::with_capacity(targets.len() - 1);
    for (ci, t) in &targets[1..] {
        let w = t.hull(&j1_inv.image(t));
        if !dec.components[*ci].interior_contains(&w) {
            return Err(Error::PreconditionViolated(format!(
                "widened target {w} leaves the interior of component {}",
                dec.components[*ci]
            )));
        }
        widened.push((*ci, w));
    }

    let mut rest = simultaneous(env, dec, &widened, budget)?;
    if &rest.map.eval_unchecked(first.lo()) < first.lo() {
        rest = rest.inverse();
    }

    let word = j1.word.concat(&rest.word);
    let map = j1.map.compose(&rest.map);
    let target_list: Vec<Interval> = targets.iter().map(|(_, t)| t.clone()).collect();
    if let Some(bad) = target_list.iter().find(|t| !map.displaces(t)) {
        return Err(Error::VerificationFailed(format!(
            "combined displacer does not move {bad}"
        )));
    }
    Ok(DisplacerResult {
        map,
        targets: target_list,
        word,
    })
}
