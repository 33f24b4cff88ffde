//! Thompson's group F: the two standard generators and a membership test.
//!
//! `x0` has slopes 1/2, 1, 2 with breakpoints at 1/2 and 3/4. `x1` is the
//! identity on `[0,1/2]` and a half-scale copy of `x0` on `[1/2,1]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::plmap::PlMap;
use crate::rational::{self, frac, Rational};
use crate::words::{GeneratorAssignment, Word};

pub const RESERVED_NAMES: [&str; 2] = ["x0", "x1"];

pub fn f_generator(index: u32) -> Result<PlMap> {
    let points = match index {
        0 => vec![(0, 1, 0, 1), (1, 2, 1, 4), (3, 4, 1, 2), (1, 1, 1, 1)],
        1 => vec![
            (0, 1, 0, 1),
            (1, 2, 1, 2),
            (3, 4, 5, 8),
            (7, 8, 3, 4),
            (1, 1, 1, 1),
        ],
        _ => return Err(Error::InvalidIndex(index)),
    };
    PlMap::from_canonical(
        points
            .into_iter()
            .map(|(a, b, c, d)| (frac(a, b), frac(c, d)))
            .collect(),
    )
}

/// The generator bound to a reserved name, if `name` is one.
pub fn reserved_generator(name: &str) -> Option<PlMap> {
    RESERVED_NAMES
        .iter()
        .position(|&r| r == name)
        .map(|i| f_generator(i as u32).expect("index 0 or 1"))
}

/// Rejects environments that bind `x0` or `x1` to anything but Thompson's generators.
pub fn check_reserved(env: &GeneratorAssignment) -> Result<()> {
    for name in RESERVED_NAMES {
        if let Some(m) = env.get(name) {
            if Some(m) != reserved_generator(name).as_ref() {
                return Err(Error::InvalidInput(format!(
                    "{name} is reserved for Thompson's generator and cannot be rebound"
                )));
            }
        }
    }
    Ok(())
}

/// Binds every reserved name used by `words` but missing from `env`.
pub fn bind_reserved<'a>(env: &mut GeneratorAssignment, words: impl IntoIterator<Item = &'a Word>) {
    for w in words {
        for s in w.symbols() {
            if env.get(s).is_none() {
                if let Some(m) = reserved_generator(s) {
                    env.insert(s, m);
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DyadicReport {
    pub is_dyadic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending_breakpoint: Option<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending_slope: Option<String>,
}

/// Dyadic breakpoints and power-of-two slopes, i.e. membership in F.
pub fn is_dyadic(f: &PlMap) -> DyadicReport {
    let offending_breakpoint = f
        .breakpoints()
        .iter()
        .find(|(x, y)| !rational::is_dyadic(x) || !rational::is_dyadic(y))
        .map(|(x, y)| (rational::format(x), rational::format(y)));
    let offending_slope = f
        .slopes()
        .find(|s: &Rational| !rational::is_power_of_two_rational(s))
        .map(|s| rational::format(&s));
    DyadicReport {
        is_dyadic: offending_breakpoint.is_none() && offending_slope.is_none(),
        offending_breakpoint,
        offending_slope,
    }
}
