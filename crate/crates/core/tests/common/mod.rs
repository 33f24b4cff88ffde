//! Shared generators for the integration and acceptance tests.

#![allow(dead_code)]

use plscl::rational::{frac, int};
use plscl::{
    f_generator, CommutatorExpression, GeneratorAssignment, Interval, PlMap, Rational, Word,
};
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn map(points: &[(i64, i64, i64, i64)]) -> PlMap {
    PlMap::new(
        points
            .iter()
            .map(|&(a, b, c, d)| (frac(a, b), frac(c, d)))
            .collect(),
    )
    .unwrap()
}

pub fn interval(a: i64, b: i64, c: i64, d: i64) -> Interval {
    Interval::new(frac(a, b), frac(c, d)).unwrap()
}

/// `k` distinct sorted values `i/den`, `0 < i < den`.
fn sorted_grid(rng: &mut impl Rng, den: i64, k: usize) -> Vec<i64> {
    let mut v: Vec<i64> = sample(rng, (den - 1) as usize, k)
        .into_iter()
        .map(|i| i as i64 + 1)
        .collect();
    v.sort_unstable();
    v
}

/// A map that is the identity outside `[lo, hi]` and moves points inside it.
///
/// The interior breakpoints are drawn from a grid of `grid` steps across `[lo, hi]`.
pub fn bump_in(rng: &mut impl Rng, lo: &Rational, hi: &Rational, grid: i64) -> PlMap {
    loop {
        let k = rng.gen_range(1..=3);
        let xs = sorted_grid(rng, grid, k);
        let ys = sorted_grid(rng, grid, k);
        if xs == ys {
            continue;
        }
        let at = |i: i64| lo + (hi - lo) * frac(i, grid);
        let mut pts = vec![(int(0), int(0)), (lo.clone(), lo.clone())];
        pts.extend(xs.iter().zip(&ys).map(|(&x, &y)| (at(x), at(y))));
        pts.push((hi.clone(), hi.clone()));
        pts.push((int(1), int(1)));
        pts.dedup_by(|b, a| a.0 == b.0);
        return PlMap::new(pts).unwrap();
    }
}

/// A generic map with up to four interior breakpoints on the `1/64` grid.
pub fn generic_map(rng: &mut impl Rng) -> PlMap {
    let k = rng.gen_range(0..=4);
    let xs = sorted_grid(rng, 64, k);
    let ys = sorted_grid(rng, 64, k);
    let mut pts = vec![(int(0), int(0))];
    pts.extend(
        xs.iter()
            .zip(&ys)
            .map(|(&x, &y)| (frac(x, 64), frac(y, 64))),
    );
    pts.push((int(1), int(1)));
    PlMap::new(pts).unwrap()
}

/// Either a generic map or a product of bumps, which has identity stretches
/// and isolated fixed points.
pub fn random_map(rng: &mut impl Rng) -> PlMap {
    if rng.gen_bool(0.5) {
        return generic_map(rng);
    }
    let mut f = PlMap::identity();
    for _ in 0..rng.gen_range(1..=3) {
        let ends = sorted_grid(rng, 16, 2);
        let b = bump_in(rng, &frac(ends[0], 16), &frac(ends[1], 16), 8);
        f = f.compose(&b);
    }
    f
}

/// A random dyadic interval `[p/2^k, q/2^k]` inside `(0, 1)`, at most a quarter wide.
pub fn dyadic_interval(rng: &mut impl Rng) -> Interval {
    let k = rng.gen_range(3..=5);
    let den = 1i64 << k;
    let p = rng.gen_range(1..den - 1);
    let q = rng.gen_range(p + 1..=(p + den / 4).min(den - 1));
    Interval::new(frac(p, den), frac(q, den)).unwrap()
}

/// A freely reduced word of up to `max_len` letters, each with exponent `±1`.
pub fn random_word(rng: &mut impl Rng, names: &[&str], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut w = Word::empty();
    for _ in 0..len {
        let name = names[rng.gen_range(0..names.len())];
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        w = w.concat(&Word::generator(name, e));
    }
    w
}

/// A nonempty reduced word of up to `max_len` letters.
pub fn random_nonempty_word(rng: &mut impl Rng, names: &[&str], max_len: usize) -> Word {
    loop {
        let w = random_word(rng, names, max_len);
        if !w.is_empty() {
            return w;
        }
    }
}

/// Two bumps supported in `[1/4, 5/8]` together with `x0`, whose square
/// displaces that interval.
pub fn standing_env() -> GeneratorAssignment {
    GeneratorAssignment::new()
        .with(
            "a",
            map(&[
                (0, 1, 0, 1),
                (1, 4, 1, 4),
                (3, 8, 1, 2),
                (5, 8, 5, 8),
                (1, 1, 1, 1),
            ]),
        )
        .with(
            "b",
            map(&[
                (0, 1, 0, 1),
                (3, 8, 3, 8),
                (7, 16, 1, 2),
                (1, 2, 9, 16),
                (5, 8, 5, 8),
                (1, 1, 1, 1),
            ]),
        )
        .with("x0", f_generator(0).unwrap())
}

/// `[a,b]` written as one commutator.
pub fn standing_expr() -> CommutatorExpression {
    let (a, b) = (Word::generator("a", 1), Word::generator("b", 1));
    CommutatorExpression::new(plscl::commutator_word(&a, &b), vec![(a, b)])
}

pub fn standing_j() -> Word {
    Word::generator("x0", 2)
}
