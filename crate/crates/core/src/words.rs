//! Free-group words over named generators and their evaluation in PL⁺(I).
//!
//! Word products read like function composition: evaluating `w₁·w₂` applies
//! `eval(w₂)` first, so product formulas transcribe letter for letter.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::plmap::PlMap;

/// Largest exponent accepted from serialized input.
pub const MAX_INPUT_EXPONENT: i64 = 1 << 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub symbol: String,
    pub exponent: i64,
}

impl Letter {
    pub fn new(symbol: impl Into<String>, exponent: i64) -> Self {
        Self {
            symbol: symbol.into(),
            exponent,
        }
    }
}

/// A freely reduced word: adjacent letters have distinct symbols and no
/// exponent is zero. Every constructor reduces.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn generator(symbol: impl Into<String>, exponent: i64) -> Self {
        Self::from_letters(vec![Letter::new(symbol, exponent)])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Appends on the right, cancelling and merging as needed.
    fn push(&mut self, letter: Letter) {
        if letter.exponent == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.symbol == letter.symbol => {
                last.exponent += letter.exponent;
                if last.exponent == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(letter),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|l| l.exponent.unsigned_abs()).sum()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.letters.iter().map(|l| l.symbol.as_str())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for l in &other.letters {
            w.push(l.clone());
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter::new(l.symbol.clone(), -l.exponent))
                .collect(),
        }
    }

    pub fn power(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::empty();
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }
}

/// Free reduction of an arbitrary letter sequence.
pub fn reduce(letters: &[Letter]) -> Word {
    Word::from_letters(letters.iter().cloned())
}

/// `a·b·a⁻¹·b⁻¹`, reduced.
pub fn commutator_word(a: &Word, b: &Word) -> Word {
    a.concat(b).concat(&a.inverse()).concat(&b.inverse())
}

/// `j·c·j⁻¹`, reduced.
pub fn conjugate_word(c: &Word, j: &Word) -> Word {
    j.concat(c).concat(&j.inverse())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l.exponent == 1 {
                write!(f, "{}", l.symbol)?;
            } else {
                write!(f, "{}^{}", l.symbol, l.exponent)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.letters.len()))?;
        for l in &self.letters {
            seq.serialize_element(&(&l.symbol, l.exponent))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<(String, i64)>::deserialize(d)?;
        for (sym, e) in &raw {
            if sym.is_empty() {
                return Err(D::Error::custom("empty generator name"));
            }
            if e.unsigned_abs() > MAX_INPUT_EXPONENT as u64 {
                return Err(D::Error::custom(format!("exponent {e} out of range")));
            }
        }
        Ok(Word::from_letters(
            raw.into_iter().map(|(s, e)| Letter::new(s, e)),
        ))
    }
}

/// Names bound to maps; iteration is in sorted name order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GeneratorAssignment {
    bindings: BTreeMap<String, PlMap>,
}

impl GeneratorAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: impl Into<String>, map: PlMap) -> Self {
        self.insert(name, map);
        self
    }

    pub fn insert(&mut self, name: impl Into<String>, map: PlMap) -> Option<PlMap> {
        self.bindings.insert(name.into(), map)
    }

    pub fn get(&self, name: &str) -> Option<&PlMap> {
        self.bindings.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.bindings.keys().map(String::as_str)
    }

    pub fn maps(&self) -> impl Iterator<Item = &PlMap> {
        self.bindings.values()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &PlMap)> {
        self.bindings.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn lookup(&self, name: &str) -> Result<&PlMap> {
        self.get(name)
            .ok_or_else(|| Error::UnboundSymbol(name.to_string()))
    }

    /// Errors with the first unbound symbol of `w`, if any.
    pub fn check_bound(&self, w: &Word) -> Result<()> {
        w.symbols().try_for_each(|s| self.lookup(s).map(|_| ()))
    }
}

impl<'de> Deserialize<'de> for GeneratorAssignment {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let bindings = BTreeMap::<String, PlMap>::deserialize(d)?;
        if bindings.keys().any(String::is_empty) {
            return Err(D::Error::custom("empty generator name"));
        }
        Ok(Self { bindings })
    }
}

/// The map represented by `w`.
pub fn eval_word(w: &Word, env: &GeneratorAssignment) -> Result<PlMap> {
    env.check_bound(w)?;
    let mut powers: HashMap<(&str, i64), PlMap> = HashMap::new();
    let mut layer = Vec::with_capacity(w.letters().len());
    for l in w.letters() {
        let key = (l.symbol.as_str(), l.exponent);
        let p = match powers.entry(key) {
            Entry::Occupied(e) => e.get().clone(),
            Entry::Vacant(e) => e.insert(env.lookup(&l.symbol)?.power(l.exponent)).clone(),
        };
        layer.push(p);
    }
    // Pairwise products keep intermediate maps small; a left fold would
    // recompose the whole prefix for every letter.
    while layer.len() > 1 {
        layer = layer
            .chunks(2)
            .map(|pair| match pair {
                [f, g] => f.compose(g),
                [f] => f.clone(),
                _ => unreachable!(),
            })
            .collect();
    }
    Ok(layer.pop().unwrap_or_else(PlMap::identity))
}

/// A claimed identity `target = [a₁,b₁]···[a_m,b_m]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommutatorExpression {
    pub pairs: Vec<(Word, Word)>,
    pub target: Word,
}

impl CommutatorExpression {
    pub fn new(target: Word, pairs: Vec<(Word, Word)>) -> Self {
        Self { pairs, target }
    }

    pub fn m(&self) -> usize {
        self.pairs.len()
    }

    /// The product of the commutators as a single reduced word.
    pub fn product_word(&self) -> Word {
        self.pairs.iter().fold(Word::empty(), |acc, (a, b)| {
            acc.concat(&commutator_word(a, b))
        })
    }

    /// Evaluates the product of commutators pair by pair.
    pub fn eval_product(&self, env: &GeneratorAssignment) -> Result<PlMap> {
        let mut acc = PlMap::identity();
        for (a, b) in &self.pairs {
            let a = eval_word(a, env)?;
            let b = eval_word(b, env)?;
            acc = acc.compose(&a.commutator(&b));
        }
        Ok(acc)
    }

    pub fn check_bound(&self, env: &GeneratorAssignment) -> Result<()> {
        env.check_bound(&self.target)?;
        for (a, b) in &self.pairs {
            env.check_bound(a)?;
            env.check_bound(b)?;
        }
        Ok(())
    }
}

/// Exact check that the target evaluates to the product of commutators.
pub fn verify_commutator_expression(
    e: &CommutatorExpression,
    env: &GeneratorAssignment,
) -> Result<bool> {
    e.check_bound(env)?;
    Ok(eval_word(&e.target, env)? == e.eval_product(env)?)
}
