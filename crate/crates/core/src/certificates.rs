//! Commutator-length certificates for powers of kernel elements.
//!
//! Given `g = [a₁,b₁]···[a_m,b_m]` with every `g, aᵢ, bᵢ` supported in a
//! region that `j` moves off itself, the diagonal map
//! `Δₙ(c) = ∏_{i=0}^{n} c^{jⁱ}` is a homomorphism on elements supported
//! there, and with `g' = ∏_{i=0}^{n} (g^{i+1})^{jⁱ}` one has
//!
//! ```text
//! [g', j] = Δₙ(g) · (g^{-(n+1)})^{j^{n+1}}
//! ```
//!
//! Rearranging and conjugating by `k = j^{-(n+1)}` gives
//!
//! ```text
//! g^{n+1} = ([j, g'] · ∏ᵢ [Δₙ(aᵢ), Δₙ(bᵢ)])^k
//!         = [j, g'^k] · ∏ᵢ [Δₙ(aᵢ)^k, Δₙ(bᵢ)^k]
//! ```
//!
//! which is `m + 1` commutators, so `scl(g) ≤ (m+1)/(n+1)`.
//!
//! "Moves off itself" is checked per component of `fix(env)`: `j` must
//! displace the hull of the supports inside each component.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::displacement::{find_displacer_simultaneous, group_fixed_set, supports_per_component};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::plmap::PlMap;
use crate::rational::{self, Rational};
use crate::thompson::bind_reserved;
use crate::words::{
    commutator_word, conjugate_word, eval_word, verify_commutator_expression, CommutatorExpression,
    GeneratorAssignment, Word,
};

/// Largest `n` accepted from serialized certificates.
pub const MAX_SERIALIZED_N: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SclCertificate {
    pub env: GeneratorAssignment,
    pub g: Word,
    pub m: u64,
    pub n: u64,
    pub j: Word,
    pub expression: CommutatorExpression,
    pub claimed_bound: Rational,
}

impl SclCertificate {
    /// `M/N` with `M = m+1` commutators for the power `N = n+1`, unreduced.
    pub fn witness_ratio(&self) -> String {
        format!("{}/{}", self.m + 1, self.n + 1)
    }
}

/// Why a certificate was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rejection {
    WrongArity,
    WrongTarget,
    WrongBound,
    ProductMismatch,
    UnboundSymbol,
}

impl Rejection {
    pub fn as_str(&self) -> &'static str {
        match self {
            Rejection::WrongArity => "WrongArity",
            Rejection::WrongTarget => "WrongTarget",
            Rejection::WrongBound => "WrongBound",
            Rejection::ProductMismatch => "ProductMismatch",
            Rejection::UnboundSymbol => "UnboundSymbol",
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn bound(m: u64, n: u64) -> Rational {
    Rational::new(BigInt::from(m + 1), BigInt::from(n + 1))
}

fn to_i64(n: u64) -> Result<i64> {
    i64::try_from(n).map_err(|_| Error::InvalidInput(format!("n = {n} is too large")))
}

/// Checks that `j` moves every per-component support hull of `elements` off itself.
fn check_displacement(elements: &[PlMap], j: &PlMap, env: &GeneratorAssignment) -> Result<()> {
    let dec = group_fixed_set(env);
    let hulls = supports_per_component(elements, &dec).map_err(|e| {
        Error::PreconditionViolated(format!("supports do not sit inside components: {e}"))
    })?;
    for (ci, hull) in hulls {
        if !j.displaces(&hull) {
            return Err(Error::PreconditionViolated(format!(
                "j does not displace the support hull {hull} in component {}",
                dec.components[ci]
            )));
        }
    }
    Ok(())
}

fn diagonal(c: &Word, j: &Word, n: u64) -> Word {
    let mut out = Word::empty();
    let mut ji = Word::empty();
    for _ in 0..=n {
        out = out.concat(&conjugate_word(c, &ji));
        ji = ji.concat(j);
    }
    out
}

/// `Δₙ(c) = ∏_{i=0}^{n} c^{jⁱ}`, after checking that `j` displaces the support of `c`.
pub fn delta_n(c: &Word, j: &Word, n: u64, env: &GeneratorAssignment) -> Result<Word> {
    let c_map = eval_word(c, env)?;
    let j_map = eval_word(j, env)?;
    check_displacement(&[c_map], &j_map, env)?;
    Ok(diagonal(c, j, n))
}

/// `g' = ∏_{i=0}^{n} (g^{i+1})^{jⁱ}`.
pub fn g_prime(g: &Word, j: &Word, n: u64) -> Word {
    let mut out = Word::empty();
    let mut gi = Word::empty();
    let mut ji = Word::empty();
    for _ in 0..=n {
        gi = gi.concat(g);
        out = out.concat(&conjugate_word(&gi, &ji));
        ji = ji.concat(j);
    }
    out
}

/// Evaluates `[g', j]` and `Δₙ(g)·(g^{-(n+1)})^{j^{n+1}}` and compares them.
pub fn verify_key_identity(g: &Word, j: &Word, n: u64, env: &GeneratorAssignment) -> Result<bool> {
    let g_map = eval_word(g, env)?;
    let j_map = eval_word(j, env)?;
    check_displacement(&[g_map], &j_map, env)?;
    let ni = to_i64(n)?;

    let lhs = eval_word(&commutator_word(&g_prime(g, j, n), j), env)?;
    let tail = conjugate_word(&g.power(-(ni + 1)), &j.power(ni + 1));
    let rhs = eval_word(&diagonal(g, j, n).concat(&tail), env)?;
    Ok(lhs == rhs)
}

/// Builds and checks a certificate that `g^{n+1}` is a product of `m+1`
/// commutators, where `g = expr.target` and `m = expr.pairs.len()`.
pub fn make_certificate(
    expr: &CommutatorExpression,
    j: &Word,
    n: u64,
    env: &GeneratorAssignment,
) -> Result<SclCertificate> {
    expr.check_bound(env)?;
    env.check_bound(j)?;
    if !verify_commutator_expression(expr, env)? {
        return Err(Error::ProductMismatch);
    }
    let mut elements = vec![eval_word(&expr.target, env)?];
    for (a, b) in &expr.pairs {
        elements.push(eval_word(a, env)?);
        elements.push(eval_word(b, env)?);
    }
    let j_map = eval_word(j, env)?;
    check_displacement(&elements, &j_map, env)?;

    let ni = to_i64(n)?;
    let g = expr.target.clone();
    let k = j.power(-(ni + 1));
    let mut pairs = Vec::with_capacity(expr.pairs.len() + 1);
    pairs.push((
        conjugate_word(j, &k),
        conjugate_word(&g_prime(&g, j, n), &k),
    ));
    for (a, b) in &expr.pairs {
        pairs.push((
            conjugate_word(&diagonal(a, j, n), &k),
            conjugate_word(&diagonal(b, j, n), &k),
        ));
    }
    let m = expr.pairs.len() as u64;
    let cert = SclCertificate {
        env: env.clone(),
        expression: CommutatorExpression::new(g.power(ni + 1), pairs),
        g,
        m,
        n,
        j: j.clone(),
        claimed_bound: bound(m, n),
    };
    verify_certificate(&cert).map_err(|r| {
        Error::VerificationFailed(format!("freshly built certificate rejected: {r}"))
    })?;
    Ok(cert)
}

/// End-to-end construction used by the command line and the C API.
///
/// Unbound reserved names (`x0`, `x1`) in the words are bound to Thompson's
/// generators. Without `j`, the per-component support hulls of the target
/// and the `aᵢ, bᵢ` are computed and a simultaneous displacer is searched
/// for with word-length `budget`.
pub fn certify(
    expr: &CommutatorExpression,
    j: Option<&Word>,
    n: u64,
    budget: usize,
    env: &GeneratorAssignment,
) -> Result<SclCertificate> {
    let mut env = env.clone();
    let mut used = vec![&expr.target];
    for (a, b) in &expr.pairs {
        used.push(a);
        used.push(b);
    }
    used.extend(j);
    bind_reserved(&mut env, used);
    expr.check_bound(&env)?;
    if !verify_commutator_expression(expr, &env)? {
        return Err(Error::ProductMismatch);
    }
    let j = match j {
        Some(j) => j.clone(),
        None => {
            let mut elements = vec![eval_word(&expr.target, &env)?];
            for (a, b) in &expr.pairs {
                elements.push(eval_word(a, &env)?);
                elements.push(eval_word(b, &env)?);
            }
            let dec = group_fixed_set(&env);
            let targets: Vec<Interval> = supports_per_component(&elements, &dec)
                .map_err(|e| Error::PreconditionViolated(e.to_string()))?
                .into_iter()
                .map(|(_, hull)| hull)
                .collect();
            find_displacer_simultaneous(&env, &targets, budget)?.word
        }
    };
    make_certificate(expr, &j, n, &env)
}

/// Re-derives every claim of `cert` from its words and bindings alone.
pub fn verify_certificate(cert: &SclCertificate) -> std::result::Result<(), Rejection> {
    if cert.expression.pairs.len() as u64 != cert.m + 1 {
        return Err(Rejection::WrongArity);
    }
    if cert.claimed_bound != bound(cert.m, cert.n) {
        return Err(Rejection::WrongBound);
    }
    let n = i64::try_from(cert.n).map_err(|_| Rejection::WrongTarget)?;
    if cert.expression.target != cert.g.power(n + 1) {
        return Err(Rejection::WrongTarget);
    }
    if cert.env.check_bound(&cert.g).is_err() || cert.env.check_bound(&cert.j).is_err() {
        return Err(Rejection::UnboundSymbol);
    }
    match verify_commutator_expression(&cert.expression, &cert.env) {
        Ok(true) => Ok(()),
        Ok(false) => Err(Rejection::ProductMismatch),
        Err(_) => Err(Rejection::UnboundSymbol),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCertificate {
    claimed_bound: String,
    env: GeneratorAssignment,
    g: Word,
    j: Word,
    m: u64,
    n: u64,
    pairs: Vec<(Word, Word)>,
}

impl Serialize for SclCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawCertificate {
            claimed_bound: rational::format(&self.claimed_bound),
            env: self.env.clone(),
            g: self.g.clone(),
            j: self.j.clone(),
            m: self.m,
            n: self.n,
            pairs: self.expression.pairs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SclCertificate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawCertificate::deserialize(d)?;
        if raw.n > MAX_SERIALIZED_N {
            return Err(D::Error::custom(format!(
                "n = {} exceeds {MAX_SERIALIZED_N}",
                raw.n
            )));
        }
        let claimed_bound = rational::parse(&raw.claimed_bound).map_err(D::Error::custom)?;
        let target = raw.g.power(raw.n as i64 + 1);
        Ok(SclCertificate {
            env: raw.env,
            g: raw.g,
            m: raw.m,
            n: raw.n,
            j: raw.j,
            expression: CommutatorExpression::new(target, raw.pairs),
            claimed_bound,
        })
    }
}
