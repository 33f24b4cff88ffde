//! Exact arithmetic for the group PL⁺(I) of orientation-preserving
//! piecewise-linear homeomorphisms of `[0, 1]`, together with a certificate
//! machine for stable commutator length.
//!
//! Every group element is a [`PlMap`] with rational breakpoints, so all
//! identities (group axioms, disjointness of supports, commutator
//! expressions) are decided by exact structural comparison. The
//! [`certificates`] module turns an expression `g = [a₁,b₁]···[a_m,b_m]`
//! in the endpoint kernel into a verified witness that `gⁿ⁺¹` is a product
//! of `m + 1` commutators, so `scl(g) ≤ (m+1)/(n+1)` for every `n`.
//!
//! ```
//! use plscl::rational::frac;
//! use plscl::{f_generator, Interval};
//!
//! let x0 = f_generator(0).unwrap();
//! assert_eq!(x0.eval(&frac(5, 8)).unwrap(), frac(3, 8));
//!
//! let j = Interval::new(frac(1, 4), frac(5, 8)).unwrap();
//! assert!(x0.power(2).displaces(&j));
//! ```

pub mod certificates;
pub mod cli;
pub mod displacement;
mod error;
pub mod interval;
pub mod plmap;
pub mod rational;
pub mod thompson;
pub mod words;

pub use certificates::{
    certify, delta_n, g_prime, make_certificate, verify_certificate, verify_key_identity,
    Rejection, SclCertificate,
};
pub use displacement::{
    find_displacer_simultaneous, find_displacer_single, group_fixed_set, orient_right,
    supports_per_component, ComponentDecomposition, DisplacerResult,
};
pub use error::{Error, Result};
pub use interval::{Interval, IntervalSet};
pub use plmap::{EtaValue, PlMap};
pub use rational::Rational;
pub use thompson::{f_generator, is_dyadic, DyadicReport};
pub use words::{
    commutator_word, conjugate_word, eval_word, verify_commutator_expression, CommutatorExpression,
    GeneratorAssignment, Letter, Word,
};
