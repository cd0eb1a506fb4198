//! Exact computation in the solvable Baumslag-Solitar groups
//! BS(n,1) = < a, t | t^{-1} a^n t = a > for any integer n with |n| >= 2.
//!
//! The crate provides:
//!
//! * [`ring`] -- the coefficient ring Z[1/n] with canonical forms, units,
//!   gcds and Bezout identities;
//! * [`group`] -- normal forms a^nu t^c with exact group operations and a
//!   faithful 2x2 rational matrix representation;
//! * [`words`] -- a parser and evaluator for words over the generators,
//!   which solves the word problem;
//! * [`aut`] -- the automorphism group { phi_{alpha,beta} } with
//!   composition, inversion, application and inner automorphisms;
//! * [`decision`] -- the conjugacy, twisted-conjugacy and orbit decision
//!   procedures, all returning verified witnesses on yes answers.
//!
//! Everything is exact: numerators and denominators are arbitrary
//! precision, exponents are machine integers with overflow checks, and no
//! floating point is used anywhere.
//!
//! ```
//! use bsn1::{decision, NContext, Word};
//!
//! let ctx = NContext::new(2)?;
//! let u = Word::parse("a", &ctx)?.evaluate(&ctx)?;
//! let v = Word::parse("t^-1 a^4 t", &ctx)?.evaluate(&ctx)?;
//! assert_eq!(v.to_string(), "a^2");
//!
//! // a and a^2 are conjugate in BS(2,1); the witness is returned and
//! // verified by direct multiplication before you ever see it
//! let dec = decision::conjugacy(&u, &v, &ctx)?;
//! assert!(dec.answer);
//! assert_eq!(dec.witness.unwrap().g.to_string(), "t");
//! # Ok::<(), bsn1::Error>(())
//! ```

pub mod aut;
pub mod decision;
pub mod error;
pub mod group;
pub mod ring;
pub mod words;

pub use aut::Automorphism;
pub use decision::{
    conjugacy, coset_contains_unit, orbit, solve_exponential, twisted_conjugacy,
    twisted_equation_data, ConjugacyWitness, Decision, ExponentialSolution, OrbitWitness,
    ResiduePowers, TwistedEquationData, TwistedWitness,
};
pub use error::Error;
pub use group::{BsElement, RationalMatrix2};
pub use ring::{BezoutData, LocalNumber, NContext, PowerForm};
pub use words::{Term, Word};
