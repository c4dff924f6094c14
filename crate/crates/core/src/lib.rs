//! Propositional autoepistemic logic with a three-valued fixpoint semantics.
//!
//! * [`syntax`]: formulas, theories, logic programs, parsers.
//! * [`semantics`]: world sets, belief pairs, three-valued evaluation.
//! * [`operator`]: the derivation operator over explicit belief pairs.
//! * [`prover`]: CNF conversion and a DPLL entailment checker.
//! * [`effective`]: the same operator computed on 3-FOL theories through
//!   entailment queries.
//! * [`lp`]: logic-program embeddings and reference program semantics.

pub mod effective;
pub mod error;
pub mod lp;
pub mod operator;
pub mod prover;
pub mod semantics;
pub mod syntax;
pub mod truth;

pub use error::{Error, ParseError, Result};
pub use semantics::{BeliefPair, Interpretation, Limits, WorldSet};
pub use syntax::{Alphabet, Atom, Formula, LogicProgram, Theory};
pub use truth::TruthValue;
