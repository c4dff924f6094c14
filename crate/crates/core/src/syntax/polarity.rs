//! The polarity substitutions on 3-FOL formulas.
//!
//! An occurrence is positive when it sits under an even number of polarity
//! flips. Negation flips, and so does the antecedent of an implication;
//! conjunction and disjunction preserve polarity.

use crate::error::{Error, Result};
use crate::syntax::formula::Formula;
use crate::truth::TruthValue;

fn substitute(
    f: &Formula,
    positive: bool,
    on_pos: TruthValue,
    on_neg: TruthValue,
) -> Result<Formula> {
    Ok(match f {
        Formula::Atom(_) => f.clone(),
        Formula::Const(TruthValue::Unknown) => {
            Formula::Const(if positive { on_pos } else { on_neg })
        }
        Formula::Const(_) => f.clone(),
        Formula::Not(g) => Formula::not(substitute(g, !positive, on_pos, on_neg)?),
        Formula::And(a, b) => Formula::and(
            substitute(a, positive, on_pos, on_neg)?,
            substitute(b, positive, on_pos, on_neg)?,
        ),
        Formula::Or(a, b) => Formula::or(
            substitute(a, positive, on_pos, on_neg)?,
            substitute(b, positive, on_pos, on_neg)?,
        ),
        Formula::Implies(a, b) => Formula::implies(
            substitute(a, !positive, on_pos, on_neg)?,
            substitute(b, positive, on_pos, on_neg)?,
        ),
        Formula::Know(_) => return Err(Error::ModalInThreeFol),
    })
}

/// Upper approximation: positive `$u` becomes `$t`, negative `$u` becomes `$f`.
pub fn oath(f: &Formula) -> Result<Formula> {
    substitute(f, true, TruthValue::True, TruthValue::False)
}

/// Lower approximation: positive `$u` becomes `$f`, negative `$u` becomes `$t`.
pub fn uath(f: &Formula) -> Result<Formula> {
    substitute(f, true, TruthValue::False, TruthValue::True)
}

pub fn oath_all(theory: &[Formula]) -> Result<Vec<Formula>> {
    theory.iter().map(oath).collect()
}

pub fn uath_all(theory: &[Formula]) -> Result<Vec<Formula>> {
    theory.iter().map(uath).collect()
}
