//! Propositional (2-FOL) satisfiability, entailment, and model sets.

mod cnf;
mod dpll;

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::semantics::{Interpretation, Limits, WorldSet};
use crate::syntax::Formula;
use crate::truth::TruthValue;

pub use cnf::{to_clauses, ClauseSet, Lit};
pub use dpll::{Dpll, SatBackend};

/// An entailment engine over a pluggable SAT backend. Counts every
/// [`Prover::entails`] call; the counter is safe to share across threads.
pub struct Prover {
    backend: Box<dyn SatBackend>,
    calls: AtomicU64,
}

impl Default for Prover {
    fn default() -> Self {
        Self::new()
    }
}

impl std::fmt::Debug for Prover {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Prover")
            .field("calls", &self.calls())
            .finish()
    }
}

impl Prover {
    pub fn new() -> Self {
        Self::with_backend(Box::new(Dpll))
    }

    pub fn with_backend(backend: Box<dyn SatBackend>) -> Self {
        Self {
            backend,
            calls: AtomicU64::new(0),
        }
    }

    pub fn satisfiable(&self, clauses: &ClauseSet) -> bool {
        self.backend.solve(clauses).is_some()
    }

    /// `premises ⊨ goal`, decided as unsatisfiability of
    /// `premises ∪ {¬goal}`.
    pub fn entails(&self, premises: &[Formula], goal: &Formula) -> Result<bool> {
        Ok(self.countermodel(premises, goal)?.is_none())
    }

    /// A model of `premises` in which `goal` is false, if one exists, as
    /// truth values indexed by atom. Counts as one entailment call.
    pub fn countermodel(&self, premises: &[Formula], goal: &Formula) -> Result<Option<Vec<bool>>> {
        self.calls.fetch_add(1, Ordering::Relaxed);
        let n = premises
            .iter()
            .chain(std::iter::once(goal))
            .filter_map(Formula::max_atom)
            .max()
            .map_or(0, |a| a.index() + 1);
        let mut cs = ClauseSet::new(n);
        for p in premises {
            cs.add_formula(p)?;
        }
        cs.add_formula(&Formula::not(goal.clone()))?;
        Ok(self.backend.solve(&cs).map(|mut model| {
            model.truncate(n);
            model
        }))
    }

    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }

    pub fn reset_calls(&self) {
        self.calls.store(0, Ordering::Relaxed);
    }
}

/// Truth of a K-free, `$u`-free formula at one interpretation.
pub fn holds(formula: &Formula, world: Interpretation) -> Result<bool> {
    Ok(match formula {
        Formula::Atom(a) => world.holds(*a),
        Formula::Const(TruthValue::Unknown) => return Err(Error::UnknownInTwoFol),
        Formula::Const(v) => *v == TruthValue::True,
        Formula::Not(g) => !holds(g, world)?,
        Formula::And(a, b) => holds(a, world)? && holds(b, world)?,
        Formula::Or(a, b) => holds(a, world)? || holds(b, world)?,
        Formula::Implies(a, b) => !holds(a, world)? || holds(b, world)?,
        Formula::Know(_) => return Err(Error::ModalInThreeFol),
    })
}

/// Truth of a K-free, `$u`-free formula under an assignment indexed by
/// atom; atoms past the end of `assignment` are false.
pub fn holds_under(formula: &Formula, assignment: &[bool]) -> Result<bool> {
    Ok(match formula {
        Formula::Atom(a) => assignment.get(a.index()).copied().unwrap_or(false),
        Formula::Const(TruthValue::Unknown) => return Err(Error::UnknownInTwoFol),
        Formula::Const(v) => *v == TruthValue::True,
        Formula::Not(g) => !holds_under(g, assignment)?,
        Formula::And(a, b) => holds_under(a, assignment)? && holds_under(b, assignment)?,
        Formula::Or(a, b) => holds_under(a, assignment)? || holds_under(b, assignment)?,
        Formula::Implies(a, b) => !holds_under(a, assignment)? || holds_under(b, assignment)?,
        Formula::Know(_) => return Err(Error::ModalInThreeFol),
    })
}

/// `Mod(U)` over an `atoms`-atom alphabet, by enumeration.
pub fn models(theory: &[Formula], atoms: usize) -> Result<WorldSet> {
    models_with(theory, atoms, &Limits::default())
}

pub fn models_with(theory: &[Formula], atoms: usize, limits: &Limits) -> Result<WorldSet> {
    limits.check(atoms)?;
    for f in theory {
        f.check_atoms(atoms)?;
    }
    let mut out = WorldSet::empty(atoms);
    'worlds: for w in Interpretation::all(atoms) {
        for f in theory {
            if !holds(f, w)? {
                continue 'worlds;
            }
        }
        out.insert(w);
    }
    Ok(out)
}
