//! Definitional clause form for 2-FOL formulas.
//!
//! The formula is put in negation normal form with constants folded, then
//! clausified. Conjunctions nested inside a disjunction are named by a
//! fresh auxiliary atom `x` with one-directional definitions `x → C`,
//! which keeps the result equisatisfiable and its models, projected to the
//! original atoms, equal to the formula's models.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::syntax::Formula;
use crate::truth::TruthValue;

/// A literal over variable `var`; variables below
/// [`ClauseSet::num_original`] are the formula's atoms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit {
    code: u32,
}

impl Lit {
    pub fn new(var: u32, positive: bool) -> Self {
        Lit {
            code: var << 1 | u32::from(!positive),
        }
    }

    pub fn var(self) -> u32 {
        self.code >> 1
    }

    pub fn is_positive(self) -> bool {
        self.code & 1 == 0
    }

    pub fn negate(self) -> Lit {
        Lit {
            code: self.code ^ 1,
        }
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = i64::from(self.var()) + 1;
        write!(f, "{}", if self.is_positive() { v } else { -v })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClauseSet {
    clauses: Vec<Vec<Lit>>,
    num_original: usize,
    num_vars: usize,
}

impl ClauseSet {
    pub fn new(num_original: usize) -> Self {
        Self {
            clauses: Vec::new(),
            num_original,
            num_vars: num_original,
        }
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    pub fn num_original(&self) -> usize {
        self.num_original
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_auxiliary(&self) -> usize {
        self.num_vars - self.num_original
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    fn fresh(&mut self) -> u32 {
        self.num_vars += 1;
        (self.num_vars - 1) as u32
    }

    /// Adds a clause, dropping duplicate literals and skipping it entirely
    /// if it is a tautology.
    pub fn add_clause(&mut self, mut lits: Vec<Lit>) {
        lits.sort();
        lits.dedup();
        if lits.windows(2).any(|w| w[0].var() == w[1].var()) {
            return;
        }
        for l in &lits {
            self.num_vars = self.num_vars.max(l.var() as usize + 1);
        }
        self.clauses.push(lits);
    }

    /// Conjoins `formula` (which must be K-free and `$u`-free).
    pub fn add_formula(&mut self, formula: &Formula) -> Result<()> {
        formula.check_atoms(self.num_original)?;
        match nnf(formula, true)? {
            Nnf::Const(true) => {}
            n => self.add_top(n),
        }
        Ok(())
    }

    fn add_top(&mut self, n: Nnf) {
        match n {
            Nnf::Const(true) => {}
            Nnf::Const(false) => self.add_clause(Vec::new()),
            Nnf::Lit(l) => self.add_clause(vec![l]),
            Nnf::And(xs) => xs.into_iter().for_each(|x| self.add_top(x)),
            Nnf::Or(xs) => {
                let lits = self.disjunct_lits(xs);
                self.add_clause(lits);
            }
        }
    }

    fn disjunct_lits(&mut self, xs: Vec<Nnf>) -> Vec<Lit> {
        let mut lits = Vec::new();
        for x in xs {
            match x {
                Nnf::Lit(l) => lits.push(l),
                Nnf::Or(ys) => lits.extend(self.disjunct_lits(ys)),
                and @ Nnf::And(_) => {
                    let name = self.fresh();
                    self.define(name, and);
                    lits.push(Lit::new(name, true));
                }
                Nnf::Const(_) => unreachable!("constants are folded out of disjunctions"),
            }
        }
        lits
    }

    // Adds clauses for `name → n`.
    fn define(&mut self, name: u32, n: Nnf) {
        let guard = Lit::new(name, false);
        match n {
            Nnf::Const(true) => {}
            Nnf::Const(false) => self.add_clause(vec![guard]),
            Nnf::Lit(l) => self.add_clause(vec![guard, l]),
            Nnf::And(xs) => xs.into_iter().for_each(|x| self.define(name, x)),
            Nnf::Or(xs) => {
                let mut lits = self.disjunct_lits(xs);
                lits.push(guard);
                self.add_clause(lits);
            }
        }
    }

    /// DIMACS CNF text; variables are numbered from 1 in index order.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "c {} original atoms, {} auxiliary",
            self.num_original,
            self.num_auxiliary()
        )
        .unwrap();
        writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len()).unwrap();
        for c in &self.clauses {
            for l in c {
                write!(out, "{l} ").unwrap();
            }
            out.push_str("0\n");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Nnf {
    Const(bool),
    Lit(Lit),
    And(Vec<Nnf>),
    Or(Vec<Nnf>),
}

fn junction(conj: bool, parts: Vec<Nnf>) -> Nnf {
    // Absorbing element for the connective: false for ∧, true for ∨.
    let absorbing = !conj;
    let mut out = Vec::new();
    for p in parts {
        match p {
            Nnf::Const(b) if b == absorbing => return Nnf::Const(absorbing),
            Nnf::Const(_) => {}
            Nnf::And(xs) if conj => out.extend(xs),
            Nnf::Or(xs) if !conj => out.extend(xs),
            other => out.push(other),
        }
    }
    match out.len() {
        0 => Nnf::Const(conj),
        1 => out.pop().unwrap(),
        _ if conj => Nnf::And(out),
        _ => Nnf::Or(out),
    }
}

fn nnf(f: &Formula, positive: bool) -> Result<Nnf> {
    Ok(match f {
        Formula::Atom(a) => Nnf::Lit(Lit::new(a.0, positive)),
        Formula::Const(TruthValue::Unknown) => return Err(Error::UnknownInTwoFol),
        Formula::Const(v) => Nnf::Const((*v == TruthValue::True) == positive),
        Formula::Not(g) => nnf(g, !positive)?,
        Formula::And(a, b) => junction(positive, vec![nnf(a, positive)?, nnf(b, positive)?]),
        Formula::Or(a, b) => junction(!positive, vec![nnf(a, positive)?, nnf(b, positive)?]),
        Formula::Implies(a, b) => junction(!positive, vec![nnf(a, !positive)?, nnf(b, positive)?]),
        Formula::Know(_) => return Err(Error::ModalInThreeFol),
    })
}

/// Clause form of a single formula over `num_original` atoms.
pub fn to_clauses(formula: &Formula, num_original: usize) -> Result<ClauseSet> {
    let mut cs = ClauseSet::new(num_original);
    cs.add_formula(formula)?;
    Ok(cs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_modal, Alphabet};

    fn cs(text: &str) -> ClauseSet {
        let mut a = Alphabet::from_names(["p", "q", "r"]);
        to_clauses(&parse_modal(text, &mut a).unwrap(), 3).unwrap()
    }

    #[test]
    fn constants() {
        assert!(cs("$t").is_empty());
        assert_eq!(cs("$f").clauses(), [Vec::<Lit>::new()]);
        assert!(cs("p | ~p").is_empty());
    }

    #[test]
    fn flat_disjunction() {
        assert_eq!(
            cs("p | q").clauses(),
            [vec![Lit::new(0, true), Lit::new(1, true)]]
        );
        assert_eq!(cs("p | q").num_auxiliary(), 0);
    }

    #[test]
    fn implication_and_conjunction() {
        let c = cs("p -> q & r");
        // ¬p ∨ x, ¬x ∨ q, ¬x ∨ r
        assert_eq!(c.clauses().len(), 3);
        assert_eq!(c.num_auxiliary(), 1);
        let c = cs("(p -> q) & r");
        assert_eq!(c.clauses().len(), 2);
        assert_eq!(c.num_auxiliary(), 0);
    }

    #[test]
    fn rejects_modal_and_unknown() {
        let mut a = Alphabet::from_names(["p"]);
        let k = parse_modal("K(p)", &mut a).unwrap();
        assert_eq!(to_clauses(&k, 1), Err(Error::ModalInThreeFol));
        assert_eq!(
            to_clauses(&Formula::unknown(), 1),
            Err(Error::UnknownInTwoFol)
        );
    }

    #[test]
    fn dimacs() {
        let text = cs("p | ~q").to_dimacs();
        assert!(text.contains("p cnf 3 1"));
        assert!(text.contains("1 -2 0"));
    }
}
