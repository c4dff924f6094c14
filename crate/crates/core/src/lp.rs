//! Normal logic programs as autoepistemic theories, plus reference
//! semantics for programs computed directly on the program.

use std::fmt;

use crate::error::{Error, Result};
use crate::semantics::{eval_modal_atom, BeliefPair, Interpretation};
use crate::syntax::{Alphabet, Atom, Clause, Formula, LogicProgram, Theory};
use crate::truth::TruthValue;

/// Largest alphabet for the two-valued model enumerations.
pub const MODEL_ENUMERATION_MAX_ATOMS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Embedding {
    /// Positive body atoms stay objective.
    Ael1,
    /// Positive body atoms are wrapped in `K`.
    Ael2,
}

impl Embedding {
    pub fn translate(self, program: &LogicProgram) -> Theory {
        match self {
            Embedding::Ael1 => ael1(program),
            Embedding::Ael2 => ael2(program),
        }
    }

    /// The three-valued semantics this embedding is expected to capture.
    pub fn reference_semantics(self, program: &LogicProgram) -> ThreeValuedInterpretation {
        match self {
            Embedding::Ael1 => well_founded(program),
            Embedding::Ael2 => fitting_kunen(program),
        }
    }

    /// The two-valued models the complete fixpoints should match.
    pub fn reference_models(self, program: &LogicProgram) -> Result<Vec<Interpretation>> {
        match self {
            Embedding::Ael1 => stable_models(program),
            Embedding::Ael2 => supported_models(program),
        }
    }
}

impl std::str::FromStr for Embedding {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ael1" => Ok(Embedding::Ael1),
            "ael2" => Ok(Embedding::Ael2),
            _ => Err(format!("unknown embedding `{s}`")),
        }
    }
}

fn translate_clause(clause: &Clause, wrap_positive: bool) -> Formula {
    let positive = clause.pos_body.iter().map(|&a| {
        let f = Formula::atom(a);
        if wrap_positive {
            Formula::know(f)
        } else {
            f
        }
    });
    let negative = clause
        .neg_body
        .iter()
        .map(|&c| Formula::not(Formula::know(Formula::atom(c))));
    let body = Formula::conjunction(positive.chain(negative));
    Formula::implies(body, Formula::atom(clause.head))
}

// `$t -> a` becomes `a`; nothing else is touched.
fn normalize(f: Formula) -> Formula {
    match f {
        Formula::Implies(a, b) if *a == Formula::truth() => *b,
        f => f,
    }
}

fn embed(program: &LogicProgram, wrap_positive: bool) -> Theory {
    let formulas = program
        .clauses()
        .iter()
        .map(|c| normalize(translate_clause(c, wrap_positive)))
        .collect();
    Theory::new(program.alphabet().clone(), formulas).expect("program atoms are in its alphabet")
}

/// `a :- b1..bk, not c1..cm` becomes `b1 & … & bk & ~K(c1) & … & ~K(cm) -> a`.
pub fn ael1(program: &LogicProgram) -> Theory {
    embed(program, false)
}

/// `a :- b1..bk, not c1..cm` becomes `K(b1) & … & K(bk) & ~K(c1) & … -> a`.
pub fn ael2(program: &LogicProgram) -> Theory {
    embed(program, true)
}

/// A total map from atoms to `{t, f, u}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThreeValuedInterpretation {
    values: Vec<TruthValue>,
}

impl ThreeValuedInterpretation {
    pub fn new(values: Vec<TruthValue>) -> Self {
        Self { values }
    }

    pub fn unknown(atoms: usize) -> Self {
        Self::new(vec![TruthValue::Unknown; atoms])
    }

    pub fn from_world(atoms: usize, world: Interpretation) -> Self {
        Self::new(
            (0..atoms)
                .map(|i| TruthValue::from_bool(world.holds(Atom(i as u32))))
                .collect(),
        )
    }

    pub fn get(&self, atom: Atom) -> TruthValue {
        self.values[atom.index()]
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.values
    }

    pub fn num_atoms(&self) -> usize {
        self.values.len()
    }

    pub fn is_two_valued(&self) -> bool {
        self.values.iter().all(|v| v.is_two_valued())
    }

    /// The atoms mapped to `t`, as a world.
    pub fn true_atoms(&self) -> Interpretation {
        Interpretation::from_atoms(
            (0..self.values.len())
                .filter(|&i| self.values[i] == TruthValue::True)
                .map(|i| Atom(i as u32)),
        )
    }

    pub fn leq_kn(&self, other: &Self) -> bool {
        self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a.leq_kn(*b))
    }

    /// One `atom=value` line per atom.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> ThreeValuedDisplay<'a> {
        ThreeValuedDisplay {
            interp: self,
            alphabet,
        }
    }
}

pub struct ThreeValuedDisplay<'a> {
    interp: &'a ThreeValuedInterpretation,
    alphabet: &'a Alphabet,
}

impl fmt::Display for ThreeValuedDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.interp.values.iter().enumerate() {
            writeln!(f, "{}={}", self.alphabet.name(Atom(i as u32)), v)?;
        }
        Ok(())
    }
}

/// `I(p) = H_B(K(p))` for every atom.
pub fn projection(pair: &BeliefPair) -> ThreeValuedInterpretation {
    let values = (0..pair.num_atoms())
        .map(|i| eval_modal_atom(pair, &Formula::atom(Atom(i as u32))).expect("atom is in range"))
        .collect();
    ThreeValuedInterpretation::new(values)
}

// Least model of the definite program left after deleting every clause with
// a `not c` where `c` is in `blocked`, and dropping the remaining negations.
fn reduct_least_model(program: &LogicProgram, blocked: Interpretation) -> Interpretation {
    let mut model = Interpretation(0);
    loop {
        let mut next = model;
        for c in program.clauses() {
            if c.neg_body.iter().any(|&a| blocked.holds(a)) {
                continue;
            }
            if c.pos_body.iter().all(|&a| model.holds(a)) {
                next = next.with(c.head, true);
            }
        }
        if next == model {
            return model;
        }
        model = next;
    }
}

/// The well-founded model, by the alternating fixpoint: true atoms are the
/// least fixpoint of `Γ²` where `Γ(I)` is the least model of the reduct by
/// `I`; atoms outside `Γ` of that fixpoint are false.
pub fn well_founded(program: &LogicProgram) -> ThreeValuedInterpretation {
    let mut truths = Interpretation(0);
    loop {
        let possible = reduct_least_model(program, truths);
        let next = reduct_least_model(program, possible);
        if next == truths {
            let n = program.num_atoms();
            let values = (0..n)
                .map(|i| {
                    let a = Atom(i as u32);
                    if truths.holds(a) {
                        TruthValue::True
                    } else if possible.holds(a) {
                        TruthValue::Unknown
                    } else {
                        TruthValue::False
                    }
                })
                .collect();
            return ThreeValuedInterpretation::new(values);
        }
        truths = next;
    }
}

/// Least fixpoint (knowledge order) of the three-valued immediate
/// consequence operator, iterated from all-`u`.
pub fn fitting_kunen(program: &LogicProgram) -> ThreeValuedInterpretation {
    let n = program.num_atoms();
    let mut current = vec![TruthValue::Unknown; n];
    loop {
        let mut next = vec![TruthValue::False; n];
        for c in program.clauses() {
            let body = c
                .pos_body
                .iter()
                .map(|a| current[a.index()])
                .chain(c.neg_body.iter().map(|a| !current[a.index()]))
                .fold(TruthValue::True, |acc, v| acc & v);
            let head = &mut next[c.head.index()];
            *head = *head | body;
        }
        if next == current {
            return ThreeValuedInterpretation::new(current);
        }
        current = next;
    }
}

fn enumerate_models(
    program: &LogicProgram,
    accept: impl Fn(Interpretation) -> bool,
) -> Result<Vec<Interpretation>> {
    let n = program.num_atoms();
    if n > MODEL_ENUMERATION_MAX_ATOMS {
        return Err(Error::CapExceeded {
            atoms: n,
            cap: MODEL_ENUMERATION_MAX_ATOMS,
        });
    }
    Ok(Interpretation::all(n).filter(|&m| accept(m)).collect())
}

/// Two-valued stable models: `M` equal to the least model of its reduct.
pub fn stable_models(program: &LogicProgram) -> Result<Vec<Interpretation>> {
    enumerate_models(program, |m| reduct_least_model(program, m) == m)
}

/// Two-valued supported models: `M` equal to its own immediate consequences.
pub fn supported_models(program: &LogicProgram) -> Result<Vec<Interpretation>> {
    enumerate_models(program, |m| {
        let mut consequences = Interpretation(0);
        for c in program.clauses() {
            if c.pos_body.iter().all(|&a| m.holds(a)) && c.neg_body.iter().all(|&a| !m.holds(a)) {
                consequences = consequences.with(c.head, true);
            }
        }
        consequences == m
    })
}
