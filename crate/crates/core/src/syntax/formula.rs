use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::truth::TruthValue;

/// An atom, identified by its position in an [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(pub u32);

impl Atom {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The finite set of atom names. Atom order is insertion order; it fixes
/// the bit layout of interpretations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Atom>,
    closed: bool,
}

impl Alphabet {
    /// An open alphabet: parsing interns new atoms as they appear.
    pub fn new() -> Self {
        Self::default()
    }

    /// A closed alphabet: parsing an atom outside `names` is an error.
    pub fn declared<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut a = Self::from_names(names);
        a.closed = true;
        a
    }

    pub fn from_names<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut a = Self::new();
        for n in names {
            a.intern(&n.into());
        }
        a
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn close(&mut self) {
        self.closed = true;
    }

    pub fn open(&mut self) {
        self.closed = false;
    }

    /// Returns the atom for `name`, adding it if absent. Ignores `closed`.
    pub fn intern(&mut self, name: &str) -> Atom {
        if let Some(&a) = self.index.get(name) {
            return a;
        }
        let a = Atom(self.names.len() as u32);
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), a);
        a
    }

    pub fn get(&self, name: &str) -> Option<Atom> {
        self.index.get(name).copied()
    }

    pub fn name(&self, atom: Atom) -> &str {
        &self.names[atom.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        (0..self.names.len() as u32).map(Atom)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// Formulas of the modal language with a single operator `K`, extended by
/// the truth constants. 3-FOL formulas are the `K`-free fragment and 2-FOL
/// formulas additionally avoid `$u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(Atom),
    Const(TruthValue),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// `Implies(antecedent, consequent)`.
    Implies(Box<Formula>, Box<Formula>),
    Know(Box<Formula>),
}

impl Formula {
    pub fn atom(a: Atom) -> Self {
        Formula::Atom(a)
    }

    pub fn truth() -> Self {
        Formula::Const(TruthValue::True)
    }

    pub fn falsity() -> Self {
        Formula::Const(TruthValue::False)
    }

    pub fn unknown() -> Self {
        Formula::Const(TruthValue::Unknown)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(antecedent: Formula, consequent: Formula) -> Self {
        Formula::Implies(Box::new(antecedent), Box::new(consequent))
    }

    pub fn know(f: Formula) -> Self {
        Formula::Know(Box::new(f))
    }

    /// Left-nested conjunction; the empty conjunction is `$t`.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or_else(Formula::truth)
    }

    pub fn disjunction<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        items
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or_else(Formula::falsity)
    }

    /// Maximum nesting depth of `K`.
    pub fn modal_depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Const(_) => 0,
            Formula::Not(f) => f.modal_depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.modal_depth().max(b.modal_depth())
            }
            Formula::Know(f) => 1 + f.modal_depth(),
        }
    }

    pub fn is_objective(&self) -> bool {
        self.modal_depth() == 0
    }

    pub fn contains_unknown(&self) -> bool {
        match self {
            Formula::Atom(_) => false,
            Formula::Const(v) => *v == TruthValue::Unknown,
            Formula::Not(f) | Formula::Know(f) => f.contains_unknown(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.contains_unknown() || b.contains_unknown()
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Const(_) => 1,
            Formula::Not(f) | Formula::Know(f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    pub fn for_each_atom(&self, visit: &mut impl FnMut(Atom)) {
        match self {
            Formula::Atom(a) => visit(*a),
            Formula::Const(_) => {}
            Formula::Not(f) | Formula::Know(f) => f.for_each_atom(visit),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.for_each_atom(visit);
                b.for_each_atom(visit);
            }
        }
    }

    pub fn max_atom(&self) -> Option<Atom> {
        let mut max = None;
        self.for_each_atom(&mut |a| max = max.max(Some(a)));
        max
    }

    /// Fails with [`Error::UndeclaredAtom`] if an atom index is `>= size`.
    pub fn check_atoms(&self, size: usize) -> Result<()> {
        match self.max_atom() {
            Some(a) if a.index() >= size => Err(Error::UndeclaredAtom {
                index: a.index(),
                size,
            }),
            _ => Ok(()),
        }
    }

    /// Replaces every `K(G)` that is not under another `K` by `replace(G)`.
    pub fn replace_top_level_modal(
        &self,
        replace: &mut impl FnMut(&Formula) -> Formula,
    ) -> Formula {
        match self {
            Formula::Atom(_) | Formula::Const(_) => self.clone(),
            Formula::Not(f) => Formula::not(f.replace_top_level_modal(replace)),
            Formula::And(a, b) => Formula::and(
                a.replace_top_level_modal(replace),
                b.replace_top_level_modal(replace),
            ),
            Formula::Or(a, b) => Formula::or(
                a.replace_top_level_modal(replace),
                b.replace_top_level_modal(replace),
            ),
            Formula::Implies(a, b) => Formula::implies(
                a.replace_top_level_modal(replace),
                b.replace_top_level_modal(replace),
            ),
            Formula::Know(g) => replace(g),
        }
    }

    /// Kleene-sound constant folding. Preserves the three-valued value of
    /// the formula under every belief pair and interpretation.
    pub fn simplify(&self) -> Formula {
        use TruthValue::{False, True};
        match self {
            Formula::Atom(_) | Formula::Const(_) => self.clone(),
            Formula::Not(f) => match f.simplify() {
                Formula::Const(v) => Formula::Const(!v),
                Formula::Not(g) => *g,
                g => Formula::not(g),
            },
            Formula::And(a, b) => match (a.simplify(), b.simplify()) {
                (Formula::Const(False), _) | (_, Formula::Const(False)) => Formula::falsity(),
                (Formula::Const(True), g) | (g, Formula::Const(True)) => g,
                (Formula::Const(x), Formula::Const(y)) => Formula::Const(x & y),
                (g, h) => Formula::and(g, h),
            },
            Formula::Or(a, b) => match (a.simplify(), b.simplify()) {
                (Formula::Const(True), _) | (_, Formula::Const(True)) => Formula::truth(),
                (Formula::Const(False), g) | (g, Formula::Const(False)) => g,
                (Formula::Const(x), Formula::Const(y)) => Formula::Const(x | y),
                (g, h) => Formula::or(g, h),
            },
            Formula::Implies(a, b) => match (a.simplify(), b.simplify()) {
                (Formula::Const(False), _) | (_, Formula::Const(True)) => Formula::truth(),
                (Formula::Const(True), g) => g,
                (Formula::Const(x), Formula::Const(y)) => Formula::Const(y | !x),
                (g, Formula::Const(False)) => match g {
                    Formula::Not(h) => *h,
                    g => Formula::not(g),
                },
                (g, h) => Formula::implies(g, h),
            },
            Formula::Know(f) => Formula::know(f.simplify()),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> FormulaDisplay<'a> {
        FormulaDisplay {
            formula: self,
            alphabet,
        }
    }
}

/// `K(G)` subformulas of `theory` that are not in the scope of another `K`,
/// deduplicated structurally, in order of first occurrence.
pub fn top_level_modal_literals<'a, I>(theory: I) -> Vec<Formula>
where
    I: IntoIterator<Item = &'a Formula>,
{
    fn walk(f: &Formula, seen: &mut HashSet<Formula>, out: &mut Vec<Formula>) {
        match f {
            Formula::Atom(_) | Formula::Const(_) => {}
            Formula::Not(g) => walk(g, seen, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                walk(a, seen, out);
                walk(b, seen, out);
            }
            Formula::Know(_) => {
                if seen.insert(f.clone()) {
                    out.push(f.clone());
                }
            }
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for f in theory {
        walk(f, &mut seen, &mut out);
    }
    out
}

// Binding strength used by the printer; higher binds tighter.
fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Implies(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        _ => 4,
    }
}

pub struct FormulaDisplay<'a> {
    formula: &'a Formula,
    alphabet: &'a Alphabet,
}

impl FormulaDisplay<'_> {
    fn write(&self, f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let child = |g: &Formula, parens: bool, out: &mut fmt::Formatter<'_>| -> fmt::Result {
            if parens {
                out.write_str("(")?;
                self.write(g, out)?;
                out.write_str(")")
            } else {
                self.write(g, out)
            }
        };
        match f {
            Formula::Atom(a) => out.write_str(self.alphabet.name(*a)),
            Formula::Const(v) => write!(out, "${v}"),
            Formula::Not(g) => {
                out.write_str("~")?;
                child(g, precedence(g) < 4, out)
            }
            Formula::Know(g) => {
                out.write_str("K(")?;
                self.write(g, out)?;
                out.write_str(")")
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                let p = precedence(f);
                child(a, precedence(a) < p, out)?;
                out.write_str(if p == 3 { " & " } else { " | " })?;
                child(b, precedence(b) <= p, out)
            }
            Formula::Implies(a, b) => {
                child(a, precedence(a) <= 1, out)?;
                out.write_str(" -> ")?;
                child(b, precedence(b) < 1, out)
            }
        }
    }
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(self.formula, out)
    }
}

/// A finite modal theory over a fixed alphabet. Every atom of every
/// formula is guaranteed to belong to the alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theory {
    alphabet: Alphabet,
    formulas: Vec<Formula>,
}

impl Theory {
    pub fn new(alphabet: Alphabet, formulas: Vec<Formula>) -> Result<Self> {
        for f in &formulas {
            f.check_atoms(alphabet.len())?;
        }
        Ok(Self { alphabet, formulas })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn num_atoms(&self) -> usize {
        self.alphabet.len()
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn top_level_modal_literals(&self) -> Vec<Formula> {
        top_level_modal_literals(&self.formulas)
    }

    /// Same formulas over a larger alphabet (e.g. to evaluate a query that
    /// mentions atoms the theory does not).
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Self> {
        Theory::new(alphabet, self.formulas.clone())
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for formula in &self.formulas {
            writeln!(f, "{}", formula.display(&self.alphabet))?;
        }
        Ok(())
    }
}
