use std::fmt;

use crate::syntax::formula::{Alphabet, Atom};

/// `head :- pos_body, not neg_body.`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clause {
    pub head: Atom,
    pub pos_body: Vec<Atom>,
    pub neg_body: Vec<Atom>,
}

impl Clause {
    pub fn fact(head: Atom) -> Self {
        Self {
            head,
            pos_body: Vec::new(),
            neg_body: Vec::new(),
        }
    }

    pub fn new(head: Atom, pos_body: Vec<Atom>, neg_body: Vec<Atom>) -> Self {
        Self {
            head,
            pos_body,
            neg_body,
        }
    }

    pub fn is_fact(&self) -> bool {
        self.pos_body.is_empty() && self.neg_body.is_empty()
    }
}

/// A normal logic program over its own alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicProgram {
    alphabet: Alphabet,
    clauses: Vec<Clause>,
}

impl LogicProgram {
    /// # Panics
    /// If a clause mentions an atom outside `alphabet`.
    pub fn new(alphabet: Alphabet, clauses: Vec<Clause>) -> Self {
        let n = alphabet.len();
        for c in &clauses {
            assert!(
                std::iter::once(&c.head)
                    .chain(&c.pos_body)
                    .chain(&c.neg_body)
                    .all(|a| a.index() < n),
                "clause atom outside the program alphabet"
            );
        }
        Self { alphabet, clauses }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn num_atoms(&self) -> usize {
        self.alphabet.len()
    }
}

impl fmt::Display for LogicProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            write!(f, "{}", self.alphabet.name(c.head))?;
            let body: Vec<String> = c
                .pos_body
                .iter()
                .map(|a| self.alphabet.name(*a).to_string())
                .chain(
                    c.neg_body
                        .iter()
                        .map(|a| format!("not {}", self.alphabet.name(*a))),
                )
                .collect();
            if !body.is_empty() {
                write!(f, " :- {}", body.join(", "))?;
            }
            writeln!(f, ".")?;
        }
        Ok(())
    }
}
