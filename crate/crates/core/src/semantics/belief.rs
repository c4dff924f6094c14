use std::fmt;

use crate::error::{Error, Result};
use crate::semantics::worlds::WorldSet;
use crate::syntax::Alphabet;

/// A pair `(P, S)` of interpretation sets with `S ⊆ P`.
///
/// `upper` (P) holds the worlds not known to be impossible and `lower` (S)
/// the worlds known to be possible. A pair approximates every world set
/// `W` with `S ⊆ W ⊆ P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BeliefPair {
    upper: WorldSet,
    lower: WorldSet,
}

impl BeliefPair {
    pub fn new(upper: WorldSet, lower: WorldSet) -> Result<Self> {
        assert_eq!(upper.num_atoms(), lower.num_atoms(), "mismatched alphabets");
        if !lower.is_subset(&upper) {
            return Err(Error::NotBeliefPair);
        }
        Ok(Self { upper, lower })
    }

    /// `⊥ = (A, ∅)`, the least element of the precision order.
    pub fn bottom(atoms: usize) -> Self {
        Self {
            upper: WorldSet::full(atoms),
            lower: WorldSet::empty(atoms),
        }
    }

    /// The complete pair `(W, W)`.
    pub fn complete(worlds: WorldSet) -> Self {
        Self {
            upper: worlds.clone(),
            lower: worlds,
        }
    }

    pub fn upper(&self) -> &WorldSet {
        &self.upper
    }

    pub fn lower(&self) -> &WorldSet {
        &self.lower
    }

    pub fn num_atoms(&self) -> usize {
        self.upper.num_atoms()
    }

    pub fn is_complete(&self) -> bool {
        self.upper == self.lower
    }

    /// Precision order: `P` shrinks and `S` grows.
    pub fn leq_p(&self, other: &BeliefPair) -> bool {
        other.upper.is_subset(&self.upper) && self.lower.is_subset(&other.lower)
    }

    pub fn into_parts(self) -> (WorldSet, WorldSet) {
        (self.upper, self.lower)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> BeliefPairDisplay<'a> {
        BeliefPairDisplay {
            pair: self,
            alphabet,
        }
    }
}

pub struct BeliefPairDisplay<'a> {
    pair: &'a BeliefPair,
    alphabet: &'a Alphabet,
}

impl fmt::Display for BeliefPairDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P={} S={}",
            self.pair.upper.display(self.alphabet),
            self.pair.lower.display(self.alphabet)
        )
    }
}
