use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::syntax::{Alphabet, Atom};

/// Upper bound on the alphabet size for any explicit set of
/// interpretations, independent of the configurable [`Limits`].
pub const HARD_MAX_EXPLICIT_ATOMS: usize = 24;

/// Bounds for operations that enumerate all interpretations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub explicit_atoms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { explicit_atoms: 16 }
    }
}

impl Limits {
    pub fn new(explicit_atoms: usize) -> Self {
        Self {
            explicit_atoms: explicit_atoms.min(HARD_MAX_EXPLICIT_ATOMS),
        }
    }

    pub fn check(&self, atoms: usize) -> Result<()> {
        if atoms > self.explicit_atoms {
            Err(Error::CapExceeded {
                atoms,
                cap: self.explicit_atoms,
            })
        } else {
            Ok(())
        }
    }
}

/// A two-valued interpretation; bit `i` is the value of atom `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interpretation(pub u64);

impl Interpretation {
    pub fn from_atoms<I: IntoIterator<Item = Atom>>(true_atoms: I) -> Self {
        Interpretation(true_atoms.into_iter().fold(0, |m, a| m | (1 << a.index())))
    }

    pub fn holds(self, atom: Atom) -> bool {
        self.0 >> atom.index() & 1 == 1
    }

    pub fn with(self, atom: Atom, value: bool) -> Self {
        if value {
            Interpretation(self.0 | 1 << atom.index())
        } else {
            Interpretation(self.0 & !(1 << atom.index()))
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Every interpretation of an `n`-atom alphabet, in index order.
    pub fn all(n: usize) -> impl Iterator<Item = Interpretation> {
        assert!(n < 64);
        (0..1u64 << n).map(Interpretation)
    }

    pub fn display<'a>(&self, alphabet: &'a Alphabet) -> InterpretationDisplay<'a> {
        InterpretationDisplay {
            world: *self,
            alphabet,
        }
    }
}

pub struct InterpretationDisplay<'a> {
    world: Interpretation,
    alphabet: &'a Alphabet,
}

impl fmt::Display for InterpretationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet.is_empty() {
            return f.write_str("ε");
        }
        for a in self.alphabet.atoms() {
            if !self.world.holds(a) {
                f.write_str("¬")?;
            }
            f.write_str(self.alphabet.name(a))?;
        }
        Ok(())
    }
}

/// A set of interpretations of an `n`-atom alphabet, as a membership
/// bitmap of length `2^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WorldSet {
    atoms: usize,
    bits: FixedBitSet,
}

impl WorldSet {
    /// # Panics
    /// If `atoms` exceeds [`HARD_MAX_EXPLICIT_ATOMS`].
    pub fn empty(atoms: usize) -> Self {
        assert!(
            atoms <= HARD_MAX_EXPLICIT_ATOMS,
            "{atoms} atoms is beyond the explicit-set limit"
        );
        Self {
            atoms,
            bits: FixedBitSet::with_capacity(1 << atoms),
        }
    }

    pub fn full(atoms: usize) -> Self {
        let mut s = Self::empty(atoms);
        s.bits.insert_range(..);
        s
    }

    pub fn from_fn(atoms: usize, mut member: impl FnMut(Interpretation) -> bool) -> Self {
        let mut s = Self::empty(atoms);
        for w in Interpretation::all(atoms) {
            if member(w) {
                s.bits.insert(w.index());
            }
        }
        s
    }

    pub fn from_worlds<I: IntoIterator<Item = Interpretation>>(atoms: usize, worlds: I) -> Self {
        let mut s = Self::empty(atoms);
        for w in worlds {
            s.insert(w);
        }
        s
    }

    /// Worlds where `atom` is true.
    pub fn atom(atoms: usize, atom: Atom) -> Self {
        Self::from_fn(atoms, |w| w.holds(atom))
    }

    /// Decodes the subset with the given characteristic number: bit `i` of
    /// `code` is membership of the interpretation with index `i`.
    pub fn from_code(atoms: usize, code: u64) -> Self {
        assert!(
            atoms <= 6,
            "subset codes only cover alphabets of at most 6 atoms"
        );
        Self::from_fn(atoms, |w| code >> w.index() & 1 == 1)
    }

    pub fn num_atoms(&self) -> usize {
        self.atoms
    }

    pub fn universe_size(&self) -> usize {
        1 << self.atoms
    }

    pub fn contains(&self, w: Interpretation) -> bool {
        self.bits.contains(w.index())
    }

    pub fn insert(&mut self, w: Interpretation) {
        assert!(
            w.index() < self.universe_size(),
            "interpretation outside the alphabet"
        );
        self.bits.insert(w.index());
    }

    pub fn remove(&mut self, w: Interpretation) {
        self.bits.set(w.index(), false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe_size()
    }

    pub fn is_subset(&self, other: &WorldSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &WorldSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &WorldSet) -> WorldSet {
        let mut s = self.clone();
        s.bits.union_with(&other.bits);
        s
    }

    pub fn intersection(&self, other: &WorldSet) -> WorldSet {
        let mut s = self.clone();
        s.bits.intersect_with(&other.bits);
        s
    }

    pub fn difference(&self, other: &WorldSet) -> WorldSet {
        let mut s = self.clone();
        s.bits.difference_with(&other.bits);
        s
    }

    pub fn complement(&self) -> WorldSet {
        let mut s = self.clone();
        s.bits.toggle_range(..);
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = Interpretation> + '_ {
        self.bits.ones().map(|i| Interpretation(i as u64))
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WorldSetDisplay<'a> {
        WorldSetDisplay {
            set: self,
            alphabet,
        }
    }
}

pub struct WorldSetDisplay<'a> {
    set: &'a WorldSet,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WorldSetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.set.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", w.display(self.alphabet))?;
        }
        f.write_str("}")
    }
}
