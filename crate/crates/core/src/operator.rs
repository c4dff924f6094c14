//! The derivation operator on belief pairs and its fixpoints.

use crate::error::{Error, Result};
use crate::semantics::{
    eval_modal_atom, extension_unchecked, pws_models, BeliefPair, Limits, WorldSet,
};
use crate::syntax::{Formula, Theory};
use crate::truth::TruthValue;

/// Largest alphabet for [`enumerate_autoepistemic_models`], which visits
/// all `2^(2^n)` world sets.
pub const ENUMERATION_MAX_ATOMS: usize = 4;

/// Largest number of top-level modal literals for [`complete_fixpoints`].
pub const GUESS_MAX_LITERALS: usize = 20;

/// `D_T(B)`: the worlds that weakly satisfy `T` (no formula is `f`) and the
/// worlds that strongly satisfy it (every formula is `t`).
///
/// # Panics
/// If `pair` is over a different number of atoms than `theory`.
pub fn der(theory: &Theory, pair: &BeliefPair) -> BeliefPair {
    assert_eq!(theory.num_atoms(), pair.num_atoms(), "mismatched alphabets");
    let n = pair.num_atoms();
    let mut upper = WorldSet::full(n);
    let mut lower = WorldSet::full(n);
    for f in theory.formulas() {
        let e = extension_unchecked(pair, f);
        upper = upper.intersection(&e.not_false());
        lower = lower.intersection(&e.truthy);
    }
    BeliefPair::new(upper, lower).expect("strong satisfaction implies weak satisfaction")
}

/// The iteration of [`der`] from `⊥` up to its least fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixpointTrace {
    /// Top-level modal literals of the theory.
    pub literals: Vec<Formula>,
    /// `⊥, D(⊥), D²(⊥), …`, ending at the first fixpoint.
    pub pairs: Vec<BeliefPair>,
    /// `values[k][i]` is the value of `literals[i]` under `pairs[k]`.
    pub values: Vec<Vec<TruthValue>>,
}

impl FixpointTrace {
    pub fn fixpoint(&self) -> &BeliefPair {
        self.pairs.last().expect("trace is never empty")
    }

    /// Number of operator applications that changed the pair.
    pub fn iterations(&self) -> usize {
        self.pairs.len() - 1
    }

    /// Literals that are two-valued at step `k` but were `u` at step `k-1`
    /// (for `k = 0`, those already two-valued at `⊥`).
    pub fn newly_decided(&self, k: usize) -> Vec<&Formula> {
        self.literals
            .iter()
            .enumerate()
            .filter(|&(i, _)| {
                self.values[k][i].is_two_valued()
                    && (k == 0 || !self.values[k - 1][i].is_two_valued())
            })
            .map(|(_, l)| l)
            .collect()
    }
}

fn literal_values(literals: &[Formula], pair: &BeliefPair) -> Vec<TruthValue> {
    literals
        .iter()
        .map(|l| match l {
            Formula::Know(body) => eval_modal_atom(pair, body).expect("theory atoms are validated"),
            _ => unreachable!("modal literals are K-formulas"),
        })
        .collect()
}

pub fn lfp_der(theory: &Theory) -> Result<FixpointTrace> {
    lfp_der_with(theory, &Limits::default())
}

pub fn lfp_der_with(theory: &Theory, limits: &Limits) -> Result<FixpointTrace> {
    limits.check(theory.num_atoms())?;
    let literals = theory.top_level_modal_literals();
    let mut current = BeliefPair::bottom(theory.num_atoms());
    let mut pairs = Vec::new();
    let mut values = Vec::new();
    loop {
        let next = der(theory, &current);
        values.push(literal_values(&literals, &current));
        let done = next == current;
        if !done && !current.leq_p(&next) {
            return Err(Error::Invariant(
                "derivation sequence is not increasing".into(),
            ));
        }
        pairs.push(current);
        if done {
            break;
        }
        current = next;
    }
    Ok(FixpointTrace {
        literals,
        pairs,
        values,
    })
}

/// Whether `W = {I : (W, I) ⊨ T}` (Moore's two-valued evaluation).
pub fn is_autoepistemic_model(theory: &Theory, worlds: &WorldSet) -> bool {
    pws_models(theory, worlds) == *worlds
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutoepistemicModel {
    pub worlds: WorldSet,
    /// Whether `(W, W)` is a fixpoint of [`der`]. Always true; it is
    /// recorded so callers can display the cross-check.
    pub complete_fixpoint: bool,
}

/// All autoepistemic models, by exhaustive search over world sets. The
/// empty world set is included when it qualifies; it corresponds to the
/// inconsistent expansion. Theories mentioning `$u` are rejected, since
/// two-valued evaluation has no reading for it.
pub fn enumerate_autoepistemic_models(theory: &Theory) -> Result<Vec<AutoepistemicModel>> {
    let n = theory.num_atoms();
    if theory.formulas().iter().any(Formula::contains_unknown) {
        return Err(Error::UnknownInTwoFol);
    }
    Limits::new(ENUMERATION_MAX_ATOMS).check(n)?;
    let candidates = 1u64 << (1u64 << n);
    let mut out = Vec::new();
    for code in 0..candidates {
        let w = WorldSet::from_code(n, code);
        let model = is_autoepistemic_model(theory, &w);
        let pair = BeliefPair::complete(w.clone());
        let fixpoint = der(theory, &pair) == pair;
        if model != fixpoint {
            return Err(Error::Invariant(format!(
                "autoepistemic model check ({model}) disagrees with complete-fixpoint check ({fixpoint})"
            )));
        }
        if model {
            out.push(AutoepistemicModel {
                worlds: w,
                complete_fixpoint: fixpoint,
            });
        }
    }
    Ok(out)
}

/// All `W` such that `(W, W)` is a fixpoint of [`der`], found by guessing
/// a two-valued assignment to the top-level modal literals, taking the
/// models of the resulting objective theory, and keeping the guess when
/// those models reproduce it. Costs `2^M` model computations for `M`
/// top-level literals instead of a search over all world sets.
///
/// `$u` is read as in [`der`]: a guess whose objective theory is `u`
/// somewhere yields no complete fixpoint.
pub fn complete_fixpoints(theory: &Theory) -> Result<Vec<WorldSet>> {
    complete_fixpoints_with(theory, &Limits::default())
}

pub fn complete_fixpoints_with(theory: &Theory, limits: &Limits) -> Result<Vec<WorldSet>> {
    let n = theory.num_atoms();
    limits.check(n)?;
    let literals = theory.top_level_modal_literals();
    if literals.len() > GUESS_MAX_LITERALS {
        return Err(Error::CapExceeded {
            atoms: literals.len(),
            cap: GUESS_MAX_LITERALS,
        });
    }
    let mut found = Vec::new();
    let probe = BeliefPair::bottom(n);
    for guess in 0..1u64 << literals.len() {
        let value_of = |lit: &Formula| {
            let i = literals
                .iter()
                .position(|l| l == lit)
                .expect("literal is listed");
            TruthValue::from_bool(guess >> i & 1 == 1)
        };
        let mut weak = WorldSet::full(n);
        let mut strong = WorldSet::full(n);
        for f in theory.formulas() {
            let objective = f.replace_top_level_modal(&mut |g| {
                Formula::Const(value_of(&Formula::know(g.clone())))
            });
            let e = extension_unchecked(&probe, &objective);
            weak = weak.intersection(&e.not_false());
            strong = strong.intersection(&e.truthy);
        }
        // `$u` in the theory can leave the image incomplete
        if weak != strong {
            continue;
        }
        let pair = BeliefPair::complete(strong);
        let reproduces = literals.iter().all(|lit| match lit {
            Formula::Know(g) => eval_modal_atom(&pair, g).expect("checked atoms") == value_of(lit),
            _ => unreachable!(),
        });
        if reproduces {
            found.push(pair.into_parts().0);
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

/// The least fixpoint's verdict on `K(F)`: `t` means `F` belongs to every
/// consistent stable expansion, `f` means it belongs to none.
pub fn skeptical_value(theory: &Theory, formula: &Formula) -> Result<TruthValue> {
    skeptical_value_with(theory, formula, &Limits::default())
}

pub fn skeptical_value_with(
    theory: &Theory,
    formula: &Formula,
    limits: &Limits,
) -> Result<TruthValue> {
    formula.check_atoms(theory.num_atoms())?;
    let trace = lfp_der_with(theory, limits)?;
    eval_modal_atom(trace.fixpoint(), formula)
}
