//! Belief pairs represented by 3-FOL theories, and the derivation
//! operator computed through propositional entailment.
//!
//! A 3-FOL theory `Y` stands for the belief pair
//! `(Mod(oath(Y)), Mod(uath(Y)))`. Modal atoms are evaluated against `Y`
//! with two entailment queries each, so the least fixpoint can be reached
//! without ever enumerating interpretations.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::prover::{holds_under, models_with, Prover};
use crate::semantics::{eval_modal_atom, BeliefPair, Limits};
use crate::syntax::{oath, uath, Alphabet, Formula, Theory};
use crate::truth::TruthValue;

/// A finite set of K-free formulas that may mention `$t`, `$f`, `$u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThreeFolTheory {
    formulas: Vec<Formula>,
}

impl ThreeFolTheory {
    pub fn new(formulas: Vec<Formula>) -> Result<Self> {
        if formulas.iter().any(|f| !f.is_objective()) {
            return Err(Error::ModalInThreeFol);
        }
        Ok(Self { formulas })
    }

    /// `{$u}`, the representation of `⊥`.
    pub fn unknown() -> Self {
        Self {
            formulas: vec![Formula::unknown()],
        }
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn oath(&self) -> Vec<Formula> {
        self.formulas
            .iter()
            .map(|f| oath(f).expect("K-free"))
            .collect()
    }

    pub fn uath(&self) -> Vec<Formula> {
        self.formulas
            .iter()
            .map(|f| uath(f).expect("K-free"))
            .collect()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> ThreeFolDisplay<'a> {
        ThreeFolDisplay {
            theory: self,
            alphabet,
        }
    }
}

pub struct ThreeFolDisplay<'a> {
    theory: &'a ThreeFolTheory,
    alphabet: &'a Alphabet,
}

impl fmt::Display for ThreeFolDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.theory.formulas.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(self.alphabet))?;
        }
        f.write_str("}")
    }
}

/// Premises of one side of `Bel(Y)`, with constants folded away.
struct Side {
    premises: Vec<Formula>,
    inconsistent: bool,
}

impl Side {
    fn new(formulas: Vec<Formula>) -> Self {
        let mut premises = Vec::new();
        let mut inconsistent = false;
        for f in formulas {
            match f.simplify() {
                Formula::Const(TruthValue::True) => {}
                Formula::Const(_) => inconsistent = true,
                g => premises.push(g),
            }
        }
        Self {
            premises,
            inconsistent,
        }
    }
}

/// Evaluates `H_Y(K(F))` for one 3-FOL theory `Y`, memoizing per modal
/// subformula and per entailment query.
pub struct ModalValuation<'p> {
    prover: &'p Prover,
    upper: Side,
    lower: Side,
    values: HashMap<Formula, TruthValue>,
    queries: HashMap<(bool, Formula), bool>,
    // Assignments returned by earlier failed entailment checks. A stored
    // assignment that satisfies the premises and falsifies the goal settles
    // a query without calling the prover.
    countermodels: Vec<Vec<bool>>,
    verify: bool,
}

impl<'p> ModalValuation<'p> {
    pub fn new(prover: &'p Prover, theory: &ThreeFolTheory) -> Self {
        Self {
            prover,
            upper: Side::new(theory.oath()),
            lower: Side::new(theory.uath()),
            values: HashMap::new(),
            queries: HashMap::new(),
            countermodels: Vec::new(),
            verify: false,
        }
    }

    /// Seeds the countermodel cache, e.g. with the cache of a previous
    /// valuation. Entries are re-checked against the premises before use.
    pub fn with_countermodels(mut self, countermodels: Vec<Vec<bool>>) -> Self {
        self.countermodels = countermodels;
        self
    }

    pub fn into_countermodels(self) -> Vec<Vec<bool>> {
        self.countermodels
    }

    /// Always run both entailment checks and fail if they contradict each
    /// other. By default the second check is skipped once the first
    /// succeeds, since the two outcomes are mutually exclusive.
    pub fn verifying(mut self, verify: bool) -> Self {
        self.verify = verify;
        self
    }

    /// Pre-loads values of modal atoms `K(body)` known to hold under this
    /// theory. Keys are the bodies.
    pub fn with_known(mut self, known: &HashMap<Formula, TruthValue>) -> Self {
        self.values
            .extend(known.iter().map(|(k, v)| (k.clone(), *v)));
        self
    }

    /// Every modal-atom value computed or pre-loaded so far, keyed by body.
    pub fn values(&self) -> &HashMap<Formula, TruthValue> {
        &self.values
    }

    fn entails(&mut self, upper_side: bool, goal: Formula) -> Result<bool> {
        let goal = goal.simplify();
        let side = if upper_side { &self.upper } else { &self.lower };
        if side.inconsistent || goal == Formula::truth() {
            return Ok(true);
        }
        if let (true, Formula::Const(_)) = (side.premises.is_empty(), &goal) {
            return Ok(false);
        }
        let key = (upper_side, goal);
        if let Some(&hit) = self.queries.get(&key) {
            return Ok(hit);
        }
        let premises = &side.premises;
        let mut refuted = false;
        for m in &self.countermodels {
            if !holds_under(&key.1, m)?
                && premises.iter().all(|p| holds_under(p, m).unwrap_or(false))
            {
                refuted = true;
                break;
            }
        }
        let result = if refuted {
            false
        } else {
            match self.prover.countermodel(premises, &key.1)? {
                Some(m) => {
                    self.countermodels.push(m);
                    false
                }
                None => true,
            }
        };
        self.queries.insert(key, result);
        Ok(result)
    }

    // Replaces each K(G) in `f` by the constant H_Y(K(G)).
    fn reduce(&mut self, f: &Formula) -> Result<Formula> {
        Ok(match f {
            Formula::Atom(_) | Formula::Const(_) => f.clone(),
            Formula::Not(g) => Formula::not(self.reduce(g)?),
            Formula::And(a, b) => Formula::and(self.reduce(a)?, self.reduce(b)?),
            Formula::Or(a, b) => Formula::or(self.reduce(a)?, self.reduce(b)?),
            Formula::Implies(a, b) => Formula::implies(self.reduce(a)?, self.reduce(b)?),
            Formula::Know(g) => Formula::Const(self.value(g)?),
        })
    }

    /// `H_Y(K(body))`.
    pub fn value(&mut self, body: &Formula) -> Result<TruthValue> {
        if let Some(&v) = self.values.get(body) {
            return Ok(v);
        }
        let objective = self.reduce(body)?.simplify();
        let certain = self.entails(true, uath(&objective)?)?;
        let refuted = if certain && !self.verify {
            false
        } else {
            !self.entails(false, oath(&objective)?)?
        };
        let v = match (certain, refuted) {
            (true, true) => {
                return Err(Error::Invariant(
                    "modal atom evaluated to both t and f".into(),
                ))
            }
            (true, false) => TruthValue::True,
            (false, true) => TruthValue::False,
            (false, false) => TruthValue::Unknown,
        };
        self.values.insert(body.clone(), v);
        Ok(v)
    }
}

/// `H_Y(K(F))`.
pub fn eval_modal_atom_3fol(
    prover: &Prover,
    theory: &ThreeFolTheory,
    formula: &Formula,
) -> Result<TruthValue> {
    ModalValuation::new(prover, theory).value(formula)
}

fn substitute_values(
    theory: &Theory,
    value: &mut dyn FnMut(&Formula) -> Result<TruthValue>,
) -> Result<ThreeFolTheory> {
    let mut err = None;
    let formulas = theory
        .formulas()
        .iter()
        .map(|f| {
            f.replace_top_level_modal(&mut |g| match value(g) {
                Ok(v) => Formula::Const(v),
                Err(e) => {
                    err.get_or_insert(e);
                    Formula::unknown()
                }
            })
        })
        .collect();
    match err {
        Some(e) => Err(e),
        None => Ok(ThreeFolTheory { formulas }),
    }
}

/// `T_Y`: each top-level modal literal `K(G)` of `T` replaced by
/// `H_Y(K(G))`.
pub fn instance_3fol(
    prover: &Prover,
    theory: &Theory,
    y: &ThreeFolTheory,
) -> Result<ThreeFolTheory> {
    let mut valuation = ModalValuation::new(prover, y);
    substitute_values(theory, &mut |g| valuation.value(g))
}

/// `T_B`: each top-level modal literal `K(G)` of `T` replaced by `H_B(K(G))`.
pub fn instance_bp(theory: &Theory, pair: &BeliefPair) -> Result<ThreeFolTheory> {
    assert_eq!(theory.num_atoms(), pair.num_atoms(), "mismatched alphabets");
    substitute_values(theory, &mut |g| eval_modal_atom(pair, g))
}

/// `SDER_T(Y) = T_Y`.
pub fn sder(prover: &Prover, theory: &Theory, y: &ThreeFolTheory) -> Result<ThreeFolTheory> {
    instance_3fol(prover, theory, y)
}

/// `Bel(Y) = (Mod(oath(Y)), Mod(uath(Y)))` over `atoms` atoms.
pub fn bel(y: &ThreeFolTheory, atoms: usize) -> Result<BeliefPair> {
    bel_with(y, atoms, &Limits::default())
}

pub fn bel_with(y: &ThreeFolTheory, atoms: usize, limits: &Limits) -> Result<BeliefPair> {
    let upper = models_with(&y.oath(), atoms, limits)?;
    let lower = models_with(&y.uath(), atoms, limits)?;
    BeliefPair::new(upper, lower)
        .map_err(|_| Error::Invariant("Mod(uath(Y)) is not contained in Mod(oath(Y))".into()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SderOptions {
    /// Re-evaluate modal atoms that are already two-valued and fail if any
    /// of them changes. Costs extra entailment calls.
    pub verify_monotone: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SderStep {
    pub theory: ThreeFolTheory,
    /// Values of the top-level modal literals under `theory`.
    pub values: Vec<TruthValue>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SderFixpoint {
    pub literals: Vec<Formula>,
    /// `{$u}, SDER({$u}), …`, ending at the fixpoint.
    pub steps: Vec<SderStep>,
    pub entailment_calls: u64,
}

impl SderFixpoint {
    pub fn fixpoint(&self) -> &ThreeFolTheory {
        &self.steps.last().expect("never empty").theory
    }

    pub fn final_values(&self) -> &[TruthValue] {
        &self.steps.last().expect("never empty").values
    }

    pub fn iterations(&self) -> usize {
        self.steps.len() - 1
    }
}

fn body(literal: &Formula) -> &Formula {
    match literal {
        Formula::Know(g) => g,
        _ => unreachable!("modal literals are K-formulas"),
    }
}

fn literal_values(
    prover: &Prover,
    literals: &[Formula],
    y: &ThreeFolTheory,
    known: &mut HashMap<Formula, TruthValue>,
    countermodels: &mut Vec<Vec<bool>>,
    verify: bool,
) -> Result<Vec<TruthValue>> {
    let mut valuation = ModalValuation::new(prover, y)
        .verifying(verify)
        .with_countermodels(std::mem::take(countermodels));
    if !verify {
        valuation = valuation.with_known(known);
    }
    let values = literals
        .iter()
        .map(|l| valuation.value(body(l)))
        .collect::<Result<Vec<_>>>()?;
    let mut decided = Vec::new();
    for (k, v) in valuation.values() {
        if !v.is_two_valued() {
            continue;
        }
        decided.push((k.clone(), *v));
    }
    *countermodels = valuation.into_countermodels();
    for (k, v) in decided {
        if let Some(old) = known.insert(k, v) {
            if old != v {
                return Err(Error::Invariant(format!(
                    "a decided modal atom changed from {old} to {v}"
                )));
            }
        }
    }
    Ok(values)
}

/// Iterates `SDER_T` from `{$u}` until the values of the top-level modal
/// literals stop changing. Modal atoms that became two-valued keep their
/// value in later steps and are not queried again.
pub fn lfp_sder(prover: &Prover, theory: &Theory) -> Result<SderFixpoint> {
    lfp_sder_with(prover, theory, SderOptions::default())
}

pub fn lfp_sder_with(
    prover: &Prover,
    theory: &Theory,
    options: SderOptions,
) -> Result<SderFixpoint> {
    let start_calls = prover.calls();
    let literals = theory.top_level_modal_literals();
    let mut known = HashMap::new();
    let mut countermodels = Vec::new();
    let mut current = ThreeFolTheory::unknown();
    let mut values = literal_values(
        prover,
        &literals,
        &current,
        &mut known,
        &mut countermodels,
        options.verify_monotone,
    )?;
    let mut steps = vec![SderStep {
        theory: current.clone(),
        values: values.clone(),
    }];
    loop {
        let next = substitute_values(theory, &mut |g| {
            let i = literals
                .iter()
                .position(|l| body(l) == g)
                .expect("top-level literal");
            Ok(values[i])
        })?;
        if next == current {
            break;
        }
        let next_values = literal_values(
            prover,
            &literals,
            &next,
            &mut known,
            &mut countermodels,
            options.verify_monotone,
        )?;
        steps.push(SderStep {
            theory: next.clone(),
            values: next_values.clone(),
        });
        if next_values == values {
            break;
        }
        current = next;
        values = next_values;
    }
    Ok(SderFixpoint {
        literals,
        steps,
        entailment_calls: prover.calls() - start_calls,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{Interpretation, WorldSet};
    use crate::syntax::{parse_modal, parse_theory, Atom};
    use TruthValue::*;

    fn theory(lines: &[&str]) -> Theory {
        let text = format!("@atoms p q\n{}\n", lines.join("\n"));
        parse_theory(&text).unwrap()
    }

    fn three(texts: &[&str]) -> ThreeFolTheory {
        let mut a = Alphabet::from_names(["p", "q"]);
        ThreeFolTheory::new(
            texts
                .iter()
                .map(|t| parse_modal(t, &mut a).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn f(text: &str) -> Formula {
        parse_modal(text, &mut Alphabet::from_names(["p", "q"])).unwrap()
    }

    #[test]
    fn rejects_modal_formulas() {
        assert_eq!(
            ThreeFolTheory::new(vec![f("K(p)")]),
            Err(Error::ModalInThreeFol)
        );
    }

    #[test]
    fn modal_atoms_under_3fol_theories() {
        let prover = Prover::new();
        assert_eq!(
            eval_modal_atom_3fol(&prover, &ThreeFolTheory::unknown(), &f("p")).unwrap(),
            Unknown
        );
        assert_eq!(
            eval_modal_atom_3fol(&prover, &three(&["q"]), &f("p | ~p")).unwrap(),
            True
        );
        assert_eq!(
            eval_modal_atom_3fol(&prover, &three(&["p | $u"]), &f("p")).unwrap(),
            Unknown
        );
        assert_eq!(
            eval_modal_atom_3fol(&prover, &three(&["p"]), &f("p")).unwrap(),
            True
        );
        assert_eq!(
            eval_modal_atom_3fol(&prover, &three(&["p"]), &f("q")).unwrap(),
            False
        );
        // nested: K(p) is t under {p}, so K(K(p) & q) reduces to K($t & q)
        assert_eq!(
            eval_modal_atom_3fol(&prover, &three(&["p"]), &f("K(p) & q")).unwrap(),
            False
        );
    }

    #[test]
    fn instances_follow_the_example() {
        let prover = Prover::new();
        let t = theory(&["K(p) -> q"]);
        let y1 = instance_3fol(&prover, &t, &ThreeFolTheory::unknown()).unwrap();
        assert_eq!(y1, three(&["$u -> q"]));
        let y2 = instance_3fol(&prover, &t, &y1).unwrap();
        assert_eq!(y2, three(&["$f -> q"]));
        assert_eq!(sder(&prover, &t, &ThreeFolTheory::unknown()).unwrap(), y1);
        let obj = theory(&["p | q"]);
        assert_eq!(
            instance_3fol(&prover, &obj, &y2).unwrap(),
            three(&["p | q"])
        );
        let empty = theory(&[]);
        assert!(sder(&prover, &empty, &y1).unwrap().is_empty());
    }

    #[test]
    fn belief_pair_instances() {
        let t = theory(&["K(p) -> q"]);
        assert_eq!(
            instance_bp(&t, &BeliefPair::bottom(2)).unwrap(),
            three(&["$u -> q"])
        );
        let d1 = BeliefPair::new(WorldSet::full(2), WorldSet::atom(2, Atom(1))).unwrap();
        assert_eq!(instance_bp(&t, &d1).unwrap(), three(&["$f -> q"]));
        assert_eq!(instance_bp(&theory(&["p"]), &d1).unwrap(), three(&["p"]));
    }

    #[test]
    fn bel_examples() {
        assert_eq!(
            bel(&ThreeFolTheory::unknown(), 2).unwrap(),
            BeliefPair::bottom(2)
        );
        assert_eq!(
            bel(&three(&["$u -> q"]), 2).unwrap(),
            BeliefPair::new(WorldSet::full(2), WorldSet::atom(2, Atom(1))).unwrap()
        );
        let p = WorldSet::atom(2, Atom(0));
        assert_eq!(bel(&three(&["p"]), 2).unwrap(), BeliefPair::complete(p));
        assert!(bel(&three(&["p"]), 17).is_err());
    }

    #[test]
    fn fixpoint_of_example() {
        let prover = Prover::new();
        let t = theory(&["K(p) -> q"]);
        let fix = lfp_sder(&prover, &t).unwrap();
        assert_eq!(*fix.fixpoint(), three(&["$f -> q"]));
        assert_eq!(fix.iterations(), 2);
        let trace: Vec<_> = fix.steps.iter().map(|s| s.values.clone()).collect();
        assert_eq!(trace, vec![vec![Unknown], vec![False], vec![False]]);
        assert_eq!(
            bel(fix.fixpoint(), 2).unwrap(),
            BeliefPair::complete(WorldSet::full(2))
        );
        assert!(fix.entailment_calls <= 4);
    }

    #[test]
    fn fixpoint_of_stratified_theory() {
        let prover = Prover::new();
        let t = theory(&["p", "K(p) -> q"]);
        let fix = lfp_sder(&prover, &t).unwrap();
        assert_eq!(*fix.fixpoint(), three(&["p", "$t -> q"]));
        let pq = WorldSet::from_worlds(2, [Interpretation(3)]);
        assert_eq!(bel(fix.fixpoint(), 2).unwrap(), BeliefPair::complete(pq));
    }

    #[test]
    fn fixpoint_of_empty_theory() {
        let prover = Prover::new();
        let fix = lfp_sder(&prover, &theory(&[])).unwrap();
        assert!(fix.fixpoint().is_empty());
        assert_eq!(fix.iterations(), 1);
        assert_eq!(fix.entailment_calls, 0);
    }

    #[test]
    fn verify_mode_agrees() {
        let prover = Prover::new();
        let t = theory(&["~K(p) -> q", "~K(q) -> p", "K(p | q) -> p"]);
        let fast = lfp_sder(&prover, &t).unwrap();
        let checked = lfp_sder_with(
            &prover,
            &t,
            SderOptions {
                verify_monotone: true,
            },
        )
        .unwrap();
        assert_eq!(fast.steps, checked.steps);
        assert!(checked.entailment_calls >= fast.entailment_calls);
    }
}
