use crate::error::Result;
use crate::semantics::belief::BeliefPair;
use crate::semantics::worlds::{Interpretation, WorldSet};
use crate::syntax::{Formula, Theory};
use crate::truth::TruthValue;

/// `H_{B,I}(F)`, evaluated by direct recursion on the formula.
///
/// `K(G)` quantifies over the worlds of `B`: `t` if every world of the
/// upper set makes `G` true, `f` if some world of the lower set makes `G`
/// false, `u` otherwise.
pub fn eval(pair: &BeliefPair, world: Interpretation, formula: &Formula) -> Result<TruthValue> {
    formula.check_atoms(pair.num_atoms())?;
    Ok(eval_unchecked(pair, world, formula))
}

fn eval_unchecked(pair: &BeliefPair, world: Interpretation, formula: &Formula) -> TruthValue {
    match formula {
        Formula::Atom(a) => TruthValue::from_bool(world.holds(*a)),
        Formula::Const(v) => *v,
        Formula::Not(g) => eval_unchecked(pair, world, g).inverse(),
        Formula::And(a, b) => eval_unchecked(pair, world, a) & eval_unchecked(pair, world, b),
        Formula::Or(a, b) => eval_unchecked(pair, world, a) | eval_unchecked(pair, world, b),
        Formula::Implies(a, b) => {
            eval_unchecked(pair, world, b) | eval_unchecked(pair, world, a).inverse()
        }
        Formula::Know(g) => {
            if pair
                .upper()
                .iter()
                .all(|j| eval_unchecked(pair, j, g) == TruthValue::True)
            {
                TruthValue::True
            } else if pair
                .lower()
                .iter()
                .any(|j| eval_unchecked(pair, j, g) == TruthValue::False)
            {
                TruthValue::False
            } else {
                TruthValue::Unknown
            }
        }
    }
}

/// Moore's two-valued evaluation `H_{W,I}(F)`; `$u` is treated as false.
pub fn eval_pws(worlds: &WorldSet, world: Interpretation, formula: &Formula) -> Result<bool> {
    formula.check_atoms(worlds.num_atoms())?;
    Ok(eval_pws_unchecked(worlds, world, formula))
}

fn eval_pws_unchecked(worlds: &WorldSet, world: Interpretation, formula: &Formula) -> bool {
    match formula {
        Formula::Atom(a) => world.holds(*a),
        Formula::Const(v) => *v == TruthValue::True,
        Formula::Not(g) => !eval_pws_unchecked(worlds, world, g),
        Formula::And(a, b) => {
            eval_pws_unchecked(worlds, world, a) && eval_pws_unchecked(worlds, world, b)
        }
        Formula::Or(a, b) => {
            eval_pws_unchecked(worlds, world, a) || eval_pws_unchecked(worlds, world, b)
        }
        Formula::Implies(a, b) => {
            !eval_pws_unchecked(worlds, world, a) || eval_pws_unchecked(worlds, world, b)
        }
        Formula::Know(g) => worlds.iter().all(|j| eval_pws_unchecked(worlds, j, g)),
    }
}

/// `F ∈ Th(W)`: `F` is true at every world of `W`.
pub fn theory_contains(worlds: &WorldSet, formula: &Formula) -> Result<bool> {
    formula.check_atoms(worlds.num_atoms())?;
    Ok(worlds
        .iter()
        .all(|w| eval_pws_unchecked(worlds, w, formula)))
}

/// The worlds where a formula is true and the worlds where it is false
/// under some belief pair. Worlds in neither set give `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub truthy: WorldSet,
    pub falsy: WorldSet,
}

impl Extension {
    fn constant(atoms: usize, v: TruthValue) -> Self {
        let (all, none) = (WorldSet::full(atoms), WorldSet::empty(atoms));
        match v {
            TruthValue::True => Extension {
                truthy: all,
                falsy: none,
            },
            TruthValue::False => Extension {
                truthy: none,
                falsy: all,
            },
            TruthValue::Unknown => Extension {
                truthy: none.clone(),
                falsy: none,
            },
        }
    }

    /// Worlds where the value is not `f`.
    pub fn not_false(&self) -> WorldSet {
        self.falsy.complement()
    }

    pub fn value_at(&self, world: Interpretation) -> TruthValue {
        if self.truthy.contains(world) {
            TruthValue::True
        } else if self.falsy.contains(world) {
            TruthValue::False
        } else {
            TruthValue::Unknown
        }
    }
}

/// Set-at-a-time form of [`eval`]: computes the value of `formula` at every
/// interpretation in one bottom-up pass over the formula.
pub fn extension(pair: &BeliefPair, formula: &Formula) -> Result<Extension> {
    formula.check_atoms(pair.num_atoms())?;
    Ok(extension_unchecked(pair, formula))
}

pub(crate) fn extension_unchecked(pair: &BeliefPair, formula: &Formula) -> Extension {
    let n = pair.num_atoms();
    match formula {
        Formula::Atom(a) => {
            let truthy = WorldSet::atom(n, *a);
            let falsy = truthy.complement();
            Extension { truthy, falsy }
        }
        Formula::Const(v) => Extension::constant(n, *v),
        Formula::Not(g) => {
            let e = extension_unchecked(pair, g);
            Extension {
                truthy: e.falsy,
                falsy: e.truthy,
            }
        }
        Formula::And(a, b) => {
            let (x, y) = (extension_unchecked(pair, a), extension_unchecked(pair, b));
            Extension {
                truthy: x.truthy.intersection(&y.truthy),
                falsy: x.falsy.union(&y.falsy),
            }
        }
        Formula::Or(a, b) => {
            let (x, y) = (extension_unchecked(pair, a), extension_unchecked(pair, b));
            Extension {
                truthy: x.truthy.union(&y.truthy),
                falsy: x.falsy.intersection(&y.falsy),
            }
        }
        Formula::Implies(a, b) => {
            let (x, y) = (extension_unchecked(pair, a), extension_unchecked(pair, b));
            Extension {
                truthy: y.truthy.union(&x.falsy),
                falsy: y.falsy.intersection(&x.truthy),
            }
        }
        Formula::Know(g) => {
            Extension::constant(n, modal_value(pair, &extension_unchecked(pair, g)))
        }
    }
}

fn modal_value(pair: &BeliefPair, body: &Extension) -> TruthValue {
    if pair.upper().is_subset(&body.truthy) {
        TruthValue::True
    } else if !pair.lower().is_disjoint(&body.falsy) {
        TruthValue::False
    } else {
        TruthValue::Unknown
    }
}

/// `H_B(K(F))`, which does not depend on the interpretation.
pub fn eval_modal_atom(pair: &BeliefPair, formula: &Formula) -> Result<TruthValue> {
    formula.check_atoms(pair.num_atoms())?;
    Ok(modal_value(pair, &extension_unchecked(pair, formula)))
}

/// Two-valued set-at-a-time Moore evaluation: the worlds `I` with
/// `(W, I) ⊨ F`.
pub fn pws_extension(worlds: &WorldSet, formula: &Formula) -> Result<WorldSet> {
    formula.check_atoms(worlds.num_atoms())?;
    Ok(pws_extension_unchecked(worlds, formula))
}

fn pws_extension_unchecked(worlds: &WorldSet, formula: &Formula) -> WorldSet {
    let n = worlds.num_atoms();
    match formula {
        Formula::Atom(a) => WorldSet::atom(n, *a),
        Formula::Const(TruthValue::True) => WorldSet::full(n),
        Formula::Const(_) => WorldSet::empty(n),
        Formula::Not(g) => pws_extension_unchecked(worlds, g).complement(),
        Formula::And(a, b) => {
            pws_extension_unchecked(worlds, a).intersection(&pws_extension_unchecked(worlds, b))
        }
        Formula::Or(a, b) => {
            pws_extension_unchecked(worlds, a).union(&pws_extension_unchecked(worlds, b))
        }
        Formula::Implies(a, b) => pws_extension_unchecked(worlds, a)
            .complement()
            .union(&pws_extension_unchecked(worlds, b)),
        Formula::Know(g) => {
            if worlds.is_subset(&pws_extension_unchecked(worlds, g)) {
                WorldSet::full(n)
            } else {
                WorldSet::empty(n)
            }
        }
    }
}

/// `{I : (W, I) ⊨ T}`.
pub fn pws_models(theory: &Theory, worlds: &WorldSet) -> WorldSet {
    assert_eq!(
        theory.num_atoms(),
        worlds.num_atoms(),
        "mismatched alphabets"
    );
    theory
        .formulas()
        .iter()
        .fold(WorldSet::full(worlds.num_atoms()), |acc, f| {
            acc.intersection(&pws_extension_unchecked(worlds, f))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_modal, Alphabet, Atom};
    use TruthValue::*;

    fn setup() -> (Alphabet, impl Fn(&str) -> Formula) {
        let a = Alphabet::from_names(["p", "q"]);
        let a2 = a.clone();
        (a, move |s: &str| parse_modal(s, &mut a2.clone()).unwrap())
    }

    fn pq_and_not_p_q() -> WorldSet {
        // {pq, ¬pq}
        WorldSet::atom(2, Atom(1))
    }

    #[test]
    fn bottom_leaves_kp_unknown() {
        let (_, f) = setup();
        let bot = BeliefPair::bottom(2);
        for w in Interpretation::all(2) {
            assert_eq!(eval(&bot, w, &f("K(p)")).unwrap(), Unknown);
        }
        assert_eq!(eval_modal_atom(&bot, &f("p")).unwrap(), Unknown);
    }

    #[test]
    fn first_derivation_step_makes_theory_true() {
        let (_, f) = setup();
        let b = BeliefPair::new(WorldSet::full(2), pq_and_not_p_q()).unwrap();
        for w in Interpretation::all(2) {
            assert_eq!(eval(&b, w, &f("K(p) -> q")).unwrap(), True);
        }
    }

    #[test]
    fn complete_pair_is_two_valued() {
        let (_, f) = setup();
        let b = BeliefPair::complete(WorldSet::full(2));
        for w in Interpretation::all(2) {
            assert_eq!(eval(&b, w, &f("p | ~p")).unwrap(), True);
            assert!(eval(&b, w, &f("K(p) | q")).unwrap().is_two_valued());
        }
    }

    #[test]
    fn modal_atom_values() {
        let (_, f) = setup();
        let all = BeliefPair::complete(WorldSet::full(2));
        assert_eq!(eval_modal_atom(&all, &f("p")).unwrap(), False);
        let pq = WorldSet::from_worlds(2, [Interpretation(0b11)]);
        let single = BeliefPair::complete(pq.clone());
        // Oracle: the only world of P is pq, where p is true.
        let brute = if pq.iter().all(|j| j.holds(Atom(0))) {
            True
        } else {
            Unknown
        };
        assert_eq!(eval_modal_atom(&single, &f("p")).unwrap(), brute);
        assert_eq!(brute, True);
    }

    #[test]
    fn empty_quantifiers_follow_definition() {
        let (_, f) = setup();
        let empty = BeliefPair::complete(WorldSet::empty(2));
        assert_eq!(eval_modal_atom(&empty, &f("$f")).unwrap(), True);
        let none_known = BeliefPair::new(WorldSet::full(2), WorldSet::empty(2)).unwrap();
        assert_eq!(eval_modal_atom(&none_known, &f("$f")).unwrap(), Unknown);
    }

    #[test]
    fn moore_evaluation() {
        let (_, f) = setup();
        let all = WorldSet::full(2);
        for w in Interpretation::all(2) {
            assert!(!eval_pws(&all, w, &f("K(p)")).unwrap());
            assert!(eval_pws(&WorldSet::empty(2), w, &f("K($f)")).unwrap());
        }
        let pq = WorldSet::from_worlds(2, [Interpretation(0b11)]);
        assert!(eval_pws(&pq, Interpretation(0b11), &f("K(p & q)")).unwrap());
    }

    #[test]
    fn theory_membership() {
        let (_, f) = setup();
        let all = WorldSet::full(2);
        assert!(theory_contains(&all, &f("~K(p)")).unwrap());
        assert!(!theory_contains(&all, &f("p")).unwrap());
        let pq = WorldSet::from_worlds(2, [Interpretation(0b11)]);
        assert!(theory_contains(&pq, &f("p & q")).unwrap());
    }

    #[test]
    fn undeclared_atoms_are_rejected() {
        let bot = BeliefPair::bottom(1);
        let r = Formula::atom(Atom(3));
        assert!(eval(&bot, Interpretation(0), &r).is_err());
        assert!(eval_modal_atom(&bot, &r).is_err());
        assert!(eval_pws(bot.upper(), Interpretation(0), &r).is_err());
    }

    #[test]
    fn extension_agrees_with_pointwise_eval() {
        let (_, f) = setup();
        let b = BeliefPair::new(
            WorldSet::atom(2, Atom(0)).union(&pq_and_not_p_q()),
            WorldSet::from_worlds(2, [Interpretation(3)]),
        )
        .unwrap();
        for text in [
            "K(p) -> q",
            "~K(q) | p",
            "K(K(p) & q) -> ~p",
            "$u & p",
            "K($u | p)",
        ] {
            let g = f(text);
            let e = extension(&b, &g).unwrap();
            for w in Interpretation::all(2) {
                assert_eq!(e.value_at(w), eval(&b, w, &g).unwrap(), "{text}");
            }
        }
    }
}
