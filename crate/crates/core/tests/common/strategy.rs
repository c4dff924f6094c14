//! proptest strategies.

use ael_core::{Atom, BeliefPair, Formula, Theory, TruthValue, WorldSet};
use proptest::prelude::*;

use super::gen::alphabet;

pub fn constant(unknown: bool) -> BoxedStrategy<Formula> {
    if unknown {
        prop_oneof![
            Just(TruthValue::False),
            Just(TruthValue::Unknown),
            Just(TruthValue::True)
        ]
        .prop_map(Formula::Const)
        .boxed()
    } else {
        prop_oneof![Just(TruthValue::False), Just(TruthValue::True)]
            .prop_map(Formula::Const)
            .boxed()
    }
}

/// Formulas over `atoms` atoms with at most `modal_depth` nested `K`s.
pub fn formula(atoms: usize, modal_depth: usize, unknown: bool) -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![
        4 => (0..atoms as u32).prop_map(|i| Formula::atom(Atom(i))),
        1 => constant(unknown),
    ];
    let objective = leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    });
    if modal_depth == 0 {
        return objective.boxed();
    }
    let modal = formula(atoms, modal_depth - 1, unknown).prop_map(Formula::know);
    let leaf = prop_oneof![2 => objective, 1 => modal];
    leaf.prop_recursive(2, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    })
    .boxed()
}

pub fn theory(atoms: usize, max_formulas: usize, modal_depth: usize) -> BoxedStrategy<Theory> {
    prop::collection::vec(formula(atoms, modal_depth, true), 0..=max_formulas)
        .prop_map(move |fs| Theory::new(alphabet(atoms), fs).unwrap())
        .boxed()
}

pub fn world_set(atoms: usize) -> BoxedStrategy<WorldSet> {
    prop::collection::vec(any::<bool>(), 1usize << atoms)
        .prop_map(move |bits| WorldSet::from_fn(atoms, |w| bits[w.index()]))
        .boxed()
}

pub fn belief_pair(atoms: usize) -> BoxedStrategy<BeliefPair> {
    (world_set(atoms), world_set(atoms))
        .prop_map(|(upper, mask)| {
            let lower = upper.intersection(&mask);
            BeliefPair::new(upper, lower).unwrap()
        })
        .boxed()
}

/// `(B1, B2)` with `B1 ≤_p B2`.
pub fn comparable_pairs(atoms: usize) -> BoxedStrategy<(BeliefPair, BeliefPair)> {
    (belief_pair(atoms), world_set(atoms), world_set(atoms))
        .prop_map(|(b2, widen, keep)| {
            let b1 =
                BeliefPair::new(b2.upper().union(&widen), b2.lower().intersection(&keep)).unwrap();
            (b1, b2)
        })
        .boxed()
}
