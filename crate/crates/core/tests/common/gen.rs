//! Seeded random generators for theories, programs and belief pairs.

use ael_core::semantics::Interpretation;
use ael_core::syntax::Clause;
use ael_core::{Alphabet, Atom, BeliefPair, Formula, LogicProgram, Theory, TruthValue, WorldSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const NAMES: [&str; 8] = ["p", "q", "r", "s", "a", "b", "c", "d"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn alphabet(atoms: usize) -> Alphabet {
    Alphabet::from_names(NAMES[..atoms].iter().copied())
}

#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub atoms: usize,
    pub depth: usize,
    pub modal_depth: usize,
    /// Probability that a leaf is a constant rather than an atom.
    pub constants: f64,
    pub unknown: bool,
}

pub fn formula(rng: &mut impl Rng, shape: Shape) -> Formula {
    if shape.depth == 0 || rng.gen_bool(0.25) {
        if shape.atoms == 0 || rng.gen_bool(shape.constants) {
            let choices: &[TruthValue] = if shape.unknown {
                &TruthValue::ALL
            } else {
                &[TruthValue::False, TruthValue::True]
            };
            return Formula::Const(*choices.choose(rng).unwrap());
        }
        return Formula::atom(Atom(rng.gen_range(0..shape.atoms) as u32));
    }
    let sub = Shape {
        depth: shape.depth - 1,
        ..shape
    };
    let ops = if shape.modal_depth > 0 { 5 } else { 4 };
    match rng.gen_range(0..ops) {
        0 => Formula::not(formula(rng, sub)),
        1 => Formula::and(formula(rng, sub), formula(rng, sub)),
        2 => Formula::or(formula(rng, sub), formula(rng, sub)),
        3 => Formula::implies(formula(rng, sub), formula(rng, sub)),
        _ => Formula::know(formula(
            rng,
            Shape {
                modal_depth: shape.modal_depth - 1,
                ..sub
            },
        )),
    }
}

/// A random modal theory with at most `max_atoms` atoms and `max_formulas`
/// formulas, each of depth ≤ 4 and modal depth ≤ `modal_depth`.
pub fn theory(
    rng: &mut impl Rng,
    max_atoms: usize,
    max_formulas: usize,
    modal_depth: usize,
) -> Theory {
    theory_with(rng, max_atoms, max_formulas, modal_depth, true)
}

/// As [`theory`]; `unknown` controls whether `$u` may appear.
pub fn theory_with(
    rng: &mut impl Rng,
    max_atoms: usize,
    max_formulas: usize,
    modal_depth: usize,
    unknown: bool,
) -> Theory {
    let atoms = rng.gen_range(1..=max_atoms);
    let count = rng.gen_range(0..=max_formulas);
    let shape = Shape {
        atoms,
        depth: 4,
        modal_depth,
        constants: 0.08,
        unknown,
    };
    let formulas = (0..count).map(|_| formula(rng, shape)).collect();
    Theory::new(alphabet(atoms), formulas).unwrap()
}

/// A theory built in strata: the first stratum is objective and
/// satisfiable; every later formula is `Body -> Head` where `Head` is a
/// positive and/or-combination of the stratum's own atoms and `Body`
/// conjoins literals over atoms of earlier or the same strata and
/// possibly negated `K(G)` for objective `G` over strictly earlier strata.
pub fn stratified_theory(rng: &mut impl Rng) -> Theory {
    let strata = rng.gen_range(2..=4);
    let mut bounds = vec![0usize];
    for _ in 0..strata {
        let last = *bounds.last().unwrap();
        bounds.push(last + rng.gen_range(1..=2).min(8 - last));
    }
    bounds.dedup();
    let total = *bounds.last().unwrap();
    let mut formulas = Vec::new();
    fn objective(rng: &mut impl Rng, upto: usize) -> Formula {
        formula(
            rng,
            Shape {
                atoms: upto,
                depth: 2,
                modal_depth: 0,
                constants: 0.0,
                unknown: false,
            },
        )
    }
    // stratum 1
    loop {
        let count = rng.gen_range(1..=2);
        let base: Vec<Formula> = (0..count).map(|_| objective(rng, bounds[1])).collect();
        let satisfiable = Interpretation::all(bounds[1])
            .any(|w| base.iter().all(|f| super::oracle::classical(w.index(), f)));
        if satisfiable {
            formulas.extend(base);
            break;
        }
    }
    for i in 1..bounds.len() - 1 {
        let (lo, hi) = (bounds[i], bounds[i + 1]);
        for _ in 0..rng.gen_range(1..=3) {
            let own: Vec<Formula> = (lo..hi)
                .filter(|_| rng.gen_bool(0.7))
                .map(|a| Formula::atom(Atom(a as u32)))
                .collect();
            let head = if own.is_empty() {
                Formula::atom(Atom(rng.gen_range(lo..hi) as u32))
            } else if rng.gen_bool(0.5) {
                Formula::conjunction(own)
            } else {
                Formula::disjunction(own)
            };
            let mut body = Vec::new();
            for _ in 0..rng.gen_range(0..=2) {
                let a = Formula::atom(Atom(rng.gen_range(0..hi) as u32));
                body.push(if rng.gen_bool(0.5) {
                    a
                } else {
                    Formula::not(a)
                });
            }
            for _ in 0..rng.gen_range(1..=2) {
                let k = Formula::know(objective(rng, lo));
                body.push(if rng.gen_bool(0.5) {
                    k
                } else {
                    Formula::not(k)
                });
            }
            body.shuffle(rng);
            formulas.push(Formula::implies(Formula::conjunction(body), head));
        }
    }
    Theory::new(alphabet(total), formulas).unwrap()
}

/// A normal program over `1..=max_atoms` atoms with `0..=max_clauses` clauses.
pub fn program(rng: &mut impl Rng, max_atoms: usize, max_clauses: usize) -> LogicProgram {
    let atoms = rng.gen_range(1..=max_atoms);
    let count = rng.gen_range(0..=max_clauses);
    fn pick(rng: &mut impl Rng, atoms: usize, k: usize) -> Vec<Atom> {
        let mut v: Vec<Atom> = (0..k)
            .map(|_| Atom(rng.gen_range(0..atoms) as u32))
            .collect();
        v.sort();
        v.dedup();
        v
    }
    let clauses = (0..count)
        .map(|_| {
            let head = Atom(rng.gen_range(0..atoms) as u32);
            let (kp, kn) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
            let pos = pick(rng, atoms, kp);
            let neg = pick(rng, atoms, kn);
            Clause::new(head, pos, neg)
        })
        .collect();
    LogicProgram::new(alphabet(atoms), clauses)
}

pub fn world_set(rng: &mut impl Rng, atoms: usize, density: f64) -> WorldSet {
    WorldSet::from_fn(atoms, |_| rng.gen_bool(density))
}

pub fn belief_pair(rng: &mut impl Rng, atoms: usize) -> BeliefPair {
    let upper = world_set(rng, atoms, 0.6);
    let lower = WorldSet::from_fn(atoms, |w| upper.contains(w) && rng.gen_bool(0.5));
    BeliefPair::new(upper, lower).unwrap()
}

/// `(B1, B2)` with `B1 ≤_p B2`: `B1` widens the upper set and narrows the
/// lower set of `B2`.
pub fn comparable_pairs(rng: &mut impl Rng, atoms: usize) -> (BeliefPair, BeliefPair) {
    let b2 = belief_pair(rng, atoms);
    let upper = WorldSet::from_fn(atoms, |w| b2.upper().contains(w) || rng.gen_bool(0.3));
    let lower = WorldSet::from_fn(atoms, |w| b2.lower().contains(w) && rng.gen_bool(0.7));
    let b1 = BeliefPair::new(upper, lower).unwrap();
    assert!(b1.leq_p(&b2));
    (b1, b2)
}

pub fn to_vec(set: &WorldSet) -> Vec<bool> {
    Interpretation::all(set.num_atoms())
        .map(|w| set.contains(w))
        .collect()
}

/// `T` is consistent when read classically with each top-level `K(G)` as a
/// fresh proposition: some truth assignment to those literals leaves a
/// satisfiable objective theory.
pub fn propositionally_consistent(theory: &Theory) -> bool {
    let literals = theory.top_level_modal_literals();
    let n = theory.num_atoms();
    (0..1u64 << literals.len()).any(|guess| {
        let objective: Vec<Formula> = theory
            .formulas()
            .iter()
            .map(|f| {
                f.replace_top_level_modal(&mut |g| {
                    let i = literals
                        .iter()
                        .position(|l| *l == Formula::know(g.clone()))
                        .unwrap();
                    Formula::Const(TruthValue::from_bool(guess >> i & 1 == 1))
                })
            })
            .collect();
        (0..1usize << n).any(|w| objective.iter().all(|f| super::oracle::classical(w, f)))
    })
}
