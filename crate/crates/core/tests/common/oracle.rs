//! Reference implementations written directly from the definitions, sharing
//! no evaluation code with the library. World sets are plain `Vec<bool>`
//! indexed by interpretation bits; truth values are `-1, 0, 1`.

use ael_core::{Formula, Theory, TruthValue};

pub type Worlds = Vec<bool>;

fn tv(v: i8) -> TruthValue {
    match v {
        -1 => TruthValue::False,
        0 => TruthValue::Unknown,
        _ => TruthValue::True,
    }
}

fn konst(v: TruthValue) -> i8 {
    match v {
        TruthValue::False => -1,
        TruthValue::Unknown => 0,
        TruthValue::True => 1,
    }
}

fn bit(world: usize, atom: usize) -> bool {
    world >> atom & 1 == 1
}

/// Kleene evaluation of `f` at `world` relative to the pair `(upper, lower)`.
pub fn kleene(upper: &[bool], lower: &[bool], world: usize, f: &Formula) -> TruthValue {
    tv(kleene_raw(upper, lower, world, f))
}

fn kleene_raw(upper: &[bool], lower: &[bool], world: usize, f: &Formula) -> i8 {
    match f {
        Formula::Atom(a) => {
            if bit(world, a.index()) {
                1
            } else {
                -1
            }
        }
        Formula::Const(c) => konst(*c),
        Formula::Not(g) => -kleene_raw(upper, lower, world, g),
        Formula::And(a, b) => {
            kleene_raw(upper, lower, world, a).min(kleene_raw(upper, lower, world, b))
        }
        Formula::Or(a, b) => {
            kleene_raw(upper, lower, world, a).max(kleene_raw(upper, lower, world, b))
        }
        Formula::Implies(a, b) => {
            (-kleene_raw(upper, lower, world, a)).max(kleene_raw(upper, lower, world, b))
        }
        Formula::Know(g) => {
            let all_true = (0..upper.len())
                .filter(|&j| upper[j])
                .all(|j| kleene_raw(upper, lower, j, g) == 1);
            let some_false = (0..lower.len())
                .filter(|&j| lower[j])
                .any(|j| kleene_raw(upper, lower, j, g) == -1);
            if all_true {
                1
            } else if some_false {
                -1
            } else {
                0
            }
        }
    }
}

/// Two-valued possible-world evaluation: `K(G)` holds iff `G` holds in
/// every world of `worlds`. `$u` counts as false.
pub fn pws(worlds: &[bool], world: usize, f: &Formula) -> bool {
    match f {
        Formula::Atom(a) => bit(world, a.index()),
        Formula::Const(c) => *c == TruthValue::True,
        Formula::Not(g) => !pws(worlds, world, g),
        Formula::And(a, b) => pws(worlds, world, a) && pws(worlds, world, b),
        Formula::Or(a, b) => pws(worlds, world, a) || pws(worlds, world, b),
        Formula::Implies(a, b) => !pws(worlds, world, a) || pws(worlds, world, b),
        Formula::Know(g) => (0..worlds.len())
            .filter(|&j| worlds[j])
            .all(|j| pws(worlds, j, g)),
    }
}

pub fn worlds_from_code(atoms: usize, code: u64) -> Worlds {
    (0..1usize << atoms).map(|w| code >> w & 1 == 1).collect()
}

/// Autoepistemic models by exhaustive search: `W` such that `W` is exactly
/// the set of worlds `I` with `(W, I)` satisfying every formula.
pub fn autoepistemic_models(theory: &Theory) -> Vec<Worlds> {
    let n = theory.num_atoms();
    let universe = 1usize << n;
    assert!(universe <= 16);
    let mut out = Vec::new();
    for code in 0..1u64 << universe {
        let w = worlds_from_code(n, code);
        let reproduced: Worlds = (0..universe)
            .map(|i| theory.formulas().iter().all(|f| pws(&w, i, f)))
            .collect();
        if reproduced == w {
            out.push(w);
        }
    }
    out
}

/// `D_T` over plain world vectors.
pub fn der(theory: &Theory, upper: &[bool], lower: &[bool]) -> (Worlds, Worlds) {
    let universe = upper.len();
    let vals: Vec<Vec<TruthValue>> = (0..universe)
        .map(|i| {
            theory
                .formulas()
                .iter()
                .map(|f| kleene(upper, lower, i, f))
                .collect()
        })
        .collect();
    let weak = vals
        .iter()
        .map(|vs| vs.iter().all(|&v| v != TruthValue::False))
        .collect();
    let strong = vals
        .iter()
        .map(|vs| vs.iter().all(|&v| v == TruthValue::True))
        .collect();
    (weak, strong)
}

/// Truth-table evaluation of a `K`-free, `$u`-free formula.
pub fn classical(world: usize, f: &Formula) -> bool {
    pws(&[], world, f)
}

/// `premises ⊨ goal` by enumerating all `2^atoms` worlds.
pub fn entails(atoms: usize, premises: &[Formula], goal: &Formula) -> bool {
    (0..1usize << atoms).all(|w| !premises.iter().all(|p| classical(w, p)) || classical(w, goal))
}
