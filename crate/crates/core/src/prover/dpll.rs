use crate::prover::cnf::{ClauseSet, Lit};

/// A complete decision procedure for clause sets.
pub trait SatBackend: Send + Sync {
    /// A satisfying assignment indexed by variable, or `None` when the
    /// clause set is unsatisfiable.
    fn solve(&self, clauses: &ClauseSet) -> Option<Vec<bool>>;
}

/// Plain DPLL: unit propagation to a fixpoint, then branching on a literal
/// of a shortest open clause.
#[derive(Clone, Copy, Debug, Default)]
pub struct Dpll;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Val {
    Unset,
    True,
    False,
}

struct Search<'a> {
    clauses: &'a [Vec<Lit>],
    assign: Vec<Val>,
    trail: Vec<u32>,
}

enum Status {
    Satisfied,
    Conflict,
    Open,
}

impl Search<'_> {
    fn value(&self, l: Lit) -> Val {
        match (self.assign[l.var() as usize], l.is_positive()) {
            (Val::Unset, _) => Val::Unset,
            (Val::True, true) | (Val::False, false) => Val::True,
            _ => Val::False,
        }
    }

    fn set(&mut self, l: Lit) {
        self.assign[l.var() as usize] = if l.is_positive() {
            Val::True
        } else {
            Val::False
        };
        self.trail.push(l.var());
    }

    fn undo_to(&mut self, mark: usize) {
        for v in self.trail.drain(mark..) {
            self.assign[v as usize] = Val::Unset;
        }
    }

    fn propagate(&mut self) -> Status {
        loop {
            let mut changed = false;
            let mut all_satisfied = true;
            for c in self.clauses {
                let mut open = None;
                let mut n_open = 0;
                let mut satisfied = false;
                for &l in c {
                    match self.value(l) {
                        Val::True => {
                            satisfied = true;
                            break;
                        }
                        Val::Unset => {
                            n_open += 1;
                            open = Some(l);
                        }
                        Val::False => {}
                    }
                }
                if satisfied {
                    continue;
                }
                all_satisfied = false;
                match n_open {
                    0 => return Status::Conflict,
                    1 => {
                        self.set(open.unwrap());
                        changed = true;
                    }
                    _ => {}
                }
            }
            if all_satisfied {
                return Status::Satisfied;
            }
            if !changed {
                return Status::Open;
            }
        }
    }

    fn branch_literal(&self) -> Lit {
        self.clauses
            .iter()
            .filter(|c| !c.iter().any(|&l| self.value(l) == Val::True))
            .min_by_key(|c| c.iter().filter(|&&l| self.value(l) == Val::Unset).count())
            .and_then(|c| c.iter().copied().find(|&l| self.value(l) == Val::Unset))
            .expect("an open clause has an unassigned literal")
    }

    fn run(&mut self) -> bool {
        match self.propagate() {
            Status::Satisfied => return true,
            Status::Conflict => return false,
            Status::Open => {}
        }
        let lit = self.branch_literal();
        for choice in [lit, lit.negate()] {
            let mark = self.trail.len();
            self.set(choice);
            if self.run() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

impl SatBackend for Dpll {
    fn solve(&self, clauses: &ClauseSet) -> Option<Vec<bool>> {
        let mut s = Search {
            clauses: clauses.clauses(),
            assign: vec![Val::Unset; clauses.num_vars()],
            trail: Vec::new(),
        };
        s.run()
            .then(|| s.assign.iter().map(|v| *v == Val::True).collect())
    }
}
