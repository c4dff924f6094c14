//! Formulas, theories, logic programs, and their parsers.

mod formula;
mod parser;
mod polarity;
mod program;

pub use formula::{top_level_modal_literals, Alphabet, Atom, Formula, FormulaDisplay, Theory};
pub use parser::{parse_modal, parse_program, parse_theory};
pub use polarity::{oath, oath_all, uath, uath_all};
pub use program::{Clause, LogicProgram};
