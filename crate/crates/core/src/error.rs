use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: undeclared atom `{name}`")]
    UndeclaredAtom {
        line: usize,
        column: usize,
        name: String,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. } | ParseError::UndeclaredAtom { line, .. } => *line,
        }
    }

    pub fn column(&self) -> usize {
        match self {
            ParseError::Syntax { column, .. } | ParseError::UndeclaredAtom { column, .. } => {
                *column
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("atom index {index} is outside an alphabet of {size} atoms")]
    UndeclaredAtom { index: usize, size: usize },
    #[error("alphabet of {atoms} atoms exceeds the explicit-set cap of {cap}")]
    CapExceeded { atoms: usize, cap: usize },
    #[error("modal operator K is not allowed in a 3-FOL formula")]
    ModalInThreeFol,
    #[error("the unknown constant $u is not allowed in a 2-FOL formula")]
    UnknownInTwoFol,
    #[error("not a belief pair: the lower set is not contained in the upper set")]
    NotBeliefPair,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
