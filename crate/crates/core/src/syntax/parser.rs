//! Recursive-descent parsers for modal theories and normal logic programs.
//!
//! Modal grammar, loosest to tightest binding:
//!
//! ```text
//! formula := disj ( "->" formula )?          right-associative
//! disj    := conj ( "|" conj )*
//! conj    := unary ( "&" unary )*
//! unary   := "~" unary | "K" "(" formula ")" | "(" formula ")"
//!          | "$t" | "$f" | "$u" | atom
//! atom    := [a-z][a-zA-Z0-9_]*
//! ```
//!
//! A theory file holds one formula per line. `#` starts a comment. An
//! optional `@atoms a b c` line, before any formula, declares a closed
//! alphabet.

use crate::error::ParseError;
use crate::syntax::formula::{Alphabet, Atom, Formula, Theory};
use crate::syntax::program::{Clause, LogicProgram};
use crate::truth::TruthValue;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Know,
    Const(TruthValue),
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    // program tokens
    Neck,
    Comma,
    Dot,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Know => "`K`".into(),
            Tok::Const(v) => format!("`${v}`"),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Neck => "`:-`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str, first_line: usize, comment_chars: &[char]) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = first_line;
    let mut column = 1;
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let err = |line, column, message: String| ParseError::Syntax {
        line,
        column,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        let (l, col) = (line, column);
        let mut push = |tok, width: usize, i: &mut usize, column: &mut usize| {
            out.push(Spanned {
                tok,
                line: l,
                column: col,
            });
            *i += width;
            *column += width;
        };
        match c {
            '\n' => {
                line += 1;
                column = 1;
                i += 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                column += 1;
            }
            c if comment_chars.contains(&c) => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '~' => push(Tok::Not, 1, &mut i, &mut column),
            '&' => push(Tok::And, 1, &mut i, &mut column),
            '|' => push(Tok::Or, 1, &mut i, &mut column),
            '(' => push(Tok::LParen, 1, &mut i, &mut column),
            ')' => push(Tok::RParen, 1, &mut i, &mut column),
            ',' => push(Tok::Comma, 1, &mut i, &mut column),
            '.' => push(Tok::Dot, 1, &mut i, &mut column),
            '-' if chars.get(i + 1) == Some(&'>') => push(Tok::Arrow, 2, &mut i, &mut column),
            ':' if chars.get(i + 1) == Some(&'-') => push(Tok::Neck, 2, &mut i, &mut column),
            '$' => {
                let v = match chars.get(i + 1) {
                    Some('t') => TruthValue::True,
                    Some('f') => TruthValue::False,
                    Some('u') => TruthValue::Unknown,
                    _ => return Err(err(l, col, "expected one of `$t`, `$f`, `$u`".into())),
                };
                if chars
                    .get(i + 2)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                {
                    return Err(err(l, col, "expected one of `$t`, `$f`, `$u`".into()));
                }
                push(Tok::Const(v), 2, &mut i, &mut column);
            }
            'K' => push(Tok::Know, 1, &mut i, &mut column),
            c if c.is_ascii_lowercase() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                column += i - start;
                out.push(Spanned {
                    tok: Tok::Ident(name),
                    line: l,
                    column: col,
                });
            }
            other => return Err(err(l, col, format!("unexpected character `{other}`"))),
        }
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    alphabet: &'a mut Alphabet,
}

impl<'a> Parser<'a> {
    fn new(toks: Vec<Spanned>, alphabet: &'a mut Alphabet) -> Self {
        Self {
            toks,
            pos: 0,
            alphabet,
        }
    }

    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError::Syntax {
            line: t.line,
            column: t.column,
            message: format!("expected {expected}, found {}", t.tok.describe()),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<Spanned, ParseError> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn atom(&mut self, name: &str, line: usize, column: usize) -> Result<Atom, ParseError> {
        if name == "not" {
            return Err(ParseError::Syntax {
                line,
                column,
                message: "`not` is reserved".into(),
            });
        }
        match self.alphabet.get(name) {
            Some(a) => Ok(a),
            None if self.alphabet.is_closed() => Err(ParseError::UndeclaredAtom {
                line,
                column,
                name: name.to_string(),
            }),
            None => Ok(self.alphabet.intern(name)),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.peek().tok == Tok::Arrow {
            self.bump();
            let rhs = self.formula()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.conjunction()?;
        while self.peek().tok == Tok::Or {
            self.bump();
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while self.peek().tok == Tok::And {
            self.bump();
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Know => {
                self.bump();
                self.expect(Tok::LParen)?;
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(Formula::know(f))
            }
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Const(v) => {
                self.bump();
                Ok(Formula::Const(v))
            }
            Tok::Ident(ref name) => {
                self.bump();
                Ok(Formula::Atom(self.atom(name, t.line, t.column)?))
            }
            _ => Err(self.unexpected("a formula")),
        }
    }

    fn body_atom(&mut self) -> Result<Atom, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Ident(name) => self.atom(&name, t.line, t.column),
            other => Err(ParseError::Syntax {
                line: t.line,
                column: t.column,
                message: format!("expected an atom, found {}", other.describe()),
            }),
        }
    }

    fn clause(&mut self) -> Result<Clause, ParseError> {
        let t = self.peek().clone();
        if t.tok == Tok::Ident("not".into()) {
            return Err(ParseError::Syntax {
                line: t.line,
                column: t.column,
                message: "`not` is not allowed in a clause head".into(),
            });
        }
        let head = self.body_atom()?;
        let mut clause = Clause::fact(head);
        match self.bump() {
            Spanned { tok: Tok::Dot, .. } => return Ok(clause),
            Spanned { tok: Tok::Neck, .. } => {}
            s => {
                return Err(ParseError::Syntax {
                    line: s.line,
                    column: s.column,
                    message: format!("expected `:-` or `.`, found {}", s.tok.describe()),
                })
            }
        }
        loop {
            if self.peek().tok == Tok::Ident("not".into()) {
                self.bump();
                clause.neg_body.push(self.body_atom()?);
            } else {
                clause.pos_body.push(self.body_atom()?);
            }
            match self.bump() {
                Spanned {
                    tok: Tok::Comma, ..
                } => continue,
                Spanned { tok: Tok::Dot, .. } => return Ok(clause),
                s => {
                    return Err(ParseError::Syntax {
                        line: s.line,
                        column: s.column,
                        message: format!("expected `,` or `.`, found {}", s.tok.describe()),
                    })
                }
            }
        }
    }
}

fn parse_formula_at(
    text: &str,
    line: usize,
    alphabet: &mut Alphabet,
) -> Result<Formula, ParseError> {
    let toks = lex(text, line, &['#'])?;
    if toks
        .iter()
        .any(|t| matches!(t.tok, Tok::Neck | Tok::Comma | Tok::Dot))
    {
        let t = toks
            .iter()
            .find(|t| matches!(t.tok, Tok::Neck | Tok::Comma | Tok::Dot))
            .unwrap();
        return Err(ParseError::Syntax {
            line: t.line,
            column: t.column,
            message: format!("unexpected {}", t.tok.describe()),
        });
    }
    let mut p = Parser::new(toks, alphabet);
    let f = p.formula()?;
    if p.peek().tok != Tok::End {
        return Err(p.unexpected("end of formula"));
    }
    Ok(f)
}

/// Parses a single modal formula, interning new atoms into `alphabet`
/// unless it is closed.
pub fn parse_modal(text: &str, alphabet: &mut Alphabet) -> Result<Formula, ParseError> {
    parse_formula_at(text, 1, alphabet)
}

/// Parses a theory file: one formula per line, `#` comments, optional
/// `@atoms` declaration.
pub fn parse_theory(text: &str) -> Result<Theory, ParseError> {
    let mut alphabet = Alphabet::new();
    let mut formulas = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("@atoms") {
            if !formulas.is_empty() || alphabet.is_closed() {
                return Err(ParseError::Syntax {
                    line,
                    column: content.find('@').unwrap() + 1,
                    message: "`@atoms` must appear once, before any formula".into(),
                });
            }
            let offset = content.find('@').unwrap() + "@atoms".len();
            for tok in lex(rest, line, &[])? {
                match tok.tok {
                    Tok::Ident(name) if name != "not" => {
                        alphabet.intern(&name);
                    }
                    Tok::Comma | Tok::End => {}
                    other => {
                        return Err(ParseError::Syntax {
                            line,
                            column: offset + tok.column,
                            message: format!("expected an atom name, found {}", other.describe()),
                        })
                    }
                }
            }
            alphabet.close();
            continue;
        }
        // Column numbers must refer to the raw line, so parse it whole.
        formulas.push(parse_formula_at(raw, line, &mut alphabet)?);
    }
    Ok(Theory::new(alphabet, formulas).expect("parser only produces declared atoms"))
}

/// Parses a normal logic program: clauses `a :- b, not c.` and facts `a.`
/// Comments start with `%` or `#`.
pub fn parse_program(text: &str) -> Result<LogicProgram, ParseError> {
    let toks = lex(text, 1, &['%', '#'])?;
    if let Some(t) = toks.iter().find(|t| {
        matches!(
            t.tok,
            Tok::Know
                | Tok::Const(_)
                | Tok::Not
                | Tok::And
                | Tok::Or
                | Tok::Arrow
                | Tok::LParen
                | Tok::RParen
        )
    }) {
        return Err(ParseError::Syntax {
            line: t.line,
            column: t.column,
            message: format!("unexpected {} in a logic program", t.tok.describe()),
        });
    }
    let mut alphabet = Alphabet::new();
    let mut clauses = Vec::new();
    let mut p = Parser::new(toks, &mut alphabet);
    while p.peek().tok != Tok::End {
        clauses.push(p.clause()?);
    }
    Ok(LogicProgram::new(alphabet, clauses))
}
