//! A small text format for grammars.
//!
//! ```text
//! # comments run to end of line
//! const a, b;
//! x -> x + x*y;
//! y -> y + a*x^2
//! ```
//!
//! Statements are separated by `;` (a trailing `;` is allowed). A rule is
//! `letter -> expression` where expressions use `+`, `-`, explicit `*`,
//! `^` with a positive integer exponent, integer literals and parentheses.
//! `→` is accepted for `->`. Letters are identifiers (`[A-Za-z_][A-Za-z0-9_]*`);
//! `const` is reserved.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::grammar::{Grammar, GrammarError};
use crate::poly::{Letter, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Grammar(#[from] GrammarError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Arrow,
    Semi,
    Comma,
    Const,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "letter `{s}`"),
            Tok::Int(v) => write!(f, "integer `{v}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Const => f.write_str("`const`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let err = |line, column, found: String| ParseError {
        line,
        column,
        expected: vec!["a letter, integer, operator or `;`".into()],
        found,
    };
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => advance(1, &mut i, &mut col),
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '+' | '*' | '^' | '(' | ')' | ';' | ',' | '→' => {
                let tok = match c {
                    '+' => Tok::Plus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ';' => Tok::Semi,
                    ',' => Tok::Comma,
                    _ => Tok::Arrow,
                };
                out.push(Spanned {
                    tok,
                    line: tl,
                    column: tc,
                });
                advance(1, &mut i, &mut col);
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    out.push(Spanned {
                        tok: Tok::Arrow,
                        line: tl,
                        column: tc,
                    });
                    advance(2, &mut i, &mut col);
                } else {
                    out.push(Spanned {
                        tok: Tok::Minus,
                        line: tl,
                        column: tc,
                    });
                    advance(1, &mut i, &mut col);
                }
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                col += i - start;
                let v = text.parse().expect("ascii digits");
                out.push(Spanned {
                    tok: Tok::Int(v),
                    line: tl,
                    column: tc,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                col += i - start;
                let tok = if text == "const" {
                    Tok::Const
                } else {
                    Tok::Ident(text)
                };
                out.push(Spanned {
                    tok,
                    line: tl,
                    column: tc,
                });
            }
            other => return Err(err(tl, tc, format!("character `{other}`"))),
        }
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn ident(&mut self) -> Result<Letter, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(Letter::new(s))
            }
            _ => Err(self.error(&["a letter"])),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc += self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Int(v) if v > BigInt::from(0) => match u32::try_from(&v) {
                Ok(e) => {
                    self.bump();
                    Ok(base.pow(e))
                }
                Err(_) => Err(self.error(&["an exponent below 2^32"])),
            },
            _ => Err(self.error(&["a positive integer exponent"])),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Polynomial::constant(v))
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Polynomial::letter(Letter::new(s)))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => Err(self.error(&["a letter", "an integer", "`(`", "`-`"])),
        }
    }
}

/// Parses a polynomial expression such as `x*y^2 - 3*(x + y)`.
pub fn parse_polynomial(src: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["an operator", "end of input"]));
    }
    Ok(e)
}

/// Parses a grammar and validates that every letter is ruled or constant.
pub fn parse_grammar(src: &str) -> Result<Grammar, DslError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let mut rules: Vec<(Letter, Polynomial)> = Vec::new();
    let mut constants = Vec::new();
    loop {
        match p.peek() {
            Tok::Eof => break,
            Tok::Semi => {
                p.bump();
                continue;
            }
            Tok::Const => {
                p.bump();
                constants.push(p.ident()?);
                while *p.peek() == Tok::Comma {
                    p.bump();
                    constants.push(p.ident()?);
                }
            }
            Tok::Ident(_) => {
                let l = p.ident()?;
                p.expect(Tok::Arrow, "`->`")?;
                let rhs = p.expr()?;
                if rules.iter().any(|(k, _)| *k == l) {
                    return Err(GrammarError::DuplicateRule(l).into());
                }
                rules.push((l, rhs));
            }
            _ => return Err(p.error(&["a letter", "`const`"]).into()),
        }
        match p.peek() {
            Tok::Semi => {
                p.bump();
            }
            Tok::Eof => break,
            _ => return Err(p.error(&["`;`", "an operator"]).into()),
        }
    }
    Ok(Grammar::new(rules, constants)?)
}

/// Prints a grammar in the DSL; `parse_grammar` reproduces it exactly.
pub fn grammar_to_dsl(g: &Grammar) -> String {
    let mut out = String::new();
    let consts: Vec<String> = g.constants().map(Letter::to_string).collect();
    if !consts.is_empty() {
        let _ = writeln!(out, "const {};", consts.join(", "));
    }
    for (l, rhs) in g.rules() {
        let _ = writeln!(out, "{l} -> {rhs};");
    }
    out
}
