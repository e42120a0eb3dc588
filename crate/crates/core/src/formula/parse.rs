//! Recursive-descent parser for the ASCII concrete syntax.
//!
//! Precedence, tightest first: the prefix operators `~`, `Kw[i]`, `K[i]` and
//! `[f]`; then `&`; then `|`; then `->` (right-associative); then `<->`
//! (right-associative). `&` and `|` associate to the left.

use std::fmt;

use thiserror::Error;

use super::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at byte {}: expected one of {}, found {}",
            self.offset,
            self.expected.join(", "),
            self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Top,
    Bot,
    Ident(String),
    Meta(String),
    Kw,
    K,
    Not,
    And,
    Or,
    Imp,
    Iff,
    LBrack,
    RBrack,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Top => "`top`".into(),
            Tok::Bot => "`bot`".into(),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Meta(s) => format!("metavariable `{s}`"),
            Tok::Kw => "`Kw`".into(),
            Tok::K => "`K`".into(),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Imp => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

const FORMULA_START: &[&str] = &["`top`", "`bot`", "proposition", "`~`", "`Kw`", "`K`", "`[`", "`(`"];

fn lex(text: &str, schema: bool) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'~' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'[' => Tok::LBrack,
            b']' => Tok::RBrack,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Imp
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') => {
                i += 2;
                Tok::Iff
            }
            c if c.is_ascii_alphabetic() => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..=i];
                match word {
                    "top" => Tok::Top,
                    "bot" => Tok::Bot,
                    "Kw" => Tok::Kw,
                    "K" => Tok::K,
                    w if w.as_bytes()[0].is_ascii_lowercase() => Tok::Ident(w.to_string()),
                    w if schema && w.bytes().all(|b| !b.is_ascii_lowercase()) => {
                        Tok::Meta(w.to_string())
                    }
                    w => {
                        return Err(ParseError {
                            offset: start,
                            expected: FORMULA_START.to_vec(),
                            found: format!("word `{w}`"),
                        })
                    }
                }
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    offset: start,
                    expected: FORMULA_START.to_vec(),
                    found: format!("character `{ch}`"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::Eof));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.to_vec(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.imp()?;
        if *self.peek() == Tok::Iff {
            self.bump();
            let rhs = self.iff()?;
            return Ok(Formula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            let rhs = self.imp()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn agent(&mut self) -> Result<String, ParseError> {
        self.expect(Tok::LBrack, "`[`")?;
        let name = match self.peek().clone() {
            Tok::Ident(a) | Tok::Meta(a) => {
                self.bump();
                a
            }
            _ => return Err(self.error(&["agent"])),
        };
        self.expect(Tok::RBrack, "`]`")?;
        Ok(name)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Kw => {
                self.bump();
                let a = self.agent()?;
                Ok(Formula::Kw(a, Box::new(self.unary()?)))
            }
            Tok::K => {
                self.bump();
                let a = self.agent()?;
                Ok(Formula::K(a, Box::new(self.unary()?)))
            }
            Tok::LBrack => {
                self.bump();
                let announced = self.iff()?;
                self.expect(Tok::RBrack, "`]`")?;
                Ok(Formula::announce(announced, self.unary()?))
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Ident(p) | Tok::Meta(p) => {
                self.bump();
                Ok(Formula::Prop(p))
            }
            Tok::LParen => {
                self.bump();
                let f = self.iff()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            _ => Err(self.error(FORMULA_START)),
        }
    }
}

fn parse_with(text: &str, schema: bool) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text, schema)?,
        pos: 0,
    };
    let f = p.iff()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["`&`", "`|`", "`->`", "`<->`", "end of input"]));
    }
    Ok(f)
}

/// Parses a formula in the concrete syntax.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    parse_with(text, false)
}

/// Parses a schema: like [`parse`], but all-uppercase words (other than
/// `K`/`Kw`) are accepted as metavariables and stored as propositions with
/// uppercase names, which ordinary formulas can never contain.
pub fn parse_schema(text: &str) -> Result<Formula, ParseError> {
    parse_with(text, true)
}
