//! A small graph-algebra expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | '(' expr ')' | generator
//! generator := K(n) | C(n) | P(n) | Star(k) | load("path")
//!            | random(n, m, seed)
//! ```
//!
//! `*` binds tighter than `+`/`-`, all binary operators are
//! left-associative, whitespace is insignificant. Parse errors carry the
//! byte offset and what was expected there. Printing an expression and
//! reparsing it yields an identical tree.

use std::fmt;

use crate::generators;
use crate::io;
use crate::ring::RingElement;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Complete(u32),
    Cycle(u32),
    Path(u32),
    Star(u32),
    Load(String),
    Random { n: u32, m: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpression {
    Generator(Generator),
    Neg(Box<GraphExpression>),
    Add(Box<GraphExpression>, Box<GraphExpression>),
    Sub(Box<GraphExpression>, Box<GraphExpression>),
    Mul(Box<GraphExpression>, Box<GraphExpression>),
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Str(String),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Int(v) => format!("integer {v}"),
            Tok::Str(_) => "string".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            b',' => {
                toks.push((i, Tok::Comma));
                i += 1;
            }
            b'+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            b'"' => {
                let start = i;
                i += 1;
                let begin = i;
                while i < bytes.len() && bytes[i] != b'"' {
                    i += 1;
                }
                if i == bytes.len() {
                    return Err(Error::Parse {
                        offset: start,
                        expected: "closing '\"'".into(),
                    });
                }
                toks.push((start, Tok::Str(src[begin..i].to_string())));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..i];
                let value = text.parse::<u64>().map_err(|_| Error::Parse {
                    offset: start,
                    expected: "integer within range".into(),
                })?;
                toks.push((start, Tok::Int(value)));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(src[start..i].to_string())));
            }
            _ => {
                return Err(Error::Parse {
                    offset: i,
                    expected: "one of '+', '-', '*', '(', ')' or a generator".into(),
                });
            }
        }
    }
    toks.push((src.len(), Tok::Eof));
    Ok(toks)
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

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

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: &str) -> Error {
        Error::Parse {
            offset: self.offset(),
            expected: format!("{expected}, found {}", self.peek().describe()),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<()> {
        if *self.peek() == tok {
            self.advance();
            Ok(())
        } else {
            Err(self.err(expected))
        }
    }

    fn integer(&mut self, expected: &str) -> Result<(usize, u64)> {
        let offset = self.offset();
        match self.peek() {
            Tok::Int(v) => {
                let v = *v;
                self.advance();
                Ok((offset, v))
            }
            _ => Err(self.err(expected)),
        }
    }

    fn expr(&mut self) -> Result<GraphExpression> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.advance();
                    let rhs = self.term()?;
                    lhs = GraphExpression::Add(Box::new(lhs), Box::new(rhs));
                }
                Tok::Minus => {
                    self.advance();
                    let rhs = self.term()?;
                    lhs = GraphExpression::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<GraphExpression> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.advance();
            let rhs = self.factor()?;
            lhs = GraphExpression::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<GraphExpression> {
        match self.peek().clone() {
            Tok::Minus => {
                self.advance();
                Ok(GraphExpression::Neg(Box::new(self.factor()?)))
            }
            Tok::LParen => {
                self.advance();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                self.advance();
                self.generator(&name)
            }
            _ => Err(self.err("a generator, '-' or '('")),
        }
    }

    fn generator(&mut self, name: &str) -> Result<GraphExpression> {
        self.expect(Tok::LParen, "'('")?;
        let gen = match name {
            "K" | "C" | "P" | "Star" => {
                let (n_off, n) = self.integer("integer")?;
                let n = u32::try_from(n).map_err(|_| Error::Parse {
                    offset: n_off,
                    expected: "integer within range".into(),
                })?;
                let check = |min: u32, what: &str| -> Result<()> {
                    if n < min {
                        Err(Error::Parse {
                            offset: n_off,
                            expected: format!("{what} (got {n})"),
                        })
                    } else {
                        Ok(())
                    }
                };
                match name {
                    "K" => {
                        check(1, "n >= 1 for K(n)")?;
                        Generator::Complete(n)
                    }
                    "C" => {
                        check(3, "n >= 3 for C(n)")?;
                        Generator::Cycle(n)
                    }
                    "P" => {
                        check(1, "n >= 1 for P(n)")?;
                        Generator::Path(n)
                    }
                    _ => {
                        check(1, "k >= 1 for Star(k)")?;
                        Generator::Star(n)
                    }
                }
            }
            "load" => {
                let offset = self.offset();
                match self.peek().clone() {
                    Tok::Str(path) => {
                        self.advance();
                        Generator::Load(path)
                    }
                    _ => {
                        return Err(Error::Parse {
                            offset,
                            expected: format!(
                                "quoted path, found {}",
                                self.peek().describe()
                            ),
                        })
                    }
                }
            }
            "random" => {
                let (n_off, n) = self.integer("integer")?;
                let n = u32::try_from(n).map_err(|_| Error::Parse {
                    offset: n_off,
                    expected: "integer within range".into(),
                })?;
                if n < 1 {
                    return Err(Error::Parse {
                        offset: n_off,
                        expected: format!("n >= 1 for random (got {n})"),
                    });
                }
                self.expect(Tok::Comma, "','")?;
                let (m_off, m) = self.integer("integer")?;
                let max = n as u64 * (n as u64 - 1) / 2;
                if m > max {
                    return Err(Error::Parse {
                        offset: m_off,
                        expected: format!("m <= n(n-1)/2 = {max} (got {m})"),
                    });
                }
                self.expect(Tok::Comma, "','")?;
                let (_, seed) = self.integer("integer")?;
                Generator::Random { n, m, seed }
            }
            _ => {
                return Err(Error::Parse {
                    offset: self.toks[self.pos.saturating_sub(2)].0,
                    expected: format!(
                        "one of K, C, P, Star, load, random (found {name:?})"
                    ),
                });
            }
        };
        self.expect(Tok::RParen, "')'")?;
        Ok(GraphExpression::Generator(gen))
    }
}

/// Parses a graph-algebra expression.
pub fn parse(src: &str) -> Result<GraphExpression> {
    let toks = lex(src)?;
    let mut parser = Parser { toks, pos: 0 };
    let expr = parser.expr()?;
    if *parser.peek() != Tok::Eof {
        return Err(parser.err("'+', '-', '*' or end of input"));
    }
    Ok(expr)
}

// ---------------------------------------------------------------------------
// Printer: the inverse of `parse` up to whitespace.
// ---------------------------------------------------------------------------

fn precedence(e: &GraphExpression) -> u8 {
    match e {
        GraphExpression::Add(..) | GraphExpression::Sub(..) => 1,
        GraphExpression::Mul(..) => 2,
        GraphExpression::Neg(..) => 3,
        GraphExpression::Generator(_) => 4,
    }
}

fn print_into(e: &GraphExpression, min_prec: u8, out: &mut String) {
    let prec = precedence(e);
    let parens = prec < min_prec;
    if parens {
        out.push('(');
    }
    match e {
        GraphExpression::Generator(g) => {
            let text = match g {
                Generator::Complete(n) => format!("K({n})"),
                Generator::Cycle(n) => format!("C({n})"),
                Generator::Path(n) => format!("P({n})"),
                Generator::Star(k) => format!("Star({k})"),
                Generator::Load(path) => format!("load(\"{path}\")"),
                Generator::Random { n, m, seed } => format!("random({n},{m},{seed})"),
            };
            out.push_str(&text);
        }
        GraphExpression::Neg(inner) => {
            out.push('-');
            print_into(inner, 3, out);
        }
        GraphExpression::Add(l, r) => {
            print_into(l, 1, out);
            out.push('+');
            print_into(r, 2, out);
        }
        GraphExpression::Sub(l, r) => {
            print_into(l, 1, out);
            out.push('-');
            print_into(r, 2, out);
        }
        GraphExpression::Mul(l, r) => {
            print_into(l, 2, out);
            out.push('*');
            print_into(r, 3, out);
        }
    }
    if parens {
        out.push(')');
    }
}

impl fmt::Display for GraphExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        print_into(self, 0, &mut s);
        write!(f, "{s}")
    }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Materializes an expression in the graph ring. `load` paths resolve
/// against the current working directory.
pub fn evaluate(e: &GraphExpression) -> Result<RingElement> {
    Ok(match e {
        GraphExpression::Generator(gen) => RingElement::from_graph(match gen {
            Generator::Complete(n) => generators::complete(*n),
            Generator::Cycle(n) => generators::cycle(*n),
            Generator::Path(n) => generators::path(*n),
            Generator::Star(k) => generators::star(*k),
            Generator::Load(path) => io::load_graph(std::path::Path::new(path))?,
            Generator::Random { n, m, seed } => generators::random_graph(*n, *m, *seed)?,
        }),
        GraphExpression::Neg(inner) => evaluate(inner)?.negate(),
        GraphExpression::Add(l, r) => evaluate(l)?.add(&evaluate(r)?),
        GraphExpression::Sub(l, r) => evaluate(l)?.sub(&evaluate(r)?),
        GraphExpression::Mul(l, r) => evaluate(l)?.mul(&evaluate(r)?),
    })
}
