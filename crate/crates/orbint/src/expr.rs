// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Expressions over the variables `x` and `r`, parsed once and evaluated
//! either in plain binary64 or in interval arithmetic.
//!
//! The tree mirrors the written text exactly: no reassociation, no
//! simplification, no distribution. Algebraically equivalent forms such as
//! `r*x*(1-x)` and `r*(x*(1-x))` therefore stay distinct, which is the whole
//! point -- their interval evaluations round differently.
//!
//! Grammar (standard precedence, left-associative binaries, `^` binds
//! tightest, then unary minus, then `*` `/`, then `+` `-`):
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := ['-'] atom ['^' integer]
//! atom   := number | 'x' | 'r' | '(' expr ')'
//! ```

use std::fmt;

use crate::error::{IntervalError, ParseError};
use crate::interval::Interval;

/// Largest accepted exponent literal.
pub const MAX_EXPONENT: u32 = 4096;

/// Values bound to the two variables before evaluation.
#[derive(Debug, Clone, Copy)]
pub struct Bindings<T> {
    pub x: T,
    pub r: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    R,
}

/// One node of a parsed expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Num(f64),
    Var(Var),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, u32),
}

/// A parsed algebraic form of a map, evaluable over floats or intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionExpr {
    root: Node,
}

impl ExtensionExpr {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser::new(text).parse()
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    /// Plain round-to-nearest binary64 evaluation in tree order. Every
    /// multiply and add rounds separately; no FMA contraction.
    pub fn eval_float(&self, b: &Bindings<f64>) -> f64 {
        eval_f(&self.root, b)
    }

    /// Interval evaluation, applying one outward-rounded operation per node.
    pub fn eval_interval(&self, b: &Bindings<Interval>) -> Result<Interval, IntervalError> {
        eval_i(&self.root, b)
    }
}

fn eval_f(n: &Node, b: &Bindings<f64>) -> f64 {
    match n {
        Node::Num(v) => *v,
        Node::Var(Var::X) => b.x,
        Node::Var(Var::R) => b.r,
        Node::Neg(e) => -eval_f(e, b),
        Node::Add(l, r) => eval_f(l, b) + eval_f(r, b),
        Node::Sub(l, r) => eval_f(l, b) - eval_f(r, b),
        Node::Mul(l, r) => eval_f(l, b) * eval_f(r, b),
        Node::Div(l, r) => eval_f(l, b) / eval_f(r, b),
        Node::Pow(e, k) => {
            // left-associative repeated multiplication, one rounding per step
            let v = eval_f(e, b);
            if *k == 0 {
                return 1.0;
            }
            let mut acc = v;
            for _ in 1..*k {
                acc *= v;
            }
            acc
        }
    }
}

fn eval_i(n: &Node, b: &Bindings<Interval>) -> Result<Interval, IntervalError> {
    Ok(match n {
        Node::Num(v) => Interval::point(*v)?,
        Node::Var(Var::X) => b.x,
        Node::Var(Var::R) => b.r,
        Node::Neg(e) => eval_i(e, b)?.neg(),
        Node::Add(l, r) => eval_i(l, b)?.add(&eval_i(r, b)?),
        Node::Sub(l, r) => eval_i(l, b)?.sub(&eval_i(r, b)?),
        Node::Mul(l, r) => eval_i(l, b)?.mul(&eval_i(r, b)?),
        Node::Div(l, r) => eval_i(l, b)?.div(&eval_i(r, b)?)?,
        Node::Pow(e, k) => eval_i(e, b)?.pow_int(*k),
    })
}

// ---------------------------------------------------------------------------
// rendering

fn prec(n: &Node) -> u8 {
    match n {
        Node::Add(..) | Node::Sub(..) => 1,
        Node::Mul(..) | Node::Div(..) => 2,
        Node::Neg(..) => 3,
        Node::Pow(..) => 4,
        Node::Num(..) | Node::Var(..) => 5,
    }
}

fn render(n: &Node, out: &mut String) {
    let wrap = |child: &Node, min: u8, out: &mut String| {
        if prec(child) < min {
            out.push('(');
            render(child, out);
            out.push(')');
        } else {
            render(child, out);
        }
    };
    match n {
        Node::Num(v) => out.push_str(&format!("{v}")),
        Node::Var(Var::X) => out.push('x'),
        Node::Var(Var::R) => out.push('r'),
        Node::Neg(e) => {
            out.push('-');
            // a factor takes a single leading minus, so a negated negation
            // must be parenthesized
            wrap(e, 4, out);
        }
        Node::Add(l, r) => {
            wrap(l, 1, out);
            out.push('+');
            wrap(r, 2, out);
        }
        Node::Sub(l, r) => {
            wrap(l, 1, out);
            out.push('-');
            wrap(r, 2, out);
        }
        Node::Mul(l, r) => {
            wrap(l, 2, out);
            out.push('*');
            wrap(r, 3, out);
        }
        Node::Div(l, r) => {
            wrap(l, 2, out);
            out.push('/');
            wrap(r, 3, out);
        }
        Node::Pow(e, k) => {
            wrap(e, 5, out);
            out.push('^');
            out.push_str(&k.to_string());
        }
    }
}

impl fmt::Display for ExtensionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        render(&self.root, &mut s);
        f.write_str(&s)
    }
}

// ---------------------------------------------------------------------------
// lexer / parser

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num {
        value: f64,
        integral: Option<u32>,
        too_large: bool,
    },
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    at: usize,
    lex_err: Option<ParseError>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let mut toks = Vec::new();
        let mut lex_err = None;
        let bytes = src.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\n' | '\r' => i += 1,
                '+' => {
                    toks.push((Tok::Plus, i));
                    i += 1;
                }
                '-' => {
                    toks.push((Tok::Minus, i));
                    i += 1;
                }
                '*' => {
                    toks.push((Tok::Star, i));
                    i += 1;
                }
                '/' => {
                    toks.push((Tok::Slash, i));
                    i += 1;
                }
                '^' => {
                    toks.push((Tok::Caret, i));
                    i += 1;
                }
                '(' => {
                    toks.push((Tok::LParen, i));
                    i += 1;
                }
                ')' => {
                    toks.push((Tok::RParen, i));
                    i += 1;
                }
                '0'..='9' | '.' => {
                    let start = i;
                    let mut saw_dot = false;
                    let mut saw_exp = false;
                    while i < bytes.len() {
                        let d = bytes[i] as char;
                        match d {
                            '0'..='9' => i += 1,
                            '.' if !saw_dot && !saw_exp => {
                                saw_dot = true;
                                i += 1;
                            }
                            'e' | 'E' if !saw_exp && i > start => {
                                saw_exp = true;
                                i += 1;
                                if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                                    i += 1;
                                }
                            }
                            _ => break,
                        }
                    }
                    let text = &src[start..i];
                    match text.parse::<f64>() {
                        Ok(value) => {
                            let plain_integer = !saw_dot && !saw_exp;
                            let integral = if plain_integer {
                                text.parse::<u32>().ok()
                            } else {
                                None
                            };
                            let too_large = plain_integer
                                && (integral.is_none() || integral > Some(MAX_EXPONENT));
                            toks.push((
                                Tok::Num {
                                    value,
                                    integral,
                                    too_large,
                                },
                                start,
                            ));
                        }
                        Err(_) => {
                            lex_err = Some(ParseError::Syntax {
                                pos: start,
                                msg: format!("malformed number {text:?}"),
                            });
                            break;
                        }
                    }
                }
                'a'..='z' | 'A'..='Z' | '_' => {
                    let start = i;
                    while i < bytes.len()
                        && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    let name = &src[start..i];
                    match name {
                        "x" => toks.push((Tok::Var(Var::X), start)),
                        "r" => toks.push((Tok::Var(Var::R), start)),
                        _ => {
                            lex_err = Some(ParseError::UnknownIdentifier {
                                pos: start,
                                name: name.to_owned(),
                            });
                            break;
                        }
                    }
                }
                other => {
                    lex_err = Some(ParseError::Syntax {
                        pos: i,
                        msg: format!("unexpected character {other:?}"),
                    });
                    break;
                }
            }
        }
        toks.push((Tok::Eof, src.len()));
        Parser {
            src,
            toks,
            at: 0,
            lex_err,
        }
    }

    fn parse(mut self) -> Result<ExtensionExpr, ParseError> {
        if let Some(e) = self.lex_err.take() {
            return Err(e);
        }
        let root = self.expr()?;
        match self.peek() {
            (Tok::Eof, _) => Ok(ExtensionExpr { root }),
            (_, pos) => Err(ParseError::Syntax {
                pos,
                msg: format!("unexpected trailing input {:?}", &self.src[pos..]),
            }),
        }
    }

    fn peek(&self) -> (Tok, usize) {
        self.toks[self.at].clone()
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        let mut node = self.term()?;
        loop {
            match self.peek().0 {
                Tok::Plus => {
                    self.bump();
                    node = Node::Add(Box::new(node), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    node = Node::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut node = self.factor()?;
        loop {
            match self.peek().0 {
                Tok::Star => {
                    self.bump();
                    node = Node::Mul(Box::new(node), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.bump();
                    node = Node::Div(Box::new(node), Box::new(self.factor()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn factor(&mut self) -> Result<Node, ParseError> {
        let negated = if matches!(self.peek().0, Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let mut node = self.atom()?;
        if matches!(self.peek().0, Tok::Caret) {
            self.bump(); // consume '^'
            match self.bump() {
                (
                    Tok::Num {
                        integral: Some(k),
                        too_large: false,
                        ..
                    },
                    _,
                ) => node = Node::Pow(Box::new(node), k),
                (
                    Tok::Num {
                        too_large: true, ..
                    },
                    pos,
                ) => {
                    return Err(ParseError::ExponentTooLarge {
                        pos,
                        max: MAX_EXPONENT,
                    })
                }
                (_, pos) => return Err(ParseError::BadExponent { pos }),
            }
        }
        Ok(if negated {
            Node::Neg(Box::new(node))
        } else {
            node
        })
    }

    fn atom(&mut self) -> Result<Node, ParseError> {
        match self.bump() {
            (Tok::Num { value, .. }, _) => Ok(Node::Num(value)),
            (Tok::Var(v), _) => Ok(Node::Var(v)),
            (Tok::LParen, open) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (_, pos) => Err(ParseError::Syntax {
                        pos,
                        msg: format!("expected ')' for group opened at position {open}"),
                    }),
                }
            }
            (_, pos) => Err(ParseError::Syntax {
                pos,
                msg: "expected a number, 'x', 'r' or '('".to_owned(),
            }),
        }
    }
}
