//! Expression language for algebra elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := atom ('^' int)?
//! atom   := number | 'q' | gen | '[' expr ',' expr ']' ('_q' | '_q-1')? | '(' expr ')'
//! gen    := 'W[' int ']' | 'G[' nat ']' | 'Gt[' nat ']' | 'z[' nat ']'
//!         | 'B[' kind ',' int ']' | 'tB[' kind ',' int ']'
//!         | 'Bd[' nat (',' kind)? ']' | 'tBd[' nat (',' kind)? ']'
//! kind   := 'a0' | 'a1'
//! ```
//!
//! Division is only by nonzero scalars; negative powers only of scalars.

use num_bigint::BigInt;
use thiserror::Error;

use crate::elements::{
    b_delta_element_in, b_element_in, essential_g, essential_gt_sigma, essential_w, essential_w_sigma,
    tilde_b_delta_element_in, tilde_b_element_in, BDeltaFormula, BKind,
};
use crate::freealg::{commutator, q_commutator_pow, AlgebraError, Alphabet, Generator, NcPoly};
use crate::ring::{consts, RationalFunction};

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator '{name}' at position {pos} for alphabet {alphabet}")]
    UnknownGenerator { pos: usize, name: String, alphabet: Alphabet },
    #[error("index out of range at position {pos}: {msg}")]
    IndexOutOfRange { pos: usize, msg: String },
    #[error("at position {pos}: {msg}")]
    NotScalar { pos: usize, msg: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    /// `_q` (false) or `_q-1` (true).
    Sub(bool),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((st, Tok::Int(s[st..i].parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric()) {
                i += 1;
            }
            out.push((st, Tok::Ident(s[st..i].to_string())));
        } else if c == '_' {
            // Bracket subscript; `_q-1` is taken greedily.
            if s[i..].starts_with("_q-1") {
                out.push((i, Tok::Sub(true)));
                i += 4;
            } else if s[i..].starts_with("_q") {
                out.push((i, Tok::Sub(false)));
                i += 2;
            } else {
                return Err(ParseError::Syntax { pos: i, msg: "expected '_q' or '_q-1'".into() });
            }
        } else if "+-*/^[](),".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::Syntax { pos: i, msg: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
    alphabet: Alphabet,
}

/// Parse `text` as an element of the free algebra on `alphabet`.
pub fn parse(text: &str, alphabet: Alphabet) -> Result<NcPoly, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, i: 0, end: text.len(), alphabet };
    if p.toks.is_empty() {
        return Err(ParseError::Syntax { pos: 0, msg: "empty expression".into() });
    }
    let x = p.expr()?;
    if p.i < p.toks.len() {
        return Err(ParseError::Syntax { pos: p.pos(), msg: "unexpected trailing input".into() });
    }
    Ok(x)
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|t| t.0).unwrap_or(self.end)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(ParseError::Syntax { pos: self.pos(), msg: format!("expected '{c}'") })
        }
    }

    fn expr(&mut self) -> Result<NcPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NcPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.try_mul(&self.unary()?)?;
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let pos = self.pos();
                self.i += 1;
                let d = self.unary()?;
                let c = scalar_of(&d, pos, "division by a non-scalar")?;
                let inv = c.recip().map_err(|_| ParseError::NotScalar { pos, msg: "division by zero".into() })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<NcPoly, ParseError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<NcPoly, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let e = self.signed_int()?;
        let e: i32 = e.try_into().map_err(|_| ParseError::Syntax { pos, msg: "exponent too large".into() })?;
        if e >= 0 {
            return Ok(base.pow(e as u32));
        }
        let c = scalar_of(&base, pos, "negative power of a non-scalar")?;
        let p = c.pow(e).map_err(|_| ParseError::NotScalar { pos, msg: "negative power of zero".into() })?;
        Ok(NcPoly::scalar(self.alphabet, p))
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat('-');
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.i += 1;
                let v: i64 = v.try_into().map_err(|_| ParseError::Syntax { pos, msg: "integer too large".into() })?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(ParseError::Syntax { pos, msg: "expected an integer".into() }),
        }
    }

    fn atom(&mut self) -> Result<NcPoly, ParseError> {
        let pos = self.pos();
        let a = self.alphabet;
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.i += 1;
                Ok(NcPoly::scalar(a, RationalFunction::from_bigint(v)))
            }
            Some(Tok::Sym('(')) => {
                self.i += 1;
                let x = self.expr()?;
                self.expect(')')?;
                Ok(x)
            }
            Some(Tok::Sym('[')) => {
                self.i += 1;
                let x = self.expr()?;
                self.expect(',')?;
                let y = self.expr()?;
                self.expect(']')?;
                match self.peek() {
                    Some(Tok::Sub(inv)) => {
                        let e = if *inv { -1 } else { 1 };
                        self.i += 1;
                        Ok(q_commutator_pow(&x, &y, e)?)
                    }
                    _ => Ok(commutator(&x, &y)?),
                }
            }
            Some(Tok::Ident(name)) => {
                self.i += 1;
                if name == "q" {
                    return Ok(NcPoly::scalar(a, consts::q(1)));
                }
                self.generator(&name, pos)
            }
            _ => Err(ParseError::Syntax { pos, msg: "expected a number, 'q', a generator, '[' or '('".into() }),
        }
    }

    fn kind(&mut self) -> Result<BKind, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Ident(s)) if s == "a0" => {
                self.i += 1;
                Ok(BKind::Alpha0)
            }
            Some(Tok::Ident(s)) if s == "a1" => {
                self.i += 1;
                Ok(BKind::Alpha1)
            }
            _ => Err(ParseError::Syntax { pos, msg: "expected 'a0' or 'a1'".into() }),
        }
    }

    fn natural(&mut self, what: &str) -> Result<u32, ParseError> {
        let pos = self.pos();
        let v = self.signed_int()?;
        u32::try_from(v).map_err(|_| ParseError::IndexOutOfRange { pos, msg: format!("{what} index must be >= 0") })
    }

    fn generator(&mut self, name: &str, pos: usize) -> Result<NcPoly, ParseError> {
        let a = self.alphabet;
        let unknown = || ParseError::UnknownGenerator { pos, name: name.to_string(), alphabet: a };
        if !matches!(name, "W" | "G" | "Gt" | "z" | "B" | "tB" | "Bd" | "tBd") {
            return Err(ParseError::Syntax { pos, msg: format!("unknown name '{name}'") });
        }
        self.expect('[')?;
        let ipos = self.pos();
        let out = match name {
            "W" => {
                let n = self.signed_int()?;
                match a {
                    Alphabet::Alt => NcPoly::gen(a, Generator::w(n)),
                    Alphabet::Ess => essential_w(n),
                    Alphabet::EssSigma => essential_w_sigma(n),
                    Alphabet::Oq if n == 0 || n == 1 => NcPoly::gen(a, Generator::w(n)),
                    Alphabet::Oq => {
                        return Err(ParseError::IndexOutOfRange { pos: ipos, msg: "OQ has only W[0], W[1]".into() })
                    }
                    Alphabet::Z => return Err(unknown()),
                }
            }
            "G" | "Gt" => {
                let k = self.natural(name)?;
                let tilde = name == "Gt";
                if k == 0 && matches!(a, Alphabet::Alt | Alphabet::Ess | Alphabet::EssSigma) {
                    NcPoly::scalar(a, consts::gg0())
                } else {
                    match (a, tilde) {
                        (Alphabet::Alt, false) => NcPoly::gen(a, Generator::g(k)),
                        (Alphabet::Alt, true) | (Alphabet::Ess, true) => NcPoly::gen(a, Generator::gt(k)),
                        (Alphabet::Ess, false) => essential_g(k),
                        (Alphabet::EssSigma, false) => NcPoly::gen(a, Generator::g(k)),
                        (Alphabet::EssSigma, true) => essential_gt_sigma(k),
                        _ => return Err(unknown()),
                    }
                }
            }
            "z" => {
                let k = self.natural(name)?;
                if a != Alphabet::Z {
                    return Err(unknown());
                }
                if k == 0 {
                    return Err(ParseError::IndexOutOfRange { pos: ipos, msg: "z index must be >= 1".into() });
                }
                NcPoly::gen(a, Generator::z(k))
            }
            "B" | "tB" => {
                if a == Alphabet::Z {
                    return Err(unknown());
                }
                let kind = self.kind()?;
                self.expect(',')?;
                let n = self.signed_int()?;
                if name == "B" {
                    b_element_in(a, kind, n)
                } else {
                    tilde_b_element_in(a, kind, n)
                }
            }
            _ => {
                // Bd / tBd
                if a == Alphabet::Z {
                    return Err(unknown());
                }
                let n = self.natural(name)?;
                if n == 0 {
                    return Err(ParseError::IndexOutOfRange { pos: ipos, msg: format!("{name} index must be >= 1") });
                }
                let formula = if self.eat(',') {
                    match self.kind()? {
                        BKind::Alpha0 => BDeltaFormula::ViaAlpha0,
                        BKind::Alpha1 => BDeltaFormula::ViaAlpha1,
                    }
                } else {
                    BDeltaFormula::ViaAlpha1
                };
                if name == "Bd" {
                    b_delta_element_in(a, n, formula)
                } else {
                    tilde_b_delta_element_in(a, n, formula)
                }
            }
        };
        self.expect(']')?;
        Ok(out)
    }
}

fn scalar_of(x: &NcPoly, pos: usize, msg: &str) -> Result<RationalFunction, ParseError> {
    x.as_scalar().ok_or_else(|| ParseError::NotScalar { pos, msg: msg.to_string() })
}
