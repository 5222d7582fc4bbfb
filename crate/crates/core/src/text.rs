//! Text and JSON forms of words and polynomials.
//!
//! Text grammar (whitespace between tokens is ignored):
//!
//! ```text
//! poly   := "0" | [sign] term (("+" | "-") term)*
//! term   := int | [int "*"] factor ("*" factor)*
//! factor := "x" int ["^" ["-"] int]
//! ```
//!
//! The printer emits exactly this grammar with terms in canonical order,
//! joined by `" + "` / `" - "`, so `parse(format(p)) == p`.
//!
//! JSON form: an array of `{"coeff": <int>, "word": [[index, exponent], ...]}`
//! in canonical order.

use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::int::Int;
use crate::poly::NcPoly;
use crate::word::Word;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { src: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn factor(&mut self) -> Result<Word> {
        if !self.eat(b'x') {
            return self.err("expected generator 'x<index>'");
        }
        let at = self.pos;
        let index: u32 = self
            .digits()?
            .parse()
            .map_err(|_| Error::Parse { pos: at, msg: "generator index out of range".into() })?;
        let mut exp = 1i64;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let at = self.pos;
            let e: i64 = self
                .digits()?
                .parse()
                .map_err(|_| Error::Parse { pos: at, msg: "exponent out of range".into() })?;
            exp = if neg { -e } else { e };
        }
        Ok(Word::power(index, exp))
    }

    fn term(&mut self) -> Result<(Word, Int)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let at = self.pos;
                let coeff: Int = self
                    .digits()?
                    .parse()
                    .map_err(|_| Error::Parse { pos: at, msg: "bad integer".into() })?;
                if self.eat(b'*') {
                    Ok((self.factors()?, coeff))
                } else {
                    Ok((Word::one(), coeff))
                }
            }
            Some(b'x') => Ok((self.factors()?, Int::ONE)),
            Some(_) => self.err("expected a term"),
            None => self.err("unexpected end of input"),
        }
    }

    fn factors(&mut self) -> Result<Word> {
        let mut w = self.factor()?;
        while self.eat(b'*') {
            w.mul_assign(&self.factor()?);
        }
        Ok(w)
    }

    fn poly(&mut self) -> Result<NcPoly> {
        let mut terms = Vec::new();
        let mut negative = self.eat(b'-');
        if !negative {
            self.eat(b'+');
        }
        loop {
            let (w, c) = self.term()?;
            terms.push((w, if negative { -c } else { c }));
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("trailing characters");
        }
        Ok(NcPoly::from_terms(terms))
    }
}

/// Parses the canonical text form (and any reordering of it).
pub fn parse_poly(s: &str) -> Result<NcPoly> {
    Cursor::new(s).poly()
}

/// Parses a single word such as `x1*x0^-1*x1` or `1`.
pub fn parse_word(s: &str) -> Result<Word> {
    let p = parse_poly(s)?;
    match p.as_word() {
        Some(w) => Ok(w.clone()),
        None => Err(Error::Parse { pos: 0, msg: "expected a single word".into() }),
    }
}

impl FromStr for NcPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

fn int_to_json(c: &Int) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => Value::Number(c.to_string().parse().expect("integer literal is a JSON number")),
    }
}

pub fn word_to_json(w: &Word) -> Value {
    Value::Array(w.letters().iter().map(|l| json!([l.index, l.exp])).collect())
}

pub fn poly_to_json(p: &NcPoly) -> Value {
    Value::Array(
        p.iter()
            .map(|(w, c)| json!({ "coeff": int_to_json(c), "word": word_to_json(w) }))
            .collect(),
    )
}

fn json_err<T>(msg: &str) -> Result<T> {
    Err(Error::Parse { pos: 0, msg: format!("json: {msg}") })
}

pub fn word_from_json(v: &Value) -> Result<Word> {
    let Some(items) = v.as_array() else { return json_err("word must be an array") };
    let mut pairs = Vec::with_capacity(items.len());
    for it in items {
        match it.as_array().map(Vec::as_slice) {
            Some([i, e]) => {
                let (Some(i), Some(e)) = (i.as_u64(), e.as_i64()) else {
                    return json_err("letter must be [index, exponent]");
                };
                let Ok(i) = u32::try_from(i) else { return json_err("index out of range") };
                pairs.push((i, e));
            }
            _ => return json_err("letter must be [index, exponent]"),
        }
    }
    Ok(Word::from_pairs(pairs))
}

pub fn poly_from_json(v: &Value) -> Result<NcPoly> {
    let Some(items) = v.as_array() else { return json_err("polynomial must be an array of terms") };
    let mut terms = Vec::with_capacity(items.len());
    for t in items {
        let (Some(c), Some(w)) = (t.get("coeff"), t.get("word")) else {
            return json_err("term needs 'coeff' and 'word'");
        };
        let Value::Number(n) = c else { return json_err("coeff must be an integer") };
        let Ok(c) = n.to_string().parse::<Int>() else { return json_err("coeff must be an integer") };
        terms.push((word_from_json(w)?, c));
    }
    Ok(NcPoly::from_terms(terms))
}
