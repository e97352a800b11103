//! Text form of monomial ideals: `x^2,x*y,y^2` or `x1^2,x1*x2,x2^2`.
//!
//! Generators are separated by `,`, factors by `*`, and a factor is `VAR` or
//! `VAR^INT`. `x1..xN` are always accepted; `x,y,z,w` alias `x1..x4` when
//! `N <= 4`. A lone `1` is the unit monomial. Whitespace is ignored.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::ExponentVector;

const ALIASES: [&str; 4] = ["x", "y", "z", "w"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    /// Input generators that were dropped as duplicates or multiples.
    pub redundant: usize,
}

impl ParsedIdeal {
    pub fn was_minimal(&self) -> bool {
        self.redundant == 0
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Syntax {
                pos: start,
                msg: "exponent out of range".to_string(),
            })
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }
}

fn variable_index(name: &str, nvars: usize) -> Result<usize> {
    if nvars <= ALIASES.len() {
        if let Some(i) = ALIASES.iter().position(|a| *a == name) {
            if i < nvars {
                return Ok(i);
            }
        }
    }
    if let Some(digits) = name.strip_prefix('x') {
        if let Ok(i) = digits.parse::<usize>() {
            if (1..=nvars).contains(&i) {
                return Ok(i - 1);
            }
        }
    }
    Err(Error::UnknownVariable(name.to_string()))
}

fn parse_monomial(lx: &mut Lexer<'_>, nvars: usize) -> Result<ExponentVector> {
    let mut exps = vec![0u32; nvars];
    loop {
        match lx.peek() {
            Some(b'1') => {
                if lx.number()? != 1 {
                    return Err(lx.err("only the constant 1 may appear as a factor"));
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = lx.pos;
                let name = lx.ident();
                let t = variable_index(name, nvars)?;
                let e = if lx.peek() == Some(b'^') {
                    lx.pos += 1;
                    lx.number()?
                } else {
                    1
                };
                exps[t] = exps[t].checked_add(e).ok_or(Error::Syntax {
                    pos: start,
                    msg: "exponent out of range".to_string(),
                })?;
            }
            _ => return Err(lx.err("expected a variable")),
        }
        if lx.peek() == Some(b'*') {
            lx.pos += 1;
        } else {
            return Ok(ExponentVector::new(exps));
        }
    }
}

/// Parses an ideal in `nvars` variables; redundant generators are removed
/// and counted.
pub fn parse_ideal(text: &str, nvars: usize) -> Result<ParsedIdeal> {
    if nvars == 0 {
        return Err(Error::InvalidArgument("ideal needs at least one variable".into()));
    }
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut gens = Vec::new();
    if lx.peek().is_some() && text.trim() != "0" {
        loop {
            gens.push(parse_monomial(&mut lx, nvars)?);
            match lx.peek() {
                Some(b',') => lx.pos += 1,
                None => break,
                Some(_) => return Err(lx.err("expected `,` or `*`")),
            }
        }
    }
    let (ideal, redundant) = MonomialIdeal::new_reporting(nvars, gens)?;
    Ok(ParsedIdeal { ideal, redundant })
}

pub fn variable_name(t: usize, nvars: usize) -> String {
    if nvars <= ALIASES.len() {
        ALIASES[t].to_string()
    } else {
        format!("x{}", t + 1)
    }
}

pub fn format_monomial(m: &ExponentVector) -> String {
    let n = m.nvars();
    let mut out = String::new();
    for (t, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(&variable_name(t, n));
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Canonical text: generators in canonical order, aliases for `N <= 4`.
/// The zero ideal prints as `0`.
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    if ideal.num_generators() == 0 {
        return "0".to_string();
    }
    let parts: Vec<String> = ideal.generators().iter().map(format_monomial).collect();
    parts.join(",")
}
