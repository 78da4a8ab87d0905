//! Text syntax for monomials, ideals and modules.
//!
//! ```text
//! monomial := "1" | factor ("*" factor)*
//! factor   := "x" <index> ["^" <exponent>]        index is 1-based
//! ideal    := "(" ( "0" | monomial ("," monomial)* ) ")"
//! module   := ideal "/" ideal
//! ```
//!
//! Whitespace is ignored between tokens. When no variable count is given it
//! is the largest index that appears (at least 1).

use crate::error::{Error, Result};
use crate::monomial::{minimalize, Monomial, MonomialIdeal, QuotientModule, MAX_VARS};

/// Sparse monomial: `(0-based index, exponent)` pairs.
type RawMonomial = Vec<(usize, u32)>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => self.err(format!("expected '{}', found '{}'", c as char, got as char)),
            None => self.err(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .or_else(|_| {
                self.pos = start;
                self.err("number out of range")
            })
    }

    fn monomial(&mut self) -> Result<RawMonomial> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        loop {
            self.expect(b'x')?;
            let at = self.pos;
            let idx = self.number()?;
            if idx == 0 || idx as usize > MAX_VARS {
                self.pos = at;
                return self.err(format!("variable index must lie in 1..={MAX_VARS}"));
            }
            let mut e = 1;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                let at = self.pos;
                e = self.number()?;
                if e > u32::MAX as u64 / 2 {
                    self.pos = at;
                    return self.err("exponent out of range");
                }
            }
            out.push((idx as usize - 1, e as u32));
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }

    fn ideal(&mut self) -> Result<Vec<RawMonomial>> {
        self.expect(b'(')?;
        if self.peek() == Some(b'0') {
            self.pos += 1;
            self.expect(b')')?;
            return Ok(Vec::new());
        }
        let mut gens = vec![self.monomial()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            gens.push(self.monomial()?);
        }
        self.expect(b')')?;
        Ok(gens)
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected trailing '{}'", c as char)),
        }
    }
}

fn infer_n<'a>(raws: impl IntoIterator<Item = &'a RawMonomial>, n: Option<usize>) -> Result<usize> {
    let max = raws
        .into_iter()
        .flatten()
        .map(|&(i, _)| i + 1)
        .max()
        .unwrap_or(1);
    match n {
        None => Ok(max),
        Some(n) if n > MAX_VARS => Err(Error::domain(format!(
            "at most {MAX_VARS} variables are supported"
        ))),
        Some(n) if max > n => Err(Error::Parse {
            pos: 0,
            msg: format!("variable x{max} exceeds the ring size {n}"),
        }),
        Some(n) => Ok(n),
    }
}

fn densify(raw: &RawMonomial, n: usize) -> Monomial {
    let mut exps = vec![0u32; n];
    for &(i, e) in raw {
        exps[i] += e;
    }
    Monomial::new(exps)
}

fn build_ideal(raw: &[RawMonomial], n: usize) -> Result<MonomialIdeal> {
    minimalize(n, raw.iter().map(|r| densify(r, n)))
}

pub fn parse_monomial(text: &str, n: Option<usize>) -> Result<Monomial> {
    let mut p = Parser::new(text);
    let raw = p.monomial()?;
    p.finish()?;
    let n = infer_n([&raw], n)?;
    Ok(densify(&raw, n))
}

pub fn parse_ideal(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let mut p = Parser::new(text);
    let raw = p.ideal()?;
    p.finish()?;
    let n = infer_n(&raw, n)?;
    build_ideal(&raw, n)
}

/// Parse `<J> / <I>`, minimalize both ideals and validate `I ⊆ J`.
pub fn parse_module(text: &str, n: Option<usize>) -> Result<QuotientModule> {
    let mut p = Parser::new(text);
    let j = p.ideal()?;
    p.expect(b'/')?;
    let i = p.ideal()?;
    p.finish()?;
    let n = infer_n(j.iter().chain(i.iter()), n)?;
    QuotientModule::new(build_ideal(&j, n)?, build_ideal(&i, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle_module() {
        let m = parse_module("(x1,x2,x3) / (x1*x2*x3)", None).unwrap();
        assert_eq!(m.n(), 3);
        assert_eq!(m.j().gens().len(), 3);
        assert_eq!(m.i().gens(), &[Monomial::new(vec![1, 1, 1])]);
    }

    #[test]
    fn parses_ideal_as_module() {
        let m = parse_module("(x1^2,x2^3) / (0)", None).unwrap();
        assert!(m.i().is_zero());
        assert_eq!(m.j().max_exponents(), vec![2, 3]);
    }

    #[test]
    fn containment_error_names_witness() {
        let err = parse_module("(x1) / (x2)", None).unwrap_err();
        assert_eq!(err, Error::NotContained { witness: "x2".into() });
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse_module("(x1,,x2) / (0)", None).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                pos: 4,
                msg: "expected 'x', found ','".into()
            }
        );
        assert!(matches!(parse_module("(x0) / (0)", None), Err(Error::Parse { .. })));
        assert!(matches!(parse_module("(x1) / (0) junk", None), Err(Error::Parse { .. })));
    }

    #[test]
    fn explicit_ring_size() {
        let m = parse_module("(x1) / (0)", Some(3)).unwrap();
        assert_eq!(m.n(), 3);
        assert!(parse_module("(x4) / (0)", Some(3)).is_err());
    }

    #[test]
    fn repeated_factors_accumulate_and_unit_parses() {
        assert_eq!(parse_monomial("x1*x1^2", Some(2)).unwrap(), Monomial::new(vec![3, 0]));
        assert!(parse_ideal("(1)", Some(2)).unwrap().is_unit());
    }

    #[test]
    fn print_parse_round_trip() {
        for text in ["(x1,x2,x3) / (x1*x2*x3)", "(x1^2,x3) / (x1^5)", "(1) / (x2^2*x3)"] {
            let m = parse_module(text, Some(3)).unwrap();
            let again = parse_module(&m.to_string(), Some(3)).unwrap();
            assert_eq!(m, again);
            assert_eq!(m.to_string(), again.to_string());
        }
    }
}
