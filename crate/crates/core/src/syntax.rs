//! Text syntax shared by every front end.
//!
//! ```text
//! element   := "0" | term (("+" | "-") term)*
//! term      := ["-"] [integer "*"] word
//! word      := generator ("." generator)*
//! generator := "v" tuple ["*"] | "p[" tuple "->" tuple ";" levels "]" ["*"]
//! tuple     := "(" integer ("," integer)* ")"
//! levels    := [integer ("," integer)*]       -- high index first
//! ```
//!
//! Formatting is `Display` on [`Element`]; parsing its output gives the
//! same element back.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::freealg::{Element, Generator, Word};
use crate::kgraph::{GraphConfig, Levels, Path, Point};
use crate::ring::Ring;

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    graph: &'a GraphConfig,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn peek_token(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.error(format!("expected `{token}`"))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return self.error("expected an integer");
        }
        Ok(self.text[start..self.pos].parse().expect("validated digits"))
    }

    fn tuple(&mut self) -> Result<Point> {
        let start = self.pos;
        self.expect("(")?;
        let mut coords = vec![self.integer()?];
        while self.eat(",") {
            coords.push(self.integer()?);
        }
        self.expect(")")?;
        let p = Point::new(coords);
        if p.dim() != self.graph.k() {
            self.pos = start;
            return self.error(format!(
                "vertex has {} coordinates but k = {}",
                p.dim(),
                self.graph.k()
            ));
        }
        Ok(p)
    }

    fn levels(&mut self) -> Result<Levels> {
        let mut entries = Vec::new();
        if self.peek_token() == Some(']') {
            return Ok(Levels::empty());
        }
        loop {
            let at = self.pos;
            let n = self.integer()?;
            let entry = u32::try_from(&n).ok().filter(|e| (1..=self.graph.level()).contains(e));
            match entry {
                Some(e) => entries.push(e),
                None => {
                    self.pos = at;
                    return self.error(format!(
                        "level entry {n} out of range 1..={}",
                        self.graph.level()
                    ));
                }
            }
            if !self.eat(",") {
                break;
            }
        }
        Ok(Levels::from_display(&entries))
    }

    fn generator(&mut self) -> Result<Generator> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("v") {
            let v = self.tuple()?;
            self.eat("*");
            return Ok(Generator::vertex(v));
        }
        if self.eat("p[") {
            let range = self.tuple()?;
            self.expect("->")?;
            let source = self.tuple()?;
            self.expect(";")?;
            let levels = self.levels()?;
            self.expect("]")?;
            let path = match Path::new(range, source, levels) {
                Ok(p) => p,
                Err(e) => {
                    self.pos = start;
                    return self.error(e.to_string());
                }
            };
            return Ok(if self.eat("*") {
                Generator::ghost_of(path)
            } else {
                Generator::of_path(path)
            });
        }
        self.error("expected a generator `v(...)` or `p[...]`")
    }

    fn word(&mut self) -> Result<Word> {
        let mut letters = vec![self.generator()?];
        while self.eat(".") {
            letters.push(self.generator()?);
        }
        Word::new(letters)
    }

    fn term<R: Ring>(&mut self, ring: &R, negate: bool) -> Result<(Word, R::Elem)> {
        let mut coeff = BigInt::from(1);
        let mut negate = negate;
        while self.eat("-") {
            negate = !negate;
        }
        if self.peek_token().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.integer()?;
            self.expect("*")?;
        }
        if negate {
            coeff = -coeff;
        }
        let word = self.word()?;
        Ok((word, ring.from_integer(&coeff)))
    }
}

pub fn parse_element<R: Ring>(text: &str, graph: &GraphConfig, ring: R) -> Result<Element<R>> {
    let mut p = Parser { text, pos: 0, graph };
    let mut out = Element::zero(ring.clone());
    if p.eat("0") {
        p.skip_ws();
        if p.pos == text.len() {
            return Ok(out);
        }
        p.pos = 0;
    }
    let (w, c) = p.term(&ring, false)?;
    out.add_term(w, c);
    loop {
        let negate = if p.eat("+") {
            false
        } else if p.eat("-") {
            true
        } else {
            break;
        };
        let (w, c) = p.term(&ring, negate)?;
        out.add_term(w, c);
    }
    p.skip_ws();
    if p.pos != text.len() {
        return p.error("unexpected trailing input");
    }
    Ok(out)
}

pub fn parse_word(text: &str, graph: &GraphConfig) -> Result<Word> {
    let mut p = Parser { text, pos: 0, graph };
    let w = p.word()?;
    p.skip_ws();
    if p.pos != text.len() {
        return p.error("unexpected trailing input");
    }
    Ok(w)
}

pub fn parse_path(text: &str, graph: &GraphConfig) -> Result<Path> {
    let w = parse_word(text, graph)?;
    match w.letters() {
        [Generator::Vertex(p)] | [Generator::Path(p)] => Ok(p.clone()),
        _ => Err(Error::Syntax {
            position: 0,
            message: "expected a single path".into(),
        }),
    }
}

pub fn format_element<R: Ring>(x: &Element<R>) -> String {
    x.to_string()
}
