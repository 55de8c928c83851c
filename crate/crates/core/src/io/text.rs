//! The line-oriented element format and the point syntax.
//!
//! ```text
//! # the half swap in 1V
//! NV 1
//! MAP [0] -> [1]
//! MAP [1] -> [0]
//! ```
//!
//! Each `MAP` line pairs a domain subblock with a range subblock; `e` is the
//! empty word. Points are written `prefix(period)` per coordinate, joined by
//! `;`, e.g. `(0);01(10)`.

use std::fmt::Write;

use crate::block::Subblock;
use crate::element::Element;
use crate::error::{NvError, Result};
use crate::point::{PeriodicSequence, Point};
use crate::word::BinaryWord;

struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(NvError::Syntax {
            line: self.line,
            column: self.text[..self.pos].chars().count() + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c == ' ' || c == '\t' {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            self.err(format!("expected {token:?}"))
        }
    }

    fn word(&mut self) -> Result<BinaryWord> {
        self.skip_ws();
        if self.peek() == Some('e') {
            self.pos += 1;
            return Ok(BinaryWord::empty());
        }
        let mut w = BinaryWord::empty();
        while let Some(c) = self.peek() {
            match c {
                '0' => w.push(0),
                '1' => w.push(1),
                _ => break,
            }
            self.pos += 1;
        }
        if w.is_empty() {
            return self.err("expected a binary word or 'e'");
        }
        Ok(w)
    }

    fn subblock(&mut self, dim: usize) -> Result<Subblock> {
        self.skip_ws();
        let start = self.pos;
        self.expect("[")?;
        let mut words = vec![self.word()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    words.push(self.word()?);
                }
                Some(']') => {
                    self.pos += 1;
                    break;
                }
                _ => return self.err("expected ',' or ']'"),
            }
        }
        if words.len() != dim {
            self.pos = start;
            return self.err(format!(
                "subblock has {} coordinates, header declares {dim}",
                words.len()
            ));
        }
        Ok(Subblock::new(words))
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}

/// Parses and fully validates an element document.
pub fn parse_element(text: &str) -> Result<Element> {
    let mut dim: Option<usize> = None;
    let mut lines = Vec::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let body = body.strip_suffix('\r').unwrap_or(body);
        if body.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor {
            line: idx + 1,
            text: body,
            pos: 0,
        };
        match dim {
            None => {
                cur.expect("NV")?;
                cur.skip_ws();
                let start = cur.pos;
                while cur.peek().is_some_and(|c| c.is_ascii_digit()) {
                    cur.pos += 1;
                }
                let n: usize = match body[start..cur.pos].parse() {
                    Ok(n) if n >= 1 => n,
                    _ => {
                        cur.pos = start;
                        return cur.err("expected a positive dimension");
                    }
                };
                cur.end()?;
                dim = Some(n);
            }
            Some(n) => {
                cur.expect("MAP")?;
                let d = cur.subblock(n)?;
                cur.expect("->")?;
                let r = cur.subblock(n)?;
                cur.end()?;
                lines.push((d, r));
            }
        }
    }
    let dim = dim.ok_or(NvError::Syntax {
        line: 1,
        column: 1,
        message: "missing 'NV <dimension>' header".into(),
    })?;
    Element::from_map_lines(dim, lines)
}

/// Canonical document: map lines in domain order.
pub fn serialize_element(g: &Element) -> String {
    let mut out = format!("NV {}\n", g.dim());
    for (d, r) in g.pairs() {
        writeln!(out, "MAP {d} -> {r}").expect("string write");
    }
    out
}

pub fn parse_point(text: &str) -> Result<Point> {
    let text = text.trim();
    let mut coords = Vec::new();
    let mut column = 1;
    for (k, part) in text.split(';').enumerate() {
        let syntax = |offset: usize, message: &str| NvError::Syntax {
            line: 1,
            column: column + offset,
            message: message.into(),
        };
        let open = part
            .find('(')
            .ok_or_else(|| syntax(part.len(), "expected '(' before the period"))?;
        if !part.ends_with(')') {
            return Err(syntax(part.len(), "expected ')' closing the period"));
        }
        let prefix = &part[..open];
        let period = &part[open + 1..part.len() - 1];
        let prefix: BinaryWord = prefix.parse().map_err(|_| syntax(0, "bad prefix word"))?;
        if period.is_empty() {
            return Err(NvError::EmptyPeriod(k));
        }
        if period == "e" {
            return Err(NvError::EmptyPeriod(k));
        }
        let period: BinaryWord = period
            .parse()
            .map_err(|_| syntax(open + 1, "bad period word"))?;
        coords.push(PeriodicSequence::new(prefix, period)?);
        column += part.chars().count() + 1;
    }
    Point::new(coords)
}

pub fn format_point(p: &Point) -> String {
    p.to_string()
}
