//! Eventually periodic points of the Cantor cube.

use std::fmt;

use crate::block::Subblock;
use crate::error::{NvError, Result};
use crate::word::BinaryWord;

/// One coordinate of a point: the sequence `prefix · period · period · …`.
///
/// Always canonical: the period is primitive and the prefix does not end
/// with the last bit of the period (which could be rotated into the period).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PeriodicSequence {
    prefix: BinaryWord,
    period: BinaryWord,
}

impl PeriodicSequence {
    pub fn new(prefix: BinaryWord, period: BinaryWord) -> Result<Self> {
        if period.is_empty() {
            return Err(NvError::EmptyPeriod(0));
        }
        let mut s = PeriodicSequence { prefix, period };
        s.canonicalize();
        Ok(s)
    }

    pub fn prefix(&self) -> &BinaryWord {
        &self.prefix
    }

    pub fn period(&self) -> &BinaryWord {
        &self.period
    }

    fn canonicalize(&mut self) {
        let bits = self.period.to_bits();
        let n = bits.len();
        let d = (1..=n)
            .find(|&d| n.is_multiple_of(d) && (d..n).all(|i| bits[i] == bits[i - d]))
            .unwrap_or(n);
        if d < n {
            self.period = BinaryWord::from_bits(&bits[..d]);
        }
        while let (Some(a), Some(b)) = (self.prefix.last(), self.period.last()) {
            if a != b {
                break;
            }
            self.prefix.pop();
            self.period = rotate_right(&self.period);
        }
    }

    pub fn bit(&self, i: usize) -> u8 {
        let p = self.prefix.len();
        if i < p {
            self.prefix.bit(i)
        } else {
            self.period.bit((i - p) % self.period.len())
        }
    }

    pub fn starts_with(&self, word: &BinaryWord) -> bool {
        word.iter().enumerate().all(|(i, b)| self.bit(i) == b)
    }

    /// Drops the first `len` bits.
    pub fn shift(&self, len: usize) -> PeriodicSequence {
        let p = self.prefix.len();
        if len <= p {
            let mut prefix = BinaryWord::empty();
            prefix.extend_from(&self.prefix, len);
            return PeriodicSequence {
                prefix,
                period: self.period.clone(),
            };
        }
        let q = self.period.to_bits();
        let r = (len - p) % q.len();
        let mut rotated = q[r..].to_vec();
        rotated.extend_from_slice(&q[..r]);
        PeriodicSequence {
            prefix: BinaryWord::empty(),
            period: BinaryWord::from_bits(&rotated),
        }
    }

    pub fn prepend(&self, word: &BinaryWord) -> PeriodicSequence {
        let mut s = PeriodicSequence {
            prefix: {
                let mut w = word.clone();
                w.extend_from(&self.prefix, 0);
                w
            },
            period: self.period.clone(),
        };
        s.canonicalize();
        s
    }
}

fn rotate_right(w: &BinaryWord) -> BinaryWord {
    let b = w.to_bits();
    let mut v = Vec::with_capacity(b.len());
    v.push(b[b.len() - 1]);
    v.extend_from_slice(&b[..b.len() - 1]);
    BinaryWord::from_bits(&v)
}

impl fmt::Display for PeriodicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.prefix.is_empty() {
            write!(f, "{}", self.prefix)?;
        }
        write!(f, "({})", self.period)
    }
}

/// A point of `C^n` with eventually periodic coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    coords: Vec<PeriodicSequence>,
}

impl Point {
    pub fn new(coords: Vec<PeriodicSequence>) -> Result<Self> {
        if coords.is_empty() {
            return Err(NvError::InvalidInput("point with no coordinates".into()));
        }
        Ok(Point { coords })
    }

    /// Builds a point from `(prefix, period)` literals.
    pub fn parse_parts(parts: &[(&str, &str)]) -> Result<Self> {
        let coords = parts
            .iter()
            .enumerate()
            .map(|(k, (pre, per))| {
                PeriodicSequence::new(pre.parse()?, per.parse()?).map_err(|e| match e {
                    NvError::EmptyPeriod(_) => NvError::EmptyPeriod(k),
                    e => e,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Point::new(coords)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[PeriodicSequence] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> &PeriodicSequence {
        &self.coords[k]
    }

    pub fn in_subblock(&self, sub: &Subblock) -> bool {
        self.coords
            .iter()
            .zip(sub.words())
            .all(|(c, w)| c.starts_with(w))
    }

    /// Strips `from`'s prefixes and prepends `to`'s. The point must lie in `from`.
    pub fn substitute(&self, from: &Subblock, to: &Subblock) -> Point {
        debug_assert!(self.in_subblock(from));
        Point {
            coords: self
                .coords
                .iter()
                .zip(from.words().iter().zip(to.words()))
                .map(|(c, (f, t))| c.shift(f.len()).prepend(t))
                .collect(),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
