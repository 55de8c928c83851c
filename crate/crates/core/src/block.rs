//! Dyadic subblocks of the Cantor cube and finite partitions into them.

use std::fmt;
use std::ops::Range;

use num_bigint::BigUint;
use num_integer::Integer;
use smallvec::SmallVec;

use crate::error::{check_dim, CoverageKind, NvError, Result};
use crate::word::{interval_intersect, BinaryWord, DyadicInterval};

/// A product of dyadic intervals, one word per coordinate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subblock {
    words: SmallVec<[BinaryWord; 3]>,
}

impl Subblock {
    pub fn new(words: Vec<BinaryWord>) -> Self {
        assert!(
            !words.is_empty(),
            "a subblock needs at least one coordinate"
        );
        Subblock {
            words: SmallVec::from_vec(words),
        }
    }

    /// The whole cube `C^n`.
    pub fn whole(dim: usize) -> Self {
        Subblock::new(vec![BinaryWord::empty(); dim])
    }

    /// Convenience constructor from word literals (`"e"` for empty).
    pub fn parse(words: &[&str]) -> Result<Self> {
        let words = words
            .iter()
            .map(|w| w.parse())
            .collect::<Result<Vec<BinaryWord>>>()?;
        if words.is_empty() {
            return Err(NvError::InvalidInput("subblock with no coordinates".into()));
        }
        Ok(Subblock::new(words))
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    pub fn word(&self, k: usize) -> &BinaryWord {
        &self.words[k]
    }

    pub fn interval(&self, k: usize) -> DyadicInterval {
        DyadicInterval::new(self.words[k].clone())
    }

    /// Total number of bits; the measure is `2^-depth`.
    pub fn depth(&self) -> usize {
        self.words.iter().map(BinaryWord::len).sum()
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subblock) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a.is_prefix_of(b))
    }

    pub fn meets(&self, other: &Subblock) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a.comparable(b))
    }

    /// Coordinatewise meet, without the dimension check.
    pub(crate) fn meet(&self, other: &Subblock) -> Option<Subblock> {
        let mut words = SmallVec::with_capacity(self.dim());
        for (a, b) in self.words.iter().zip(other.words.iter()) {
            words.push(a.meet(b)?);
        }
        Some(Subblock { words })
    }

    pub fn child(&self, k: usize, bit: u8) -> Subblock {
        let mut s = self.clone();
        s.words[k].push(bit);
        s
    }

    /// Maps `self ⊆ from` onto the corresponding part of `to` by swapping
    /// the prefixes coordinatewise.
    pub fn substitute(&self, from: &Subblock, to: &Subblock) -> Subblock {
        debug_assert!(from.contains(self));
        Subblock {
            words: self
                .words
                .iter()
                .zip(from.words.iter().zip(to.words.iter()))
                .map(|(w, (f, t))| w.substitute_prefix(f, t))
                .collect(),
        }
    }

    /// If this subblock is the `bit` child of its parent along `k`,
    /// returns that parent.
    pub(crate) fn parent_along(&self, k: usize) -> Option<(Subblock, u8)> {
        let mut s = self.clone();
        let bit = s.words[k].pop()?;
        Some((s, bit))
    }
}

impl fmt::Display for Subblock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Subblock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coordinatewise intersection of two subblocks.
pub fn subblock_intersect(a: &Subblock, b: &Subblock) -> Result<Option<Subblock>> {
    check_dim(a.dim(), b.dim())?;
    let mut words = Vec::with_capacity(a.dim());
    for k in 0..a.dim() {
        match interval_intersect(&a.interval(k), &b.interval(k)) {
            Some(iv) => words.push(iv.prefix),
            None => return Ok(None),
        }
    }
    Ok(Some(Subblock::new(words)))
}

/// A finite partition of `C^n` into subblocks, kept in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Block {
    dim: usize,
    pieces: Vec<Subblock>,
    /// Longest first-coordinate word; bounds prefix lookups.
    max_first_len: usize,
}

impl Block {
    /// The one-piece block `{C^n}`.
    pub fn trivial(dim: usize) -> Self {
        assert!(dim >= 1);
        Block::sorted(dim, vec![Subblock::whole(dim)])
    }

    /// Sorts a family already known to partition the cube.
    pub(crate) fn from_partition(dim: usize, mut pieces: Vec<Subblock>) -> Self {
        pieces.sort_unstable();
        debug_assert!(pieces.windows(2).all(|w| w[0] != w[1]));
        Block::sorted(dim, pieces)
    }

    fn sorted(dim: usize, pieces: Vec<Subblock>) -> Self {
        let max_first_len = pieces.iter().map(|p| p.words[0].len()).max().unwrap_or(0);
        Block {
            dim,
            pieces,
            max_first_len,
        }
    }

    /// Validates a candidate family: pairwise disjoint with total measure
    /// exactly one. Partition errors name input positions.
    pub fn validate(candidates: Vec<Subblock>, dim: usize) -> Result<Block> {
        if dim == 0 {
            return Err(NvError::InvalidInput("dimension must be at least 1".into()));
        }
        for s in &candidates {
            check_dim(dim, s.dim())?;
        }
        let mut order: Vec<usize> = (0..candidates.len()).collect();
        order.sort_by(|&a, &b| candidates[a].cmp(&candidates[b]).then(a.cmp(&b)));
        let pieces: Vec<Subblock> = order.iter().map(|&i| candidates[i].clone()).collect();
        let block = Block::sorted(dim, pieces);

        let mut worst: Option<(usize, usize)> = None;
        for (pos, piece) in block.pieces.iter().enumerate() {
            for other in block.overlapping(piece) {
                if other != pos {
                    let pair = minmax(order[pos], order[other]);
                    if worst.is_none_or(|w| pair < w) {
                        worst = Some(pair);
                    }
                }
            }
        }
        if let Some((first, second)) = worst {
            return Err(NvError::Partition { first, second });
        }

        let (total, denom_exp) = measure_sum(&block.pieces);
        let one = BigUint::from(1u8) << denom_exp;
        if total != one {
            let (kind, gap) = if total < one {
                (CoverageKind::Deficit, &one - &total)
            } else {
                (CoverageKind::Excess, &total - &one)
            };
            return Err(NvError::Coverage {
                total: format_dyadic(&total, denom_exp),
                gap: format_dyadic(&gap, denom_exp),
                kind,
            });
        }
        Ok(block)
    }

    /// Parses each subblock from word literals and validates.
    pub fn parse(pieces: &[&[&str]], dim: usize) -> Result<Block> {
        let subs = pieces
            .iter()
            .map(|p| Subblock::parse(p))
            .collect::<Result<Vec<_>>>()?;
        Block::validate(subs, dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn pieces(&self) -> &[Subblock] {
        &self.pieces
    }

    pub fn piece(&self, i: usize) -> &Subblock {
        &self.pieces[i]
    }

    pub fn into_pieces(self) -> Vec<Subblock> {
        self.pieces
    }

    /// Position of an exact piece.
    pub fn position(&self, sub: &Subblock) -> Option<usize> {
        self.pieces.binary_search(sub).ok()
    }

    /// Pieces whose first word equals `key`.
    fn first_word_eq(&self, key: &BinaryWord) -> Range<usize> {
        let lo = self.pieces.partition_point(|p| &p.words[0] < key);
        let hi = lo + self.pieces[lo..].partition_point(|p| &p.words[0] == key);
        lo..hi
    }

    /// Pieces whose first word extends `key`. The canonical order keeps
    /// them contiguous.
    fn first_word_extends(&self, key: &BinaryWord) -> Range<usize> {
        let lo = self.pieces.partition_point(|p| &p.words[0] < key);
        let hi = lo + self.pieces[lo..].partition_point(|p| key.is_prefix_of(&p.words[0]));
        lo..hi
    }

    /// The piece containing `sub`, if any.
    pub fn find_containing(&self, sub: &Subblock) -> Option<usize> {
        let w0 = &sub.words[0];
        for l in 0..=w0.len().min(self.max_first_len) {
            for i in self.first_word_eq(&w0.truncated(l)) {
                if self.pieces[i].contains(sub) {
                    return Some(i);
                }
            }
        }
        None
    }

    /// Positions of all pieces meeting `sub`.
    pub fn overlapping(&self, sub: &Subblock) -> Vec<usize> {
        let w0 = &sub.words[0];
        let mut out = Vec::new();
        for l in 0..w0.len().min(self.max_first_len + 1) {
            out.extend(
                self.first_word_eq(&w0.truncated(l))
                    .filter(|&i| self.pieces[i].meets(sub)),
            );
        }
        out.extend(
            self.first_word_extends(w0)
                .filter(|&i| self.pieces[i].meets(sub)),
        );
        out
    }

    /// Pairwise meets of pieces of `self` and `other`, tagged with the
    /// positions they came from. Unsorted.
    pub(crate) fn meet_pairs(&self, other: &Block) -> Vec<(Subblock, usize, usize)> {
        let mut out = Vec::with_capacity(self.len().max(other.len()));
        for (i, a) in self.pieces.iter().enumerate() {
            for j in other.overlapping(a) {
                if let Some(m) = a.meet(&other.pieces[j]) {
                    out.push((m, i, j));
                }
            }
        }
        out
    }

    /// Splits piece `index` along coordinate `k`.
    pub fn subdivide(&self, index: usize, k: usize) -> Result<Block> {
        if index >= self.len() {
            return Err(NvError::OutOfRange {
                index,
                limit: self.len(),
            });
        }
        if k >= self.dim {
            return Err(NvError::OutOfRange {
                index: k,
                limit: self.dim,
            });
        }
        let mut pieces = self.pieces.clone();
        let p = pieces.swap_remove(index);
        pieces.push(p.child(k, 0));
        pieces.push(p.child(k, 1));
        Ok(Block::from_partition(self.dim, pieces))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn minmax(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Sum of `2^-depth` over the pieces, as a numerator over `2^exp`.
fn measure_sum(pieces: &[Subblock]) -> (BigUint, usize) {
    let exp = pieces.iter().map(Subblock::depth).max().unwrap_or(0);
    let mut total = BigUint::default();
    for p in pieces {
        total += BigUint::from(1u8) << (exp - p.depth());
    }
    (total, exp)
}

fn format_dyadic(num: &BigUint, exp: usize) -> String {
    let mut num = num.clone();
    let mut exp = exp;
    let two = BigUint::from(2u8);
    while exp > 0 && num.is_even() && num != BigUint::default() {
        num /= &two;
        exp -= 1;
    }
    if num == BigUint::default() {
        return "0".into();
    }
    if exp == 0 {
        num.to_string()
    } else if exp < 64 {
        format!("{num}/{}", 1u64 << exp)
    } else {
        format!("{num}/2^{exp}")
    }
}

/// `X ⪰ Y`: every piece of `x` lies inside some piece of `y`.
pub fn refines(x: &Block, y: &Block) -> Result<bool> {
    check_dim(x.dim, y.dim)?;
    Ok(x.pieces.iter().all(|p| y.find_containing(p).is_some()))
}

/// Common refinement: all nonempty pairwise intersections.
pub fn wedge(x: &Block, y: &Block) -> Result<Block> {
    check_dim(x.dim, y.dim)?;
    let pieces = x.meet_pairs(y).into_iter().map(|(m, _, _)| m).collect();
    Ok(Block::from_partition(x.dim, pieces))
}
