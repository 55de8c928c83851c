//! Finite binary words and the dyadic intervals they name.
//!
//! Words are packed most-significant-bit first into `u64` limbs. Powers of
//! infinite-order elements carry words whose length grows linearly with the
//! exponent, so prefix tests, comparisons and splices work a limb at a time.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::NvError;

const LIMB: usize = 64;

/// Mask keeping the top `n` bits of a limb, `0 ≤ n ≤ 64`.
#[inline]
fn top_mask(n: usize) -> u64 {
    match n {
        0 => 0,
        LIMB => !0,
        n => !0u64 << (LIMB - n),
    }
}

/// A finite word over `{0, 1}`.
///
/// Ordered lexicographically with `0 < 1` and a proper prefix before all
/// of its extensions, which is the order blocks are kept in.
///
/// Invariant: `limbs.len() == ceil(len / 64)` and bits past `len` are zero,
/// so the derived equality and hash are exact.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    len: usize,
    limbs: SmallVec<[u64; 2]>,
}

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord::default()
    }

    /// Builds a word from 0/1 values. Panics on any other value.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut w = BinaryWord::empty();
        for &b in bits {
            w.push(b);
        }
        w
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(move |i| self.bit(i))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn bit(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        ((self.limbs[i / LIMB] >> (LIMB - 1 - i % LIMB)) & 1) as u8
    }

    pub fn push(&mut self, bit: u8) {
        assert!(bit <= 1, "bits must be 0 or 1");
        let s = self.len % LIMB;
        if s == 0 {
            self.limbs.push(0);
        }
        if bit == 1 {
            *self.limbs.last_mut().expect("limb pushed") |= 1u64 << (LIMB - 1 - s);
        }
        self.len += 1;
    }

    pub fn pop(&mut self) -> Option<u8> {
        if self.len == 0 {
            return None;
        }
        let b = self.bit(self.len - 1);
        self.len -= 1;
        if self.len.is_multiple_of(LIMB) {
            self.limbs.pop();
        } else {
            let mask = top_mask(self.len % LIMB);
            *self.limbs.last_mut().expect("nonempty") &= mask;
        }
        Some(b)
    }

    pub fn last(&self) -> Option<u8> {
        (self.len > 0).then(|| self.bit(self.len - 1))
    }

    pub fn child(&self, bit: u8) -> BinaryWord {
        let mut w = self.clone();
        w.push(bit);
        w
    }

    /// The first `n` bits (`n ≤ len`).
    pub fn truncated(&self, n: usize) -> BinaryWord {
        assert!(n <= self.len);
        let k = n.div_ceil(LIMB);
        let mut limbs: SmallVec<[u64; 2]> = SmallVec::from_slice(&self.limbs[..k]);
        if !n.is_multiple_of(LIMB) {
            limbs[k - 1] &= top_mask(n % LIMB);
        }
        BinaryWord { len: n, limbs }
    }

    /// Up to 64 bits starting at `offset`, MSB-aligned; bits past the
    /// requested `n` are zero.
    #[inline]
    fn chunk(&self, offset: usize, n: usize) -> u64 {
        let i = offset / LIMB;
        let s = offset % LIMB;
        let mut v = self.limbs[i] << s;
        if s > 0 && i + 1 < self.limbs.len() {
            v |= self.limbs[i + 1] >> (LIMB - s);
        }
        v & top_mask(n)
    }

    /// Appends the top `n` bits of `v`, which must be zero below them.
    #[inline]
    fn push_chunk(&mut self, v: u64, n: usize) {
        if n == 0 {
            return;
        }
        let s = self.len % LIMB;
        if s == 0 {
            self.limbs.push(v);
        } else {
            *self.limbs.last_mut().expect("partial limb") |= v >> s;
            if n > LIMB - s {
                self.limbs.push(v << (LIMB - s));
            }
        }
        self.len += n;
    }

    /// Appends `src[start..]`.
    pub fn extend_from(&mut self, src: &BinaryWord, start: usize) {
        let mut off = start;
        while off < src.len {
            let n = (src.len - off).min(LIMB);
            self.push_chunk(src.chunk(off, n), n);
            off += n;
        }
    }

    pub fn is_prefix_of(&self, other: &BinaryWord) -> bool {
        if self.len > other.len {
            return false;
        }
        let full = self.len / LIMB;
        if self.limbs[..full] != other.limbs[..full] {
            return false;
        }
        let rem = self.len % LIMB;
        rem == 0 || (self.limbs[full] ^ other.limbs[full]) & top_mask(rem) == 0
    }

    /// True when one word is a prefix of the other, i.e. the intervals meet.
    pub fn comparable(&self, other: &BinaryWord) -> bool {
        if self.len <= other.len {
            self.is_prefix_of(other)
        } else {
            other.is_prefix_of(self)
        }
    }

    /// The longer of two comparable words, `None` when they are disjoint.
    pub fn meet(&self, other: &BinaryWord) -> Option<BinaryWord> {
        if self.is_prefix_of(other) {
            Some(other.clone())
        } else if other.is_prefix_of(self) {
            Some(self.clone())
        } else {
            None
        }
    }

    /// Replaces the leading `from` by `to`. `from` must be a prefix of `self`.
    pub fn substitute_prefix(&self, from: &BinaryWord, to: &BinaryWord) -> BinaryWord {
        debug_assert!(from.is_prefix_of(self));
        let mut w = to.clone();
        w.extend_from(self, from.len);
        w
    }

    /// The word of `len` bits spelling `value` in binary, most significant first.
    pub fn from_index(value: u64, len: u32) -> BinaryWord {
        let mut w = BinaryWord::empty();
        for i in (0..len).rev() {
            w.push(((value >> i) & 1) as u8);
        }
        w
    }
}

impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len.min(other.len);
        let full = common / LIMB;
        for i in 0..full {
            match self.limbs[i].cmp(&other.limbs[i]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        let rem = common % LIMB;
        if rem > 0 {
            let m = top_mask(rem);
            match (self.limbs[full] & m).cmp(&(other.limbs[full] & m)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len == 0 {
            return f.write_str("e");
        }
        for b in self.iter() {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Parses `"e"` as the empty word, otherwise a run of `0`/`1`.
/// The empty string is also accepted as the empty word.
impl FromStr for BinaryWord {
    type Err = NvError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "e" {
            return Ok(BinaryWord::empty());
        }
        let mut w = BinaryWord::empty();
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => w.push(0),
                '1' => w.push(1),
                _ => {
                    return Err(NvError::Syntax {
                        line: 1,
                        column: i + 1,
                        message: format!("unexpected character {c:?} in binary word"),
                    })
                }
            }
        }
        Ok(w)
    }
}

/// The clopen set of infinite bit sequences extending `prefix`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DyadicInterval {
    pub prefix: BinaryWord,
}

impl DyadicInterval {
    pub fn new(prefix: BinaryWord) -> Self {
        DyadicInterval { prefix }
    }

    pub fn whole() -> Self {
        DyadicInterval::default()
    }

    pub fn contains(&self, other: &DyadicInterval) -> bool {
        self.prefix.is_prefix_of(&other.prefix)
    }
}

/// Intersection of two dyadic intervals; `None` when they are disjoint.
pub fn interval_intersect(a: &DyadicInterval, b: &DyadicInterval) -> Option<DyadicInterval> {
    a.prefix.meet(&b.prefix).map(DyadicInterval::new)
}
