//! The dyadic rationals inside 2V.
//!
//! `h₀` shifts the vertical coordinate along the three-piece map
//! `0 ↦ 00, 10 ↦ 01, 11 ↦ 1`. `hᵢ` cuts the square into `2ⁱ` vertical
//! columns, moves each column one step to the right and applies `h₀`'s
//! vertical shift only when wrapping from the last column to the first, so
//! that `hᵢ² = hᵢ₋₁`. Coordinate 0 is horizontal, coordinate 1 vertical.

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use crate::block::Subblock;
use crate::element::{equal, power, Element};
use crate::error::{check_dim, NvError, Result};
use crate::torsion::DEFAULT_SIZE_CAP;
use crate::word::BinaryWord;

/// `numerator / 2^exponent`, with an odd numerator unless it is zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DyadicRational {
    numerator: i64,
    exponent: u32,
}

impl DyadicRational {
    pub fn new(numerator: i64, exponent: u32) -> Self {
        let mut r = DyadicRational {
            numerator,
            exponent,
        };
        if r.numerator == 0 {
            r.exponent = 0;
        }
        while r.exponent > 0 && r.numerator % 2 == 0 {
            r.numerator /= 2;
            r.exponent -= 1;
        }
        r
    }

    pub fn integer(n: i64) -> Self {
        DyadicRational::new(n, 0)
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }
}

impl Add for DyadicRational {
    type Output = DyadicRational;

    fn add(self, rhs: DyadicRational) -> DyadicRational {
        let e = self.exponent.max(rhs.exponent);
        let a = self.numerator << (e - self.exponent);
        let b = rhs.numerator << (e - rhs.exponent);
        DyadicRational::new(a + b, e)
    }
}

impl Neg for DyadicRational {
    type Output = DyadicRational;

    fn neg(self) -> DyadicRational {
        DyadicRational::new(-self.numerator, self.exponent)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u64 << self.exponent)
        }
    }
}

/// Accepts `k` or `k/d` with `d` a power of two.
impl FromStr for DyadicRational {
    type Err = NvError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || NvError::InvalidInput(format!("not a dyadic rational: {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d.parse::<u64>().map_err(|_| bad())?),
            None => (s, 1),
        };
        if !den.is_power_of_two() {
            return Err(bad());
        }
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        Ok(DyadicRational::new(num, den.trailing_zeros()))
    }
}

fn sub(h: BinaryWord, v: &str) -> Subblock {
    Subblock::new(vec![h, v.parse().expect("literal word")])
}

/// The three vertical pieces of the shift on column `from` moved to column `to`.
fn wrap_pieces(from: &BinaryWord, to: &BinaryWord) -> [(Subblock, Subblock); 3] {
    [
        (sub(from.clone(), "0"), sub(to.clone(), "00")),
        (sub(from.clone(), "10"), sub(to.clone(), "01")),
        (sub(from.clone(), "11"), sub(to.clone(), "1")),
    ]
}

/// `h₀`: the vertical shift, trivial on the horizontal coordinate.
pub fn base_shift() -> Element {
    let e = BinaryWord::empty();
    Element::from_map_lines(2, wrap_pieces(&e, &e).into()).expect("valid construction")
}

/// `hᵢ` with the default block-size cap.
pub fn root_chain(i: u32) -> Result<Element> {
    root_chain_capped(i, DEFAULT_SIZE_CAP)
}

/// `hᵢ`, a square root of `hᵢ₋₁`, on `2ⁱ + 2` pieces.
pub fn root_chain_capped(i: u32, size_cap: usize) -> Result<Element> {
    if i == 0 {
        return Ok(base_shift());
    }
    let pieces = if i < 64 { (1u128 << i) + 2 } else { u128::MAX };
    if pieces > size_cap as u128 {
        return Err(NvError::Resource {
            size: pieces,
            cap: size_cap,
        });
    }
    let columns = 1u64 << i;
    let col = |k: u64| BinaryWord::from_index(k, i);
    let mut lines = Vec::with_capacity(pieces as usize);
    for k in 0..columns - 1 {
        lines.push((sub(col(k), "e"), sub(col(k + 1), "e")));
    }
    lines.extend(wrap_pieces(&col(columns - 1), &col(0)));
    Element::from_map_lines(2, lines)
}

/// `t = k/2ⁱ ↦ hᵢᵏ`, an injective homomorphism from the dyadic rationals.
pub fn dyadic_to_element(t: DyadicRational) -> Result<Element> {
    let h = root_chain(t.exponent)?;
    Ok(power(&h, t.numerator))
}

/// `hᵏ = g` for `k ≥ 2`.
pub fn verify_root(h: &Element, g: &Element, k: i64) -> Result<bool> {
    check_dim(g.dim(), h.dim())?;
    if k < 2 {
        return Err(NvError::InvalidInput(format!(
            "root order must be at least 2, got {k}"
        )));
    }
    equal(&power(h, k), g)
}
