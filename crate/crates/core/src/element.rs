//! Elements of nV as pairs of dyadic blocks with a pairing of their pieces.
//!
//! Products follow the convention `gh = h ∘ g`: [`compose`]`(g, h)` applies
//! `g` first. The stored representative is never normalised implicitly;
//! equality goes through [`is_identity`] on `g · h⁻¹`.

use std::collections::HashMap;
use std::fmt;

use crate::block::{refines, wedge, Block, Subblock};
use crate::error::{check_dim, NvError, Result};
use crate::point::Point;

/// A homeomorphism of `C^n` sending `domain[i]` onto `range[pairing[i]]`
/// by prefix substitution.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    domain: Block,
    range: Block,
    pairing: Vec<usize>,
}

impl Element {
    /// `domain[i] ↦ range[pairing[i]]`, indices taken in canonical order.
    pub fn new(domain: Block, range: Block, pairing: Vec<usize>) -> Result<Element> {
        check_dim(domain.dim(), range.dim())?;
        if domain.len() != range.len() {
            return Err(NvError::LengthMismatch {
                domain: domain.len(),
                range: range.len(),
            });
        }
        let m = domain.len();
        let mut seen = vec![false; m];
        if pairing.len() != m {
            return Err(NvError::NotBijective(m));
        }
        for &j in &pairing {
            if j >= m || std::mem::replace(&mut seen[j], true) {
                return Err(NvError::NotBijective(m));
            }
        }
        Ok(Element {
            domain,
            range,
            pairing,
        })
    }

    /// Builds an element from subblock families given in any order, where
    /// `domain[i] ↦ range[pairing[i]]` refers to the positions as given.
    pub fn from_families(
        dim: usize,
        domain: Vec<Subblock>,
        range: Vec<Subblock>,
        pairing: &[usize],
    ) -> Result<Element> {
        if domain.len() != range.len() {
            return Err(NvError::LengthMismatch {
                domain: domain.len(),
                range: range.len(),
            });
        }
        let m = domain.len();
        let mut seen = vec![false; m];
        if pairing.len() != m {
            return Err(NvError::NotBijective(m));
        }
        for &j in pairing {
            if j >= m || std::mem::replace(&mut seen[j], true) {
                return Err(NvError::NotBijective(m));
            }
        }
        let pairs: Vec<(Subblock, Subblock)> = domain
            .iter()
            .zip(pairing)
            .map(|(d, &j)| (d.clone(), range[j].clone()))
            .collect();
        let x = Block::validate(domain, dim)?;
        let y = Block::validate(range, dim)?;
        Ok(from_trusted_pairs(dim, pairs, Some((&x, &y))))
    }

    /// Positional pairing: the i-th domain subblock maps to the i-th range subblock.
    pub fn from_map_lines(dim: usize, lines: Vec<(Subblock, Subblock)>) -> Result<Element> {
        let (d, r): (Vec<_>, Vec<_>) = lines.into_iter().unzip();
        let id: Vec<usize> = (0..d.len()).collect();
        Element::from_families(dim, d, r, &id)
    }

    pub fn dim(&self) -> usize {
        self.domain.dim()
    }

    pub fn domain(&self) -> &Block {
        &self.domain
    }

    pub fn range(&self) -> &Block {
        &self.range
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    /// Number of pieces in the stored representative.
    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    /// `(domain piece, range piece)` in canonical domain order.
    pub fn pairs(&self) -> impl Iterator<Item = (&Subblock, &Subblock)> + '_ {
        self.domain
            .pieces()
            .iter()
            .zip(&self.pairing)
            .map(|(d, &j)| (d, self.range.piece(j)))
    }

    /// Image of a subblock lying inside one domain piece.
    pub fn image_of(&self, sub: &Subblock) -> Option<Subblock> {
        let i = self.domain.find_containing(sub)?;
        Some(sub.substitute(self.domain.piece(i), self.range.piece(self.pairing[i])))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Element{")?;
        for (i, (d, r)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d} -> {r}")?;
        }
        f.write_str("}")
    }
}

/// Sorts a list of map pairs whose two sides each partition the cube.
fn from_trusted_pairs(
    dim: usize,
    mut pairs: Vec<(Subblock, Subblock)>,
    blocks: Option<(&Block, &Block)>,
) -> Element {
    pairs.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    order.sort_unstable_by(|&a, &b| pairs[a].1.cmp(&pairs[b].1));
    let mut pairing = vec![0; pairs.len()];
    for (rank, &i) in order.iter().enumerate() {
        pairing[i] = rank;
    }
    let (domain, range) = match blocks {
        Some((x, y)) => (x.clone(), y.clone()),
        None => {
            let range = order.iter().map(|&i| pairs[i].1.clone()).collect();
            let domain = pairs.into_iter().map(|(d, _)| d).collect();
            (
                Block::from_partition(dim, domain),
                Block::from_partition(dim, range),
            )
        }
    };
    debug_assert_eq!(domain.len(), pairing.len());
    Element {
        domain,
        range,
        pairing,
    }
}

/// Validated constructor; see [`Element::new`].
pub fn make_element(x: Block, y: Block, pairing: Vec<usize>) -> Result<Element> {
    Element::new(x, y, pairing)
}

/// The identity on the trivial block.
pub fn identity(dim: usize) -> Element {
    Element {
        domain: Block::trivial(dim),
        range: Block::trivial(dim),
        pairing: vec![0],
    }
}

pub fn inverse(g: &Element) -> Element {
    let mut inv = vec![0; g.pairing.len()];
    for (i, &j) in g.pairing.iter().enumerate() {
        inv[j] = i;
    }
    Element {
        domain: g.range.clone(),
        range: g.domain.clone(),
        pairing: inv,
    }
}

/// Whether `z` refines the stored domain of `g`.
pub fn is_admissible(g: &Element, z: &Block) -> Result<bool> {
    refines(z, &g.domain)
}

/// `g(Z)` for a block refining the stored domain.
pub fn apply_block(g: &Element, z: &Block) -> Result<Block> {
    check_dim(g.dim(), z.dim())?;
    let images = z
        .pieces()
        .iter()
        .map(|p| {
            g.image_of(p)
                .ok_or_else(|| NvError::NotAdmissible(p.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Block::from_partition(z.dim(), images))
}

/// The same map represented on `domain(g) ∧ Z`.
pub fn refine_domain(g: &Element, z: &Block) -> Result<Element> {
    check_dim(g.dim(), z.dim())?;
    let pairs = g
        .domain
        .meet_pairs(z)
        .into_iter()
        .map(|(piece, i, _)| {
            let img = piece.substitute(g.domain.piece(i), g.range.piece(g.pairing[i]));
            (piece, img)
        })
        .collect();
    Ok(from_trusted_pairs(g.dim(), pairs, None))
}

pub fn apply_point(g: &Element, p: &Point) -> Result<Point> {
    check_dim(g.dim(), p.dim())?;
    let (d, r) = g
        .pairs()
        .find(|(d, _)| p.in_subblock(d))
        .ok_or_else(|| NvError::Inconsistent("point lies in no domain piece".into()))?;
    Ok(p.substitute(d, r))
}

/// The product `gh`: apply `g`, then `h`.
///
/// Each piece `W` of `range(g) ∧ domain(h)` contributes the map line
/// `g⁻¹(W) ↦ h(W)`; the piece remembers which range piece of `g` and which
/// domain piece of `h` it came from.
pub fn compose(g: &Element, h: &Element) -> Result<Element> {
    check_dim(g.dim(), h.dim())?;
    let mut back = vec![0; g.pairing.len()];
    for (i, &j) in g.pairing.iter().enumerate() {
        back[j] = i;
    }
    let pairs = g
        .range
        .meet_pairs(&h.domain)
        .into_iter()
        .map(|(w, a, b)| {
            let src = w.substitute(g.range.piece(a), g.domain.piece(back[a]));
            let dst = w.substitute(h.domain.piece(b), h.range.piece(h.pairing[b]));
            (src, dst)
        })
        .collect();
    Ok(from_trusted_pairs(g.dim(), pairs, None))
}

/// `g^k` by repeated right multiplication; negative powers invert first.
pub fn power(g: &Element, k: i64) -> Element {
    if k == 0 {
        return identity(g.dim());
    }
    let base = if k < 0 { inverse(g) } else { g.clone() };
    let mut acc = base.clone();
    for _ in 1..k.unsigned_abs() {
        acc = compose(&acc, &base).expect("same dimension");
    }
    acc
}

/// The nested target block `g(…g(g(X) ∧ X) ∧ … ∧ X)` with `i` applications
/// of `g`, where `X = domain(g)`.
pub fn power_block_formula(g: &Element, i: u32) -> Result<Block> {
    if i == 0 {
        return Err(NvError::InvalidInput(
            "power index must be at least 1".into(),
        ));
    }
    let x = g.domain();
    let mut b = x.clone();
    for _ in 0..i {
        b = apply_block(g, &wedge(&b, x)?)?;
    }
    Ok(b)
}

/// Every piece maps onto an identical piece.
pub fn is_identity(g: &Element) -> bool {
    g.pairs().all(|(d, r)| d == r)
}

pub fn equal(g: &Element, h: &Element) -> Result<bool> {
    Ok(is_identity(&compose(g, &inverse(h))?))
}

/// `c⁻¹ g c`.
pub fn conjugate(g: &Element, c: &Element) -> Result<Element> {
    compose(&compose(&inverse(c), g)?, c)
}

/// Greedily merges sibling pieces whose images are siblings along the same
/// coordinate in the same bit order. Scans coordinates in ascending order
/// and pieces in canonical order, restarting after every merge pass.
pub fn reduce(g: &Element) -> Element {
    let dim = g.dim();
    let mut pairs: Vec<(Subblock, Subblock)> =
        g.pairs().map(|(d, r)| (d.clone(), r.clone())).collect();
    loop {
        let mut merged_any = false;
        for k in 0..dim {
            pairs.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            let index: HashMap<&Subblock, usize> =
                pairs.iter().enumerate().map(|(i, (d, _))| (d, i)).collect();
            let mut gone = vec![false; pairs.len()];
            let mut merged = Vec::new();
            for (i, (d, r)) in pairs.iter().enumerate() {
                if gone[i] || d.word(k).last() != Some(0) {
                    continue;
                }
                let sibling = d.child_swap_last(k);
                let Some(&j) = index.get(&sibling) else {
                    continue;
                };
                if gone[j] {
                    continue;
                }
                let (rp0, rb0) = match r.parent_along(k) {
                    Some(x) => x,
                    None => continue,
                };
                let (rp1, rb1) = match pairs[j].1.parent_along(k) {
                    Some(x) => x,
                    None => continue,
                };
                if rb0 == 0 && rb1 == 1 && rp0 == rp1 {
                    gone[i] = true;
                    gone[j] = true;
                    let (dp, _) = d.parent_along(k).expect("nonempty word");
                    merged.push((dp, rp0));
                }
            }
            if !merged.is_empty() {
                merged_any = true;
                let mut next: Vec<_> = pairs
                    .into_iter()
                    .zip(gone)
                    .filter(|(_, g)| !g)
                    .map(|(p, _)| p)
                    .collect();
                next.extend(merged);
                pairs = next;
            }
        }
        if !merged_any {
            break;
        }
    }
    from_trusted_pairs(dim, pairs, None)
}

impl Subblock {
    /// The sibling obtained by flipping the last bit of word `k`.
    fn child_swap_last(&self, k: usize) -> Subblock {
        let (parent, bit) = self.parent_along(k).expect("nonempty word");
        parent.child(k, 1 - bit)
    }
}
