//! Torsion: orders, invariant blocks, and finite closure of torsion subgroups.
//!
//! A torsion element fixes some dyadic block setwise, and finitely many
//! torsion elements whose products stay torsion fix a common block. Once a
//! joint invariant block `B` is known every generator is just a permutation
//! of the pieces of `B`, so the generated group embeds in `Sym(|B|)`.

use std::collections::{HashSet, VecDeque};

use crate::block::{wedge, Block};
use crate::element::{apply_block, compose, is_identity, refine_domain, Element};
use crate::error::{check_dim, NvError, Result};
use crate::perm::Permutation;

pub const DEFAULT_ORDER_CAP: u64 = 4096;
pub const DEFAULT_SIZE_CAP: usize = 65536;
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderResult {
    Finite(u64),
    /// No identity power up to `cap`, or a running power outgrew the size
    /// cap first.
    ExceedsCap {
        cap: u64,
        max_block_size: usize,
    },
}

impl OrderResult {
    pub fn finite(self) -> Option<u64> {
        match self {
            OrderResult::Finite(p) => Some(p),
            OrderResult::ExceedsCap { .. } => None,
        }
    }
}

/// Smallest `p ≤ cap` with `g^p = id`, tracking the running power.
pub fn order(g: &Element, cap: u64, size_cap: usize) -> OrderResult {
    let mut acc = g.clone();
    let mut max_seen = g.len();
    let exceeded = |max_block_size| OrderResult::ExceedsCap {
        cap,
        max_block_size,
    };
    if g.len() > size_cap {
        return exceeded(max_seen);
    }
    for p in 1..=cap {
        if is_identity(&acc) {
            return OrderResult::Finite(p);
        }
        if p == cap {
            break;
        }
        acc = compose(&acc, g).expect("same dimension");
        max_seen = max_seen.max(acc.len());
        if acc.len() > size_cap {
            break;
        }
    }
    exceeded(max_seen)
}

/// A block `B ⪰ domain(g)` with `g(B) = B`, for `p` any multiple of the order.
///
/// `B` is the target block of the stored representative of `g^p`.
pub fn invariant_block(g: &Element, p: u64) -> Result<Block> {
    if p == 0 {
        return Err(NvError::InvalidOrder(0));
    }
    let mut acc = g.clone();
    for _ in 1..p {
        acc = compose(&acc, g)?;
    }
    if !is_identity(&acc) {
        return Err(NvError::InvalidOrder(p));
    }
    let b = acc.range().clone();
    if apply_block(g, &b)? != b {
        return Err(NvError::Inconsistent(format!(
            "target block of g^{p} is not invariant"
        )));
    }
    Ok(b)
}

/// `g` represented as an identical block pair on an invariant block.
pub fn identical_pair(g: &Element, b: &Block) -> Result<Element> {
    let r = refine_domain(g, b)?;
    if r.domain() != b || r.range() != b {
        return Err(NvError::NotInvariant(b.to_string()));
    }
    Ok(r)
}

/// Step `i` of the block-pair powers of `gh` and `hg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StQuadruple {
    pub i: usize,
    /// Source and target blocks of `(gh)^i`.
    pub s: Block,
    pub t: Block,
    /// Domain and range blocks of `(hg)^i`.
    pub d: Block,
    pub r: Block,
}

/// The source/target sequences `(Sⁱ, Tⁱ)` of `(gh)ⁱ` and `(Dⁱ, Rⁱ)` of
/// `(hg)ⁱ` for `i = 1..=steps`, where `g` and `h` are given as identical
/// block pairs `(X, X, σ)` and `(Y, Y, τ)`.
///
/// `(S¹, T¹) = (g⁻¹(X ∧ Y), h(X ∧ Y))` and each later step multiplies the
/// previous pair on the right by the first.
pub fn st_sequence(g: &Element, h: &Element, steps: usize) -> Result<Vec<StQuadruple>> {
    check_dim(g.dim(), h.dim())?;
    for e in [g, h] {
        if e.domain() != e.range() {
            return Err(NvError::NotInvariant(e.domain().to_string()));
        }
    }
    if steps == 0 {
        return Err(NvError::InvalidInput(
            "at least one step is required".into(),
        ));
    }
    let gh = compose(g, h)?;
    let hg = compose(h, g)?;
    let mut left = gh.clone();
    let mut right = hg.clone();
    let mut out = Vec::with_capacity(steps);
    for i in 1..=steps {
        if i > 1 {
            left = compose(&left, &gh)?;
            right = compose(&right, &hg)?;
        }
        out.push(StQuadruple {
            i,
            s: left.domain().clone(),
            t: left.range().clone(),
            d: right.domain().clone(),
            r: right.range().clone(),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JointInvariant {
    Found(Block),
    CapExceeded { size: usize },
}

/// A block fixed by every generator, found by the fixed-point iteration
/// `B ← B ∧ gₖ(B)` from the common refinement of all domains and ranges.
pub fn joint_invariant_block(generators: &[Element], size_cap: usize) -> Result<JointInvariant> {
    let first = generators
        .first()
        .ok_or_else(|| NvError::InvalidInput("no generators".into()))?;
    let dim = first.dim();
    let mut b = Block::trivial(dim);
    for g in generators {
        check_dim(dim, g.dim())?;
        b = wedge(&wedge(&b, g.domain())?, g.range())?;
        if b.len() > size_cap {
            return Ok(JointInvariant::CapExceeded { size: b.len() });
        }
    }
    loop {
        let mut changed = false;
        for g in generators {
            let img = apply_block(g, &b)?;
            if img != b {
                b = wedge(&b, &img)?;
                changed = true;
                if b.len() > size_cap {
                    return Ok(JointInvariant::CapExceeded { size: b.len() });
                }
            }
        }
        if !changed {
            return Ok(JointInvariant::Found(b));
        }
    }
}

/// The action of `g` on the pieces of an invariant block, in canonical order.
pub fn permutation_on(g: &Element, b: &Block) -> Result<Permutation> {
    let images = b
        .pieces()
        .iter()
        .map(|p| {
            let img = g
                .image_of(p)
                .ok_or_else(|| NvError::NotAdmissible(p.to_string()))?;
            b.position(&img).ok_or_else(|| {
                NvError::NotInvariant(format!("{p} maps to {img}, outside the block"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_images(images).ok_or_else(|| NvError::NotInvariant(b.to_string()))
}

#[derive(Clone, Copy, Debug)]
pub struct ClosureOptions {
    /// Largest joint invariant block to try.
    pub size_cap: usize,
    /// Largest group to enumerate.
    pub order_cap: usize,
    /// Iteration cap for the torsion check of generators that are not
    /// identical block pairs.
    pub power_cap: u64,
    pub keep_elements: bool,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions {
            size_cap: DEFAULT_SIZE_CAP,
            order_cap: DEFAULT_GROUP_CAP,
            power_cap: DEFAULT_ORDER_CAP,
            keep_elements: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureStatus {
    Complete,
    CapExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CapReason {
    /// Generator `index` showed no identity power within the iteration cap.
    GeneratorOrder {
        index: usize,
    },
    BlockSize {
        size: usize,
    },
    GroupOrder,
}

#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub dimension: usize,
    /// Present whenever a joint invariant block was found.
    pub invariant_block: Option<Block>,
    pub generator_permutations: Vec<Permutation>,
    /// Exact when complete; a lower bound when enumeration hit the cap.
    pub group_order: u64,
    pub elements: Option<Vec<Permutation>>,
    pub status: ClosureStatus,
    pub cap_reason: Option<CapReason>,
}

impl ClosureResult {
    fn capped(dimension: usize, reason: CapReason) -> Self {
        ClosureResult {
            dimension,
            invariant_block: None,
            generator_permutations: Vec::new(),
            group_order: 0,
            elements: None,
            status: ClosureStatus::CapExceeded,
            cap_reason: Some(reason),
        }
    }
}

/// Breadth-first enumeration of the group generated by `gens`.
/// Returns the elements found and whether the cap stopped the search.
pub fn enumerate_group(
    gens: &[Permutation],
    degree: usize,
    cap: usize,
) -> (Vec<Permutation>, bool) {
    let start = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut order = vec![start.clone()];
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = x.then(s);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return (order, true);
                }
                seen.insert(y.clone());
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    (order, false)
}

/// The finite group generated by torsion elements, as permutations of a
/// joint invariant block.
pub fn closure(generators: &[Element], opts: &ClosureOptions) -> Result<ClosureResult> {
    let dim = generators
        .first()
        .ok_or_else(|| NvError::InvalidInput("no generators".into()))?
        .dim();
    for g in generators {
        check_dim(dim, g.dim())?;
    }
    for (index, g) in generators.iter().enumerate() {
        if g.domain() != g.range() && order(g, opts.power_cap, opts.size_cap).finite().is_none() {
            return Ok(ClosureResult::capped(
                dim,
                CapReason::GeneratorOrder { index },
            ));
        }
    }
    let b = match joint_invariant_block(generators, opts.size_cap)? {
        JointInvariant::Found(b) => b,
        JointInvariant::CapExceeded { size } => {
            return Ok(ClosureResult::capped(dim, CapReason::BlockSize { size }))
        }
    };
    let perms = generators
        .iter()
        .map(|g| {
            permutation_on(g, &b).map_err(|e| {
                NvError::Inconsistent(format!("generator not invariant on joint block: {e}"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let (elements, capped) = enumerate_group(&perms, b.len(), opts.order_cap);
    Ok(ClosureResult {
        dimension: dim,
        group_order: elements.len() as u64,
        invariant_block: Some(b),
        generator_permutations: perms,
        elements: opts.keep_elements.then_some(elements),
        status: if capped {
            ClosureStatus::CapExceeded
        } else {
            ClosureStatus::Complete
        },
        cap_reason: capped.then_some(CapReason::GroupOrder),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{conjugate, identity, make_element};

    fn blk(p: &[&[&str]]) -> Block {
        Block::parse(p, p[0].len()).unwrap()
    }

    fn swap() -> Element {
        let h = blk(&[&["0"], &["1"]]);
        make_element(h.clone(), h, vec![1, 0]).unwrap()
    }

    fn shift() -> Element {
        make_element(
            blk(&[&["0"], &["10"], &["11"]]),
            blk(&[&["00"], &["01"], &["1"]]),
            vec![0, 1, 2],
        )
        .unwrap()
    }

    fn tri() -> Block {
        blk(&[&["0"], &["10"], &["11"]])
    }

    #[test]
    fn order_examples() {
        assert_eq!(order(&identity(2), 10, 100), OrderResult::Finite(1));
        let cyc = make_element(tri(), tri(), vec![1, 2, 0]).unwrap();
        assert_eq!(order(&cyc, 10, 100), OrderResult::Finite(3));
        assert!(matches!(
            order(&shift(), 64, DEFAULT_SIZE_CAP),
            OrderResult::ExceedsCap { cap: 64, .. }
        ));
        assert!(matches!(
            order(&shift(), 64, 10),
            OrderResult::ExceedsCap {
                max_block_size: 11,
                ..
            }
        ));
    }

    #[test]
    fn invariant_block_examples() {
        assert_eq!(invariant_block(&swap(), 2).unwrap(), blk(&[&["0"], &["1"]]));
        let cyc = make_element(tri(), tri(), vec![1, 2, 0]).unwrap();
        assert_eq!(invariant_block(&cyc, 3).unwrap(), tri());
        assert_eq!(invariant_block(&cyc, 6).unwrap(), tri());
        assert_eq!(invariant_block(&cyc, 2), Err(NvError::InvalidOrder(2)));

        let g = conjugate(&swap(), &shift()).unwrap();
        let b = invariant_block(&g, 2).unwrap();
        assert_eq!(apply_block(&g, &b).unwrap(), b);
        assert!(b.len() <= 9);
    }

    #[test]
    fn st_sequence_for_swap() {
        let s = swap();
        let seq = st_sequence(&s, &s, 2).unwrap();
        let halves = blk(&[&["0"], &["1"]]);
        assert_eq!(seq[0].t, halves);
        assert_eq!(seq[1].t, seq[0].t);
        assert!(matches!(
            st_sequence(&shift(), &s, 1),
            Err(NvError::NotInvariant(_))
        ));
    }

    #[test]
    fn joint_block_examples() {
        assert_eq!(
            joint_invariant_block(&[swap()], 100).unwrap(),
            JointInvariant::Found(blk(&[&["0"], &["1"]]))
        );
        let a = make_element(tri(), tri(), vec![1, 0, 2]).unwrap();
        let b = make_element(tri(), tri(), vec![1, 2, 0]).unwrap();
        assert_eq!(
            joint_invariant_block(&[a, b], 100).unwrap(),
            JointInvariant::Found(tri())
        );
        assert!(matches!(
            joint_invariant_block(&[swap(), shift()], 500).unwrap(),
            JointInvariant::CapExceeded { .. }
        ));
    }

    #[test]
    fn closure_examples() {
        let r = closure(&[swap()], &ClosureOptions::default()).unwrap();
        assert_eq!(r.group_order, 2);
        assert_eq!(r.status, ClosureStatus::Complete);

        let a = make_element(tri(), tri(), vec![1, 0, 2]).unwrap();
        let b = make_element(tri(), tri(), vec![1, 2, 0]).unwrap();
        let r = closure(&[a, b], &ClosureOptions::default()).unwrap();
        assert_eq!(r.group_order, 6);

        let opts = ClosureOptions {
            power_cap: 64,
            ..ClosureOptions::default()
        };
        let r = closure(&[swap(), shift()], &opts).unwrap();
        assert_eq!(r.status, ClosureStatus::CapExceeded);
        assert_eq!(r.cap_reason, Some(CapReason::GeneratorOrder { index: 1 }));

        let r = closure(&[identity(2)], &ClosureOptions::default()).unwrap();
        assert_eq!(r.group_order, 1);
    }

    #[test]
    fn closure_group_cap() {
        let a = make_element(tri(), tri(), vec![1, 0, 2]).unwrap();
        let b = make_element(tri(), tri(), vec![1, 2, 0]).unwrap();
        let opts = ClosureOptions {
            order_cap: 4,
            ..ClosureOptions::default()
        };
        let r = closure(&[a, b], &opts).unwrap();
        assert_eq!(r.status, ClosureStatus::CapExceeded);
        assert_eq!(r.group_order, 4);
    }
}
