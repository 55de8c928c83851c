//! Exact computations in the Brin–Thompson groups nV.
//!
//! An element is a pair of dyadic blocks of the Cantor cube `C^n` together
//! with a bijection between their pieces; each piece is carried onto its
//! partner by prefix substitution. Everything here is exact: blocks are
//! compared word for word, measures are summed as big dyadic fractions.
//!
//! ```
//! use nv_core::{compose, inverse, is_identity, roots};
//!
//! let h1 = roots::root_chain(1).unwrap();
//! let h0 = roots::base_shift();
//! assert!(roots::verify_root(&h1, &h0, 2).unwrap());
//! assert!(is_identity(&compose(&h0, &inverse(&h0)).unwrap()));
//! ```

pub mod block;
pub mod element;
pub mod error;
pub mod io;
pub mod perm;
pub mod point;
pub mod random;
pub mod roots;
pub mod torsion;
pub mod word;

pub use block::{refines, subblock_intersect, wedge, Block, Subblock};
pub use element::{
    apply_block, apply_point, compose, conjugate, equal, identity, inverse, is_admissible,
    is_identity, make_element, power, power_block_formula, reduce, refine_domain, Element,
};
pub use error::{NvError, Result};
pub use perm::Permutation;
pub use point::{PeriodicSequence, Point};
pub use word::{interval_intersect, BinaryWord, DyadicInterval};
