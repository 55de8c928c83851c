//! JSON certificates for finite closures.
//!
//! A certificate records the joint invariant block and each generator's
//! permutation of its pieces, so anyone holding the generators can replay
//! the action and recount the group.

use serde::{Deserialize, Serialize};

use crate::block::{Block, Subblock};
use crate::element::Element;
use crate::error::{NvError, Result};
use crate::perm::Permutation;
use crate::torsion::{enumerate_group, permutation_on, ClosureResult, ClosureStatus};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureCertificate {
    pub dimension: usize,
    /// Pieces in canonical order, one word string per coordinate.
    pub invariant_block: Vec<Vec<String>>,
    pub generator_permutations: Vec<Permutation>,
    pub group_order: u64,
    pub status: String,
}

impl ClosureCertificate {
    pub fn from_result(r: &ClosureResult) -> Self {
        ClosureCertificate {
            dimension: r.dimension,
            invariant_block: r
                .invariant_block
                .iter()
                .flat_map(|b| b.pieces())
                .map(|p| p.words().iter().map(|w| w.to_string()).collect())
                .collect(),
            generator_permutations: r.generator_permutations.clone(),
            group_order: r.group_order,
            status: match r.status {
                ClosureStatus::Complete => "Complete".into(),
                ClosureStatus::CapExceeded => "CapExceeded".into(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| NvError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn block(&self) -> Result<Block> {
        let pieces = self
            .invariant_block
            .iter()
            .map(|ws| {
                let refs: Vec<&str> = ws.iter().map(String::as_str).collect();
                Subblock::parse(&refs)
            })
            .collect::<Result<Vec<_>>>()?;
        Block::validate(pieces, self.dimension)
    }

    /// Checks the recorded permutations against `generators` acting on the
    /// recorded block, and recounts the group when the certificate claims
    /// completeness.
    pub fn replay(&self, generators: &[Element], order_cap: usize) -> Result<bool> {
        if generators.len() != self.generator_permutations.len() {
            return Ok(false);
        }
        let b = self.block()?;
        for (g, p) in generators.iter().zip(&self.generator_permutations) {
            match permutation_on(g, &b) {
                Ok(q) if &q == p => {}
                _ => return Ok(false),
            }
        }
        if self.status == "Complete" {
            let (elements, capped) =
                enumerate_group(&self.generator_permutations, b.len(), order_cap);
            return Ok(!capped && elements.len() as u64 == self.group_order);
        }
        Ok(true)
    }
}
