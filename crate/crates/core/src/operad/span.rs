//! The span of aromas reachable from the generating operations: grafting,
//! the right-module action, and the tadpole closure. For each label set `S`
//! the reachable subspace satisfies the recursion
//!
//!   W(S) = span{ Div(T) : T a tree on S }
//!        + span{ w ◂ T : w ∈ W(S∖B), T a tree on B, ∅ ≠ B ⊊ S },
//!
//! because every iterated composition of the generators producing an aroma
//! either ends in the tadpole closure or in a module action.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::linalg::{BasisIndex, LinComb, SparseRationalMatrix};
use crate::species::{enumerate_aromas, enumerate_rooted_trees, Aroma};
use crate::Result;

use super::generators::{div, module_action};

fn mask_labels(mask: u64, n: usize) -> Vec<u32> {
    (1..=n as u32).filter(|&l| mask & (1 << (l - 1)) != 0).collect()
}

fn span_basis_memo(
    mask: u64,
    n: usize,
    memo: &mut BTreeMap<u64, Vec<LinComb<Aroma>>>,
) -> Result<Vec<LinComb<Aroma>>> {
    if let Some(b) = memo.get(&mask) {
        return Ok(b.clone());
    }
    let labels = mask_labels(mask, n);
    let mut candidates: Vec<LinComb<Aroma>> = Vec::new();
    for t in enumerate_rooted_trees(&labels)? {
        candidates.push(div(&t));
    }
    // proper nonempty submasks
    let mut sub = (mask.wrapping_sub(1)) & mask;
    while sub != 0 {
        let rest = mask & !sub;
        let inner_basis = span_basis_memo(rest, n, memo)?;
        if !inner_basis.is_empty() {
            for t in enumerate_rooted_trees(&mask_labels(sub, n))? {
                for w in &inner_basis {
                    candidates.push(w.apply(|a| {
                        module_action(a, &t).expect("disjoint labels by construction")
                    }));
                }
            }
        }
        sub = (sub.wrapping_sub(1)) & mask;
    }
    let ambient = BasisIndex::new(enumerate_aromas(&labels, 1)?);
    let cols = candidates
        .iter()
        .map(|v| ambient.coordinates(v).expect("aromas on the right labels"))
        .collect();
    let matrix = SparseRationalMatrix::from_columns(ambient.len(), cols)?;
    let basis: Vec<LinComb<Aroma>> = matrix
        .image_pivot_columns()
        .into_iter()
        .map(|j| candidates[j].clone())
        .collect();
    memo.insert(mask, basis.clone());
    Ok(basis)
}

/// A basis of the subspace of aromas on labels `1..=n` generated by the
/// three generating operations under iterated composition.
pub fn aroma_span_basis(n: usize) -> Result<Vec<LinComb<Aroma>>> {
    if n == 0 || n > 63 {
        return Err(Error::Domain("label count out of range".into()));
    }
    let mut memo = BTreeMap::new();
    let full = (1u64 << n) - 1;
    span_basis_memo(full, n, &mut memo)
}

/// Dimension of that subspace; equals (n+1)^(n-1).
pub fn suboperad_span_dimension(n: usize) -> Result<usize> {
    Ok(aroma_span_basis(n)?.len())
}
