//! Exhaustive enumeration of labelled rooted trees and aromas, and of their
//! isomorphism classes.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::par;
use crate::Result;

use super::aroma::Aroma;
use super::code::{aroma_code, tree_code, UnlabelledKey};
use super::text::{print_aroma, print_tree};
use super::tree::RootedTree;

/// All rooted trees on the given labels, deterministically ordered (by
/// canonical code, then by serialization). There are n^(n-1) of them.
pub fn enumerate_rooted_trees(labels: &[u32]) -> Result<Vec<RootedTree>> {
    let n = labels.len();
    if n == 0 {
        return Err(Error::Domain("empty label set".into()));
    }
    let mut trees = par::flat_map_collect(labels, |&root| {
        let others: Vec<u32> = labels.iter().copied().filter(|&v| v != root).collect();
        let mut out = Vec::new();
        // odometer over all parent assignments others -> labels
        let mut digits = vec![0usize; others.len()];
        loop {
            let parent: BTreeMap<u32, u32> = others
                .iter()
                .zip(&digits)
                .map(|(&v, &d)| (v, labels[d]))
                .collect();
            if let Ok(t) = RootedTree::new(root, parent) {
                out.push(t);
            }
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return out;
                }
                digits[i] += 1;
                if digits[i] < n {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    });
    trees.sort_by_cached_key(|t| (tree_code(t), print_tree(t)));
    Ok(trees)
}

/// All aromas (connected functional graphs) on the given labels whose cycle
/// has length at least `min_cycle_len`.
pub fn enumerate_aromas(labels: &[u32], min_cycle_len: usize) -> Result<Vec<Aroma>> {
    let n = labels.len();
    if n == 0 {
        return Err(Error::Domain("empty label set".into()));
    }
    let total = (n as u64).pow(n as u32);
    let mut aromas: Vec<Aroma> = par::map_range(0..total as usize, |idx| {
        let mut code = idx;
        let succ: BTreeMap<u32, u32> = labels
            .iter()
            .map(|&v| {
                let s = labels[code % n];
                code /= n;
                (v, s)
            })
            .collect();
        Aroma::new(succ).ok()
    })
    .into_iter()
    .flatten()
    .filter(|a| a.cycle_len() >= min_cycle_len)
    .collect();
    aromas.sort_by_cached_key(|a| (aroma_code(a), print_aroma(a)));
    Ok(aromas)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnlabelledKind {
    Tree,
    Aroma,
    /// Aromas whose cycle length is at least two.
    AromaPlus,
}

impl std::str::FromStr for UnlabelledKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tree" => Ok(UnlabelledKind::Tree),
            "aroma" => Ok(UnlabelledKind::Aroma),
            "aroma+" | "aroma-plus" => Ok(UnlabelledKind::AromaPlus),
            other => Err(Error::Domain(format!("unknown kind {other:?}"))),
        }
    }
}

/// One canonical code per isomorphism class on `n` vertices, sorted.
pub fn enumerate_unlabelled(kind: UnlabelledKind, n: usize) -> Result<Vec<UnlabelledKey>> {
    if n == 0 {
        return Err(Error::Domain("vertex count must be positive".into()));
    }
    let labels: Vec<u32> = (1..=n as u32).collect();
    let mut codes: Vec<UnlabelledKey> = match kind {
        UnlabelledKind::Tree => enumerate_rooted_trees(&labels)?
            .iter()
            .map(tree_code)
            .collect(),
        UnlabelledKind::Aroma => enumerate_aromas(&labels, 1)?.iter().map(aroma_code).collect(),
        UnlabelledKind::AromaPlus => {
            enumerate_aromas(&labels, 2)?.iter().map(aroma_code).collect()
        }
    };
    codes.sort();
    codes.dedup();
    Ok(codes)
}

/// Number of disjoint unions of aromas on `n` labels, computed from the
/// labelled aroma counts by the exponential-formula recurrence
/// f(n) = sum_k C(n-1, k-1) a(k) f(n-k).
pub fn forests_of_aromas_count(connected: &[u64]) -> Vec<u64> {
    let n = connected.len();
    let mut f = vec![0u64; n + 1];
    f[0] = 1;
    for m in 1..=n {
        let mut acc = 0u64;
        for k in 1..=m {
            let mut binom = 1u64;
            for i in 0..(k - 1) {
                binom = binom * ((m - 1 - i) as u64) / ((i + 1) as u64);
            }
            acc += binom * connected[k - 1] * f[m - k];
        }
        f[m] = acc;
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_tree_counts_match_cayley() {
        for n in 1..=5usize {
            let labels: Vec<u32> = (1..=n as u32).collect();
            let trees = enumerate_rooted_trees(&labels).unwrap();
            assert_eq!(trees.len(), n.pow(n as u32 - 1));
        }
        assert!(enumerate_rooted_trees(&[]).is_err());
    }

    #[test]
    fn aroma_counts_small() {
        assert_eq!(enumerate_aromas(&[1], 1).unwrap().len(), 1);
        // all 4 endofunctions on {1,2} minus the disconnected pair of loops
        assert_eq!(enumerate_aromas(&[1, 2], 1).unwrap().len(), 3);
        assert_eq!(enumerate_aromas(&[1, 2], 2).unwrap().len(), 1);
        assert!(enumerate_aromas(&[], 1).is_err());
    }

    #[test]
    fn unlabelled_class_counts() {
        assert_eq!(
            enumerate_unlabelled(UnlabelledKind::Tree, 3).unwrap().len(),
            2
        );
        assert_eq!(
            enumerate_unlabelled(UnlabelledKind::Tree, 4).unwrap().len(),
            4
        );
        assert_eq!(
            enumerate_unlabelled(UnlabelledKind::AromaPlus, 2).unwrap().len(),
            1
        );
    }

    #[test]
    fn forests_of_aromas_are_endofunctions() {
        let connected: Vec<u64> = (1..=5usize)
            .map(|n| {
                let labels: Vec<u32> = (1..=n as u32).collect();
                enumerate_aromas(&labels, 1).unwrap().len() as u64
            })
            .collect();
        let f = forests_of_aromas_count(&connected);
        for n in 1..=5usize {
            assert_eq!(f[n], (n as u64).pow(n as u32));
        }
    }
}
