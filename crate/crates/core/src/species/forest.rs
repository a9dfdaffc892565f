use std::collections::BTreeSet;

use crate::error::Error;
use crate::Result;

use super::aroma::Aroma;
use super::code::tree_code;
use super::tree::RootedTree;

/// An aromatic forest: a sign-ordered sequence of rooted trees together with
/// a multiset of aromas, on pairwise disjoint label sets. Construction sorts
/// the tree components into canonical order (by unlabelled code, ties broken
/// by smallest label) and reports the sign of the sorting permutation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AromaticForest {
    trees: Vec<RootedTree>,
    aromas: Vec<Aroma>,
}

/// Sign of the permutation that stably sorts `items` by `key`.
pub fn sorting_sign<T, K: Ord>(items: &mut Vec<T>, key: impl Fn(&T) -> K) -> i32 {
    let keys: Vec<K> = items.iter().map(&key).collect();
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    // parity via cycle decomposition of the permutation
    let mut seen = vec![false; order.len()];
    let mut sign = 1i32;
    for start in 0..order.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = order[cur];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    let mut slots: Vec<Option<T>> = items.drain(..).map(Some).collect();
    *items = order.iter().map(|&src| slots[src].take().unwrap()).collect();
    sign
}

pub fn component_key(t: &RootedTree) -> (String, u32) {
    (tree_code(t).to_string(), t.min_label())
}

impl AromaticForest {
    /// Canonicalizes and returns the forest together with the sign of the
    /// permutation that sorted the tree components.
    pub fn new(mut trees: Vec<RootedTree>, mut aromas: Vec<Aroma>) -> Result<(Self, i32)> {
        let mut all: BTreeSet<u32> = BTreeSet::new();
        let mut count = 0usize;
        for t in &trees {
            let vs = t.vertices();
            count += vs.len();
            all.extend(vs);
        }
        for a in &aromas {
            let vs = a.vertices();
            count += vs.len();
            all.extend(vs);
        }
        if all.len() != count {
            return Err(Error::Structure("components share labels".into()));
        }
        let sign = sorting_sign(&mut trees, component_key);
        aromas.sort();
        Ok((AromaticForest { trees, aromas }, sign))
    }

    pub fn empty() -> Self {
        AromaticForest {
            trees: Vec::new(),
            aromas: Vec::new(),
        }
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.trees
    }

    pub fn aromas(&self) -> &[Aroma] {
        &self.aromas
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(RootedTree::len).sum::<usize>()
            + self.aromas.iter().map(Aroma::len).sum::<usize>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorting_sign_transposition() {
        let mut v = vec![2, 1];
        assert_eq!(sorting_sign(&mut v, |&x| x), -1);
        assert_eq!(v, vec![1, 2]);
        let mut v = vec![3, 1, 2];
        assert_eq!(sorting_sign(&mut v, |&x| x), 1);
        assert_eq!(v, vec![1, 2, 3]);
    }

    #[test]
    fn forest_rejects_label_clash() {
        let t1 = RootedTree::singleton(1);
        let t2 = RootedTree::singleton(1);
        assert!(AromaticForest::new(vec![t1, t2], vec![]).is_err());
    }

    #[test]
    fn forest_sign_of_component_swap() {
        let t1 = RootedTree::singleton(1);
        let t2 = RootedTree::singleton(2);
        let (f1, s1) = AromaticForest::new(vec![t1.clone(), t2.clone()], vec![]).unwrap();
        let (f2, s2) = AromaticForest::new(vec![t2, t1], vec![]).unwrap();
        assert_eq!(f1, f2);
        assert_eq!(s1, -s2);
    }
}
