use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::Result;

/// A labelled rooted tree stored as a parent map; edges point towards the
/// root, which is the unique vertex without a parent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootedTree {
    root: u32,
    /// parent of every non-root vertex
    parent: BTreeMap<u32, u32>,
}

impl RootedTree {
    pub fn new(root: u32, parent: BTreeMap<u32, u32>) -> Result<Self> {
        if parent.contains_key(&root) {
            return Err(Error::Structure(format!("root {root} has a parent")));
        }
        let tree = RootedTree { root, parent };
        let vertices = tree.vertices();
        for (&v, &p) in &tree.parent {
            if !vertices.contains(&p) {
                return Err(Error::Structure(format!(
                    "parent {p} of vertex {v} is not a vertex"
                )));
            }
        }
        // every vertex must reach the root, which also rules out cycles
        for &v in &vertices {
            let mut cur = v;
            let mut steps = 0usize;
            while cur != tree.root {
                cur = *tree.parent.get(&cur).ok_or_else(|| {
                    Error::Structure(format!("vertex {cur} has no parent and is not the root"))
                })?;
                steps += 1;
                if steps > vertices.len() {
                    return Err(Error::Structure(format!(
                        "cycle in parent map through vertex {v}"
                    )));
                }
            }
        }
        Ok(tree)
    }

    pub fn singleton(label: u32) -> Self {
        RootedTree {
            root: label,
            parent: BTreeMap::new(),
        }
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn parent_of(&self, v: u32) -> Option<u32> {
        self.parent.get(&v).copied()
    }

    pub fn parent_map(&self) -> &BTreeMap<u32, u32> {
        &self.parent
    }

    pub fn vertices(&self) -> BTreeSet<u32> {
        let mut vs: BTreeSet<u32> = self.parent.keys().copied().collect();
        vs.insert(self.root);
        vs
    }

    pub fn len(&self) -> usize {
        self.parent.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn children(&self, v: u32) -> Vec<u32> {
        self.parent
            .iter()
            .filter(|&(_, &p)| p == v)
            .map(|(&c, _)| c)
            .collect()
    }

    pub fn min_label(&self) -> u32 {
        self.vertices().into_iter().next().unwrap()
    }

    /// Relabels vertices through an injective map defined on all of them.
    pub fn relabel(&self, map: &BTreeMap<u32, u32>) -> Result<Self> {
        let get = |v: u32| -> Result<u32> {
            map.get(&v)
                .copied()
                .ok_or_else(|| Error::Domain(format!("relabelling undefined on vertex {v}")))
        };
        let mut parent = BTreeMap::new();
        for (&v, &p) in &self.parent {
            parent.insert(get(v)?, get(p)?);
        }
        let relabelled = RootedTree::new(get(self.root)?, parent)?;
        if relabelled.len() != self.len() {
            return Err(Error::Domain("relabelling is not injective".into()));
        }
        Ok(relabelled)
    }

    /// Attaches `sub`'s root as a new child of vertex `at`.
    pub fn graft(&self, at: u32, sub: &RootedTree) -> Result<Self> {
        if !self.vertices().contains(&at) {
            return Err(Error::Domain(format!("graft point {at} is not a vertex")));
        }
        let ours = self.vertices();
        if sub.vertices().iter().any(|v| ours.contains(v)) {
            return Err(Error::Domain("label clash in graft".into()));
        }
        let mut parent = self.parent.clone();
        parent.extend(sub.parent.iter().map(|(&v, &p)| (v, p)));
        parent.insert(sub.root, at);
        RootedTree::new(self.root, parent)
    }
}

/// A rooted tree whose root carries the distinguished m-coloured slot.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedTree {
    tree: RootedTree,
}

impl MarkedTree {
    pub fn new(tree: RootedTree) -> Self {
        MarkedTree { tree }
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn marked_label(&self) -> u32 {
        self.tree.root()
    }

    pub fn into_tree(self) -> RootedTree {
        self.tree
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(labels: &[u32]) -> RootedTree {
        // labels[0] is the root, each next vertex hangs under the previous one
        let mut parent = BTreeMap::new();
        for w in labels.windows(2) {
            parent.insert(w[1], w[0]);
        }
        RootedTree::new(labels[0], parent).unwrap()
    }

    #[test]
    fn constructor_rejects_malformed_maps() {
        // parent cycle
        let mut parent = BTreeMap::new();
        parent.insert(2, 3);
        parent.insert(3, 2);
        assert!(RootedTree::new(1, parent).is_err());
        // root with a parent
        let mut parent = BTreeMap::new();
        parent.insert(1, 2);
        assert!(RootedTree::new(1, parent).is_err());
        // dangling parent
        let mut parent = BTreeMap::new();
        parent.insert(2, 5);
        assert!(RootedTree::new(1, parent).is_err());
    }

    #[test]
    fn children_and_graft() {
        let t = chain(&[1, 2]);
        assert_eq!(t.children(1), vec![2]);
        let grafted = t.graft(2, &RootedTree::singleton(7)).unwrap();
        assert_eq!(grafted.parent_of(7), Some(2));
        assert_eq!(grafted.len(), 3);
        assert!(t.graft(2, &RootedTree::singleton(1)).is_err());
    }
}
