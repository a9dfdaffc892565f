use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::Result;

use super::tree::RootedTree;

/// An aroma: a connected functional graph, i.e. a directed cycle with rooted
/// trees hanging off its vertices. Every vertex has exactly one successor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Aroma {
    succ: BTreeMap<u32, u32>,
}

impl Aroma {
    pub fn new(succ: BTreeMap<u32, u32>) -> Result<Self> {
        if succ.is_empty() {
            return Err(Error::Structure("empty aroma".into()));
        }
        for (&v, &s) in &succ {
            if !succ.contains_key(&s) {
                return Err(Error::Structure(format!(
                    "successor {s} of vertex {v} is not a vertex"
                )));
            }
        }
        let aroma = Aroma { succ };
        if !aroma.is_connected() {
            return Err(Error::Structure("aroma is not connected".into()));
        }
        Ok(aroma)
    }

    /// The tadpole on one label: a single vertex with a loop.
    pub fn tadpole(label: u32) -> Self {
        let mut succ = BTreeMap::new();
        succ.insert(label, label);
        Aroma { succ }
    }

    /// Builds the directed cycle through `labels` in the given order.
    pub fn cycle_of(labels: &[u32]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Domain("empty cycle".into()));
        }
        let mut succ = BTreeMap::new();
        for i in 0..labels.len() {
            succ.insert(labels[i], labels[(i + 1) % labels.len()]);
        }
        if succ.len() != labels.len() {
            return Err(Error::Domain("repeated label in cycle".into()));
        }
        Ok(Aroma { succ })
    }

    fn is_connected(&self) -> bool {
        // undirected reachability from an arbitrary vertex
        let start = *self.succ.keys().next().unwrap();
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            stack.push(self.succ[&v]);
            for (&u, &s) in &self.succ {
                if s == v && !seen.contains(&u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == self.succ.len()
    }

    pub fn successor(&self, v: u32) -> u32 {
        self.succ[&v]
    }

    pub fn successor_map(&self) -> &BTreeMap<u32, u32> {
        &self.succ
    }

    pub fn vertices(&self) -> BTreeSet<u32> {
        self.succ.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The unique directed cycle, starting at its smallest vertex.
    pub fn cycle(&self) -> Vec<u32> {
        // iterate successors until a vertex repeats; the repeat is on the cycle
        let mut seen = BTreeSet::new();
        let mut cur = *self.succ.keys().next().unwrap();
        while seen.insert(cur) {
            cur = self.succ[&cur];
        }
        let entry = cur;
        let mut cycle = vec![entry];
        let mut v = self.succ[&entry];
        while v != entry {
            cycle.push(v);
            v = self.succ[&v];
        }
        let min_pos = cycle
            .iter()
            .enumerate()
            .min_by_key(|&(_, &l)| l)
            .map(|(i, _)| i)
            .unwrap();
        cycle.rotate_left(min_pos);
        cycle
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle().len()
    }

    /// The rooted tree of vertices whose path to the cycle first meets it at
    /// `cycle_vertex` (the cycle vertex itself is the root).
    pub fn hanging_tree(&self, cycle_vertex: u32) -> RootedTree {
        let cycle: BTreeSet<u32> = self.cycle().into_iter().collect();
        assert!(cycle.contains(&cycle_vertex), "not a cycle vertex");
        let mut parent = BTreeMap::new();
        for &v in self.succ.keys() {
            if cycle.contains(&v) {
                continue;
            }
            // walk towards the cycle
            let mut cur = v;
            while !cycle.contains(&cur) {
                cur = self.succ[&cur];
            }
            if cur == cycle_vertex {
                // all vertices on the walk hang at this cycle vertex
                let mut w = v;
                while w != cycle_vertex {
                    parent.insert(w, self.succ[&w]);
                    w = self.succ[&w];
                }
            }
        }
        RootedTree::new(cycle_vertex, parent).expect("hanging tree is well formed")
    }

    pub fn relabel(&self, map: &BTreeMap<u32, u32>) -> Result<Self> {
        let get = |v: u32| -> Result<u32> {
            map.get(&v)
                .copied()
                .ok_or_else(|| Error::Domain(format!("relabelling undefined on vertex {v}")))
        };
        let mut succ = BTreeMap::new();
        for (&v, &s) in &self.succ {
            succ.insert(get(v)?, get(s)?);
        }
        if succ.len() != self.succ.len() {
            return Err(Error::Domain("relabelling is not injective".into()));
        }
        Aroma::new(succ)
    }

    /// Attaches `sub`'s root as hanging under vertex `at`.
    pub fn graft(&self, at: u32, sub: &RootedTree) -> Result<Self> {
        if !self.succ.contains_key(&at) {
            return Err(Error::Domain(format!("graft point {at} is not a vertex")));
        }
        let ours = self.vertices();
        if sub.vertices().iter().any(|v| ours.contains(v)) {
            return Err(Error::Domain("label clash in graft".into()));
        }
        let mut succ = self.succ.clone();
        succ.extend(sub.parent_map().iter().map(|(&v, &p)| (v, p)));
        succ.insert(sub.root(), at);
        Aroma::new(succ)
    }
}

/// Closes a tree into a cycle by adding the arc root → `target`.
pub fn close_into_cycle(tree: &RootedTree, target: u32) -> Result<Aroma> {
    if !tree.vertices().contains(&target) {
        return Err(Error::Domain(format!("closing target {target} not in tree")));
    }
    let mut succ: BTreeMap<u32, u32> = tree.parent_map().clone();
    succ.insert(tree.root(), target);
    Aroma::new(succ)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tadpole_and_cycles() {
        let t = Aroma::tadpole(1);
        assert_eq!(t.cycle(), vec![1]);
        let c = Aroma::cycle_of(&[2, 5, 3]).unwrap();
        assert_eq!(c.cycle(), vec![2, 5, 3]);
        assert_eq!(c.cycle_len(), 3);
    }

    #[test]
    fn rejects_disconnected() {
        let mut succ = BTreeMap::new();
        succ.insert(1, 1);
        succ.insert(2, 2);
        assert!(Aroma::new(succ).is_err());
    }

    #[test]
    fn hanging_trees() {
        // cycle 1 -> 2 -> 1 with 3 -> 4 -> 1
        let mut succ = BTreeMap::new();
        succ.insert(1, 2);
        succ.insert(2, 1);
        succ.insert(4, 1);
        succ.insert(3, 4);
        let a = Aroma::new(succ).unwrap();
        assert_eq!(a.cycle(), vec![1, 2]);
        assert_eq!(a.hanging_tree(1).len(), 3);
        assert_eq!(a.hanging_tree(2).len(), 1);
    }

    #[test]
    fn closing_a_tree() {
        let mut parent = BTreeMap::new();
        parent.insert(2, 1);
        let t = RootedTree::new(1, parent).unwrap();
        assert_eq!(close_into_cycle(&t, 1).unwrap().cycle_len(), 1);
        assert_eq!(close_into_cycle(&t, 2).unwrap().cycle_len(), 2);
    }
}
