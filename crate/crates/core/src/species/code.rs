//! Canonical isomorphism-invariant codes for unlabelled trees, aromas and
//! forests, and symmetry group orders computed from the codes.
//!
//! A tree code is `(` followed by the children's codes in sorted order and a
//! closing `)`. An aroma code lists the codes of the trees hanging off the
//! cycle, in the lexicographically minimal rotation. Two objects are
//! isomorphic exactly when their codes are equal.

use crate::error::Error;
use crate::Result;

use super::aroma::Aroma;
use super::forest::AromaticForest;
use super::tree::RootedTree;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnlabelledKey(String);

impl UnlabelledKey {
    pub fn new(code: impl Into<String>) -> Self {
        UnlabelledKey(code.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for UnlabelledKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn tree_code_at(t: &RootedTree, v: u32) -> String {
    let mut child_codes: Vec<String> = t
        .children(v)
        .into_iter()
        .map(|c| tree_code_at(t, c))
        .collect();
    child_codes.sort();
    format!("({})", child_codes.concat())
}

pub fn tree_code(t: &RootedTree) -> UnlabelledKey {
    UnlabelledKey(tree_code_at(t, t.root()))
}

/// Lexicographically minimal rotation of `items`.
fn minimal_rotation<T: Ord + Clone>(items: &[T]) -> Vec<T> {
    let n = items.len();
    let mut best: Option<Vec<T>> = None;
    for start in 0..n {
        let rot: Vec<T> = (0..n).map(|i| items[(start + i) % n].clone()).collect();
        if best.as_ref().map_or(true, |b| rot < *b) {
            best = Some(rot);
        }
    }
    best.unwrap_or_default()
}

pub fn aroma_code(a: &Aroma) -> UnlabelledKey {
    let cycle = a.cycle();
    let hanging: Vec<String> = cycle
        .iter()
        .map(|&c| {
            let t = a.hanging_tree(c);
            tree_code_at(&t, c)
        })
        .collect();
    let rot = minimal_rotation(&hanging);
    UnlabelledKey(format!("cycle[{}]", rot.join(";")))
}

/// Code of an aromatic forest together with the sign of the permutation that
/// sorts the tree components into canonical order. The forest constructor
/// already performed that sort, so the sign is reported there; this function
/// re-serializes the already-canonical order.
pub fn forest_code(f: &AromaticForest) -> UnlabelledKey {
    let trees: Vec<String> = f.trees().iter().map(|t| tree_code(t).0).collect();
    let mut aromas: Vec<String> = f.aromas().iter().map(|a| aroma_code(a).0).collect();
    aromas.sort();
    UnlabelledKey(format!("forest{{{}|{}}}", trees.join(";"), aromas.join(";")))
}

/// Builds a forest from raw components and returns its code and the sign of
/// the canonicalizing permutation of the tree components.
pub fn canonical_code_forest(
    trees: Vec<RootedTree>,
    aromas: Vec<Aroma>,
) -> Result<(UnlabelledKey, i32)> {
    let (f, sign) = AromaticForest::new(trees, aromas)?;
    Ok((forest_code(&f), sign))
}

// ---- symmetry orders -------------------------------------------------------

/// Parsed shape of an unlabelled tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Shape {
    pub children: Vec<Shape>,
}

impl Shape {
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Shape::size).sum::<usize>()
    }
}

fn parse_shape(s: &str, pos: &mut usize) -> Result<Shape> {
    let bytes = s.as_bytes();
    if bytes.get(*pos) != Some(&b'(') {
        return Err(Error::Structure(format!("bad tree code at byte {} of {s:?}", *pos)));
    }
    *pos += 1;
    let mut children = Vec::new();
    while bytes.get(*pos) == Some(&b'(') {
        children.push(parse_shape(s, pos)?);
    }
    if bytes.get(*pos) != Some(&b')') {
        return Err(Error::Structure(format!("unbalanced tree code {s:?}")));
    }
    *pos += 1;
    Ok(Shape { children })
}

pub(crate) fn parse_tree_shape(code: &str) -> Result<Shape> {
    let mut pos = 0;
    let shape = parse_shape(code, &mut pos)?;
    if pos != code.len() {
        return Err(Error::Structure(format!("trailing data in tree code {code:?}")));
    }
    Ok(shape)
}

fn shape_aut(shape: &Shape) -> u64 {
    // product over groups of equal child shapes of (multiplicity)! times the
    // automorphism counts of the children themselves
    let mut sorted = shape.children.clone();
    sorted.sort();
    let mut aut: u64 = 1;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let mult = (j - i) as u64;
        for k in 2..=mult {
            aut *= k;
        }
        for child in &sorted[i..j] {
            aut *= shape_aut(child);
        }
        i = j;
    }
    aut
}

/// Order of the automorphism group of the unlabelled tree or aroma encoded
/// by `key`.
pub fn symmetry_order(key: &UnlabelledKey) -> Result<u64> {
    let code = key.as_str();
    if let Some(inner) = code.strip_prefix("cycle[").and_then(|c| c.strip_suffix(']')) {
        let parts: Vec<&str> = if inner.is_empty() {
            return Err(Error::Structure("empty aroma code".into()));
        } else {
            inner.split(';').collect()
        };
        let shapes: Vec<Shape> = parts
            .iter()
            .map(|p| parse_tree_shape(p))
            .collect::<Result<_>>()?;
        // rotational symmetry: number of rotations fixing the sequence
        let n = shapes.len();
        let rotations = (1..=n)
            .filter(|&r| (0..n).all(|i| shapes[i] == shapes[(i + r) % n]))
            .count() as u64;
        let tree_auts: u64 = shapes.iter().map(shape_aut).product();
        Ok(rotations * tree_auts)
    } else {
        Ok(shape_aut(&parse_tree_shape(code)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn single_vertex_tree_code() {
        assert_eq!(tree_code(&RootedTree::singleton(5)).as_str(), "()");
    }

    #[test]
    fn isomorphic_labelled_trees_share_codes() {
        let a = RootedTree::new(1, BTreeMap::from([(2, 1)])).unwrap();
        let b = RootedTree::new(2, BTreeMap::from([(1, 2)])).unwrap();
        assert_eq!(tree_code(&a), tree_code(&b));
    }

    #[test]
    fn corolla_and_path_codes_differ() {
        let corolla = RootedTree::new(1, BTreeMap::from([(2, 1), (3, 1)])).unwrap();
        let path = RootedTree::new(1, BTreeMap::from([(2, 1), (3, 2)])).unwrap();
        assert_ne!(tree_code(&corolla), tree_code(&path));
        assert_eq!(symmetry_order(&tree_code(&corolla)).unwrap(), 2);
        assert_eq!(symmetry_order(&tree_code(&path)).unwrap(), 1);
    }

    #[test]
    fn aroma_code_minimal_rotation() {
        // 3-cycle with one hanging vertex; both labellings around the cycle
        let mut s1 = BTreeMap::new();
        s1.extend([(1, 2), (2, 3), (3, 1), (4, 1)]);
        let mut s2 = BTreeMap::new();
        s2.extend([(1, 2), (2, 3), (3, 1), (4, 2)]);
        let a1 = Aroma::new(s1).unwrap();
        let a2 = Aroma::new(s2).unwrap();
        assert_eq!(aroma_code(&a1), aroma_code(&a2));
    }

    #[test]
    fn cycle_symmetry_orders() {
        let two = Aroma::cycle_of(&[1, 2]).unwrap();
        assert_eq!(symmetry_order(&aroma_code(&two)).unwrap(), 2);
        let tad = Aroma::tadpole(1);
        assert_eq!(symmetry_order(&aroma_code(&tad)).unwrap(), 1);
    }

    #[test]
    fn forest_transposition_signs() {
        let t1 = RootedTree::new(1, BTreeMap::from([(2, 1)])).unwrap();
        let t2 = RootedTree::new(3, BTreeMap::from([(4, 3)])).unwrap();
        let (c1, s1) = canonical_code_forest(vec![t1.clone(), t2.clone()], vec![]).unwrap();
        let (c2, s2) = canonical_code_forest(vec![t2, t1], vec![]).unwrap();
        assert_eq!(c1, c2);
        assert_eq!(s1, -s2);
    }
}
