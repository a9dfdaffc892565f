//! Operadic composition by vertex substitution. Substituting `inner` at a
//! vertex of `outer` deletes that vertex, attaches its outgoing edge to the
//! root of `inner`, and sums over all ways of reattaching its incoming edges
//! to vertices of `inner`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::linalg::LinComb;
use crate::rational::qi;
use crate::species::{Aroma, Element, MarkedTree, RootedTree};
use crate::Result;

/// Iterates over all maps from `sources` into `targets` (an odometer over
/// assignment vectors), calling `f` with each assignment.
fn for_each_assignment(
    sources: &[u32],
    targets: &[u32],
    mut f: impl FnMut(&BTreeMap<u32, u32>) -> Result<()>,
) -> Result<()> {
    if sources.is_empty() {
        return f(&BTreeMap::new());
    }
    let mut digits = vec![0usize; sources.len()];
    loop {
        let assignment: BTreeMap<u32, u32> = sources
            .iter()
            .zip(&digits)
            .map(|(&s, &d)| (s, targets[d]))
            .collect();
        f(&assignment)?;
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(());
            }
            digits[i] += 1;
            if digits[i] < targets.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn check_labels(outer: &BTreeSet<u32>, star: u32, inner: &BTreeSet<u32>) -> Result<()> {
    if !outer.contains(&star) {
        return Err(Error::Domain(format!("vertex {star} absent from outer")));
    }
    for v in inner {
        if *v != star && outer.contains(v) {
            return Err(Error::Domain(format!("label {v} used by both arguments")));
        }
    }
    Ok(())
}

/// Substitutes a tree into a vertex of a tree, returning the sum of the
/// resulting trees.
fn tree_into_tree(outer: &RootedTree, star: u32, inner: &RootedTree) -> Result<Vec<RootedTree>> {
    check_labels(&outer.vertices(), star, &inner.vertices())?;
    let incoming = outer.children(star);
    let targets: Vec<u32> = inner.vertices().into_iter().collect();
    let mut results = Vec::new();
    for_each_assignment(&incoming, &targets, |assignment| {
        let mut parent = BTreeMap::new();
        for (&v, &p) in outer.parent_map() {
            if v == star || assignment.contains_key(&v) {
                continue;
            }
            parent.insert(v, p);
        }
        parent.extend(inner.parent_map().iter().map(|(&v, &p)| (v, p)));
        for (&c, &g) in assignment {
            parent.insert(c, g);
        }
        let root = if star == outer.root() {
            inner.root()
        } else {
            parent.insert(inner.root(), outer.parent_of(star).expect("non-root has parent"));
            outer.root()
        };
        results.push(RootedTree::new(root, parent)?);
        Ok(())
    })?;
    Ok(results)
}

/// Substitutes a tree into a vertex of an aroma.
fn tree_into_aroma(outer: &Aroma, star: u32, inner: &RootedTree) -> Result<Vec<Aroma>> {
    check_labels(&outer.vertices(), star, &inner.vertices())?;
    let succ_star = outer.successor(star);
    let mut incoming: Vec<u32> = outer
        .vertices()
        .into_iter()
        .filter(|&u| u != star && outer.successor(u) == star)
        .collect();
    let targets: Vec<u32> = inner.vertices().into_iter().collect();
    // a loop at star is both its incoming and outgoing edge: it becomes an
    // edge from the inner root to an arbitrary inner vertex
    if succ_star == star {
        incoming.push(star);
    }
    let mut results = Vec::new();
    for_each_assignment(&incoming, &targets, |assignment| {
        let mut succ = BTreeMap::new();
        for (&v, &s) in outer.successor_map() {
            if v == star || assignment.contains_key(&v) {
                continue;
            }
            succ.insert(v, s);
        }
        succ.extend(inner.parent_map().iter().map(|(&v, &p)| (v, p)));
        for (&u, &g) in assignment {
            let source = if u == star { inner.root() } else { u };
            succ.insert(source, g);
        }
        if succ_star != star {
            succ.insert(inner.root(), succ_star);
        }
        results.push(Aroma::new(succ)?);
        Ok(())
    })?;
    Ok(results)
}

/// Substitutes an aroma into the marked slot of a marked tree: the root is
/// deleted and its subtrees are distributed over the aroma's vertices.
fn aroma_into_marked(outer: &MarkedTree, inner: &Aroma) -> Result<Vec<Aroma>> {
    let star = outer.marked_label();
    check_labels(&outer.tree().vertices(), star, &inner.vertices())?;
    let incoming = outer.tree().children(star);
    let targets: Vec<u32> = inner.vertices().into_iter().collect();
    let mut results = Vec::new();
    for_each_assignment(&incoming, &targets, |assignment| {
        let mut succ: BTreeMap<u32, u32> = inner.successor_map().clone();
        for (&v, &p) in outer.tree().parent_map() {
            if assignment.contains_key(&v) {
                continue;
            }
            succ.insert(v, p);
        }
        for (&c, &g) in assignment {
            succ.insert(c, g);
        }
        results.push(Aroma::new(succ)?);
        Ok(())
    })?;
    Ok(results)
}

/// Operadic composition `outer ∘_star inner`. The slot colour must match the
/// output colour of `inner`: ordinary vertices accept trees; the marked slot
/// of a marked tree accepts a marked tree or an aroma.
pub fn compose_at(outer: &Element, star: u32, inner: &Element) -> Result<LinComb<Element>> {
    let terms: Vec<Element> = match (outer, inner) {
        (Element::Tree(o), Element::Tree(i)) => tree_into_tree(o, star, i)?
            .into_iter()
            .map(Element::Tree)
            .collect(),
        (Element::Aroma(o), Element::Tree(i)) => tree_into_aroma(o, star, i)?
            .into_iter()
            .map(Element::Aroma)
            .collect(),
        (Element::Marked(o), Element::Tree(i)) => {
            if star == o.marked_label() {
                return Err(Error::Colour(
                    "the marked slot does not accept a tree-valued argument".into(),
                ));
            }
            tree_into_tree(o.tree(), star, i)?
                .into_iter()
                .map(|t| Element::Marked(MarkedTree::new(t)))
                .collect()
        }
        (Element::Marked(o), Element::Marked(i)) => {
            if star != o.marked_label() {
                return Err(Error::Colour(
                    "a marked argument only fits the marked slot".into(),
                ));
            }
            tree_into_tree(o.tree(), star, i.tree())?
                .into_iter()
                .map(|t| Element::Marked(MarkedTree::new(t)))
                .collect()
        }
        (Element::Marked(o), Element::Aroma(i)) => {
            if star != o.marked_label() {
                return Err(Error::Colour(
                    "an aroma argument only fits the marked slot".into(),
                ));
            }
            aroma_into_marked(o, i)?.into_iter().map(Element::Aroma).collect()
        }
        (Element::Tree(_), _) | (Element::Aroma(_), _) => {
            return Err(Error::Colour(
                "ordinary slots only accept tree-valued arguments".into(),
            ))
        }
    };
    let mut out = LinComb::zero();
    for e in terms {
        out.add_term(e, qi(1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::{parse_element, parse_tree};

    fn tree(s: &str) -> Element {
        Element::Tree(parse_tree(s).unwrap())
    }

    #[test]
    fn four_term_expansion() {
        // outer: root 9 with children 1 and 3; inner: edge a -> c as 8(7)
        let outer = tree("9(1,3)");
        let inner = tree("8(7)");
        let r = compose_at(&outer, 9, &inner).unwrap();
        assert_eq!(r.len(), 4);
        for s in ["8(1,3,7)", "8(1,7(3))", "8(3,7(1))", "8(7(1,3))"] {
            assert_eq!(r.coeff(&tree(s)), qi(1), "missing term {s}");
        }
    }

    #[test]
    fn leaf_substitution_single_term() {
        let r = compose_at(&tree("1(2)"), 2, &tree("5")).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.coeff(&tree("1(5)")), qi(1));
    }

    #[test]
    fn marked_slot_accepts_aroma() {
        // marked tree with one child, composed with a 2-cycle: two terms
        let outer = parse_element("marked{9(1)}").unwrap();
        let inner = parse_element("cycle[7;8]").unwrap();
        let r = compose_at(&outer, 9, &inner).unwrap();
        assert_eq!(r.len(), 2);
        let t1 = parse_element("cycle[7(1);8]").unwrap();
        let t2 = parse_element("cycle[7;8(1)]").unwrap();
        assert_eq!(r.coeff(&t1), qi(1));
        assert_eq!(r.coeff(&t2), qi(1));
    }

    #[test]
    fn tadpole_substitution_is_divergence() {
        // substituting a tree into the tadpole's vertex closes it every way
        let outer = parse_element("cycle[9]").unwrap();
        let inner = parse_tree("1(2)").unwrap();
        let r = compose_at(&outer, 9, &Element::Tree(inner.clone())).unwrap();
        let d = crate::operad::div(&inner).map_signed(|a| (Element::Aroma(a.clone()), 1));
        assert_eq!(r, d);
    }

    #[test]
    fn colour_mismatches_are_rejected() {
        let outer = tree("1(2)");
        let aroma = parse_element("cycle[7]").unwrap();
        assert!(matches!(
            compose_at(&outer, 2, &aroma),
            Err(Error::Colour(_))
        ));
        let marked = parse_element("marked{9(1)}").unwrap();
        assert!(matches!(
            compose_at(&marked, 9, &tree("5")),
            Err(Error::Colour(_))
        ));
        assert!(compose_at(&outer, 7, &tree("5")).is_err());
        assert!(compose_at(&outer, 2, &tree("1")).is_err());
    }

    #[test]
    fn composition_matches_prelie_on_generator() {
        // grafting generator composed at its leaf reproduces the pre-Lie sum
        let gen = tree("1(9)");
        let inner = parse_tree("5(6)").unwrap();
        let r = compose_at(&gen, 9, &Element::Tree(inner.clone())).unwrap();
        // 1(9) ∘_9 T grafts T's root under 1, i.e. 1 ◁ T: a single term
        assert_eq!(r.len(), 1);
        assert_eq!(r.coeff(&tree("1(5(6))")), qi(1));
        // 1(9) ∘_1 T grafts vertex 9 under each vertex of T, i.e. T ◁ 9
        let r2 = compose_at(&gen, 1, &Element::Tree(inner.clone())).unwrap();
        let p = crate::operad::prelie(&inner, &parse_tree("9").unwrap()).unwrap();
        assert_eq!(r2, p.map_signed(|t| (Element::Tree(t.clone()), 1)));
    }
}
