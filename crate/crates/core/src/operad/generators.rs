//! The generating operations: grafting (pre-Lie product), the Lie bracket,
//! the right-module action on aromas and marked trees, and the divergence
//! maps sending a tree to sums of its cycle closures.

use crate::error::Error;
use crate::linalg::{BasisIndex, LinComb, SparseRationalMatrix};
use crate::rational::{qi, Q};
use crate::species::{
    close_into_cycle, enumerate_rooted_trees, enumerate_unlabelled, tree_code, Aroma, MarkedTree,
    RootedTree, UnlabelledKind,
};
use crate::Result;

fn check_disjoint(a: impl IntoIterator<Item = u32>, b: &std::collections::BTreeSet<u32>) -> Result<()> {
    for v in a {
        if b.contains(&v) {
            return Err(Error::Domain(format!("label {v} used by both arguments")));
        }
    }
    Ok(())
}

/// Pre-Lie product: the sum over vertices `v` of `a` of grafting the root of
/// `b` as a new child of `v`.
pub fn prelie(a: &RootedTree, b: &RootedTree) -> Result<LinComb<RootedTree>> {
    check_disjoint(a.vertices(), &b.vertices())?;
    let mut out = LinComb::zero();
    for v in a.vertices() {
        out.add_term(a.graft(v, b)?, qi(1));
    }
    Ok(out)
}

/// `[a, b] = a ◁ b - b ◁ a`.
pub fn lie_bracket(a: &RootedTree, b: &RootedTree) -> Result<LinComb<RootedTree>> {
    let mut out = prelie(a, b)?;
    let mut rev = prelie(b, a)?;
    rev.scale(&-Q::from_integer(1.into()));
    out.add(&rev);
    Ok(out)
}

/// Right-module action of a tree on an aroma: graft the tree's root under
/// each vertex of the aroma in turn.
pub fn module_action(m: &Aroma, a: &RootedTree) -> Result<LinComb<Aroma>> {
    check_disjoint(m.vertices(), &a.vertices())?;
    let mut out = LinComb::zero();
    for v in m.vertices() {
        out.add_term(m.graft(v, a)?, qi(1));
    }
    Ok(out)
}

/// Right-module action of a tree on a marked tree.
pub fn module_action_marked(m: &MarkedTree, a: &RootedTree) -> Result<LinComb<MarkedTree>> {
    check_disjoint(m.tree().vertices(), &a.vertices())?;
    let mut out = LinComb::zero();
    for v in m.tree().vertices() {
        out.add_term(MarkedTree::new(m.tree().graft(v, a)?), qi(1));
    }
    Ok(out)
}

/// Divergence: the sum over vertices `v` of closing the tree into a cycle by
/// the new arc root → v.
pub fn div(t: &RootedTree) -> LinComb<Aroma> {
    let mut out = LinComb::zero();
    for v in t.vertices() {
        out.add_term(
            close_into_cycle(t, v).expect("closing at a vertex always succeeds"),
            qi(1),
        );
    }
    out
}

/// The root-loop closure of a tree.
pub fn tau(t: &RootedTree) -> Aroma {
    close_into_cycle(t, t.root()).expect("closing at the root always succeeds")
}

/// Reduced divergence `Div - τ`, supported on cycle length at least two.
pub fn div0(t: &RootedTree) -> LinComb<Aroma> {
    let mut out = div(t);
    out.add_term(tau(t), qi(-1));
    out
}

/// The reduced divergence on isomorphism classes: the class of a tree is
/// sent to the sum over its vertices of the class of the corresponding cycle
/// closure. Columns are indexed by unlabelled trees on `n` vertices, rows by
/// unlabelled aromas with cycle length at least two.
pub fn unlabelled_div0_matrix(n: usize) -> Result<SparseRationalMatrix> {
    if n < 2 {
        return Err(Error::Domain(
            "unlabelled reduced divergence needs n >= 2".into(),
        ));
    }
    let labels: Vec<u32> = (1..=n as u32).collect();
    let mut reps = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for t in enumerate_rooted_trees(&labels)? {
        if seen.insert(tree_code(&t)) {
            reps.push(t);
        }
    }
    let codomain = BasisIndex::new(enumerate_unlabelled(UnlabelledKind::AromaPlus, n)?);
    SparseRationalMatrix::of_map(&reps, &codomain, |t| {
        div0(t).map_signed(|a| (crate::species::aroma_code(a), 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::parse_tree;

    #[test]
    fn prelie_on_single_vertices() {
        let p = prelie(&RootedTree::singleton(1), &RootedTree::singleton(2)).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&parse_tree("1(2)").unwrap()), qi(1));
        assert!(prelie(&RootedTree::singleton(1), &RootedTree::singleton(1)).is_err());
    }

    #[test]
    fn prelie_two_graft_sites() {
        let t = parse_tree("1(2)").unwrap();
        let p = prelie(&t, &RootedTree::singleton(3)).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&parse_tree("1(2,3)").unwrap()), qi(1));
        assert_eq!(p.coeff(&parse_tree("1(2(3))").unwrap()), qi(1));
    }

    #[test]
    fn bracket_of_generators() {
        let b = lie_bracket(&RootedTree::singleton(1), &RootedTree::singleton(2)).unwrap();
        assert_eq!(b.coeff(&parse_tree("1(2)").unwrap()), qi(1));
        assert_eq!(b.coeff(&parse_tree("2(1)").unwrap()), qi(-1));
    }

    #[test]
    fn divergences_of_small_trees() {
        let one = RootedTree::singleton(1);
        assert_eq!(div(&one).len(), 1);
        assert!(div0(&one).is_zero());
        // both 2-vertex trees have the same reduced divergence, so the
        // bracket of two single vertices lies in the kernel
        let a = div0(&parse_tree("1(2)").unwrap());
        let b = div0(&parse_tree("2(1)").unwrap());
        assert_eq!(a, b);
        assert_eq!(a.len(), 1);
    }

    #[test]
    fn unlabelled_reduced_divergence_is_injective_small() {
        for n in 2..=4usize {
            let m = unlabelled_div0_matrix(n).unwrap();
            assert_eq!(m.rank(), m.ncols());
            assert!(m.kernel_basis().is_empty());
        }
        assert!(unlabelled_div0_matrix(1).is_err());
    }
}
