//! Lie elements among multilinear tree combinations: the left-normed
//! bracket basis and membership tests through the reduced divergence.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::linalg::LinComb;
use crate::rational::qi;
use crate::species::RootedTree;
use crate::Result;

use super::generators::{div0, prelie};

fn bracket_lin(
    a: &LinComb<RootedTree>,
    b: &LinComb<RootedTree>,
) -> Result<LinComb<RootedTree>> {
    let mut out = LinComb::zero();
    for (t, c) in a.iter() {
        for (u, d) in b.iter() {
            let mut p = prelie(t, u)?;
            p.scale(&(c * d));
            out.add(&p);
            let mut q = prelie(u, t)?;
            q.scale(&-(c * d));
            out.add(&q);
        }
    }
    Ok(out)
}

/// Basis of the multilinear Lie elements on labels `1..=n`: the left-normed
/// brackets `[[…[x₁, x_{σ(2)}], …], x_{σ(n)}]` over the permutations σ of
/// `{2,…,n}`. There are (n-1)! of them.
pub fn lie_basis(n: usize) -> Result<Vec<LinComb<RootedTree>>> {
    if n == 0 {
        return Err(Error::Domain("need at least one label".into()));
    }
    let mut rest: Vec<u32> = (2..=n as u32).collect();
    let mut out = Vec::new();
    permute(&mut rest, 0, &mut |perm| {
        let mut acc = LinComb::term(RootedTree::singleton(1), qi(1));
        for &l in perm {
            acc = bracket_lin(&acc, &LinComb::term(RootedTree::singleton(l), qi(1)))?;
        }
        out.push(acc);
        Ok(())
    })?;
    Ok(out)
}

fn permute(
    items: &mut Vec<u32>,
    k: usize,
    f: &mut impl FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    if k == items.len() {
        return f(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f)?;
        items.swap(k, i);
    }
    Ok(())
}

/// Which kernel criterion to use for the Lie-element test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieCriterion {
    /// Membership in the kernel of the reduced divergence.
    Div0,
    /// Membership in the kernel of the reduced divergence followed by
    /// forgetting the cyclic order of the hanging trees.
    SymDiv0,
}

impl std::str::FromStr for LieCriterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "div0" => Ok(LieCriterion::Div0),
            "sym-div0" | "symdiv0" => Ok(LieCriterion::SymDiv0),
            other => Err(Error::Domain(format!("unknown criterion {other:?}"))),
        }
    }
}

/// Tests whether a multilinear combination of trees is a Lie element. The
/// input must be homogeneous: every term a tree on the same label set.
pub fn is_lie_element(x: &LinComb<RootedTree>, criterion: LieCriterion) -> Result<bool> {
    let mut label_sets: BTreeSet<BTreeSet<u32>> = BTreeSet::new();
    for (t, _) in x.iter() {
        label_sets.insert(t.vertices());
    }
    if label_sets.len() > 1 {
        return Err(Error::Unsupported(
            "input mixes terms on different label sets".into(),
        ));
    }
    let image = x.apply(div0);
    match criterion {
        LieCriterion::Div0 => Ok(image.is_zero()),
        LieCriterion::SymDiv0 => {
            // forget the cyclic order: an aroma maps to the multiset of the
            // labelled trees hanging off its cycle
            let projected = image.map_signed(|a| {
                let mut hanging: Vec<RootedTree> =
                    a.cycle().into_iter().map(|c| a.hanging_tree(c)).collect();
                hanging.sort();
                (hanging, 1)
            });
            Ok(projected.is_zero())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::parse_tree;

    #[test]
    fn basis_sizes_are_factorials() {
        assert_eq!(lie_basis(1).unwrap().len(), 1);
        assert_eq!(lie_basis(2).unwrap().len(), 1);
        assert_eq!(lie_basis(3).unwrap().len(), 2);
        assert_eq!(lie_basis(4).unwrap().len(), 6);
    }

    #[test]
    fn brackets_are_lie_elements_under_both_criteria() {
        for n in 1..=4usize {
            for v in lie_basis(n).unwrap() {
                assert!(is_lie_element(&v, LieCriterion::Div0).unwrap());
                assert!(is_lie_element(&v, LieCriterion::SymDiv0).unwrap());
            }
        }
    }

    #[test]
    fn symmetrized_product_is_not_lie() {
        let mut x = LinComb::term(parse_tree("1(2)").unwrap(), qi(1));
        x.add_term(parse_tree("2(1)").unwrap(), qi(1));
        assert!(!is_lie_element(&x, LieCriterion::Div0).unwrap());
        assert!(!is_lie_element(&x, LieCriterion::SymDiv0).unwrap());
    }

    #[test]
    fn mixed_label_sets_are_rejected() {
        let mut x = LinComb::term(parse_tree("1(2)").unwrap(), qi(1));
        x.add_term(parse_tree("3(4)").unwrap(), qi(1));
        assert!(matches!(
            is_lie_element(&x, LieCriterion::Div0),
            Err(Error::Unsupported(_))
        ));
    }
}
