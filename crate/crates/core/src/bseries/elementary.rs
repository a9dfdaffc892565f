//! Elementary differentials of polynomial vector fields indexed by
//! unlabelled rooted trees, aromas, and aromatic trees.
//!
//! The graph rule: every vertex contributes a component of the field, every
//! edge u → v applies the partial derivative in the index of u to the factor
//! of v. For a tree all indices except the root's are contracted, giving a
//! vector field; for an aroma all indices are contracted, giving a scalar.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::species::{
    aroma_code, close_into_cycle, parse_tree_shape, RootedTree, Shape, UnlabelledKey,
};
use crate::Result;

use super::poly::{Poly, PolyVectorField, ScalarPoly};

fn for_each_index_vector(d: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut idx = vec![0usize; k];
    loop {
        f(&idx);
        let mut pos = k;
        while pos > 0 {
            idx[pos - 1] += 1;
            if idx[pos - 1] < d {
                break;
            }
            idx[pos - 1] = 0;
            pos -= 1;
        }
        if pos == 0 {
            return;
        }
    }
}

fn differential_of_shape(shape: &Shape, f: &PolyVectorField) -> Result<PolyVectorField> {
    let d = f.dimension();
    let children: Vec<PolyVectorField> = shape
        .children
        .iter()
        .map(|c| differential_of_shape(c, f))
        .collect::<Result<_>>()?;
    let k = children.len();
    let mut components = Vec::new();
    for c in 0..d {
        let mut acc = Poly::zero(d);
        for_each_index_vector(d, k, |a| {
            let mut term = f.component(c).clone();
            for &ai in a {
                term = term.partial(ai);
            }
            if term.is_zero() {
                return;
            }
            for (i, &ai) in a.iter().enumerate() {
                term = term.mul(children[i].component(ai));
            }
            acc = acc.add(&term);
        });
        components.push(acc);
    }
    PolyVectorField::new(d, components)
}

/// The elementary differential of the tree encoded by `key`.
pub fn elementary_differential_tree(
    key: &UnlabelledKey,
    f: &PolyVectorField,
) -> Result<PolyVectorField> {
    if key.as_str().starts_with("cycle[") {
        return Err(Error::Domain(format!("{key} is not a tree code")));
    }
    differential_of_shape(&parse_tree_shape(key.as_str())?, f)
}

/// Transfer matrix of one cycle vertex: entry (p, a) is the factor of the
/// vertex carrying index `a` with hanging subtrees attached, differentiated
/// once more in the index `p` of the cycle predecessor.
fn cycle_vertex_matrix(shape: &Shape, f: &PolyVectorField) -> Result<Vec<Vec<Poly>>> {
    let d = f.dimension();
    let children: Vec<PolyVectorField> = shape
        .children
        .iter()
        .map(|c| differential_of_shape(c, f))
        .collect::<Result<_>>()?;
    let k = children.len();
    let mut m = vec![vec![Poly::zero(d); d]; d];
    for a in 0..d {
        for p in 0..d {
            let base = f.component(a).partial(p);
            let mut acc = Poly::zero(d);
            for_each_index_vector(d, k, |b| {
                let mut term = base.clone();
                for &bi in b {
                    term = term.partial(bi);
                }
                if term.is_zero() {
                    return;
                }
                for (i, &bi) in b.iter().enumerate() {
                    term = term.mul(children[i].component(bi));
                }
                acc = acc.add(&term);
            });
            m[p][a] = acc;
        }
    }
    Ok(m)
}

fn matrix_mul(a: &[Vec<Poly>], b: &[Vec<Poly>], d: usize) -> Vec<Vec<Poly>> {
    let mut out = vec![vec![Poly::zero(d); d]; d];
    for p in 0..d {
        for q in 0..d {
            let mut acc = Poly::zero(d);
            for r in 0..d {
                if a[p][r].is_zero() || b[r][q].is_zero() {
                    continue;
                }
                acc = acc.add(&a[p][r].mul(&b[r][q]));
            }
            out[p][q] = acc;
        }
    }
    out
}

/// The scalar elementary differential of the aroma encoded by `key`.
pub fn elementary_differential_aroma(
    key: &UnlabelledKey,
    f: &PolyVectorField,
) -> Result<ScalarPoly> {
    let inner = key
        .as_str()
        .strip_prefix("cycle[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Domain(format!("{key} is not an aroma code")))?;
    if inner.is_empty() {
        return Err(Error::Structure("empty aroma code".into()));
    }
    let d = f.dimension();
    let mut product: Option<Vec<Vec<Poly>>> = None;
    for part in inner.split(';') {
        let shape = parse_tree_shape(part)?;
        let m = cycle_vertex_matrix(&shape, f)?;
        product = Some(match product {
            None => m,
            Some(prev) => matrix_mul(&prev, &m, d),
        });
    }
    let product = product.expect("non-empty cycle");
    let mut trace = Poly::zero(d);
    for i in 0..d {
        trace = trace.add(&product[i][i]);
    }
    Ok(trace)
}

/// The elementary differential of an aromatic tree: the product of the
/// scalar values of the aromas times the vector field of the tree.
pub fn elementary_differential_aromatic_tree(
    tree: &UnlabelledKey,
    aromas: &[UnlabelledKey],
    f: &PolyVectorField,
) -> Result<PolyVectorField> {
    let mut scalar = Poly::constant(f.dimension(), crate::rational::one());
    for a in aromas {
        scalar = scalar.mul(&elementary_differential_aroma(a, f)?);
    }
    let base = elementary_differential_tree(tree, f)?;
    let components = base
        .components()
        .iter()
        .map(|p| p.mul(&scalar))
        .collect();
    PolyVectorField::new(f.dimension(), components)
}

/// A labelled representative of the unlabelled tree shape, labels assigned
/// in depth-first order starting from 1.
pub(crate) fn labelled_representative(shape: &Shape) -> Result<RootedTree> {
    fn rec(shape: &Shape, parent: Option<u32>, next: &mut u32, map: &mut BTreeMap<u32, u32>) {
        let label = *next;
        *next += 1;
        if let Some(p) = parent {
            map.insert(label, p);
        }
        for c in &shape.children {
            rec(c, Some(label), next, map);
        }
    }
    let mut map = BTreeMap::new();
    let mut next = 1u32;
    rec(shape, None, &mut next, &mut map);
    RootedTree::new(1, map)
}

/// All cycle closings of the tree (one per vertex), as unlabelled aroma
/// codes with multiplicity.
pub fn tree_closings(key: &UnlabelledKey) -> Result<Vec<UnlabelledKey>> {
    let t = labelled_representative(&parse_tree_shape(key.as_str())?)?;
    t.vertices()
        .into_iter()
        .map(|v| Ok(aroma_code(&close_into_cycle(&t, v)?)))
        .collect()
}

/// Checks that the divergence of the tree differential equals the sum of the
/// aroma differentials over all cycle closings, as an exact polynomial
/// identity.
pub fn check_divergence_identity(key: &UnlabelledKey, f: &PolyVectorField) -> Result<bool> {
    let lhs = elementary_differential_tree(key, f)?.divergence();
    let mut rhs = Poly::zero(f.dimension());
    for closing in tree_closings(key)? {
        rhs = rhs.add(&elementary_differential_aroma(&closing, f)?);
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;
    use crate::species::{enumerate_unlabelled, UnlabelledKind};

    fn key(s: &str) -> UnlabelledKey {
        UnlabelledKey::new(s)
    }

    #[test]
    fn single_vertex_is_the_field_itself() {
        let f = PolyVectorField::random_cubic(2, 1).unwrap();
        assert_eq!(elementary_differential_tree(&key("()"), &f).unwrap(), f);
    }

    #[test]
    fn two_vertex_tree_on_linear_field_squares_the_matrix() {
        let a = PolyVectorField::linear(&[
            vec![qi(1), qi(2)],
            vec![qi(3), qi(4)],
        ])
        .unwrap();
        // A^2 = [[7, 10], [15, 22]]
        let squared = PolyVectorField::linear(&[
            vec![qi(7), qi(10)],
            vec![qi(15), qi(22)],
        ])
        .unwrap();
        assert_eq!(
            elementary_differential_tree(&key("(())"), &a).unwrap(),
            squared
        );
    }

    #[test]
    fn cherry_matches_second_derivative_contraction() {
        let f = PolyVectorField::random_cubic(2, 3).unwrap();
        let cherry = elementary_differential_tree(&key("(()())"), &f).unwrap();
        // Σ_{a,b} f^a f^b ∂_a ∂_b f^c, expanded by hand
        for c in 0..2 {
            let mut expected = Poly::zero(2);
            for a in 0..2 {
                for b in 0..2 {
                    let term = f
                        .component(c)
                        .partial(a)
                        .partial(b)
                        .mul(f.component(a))
                        .mul(f.component(b));
                    expected = expected.add(&term);
                }
            }
            assert_eq!(cherry.component(c), &expected);
        }
    }

    #[test]
    fn tadpole_is_the_divergence() {
        let f = PolyVectorField::random_cubic(3, 5).unwrap();
        assert_eq!(
            elementary_differential_aroma(&key("cycle[()]"), &f).unwrap(),
            f.divergence()
        );
    }

    #[test]
    fn two_cycle_on_linear_field_is_the_trace_of_the_square() {
        let a = PolyVectorField::linear(&[
            vec![qi(1), qi(2)],
            vec![qi(3), qi(4)],
        ])
        .unwrap();
        // tr(A^2) = 7 + 22 = 29
        assert_eq!(
            elementary_differential_aroma(&key("cycle[();()]"), &a).unwrap(),
            Poly::constant(2, qi(29))
        );
    }

    #[test]
    fn aromatic_tree_matches_its_factored_form() {
        // aromas: a loop with one hanging vertex, and a plain loop; tree:
        // the two-vertex tree. The value factors as
        // (f·∇(Div f)) · (Div f) · f'(f).
        let f = PolyVectorField::random_cubic(2, 11).unwrap();
        let value = elementary_differential_aromatic_tree(
            &key("(())"),
            &[key("cycle[(())]"), key("cycle[()]")],
            &f,
        )
        .unwrap();
        let div = f.divergence();
        let mut directional = Poly::zero(2);
        for p in 0..2 {
            directional = directional.add(&div.partial(p).mul(f.component(p)));
        }
        let jacobian_of_f = elementary_differential_tree(&key("(())"), &f).unwrap();
        let scalar = directional.mul(&div);
        for c in 0..2 {
            assert_eq!(
                value.component(c),
                &jacobian_of_f.component(c).mul(&scalar)
            );
        }
    }

    #[test]
    fn divergence_identity_single_vertex() {
        let f = PolyVectorField::random_cubic(2, 17).unwrap();
        assert!(check_divergence_identity(&key("()"), &f).unwrap());
    }

    #[test]
    fn divergence_identity_up_to_four_vertices() {
        let f = PolyVectorField::random_cubic(3, 23).unwrap();
        for n in 1..=4usize {
            for t in enumerate_unlabelled(UnlabelledKind::Tree, n).unwrap() {
                assert!(
                    check_divergence_identity(&t, &f).unwrap(),
                    "identity fails for {t}"
                );
            }
        }
    }

    #[test]
    fn kind_mismatches_are_rejected() {
        let f = PolyVectorField::random_cubic(2, 1).unwrap();
        assert!(elementary_differential_tree(&key("cycle[()]"), &f).is_err());
        assert!(elementary_differential_aroma(&key("()"), &f).is_err());
    }

    #[test]
    fn evaluation_commutes_with_composition_at_points() {
        // the recursive build evaluated at a point equals the contraction
        // computed from evaluated derivatives; spot check via the cherry
        let f = PolyVectorField::random_cubic(2, 29).unwrap();
        let point = [qi(1), qi(-2)];
        let cherry = elementary_differential_tree(&key("(()())"), &f).unwrap();
        let fv = f.eval(&point).unwrap();
        for c in 0..2 {
            let mut expected = qi(0);
            for a in 0..2 {
                for b in 0..2 {
                    expected += f
                        .component(c)
                        .partial(a)
                        .partial(b)
                        .eval(&point)
                        .unwrap()
                        * &fv[a]
                        * &fv[b];
                }
            }
            assert_eq!(cherry.component(c).eval(&point).unwrap(), expected);
        }
    }
}
