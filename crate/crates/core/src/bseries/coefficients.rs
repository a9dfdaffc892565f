//! Truncated B-series coefficient tables, the modified vector field they
//! generate, and the order-by-order volume obstruction given by the reduced
//! divergence on isomorphism classes.

use std::collections::BTreeMap;

use num::Zero;

use crate::error::Error;
use crate::linalg::LinComb;
use crate::operad::div0;
use crate::rational::{qi, Q};
use crate::species::{
    aroma_code, enumerate_unlabelled, parse_tree_shape, symmetry_order, UnlabelledKey,
    UnlabelledKind,
};
use crate::Result;

use super::elementary::{elementary_differential_tree, labelled_representative};
use super::poly::PolyVectorField;

/// Coefficients of a modified field, indexed by unlabelled trees up to the
/// truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSeriesCoefficients {
    order: usize,
    coeffs: BTreeMap<UnlabelledKey, Q>,
}

impl BSeriesCoefficients {
    /// Builds a table from explicit entries. Every key must be a valid tree
    /// code on at most `order` vertices; trees may be absent (an absence is
    /// reported when a consumer needs the value).
    pub fn new(order: usize, coeffs: BTreeMap<UnlabelledKey, Q>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("truncation order must be positive".into()));
        }
        for key in coeffs.keys() {
            let shape = parse_tree_shape(key.as_str())
                .map_err(|_| Error::Domain(format!("{key} is not a tree code")))?;
            if shape.size() > order {
                return Err(Error::Domain(format!(
                    "tree {key} exceeds truncation order {order}"
                )));
            }
        }
        Ok(BSeriesCoefficients { order, coeffs })
    }

    /// Builds a complete table from a support list, filling every other tree
    /// of order at most `order` with zero.
    pub fn from_support(order: usize, support: BTreeMap<UnlabelledKey, Q>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for m in 1..=order {
            for t in enumerate_unlabelled(UnlabelledKind::Tree, m)? {
                coeffs.insert(t, Q::zero());
            }
        }
        for (key, value) in support {
            if !coeffs.contains_key(&key) {
                return Err(Error::Domain(format!(
                    "{key} is not a tree code of order at most {order}"
                )));
            }
            coeffs.insert(key, value);
        }
        BSeriesCoefficients::new(order, coeffs)
    }

    /// The exact flow: coefficient one on the single-vertex tree, zero
    /// elsewhere.
    pub fn exact_flow(order: usize) -> Result<Self> {
        BSeriesCoefficients::from_support(
            order,
            BTreeMap::from([(UnlabelledKey::new("()"), qi(1))]),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, key: &UnlabelledKey) -> Option<&Q> {
        self.coeffs.get(key)
    }
}

/// The truncated modified field Σ h^(|τ|−1) b(τ)/σ(τ) F(τ)(f). The result
/// has one extra formal variable appended after the coordinates: the step
/// size h.
pub fn modified_field(b: &BSeriesCoefficients, f: &PolyVectorField) -> Result<PolyVectorField> {
    let d = f.dimension();
    if f.vars() != d {
        return Err(Error::Domain(
            "the input field must not involve extra formal variables".into(),
        ));
    }
    let mut acc = PolyVectorField::zero_field(d, d + 1)?;
    for m in 1..=b.order {
        for key in enumerate_unlabelled(UnlabelledKind::Tree, m)? {
            let c = b.coeff(&key).ok_or_else(|| {
                Error::IncompleteCoefficients(format!("no coefficient for tree {key}"))
            })?;
            if c.is_zero() {
                continue;
            }
            let sigma = qi(symmetry_order(&key)? as i64);
            let diff = elementary_differential_tree(&key, f)?;
            let components = diff
                .components()
                .iter()
                .map(|p| {
                    p.lift(d + 1)
                        .map(|p| p.mul_var_pow(d, (m - 1) as u32).scale(&(c / &sigma)))
                })
                .collect::<Result<_>>()?;
            acc = acc.add(&PolyVectorField::new(d, components)?)?;
        }
    }
    Ok(acc)
}

/// The order-by-order volume obstruction: the reduced divergence of the
/// series in the combinatorial model, with the class of each tree weighted
/// by b(τ)/σ(τ). Orders with a vanishing obstruction are omitted, so the
/// result is empty exactly when the series is volume preserving up to the
/// truncation order.
pub fn volume_obstruction(
    b: &BSeriesCoefficients,
) -> Result<BTreeMap<usize, LinComb<UnlabelledKey>>> {
    let mut out = BTreeMap::new();
    for m in 2..=b.order {
        let mut acc: LinComb<UnlabelledKey> = LinComb::zero();
        for key in enumerate_unlabelled(UnlabelledKind::Tree, m)? {
            let c = b.coeff(&key).cloned().unwrap_or_else(Q::zero);
            if c.is_zero() {
                continue;
            }
            let sigma = qi(symmetry_order(&key)? as i64);
            let rep = labelled_representative(&parse_tree_shape(key.as_str())?)?;
            let mut closed = div0(&rep).map_signed(|a| (aroma_code(a), 1));
            closed.scale(&(c / sigma));
            acc.add(&closed);
        }
        if !acc.is_zero() {
            out.insert(m, acc);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn key(s: &str) -> UnlabelledKey {
        UnlabelledKey::new(s)
    }

    #[test]
    fn exact_flow_reproduces_the_field() {
        let f = PolyVectorField::random_cubic(2, 41).unwrap();
        let b = BSeriesCoefficients::exact_flow(3).unwrap();
        let tilde = modified_field(&b, &f).unwrap();
        for c in 0..2 {
            assert_eq!(tilde.component(c), &f.component(c).lift(3).unwrap());
        }
    }

    #[test]
    fn single_tree_support_gives_one_term() {
        let f = PolyVectorField::random_cubic(2, 43).unwrap();
        let b = BSeriesCoefficients::from_support(
            2,
            BTreeMap::from([(key("(())"), qi(1))]),
        )
        .unwrap();
        let tilde = modified_field(&b, &f).unwrap();
        let fp = elementary_differential_tree(&key("(())"), &f).unwrap();
        for c in 0..2 {
            let expected = fp.component(c).lift(3).unwrap().mul_var_pow(2, 1);
            assert_eq!(tilde.component(c), &expected);
        }
    }

    #[test]
    fn missing_coefficients_are_an_error() {
        let f = PolyVectorField::random_cubic(2, 47).unwrap();
        let b = BSeriesCoefficients::new(2, BTreeMap::from([(key("()"), qi(1))])).unwrap();
        assert!(matches!(
            modified_field(&b, &f),
            Err(Error::IncompleteCoefficients(_))
        ));
    }

    #[test]
    fn invalid_keys_are_rejected() {
        assert!(BSeriesCoefficients::new(2, BTreeMap::from([(key("cycle[()]"), qi(1))])).is_err());
        assert!(BSeriesCoefficients::new(1, BTreeMap::from([(key("(())"), qi(1))])).is_err());
    }

    #[test]
    fn exact_flow_has_no_obstruction() {
        let b = BSeriesCoefficients::exact_flow(6).unwrap();
        assert!(volume_obstruction(&b).unwrap().is_empty());
    }

    #[test]
    fn midpoint_like_coefficients_obstruct_at_order_two() {
        let b = BSeriesCoefficients::from_support(
            4,
            BTreeMap::from([(key("()"), qi(1)), (key("(())"), q(1, 2))]),
        )
        .unwrap();
        let obstruction = volume_obstruction(&b).unwrap();
        assert_eq!(obstruction.keys().copied().collect::<Vec<_>>(), vec![2]);
        // the two-vertex tree closes onto the two-cycle with coefficient 1/2
        assert_eq!(
            obstruction[&2].coeff(&key("cycle[();()]")),
            q(1, 2)
        );
    }

    #[test]
    fn any_higher_tree_support_obstructs_at_its_order() {
        for m in 2..=5usize {
            for t in enumerate_unlabelled(UnlabelledKind::Tree, m).unwrap() {
                let b = BSeriesCoefficients::from_support(
                    m,
                    BTreeMap::from([(key("()"), qi(1)), (t.clone(), qi(1))]),
                )
                .unwrap();
                let obstruction = volume_obstruction(&b).unwrap();
                assert_eq!(
                    obstruction.keys().copied().collect::<Vec<_>>(),
                    vec![m],
                    "support on {t}"
                );
            }
        }
    }
}
