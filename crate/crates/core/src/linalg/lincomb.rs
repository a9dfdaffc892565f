use std::collections::BTreeMap;

use num::Zero;

use crate::rational::Q;

/// A finite formal linear combination of basis keys with rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Q>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Q) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn add_term(&mut self, key: K, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&mut self, other: &Self)
    where
        K: Clone,
    {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub(&mut self, other: &Self)
    where
        K: Clone,
    {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }

    pub fn scale(&mut self, factor: &Q) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor.clone();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Q {
        self.terms.get(key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<K, Q> {
        self.terms
    }

    /// Linear extension of a map on basis keys.
    pub fn apply<K2: Ord>(&self, f: impl Fn(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            let mut image = f(k);
            image.scale(c);
            for (k2, c2) in image.into_terms() {
                out.add_term(k2, c2);
            }
        }
        out
    }

    /// Linear extension of a signed relabelling of basis keys.
    pub fn map_signed<K2: Ord>(&self, f: impl Fn(&K) -> (K2, i32)) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            let (k2, sign) = f(k);
            let mut coeff = c.clone();
            if sign < 0 {
                coeff = -coeff;
            }
            out.add_term(k2, coeff);
        }
        out
    }
}

impl<K: Ord> FromIterator<(K, Q)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (k, q) in iter {
            c.add_term(k, q);
        }
        c
    }
}

/// An ordered basis with constant-time position lookup.
#[derive(Clone, Debug)]
pub struct BasisIndex<K: Ord> {
    keys: Vec<K>,
    pos: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> BasisIndex<K> {
    pub fn new(keys: Vec<K>) -> Self {
        let pos = keys
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), i))
            .collect();
        BasisIndex { keys, pos }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }

    pub fn key(&self, i: usize) -> &K {
        &self.keys[i]
    }

    pub fn position(&self, key: &K) -> Option<usize> {
        self.pos.get(key).copied()
    }

    /// Expresses a linear combination as a sparse coordinate column.
    pub fn coordinates(&self, v: &LinComb<K>) -> Option<BTreeMap<usize, Q>> {
        let mut col = BTreeMap::new();
        for (k, c) in v.iter() {
            col.insert(self.position(k)?, c.clone());
        }
        Some(col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn cancellation_removes_terms() {
        let mut v = LinComb::term("a", qi(2));
        v.add_term("a", qi(-2));
        assert!(v.is_zero());
        v.add_term("b", q(1, 3));
        v.add_term("b", q(2, 3));
        assert_eq!(v.coeff(&"b"), qi(1));
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn apply_is_linear() {
        let mut v = LinComb::term(1u32, qi(2));
        v.add_term(2, qi(-1));
        let w = v.apply(|&k| {
            let mut out = LinComb::term(k * 10, qi(1));
            out.add_term(0, qi(1));
            out
        });
        assert_eq!(w.coeff(&10), qi(2));
        assert_eq!(w.coeff(&20), qi(-1));
        assert_eq!(w.coeff(&0), qi(1));
    }

    #[test]
    fn basis_coordinates() {
        let b = BasisIndex::new(vec!["x", "y", "z"]);
        let mut v = LinComb::term("z", qi(3));
        v.add_term("x", q(-1, 2));
        let col = b.coordinates(&v).unwrap();
        assert_eq!(col.get(&0), Some(&q(-1, 2)));
        assert_eq!(col.get(&2), Some(&qi(3)));
        v.add_term("w", qi(1));
        assert!(b.coordinates(&v).is_none());
    }
}
