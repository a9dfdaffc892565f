//! Fraction-free sparse elimination over the integers. Vectors are sparse
//! maps from row index to `BigInt`; candidate vectors may carry bookkeeping
//! entries at indices at or beyond `limit` (identity tails), which travel
//! through the elimination untouched by pivoting and certify kernel vectors
//! and solution coefficients.

use std::collections::BTreeMap;

use num::{BigInt, Integer, Signed, Zero};

use crate::rational::{Q, Z};

pub(crate) type ZVec = BTreeMap<usize, Z>;

/// Divides all entries by their gcd so the vector has content one.
fn reduce_content(v: &mut ZVec) {
    let mut g = Z::zero();
    for c in v.values() {
        g = g.gcd(c);
    }
    if g.is_zero() || g == Z::from(1) {
        return;
    }
    for c in v.values_mut() {
        *c = &*c / &g;
    }
}

/// Row-echelon accumulator. Pivots are keyed by their leading (smallest)
/// index, which is always below `limit`; entries at or beyond `limit` are
/// bookkeeping tails.
pub(crate) struct Eliminator {
    limit: usize,
    pivots: BTreeMap<usize, ZVec>,
}

impl Eliminator {
    pub fn new(limit: usize) -> Self {
        Eliminator {
            limit,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn eliminate(pivot: &ZVec, lead: usize, v: &mut ZVec) {
        let p_lead = pivot[&lead].clone();
        let v_lead = v[&lead].clone();
        let mut out = ZVec::new();
        for (&i, c) in v.iter() {
            out.insert(i, c * &p_lead);
        }
        for (&i, c) in pivot.iter() {
            let e = out.entry(i).or_insert_with(Z::zero);
            *e -= c * &v_lead;
            if e.is_zero() {
                out.remove(&i);
            }
        }
        reduce_content(&mut out);
        *v = out;
    }

    /// Reduces `v` against the pivots in place until its leading index has no
    /// pivot or its row part (indices below `limit`) is exhausted.
    pub fn reduce(&self, v: &mut ZVec) {
        loop {
            let lead = match v.keys().next() {
                Some(&i) if i < self.limit => i,
                _ => return,
            };
            match self.pivots.get(&lead) {
                Some(p) => Self::eliminate(p, lead, v),
                None => return,
            }
        }
    }

    /// Reduces `v` and either installs it as a new pivot (returning `None`)
    /// or, when its row part vanished, returns the remainder so the caller
    /// can harvest the bookkeeping tail.
    pub fn insert(&mut self, mut v: ZVec) -> Option<ZVec> {
        self.reduce(&mut v);
        match v.keys().next() {
            Some(&lead) if lead < self.limit => {
                self.pivots.insert(lead, v);
                None
            }
            _ => Some(v),
        }
    }
}

/// Clears denominators of a sparse rational column, returning the integer
/// vector and the positive common multiplier used.
pub(crate) fn clear_denominators(col: &BTreeMap<usize, Q>) -> (ZVec, Z) {
    let mut lcm = Z::from(1);
    for c in col.values() {
        lcm = lcm.lcm(c.denom());
    }
    let v = col
        .iter()
        .map(|(&i, c)| (i, c.numer() * (&lcm / c.denom())))
        .filter(|(_, z)| !z.is_zero())
        .collect();
    (v, lcm)
}

/// Normalizes an integer vector to content one with positive leading entry,
/// then converts it to rationals.
pub(crate) fn normalize_to_rational(mut v: ZVec) -> BTreeMap<usize, Q> {
    reduce_content(&mut v);
    let negate = v
        .values()
        .next()
        .map(|c| c.is_negative())
        .unwrap_or(false);
    v.into_iter()
        .map(|(i, c)| {
            let c = if negate { -c } else { c };
            (i, Q::from_integer(c))
        })
        .collect()
}

/// Converts a BigInt reference pair into a rational quotient.
pub(crate) fn ratio(num: &BigInt, den: &BigInt) -> Q {
    Q::new(num.clone(), den.clone())
}
