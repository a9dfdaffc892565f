use std::collections::BTreeMap;

use num::Zero;

use crate::error::Error;
use crate::rational::{format_q, Q};
use crate::Result;

use super::elim::{clear_denominators, normalize_to_rational, ratio, Eliminator, ZVec};
use super::lincomb::{BasisIndex, LinComb};

/// A sparse matrix over the rationals, stored column-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    nrows: usize,
    cols: Vec<BTreeMap<usize, Q>>,
}

impl SparseRationalMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseRationalMatrix {
            nrows,
            cols: vec![BTreeMap::new(); ncols],
        }
    }

    pub fn from_columns(nrows: usize, cols: Vec<BTreeMap<usize, Q>>) -> Result<Self> {
        for col in &cols {
            if col.keys().next_back().is_some_and(|&r| r >= nrows) {
                return Err(Error::Domain("column entry beyond row count".into()));
            }
        }
        Ok(SparseRationalMatrix { nrows, cols })
    }

    /// Matrix of a linear map in the given bases: column `j` holds the
    /// coordinates of the image of the `j`-th domain basis key.
    pub fn of_map<K, K2: Ord + Clone>(
        domain: &[K],
        codomain: &BasisIndex<K2>,
        f: impl Fn(&K) -> LinComb<K2> + Sync,
    ) -> Result<Self>
    where
        K: Sync,
        K2: Sync,
        Q: Send,
    {
        let cols = crate::par::map_collect(domain, |k| {
            codomain
                .coordinates(&f(k))
                .ok_or_else(|| Error::BasisMismatch("image term outside codomain basis".into()))
        });
        let cols = cols.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(SparseRationalMatrix {
            nrows: codomain.len(),
            cols,
        })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &BTreeMap<usize, Q> {
        &self.cols[j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Q) {
        assert!(i < self.nrows && j < self.cols.len());
        if value.is_zero() {
            self.cols[j].remove(&i);
        } else {
            self.cols[j].insert(i, value);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.cols[j].get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    /// First nonzero entry as `(row, col, value)`, if any.
    pub fn first_nonzero(&self) -> Option<(usize, usize, Q)> {
        for (j, col) in self.cols.iter().enumerate() {
            if let Some((&i, v)) = col.iter().next() {
                return Some((i, j, v.clone()));
            }
        }
        None
    }

    pub fn apply(&self, v: &BTreeMap<usize, Q>) -> BTreeMap<usize, Q> {
        let mut out: BTreeMap<usize, Q> = BTreeMap::new();
        for (&j, c) in v {
            for (&i, a) in &self.cols[j] {
                let e = out.entry(i).or_insert_with(Q::zero);
                *e += a * c;
                if e.is_zero() {
                    out.remove(&i);
                }
            }
        }
        out
    }

    pub fn mul(&self, rhs: &SparseRationalMatrix) -> Result<SparseRationalMatrix> {
        if self.ncols() != rhs.nrows() {
            return Err(Error::Domain("matrix dimension mismatch in product".into()));
        }
        let cols = crate::par::map_collect(&rhs.cols, |col| self.apply(col));
        Ok(SparseRationalMatrix {
            nrows: self.nrows,
            cols,
        })
    }

    fn eliminate_columns(&self) -> (Eliminator, Vec<ZVec>, Vec<usize>) {
        let mut elim = Eliminator::new(self.nrows);
        let mut remainders = Vec::new();
        let mut pivot_cols = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            let (mut v, scale) = clear_denominators(col);
            // the tail records that the integer row part equals `scale`
            // times the original rational column, so surviving tails certify
            // which combination of original columns vanished
            v.insert(self.nrows + j, scale);
            match elim.insert(v) {
                None => pivot_cols.push(j),
                Some(rem) => remainders.push(rem),
            }
        }
        (elim, remainders, pivot_cols)
    }

    pub fn rank(&self) -> usize {
        self.eliminate_columns().0.rank()
    }

    /// Basis of the kernel as sparse coordinate columns, each normalized to
    /// integer content one with positive leading entry. Deterministic:
    /// vectors are produced in column order of the first dependent column.
    pub fn kernel_basis(&self) -> Vec<BTreeMap<usize, Q>> {
        let (_, remainders, _) = self.eliminate_columns();
        remainders
            .into_iter()
            .map(|rem| {
                let tail: ZVec = rem
                    .into_iter()
                    .map(|(i, c)| (i - self.nrows, c))
                    .collect();
                normalize_to_rational(tail)
            })
            .collect()
    }

    /// Indices of a maximal set of linearly independent columns.
    pub fn image_pivot_columns(&self) -> Vec<usize> {
        self.eliminate_columns().2
    }

    /// Text dump: a header line `rows cols`, then one `row col value` triple
    /// per nonzero entry in column-major order.
    pub fn dump(&self) -> String {
        let mut out = format!("{} {}\n", self.nrows, self.ncols());
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, v) in col {
                out.push_str(&format!("{i} {j} {}\n", format_q(v)));
            }
        }
        out
    }
}

/// Prepared solver for systems `A x = b` with a fixed matrix `A`.
pub struct Solver {
    nrows: usize,
    ncols: usize,
    elim: Eliminator,
}

impl Solver {
    pub fn new(matrix: &SparseRationalMatrix) -> Self {
        let mut elim = Eliminator::new(matrix.nrows);
        for (j, col) in matrix.cols.iter().enumerate() {
            let (mut v, scale) = clear_denominators(col);
            v.insert(matrix.nrows + j, scale);
            // dependent columns are dropped; any solution in the remaining
            // columns is still a valid solution of the full system
            let _ = elim.insert(v);
        }
        Solver {
            nrows: matrix.nrows,
            ncols: matrix.cols.len(),
            elim,
        }
    }

    /// Solves `A x = b`, returning sparse coordinates of one solution, or
    /// `None` when `b` is outside the column span.
    pub fn solve(&self, b: &BTreeMap<usize, Q>) -> Option<BTreeMap<usize, Q>> {
        let marker = self.nrows + self.ncols;
        let (mut v, scale) = clear_denominators(b);
        v.insert(marker, scale);
        self.elim.reduce(&mut v);
        if v.keys().next().is_some_and(|&i| i < self.nrows) {
            return None;
        }
        let gamma = v.remove(&marker).expect("marker survives elimination");
        let mut x = BTreeMap::new();
        for (i, c) in v {
            // gamma * b + sum_j delta_j a_j = 0, so x_j = -delta_j / gamma
            let val = -ratio(&c, &gamma);
            if !val.is_zero() {
                x.insert(i - self.nrows, val);
            }
        }
        Some(x)
    }
}

/// Trace of a signed basis-key action on the span of the given vectors. The
/// span must be invariant under the action; otherwise this fails.
pub fn induced_action_trace<K: Ord + Clone>(
    span: &[LinComb<K>],
    ambient: &BasisIndex<K>,
    action: impl Fn(&K) -> (K, i32),
) -> Result<Q> {
    let cols = span
        .iter()
        .map(|v| {
            ambient
                .coordinates(v)
                .ok_or_else(|| Error::BasisMismatch("span vector outside ambient basis".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let matrix = SparseRationalMatrix::from_columns(ambient.len(), cols)?;
    let solver = Solver::new(&matrix);
    let mut trace = Q::zero();
    for (j, v) in span.iter().enumerate() {
        let image = v.map_signed(&action);
        let b = ambient
            .coordinates(&image)
            .ok_or_else(|| Error::BasisMismatch("action leaves ambient basis".into()))?;
        let x = solver
            .solve(&b)
            .ok_or_else(|| Error::Domain("action does not preserve the span".into()))?;
        if let Some(c) = x.get(&j) {
            trace += c;
        }
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn m(rows: usize, entries: &[(usize, usize, i64)]) -> SparseRationalMatrix {
        let ncols = entries.iter().map(|&(_, j, _)| j + 1).max().unwrap_or(0);
        let mut out = SparseRationalMatrix::zero(rows, ncols);
        for &(i, j, v) in entries {
            out.set(i, j, qi(v));
        }
        out
    }

    #[test]
    fn rank_and_kernel_of_small_matrix() {
        // columns: (1,2), (2,4), (0,1) -- second is twice the first
        let a = m(2, &[(0, 0, 1), (1, 0, 2), (0, 1, 2), (1, 1, 4), (1, 2, 1)]);
        assert_eq!(a.rank(), 2);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 1);
        let k = &ker[0];
        // 2*c0 - c1 = 0 normalized to leading positive content one
        assert_eq!(k.get(&0), Some(&qi(2)));
        assert_eq!(k.get(&1), Some(&qi(-1)));
        assert_eq!(k.get(&2), None);
        assert!(a.apply(k).is_empty());
        assert_eq!(a.image_pivot_columns(), vec![0, 2]);
    }

    #[test]
    fn rank_nullity_identity_matrix() {
        let id = m(3, &[(0, 0, 1), (1, 1, 1), (2, 2, 1)]);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel_basis().is_empty());
    }

    #[test]
    fn rational_entries_are_cleared_exactly() {
        let mut a = SparseRationalMatrix::zero(2, 2);
        a.set(0, 0, q(1, 3));
        a.set(1, 0, q(1, 6));
        a.set(0, 1, q(2, 3));
        a.set(1, 1, q(1, 3));
        assert_eq!(a.rank(), 1);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0].get(&0), Some(&qi(2)));
        assert_eq!(ker[0].get(&1), Some(&qi(-1)));
    }

    #[test]
    fn matrix_product_and_zero_check() {
        let a = m(2, &[(0, 0, 1), (1, 1, 1)]);
        let b = m(2, &[(0, 0, 3), (1, 0, -2), (1, 1, 5)]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.get(0, 0), qi(3));
        assert_eq!(ab.get(1, 0), qi(-2));
        assert_eq!(ab.get(1, 1), qi(5));
        assert!(SparseRationalMatrix::zero(4, 4)
            .mul(&SparseRationalMatrix::zero(4, 2))
            .unwrap()
            .is_zero());
        assert!(a.mul(&SparseRationalMatrix::zero(3, 1)).is_err());
    }

    #[test]
    fn solver_finds_solutions_and_detects_failure() {
        let a = m(3, &[(0, 0, 1), (1, 0, 1), (1, 1, 1), (2, 1, 1)]);
        let b: BTreeMap<usize, Q> = [(0usize, qi(2)), (1, qi(5)), (2, qi(3))].into();
        let s = Solver::new(&a);
        let x = s.solve(&b).unwrap();
        assert_eq!(x.get(&0), Some(&qi(2)));
        assert_eq!(x.get(&1), Some(&qi(3)));
        let bad: BTreeMap<usize, Q> = [(2usize, qi(1)), (0, qi(1))].into();
        assert!(s.solve(&bad).is_none());
    }

    #[test]
    fn induced_trace_of_swap_on_symmetric_vector() {
        // ambient basis {a, b}; span of a+b; swapping a and b fixes it
        let ambient = BasisIndex::new(vec!["a", "b"]);
        let mut v = LinComb::term("a", qi(1));
        v.add_term("b", qi(1));
        let tr = induced_action_trace(&[v.clone()], &ambient, |&k| {
            (if k == "a" { "b" } else { "a" }, 1)
        })
        .unwrap();
        assert_eq!(tr, qi(1));
        // signed swap negates it
        let tr = induced_action_trace(&[v.clone()], &ambient, |&k| {
            (if k == "a" { "b" } else { "a" }, -1)
        })
        .unwrap();
        assert_eq!(tr, qi(-1));
        // a span that is not invariant is rejected
        let w = LinComb::term("a", qi(1));
        assert!(induced_action_trace(&[w], &ambient, |&k| {
            (if k == "a" { "b" } else { "a" }, 1)
        })
        .is_err());
    }

    #[test]
    fn dump_format_lists_triples() {
        let a = m(2, &[(1, 0, 2), (0, 1, -1)]);
        assert_eq!(a.dump(), "2 2\n1 0 2\n0 1 -1\n");
    }
}
