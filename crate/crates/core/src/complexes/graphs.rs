//! Undirected graph complexes: loopless simple graphs on labelled vertices
//! with edges of homological degree −1. The differential adds one edge in
//! all ways; the orientation convention is the sorted edge list, and adding
//! edge `e` carries the sign (−1)^(number of present edges below `e`).

use std::collections::BTreeSet;

use crate::error::Error;
use crate::linalg::{BasisIndex, ChainComplexSpec, LinComb, SparseRationalMatrix};
use crate::rational::{qi, Q};
use crate::Result;

/// A loopless simple graph on vertices `1..=n`, stored as its sorted edge
/// list (pairs `(u, v)` with `u < v`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphKey {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl GraphKey {
    pub fn new(n: usize, mut edges: Vec<(u32, u32)>) -> Result<Self> {
        edges.sort();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Structure("repeated edge".into()));
            }
        }
        for &(u, v) in &edges {
            if u >= v || v > n as u32 || u == 0 {
                return Err(Error::Structure(format!("bad edge ({u},{v})")));
            }
        }
        Ok(GraphKey { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = BTreeSet::new();
        let mut stack = vec![1u32];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            for &(a, b) in &self.edges {
                if a == v && !seen.contains(&b) {
                    stack.push(b);
                }
                if b == v && !seen.contains(&a) {
                    stack.push(a);
                }
            }
        }
        seen.len() == self.n
    }
}

fn all_pairs(n: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for u in 1..=n as u32 {
        for v in u + 1..=n as u32 {
            out.push((u, v));
        }
    }
    out
}

/// The differential: sum over absent edges of adding that edge, with the
/// edge-insertion sign.
pub fn graph_differential(g: &GraphKey) -> LinComb<GraphKey> {
    let mut out = LinComb::zero();
    for e in all_pairs(g.n) {
        if g.edges.binary_search(&e).is_ok() {
            continue;
        }
        let below = g.edges.iter().filter(|&&f| f < e).count();
        let sign: Q = if below % 2 == 0 { qi(1) } else { qi(-1) };
        let mut edges = g.edges.clone();
        edges.push(e);
        out.add_term(GraphKey::new(g.n, edges).expect("adding a fresh edge"), sign);
    }
    out
}

/// The contracting homotopy: sum over present edges of removing that edge,
/// with the matching sign.
pub fn graph_homotopy(g: &GraphKey) -> LinComb<GraphKey> {
    let mut out = LinComb::zero();
    for (i, &e) in g.edges.iter().enumerate() {
        let sign: Q = if i % 2 == 0 { qi(1) } else { qi(-1) };
        let edges: Vec<(u32, u32)> = g
            .edges
            .iter()
            .copied()
            .filter(|&f| f != e)
            .collect();
        out.add_term(GraphKey::new(g.n, edges).expect("removing an edge"), sign);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphVariant {
    /// All loopless simple graphs.
    All,
    /// Connected loopless simple graphs (a subcomplex: adding edges
    /// preserves connectivity).
    Connected,
}

impl std::str::FromStr for GraphVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(GraphVariant::All),
            "connected" => Ok(GraphVariant::Connected),
            other => Err(Error::Domain(format!("unknown variant {other:?}"))),
        }
    }
}

/// A built graph complex. Homological degree k holds the graphs with
/// C(n,2) − k edges, so the edge-adding differential lowers the degree.
#[derive(Clone, Debug)]
pub struct GraphComplex {
    variant: GraphVariant,
    arity: usize,
    bases: Vec<BasisIndex<GraphKey>>,
    complex: ChainComplexSpec,
}

impl GraphComplex {
    pub fn variant(&self) -> GraphVariant {
        self.variant
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn basis(&self, degree: usize) -> &BasisIndex<GraphKey> {
        &self.bases[degree]
    }

    pub fn complex(&self) -> &ChainComplexSpec {
        &self.complex
    }

    /// Checks `d h + h d = C(n,2) · id` degreewise as an exact matrix
    /// identity (only meaningful for the all-graphs variant, where `h`
    /// stays inside the complex).
    pub fn homotopy_identity_holds(&self) -> Result<bool> {
        let n = self.arity;
        let expected = qi((n * (n - 1) / 2) as i64);
        for k in 0..self.bases.len() {
            let basis = &self.bases[k];
            for g in basis.keys() {
                let mut dh_hd = graph_homotopy(g).apply(graph_differential);
                dh_hd.add(&graph_differential(g).apply(graph_homotopy));
                let mut expected_comb = LinComb::term(g.clone(), expected.clone());
                expected_comb.sub(&dh_hd);
                if !expected_comb.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Builds the graph complex on `n` labelled vertices.
pub fn build_graph_complex(variant: GraphVariant, n: usize) -> Result<GraphComplex> {
    if n == 0 {
        return Err(Error::Domain("need at least one vertex".into()));
    }
    let pairs = all_pairs(n);
    let top = pairs.len();
    let mut by_degree: Vec<Vec<GraphKey>> = vec![Vec::new(); top + 1];
    for mask in 0u64..(1 << top) {
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = GraphKey::new(n, edges)?;
        if variant == GraphVariant::Connected && !g.is_connected() {
            continue;
        }
        let degree = top - g.edges.len();
        by_degree[degree].push(g);
    }
    for bucket in &mut by_degree {
        bucket.sort();
    }
    let bases: Vec<BasisIndex<GraphKey>> = by_degree.into_iter().map(BasisIndex::new).collect();
    let dims: Vec<usize> = bases.iter().map(BasisIndex::len).collect();
    let mut differentials = Vec::new();
    for k in 0..top {
        differentials.push(SparseRationalMatrix::of_map(
            bases[k + 1].keys(),
            &bases[k],
            graph_differential,
        )?);
    }
    let complex = ChainComplexSpec::new(dims, differentials)?;
    Ok(GraphComplex {
        variant,
        arity: n,
        bases,
        complex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_graphs_complex_is_acyclic_beyond_arity_one() {
        let c1 = build_graph_complex(GraphVariant::All, 1).unwrap();
        assert_eq!(c1.complex().homology_dimensions(), vec![1]);
        for n in 2..=4usize {
            let c = build_graph_complex(GraphVariant::All, n).unwrap();
            assert!(
                c.complex().homology_dimensions().iter().all(|&d| d == 0),
                "nonzero homology at n = {n}"
            );
        }
    }

    #[test]
    fn homotopy_identity() {
        for n in 2..=4usize {
            let c = build_graph_complex(GraphVariant::All, n).unwrap();
            assert!(c.homotopy_identity_holds().unwrap(), "fails at n = {n}");
        }
    }

    #[test]
    fn connected_homology_counts_factorials() {
        for n in 1..=4usize {
            let c = build_graph_complex(GraphVariant::Connected, n).unwrap();
            let total: usize = c.complex().homology_dimensions().iter().sum();
            let expected: usize = (1..n).product();
            assert_eq!(total, expected.max(1), "total homology at n = {n}");
        }
    }

    #[test]
    fn differential_signs_square_to_zero() {
        let g = GraphKey::new(3, vec![(1, 2)]).unwrap();
        let dd = graph_differential(&g).apply(graph_differential);
        assert!(dd.is_zero());
    }
}
