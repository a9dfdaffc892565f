//! Chevalley–Eilenberg complexes of the two dg Lie structures on the pair
//! (trees, aromas). The chain space in arity `n` has a basis of aromatic
//! forests using every label in `1..=n`; the homological degree is the
//! number of tree components (tree blocks are odd, aroma blocks even).

use crate::error::Error;
use crate::linalg::{BasisIndex, ChainComplexSpec, LinComb, SparseRationalMatrix};
use crate::operad::{div, div0, lie_bracket, module_action};
use crate::rational::{qi, Q};
use crate::species::{
    enumerate_aromas, enumerate_rooted_trees, Aroma, AromaticForest, RootedTree,
};
use crate::Result;

/// Which divergence closes tree blocks into aroma blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CeVariant {
    /// Full divergence; aroma blocks are arbitrary cycles.
    Full,
    /// Reduced divergence; aroma blocks have cycle length at least two.
    Reduced,
}

impl CeVariant {
    pub fn min_cycle_len(self) -> usize {
        match self {
            CeVariant::Full => 1,
            CeVariant::Reduced => 2,
        }
    }

    fn closure(self, t: &RootedTree) -> LinComb<Aroma> {
        match self {
            CeVariant::Full => div(t),
            CeVariant::Reduced => div0(t),
        }
    }
}

impl std::str::FromStr for CeVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(CeVariant::Full),
            "reduced" => Ok(CeVariant::Reduced),
            other => Err(Error::Domain(format!("unknown variant {other:?}"))),
        }
    }
}

/// All aromatic forests whose components partition `labels`, with aroma
/// cycles of length at least `min_cycle_len`.
pub(crate) fn partition_forests(
    labels: &[u32],
    min_cycle_len: usize,
) -> Result<Vec<(Vec<RootedTree>, Vec<Aroma>)>> {
    if labels.is_empty() {
        return Ok(vec![(Vec::new(), Vec::new())]);
    }
    let first = labels[0];
    let rest = &labels[1..];
    let mut out = Vec::new();
    for mask in 0u64..(1 << rest.len()) {
        let mut block = vec![first];
        let mut remaining = Vec::new();
        for (i, &l) in rest.iter().enumerate() {
            if mask & (1 << i) != 0 {
                block.push(l);
            } else {
                remaining.push(l);
            }
        }
        let sub = partition_forests(&remaining, min_cycle_len)?;
        for t in enumerate_rooted_trees(&block)? {
            for (trees, aromas) in &sub {
                let mut trees = trees.clone();
                trees.push(t.clone());
                out.push((trees, aromas.clone()));
            }
        }
        for a in enumerate_aromas(&block, min_cycle_len)? {
            for (trees, aromas) in &sub {
                let mut aromas = aromas.clone();
                aromas.push(a.clone());
                out.push((trees.clone(), aromas));
            }
        }
    }
    Ok(out)
}

/// Basis forests of the arity-`n` chain space, grouped by homological degree
/// (number of tree components), each in canonical component order.
pub fn ce_basis_forests(variant: CeVariant, n: usize) -> Result<Vec<Vec<AromaticForest>>> {
    if n == 0 {
        return Err(Error::Domain("arity must be positive".into()));
    }
    let labels: Vec<u32> = (1..=n as u32).collect();
    let mut by_degree: Vec<Vec<AromaticForest>> = vec![Vec::new(); n + 1];
    for (trees, aromas) in partition_forests(&labels, variant.min_cycle_len())? {
        let degree = trees.len();
        let (forest, _) = AromaticForest::new(trees, aromas)?;
        by_degree[degree].push(forest);
    }
    for bucket in &mut by_degree {
        bucket.sort();
    }
    Ok(by_degree)
}

fn forest_with_sign(
    trees: Vec<RootedTree>,
    aromas: Vec<Aroma>,
    coeff: &Q,
) -> Result<LinComb<AromaticForest>> {
    let (forest, sign) = AromaticForest::new(trees, aromas)?;
    let mut c = coeff.clone();
    if sign < 0 {
        c = -c;
    }
    Ok(LinComb::term(forest, c))
}

/// The Chevalley–Eilenberg differential on a basis forest. Tree blocks are
/// numbered 1..p in canonical order; the three groups of terms are
///
/// * closing tree block i into an aroma, sign (−1)^(i−1);
/// * bracketing tree blocks i < j, sign (−1)^(i+j−1), bracket to the front;
/// * the action of tree block i on an aroma block, sign −(−1)^(i−1).
pub fn ce_differential(
    variant: CeVariant,
    f: &AromaticForest,
) -> Result<LinComb<AromaticForest>> {
    let trees = f.trees();
    let aromas = f.aromas();
    let mut out = LinComb::zero();
    for (i0, t) in trees.iter().enumerate() {
        let block_sign = if i0 % 2 == 0 { qi(1) } else { qi(-1) };
        let others: Vec<RootedTree> = trees
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i0)
            .map(|(_, t)| t.clone())
            .collect();
        // closure of one tree block
        for (a, c) in variant.closure(t).iter() {
            let mut aromas2 = aromas.to_vec();
            aromas2.push(a.clone());
            out.add(&forest_with_sign(others.clone(), aromas2, &(c * &block_sign))?);
        }
        // action on an aroma block
        for (k, a) in aromas.iter().enumerate() {
            for (a2, c) in module_action(a, t)?.iter() {
                let mut aromas2 = aromas.to_vec();
                aromas2[k] = a2.clone();
                out.add(&forest_with_sign(
                    others.clone(),
                    aromas2,
                    &-(c * &block_sign),
                )?);
            }
        }
        // brackets with later tree blocks
        for j0 in i0 + 1..trees.len() {
            let pair_sign = if (i0 + j0) % 2 == 1 { qi(1) } else { qi(-1) };
            let rest: Vec<RootedTree> = trees
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i0 && k != j0)
                .map(|(_, t)| t.clone())
                .collect();
            for (u, c) in lie_bracket(t, &trees[j0])?.iter() {
                let mut trees2 = vec![u.clone()];
                trees2.extend(rest.iter().cloned());
                out.add(&forest_with_sign(trees2, aromas.to_vec(), &(c * &pair_sign))?);
            }
        }
    }
    Ok(out)
}

/// A built Chevalley–Eilenberg complex together with its graded bases.
#[derive(Clone, Debug)]
pub struct CeComplex {
    variant: CeVariant,
    arity: usize,
    bases: Vec<BasisIndex<AromaticForest>>,
    complex: ChainComplexSpec,
}

impl CeComplex {
    pub fn variant(&self) -> CeVariant {
        self.variant
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn basis(&self, degree: usize) -> &BasisIndex<AromaticForest> {
        &self.bases[degree]
    }

    pub fn complex(&self) -> &ChainComplexSpec {
        &self.complex
    }
}

/// Builds the complex at arity `n` and verifies that the differential
/// squares to zero.
pub fn build_ce_complex(variant: CeVariant, n: usize) -> Result<CeComplex> {
    let by_degree = ce_basis_forests(variant, n)?;
    let bases: Vec<BasisIndex<AromaticForest>> =
        by_degree.into_iter().map(BasisIndex::new).collect();
    let dims: Vec<usize> = bases.iter().map(BasisIndex::len).collect();
    let mut differentials = Vec::new();
    for k in 0..n {
        differentials.push(SparseRationalMatrix::of_map(
            bases[k + 1].keys(),
            &bases[k],
            |f| ce_differential(variant, f).expect("differential of a valid forest"),
        )?);
    }
    let complex = ChainComplexSpec::new(dims, differentials)?;
    Ok(CeComplex {
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
    fn arity_one_complexes() {
        let full = build_ce_complex(CeVariant::Full, 1).unwrap();
        assert_eq!(full.complex().chain_dimensions(), &[1, 1]);
        // the single tree closes onto the tadpole: homology vanishes
        assert_eq!(full.complex().homology_dimensions(), vec![0, 0]);
        let reduced = build_ce_complex(CeVariant::Reduced, 1).unwrap();
        assert_eq!(reduced.complex().chain_dimensions(), &[0, 1]);
        assert_eq!(reduced.complex().homology_dimensions(), vec![0, 1]);
    }

    #[test]
    fn total_chain_dimension_counts_partial_maps() {
        // forests of trees and aromas on n labels are counted by (n+1)^n
        for n in 1..=3usize {
            let c = build_ce_complex(CeVariant::Full, n).unwrap();
            let total: usize = c.complex().chain_dimensions().iter().sum();
            assert_eq!(total, (n + 1).pow(n as u32));
        }
    }

    #[test]
    fn full_variant_homology_is_concentrated_in_degree_zero() {
        for n in 2..=3usize {
            let c = build_ce_complex(CeVariant::Full, n).unwrap();
            let h = c.complex().homology_dimensions();
            assert_eq!(h[0], (n - 1).pow(n as u32), "H0 at n = {n}");
            assert!(h[1..].iter().all(|&d| d == 0), "higher homology at n = {n}");
        }
    }

    #[test]
    fn reduced_variant_homology_small() {
        let c2 = build_ce_complex(CeVariant::Reduced, 2).unwrap();
        assert_eq!(c2.complex().homology_dimensions(), vec![0, 0, 0]);
        let c3 = build_ce_complex(CeVariant::Reduced, 3).unwrap();
        assert_eq!(c3.complex().chain_dimensions(), &[8, 12, 6, 1]);
        assert_eq!(c3.complex().homology_dimensions(), vec![1, 0, 0, 0]);
    }
}
