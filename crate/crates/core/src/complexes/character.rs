//! Symmetric-group characters of the degree-zero homology of the reduced
//! complex. The product formula Π_k (−2 + Σ_{d|k} d·a_d)^{a_k} over the
//! cycle type (a_1, …, a_n) is compared with traces computed exactly on the
//! built complex.

use std::collections::BTreeMap;

use num::Zero;
use serde::Serialize;

use crate::linalg::{induced_action_trace, LinComb};
use crate::rational::{format_q, qi, Q};
use crate::species::AromaticForest;
use crate::Result;

use super::ce::{build_ce_complex, ce_differential, CeComplex, CeVariant};

/// All partitions of `n`, each as a descending list of part sizes.
pub(crate) fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A permutation of `1..=n` with the given cycle type, as a label map.
pub(crate) fn permutation_of_cycle_type(parts: &[usize]) -> BTreeMap<u32, u32> {
    let mut map = BTreeMap::new();
    let mut next = 1u32;
    for &len in parts {
        let cycle: Vec<u32> = (next..next + len as u32).collect();
        for i in 0..len {
            map.insert(cycle[i], cycle[(i + 1) % len]);
        }
        next += len as u32;
    }
    map
}

/// Signed action of a relabelling on a canonical forest: relabel every
/// component and restore canonical component order, tracking the sign.
pub(crate) fn forest_action(sigma: &BTreeMap<u32, u32>, f: &AromaticForest) -> (AromaticForest, i32) {
    let trees = f
        .trees()
        .iter()
        .map(|t| t.relabel(sigma).expect("total relabelling"))
        .collect();
    let aromas = f
        .aromas()
        .iter()
        .map(|a| a.relabel(sigma).expect("total relabelling"))
        .collect();
    let (forest, sign) = AromaticForest::new(trees, aromas).expect("relabelled forest");
    (forest, sign)
}

/// Trace of the signed relabelling action on the degree-`k` chain space.
pub(crate) fn chain_trace(complex: &CeComplex, k: usize, sigma: &BTreeMap<u32, u32>) -> Q {
    let mut trace = Q::zero();
    for f in complex.basis(k).keys() {
        let (image, sign) = forest_action(sigma, f);
        if &image == f {
            trace += qi(sign as i64);
        }
    }
    trace
}

/// The product formula for the character at the given cycle type
/// (a_k = number of parts of size k).
pub fn character_formula(parts: &[usize]) -> i64 {
    let n: usize = parts.iter().sum();
    let mut counts = vec![0i64; n + 1];
    for &p in parts {
        counts[p] += 1;
    }
    let mut value = 1i64;
    for k in 1..=n {
        if counts[k] == 0 {
            continue;
        }
        let divisor_sum: i64 = (1..=k)
            .filter(|d| k % d == 0)
            .map(|d| d as i64 * counts[d])
            .sum();
        value *= (-2 + divisor_sum).pow(counts[k] as u32);
    }
    value
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterCheck {
    /// Cycle type as descending part sizes.
    pub cycle_type: Vec<usize>,
    /// Value of the product formula.
    pub formula: i64,
    /// Alternating sum of chain traces (equals the alternating sum of
    /// homology traces).
    pub lefschetz: String,
    /// Trace on degree-zero homology, computed as the trace on the
    /// degree-zero chains minus the trace on the image of the differential.
    pub h0_trace: String,
    /// Whether the formula matches the Lefschetz number.
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterReport {
    pub arity: usize,
    pub checks: Vec<CharacterCheck>,
    pub all_match: bool,
}

/// Compares the product formula against exact traces on the reduced complex
/// at arity `n`, one check per cycle type. The formula equals the
/// alternating sum of homology traces; for n ≥ 2 the homology sits in
/// degree zero and the Lefschetz number is the degree-zero homology trace.
pub fn character_check(n: usize) -> Result<CharacterReport> {
    let complex = build_ce_complex(CeVariant::Reduced, n)?;
    // an invariant-subspace basis of the image of the differential into
    // degree zero, for the quotient trace on H0
    let image_vectors: Vec<LinComb<AromaticForest>> = match complex.complex().differential(0) {
        None => Vec::new(),
        Some(d1) => {
            let pivots = d1.image_pivot_columns();
            pivots
                .into_iter()
                .map(|j| ce_differential(CeVariant::Reduced, complex.basis(1).key(j)))
                .collect::<Result<_>>()?
        }
    };
    let mut checks = Vec::new();
    for parts in partitions(n) {
        let sigma = permutation_of_cycle_type(&parts);
        let mut lefschetz = Q::zero();
        for k in 0..=n {
            let t = chain_trace(&complex, k, &sigma);
            if k % 2 == 0 {
                lefschetz += t;
            } else {
                lefschetz -= t;
            }
        }
        let h0_trace = if image_vectors.is_empty() {
            chain_trace(&complex, 0, &sigma)
        } else {
            let image_trace = induced_action_trace(&image_vectors, complex.basis(0), |f| {
                forest_action(&sigma, f)
            })?;
            chain_trace(&complex, 0, &sigma) - image_trace
        };
        let formula = character_formula(&parts);
        let matches = lefschetz == qi(formula);
        checks.push(CharacterCheck {
            cycle_type: parts,
            formula,
            lefschetz: format_q(&lefschetz),
            h0_trace: format_q(&h0_trace),
            matches,
        });
    }
    let all_match = checks.iter().all(|c| c.matches);
    Ok(CharacterReport {
        arity: n,
        checks,
        all_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(5).len(), 7);
    }

    #[test]
    fn formula_values() {
        // identity on n: a_1 = n, value (n-2)^n
        assert_eq!(character_formula(&[1, 1, 1]), 1);
        assert_eq!(character_formula(&[1, 1, 1, 1]), 16);
        // transposition plus fixed point on 3: a_1 = 1, a_2 = 1
        assert_eq!(character_formula(&[2, 1]), -1 * 1);
        // full 2-cycle: a_2 = 1 gives (-2 + 2)^1 = 0
        assert_eq!(character_formula(&[2]), 0);
        // single fixed point: (-2 + 1)^1 = -1
        assert_eq!(character_formula(&[1]), -1);
    }

    #[test]
    fn characters_match_traces_small() {
        for n in 1..=3usize {
            let report = character_check(n).unwrap();
            assert!(report.all_match, "mismatch at arity {n}: {report:?}");
        }
    }

    #[test]
    fn h0_trace_agrees_for_arities_at_least_two() {
        for n in 2..=3usize {
            let report = character_check(n).unwrap();
            for c in &report.checks {
                assert_eq!(c.h0_trace, c.lefschetz, "cycle type {:?}", c.cycle_type);
            }
        }
    }
}
