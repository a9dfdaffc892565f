//! The aromatic bicomplex: aromatic forests on `n` vertices of which `w`
//! are white, skew-symmetric under permutations of the white vertices and
//! of the tree components, with black vertices indistinguishable. The
//! horizontal differential adds an edge from the root of the last tree
//! component to any vertex; the vertical differential recolours a black
//! vertex white. The loop-free variant quotients out forests containing a
//! cycle of length one.

use std::collections::{BTreeMap, BTreeSet};

use num::Zero;

use crate::error::Error;
use crate::linalg::{BasisIndex, ChainComplexSpec, LinComb, SparseRationalMatrix};
use crate::rational::{qi, Q};
use crate::species::{print_forest, Aroma, AromaticForest, RootedTree};
use crate::Result;

use super::ce::{ce_differential, partition_forests, CeComplex, CeVariant};
use super::character::{character_formula, forest_action};

/// A basis element: the canonical representative forest, with white
/// vertices `1..=white_count` and black vertices above.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaKey {
    white_count: usize,
    forest: AromaticForest,
}

impl OmegaKey {
    pub fn white_count(&self) -> usize {
        self.white_count
    }

    pub fn forest(&self) -> &AromaticForest {
        &self.forest
    }
}

fn permutations_with_sign(items: &[u32]) -> Vec<(Vec<u32>, i32)> {
    fn rec(rest: &mut Vec<u32>, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(rest, prefix, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut raw = Vec::new();
    rec(&mut items.to_vec(), &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|perm| {
            let mut inversions = 0usize;
            for i in 0..perm.len() {
                for j in i + 1..perm.len() {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (perm, sign)
        })
        .collect()
}

/// Canonicalizes a two-coloured forest under white and black relabellings.
/// Returns the canonical key and the sign relating the input to it, or
/// `None` when the class is zero (some symmetry acts by −1).
fn canonical_omega(
    trees: &[RootedTree],
    aromas: &[Aroma],
    white_count: usize,
    n: usize,
) -> Result<Option<(OmegaKey, i32)>> {
    let whites: Vec<u32> = (1..=white_count as u32).collect();
    let blacks: Vec<u32> = (white_count as u32 + 1..=n as u32).collect();
    let mut best: Option<(String, AromaticForest, i32)> = None;
    let mut signs: BTreeMap<String, i32> = BTreeMap::new();
    for (wperm, wsign) in permutations_with_sign(&whites) {
        for (bperm, _) in permutations_with_sign(&blacks) {
            let mut map: BTreeMap<u32, u32> = BTreeMap::new();
            map.extend(whites.iter().copied().zip(wperm.iter().copied()));
            map.extend(blacks.iter().copied().zip(bperm.iter().copied()));
            let relabelled_trees: Vec<RootedTree> = trees
                .iter()
                .map(|t| t.relabel(&map))
                .collect::<Result<_>>()?;
            let relabelled_aromas: Vec<Aroma> = aromas
                .iter()
                .map(|a| a.relabel(&map))
                .collect::<Result<_>>()?;
            let (forest, sort_sign) = AromaticForest::new(relabelled_trees, relabelled_aromas)?;
            let sign = wsign * sort_sign;
            let ser = print_forest(&forest);
            if let Some(&prev) = signs.get(&ser) {
                if prev != sign {
                    return Ok(None);
                }
            } else {
                signs.insert(ser.clone(), sign);
            }
            if best.as_ref().map_or(true, |(b, _, _)| ser < *b) {
                best = Some((ser, forest, sign));
            }
        }
    }
    let (_, forest, sign) = best.expect("at least the identity relabelling");
    Ok(Some((
        OmegaKey {
            white_count,
            forest,
        },
        sign,
    )))
}

fn add_canonical(
    out: &mut LinComb<OmegaKey>,
    trees: &[RootedTree],
    aromas: &[Aroma],
    white_count: usize,
    n: usize,
    coeff: &Q,
) -> Result<()> {
    if let Some((key, sign)) = canonical_omega(trees, aromas, white_count, n)? {
        let mut c = coeff.clone();
        if sign < 0 {
            c = -c;
        }
        out.add_term(key, c);
    }
    Ok(())
}

/// Horizontal differential: the labelled chain differential of the matching
/// Chevalley–Eilenberg complex applied to the canonical representative,
/// followed by two-colour canonicalization. This is well defined on the
/// skew classes because the labelled differential commutes with signed
/// relabellings.
fn horizontal(variant: CeVariant, key: &OmegaKey, n: usize) -> Result<LinComb<OmegaKey>> {
    let image = ce_differential(variant, &key.forest)?;
    let mut out = LinComb::zero();
    for (f, c) in image.iter() {
        add_canonical(&mut out, f.trees(), f.aromas(), key.white_count, n, c)?;
    }
    Ok(out)
}

/// Vertical differential: recolour each black vertex white in turn. The new
/// white vertex takes label `white_count + 1` via a black label swap.
fn vertical(key: &OmegaKey, n: usize) -> Result<LinComb<OmegaKey>> {
    let w = key.white_count;
    let mut out = LinComb::zero();
    let one = qi(1);
    for b in w as u32 + 1..=n as u32 {
        let mut map: BTreeMap<u32, u32> = (1..=n as u32).map(|v| (v, v)).collect();
        map.insert(b, w as u32 + 1);
        map.insert(w as u32 + 1, b);
        let trees: Vec<RootedTree> = key
            .forest
            .trees()
            .iter()
            .map(|t| t.relabel(&map))
            .collect::<Result<_>>()?;
        let aromas: Vec<Aroma> = key
            .forest
            .aromas()
            .iter()
            .map(|a| a.relabel(&map))
            .collect::<Result<_>>()?;
        add_canonical(&mut out, &trees, &aromas, w + 1, n, &one)?;
    }
    Ok(out)
}

/// The built bicomplex, indexed by (tree components, white vertices).
#[derive(Clone, Debug)]
pub struct AromaticBicomplex {
    variant: CeVariant,
    n: usize,
    bases: BTreeMap<(usize, usize), BasisIndex<OmegaKey>>,
    dh: BTreeMap<(usize, usize), SparseRationalMatrix>,
    dv: BTreeMap<(usize, usize), SparseRationalMatrix>,
    anticommute: bool,
}

impl AromaticBicomplex {
    pub fn variant(&self) -> CeVariant {
        self.variant
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Whether the two differentials anticommute (as opposed to commute).
    pub fn anticommute(&self) -> bool {
        self.anticommute
    }

    pub fn basis(&self, trees: usize, whites: usize) -> Option<&BasisIndex<OmegaKey>> {
        self.bases.get(&(trees, whites))
    }

    /// The horizontal differential out of bidegree (trees, whites).
    pub fn horizontal_matrix(&self, trees: usize, whites: usize) -> Option<&SparseRationalMatrix> {
        self.dh.get(&(trees, whites))
    }

    /// The vertical differential out of bidegree (trees, whites).
    pub fn vertical_matrix(&self, trees: usize, whites: usize) -> Option<&SparseRationalMatrix> {
        self.dv.get(&(trees, whites))
    }

    pub fn dimension(&self, trees: usize, whites: usize) -> usize {
        self.bases.get(&(trees, whites)).map_or(0, BasisIndex::len)
    }

    fn dim(&self, p: usize, w: usize) -> usize {
        self.dimension(p, w)
    }

    /// Homology of the horizontal differential, as a map
    /// (tree components, whites) → dimension.
    pub fn horizontal_homology(&self) -> Result<BTreeMap<(usize, usize), usize>> {
        let mut out = BTreeMap::new();
        for w in 0..=self.n {
            let dims: Vec<usize> = (0..=self.n).map(|p| self.dim(p, w)).collect();
            let diffs: Vec<SparseRationalMatrix> = (0..self.n)
                .map(|p| {
                    self.dh
                        .get(&(p + 1, w))
                        .cloned()
                        .unwrap_or_else(|| SparseRationalMatrix::zero(dims[p], dims[p + 1]))
                })
                .collect();
            let complex = ChainComplexSpec::new(dims, diffs)?;
            for (p, h) in complex.homology_dimensions().into_iter().enumerate() {
                out.insert((p, w), h);
            }
        }
        Ok(out)
    }

    /// Homology of the vertical differential, as a map
    /// (tree components, whites) → dimension.
    pub fn vertical_homology(&self) -> Result<BTreeMap<(usize, usize), usize>> {
        let mut out = BTreeMap::new();
        for p in 0..=self.n {
            // degree k holds the component with n - k white vertices, so
            // the recolouring differential lowers the degree
            let dims: Vec<usize> = (0..=self.n).map(|k| self.dim(p, self.n - k)).collect();
            let diffs: Vec<SparseRationalMatrix> = (0..self.n)
                .map(|k| {
                    let w = self.n - k - 1;
                    self.dv
                        .get(&(p, w))
                        .cloned()
                        .unwrap_or_else(|| SparseRationalMatrix::zero(dims[k], dims[k + 1]))
                })
                .collect();
            let complex = ChainComplexSpec::new(dims, diffs)?;
            for (k, h) in complex.homology_dimensions().into_iter().enumerate() {
                out.insert((p, self.n - k), h);
            }
        }
        Ok(out)
    }

    /// Checks that each bigraded dimension equals the multiplicity of the
    /// sign representation of the white symmetric group inside the labelled
    /// chain space of the matching Chevalley–Eilenberg complex, computed by
    /// character averaging. This is the dimension-level comparison of the
    /// bicomplex with the complex built from the same blocks.
    pub fn dimensions_match_ce(&self, ce: &CeComplex) -> Result<bool> {
        if ce.arity() != self.n || ce.variant() != self.variant {
            return Err(Error::Domain("mismatched complex for comparison".into()));
        }
        for p in 0..=self.n {
            for w in 0..=self.n {
                let expected = white_multiplicity(ce, p, w, self.n)?;
                if expected != qi(self.dim(p, w) as i64) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Average of sgn(white part) times the trace of the relabelling action on
/// the degree-`p` chain space, over the group permuting whites `1..=w` and
/// blacks `w+1..=n` separately.
fn white_multiplicity(ce: &CeComplex, p: usize, w: usize, n: usize) -> Result<Q> {
    let whites: Vec<u32> = (1..=w as u32).collect();
    let blacks: Vec<u32> = (w as u32 + 1..=n as u32).collect();
    let mut total = Q::zero();
    let mut order = 0i64;
    for (wperm, wsign) in permutations_with_sign(&whites) {
        for (bperm, _) in permutations_with_sign(&blacks) {
            let mut map: BTreeMap<u32, u32> = BTreeMap::new();
            map.extend(whites.iter().copied().zip(wperm.iter().copied()));
            map.extend(blacks.iter().copied().zip(bperm.iter().copied()));
            let mut trace = Q::zero();
            for f in ce.basis(p).keys() {
                let (image, sign) = forest_action(&map, f);
                if &image == f {
                    trace += qi(sign as i64);
                }
            }
            total += trace * qi(wsign as i64);
            order += 1;
        }
    }
    Ok(total / qi(order))
}

/// Predicted dimension of the horizontal homology of the loop-free variant
/// at (0, w): the sign-multiplicity average of the character formula for
/// the degree-zero homology over the white/black relabelling group.
pub fn expected_reduced_h0(n: usize, w: usize) -> Q {
    let whites: Vec<u32> = (1..=w as u32).collect();
    let blacks: Vec<u32> = (w as u32 + 1..=n as u32).collect();
    let mut total = Q::zero();
    let mut order = 0i64;
    for (wperm, wsign) in permutations_with_sign(&whites) {
        for (bperm, _) in permutations_with_sign(&blacks) {
            let mut map: BTreeMap<u32, u32> = BTreeMap::new();
            map.extend(whites.iter().copied().zip(wperm.iter().copied()));
            map.extend(blacks.iter().copied().zip(bperm.iter().copied()));
            let parts = cycle_type(&map);
            total += qi(character_formula(&parts)) * qi(wsign as i64);
            order += 1;
        }
    }
    total / qi(order)
}

fn cycle_type(map: &BTreeMap<u32, u32>) -> Vec<usize> {
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    let mut parts = Vec::new();
    for &start in map.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut len = 0usize;
        let mut cur = start;
        loop {
            seen.insert(cur);
            len += 1;
            cur = map[&cur];
            if cur == start {
                break;
            }
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Builds the bicomplex on `n` vertices, checking that both differentials
/// square to zero and that they anticommute or commute uniformly.
pub fn build_aromatic_bicomplex(variant: CeVariant, n: usize) -> Result<AromaticBicomplex> {
    if n == 0 {
        return Err(Error::Domain("need at least one vertex".into()));
    }
    let labels: Vec<u32> = (1..=n as u32).collect();
    let shapes = partition_forests(&labels, variant.min_cycle_len())?;
    let mut keys: BTreeMap<(usize, usize), BTreeSet<OmegaKey>> = BTreeMap::new();
    for w in 0..=n {
        for (trees, aromas) in &shapes {
            if let Some((key, _)) = canonical_omega(trees, aromas, w, n)? {
                keys.entry((trees.len(), w)).or_default().insert(key);
            }
        }
    }
    let mut bases: BTreeMap<(usize, usize), BasisIndex<OmegaKey>> = BTreeMap::new();
    for p in 0..=n {
        for w in 0..=n {
            let bucket = keys
                .get(&(p, w))
                .map(|s| s.iter().cloned().collect::<Vec<_>>())
                .unwrap_or_default();
            bases.insert((p, w), BasisIndex::new(bucket));
        }
    }
    let mut dh = BTreeMap::new();
    let mut dv = BTreeMap::new();
    for (&(p, w), basis) in &bases {
        if p > 0 {
            let codomain = &bases[&(p - 1, w)];
            dh.insert(
                (p, w),
                SparseRationalMatrix::of_map(basis.keys(), codomain, |k| {
                    horizontal(variant, k, n).expect("horizontal differential")
                })?,
            );
        }
        if w < n {
            let codomain = &bases[&(p, w + 1)];
            dv.insert(
                (p, w),
                SparseRationalMatrix::of_map(basis.keys(), codomain, |k| {
                    vertical(k, n).expect("vertical differential")
                })?,
            );
        }
    }
    // d^2 = 0 for both differentials
    for (&(p, w), m) in &dh {
        if p >= 2 {
            let square = dh[&(p - 1, w)].mul(m)?;
            if let Some((i, j, _)) = square.first_nonzero() {
                return Err(Error::ComplexInvalid {
                    witness: format!("horizontal square at ({p},{w}) entry ({i},{j})"),
                });
            }
        }
    }
    for (&(p, w), m) in &dv {
        if w + 1 < n {
            let square = dv[&(p, w + 1)].mul(m)?;
            if let Some((i, j, _)) = square.first_nonzero() {
                return Err(Error::ComplexInvalid {
                    witness: format!("vertical square at ({p},{w}) entry ({i},{j})"),
                });
            }
        }
    }
    // mixed composites agree up to a uniform sign
    let mut all_anti = true;
    let mut all_comm = true;
    for (&(p, w), h) in &dh {
        if w >= n {
            continue;
        }
        let a = dv[&(p - 1, w)].mul(h)?;
        let b = dh[&(p, w + 1)].mul(&dv[&(p, w)])?;
        let mut sum = a.clone();
        let mut diff = a;
        for j in 0..b.ncols() {
            for (&i, v) in b.column(j) {
                let s = sum.get(i, j) + v;
                sum.set(i, j, s);
                let d = diff.get(i, j) - v;
                diff.set(i, j, d);
            }
        }
        if !sum.is_zero() {
            all_anti = false;
        }
        if !diff.is_zero() {
            all_comm = false;
        }
    }
    if !all_anti && !all_comm {
        return Err(Error::ComplexInvalid {
            witness: "mixed composites neither commute nor anticommute".into(),
        });
    }
    Ok(AromaticBicomplex {
        variant,
        n,
        bases,
        dh,
        dv,
        anticommute: all_anti,
    })
}
