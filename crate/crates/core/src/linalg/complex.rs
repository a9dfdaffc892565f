use crate::error::Error;
use crate::rational::format_q;
use crate::Result;

use super::matrix::SparseRationalMatrix;

/// A bounded chain complex given by its differentials. `differentials[k]`
/// maps degree `k+1` to degree `k`; chain dimensions are read off the matrix
/// shapes. Construction verifies that consecutive differentials compose to
/// zero and that the shapes are compatible.
#[derive(Clone, Debug)]
pub struct ChainComplexSpec {
    /// Dimension of the degree-`k` chain space.
    dims: Vec<usize>,
    /// `differentials[k]`: C_{k+1} -> C_k.
    differentials: Vec<SparseRationalMatrix>,
}

impl ChainComplexSpec {
    /// Builds a complex from the chain dimensions of degrees `0..=top` and
    /// the differentials `d_{k+1}: C_{k+1} -> C_k` for `k = 0..top`.
    pub fn new(dims: Vec<usize>, differentials: Vec<SparseRationalMatrix>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Domain("complex needs at least one degree".into()));
        }
        if differentials.len() + 1 != dims.len() {
            return Err(Error::Domain(format!(
                "{} degrees need {} differentials, got {}",
                dims.len(),
                dims.len() - 1,
                differentials.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.nrows() != dims[k] || d.ncols() != dims[k + 1] {
                return Err(Error::Domain(format!(
                    "differential into degree {k} has shape {}x{}, expected {}x{}",
                    d.nrows(),
                    d.ncols(),
                    dims[k],
                    dims[k + 1]
                )));
            }
        }
        for k in 0..differentials.len().saturating_sub(1) {
            let square = differentials[k].mul(&differentials[k + 1])?;
            if let Some((i, j, v)) = square.first_nonzero() {
                return Err(Error::ComplexInvalid {
                    witness: format!(
                        "(d_{} . d_{})[{i},{j}] = {}",
                        k + 1,
                        k + 2,
                        format_q(&v)
                    ),
                });
            }
        }
        Ok(ChainComplexSpec {
            dims,
            differentials,
        })
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn chain_dimensions(&self) -> &[usize] {
        &self.dims
    }

    pub fn differential(&self, k: usize) -> Option<&SparseRationalMatrix> {
        self.differentials.get(k)
    }

    /// Homology dimension in each degree: dim C_k - rank d_k - rank d_{k+1},
    /// where d_k: C_k -> C_{k-1}.
    pub fn homology_dimensions(&self) -> Vec<usize> {
        let ranks: Vec<usize> = crate::par::map_collect(&self.differentials, |d| d.rank());
        (0..self.dims.len())
            .map(|k| {
                let out_rank = if k == 0 { 0 } else { ranks[k - 1] };
                let in_rank = ranks.get(k).copied().unwrap_or(0);
                self.dims[k] - out_rank - in_rank
            })
            .collect()
    }

    /// Euler characteristic: alternating sum of chain dimensions, which
    /// equals the alternating sum of homology dimensions.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}
