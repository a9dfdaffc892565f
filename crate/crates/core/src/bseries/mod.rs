//! Symbolic B-series machinery: exact polynomial vector fields, elementary
//! differentials indexed by trees, aromas and aromatic trees, the divergence
//! identity, truncated modified fields, and volume obstructions.

mod coefficients;
mod elementary;
mod poly;

pub use coefficients::{modified_field, volume_obstruction, BSeriesCoefficients};
pub use elementary::{
    check_divergence_identity, elementary_differential_aroma,
    elementary_differential_aromatic_tree, elementary_differential_tree, tree_closings,
};
pub use poly::{Poly, PolyVectorField, ScalarPoly};
