//! Homological machinery: the Chevalley–Eilenberg complexes attached to the
//! divergence and reduced-divergence dg Lie structures on trees and aromas,
//! the aromatic bicomplex and its loop-free quotient, undirected graph
//! complexes, Euler-characteristic series, and character checks.

mod bicomplex;
mod ce;
mod character;
mod euler;
mod graphs;

pub use bicomplex::{build_aromatic_bicomplex, expected_reduced_h0, AromaticBicomplex, OmegaKey};
pub use ce::{build_ce_complex, ce_basis_forests, ce_differential, CeComplex, CeVariant};
pub use character::{character_check, character_formula, CharacterCheck, CharacterReport};
pub use euler::{abel_identity_holds, ce_chain_dimension_table, euler_characteristic_series};
pub use graphs::{build_graph_complex, GraphComplex, GraphKey, GraphVariant};
