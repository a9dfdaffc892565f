//! Exact computational algebra for rooted trees, aromas (directed cycles of
//! rooted trees), and aromatic forests: operadic compositions, divergence
//! maps, Chevalley–Eilenberg and aromatic bicomplexes, and symbolic B-series
//! elementary differentials, all over arbitrary-precision rationals.

pub mod bseries;
pub mod complexes;
pub mod error;
pub mod linalg;
pub mod operad;
pub mod par;
pub mod rational;
pub mod species;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
