//! The operad of rooted trees and its two-coloured extensions: grafting
//! compositions, pre-Lie / Lie / right-module operations, divergence maps,
//! cyclic braces, the generated suboperad of aromas, and Lie-element tests.

mod brace;
mod compose;
mod generators;
mod lie;
mod span;

pub use brace::{cyclic_brace, cyclic_brace_lin};
pub use compose::compose_at;
pub use generators::{
    div, div0, lie_bracket, module_action, module_action_marked, prelie, tau,
    unlabelled_div0_matrix,
};
pub use lie::{is_lie_element, lie_basis, LieCriterion};
pub use span::{aroma_span_basis, suboperad_span_dimension};
