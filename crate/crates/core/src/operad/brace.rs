//! Cyclic braces: the multilinear aroma-valued operations defined by
//! ⟨a⟩ = Div(a) and the recursion
//! ⟨a₁,…,aₙ₊₁⟩ = Σₖ ⟨a₁,…,aₖ◁aₙ₊₁,…,aₙ⟩ − ⟨a₁,…,aₙ⟩ ◂ aₙ₊₁.

use crate::error::Error;
use crate::linalg::LinComb;
use crate::rational::qi;
use crate::species::{Aroma, RootedTree};
use crate::Result;

use super::generators::{div, module_action, prelie};

fn prelie_lin(
    a: &LinComb<RootedTree>,
    b: &LinComb<RootedTree>,
) -> Result<LinComb<RootedTree>> {
    let mut out = LinComb::zero();
    for (t, c) in a.iter() {
        for (u, d) in b.iter() {
            let mut p = prelie(t, u)?;
            p.scale(&(c * d));
            out.add(&p);
        }
    }
    Ok(out)
}

fn module_action_lin(
    m: &LinComb<Aroma>,
    a: &LinComb<RootedTree>,
) -> Result<LinComb<Aroma>> {
    let mut out = LinComb::zero();
    for (w, c) in m.iter() {
        for (t, d) in a.iter() {
            let mut p = module_action(w, t)?;
            p.scale(&(c * d));
            out.add(&p);
        }
    }
    Ok(out)
}

/// Multilinear cyclic brace on linear combinations of trees.
pub fn cyclic_brace_lin(args: &[LinComb<RootedTree>]) -> Result<LinComb<Aroma>> {
    match args.split_last() {
        None => Err(Error::Domain("cyclic brace needs at least one argument".into())),
        Some((first, [])) => {
            let mut out = LinComb::zero();
            for (t, c) in first.iter() {
                let mut d = div(t);
                d.scale(c);
                out.add(&d);
            }
            Ok(out)
        }
        Some((last, head)) => {
            let mut out = LinComb::zero();
            for k in 0..head.len() {
                let mut modified: Vec<LinComb<RootedTree>> = head.to_vec();
                modified[k] = prelie_lin(&head[k], last)?;
                out.add(&cyclic_brace_lin(&modified)?);
            }
            let inner = cyclic_brace_lin(head)?;
            let mut correction = module_action_lin(&inner, last)?;
            correction.scale(&qi(-1));
            out.add(&correction);
            Ok(out)
        }
    }
}

/// Cyclic brace of disjointly-labelled trees.
pub fn cyclic_brace(args: &[RootedTree]) -> Result<LinComb<Aroma>> {
    let lifted: Vec<LinComb<RootedTree>> = args
        .iter()
        .map(|t| LinComb::term(t.clone(), qi(1)))
        .collect();
    cyclic_brace_lin(&lifted)
}
