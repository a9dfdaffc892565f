//! Randomized property tests for the exact linear algebra and the algebraic
//! identities on randomly generated labelled trees.

use std::collections::BTreeMap;

use aromalab_core::linalg::{LinComb, Solver, SparseRationalMatrix};
use aromalab_core::operad::{div, lie_bracket, module_action, prelie, tau};
use aromalab_core::rational::{qi, Q};
use aromalab_core::species::{Aroma, RootedTree};
use proptest::prelude::*;

// ---- generators ------------------------------------------------------------

/// A sparse rational matrix with small integer entries.
fn matrix_strategy() -> impl Strategy<Value = SparseRationalMatrix> {
    (1usize..6, 1usize..6)
        .prop_flat_map(|(nrows, ncols)| {
            proptest::collection::vec(-3i64..=3, nrows * ncols)
                .prop_map(move |entries| {
                    let mut cols: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); ncols];
                    for (pos, &e) in entries.iter().enumerate() {
                        if e != 0 {
                            cols[pos % ncols].insert(pos / ncols, qi(e));
                        }
                    }
                    SparseRationalMatrix::from_columns(nrows, cols).unwrap()
                })
        })
}

/// A uniformly-shaped random recursive tree on the given labels: vertex k
/// attaches below one of the earlier vertices, then the labels are shuffled
/// by the provided permutation seeds.
fn tree_strategy(labels: &'static [u32]) -> impl Strategy<Value = RootedTree> {
    let n = labels.len();
    proptest::collection::vec(0usize..n.max(1), n.saturating_sub(1))
        .prop_map(move |choices| {
            let mut parent = BTreeMap::new();
            for (k, &c) in choices.iter().enumerate() {
                // attach vertex k+1 below one of 0..=k
                parent.insert(labels[k + 1], labels[c % (k + 1)]);
            }
            RootedTree::new(labels[0], parent).unwrap()
        })
}

fn prelie_lin(a: &LinComb<RootedTree>, b: &RootedTree) -> LinComb<RootedTree> {
    let mut out = LinComb::zero();
    for (t, c) in a.iter() {
        let mut p = prelie(t, b).unwrap();
        p.scale(c);
        out.add(&p);
    }
    out
}

fn module_lin(m: &LinComb<Aroma>, a: &RootedTree) -> LinComb<Aroma> {
    let mut out = LinComb::zero();
    for (w, c) in m.iter() {
        let mut p = module_action(w, a).unwrap();
        p.scale(c);
        out.add(&p);
    }
    out
}

fn bracket_lin(a: &LinComb<RootedTree>, b: &LinComb<RootedTree>) -> LinComb<RootedTree> {
    let mut out = LinComb::zero();
    for (t, c) in a.iter() {
        for (u, d) in b.iter() {
            let mut p = lie_bracket(t, u).unwrap();
            p.scale(&(c * d));
            out.add(&p);
        }
    }
    out
}

// ---- linear algebra --------------------------------------------------------

proptest! {
    #[test]
    fn rank_plus_nullity_is_column_count(m in matrix_strategy()) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.ncols());
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in matrix_strategy()) {
        for v in m.kernel_basis() {
            prop_assert!(!v.is_empty());
            prop_assert!(m.apply(&v).is_empty());
        }
    }

    #[test]
    fn solver_solutions_reproduce_the_image(m in matrix_strategy(),
                                            coeffs in proptest::collection::vec(-2i64..=2, 5)) {
        // a right-hand side taken from the image must be solvable, and the
        // solution must multiply back to it
        let mut b: BTreeMap<usize, Q> = BTreeMap::new();
        for (j, &c) in coeffs.iter().take(m.ncols()).enumerate() {
            if c != 0 {
                for (&i, e) in m.column(j) {
                    let entry = b.entry(i).or_insert_with(|| qi(0));
                    *entry = &*entry + &(e * qi(c));
                }
            }
        }
        b.retain(|_, v| !num::Zero::is_zero(v));
        let solver = Solver::new(&m);
        let x = solver.solve(&b);
        prop_assert!(x.is_some());
        prop_assert_eq!(m.apply(&x.unwrap()), b);
    }

    #[test]
    fn solver_rejects_vectors_outside_the_image(m in matrix_strategy()) {
        // appending a unit coordinate past the row space cannot be solvable
        let mut b = BTreeMap::new();
        b.insert(m.nrows(), qi(1));
        let extended = SparseRationalMatrix::from_columns(
            m.nrows() + 1,
            (0..m.ncols()).map(|j| m.column(j).clone()).collect(),
        ).unwrap();
        prop_assert!(Solver::new(&extended).solve(&b).is_none());
    }
}

// ---- algebraic identities on random trees ----------------------------------

static LABELS_A: &[u32] = &[1, 2, 3];
static LABELS_B: &[u32] = &[4, 5, 6];
static LABELS_C: &[u32] = &[7, 8, 9];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prelie_associator_is_right_symmetric(a in tree_strategy(LABELS_A),
                                            b in tree_strategy(LABELS_B),
                                            c in tree_strategy(LABELS_C)) {
        let assoc = |x: &RootedTree, y: &RootedTree, z: &RootedTree| {
            let mut left = prelie_lin(&prelie(x, y).unwrap(), z);
            let yz = prelie(y, z).unwrap();
            let mut right = LinComb::zero();
            for (t, coeff) in yz.iter() {
                let mut p = prelie(x, t).unwrap();
                p.scale(coeff);
                right.add(&p);
            }
            left.sub(&right);
            left
        };
        prop_assert_eq!(assoc(&a, &b, &c), assoc(&a, &c, &b));
    }

    #[test]
    fn bracket_satisfies_jacobi(a in tree_strategy(LABELS_A),
                                b in tree_strategy(LABELS_B),
                                c in tree_strategy(LABELS_C)) {
        let lift = |t: &RootedTree| LinComb::term(t.clone(), qi(1));
        let mut total = bracket_lin(&bracket_lin(&lift(&a), &lift(&b)), &lift(&c));
        total.add(&bracket_lin(&bracket_lin(&lift(&b), &lift(&c)), &lift(&a)));
        total.add(&bracket_lin(&bracket_lin(&lift(&c), &lift(&a)), &lift(&b)));
        prop_assert!(total.is_zero());
    }

    #[test]
    fn grafting_commutes_with_relabelling(a in tree_strategy(LABELS_A),
                                          b in tree_strategy(LABELS_B),
                                          shift in 10u32..100) {
        let sigma: BTreeMap<u32, u32> = (1..=6).map(|l| (l, l + shift)).collect();
        let direct = prelie(&a.relabel(&sigma).unwrap(), &b.relabel(&sigma).unwrap()).unwrap();
        let mut transported = LinComb::zero();
        for (t, c) in prelie(&a, &b).unwrap().iter() {
            transported.add_term(t.relabel(&sigma).unwrap(), c.clone());
        }
        prop_assert_eq!(direct, transported);
    }

    #[test]
    fn divergence_module_cocycle(a in tree_strategy(LABELS_A),
                                 b in tree_strategy(LABELS_B)) {
        // Div([a,b]) = Div(a) ◂ b − Div(b) ◂ a
        let div_lin = |x: &LinComb<RootedTree>| {
            let mut out = LinComb::zero();
            for (t, c) in x.iter() {
                let mut d = div(t);
                d.scale(c);
                out.add(&d);
            }
            out
        };
        let lift = |t: &RootedTree| LinComb::term(t.clone(), qi(1));
        let left = div_lin(&bracket_lin(&lift(&a), &lift(&b)));
        let mut right = module_lin(&div(&a), &b);
        right.sub(&module_lin(&div(&b), &a));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn root_loop_cocycle(a in tree_strategy(LABELS_A),
                         b in tree_strategy(LABELS_B)) {
        // τ([a,b]) = τ(a) ◂ b − τ(b) ◂ a
        let tau_lin = |x: &LinComb<RootedTree>| {
            let mut out = LinComb::zero();
            for (t, c) in x.iter() {
                out.add_term(tau(t), c.clone());
            }
            out
        };
        let lift = |t: &RootedTree| LinComb::term(t.clone(), qi(1));
        let left = tau_lin(&bracket_lin(&lift(&a), &lift(&b)));
        let mut right = module_lin(&LinComb::term(tau(&a), qi(1)), &b);
        right.sub(&module_lin(&LinComb::term(tau(&b), qi(1)), &a));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn module_action_respects_the_bracket(a in tree_strategy(LABELS_A),
                                          b in tree_strategy(LABELS_B),
                                          seed in 0u32..3) {
        let m = match seed {
            0 => Aroma::tadpole(20),
            1 => Aroma::cycle_of(&[20, 21]).unwrap(),
            _ => Aroma::cycle_of(&[20, 21, 22]).unwrap(),
        };
        let mut via_bracket = LinComb::zero();
        for (t, c) in lie_bracket(&a, &b).unwrap().iter() {
            let mut p = module_action(&m, t).unwrap();
            p.scale(c);
            via_bracket.add(&p);
        }
        let mut iterated = module_lin(&module_action(&m, &a).unwrap(), &b);
        iterated.sub(&module_lin(&module_action(&m, &b).unwrap(), &a));
        prop_assert_eq!(via_bracket, iterated);
    }
}
