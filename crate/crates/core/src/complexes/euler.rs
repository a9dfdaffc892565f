//! Euler characteristics of the reduced Chevalley–Eilenberg complex,
//! computed from chain dimensions by a convolution recurrence, and the
//! binomial identity underlying the closed form.

use num::{BigInt, One, Zero};

use crate::error::Error;
use crate::rational::{binomial, Z};
use crate::Result;

/// Number of labelled aromas on `m` vertices whose cycle length is at least
/// `min_cycle_len`, for m = 1..=max (index 0 unused).
fn aroma_counts(max: usize, min_cycle_len: usize) -> Vec<Z> {
    // a(m) = Σ_c C(m,c) · (c-1)! · c · m^(m-c-1): choose the c cycle
    // vertices, pick one of the (c-1)! directed cycles on them, and hang a
    // forest rooted at the cycle; forests on m labelled vertices with a
    // prescribed c-element root set are counted by c·m^(m-c-1)
    // (generalized Cayley formula), read as 1 when m = c.
    let mut out = vec![Z::zero(); max + 1];
    for m in 1..=max {
        let mut acc = Z::zero();
        for c in min_cycle_len..=m {
            // directed cycles on a chosen c-set: (c-1)!
            let mut cyc = Z::one();
            for k in 2..c {
                cyc *= Z::from(k as u64);
            }
            // forests rooted at the c chosen vertices: c * m^(m-c-1),
            // read as 1 when m == c
            let forests = if m == c {
                Z::one()
            } else {
                Z::from(c as u64) * Z::from(m as u64).pow((m - c - 1) as u32)
            };
            acc += binomial(m as u32, c as u32) * cyc * forests;
        }
        out[m] = acc;
    }
    out
}

/// dim C_k in arity n for the chain space of forests made of tree blocks
/// and aroma blocks: entry `[n][k]` counts forests with `k` tree
/// components. Computed by the exponential-formula recurrence on the block
/// containing the smallest label.
pub fn ce_chain_dimension_table(max_n: usize, min_cycle_len: usize) -> Vec<Vec<Z>> {
    let aromas = aroma_counts(max_n, min_cycle_len);
    let mut table: Vec<Vec<Z>> = vec![vec![Z::zero(); max_n + 1]; max_n + 1];
    table[0][0] = Z::one();
    for n in 1..=max_n {
        for k in 0..=n {
            let mut acc = Z::zero();
            for m in 1..=n {
                let choose = binomial((n - 1) as u32, (m - 1) as u32);
                // block with the smallest label is a tree on m vertices...
                if k > 0 {
                    let trees = Z::from(m as u64).pow((m - 1) as u32);
                    acc += &choose * trees * &table[n - m][k - 1];
                }
                // ...or an aroma on m vertices
                acc += &choose * &aromas[m] * &table[n - m][k];
            }
            table[n][k] = acc;
        }
    }
    table
}

/// Alternating sums of the chain dimensions of the reduced complex per
/// arity; entry `n-1` is the Euler characteristic in arity `n`, which
/// equals (n-2)^n.
pub fn euler_characteristic_series(max_n: usize) -> Result<Vec<Z>> {
    if max_n == 0 {
        return Err(Error::Domain("need at least arity one".into()));
    }
    let table = ce_chain_dimension_table(max_n, 2);
    Ok((1..=max_n)
        .map(|n| {
            let mut chi = Z::zero();
            for (k, d) in table[n].iter().enumerate() {
                if k % 2 == 0 {
                    chi += d;
                } else {
                    chi -= d;
                }
            }
            chi
        })
        .collect())
}

fn signed_pow(base: i64, exp: usize) -> Z {
    BigInt::from(base).pow(exp as u32)
}

/// Verifies (n-1)^n = Σ_{k=0}^{n} C(n,k) (k-2)^k (n+1-k)^(n-1-k) by exact
/// integer arithmetic (the k = n summand reads C(n,n)(n-2)^n).
pub fn abel_identity_holds(n: usize) -> bool {
    let lhs = signed_pow(n as i64 - 1, n);
    let mut rhs = Z::zero();
    for k in 0..=n {
        let term = if k == n {
            signed_pow(n as i64 - 2, n)
        } else {
            binomial(n as u32, k as u32)
                * signed_pow(k as i64 - 2, k)
                * signed_pow((n + 1 - k) as i64, n - 1 - k)
        };
        rhs += term;
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{build_ce_complex, CeVariant};

    #[test]
    fn chain_tables_match_built_complexes() {
        let full = ce_chain_dimension_table(3, 1);
        let reduced = ce_chain_dimension_table(3, 2);
        for n in 1..=3usize {
            let cf = build_ce_complex(CeVariant::Full, n).unwrap();
            let cr = build_ce_complex(CeVariant::Reduced, n).unwrap();
            for k in 0..=n {
                assert_eq!(full[n][k], Z::from(cf.complex().chain_dimensions()[k] as u64));
                assert_eq!(
                    reduced[n][k],
                    Z::from(cr.complex().chain_dimensions()[k] as u64)
                );
            }
        }
    }

    #[test]
    fn euler_series_matches_closed_form() {
        let chi = euler_characteristic_series(8).unwrap();
        for n in 1..=8usize {
            assert_eq!(chi[n - 1], signed_pow(n as i64 - 2, n), "arity {n}");
        }
    }

    #[test]
    fn abel_identity_small_and_large() {
        for n in 1..=20 {
            assert!(abel_identity_holds(n), "identity fails at n = {n}");
        }
    }
}
