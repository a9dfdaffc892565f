//! Exact multivariate polynomials over the rationals, and polynomial vector
//! fields. Polynomials store a map from exponent vectors to nonzero
//! coefficients; all arithmetic is exact.

use std::collections::BTreeMap;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::rational::{qi, Q};
use crate::Result;

/// A polynomial in `vars` variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

/// Scalar polynomial values of aroma differentials.
pub type ScalarPoly = Poly;

impl Poly {
    pub fn zero(vars: usize) -> Self {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Q) -> Self {
        let mut p = Poly::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    /// The variable `y_i` (zero-based).
    pub fn var(vars: usize, i: usize) -> Self {
        let mut exps = vec![0; vars];
        exps[i] = 1;
        let mut p = Poly::zero(vars);
        p.add_term(exps, qi(1));
        p
    }

    pub fn monomial(vars: usize, exps: Vec<u32>, c: Q) -> Result<Self> {
        if exps.len() != vars {
            return Err(Error::Domain(format!(
                "exponent vector of length {} for {} variables",
                exps.len(),
                vars
            )));
        }
        let mut p = Poly::zero(vars);
        p.add_term(exps, c);
        Ok(p)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.vars);
        }
        Poly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.vars.max(other.vars));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = vec![0u32; out.vars];
                for (i, &x) in e1.iter().enumerate() {
                    e[i] += x;
                }
                for (i, &x) in e2.iter().enumerate() {
                    e[i] += x;
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * qi(e[i] as i64));
        }
        out
    }

    /// Reinterprets the polynomial in a larger variable set (new variables
    /// appended with exponent zero).
    pub fn lift(&self, vars: usize) -> Result<Poly> {
        if vars < self.vars {
            return Err(Error::Domain("cannot drop variables".into()));
        }
        Ok(Poly {
            vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.resize(vars, 0);
                    (e2, c.clone())
                })
                .collect(),
        })
    }

    /// Multiplies by the `k`-th power of variable `i`.
    pub fn mul_var_pow(&self, i: usize, k: u32) -> Poly {
        Poly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2[i] += k;
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    pub fn eval(&self, point: &[Q]) -> Result<Q> {
        if point.len() != self.vars {
            return Err(Error::Domain(format!(
                "point of dimension {} for {} variables",
                point.len(),
                self.vars
            )));
        }
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        Ok(acc)
    }
}

/// A vector field on `dimension`-dimensional space with polynomial
/// components. Components may involve extra formal variables beyond the
/// coordinates (used for the step-size parameter of modified fields).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    dimension: usize,
    components: Vec<Poly>,
}

impl PolyVectorField {
    pub fn new(dimension: usize, components: Vec<Poly>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Domain("dimension must be positive".into()));
        }
        if components.len() != dimension {
            return Err(Error::Domain(format!(
                "{} components for dimension {}",
                components.len(),
                dimension
            )));
        }
        let vars = components.first().map_or(dimension, Poly::vars);
        if vars < dimension || components.iter().any(|p| p.vars() != vars) {
            return Err(Error::Domain("inconsistent variable counts".into()));
        }
        Ok(PolyVectorField {
            dimension,
            components,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vars(&self) -> usize {
        self.components[0].vars()
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.components[i]
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn zero_field(dimension: usize, vars: usize) -> Result<Self> {
        PolyVectorField::new(dimension, vec![Poly::zero(vars); dimension])
    }

    pub fn add(&self, other: &PolyVectorField) -> Result<PolyVectorField> {
        if self.dimension != other.dimension || self.vars() != other.vars() {
            return Err(Error::Domain("mismatched vector fields".into()));
        }
        PolyVectorField::new(
            self.dimension,
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &PolyVectorField) -> Result<PolyVectorField> {
        if self.dimension != other.dimension || self.vars() != other.vars() {
            return Err(Error::Domain("mismatched vector fields".into()));
        }
        PolyVectorField::new(
            self.dimension,
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Q) -> PolyVectorField {
        PolyVectorField {
            dimension: self.dimension,
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// The linear field `y ↦ A y` for a square rational matrix given by rows.
    pub fn linear(rows: &[Vec<Q>]) -> Result<PolyVectorField> {
        let d = rows.len();
        let mut components = Vec::new();
        for row in rows {
            if row.len() != d {
                return Err(Error::Domain("non-square matrix".into()));
            }
            let mut p = Poly::zero(d);
            for (j, c) in row.iter().enumerate() {
                p = p.add(&Poly::var(d, j).scale(c));
            }
            components.push(p);
        }
        PolyVectorField::new(d, components)
    }

    /// A dense pseudo-random field: every monomial of total degree at most
    /// three in every component, with integer coefficients in −3..=3 drawn
    /// from a seeded generator. Deterministic for a fixed seed.
    pub fn random_cubic(dimension: usize, seed: u64) -> Result<PolyVectorField> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let monomials = monomials_up_to_degree(dimension, 3);
        let mut components = Vec::new();
        for _ in 0..dimension {
            let mut p = Poly::zero(dimension);
            for m in &monomials {
                let c: i64 = rng.gen_range(-3..=3);
                p.add_term(m.clone(), qi(c));
            }
            components.push(p);
        }
        PolyVectorField::new(dimension, components)
    }

    /// The divergence Σ_i ∂_i f^i.
    pub fn divergence(&self) -> Poly {
        let mut out = Poly::zero(self.vars());
        for (i, p) in self.components.iter().enumerate() {
            out = out.add(&p.partial(i));
        }
        out
    }

    pub fn eval(&self, point: &[Q]) -> Result<Vec<Q>> {
        self.components.iter().map(|p| p.eval(point)).collect()
    }
}

fn monomials_up_to_degree(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(vars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == vars {
            out.push(prefix.clone());
            return;
        }
        for k in 0..=left {
            prefix.push(k);
            rec(vars, left - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, degree, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn arithmetic_and_derivatives() {
        // p = x^2 y + 3 y
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.mul(&x).mul(&y).add(&y.scale(&qi(3)));
        assert_eq!(p.partial(0), x.mul(&y).scale(&qi(2)));
        assert_eq!(p.partial(1), x.mul(&x).add(&Poly::constant(2, qi(3))));
        assert_eq!(p.eval(&[qi(2), q(1, 2)]).unwrap(), q(7, 2));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn divergence_of_linear_field() {
        let a = PolyVectorField::linear(&[
            vec![qi(1), qi(2)],
            vec![qi(3), qi(4)],
        ])
        .unwrap();
        assert_eq!(a.divergence(), Poly::constant(2, qi(5)));
    }

    #[test]
    fn random_field_is_deterministic_and_dense() {
        let f1 = PolyVectorField::random_cubic(3, 7).unwrap();
        let f2 = PolyVectorField::random_cubic(3, 7).unwrap();
        assert_eq!(f1, f2);
        let f3 = PolyVectorField::random_cubic(3, 8).unwrap();
        assert_ne!(f1, f3);
        // dense support: plenty of monomials survive the random draw
        assert!(f1.component(0).terms().count() > 10);
    }

    #[test]
    fn lift_and_step_variable() {
        let p = Poly::var(2, 0);
        let lifted = p.lift(3).unwrap();
        assert_eq!(lifted.vars(), 3);
        let with_h = lifted.mul_var_pow(2, 2);
        assert_eq!(
            with_h.eval(&[qi(5), qi(0), qi(2)]).unwrap(),
            qi(20)
        );
    }
}
