//! Sparse multivariate integer polynomials in the variables `u_{j,ℓ}`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Map from exponent vectors (`3·j + ℓ` indexing) to nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparsePoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    /// The variable `u_{j,ℓ}` in a ring with `k + 1` vector variables.
    pub fn var(k: usize, j: usize, l: usize) -> Self {
        let nvars = 3 * (k + 1);
        let mut e = vec![0; nvars];
        e[3 * j + l] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, BigInt::one());
        SparsePoly { nvars, terms }
    }

    /// The vector `u_j = (u_{j,0}, u_{j,1}, u_{j,2})`.
    pub fn vector(k: usize, j: usize) -> [SparsePoly; 3] {
        [0, 1, 2].map(|l| SparsePoly::var(k, j, l))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Evaluates at integer values, `values[3·j + ℓ]`.
    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(values).fold(c.clone(), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize))
            })
            .sum()
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;

    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;

    fn sub(mut self, rhs: SparsePoly) -> SparsePoly {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
        self
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;

    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars.max(rhs.nvars));
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let x = SparsePoly::var(1, 0, 1);
        let y = SparsePoly::var(1, 1, 2);
        let p = (x.clone() + y.clone()) * (x.clone() - y.clone()) - (x.clone() * x) + (y.clone() * y);
        assert!(p.is_zero());
    }

    #[test]
    fn evaluation() {
        let x = SparsePoly::var(0, 0, 0);
        let z = SparsePoly::var(0, 0, 2);
        let p = x.clone() * x * z.clone() - z;
        let v: Vec<BigInt> = [3, 5, 7].map(BigInt::from).to_vec();
        assert_eq!(p.eval(&v), BigInt::from(9 * 7 - 7));
    }
}
