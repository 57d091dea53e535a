//! Exact algebraic checks on a sequence: the two determinant relations
//! through the bracket `[y, y, z]`, and recovery of the generating matrix.

use std::io::Write;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{bracket, det3, IntTriple, Matrix2};
use crate::error::{Error, Result};
use crate::extremal::ExtremalSequence;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationRow {
    pub i: usize,
    /// `det(y_i, y_{i+1}, [y_{i+3}, y_{i+3}, y_{i+4}])`.
    pub first: BigInt,
    /// `det(y_{i+1}, y_{i+2}, [y_{i+3}, y_{i+3}, y_{i+4}])`.
    pub second: BigInt,
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub rows: Vec<RelationRow>,
    /// Smallest `i` from which both determinants vanish on every covered row.
    pub i0: Option<usize>,
}

/// The two relations at `(y_i, …, y_{i+4})`.
pub fn relation_values(w: &[IntTriple]) -> (BigInt, BigInt) {
    let b = bracket(&w[3], &w[4]);
    (det3(&w[0], &w[1], &b), det3(&w[1], &w[2], &b))
}

/// Evaluates both relations for every `i` with `i + 4` in range.
pub fn relation_check(seq: &ExtremalSequence) -> Result<RelationReport> {
    if seq.len() < 5 {
        return Err(Error::InsufficientTerms("the relations need five consecutive terms".into()));
    }
    let rows: Vec<RelationRow> = seq
        .triples()
        .windows(5)
        .enumerate()
        .map(|(k, w)| {
            let (first, second) = relation_values(w);
            RelationRow { i: k + 1, first, second }
        })
        .collect();
    let i0 = match rows.iter().rposition(|r| !r.first.is_zero() || !r.second.is_zero()) {
        None => Some(1),
        Some(k) if k + 1 < rows.len() => Some(rows[k + 1].i),
        Some(_) => None,
    };
    Ok(RelationReport { rows, i0 })
}

impl RelationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": "relations",
            "i0": self.i0,
            "rows": self.rows.iter().map(|r| json!({
                "i": r.i,
                "first": r.first.to_string(),
                "second": r.second.to_string(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["i", "first", "second"])?;
        for r in &self.rows {
            out.write_record([r.i.to_string(), r.first.to_string(), r.second.to_string()])?;
        }
        out.flush()?;
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct MatrixRecovery {
    /// Lexicographically smallest of `±M`, `±Mᵗ`.
    pub canonical: Matrix2,
    /// `M` as read from term 3, before canonicalization.
    pub recovered: Matrix2,
    /// Indices `t` whose solve was checked.
    pub checked: Vec<usize>,
}

fn primitive_sign(m: &Matrix2) -> Matrix2 {
    let g = m.content();
    let p = Matrix2::from_entries(m.entries().map(|v| v / &g));
    let first = p.entries().into_iter().find(|v| !v.is_zero()).cloned().unwrap_or_default();
    if first.is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Lexicographically smallest entry tuple among `±M`, `±Mᵗ`.
pub fn canonical_matrix(m: &Matrix2) -> Matrix2 {
    let t = m.transpose();
    [m.clone(), m.neg(), t.neg(), t]
        .into_iter()
        .min_by(|a, b| a.entries().cmp(&b.entries()))
        .expect("four candidates")
}

/// Solves `y_t ∝ y_{t−1}·S·y_{t−2}` for `S` at every `t ≥ 3`: with
/// `N_t = Adj(y_{t−1})·y_t·Adj(y_{t−2})` one has `N_t ∝ S`. Odd `t` give `M`,
/// even `t` give `Mᵗ`; all must agree up to sign.
pub fn matrix_recovery(seq: &ExtremalSequence) -> Result<MatrixRecovery> {
    if seq.len() < 3 {
        return Err(Error::InsufficientTerms("matrix recovery needs three terms".into()));
    }
    let mut first: Option<(usize, Matrix2)> = None;
    let mut checked = Vec::new();
    for t in 3..=seq.len() {
        let (a, b, c) = (seq.term(t - 2).unwrap(), seq.term(t - 1).unwrap(), seq.term(t).unwrap());
        if a.det2().is_zero() || b.det2().is_zero() {
            return Err(Error::SingularTerm { index: if b.det2().is_zero() { t - 1 } else { t - 2 } });
        }
        let n = &(&b.to_matrix().adjoint() * &c.to_matrix()) * &a.to_matrix().adjoint();
        if n.entries().iter().all(|v| v.is_zero()) {
            return Err(Error::SingularTerm { index: t });
        }
        let s = primitive_sign(&n);
        let m = if ExtremalSequence::uses_transpose(t) { s.transpose() } else { s };
        match &first {
            None => first = Some((t, m)),
            Some((t0, m0)) => {
                if primitive_sign(&m) != primitive_sign(m0) {
                    return Err(Error::InconsistentRecovery { first: *t0, second: t });
                }
            }
        }
        checked.push(t);
    }
    let (_, recovered) = first.expect("at least one index");
    Ok(MatrixRecovery { canonical: canonical_matrix(&recovered), recovered, checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{example_two_seed, fibonacci_seed, Seed};

    #[test]
    fn relations_vanish_on_both_families() {
        for seed in [fibonacci_seed(1, 2).unwrap(), example_two_seed(2).unwrap(), example_two_seed(3).unwrap()] {
            let s = ExtremalSequence::generate(seed, 16).unwrap();
            let r = relation_check(&s).unwrap();
            assert!(r.i0.is_some_and(|i| i <= 3), "{:?}", r.i0);
        }
    }

    #[test]
    fn perturbed_window_breaks_relation() {
        let s = ExtremalSequence::generate(fibonacci_seed(1, 2).unwrap(), 8).unwrap();
        let mut w: Vec<IntTriple> = s.triples()[2..7].to_vec();
        assert_eq!(relation_values(&w), (BigInt::zero(), BigInt::zero()));
        w[4] = IntTriple::new(17, -5, 3);
        let (a, _) = relation_values(&w);
        assert!(!a.is_zero());
    }

    #[test]
    fn recovers_generating_matrices() {
        let s = ExtremalSequence::generate(fibonacci_seed(1, 2).unwrap(), 10).unwrap();
        let r = matrix_recovery(&s).unwrap();
        assert_eq!(r.canonical, canonical_matrix(&Matrix2::new(3, 1, 2, 1)));
        for a in 1..5 {
            let s = ExtremalSequence::generate(example_two_seed(a).unwrap(), 10).unwrap();
            let r = matrix_recovery(&s).unwrap();
            assert_eq!(r.canonical, canonical_matrix(&Matrix2::new(a as i64, 1, -1, 0)));
        }
    }

    #[test]
    fn transposed_seed_gives_same_class() {
        // dropping the first term swaps the parity, so Mᵗ generates the rest
        let seed = fibonacci_seed(1, 2).unwrap();
        let s = ExtremalSequence::generate(seed.clone(), 9).unwrap();
        let shifted = Seed::new(seed.m.transpose(), s.triples()[1].clone(), s.triples()[2].clone());
        let t = ExtremalSequence::generate(shifted, 8).unwrap();
        assert_eq!(t.triples(), &s.triples()[1..]);
        let (a, b) = (matrix_recovery(&s).unwrap(), matrix_recovery(&t).unwrap());
        assert_eq!(b.recovered, a.recovered.transpose());
        assert_eq!(a.canonical, b.canonical);
    }

    #[test]
    fn inconsistent_terms_are_reported() {
        let s = ExtremalSequence::generate(example_two_seed(2).unwrap(), 8).unwrap();
        let mut tampered = s.triples().to_vec();
        tampered[6] = IntTriple::new(1, 2, 5);
        let seq = ExtremalSequence::from_parts_unchecked(s.seed().clone(), tampered);
        assert!(matches!(matrix_recovery(&seq), Err(Error::InconsistentRecovery { .. })));
    }
}
