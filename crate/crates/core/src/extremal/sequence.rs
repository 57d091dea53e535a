//! The recurrence `y_t = ρ_t · y_{t−1}·S·y_{t−2}`.
//!
//! Terms are numbered from 1. For `t ≥ 3`, `S = M` when `t` is odd and
//! `S = Mᵗ` when `t` is even. Each term is the primitive, sign-normalized
//! reduction of the product and `ρ_t` records the exact factor.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{parse_decimal, symmetric_sandwich, to_decimal, IntTriple, Matrix2};
use crate::error::{Error, Result};
use crate::par::{ordered_map, Execution};

use super::seed::Seed;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalSequence {
    seed: Seed,
    triples: Vec<IntTriple>,
    /// `rhos[k]` is the factor of term `k + 3`.
    rhos: Vec<BigRational>,
}

impl ExtremalSequence {
    /// The sequence holding just `y1` and `y2`.
    pub fn new(seed: Seed) -> Self {
        let triples = vec![seed.y1.clone(), seed.y2.clone()];
        ExtremalSequence { seed, triples, rhos: Vec::new() }
    }

    /// The first `terms` terms (at least two).
    pub fn generate(seed: Seed, terms: usize) -> Result<Self> {
        let mut s = ExtremalSequence::new(seed);
        s.extend(terms.saturating_sub(2))?;
        Ok(s)
    }

    /// A sequence with arbitrary terms, for exercising the checkers.
    #[cfg(test)]
    pub(crate) fn from_parts_unchecked(seed: Seed, triples: Vec<IntTriple>) -> Self {
        let rhos = vec![BigRational::one(); triples.len().saturating_sub(2)];
        ExtremalSequence { seed, triples, rhos }
    }

    /// The first `terms` terms (at least two).
    pub fn truncated(&self, terms: usize) -> Self {
        let n = terms.max(2).min(self.triples.len());
        ExtremalSequence {
            seed: self.seed.clone(),
            triples: self.triples[..n].to_vec(),
            rhos: self.rhos[..n - 2].to_vec(),
        }
    }

    pub fn seed(&self) -> &Seed {
        &self.seed
    }

    pub fn matrix(&self) -> &Matrix2 {
        &self.seed.m
    }

    /// All terms; index 0 holds `y1`.
    pub fn triples(&self) -> &[IntTriple] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Term `y_t`, 1-based.
    pub fn term(&self, t: usize) -> Option<&IntTriple> {
        t.checked_sub(1).and_then(|i| self.triples.get(i))
    }

    /// Factors `ρ_3, ρ_4, …`.
    pub fn rhos(&self) -> &[BigRational] {
        &self.rhos
    }

    /// Whether term `t` is produced with `Mᵗ` rather than `M`.
    pub fn uses_transpose(t: usize) -> bool {
        t.is_multiple_of(2)
    }

    /// The matrix `S` producing term `t`.
    pub fn step_matrix(&self, t: usize) -> Matrix2 {
        if Self::uses_transpose(t) {
            self.seed.m.transpose()
        } else {
            self.seed.m.clone()
        }
    }

    /// Appends `count` terms.
    pub fn extend(&mut self, count: usize) -> Result<()> {
        if count == 0 {
            return Ok(());
        }
        let (m, mt) = (self.seed.m.clone(), self.seed.m.transpose());
        let det_m = m.det();
        let n = self.triples.len();
        // det2 of the last two terms, carried forward with
        // det2(y_t) = det2(y_{t−1})·det(S)·det2(y_{t−2}) / g²
        let (mut d_prev, mut d_last) = (self.triples[n - 2].det2(), self.triples[n - 1].det2());
        self.triples.reserve(count);
        for _ in 0..count {
            let t = self.triples.len() + 1;
            let s = if Self::uses_transpose(t) { &mt } else { &m };
            let (a, b) = (&self.triples[t - 2], &self.triples[t - 3]);
            let raw = symmetric_sandwich(a, s, b).ok_or(Error::NonSymmetricProduct { index: t })?;
            // g² divides det(prod) = det(a)·det(S)·det(b), so the content
            // is found from a small gcd even when the terms are huge
            let bound = &d_last * &det_m * &d_prev;
            if bound.is_zero() || raw.is_zero() {
                return Err(Error::SingularTerm { index: t });
            }
            let g = raw.content_dividing(&bound);
            let d_new = &bound / (&g * &g);
            let (y, factor) = raw.primitive_with_content(g);
            self.rhos.push(BigRational::new(BigInt::one(), factor));
            self.triples.push(y);
            d_prev = std::mem::replace(&mut d_last, d_new);
        }
        Ok(())
    }

    /// Checks `den(ρ_t)·y_t = num(ρ_t)·(y_{t−1}·S·y_{t−2})` and primitivity
    /// for every stored term.
    pub fn check_recurrence(&self) -> Result<()> {
        if self.triples.first() != Some(&self.seed.y1) || self.triples.get(1) != Some(&self.seed.y2) {
            return Err(Error::InvalidInput("first two terms differ from the seed".into()));
        }
        if self.rhos.len() + 2 != self.triples.len() {
            return Err(Error::InvalidInput("one factor per generated term expected".into()));
        }
        let steps: Vec<usize> = (3..=self.triples.len()).collect();
        let ok = ordered_map(steps, Execution::default(), |t| {
            let prod = crate::arith::sandwich(&self.triples[t - 2], &self.step_matrix(t), &self.triples[t - 3]);
            let raw = IntTriple::from_symmetric(&prod).ok_or(Error::NonSymmetricProduct { index: t })?;
            let rho = &self.rhos[t - 3];
            let y = &self.triples[t - 1];
            if y.scale(rho.denom()) != raw.scale(rho.numer()) || !y.is_primitive() {
                return Err(Error::InvalidInput(format!("term {t} does not follow the recurrence")));
            }
            Ok(())
        });
        ok.into_iter().collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&SequenceFile::from(self))?)
    }

    /// Reads a sequence and checks it against its own seed.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: SequenceFile = serde_json::from_str(text)?;
        let seq = file.into_sequence()?;
        seq.check_recurrence()?;
        Ok(seq)
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()? + "\n")?;
        Ok(())
    }

    pub fn read_json(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text).map_err(|e| match e {
            Error::Json(j) => Error::Parse(format!("{}: {j}", path.display())),
            other => other,
        })
    }
}

/// On-disk form; every integer is a decimal string.
#[derive(Serialize, Deserialize)]
struct SequenceFile {
    matrix: [String; 4],
    y1: [String; 3],
    y2: [String; 3],
    triples: Vec<[String; 3]>,
    rhos: Vec<[String; 2]>,
}

fn strs3(t: &IntTriple) -> [String; 3] {
    t.0.clone().map(|v| v.to_string())
}

fn int(s: &str) -> Result<BigInt> {
    parse_decimal(s).ok_or_else(|| {
        let head: String = s.chars().take(40).collect();
        Error::Parse(format!("not an integer: {head:?}"))
    })
}

fn triple(v: &[String; 3]) -> Result<IntTriple> {
    Ok(IntTriple([int(&v[0])?, int(&v[1])?, int(&v[2])?]))
}

impl From<&ExtremalSequence> for SequenceFile {
    fn from(s: &ExtremalSequence) -> Self {
        // decimal conversion is quadratic in the digit count, so the large
        // late terms are converted concurrently
        let flat: Vec<&BigInt> = s.triples.iter().flat_map(|t| t.0.iter()).collect();
        let mut digits = ordered_map(flat, Execution::default(), to_decimal).into_iter();
        let mut next = || digits.next().expect("three coordinates per triple");
        SequenceFile {
            matrix: s.seed.m.entries().map(|v| v.to_string()),
            y1: strs3(&s.seed.y1),
            y2: strs3(&s.seed.y2),
            triples: s.triples.iter().map(|_| [next(), next(), next()]).collect(),
            rhos: s.rhos.iter().map(|r| [r.numer().to_string(), r.denom().to_string()]).collect(),
        }
    }
}

impl SequenceFile {
    fn into_sequence(self) -> Result<ExtremalSequence> {
        let m = Matrix2::from_entries([
            int(&self.matrix[0])?,
            int(&self.matrix[1])?,
            int(&self.matrix[2])?,
            int(&self.matrix[3])?,
        ]);
        let seed = Seed::new(m, triple(&self.y1)?, triple(&self.y2)?);
        let flat: Vec<&String> = self.triples.iter().flatten().collect();
        let mut coords = ordered_map(flat, Execution::default(), |v| int(v)).into_iter();
        let mut next = || coords.next().expect("three coordinates per triple");
        let triples = (0..self.triples.len())
            .map(|_| Ok(IntTriple([next()?, next()?, next()?])))
            .collect::<Result<Vec<_>>>()?;
        let rhos = self
            .rhos
            .iter()
            .map(|[n, d]| {
                let d = int(d)?;
                if d.is_zero() {
                    return Err(Error::Parse("zero denominator in rhos".into()));
                }
                Ok(BigRational::new(int(n)?, d))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExtremalSequence { seed, triples, rhos })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{det3, trace_mj};
    use crate::extremal::seed::{example_two_seed, fibonacci_seed};
    use num_traits::Signed;

    fn t(a: i64, b: i64, c: i64) -> IntTriple {
        IntTriple::new(a, b, c)
    }

    #[test]
    fn fibonacci_first_terms() {
        let s = ExtremalSequence::generate(fibonacci_seed(1, 2).unwrap(), 6).unwrap();
        assert_eq!(
            s.triples(),
            &[
                t(1, 1, 0),
                t(4, 3, 2),
                t(25, 18, 13),
                t(576, 415, 299),
                t(81788, 58927, 42456),
                t(267610361, 192809162, 138916045),
            ]
        );
        assert!(s.rhos().iter().all(|r| r.abs().is_one()));
    }

    #[test]
    fn example_two_terms() {
        let s = ExtremalSequence::generate(example_two_seed(1).unwrap(), 3).unwrap();
        assert_eq!(s.term(3), Some(&t(5, 2, 1)));
        let s = ExtremalSequence::generate(example_two_seed(2).unwrap(), 5).unwrap();
        assert_eq!(s.triples()[2..], [t(29, 17, 10), t(697, 409, 240), t(40414, 23715, 13916)]);
    }

    #[test]
    fn unit_determinants_persist() {
        for seed in [fibonacci_seed(1, 2).unwrap(), fibonacci_seed(3, 1).unwrap(), example_two_seed(2).unwrap()] {
            let s = ExtremalSequence::generate(seed, 22).unwrap();
            assert!(s.triples().iter().all(|y| y.det2().abs().is_one()));
        }
    }

    #[test]
    fn det3_matches_recorded_factor() {
        // det(y_{t−2}, y_{t−1}, y_t) = ρ_t·det(y_{t−2})·det(y_{t−1})·trace(SJ)
        let s = ExtremalSequence::generate(example_two_seed(3).unwrap(), 14).unwrap();
        for t in 3..=s.len() {
            let (a, b, c) = (s.term(t - 2).unwrap(), s.term(t - 1).unwrap(), s.term(t).unwrap());
            let d = det3(a, b, c);
            assert!(!d.is_zero());
            let rho = &s.rhos()[t - 3];
            let rhs = a.det2() * b.det2() * trace_mj(&s.step_matrix(t));
            assert_eq!(d * rho.denom(), rhs * rho.numer(), "t = {t}");
        }
    }

    #[test]
    fn tampered_terms_are_detected() {
        let seed = example_two_seed(2).unwrap();
        let s = ExtremalSequence::generate(seed.clone(), 8).unwrap();
        s.check_recurrence().unwrap();
        let mut bad = s.clone();
        bad.triples[5] = bad.triples[5].scale(&BigInt::from(-1));
        assert!(bad.check_recurrence().is_err());
    }

    #[test]
    fn asymmetric_product_is_reported() {
        let seed = Seed::new(Matrix2::new(3, 1, 2, 1), t(1, 1, 0), t(2, 1, 3));
        let mut s = ExtremalSequence::new(seed);
        assert!(matches!(s.extend(1), Err(Error::NonSymmetricProduct { index: 3 })));
    }

    #[test]
    fn json_round_trip() {
        let s = ExtremalSequence::generate(fibonacci_seed(1, 2).unwrap(), 9).unwrap();
        let text = s.to_json().unwrap();
        let back = ExtremalSequence::from_json(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json().unwrap(), text);
        assert!(text.contains("\"576\""));
        assert!(ExtremalSequence::from_json("{\"matrix\": 3}").is_err());
    }

    #[test]
    fn truncation_keeps_a_prefix() {
        let s = ExtremalSequence::generate(fibonacci_seed(1, 2).unwrap(), 9).unwrap();
        let t = s.truncated(5);
        assert_eq!(t, ExtremalSequence::generate(fibonacci_seed(1, 2).unwrap(), 5).unwrap());
        assert_eq!(s.truncated(50).len(), 9);
        assert_eq!(s.truncated(0).len(), 2);
    }
}
