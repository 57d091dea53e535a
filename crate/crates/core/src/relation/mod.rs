//! Search for polynomial relations `P(y_i, …, y_{i+k}) = 0` among
//! consecutive terms.
//!
//! A polynomial in the variables `u_{j,ℓ}` (`0 ≤ j ≤ k`, `0 ≤ ℓ ≤ 2`) whose
//! mixed derivatives in `u_{j,1}, u_{j,2}` vanish at the all-ones point for
//! every admissible derivative profile vanishes on all late windows of an
//! extremal sequence. The admissible profiles are those with
//! `2·Σ_j (f_{j,1} + f_{j,2})·γ^j ≤ Σ_j d_j·γ^j` and `f_{j,1} + f_{j,2} ≤ d_j`.
//! The search builds that linear system on a space of homogeneous
//! polynomials and returns its exact kernel.

pub mod linalg;
pub mod poly;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{bracket_of, det3_of, golden_compare, GoldenExact, IntTriple};
use crate::error::{Error, Result};
use crate::extremal::ExtremalSequence;
use crate::par::{ordered_map, Execution};

pub use linalg::{mat_vec, normalize, null_space as integer_null_space, rank};
pub use poly::SparsePoly;

/// A multi-degree `d = (d_0, …, d_k)` with a weight `p ≤ 2|d|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    pub d: Vec<u32>,
    pub p: u32,
}

impl MultiDegree {
    pub fn new(d: Vec<u32>, p: u32) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::InvalidInput("multi-degree needs at least one entry".into()));
        }
        let total: u32 = d.iter().sum();
        if p > 2 * total {
            return Err(Error::InvalidInput(format!("weight {p} exceeds the maximum {} for {d:?}", 2 * total)));
        }
        Ok(MultiDegree { d, p })
    }

    /// `k`, one less than the number of vector variables.
    pub fn k(&self) -> usize {
        self.d.len() - 1
    }

    pub fn total(&self) -> u32 {
        self.d.iter().sum()
    }

    /// `Σ_j d_j·γ^j`.
    pub fn golden_size(&self) -> GoldenExact {
        golden_sum(&self.d)
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.d.iter().map(|x| x.to_string()).collect();
        write!(f, "({}) weight {}", d.join(","), self.p)
    }
}

fn golden_sum(c: &[u32]) -> GoldenExact {
    c.iter().enumerate().fold(GoldenExact::from_int(0), |acc, (j, &x)| {
        &acc + &(&GoldenExact::gamma_pow(j as u32) * &GoldenExact::from_int(x))
    })
}

/// Exponents `e_{j,ℓ}` of `Π u_{j,ℓ}^{e_{j,ℓ}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub e: Vec<[u32; 3]>,
}

impl Monomial {
    pub fn weight(&self) -> u32 {
        self.e.iter().map(|x| x[1] + 2 * x[2]).sum()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.e.iter().map(|x| x.iter().sum()).collect()
    }

    /// Flat exponent vector, `3·j + ℓ` indexing.
    pub fn flat(&self) -> Vec<u32> {
        self.e.iter().flatten().copied().collect()
    }

    pub fn from_flat(v: &[u32]) -> Monomial {
        Monomial { e: v.chunks(3).map(|c| [c[0], c[1], c[2]]).collect() }
    }

    /// Value at `u_j = window[j]`.
    pub fn eval(&self, window: &[IntTriple]) -> BigInt {
        let mut acc = BigInt::one();
        for (e, y) in self.e.iter().zip(window) {
            for (&k, v) in e.iter().zip(&y.0) {
                if k > 0 {
                    acc *= num_traits::pow(v.clone(), k as usize);
                }
            }
        }
        acc
    }
}

impl fmt::Display for Monomial {
    /// `u[j][l]^e` factors joined by `*`; `1` for the empty product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, e) in self.e.iter().enumerate() {
            for (l, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => parts.push(format!("u[{j}][{l}]")),
                    _ => parts.push(format!("u[{j}][{l}]^{x}")),
                }
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Basis of `E(d, p)` in lexicographic order of the flat exponent vectors.
pub fn enumerate_monomials(md: &MultiDegree) -> Vec<Monomial> {
    // max_rest[j]: largest weight reachable from slots j.. on
    let mut max_rest = vec![0u32; md.d.len() + 1];
    for j in (0..md.d.len()).rev() {
        max_rest[j] = max_rest[j + 1] + 2 * md.d[j];
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(md.d.len());
    fn go(md: &MultiDegree, max_rest: &[u32], j: usize, left: u32, cur: &mut Vec<[u32; 3]>, out: &mut Vec<Monomial>) {
        if j == md.d.len() {
            if left == 0 {
                out.push(Monomial { e: cur.clone() });
            }
            return;
        }
        let d = md.d[j];
        for e0 in 0..=d {
            for e1 in 0..=d - e0 {
                let e2 = d - e0 - e1;
                let w = e1 + 2 * e2;
                if w > left || left - w > max_rest[j + 1] {
                    continue;
                }
                cur.push([e0, e1, e2]);
                go(md, max_rest, j + 1, left - w, cur, out);
                cur.pop();
            }
        }
    }
    go(md, &max_rest, 0, md.p, &mut cur, &mut out);
    out
}

/// Orders of differentiation `f_{j,1}, f_{j,2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DerivativeProfile {
    pub f: Vec<[u32; 2]>,
}

impl DerivativeProfile {
    /// `Σ_j (f_{j,1} + f_{j,2})·γ^j`.
    pub fn golden_size(&self) -> GoldenExact {
        let s: Vec<u32> = self.f.iter().map(|x| x[0] + x[1]).collect();
        golden_sum(&s)
    }

    /// Both admissibility constraints, the golden one decided exactly.
    pub fn is_admissible(&self, md: &MultiDegree) -> bool {
        self.f.len() == md.d.len()
            && self.f.iter().zip(&md.d).all(|(f, &d)| f[0] + f[1] <= d)
            && golden_compare(&(&self.golden_size() * &GoldenExact::from_int(2)), &md.golden_size()) != Ordering::Greater
    }
}

/// All admissible profiles, in lexicographic order.
pub fn admissible_profiles(md: &MultiDegree) -> Vec<DerivativeProfile> {
    let bound = md.golden_size();
    let mut out = Vec::new();
    let mut cur: Vec<[u32; 2]> = Vec::with_capacity(md.d.len());
    // `spent` is 2·Σ (f_{j,1} + f_{j,2})·γ^j over the slots fixed so far; it only grows.
    fn go(
        md: &MultiDegree,
        bound: &GoldenExact,
        j: usize,
        spent: GoldenExact,
        cur: &mut Vec<[u32; 2]>,
        out: &mut Vec<DerivativeProfile>,
    ) {
        if j == md.d.len() {
            out.push(DerivativeProfile { f: cur.clone() });
            return;
        }
        let g2 = &GoldenExact::gamma_pow(j as u32) * &GoldenExact::from_int(2);
        for f1 in 0..=md.d[j] {
            for f2 in 0..=md.d[j] - f1 {
                let s = &spent + &(&g2 * &GoldenExact::from_int(f1 + f2));
                if golden_compare(&s, bound) == Ordering::Greater {
                    continue;
                }
                cur.push([f1, f2]);
                go(md, bound, j + 1, s, cur, out);
                cur.pop();
            }
        }
    }
    go(md, &bound, 0, GoldenExact::from_int(0), &mut cur, &mut out);
    out
}

/// `Π_{j, ℓ∈{1,2}} e_{j,ℓ}(e_{j,ℓ} − 1)⋯(e_{j,ℓ} − f_{j,ℓ} + 1)`: the derivative
/// of the monomial at the all-ones point.
pub fn derivative_at_ones(m: &Monomial, f: &DerivativeProfile) -> BigInt {
    let mut acc = BigInt::one();
    for (e, f) in m.e.iter().zip(&f.f) {
        for l in 0..2 {
            let (e, f) = (e[l + 1], f[l]);
            if f > e {
                return BigInt::zero();
            }
            for t in 0..f {
                acc *= e - t;
            }
        }
    }
    acc
}

/// The constraint system: one row per admissible profile, one column per
/// basis monomial.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub md: MultiDegree,
    pub basis: Vec<Monomial>,
    pub profiles: Vec<DerivativeProfile>,
    pub rows: Vec<Vec<BigInt>>,
}

pub fn constraint_system(md: &MultiDegree, exec: Execution) -> ConstraintSystem {
    let basis = enumerate_monomials(md);
    let profiles = admissible_profiles(md);
    let rows = ordered_map(profiles.clone(), exec, |f| basis.iter().map(|m| derivative_at_ones(m, &f)).collect());
    ConstraintSystem { md: md.clone(), basis, profiles, rows }
}

/// An integer polynomial in `E(d, p)`, coefficients over the basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCandidate {
    pub md: MultiDegree,
    pub basis: Vec<Monomial>,
    pub coeffs: Vec<BigInt>,
}

impl RelationCandidate {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.basis.iter().zip(&self.coeffs).filter(|(_, c)| !c.is_zero())
    }

    /// Value at the window `(u_0, …, u_k) = (y_i, …, y_{i+k})`.
    pub fn eval(&self, window: &[IntTriple]) -> BigInt {
        self.terms().map(|(m, c)| c * m.eval(window)).sum()
    }

    /// Whether the support is homogeneous of the recorded multi-degree and weight.
    pub fn is_homogeneous(&self) -> bool {
        self.terms().all(|(m, _)| m.degrees() == self.md.d && m.weight() == self.md.p)
    }

    pub fn pretty(&self) -> String {
        let mut s = String::new();
        for (m, c) in self.terms() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if s.is_empty() {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            if mag.is_one() {
                s.push_str(&m.to_string());
            } else {
                s.push_str(&format!("{mag}*{m}"));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "multidegree": self.md.d,
            "weight": self.md.p,
            "coefficients": self.terms().map(|(m, c)| json!([m.e, c.to_string()])).collect::<Vec<_>>(),
        })
    }
}

/// Exact kernel of the constraint system, each vector re-checked against
/// every row.
pub fn null_space(md: &MultiDegree, exec: Execution) -> Vec<RelationCandidate> {
    let sys = constraint_system(md, exec);
    let kernel = linalg::null_space(sys.rows.clone(), sys.basis.len());
    for v in &kernel {
        assert!(mat_vec(&sys.rows, v).iter().all(|x| x.is_zero()), "kernel vector fails a constraint");
    }
    kernel.into_iter().map(|coeffs| RelationCandidate { md: md.clone(), basis: sys.basis.clone(), coeffs }).collect()
}

/// Whether `v` lies in the span of `basis` (all over the same monomials).
pub fn in_span(basis: &[RelationCandidate], v: &RelationCandidate) -> bool {
    if basis.iter().any(|b| b.basis != v.basis) {
        return false;
    }
    let n = v.basis.len();
    let rows: Vec<Vec<BigInt>> = basis.iter().map(|b| b.coeffs.clone()).collect();
    let r = rank(rows.clone(), n);
    let mut with = rows;
    with.push(v.coeffs.clone());
    rank(with, n) == r
}

/// The two determinant relations among five consecutive terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnownRelation {
    /// `det(u_0, u_1, [u_3, u_3, u_4])`.
    First,
    /// `det(u_1, u_2, [u_3, u_3, u_4])`.
    Second,
}

impl KnownRelation {
    pub fn multidegree(self) -> MultiDegree {
        match self {
            KnownRelation::First => MultiDegree { d: vec![1, 1, 0, 2, 1], p: 5 },
            KnownRelation::Second => MultiDegree { d: vec![0, 1, 1, 2, 1], p: 5 },
        }
    }
}

/// Symbolic expansion of a known relation over the basis of its `E(d, p)`.
pub fn expand_known_relation(which: KnownRelation) -> RelationCandidate {
    let k = 4;
    let u = |j| SparsePoly::vector(k, j);
    let b = bracket_of(&u(3), &u(4));
    let poly = match which {
        KnownRelation::First => det3_of(&u(0), &u(1), &b),
        KnownRelation::Second => det3_of(&u(1), &u(2), &b),
    };
    candidate_from_poly(&which.multidegree(), &poly).expect("known relations are homogeneous")
}

/// Writes `poly` over the basis of `E(d, p)`; `None` if it has terms outside.
pub fn candidate_from_poly(md: &MultiDegree, poly: &SparsePoly) -> Option<RelationCandidate> {
    let basis = enumerate_monomials(md);
    let mut coeffs = vec![BigInt::zero(); basis.len()];
    for (e, c) in &poly.terms {
        let m = Monomial::from_flat(e);
        let pos = basis.binary_search(&m).ok()?;
        coeffs[pos] = c.clone();
    }
    Some(RelationCandidate { md: md.clone(), basis, coeffs })
}

/// Outcome of evaluating a candidate on every window of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    /// Zero on every window starting at `from` (1-based) or later.
    VanishesFrom { from: usize, windows: usize },
    /// Nonzero on the last window.
    Never { windows: usize },
    /// The zero polynomial.
    Degenerate,
}

impl Validation {
    pub fn label(&self) -> String {
        match self {
            Validation::VanishesFrom { from, .. } => format!("VANISHES from i = {from}"),
            Validation::Never { .. } => "NEVER".into(),
            Validation::Degenerate => "DEGENERATE".into(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Validation::VanishesFrom { from, windows } => json!({"status": "VANISHES", "from": from, "windows": windows}),
            Validation::Never { windows } => json!({"status": "NEVER", "windows": windows}),
            Validation::Degenerate => json!({"status": "DEGENERATE"}),
        }
    }
}

/// Evaluates each candidate exactly on all windows `(y_i, …, y_{i+k})`.
pub fn validate_candidates(cands: &[RelationCandidate], seq: &ExtremalSequence, exec: Execution) -> Result<Vec<Validation>> {
    cands
        .iter()
        .map(|c| {
            if c.is_zero() {
                return Ok(Validation::Degenerate);
            }
            let width = c.md.d.len();
            if seq.len() < width {
                return Err(Error::InsufficientTerms(format!("windows of {width} terms from {} terms", seq.len())));
            }
            let starts: Vec<usize> = (0..=seq.len() - width).collect();
            let zero = ordered_map(starts, exec, |s| c.eval(&seq.triples()[s..s + width]).is_zero());
            let windows = zero.len();
            Ok(match zero.iter().rposition(|z| !z) {
                None => Validation::VanishesFrom { from: 1, windows },
                Some(last) if last + 1 < windows => Validation::VanishesFrom { from: last + 2, windows },
                Some(_) => Validation::Never { windows },
            })
        })
        .collect()
}

/// One `(d, p)` visited by [`sweep`].
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub md: MultiDegree,
    pub dimension: usize,
    pub profiles: usize,
    pub kernel: Vec<RelationCandidate>,
}

/// Visits every `d` of length `k + 1` with `1 ≤ |d| ≤ max_total`, `d_0 > 0`
/// and `d_k > 0` (other shapes are shifts of shorter ones). For each `d` the
/// weights run `|d|, |d| − 1, |d| + 1, …`, where `E(d, |d|)` is largest.
/// Returns the entries with a nonzero kernel.
///
/// Panics if `dim E(d, p) ≠ dim E(d, 2|d| − p)` for some visited pair.
pub fn sweep(k: usize, max_total: u32, exec: Execution) -> Vec<SweepEntry> {
    let mut out = Vec::new();
    for d in multidegrees(k + 1, max_total) {
        if d[0] == 0 || d[k] == 0 {
            continue;
        }
        let total: u32 = d.iter().sum();
        let mut weights = vec![total];
        for s in 1..=total {
            weights.push(total - s);
            weights.push(total + s);
        }
        for p in weights {
            let md = MultiDegree { d: d.clone(), p };
            let dim = enumerate_monomials(&md).len();
            let mirror = enumerate_monomials(&MultiDegree { d: d.clone(), p: 2 * total - p }).len();
            assert_eq!(dim, mirror, "dimension symmetry fails at {md}");
            let profiles = admissible_profiles(&md).len();
            let kernel = null_space(&md, exec);
            if !kernel.is_empty() {
                out.push(SweepEntry { md, dimension: dim, profiles, kernel });
            }
        }
    }
    out
}

fn multidegrees(len: usize, max_total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(len: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            if cur.iter().sum::<u32>() > 0 {
                out.push(cur.clone());
            }
            return;
        }
        for x in 0..=left {
            cur.push(x);
            go(len, left - x, cur, out);
            cur.pop();
        }
    }
    go(len, max_total, &mut cur, &mut out);
    out
}

/// JSON for a search result: dimensions plus the kernel basis.
pub fn search_json(md: &MultiDegree, dimension: usize, profiles: usize, kernel: &[RelationCandidate]) -> Value {
    json!({
        "multidegree": md.d,
        "weight": md.p,
        "dimension": dimension,
        "profiles": profiles,
        "kernel_dimension": kernel.len(),
        "kernel": kernel.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{example_two_seed, fibonacci_seed};

    fn md(d: &[u32], p: u32) -> MultiDegree {
        MultiDegree::new(d.to_vec(), p).unwrap()
    }

    #[test]
    fn forced_bases() {
        let b = enumerate_monomials(&md(&[1], 2));
        assert_eq!(b, vec![Monomial { e: vec![[0, 0, 1]] }]);
        let b = enumerate_monomials(&md(&[1, 1], 0));
        assert_eq!(b, vec![Monomial { e: vec![[1, 0, 0], [1, 0, 0]] }]);
        assert!(MultiDegree::new(vec![1, 1], 5).is_err());
    }

    #[test]
    fn basis_is_sorted_and_homogeneous() {
        let m = md(&[1, 1, 0, 2, 1], 5);
        let b = enumerate_monomials(&m);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
        assert!(b.iter().all(|x| x.weight() == 5 && x.degrees() == m.d));
        let target = Monomial { e: vec![[1, 0, 0], [0, 1, 0], [0, 0, 0], [1, 0, 1], [0, 0, 1]] };
        assert!(b.contains(&target));
    }

    #[test]
    fn boundary_profile_is_admissible() {
        let m = md(&[2], 2);
        assert!(!DerivativeProfile { f: vec![[2, 0]] }.is_admissible(&m));
        assert!(DerivativeProfile { f: vec![[1, 0]] }.is_admissible(&m));
        let all = admissible_profiles(&m);
        assert_eq!(all, vec![DerivativeProfile { f: vec![[0, 0]] }, DerivativeProfile { f: vec![[0, 1]] }, DerivativeProfile { f: vec![[1, 0]] }]);
    }

    #[test]
    fn falling_factorials() {
        let m = Monomial { e: vec![[0, 1, 3]] };
        assert_eq!(derivative_at_ones(&m, &DerivativeProfile { f: vec![[0, 0]] }), BigInt::one());
        assert_eq!(derivative_at_ones(&m, &DerivativeProfile { f: vec![[2, 0]] }), BigInt::zero());
        assert_eq!(derivative_at_ones(&m, &DerivativeProfile { f: vec![[0, 2]] }), BigInt::from(6));
    }

    #[test]
    fn known_relations_lie_in_the_kernels() {
        for which in [KnownRelation::First, KnownRelation::Second] {
            let rel = expand_known_relation(which);
            assert!(rel.is_homogeneous());
            let kernel = null_space(&which.multidegree(), Execution::default());
            assert!(in_span(&kernel, &rel), "{which:?}");
        }
    }

    #[test]
    fn bracket_component_weights() {
        let u = |j| SparsePoly::vector(1, j);
        let b = bracket_of(&u(0), &u(1));
        for (l, c) in b.iter().enumerate() {
            for e in c.terms.keys() {
                let m = Monomial::from_flat(e);
                assert_eq!(m.weight() as usize, l + 2);
            }
        }
    }

    #[test]
    fn known_relations_vanish_on_sequences() {
        let cands = [expand_known_relation(KnownRelation::First), expand_known_relation(KnownRelation::Second)];
        for seed in [fibonacci_seed(1, 2).unwrap(), example_two_seed(2).unwrap()] {
            let s = ExtremalSequence::generate(seed, 20).unwrap();
            for v in validate_candidates(&cands, &s, Execution::default()).unwrap() {
                assert!(matches!(v, Validation::VanishesFrom { from, .. } if from <= 3), "{v:?}");
            }
        }
    }

    #[test]
    fn controls() {
        let m = md(&[1, 1, 0, 2, 1], 5);
        let basis = enumerate_monomials(&m);
        let s = ExtremalSequence::generate(fibonacci_seed(1, 2).unwrap(), 20).unwrap();
        let zero = RelationCandidate { md: m.clone(), basis: basis.clone(), coeffs: vec![BigInt::zero(); basis.len()] };
        let mut unit = zero.clone();
        unit.coeffs[basis.len() / 2] = BigInt::one();
        let v = validate_candidates(&[zero, unit], &s, Execution::Sequential).unwrap();
        assert_eq!(v[0], Validation::Degenerate);
        assert!(matches!(v[1], Validation::Never { .. }));
    }

    #[test]
    fn unconstrained_space_is_its_own_kernel() {
        // with d = (1) only the zero profile is admissible: one row of ones
        let m = md(&[1], 1);
        let sys = constraint_system(&m, Execution::Sequential);
        assert_eq!(sys.profiles.len(), 1);
        assert_eq!(null_space(&m, Execution::Sequential).len(), sys.basis.len() - 1);
    }

    #[test]
    fn sweep_finds_the_short_relation() {
        let found = sweep(3, 5, Execution::default());
        let rel = expand_known_relation(KnownRelation::Second);
        let short = MultiDegree { d: vec![1, 1, 2, 1], p: 5 };
        let e = found.iter().find(|e| e.md == short).expect("(1,1,2,1) has a kernel");
        let shifted: SparsePoly = {
            let u = |j| SparsePoly::vector(3, j);
            det3_of(&u(0), &u(1), &bracket_of(&u(2), &u(3)))
        };
        let c = candidate_from_poly(&short, &shifted).unwrap();
        assert!(in_span(&e.kernel, &c));
        assert!(rel.is_homogeneous());
    }

    #[test]
    fn pretty_printing() {
        let m = md(&[1], 1);
        let c = RelationCandidate { md: m.clone(), basis: enumerate_monomials(&m), coeffs: vec![BigInt::from(-2)] };
        assert_eq!(c.pretty(), "-2*u[0][1]");
        assert_eq!(c.to_json()["coefficients"][0][1], "-2");
    }
}
