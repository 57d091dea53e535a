//! Real root isolation for small integer polynomials: squarefree part,
//! Sturm sequences over the rationals, then bisection on sign changes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{CertifiedReal, Dyadic};

/// Dense rational polynomial, coefficients in increasing degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly(Vec<BigRational>);

impl QPoly {
    pub fn from_ints(c: &[BigInt]) -> Self {
        let mut p = QPoly(c.iter().map(|v| BigRational::from_integer(v.clone())).collect());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn derivative(&self) -> QPoly {
        let mut p = QPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(k.into()))
                .collect(),
        );
        p.trim();
        p
    }

    /// Remainder of Euclidean division by a nonzero `d`.
    pub fn rem(&self, d: &QPoly) -> QPoly {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let f = &r[k] / &lead;
            for (i, c) in d.0.iter().enumerate() {
                let idx = k - dd + i;
                r[idx] = &r[idx] - &f * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        QPoly(r)
    }

    /// Exact quotient by a divisor.
    pub fn div_exact(&self, d: &QPoly) -> QPoly {
        let dd = d.degree().expect("division by the zero polynomial");
        let Some(n) = self.degree() else { return QPoly(Vec::new()) };
        if n < dd {
            return QPoly(Vec::new());
        }
        let mut r = self.0.clone();
        let mut q = vec![BigRational::zero(); n - dd + 1];
        for k in (dd..=n).rev() {
            let f = &r[k] / &d.0[dd];
            for (i, c) in d.0.iter().enumerate() {
                let idx = k - dd + i;
                r[idx] = &r[idx] - &f * c;
            }
            q[k - dd] = f;
        }
        let mut out = QPoly(q);
        out.trim();
        out
    }

    pub fn monic(&self) -> QPoly {
        match self.0.last() {
            Some(l) => QPoly(self.0.iter().map(|c| c / l).collect()),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `P / gcd(P, P')`.
    pub fn squarefree(&self) -> QPoly {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            self.clone()
        } else {
            self.div_exact(&g)
        }
    }

    /// `P(c − T)`.
    pub fn reflect(&self, c: &BigRational) -> QPoly {
        // Horner in the polynomial ring
        let mut acc = QPoly(Vec::new());
        let lin = QPoly(vec![c.clone(), -BigRational::one()]);
        for coef in self.0.iter().rev() {
            acc = acc.mul(&lin);
            if acc.0.is_empty() {
                acc.0.push(BigRational::zero());
            }
            acc.0[0] = &acc.0[0] + coef;
            acc.trim();
        }
        acc
    }

    fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly(Vec::new());
        }
        let mut v = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] = &v[i + j] + a * b;
            }
        }
        let mut p = QPoly(v);
        p.trim();
        p
    }

    /// Positive multiple with integer coefficients.
    pub fn to_integer(&self) -> IntPoly {
        let l = self.0.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPoly(self.0.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect())
    }
}

/// Integer polynomial, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn eval_dyadic(&self, t: &Dyadic) -> Dyadic {
        self.0
            .iter()
            .rev()
            .fold(Dyadic::zero(), |acc, c| &acc * t + Dyadic::from_int(c.clone()))
    }

    pub fn sign_at(&self, t: &Dyadic) -> i8 {
        let v = self.eval_dyadic(t);
        if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        }
    }
}

/// The Sturm sequence of a squarefree polynomial, scaled to integers.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(p: &QPoly) -> Self {
        let mut seq = vec![p.clone(), p.derivative()];
        while !seq[seq.len() - 1].is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(QPoly(r.0.into_iter().map(|c| -c).collect()));
        }
        seq.retain(|q| !q.is_zero());
        Sturm { seq: seq.iter().map(QPoly::to_integer).collect() }
    }

    fn variations(&self, t: &Dyadic) -> usize {
        let signs: Vec<i8> = self.seq.iter().map(|q| q.sign_at(t)).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Dyadic, b: &Dyadic) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.seq[0]
    }
}

/// A real root known to lie in `[lo, hi]`, alone among the roots of `poly`.
#[derive(Clone, Debug)]
pub struct RootEnclosure {
    pub lo: Dyadic,
    pub hi: Dyadic,
    poly: IntPoly,
}

impl RootEnclosure {
    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn to_certified(&self) -> CertifiedReal {
        CertifiedReal::from_bounds(&self.lo, &self.hi)
    }

    /// Bisects until the width is at most `2^-bits`.
    pub fn refine(&mut self, bits: u64) {
        let target = Dyadic::pow2(-(bits as i64));
        if self.lo == self.hi {
            return;
        }
        let mut s_lo = self.poly.sign_at(&self.lo);
        if s_lo == 0 {
            self.hi = self.lo.clone();
            return;
        }
        while self.width() > target {
            let mid = (&self.lo + &self.hi).shl(-1);
            let s = self.poly.sign_at(&mid);
            if s == 0 {
                self.lo = mid.clone();
                self.hi = mid;
                return;
            }
            if s == s_lo {
                self.lo = mid;
                s_lo = s;
            } else {
                self.hi = mid;
            }
        }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }
}

/// Isolates the distinct real roots of `p` in `(a, b]`, each in an interval
/// with a sign change of the squarefree part (or a single exact point).
pub fn isolate_roots(p: &[BigInt], a: &Dyadic, b: &Dyadic) -> Vec<RootEnclosure> {
    let q = QPoly::from_ints(p);
    if q.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sf = q.squarefree();
    let sturm = Sturm::new(&sf);
    let poly = sturm.poly().clone();
    let mut out = Vec::new();
    let mut stack = vec![(a.clone(), b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 => {
                let (mut l, mut h) = (lo, hi);
                loop {
                    let sh = poly.sign_at(&h);
                    if sh == 0 {
                        out.push(RootEnclosure { lo: h.clone(), hi: h, poly: poly.clone() });
                        break;
                    }
                    let sl = poly.sign_at(&l);
                    if sl != 0 && sl != sh {
                        out.push(RootEnclosure { lo: l, hi: h, poly: poly.clone() });
                        break;
                    }
                    // `l` is a root outside the interval; move away from it
                    let mid = (&l + &h).shl(-1);
                    if sturm.count(&mid, &h) == 1 {
                        l = mid;
                    } else {
                        h = mid;
                    }
                }
            }
            _ => {
                let mid = (&lo + &hi).shl(-1);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Whether `p` and `q` have a common root inside `[lo, hi]`.
pub fn common_root_in(p: &QPoly, q: &QPoly, lo: &Dyadic, hi: &Dyadic) -> bool {
    let g = p.gcd(q);
    if g.degree().unwrap_or(0) == 0 {
        return false;
    }
    let g = g.to_integer();
    let below = lo - &Dyadic::pow2(lo.log2_floor().unwrap_or(0) - 200);
    !isolate_roots(&g.0, &below, hi).is_empty()
}

/// A bound `B` with every real root of `p` in `[−B, B]` (Cauchy).
pub fn root_bound(p: &[BigInt]) -> BigInt {
    let lead = p.iter().rev().find(|c| !c.is_zero()).cloned().unwrap_or_else(BigInt::one);
    let m = p.iter().map(|c| c.abs()).max().unwrap_or_default();
    m / lead.abs() + 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    fn all_roots(v: &[i64]) -> Vec<RootEnclosure> {
        let p = ints(v);
        let b = Dyadic::from_int(root_bound(&p));
        isolate_roots(&p, &(-b.clone()), &b)
    }

    #[test]
    fn simple_cubics() {
        // (T − 1)(T − 2)(T + 3) = T³ − 7T + 6
        let mut r = all_roots(&[6, -7, 0, 1]);
        assert_eq!(r.len(), 3);
        for x in &mut r {
            x.refine(40);
        }
        let vals: Vec<f64> = r.iter().map(|x| x.to_certified().to_f64()).collect();
        assert!((vals[0] + 3.0).abs() < 1e-9 && (vals[1] - 1.0).abs() < 1e-9 && (vals[2] - 2.0).abs() < 1e-9);
        // T³ − 2 has one real root
        let mut r = all_roots(&[-2, 0, 0, 1]);
        assert_eq!(r.len(), 1);
        r[0].refine(60);
        assert!((r[0].to_certified().to_f64() - 2f64.cbrt()).abs() < 1e-15);
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (T − 1)²(T + 1)
        let r = all_roots(&[1, -1, -1, 1]);
        assert_eq!(r.len(), 2);
        // T³
        let r = all_roots(&[0, 0, 0, 1]);
        assert_eq!(r.len(), 1);
        assert!(r[0].lo <= Dyadic::zero() && r[0].hi >= Dyadic::zero());
    }

    #[test]
    fn close_roots_are_separated() {
        // (1000T − 1)(1001T − 1)·T-free: 1001000T² − 2001T + 1, times (T − 5)
        let q = QPoly::from_ints(&ints(&[1, -2001, 1001000]));
        let p = q.mul(&QPoly::from_ints(&ints(&[-5, 1]))).to_integer();
        let b = Dyadic::from_int(root_bound(&p.0));
        assert_eq!(isolate_roots(&p.0, &(-b.clone()), &b).len(), 3);
    }

    #[test]
    fn reflection_and_common_roots() {
        let p = QPoly::from_ints(&ints(&[-2, 0, 1])); // T² − 2
        let c = BigRational::from_integer(1.into());
        // (1 − T)² − 2 = T² − 2T − 1
        assert_eq!(p.reflect(&c), QPoly::from_ints(&ints(&[-1, -2, 1])));
        let q = QPoly::from_ints(&ints(&[0, -2, 0, 1])); // T³ − 2T
        assert!(common_root_in(&p, &q, &Dyadic::from(1), &Dyadic::from(2)));
        assert!(!common_root_in(&p, &q, &Dyadic::from(2), &Dyadic::from(3)));
    }
}
