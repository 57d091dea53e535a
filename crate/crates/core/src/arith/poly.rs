//! Integer polynomials of degree at most two, monic cubics, and resultants.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::real::{CertifiedReal, Dyadic};
use super::triple::IntTriple;

/// `p0 + p1·T + p2·T²` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly2 {
    pub p0: BigInt,
    pub p1: BigInt,
    pub p2: BigInt,
}

impl Poly2 {
    pub fn new(p0: impl Into<BigInt>, p1: impl Into<BigInt>, p2: impl Into<BigInt>) -> Self {
        Poly2 { p0: p0.into(), p1: p1.into(), p2: p2.into() }
    }

    /// Coefficients in increasing degree.
    pub fn coeffs(&self) -> [&BigInt; 3] {
        [&self.p0, &self.p1, &self.p2]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_zero())
    }

    /// `max(|p0|, |p1|, |p2|)`.
    pub fn height(&self) -> BigInt {
        self.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Copy whose highest-degree nonzero coefficient is positive.
    pub fn sign_normalized(&self) -> Poly2 {
        let lead = [&self.p2, &self.p1, &self.p0].into_iter().find(|c| !c.is_zero());
        match lead {
            Some(c) if c.is_negative() => Poly2 {
                p0: -&self.p0,
                p1: -&self.p1,
                p2: -&self.p2,
            },
            _ => self.clone(),
        }
    }

    /// Exact value at a dyadic point.
    pub fn eval_dyadic(&self, t: &Dyadic) -> Dyadic {
        let c = |v: &BigInt| Dyadic::from_int(v.clone());
        &(&(&c(&self.p2) * t) + &c(&self.p1)) * t + c(&self.p0)
    }

    /// Enclosure of `P(ξ)`.
    pub fn eval(&self, xi: &CertifiedReal) -> CertifiedReal {
        let c = |v: &BigInt| CertifiedReal::from_int(v.clone());
        &(&(&c(&self.p2) * xi) + &c(&self.p1)) * xi + c(&self.p0)
    }

    /// The coefficient vector `(p0, p1, p2)` as a point of Z^3.
    pub fn to_triple(&self) -> IntTriple {
        IntTriple([self.p0.clone(), self.p1.clone(), self.p2.clone()])
    }

    pub fn from_triple(t: &IntTriple) -> Poly2 {
        let [p0, p1, p2] = t.0.clone();
        Poly2 { p0, p1, p2 }
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·T + {}·T²", self.p0, self.p1, self.p2)
    }
}

/// `T³ + p·T² + q·T + r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonicPoly3 {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
}

impl MonicPoly3 {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, r: impl Into<BigInt>) -> Self {
        MonicPoly3 { p: p.into(), q: q.into(), r: r.into() }
    }

    /// Height, counting the leading coefficient 1.
    pub fn height(&self) -> BigInt {
        [&self.p, &self.q, &self.r]
            .into_iter()
            .map(|c| c.abs())
            .fold(BigInt::one(), |a, b| a.max(b))
    }

    /// Coefficients in increasing degree, leading 1 included.
    pub fn coeffs(&self) -> Vec<BigInt> {
        vec![self.r.clone(), self.q.clone(), self.p.clone(), BigInt::one()]
    }

    pub fn eval(&self, xi: &CertifiedReal) -> CertifiedReal {
        let c = |v: &BigInt| CertifiedReal::from_int(v.clone());
        let mut acc = xi.add_int(&self.p);
        acc = (&acc * xi).add_int(&self.q);
        (&acc * xi) + c(&self.r)
    }

    pub fn eval_dyadic(&self, t: &Dyadic) -> Dyadic {
        let mut acc = t + &Dyadic::from_int(self.p.clone());
        acc = &acc * t + Dyadic::from_int(self.q.clone());
        &acc * t + Dyadic::from_int(self.r.clone())
    }
}

impl fmt::Display for MonicPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |c: &BigInt| if c.is_negative() { format!(" - {}", c.magnitude()) } else { format!(" + {c}") };
        write!(f, "T³{}·T²{}·T{}", term(&self.p), term(&self.q), term(&self.r))
    }
}

/// `(p2q1 − p1q2, p0q2 − p2q0, p1q0 − p0q1)`.
///
/// This is the vector product of the reversed coefficient vectors, read back
/// in reverse order, so it is orthogonal to `(p0, p1, p2)` and `(q0, q1, q2)`.
pub fn wedge_poly(p: &Poly2, q: &Poly2) -> IntTriple {
    IntTriple([
        &p.p2 * &q.p1 - &p.p1 * &q.p2,
        &p.p0 * &q.p2 - &p.p2 * &q.p0,
        &p.p1 * &q.p0 - &p.p0 * &q.p1,
    ])
}

/// Resultant of two polynomials read as formal quadratics: the determinant
/// of the 4×4 Sylvester matrix
///
/// ```text
/// p2 p1 p0  0
///  0 p2 p1 p0
/// q2 q1 q0  0
///  0 q2 q1 q0
/// ```
///
/// even when `p2` or `q2` vanishes. With both leading coefficients zero the
/// first column is zero and the value is 0.
pub fn resultant(p: &Poly2, q: &Poly2) -> BigInt {
    let a = &p.p2 * &q.p0 - &p.p0 * &q.p2;
    let b = &p.p2 * &q.p1 - &p.p1 * &q.p2;
    let c = &p.p1 * &q.p0 - &p.p0 * &q.p1;
    &a * &a - b * c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::triple::IntTriple;

    fn p(a: i64, b: i64, c: i64) -> Poly2 {
        Poly2::new(a, b, c)
    }

    /// Cofactor expansion of a 4×4 determinant.
    fn det4(m: [[i64; 4]; 4]) -> i64 {
        fn det3(m: [[i64; 3]; 3]) -> i64 {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        (0..4)
            .map(|j| {
                let mut minor = [[0; 3]; 3];
                for r in 1..4 {
                    let mut cc = 0;
                    for (c, &v) in m[r].iter().enumerate() {
                        if c != j {
                            minor[r - 1][cc] = v;
                            cc += 1;
                        }
                    }
                }
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det3(minor)
            })
            .sum()
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(-1, 0, 1), &p(-4, 0, 1)), 9.into());
        let x = p(3, -2, 5);
        assert_eq!(resultant(&x, &x), 0.into());
        // both formally of degree < 2: the Sylvester matrix has a zero column
        assert_eq!(resultant(&p(0, 1, 0), &p(1, 1, 0)), 0.into());
        // one genuine quadratic against a linear polynomial: ±q1²·P(−q0/q1)
        // P = T² − 2, Q = T − 1 → P(1) = −1, sign from the formal convention
        assert_eq!(resultant(&p(-2, 0, 1), &p(-1, 1, 0)), (-1).into());
    }

    #[test]
    fn resultant_matches_sylvester_determinant() {
        let vals = [-3i64, -1, 0, 2, 5];
        for &a in &vals {
            for &b in &vals {
                for &c in &vals {
                    let (q0, q1, q2) = (b - 1, c + a, a * b - 2);
                    let m = [
                        [c, b, a, 0],
                        [0, c, b, a],
                        [q2, q1, q0, 0],
                        [0, q2, q1, q0],
                    ];
                    assert_eq!(
                        resultant(&p(a, b, c), &p(q0, q1, q2)),
                        det4(m).into(),
                        "{a} {b} {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn resultant_vanishes_on_common_root() {
        // (T − 2)(T + 1) and (T − 2)(3T − 1)
        assert_eq!(resultant(&p(-2, -1, 1), &p(2, -7, 3)), 0.into());
    }

    #[test]
    fn wedge_poly_examples() {
        assert_eq!(wedge_poly(&p(0, 1, 0), &p(0, 0, 1)), IntTriple::new(-1, 0, 0));
        let x = p(4, -1, 7);
        assert!(wedge_poly(&x, &x).is_zero());
        let (a, b) = (p(2, -5, 3), p(-1, 4, 9));
        let w = wedge_poly(&a, &b);
        assert!(w.dot(&a.to_triple()).is_zero());
        assert!(w.dot(&b.to_triple()).is_zero());
    }

    #[test]
    fn heights_and_evaluation() {
        assert_eq!(p(0, -7, 3).height(), 7.into());
        assert_eq!(MonicPoly3::new(0, 0, 0).height(), 1.into());
        assert_eq!(p(0, -1, -2).sign_normalized(), p(0, 1, 2));
        let half = Dyadic::pow2(-1);
        assert_eq!(p(1, 2, 4).eval_dyadic(&half), Dyadic::from(3));
        let m = MonicPoly3::new(-1, 1, -1);
        // 1/8 − 1/4 + 1/2 − 1 = −5/8
        assert_eq!(m.eval_dyadic(&half), Dyadic::new((-5).into(), -3));
        assert_eq!(m.eval(&CertifiedReal::exact(half)).mid(), &Dyadic::new((-5).into(), -3));
    }
}
