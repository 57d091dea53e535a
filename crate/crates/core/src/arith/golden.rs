//! Exact arithmetic in Z[γ], γ = (1 + √5)/2.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The number `a + b·γ`, reduced with `γ² = γ + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GoldenExact {
    pub a: BigInt,
    pub b: BigInt,
}

impl GoldenExact {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GoldenExact { a: a.into(), b: b.into() }
    }

    pub fn gamma() -> Self {
        GoldenExact::new(0, 1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        GoldenExact::new(n, 0)
    }

    /// `γ^j = F_j·γ + F_{j−1}` with `F_0 = 0`, `F_1 = 1` (and `F_{−1} = 1`).
    pub fn gamma_pow(j: u32) -> Self {
        let (mut prev, mut cur) = (BigInt::one(), BigInt::zero()); // F_{-1}, F_0
        for _ in 0..j {
            let next = &prev + &cur;
            prev = cur;
            cur = next;
        }
        GoldenExact { a: prev, b: cur }
    }

    /// Exact sign of `a + bγ`.
    ///
    /// `2(a + bγ) = (2a + b) + b√5`; when the two summands have opposite signs
    /// the sign is decided by comparing `(2a + b)²` with `5b²`.
    pub fn signum(&self) -> Ordering {
        let u = BigInt::from(2) * &self.a + &self.b;
        let v = &self.b;
        let su = u.sign();
        let sv = v.sign();
        use num_bigint::Sign::*;
        match (su, sv) {
            (NoSign, NoSign) => Ordering::Equal,
            (Plus, Plus) | (Plus, NoSign) | (NoSign, Plus) => Ordering::Greater,
            (Minus, Minus) | (Minus, NoSign) | (NoSign, Minus) => Ordering::Less,
            (Plus, Minus) => (&u * &u).cmp(&(BigInt::from(5) * v * v)),
            (Minus, Plus) => (BigInt::from(5) * v * v).cmp(&(&u * &u)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Floating value, for reporting only.
    pub fn to_f64(&self) -> f64 {
        let gamma = (1.0 + 5f64.sqrt()) / 2.0;
        f64_of(&self.a) + f64_of(&self.b) * gamma
    }
}

fn f64_of(n: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(if n.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

impl PartialOrd for GoldenExact {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenExact {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl Add for &GoldenExact {
    type Output = GoldenExact;

    fn add(self, rhs: &GoldenExact) -> GoldenExact {
        GoldenExact { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &GoldenExact {
    type Output = GoldenExact;

    fn sub(self, rhs: &GoldenExact) -> GoldenExact {
        GoldenExact { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &GoldenExact {
    type Output = GoldenExact;

    // (a + bγ)(c + dγ) = ac + (ad + bc)γ + bdγ², γ² = γ + 1
    fn mul(self, rhs: &GoldenExact) -> GoldenExact {
        let bd = &self.b * &rhs.b;
        GoldenExact {
            a: &self.a * &rhs.a + &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl Neg for GoldenExact {
    type Output = GoldenExact;

    fn neg(self) -> GoldenExact {
        GoldenExact { a: -self.a, b: -self.b }
    }
}

/// Exact comparison of `u` and `v` as real numbers.
pub fn golden_compare(u: &GoldenExact, v: &GoldenExact) -> Ordering {
    u.cmp(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relation() {
        let g = GoldenExact::gamma();
        let g2 = &g * &g;
        assert_eq!(golden_compare(&g2, &GoldenExact::new(1, 1)), Ordering::Equal);
        assert_eq!(GoldenExact::gamma_pow(2), GoldenExact::new(1, 1));
        assert_eq!(GoldenExact::gamma_pow(0), GoldenExact::new(1, 0));
        assert_eq!(GoldenExact::gamma_pow(5), GoldenExact::new(3, 5));
    }

    #[test]
    fn examples() {
        // 2γ < γ² + 1 = γ + 2
        assert_eq!(
            golden_compare(&GoldenExact::new(0, 2), &GoldenExact::new(2, 1)),
            Ordering::Less
        );
        assert_eq!(
            golden_compare(&GoldenExact::new(-1, 1), &GoldenExact::new(0, 0)),
            Ordering::Greater
        );
    }

    #[test]
    fn near_boundary_signs() {
        // Fibonacci ratios straddle γ: F_{n+1} − F_n γ alternates in sign.
        let (mut f0, mut f1) = (BigInt::from(1), BigInt::from(1));
        for n in 0..200 {
            let x = GoldenExact { a: f1.clone(), b: -f0.clone() };
            let expected = if n % 2 == 0 { Ordering::Less } else { Ordering::Greater };
            assert_eq!(x.signum(), expected, "n = {n}");
            let next = &f0 + &f1;
            f0 = f1;
            f1 = next;
        }
    }
}
