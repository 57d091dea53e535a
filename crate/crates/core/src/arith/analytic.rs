//! Certified evaluation of the approximation measures attached to a point.

use num_bigint::BigInt;
use num_traits::Zero;

use super::real::{CertifiedReal, Dyadic};
use super::triple::IntTriple;
use crate::error::{Error, Result};

/// `L_ξ(x) = max(|x1 − ξ·x0|, |x2 − ξ²·x0|)`.
pub fn height_l(x: &IntTriple, xi: &CertifiedReal) -> CertifiedReal {
    let xi2 = xi.square();
    let a = (&CertifiedReal::from_int(x.x1().clone()) - &xi.mul_int(x.x0())).abs();
    let b = (&CertifiedReal::from_int(x.x2().clone()) - &xi2.mul_int(x.x0())).abs();
    a.max(&b)
}

/// `‖x ∧ y‖` and `‖x‖·‖y‖`, the exact numerator and denominator of the
/// projective distance.
pub fn proj_dist_ratio(x: &IntTriple, y: &IntTriple) -> Result<(BigInt, BigInt)> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok((x.wedge(y).norm(), x.norm() * y.norm()))
}

/// `d(x, y) = ‖x ∧ y‖ / (‖x‖·‖y‖)` with the max-norm, midpoint to `prec` bits.
pub fn proj_dist(x: &IntTriple, y: &IntTriple, prec: u64) -> Result<CertifiedReal> {
    let (num, den) = proj_dist_ratio(x, y)?;
    CertifiedReal::from_ratio(&num, &den, prec)
}

/// Upper bound for `d(x, y)` with about `prec` significant bits.
pub fn proj_dist_upper(x: &IntTriple, y: &IntTriple, prec: u64) -> Result<Dyadic> {
    let (num, den) = proj_dist_ratio(x, y)?;
    if num.is_zero() {
        return Ok(Dyadic::zero());
    }
    Dyadic::div_up(&Dyadic::from_int(num), &Dyadic::from_int(den), prec)
}

/// Enclosure of `{r}`, the distance from `r` to the nearest integer.
pub fn dist_to_nearest_int(r: &CertifiedReal) -> Result<CertifiedReal> {
    r.dist_to_nearest_int()
}

/// `‖x‖·(|x1 − ξx0| + |x2 − ξx1|)`, the explicit bound for `|det2(x)|`
/// obtained from the column operation `x2·x0 − x1² = x0(x2 − ξx1) − x1(x1 − ξx0)`.
pub fn det2_envelope(x: &IntTriple, xi: &CertifiedReal) -> CertifiedReal {
    let a = (&CertifiedReal::from_int(x.x1().clone()) - &xi.mul_int(x.x0())).abs();
    let b = (&CertifiedReal::from_int(x.x2().clone()) - &xi.mul_int(x.x1())).abs();
    (&a + &b).mul_int(&x.norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64, c: i64) -> IntTriple {
        IntTriple::new(a, b, c)
    }

    #[test]
    fn height_l_examples() {
        let xi = CertifiedReal::from_ratio(&7205.into(), &10000.into(), 128).unwrap();
        let l = height_l(&t(0, 1, 0), &xi);
        assert!(l.contains(&Dyadic::from(1)));
        assert!(l.rad().is_zero() || l.rad() < &Dyadic::pow2(-100));
        // max(|1 − ξ|, |0 − ξ²|) = ξ² ≈ 0.5191
        let l = height_l(&t(1, 1, 0), &xi);
        let expect = CertifiedReal::from_ratio(&(7205 * 7205).into(), &100_000_000.into(), 128).unwrap();
        assert!(l.cmp_certified(&expect).is_none() || l.contains(expect.mid()));
    }

    #[test]
    fn proj_dist_examples() {
        let x = t(3, -1, 4);
        assert!(proj_dist(&x, &x, 64).unwrap().mid().is_zero());
        assert_eq!(proj_dist(&t(1, 0, 0), &t(0, 1, 0), 64).unwrap().mid(), &Dyadic::from(1));
        assert!(proj_dist(&IntTriple::zero(), &x, 64).is_err());
    }

    #[test]
    fn det2_envelope_bounds_det() {
        let xi = CertifiedReal::from_ratio(&7.into(), &10.into(), 128).unwrap();
        for x in [t(4, 3, 2), t(25, 18, 13), t(576, 415, 299), t(10, 7, 5)] {
            let env = det2_envelope(&x, &xi);
            let det = Dyadic::from_int(num_traits::Signed::abs(&x.det2()));
            assert!(det <= env.hi());
        }
    }
}
