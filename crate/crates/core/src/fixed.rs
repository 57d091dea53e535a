//! Fixed-point intervals on `i128` for the inner loops of the brute-force scans.
//!
//! A [`Fixed`] holds `[lo, hi] · 2^-frac`. Every operation is checked and
//! returns `None` on overflow, so a scan can fall back to [`CertifiedReal`].

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::arith::{CertifiedReal, Dyadic};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fixed {
    pub lo: i128,
    pub hi: i128,
}

impl Fixed {
    pub fn point(v: i128) -> Self {
        Fixed { lo: v, hi: v }
    }

    /// The integer `n` at scale `frac`.
    pub fn int(n: i64, frac: u32) -> Option<Self> {
        (n as i128).checked_mul(1i128.checked_shl(frac)?).map(Fixed::point)
    }

    /// Outward-rounded image of an enclosure.
    pub fn from_certified(x: &CertifiedReal, frac: u32) -> Option<Self> {
        Some(Fixed { lo: x.lo().to_fixed(frac, false)?, hi: x.hi().to_fixed(frac, true)? })
    }

    pub fn to_certified(self, frac: u32) -> CertifiedReal {
        let f = -(frac as i64);
        CertifiedReal::from_bounds(
            &Dyadic::new(BigInt::from(self.lo), f),
            &Dyadic::new(BigInt::from(self.hi), f),
        )
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn checked_add(self, o: Fixed) -> Option<Fixed> {
        Some(Fixed { lo: self.lo.checked_add(o.lo)?, hi: self.hi.checked_add(o.hi)? })
    }

    pub fn checked_sub(self, o: Fixed) -> Option<Fixed> {
        Some(Fixed { lo: self.lo.checked_sub(o.hi)?, hi: self.hi.checked_sub(o.lo)? })
    }

    pub fn mul_int(self, k: i64) -> Option<Fixed> {
        let a = self.lo.checked_mul(k as i128)?;
        let b = self.hi.checked_mul(k as i128)?;
        Some(Fixed { lo: a.min(b), hi: a.max(b) })
    }

    pub fn abs(self) -> Fixed {
        if self.lo >= 0 {
            self
        } else if self.hi <= 0 {
            Fixed { lo: -self.hi, hi: -self.lo }
        } else {
            Fixed { lo: 0, hi: self.hi.max(-self.lo) }
        }
    }

    pub fn max(self, o: Fixed) -> Fixed {
        Fixed { lo: self.lo.max(o.lo), hi: self.hi.max(o.hi) }
    }

    /// The nearest integer, when the same for the whole interval.
    pub fn nearest_int(self, frac: u32) -> Option<i128> {
        let half = 1i128 << (frac - 1);
        let a = self.lo.checked_add(half)? >> frac;
        let b = self.hi.checked_add(half)? >> frac;
        (a == b).then_some(a)
    }

    /// Distance to the nearest integer and that integer, when determined.
    pub fn dist_to_nearest_int(self, frac: u32) -> Option<(Fixed, i128)> {
        let n = self.nearest_int(frac)?;
        Some((self.checked_sub(Fixed::int(n.try_into().ok()?, frac)?)?.abs(), n))
    }

    /// Order when the intervals are disjoint or both are the same point.
    pub fn cmp_certified(&self, o: &Fixed) -> Option<Ordering> {
        if self.hi < o.lo {
            Some(Ordering::Less)
        } else if o.hi < self.lo {
            Some(Ordering::Greater)
        } else if self.is_point() && o.is_point() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

/// Fractional bits leaving headroom for products with integers of `int_bits` bits.
pub fn frac_bits_for(int_bits: u32) -> u32 {
    120u32.saturating_sub(int_bits + 4).clamp(32, 110)
}
