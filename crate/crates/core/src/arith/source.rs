//! Sources of real numbers that can be enclosed at increasing precision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::real::{CertifiedReal, Dyadic};
use crate::error::{Error, Result};

/// A real number that can be enclosed with radius about `2^-bits`.
///
/// Sources with bounded information (a stored enclosure, a finite sequence)
/// return their best enclosure when asked for more than they have; callers
/// check the radius they get.
pub trait RealSource: Sync {
    fn enclose(&self, bits: u64) -> Result<CertifiedReal>;

    /// Largest precision, in bits, the source can meaningfully deliver.
    fn max_bits(&self) -> Option<u64> {
        None
    }
}

impl RealSource for CertifiedReal {
    fn enclose(&self, bits: u64) -> Result<CertifiedReal> {
        let mag = self.mid().log2_floor().unwrap_or(0).max(0) as u64;
        Ok(self.round(bits.max(64) + mag + 8))
    }

    fn max_bits(&self) -> Option<u64> {
        if self.is_exact() {
            None
        } else {
            Some((-self.rad_log2()).max(0.0) as u64)
        }
    }
}

impl RealSource for BigRational {
    fn enclose(&self, bits: u64) -> Result<CertifiedReal> {
        let mag = self.numer().bits() as i64 - self.denom().bits() as i64;
        let prec = (bits as i64 + mag.max(0) + 8) as u64;
        CertifiedReal::from_ratio(self.numer(), self.denom(), prec)
    }
}

impl<T: RealSource + ?Sized> RealSource for &T {
    fn enclose(&self, bits: u64) -> Result<CertifiedReal> {
        (**self).enclose(bits)
    }

    fn max_bits(&self) -> Option<u64> {
        (**self).max_bits()
    }
}

/// Enclosure of `num / den` as a source.
pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<BigRational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num.into(), den))
}

/// Precision schedule: start, double, stop at the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionPolicy {
    pub start_bits: u64,
    pub cap_bits: u64,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { start_bits: 128, cap_bits: 1 << 16 }
    }
}

impl PrecisionPolicy {
    pub fn new(start_bits: u64, cap_bits: u64) -> Self {
        PrecisionPolicy { start_bits: start_bits.max(16), cap_bits }
    }

    /// Runs `attempt` at doubling precisions until it returns `Some`.
    pub fn escalate<T>(
        &self,
        context: &str,
        mut attempt: impl FnMut(u64) -> Result<Option<T>>,
    ) -> Result<T> {
        let mut bits = self.start_bits.min(self.cap_bits);
        loop {
            if let Some(v) = attempt(bits)? {
                return Ok(v);
            }
            if bits >= self.cap_bits {
                return Err(Error::PrecisionCap { cap_bits: self.cap_bits, context: context.into() });
            }
            bits = (bits * 2).min(self.cap_bits);
        }
    }

    /// Encloses `source` with radius at most `target`.
    pub fn enclose_to(
        &self,
        source: &dyn RealSource,
        target: &Dyadic,
        context: &str,
    ) -> Result<CertifiedReal> {
        let need = target.log2_floor().map_or(self.start_bits as i64, |e| -e + 2).max(1) as u64;
        let policy = PrecisionPolicy { start_bits: need.max(self.start_bits), ..*self };
        policy.escalate(context, |bits| {
            let x = source.enclose(bits)?;
            if x.rad() <= target {
                return Ok(Some(x));
            }
            if source.max_bits().is_some_and(|m| m < bits) {
                return Err(Error::RadiusTooLarge {
                    radius: x.rad().to_sci_string(3),
                    context: format!("{context}: source cannot reach the requested radius"),
                });
            }
            Ok(None)
        })
    }
}

/// `2^-bits` as a radius target.
pub fn radius_bits(bits: u64) -> Dyadic {
    Dyadic::pow2(-(bits as i64))
}

/// A radius target of `10^-digits`, rounded down to a power of two.
pub fn radius_decimal(digits: u64) -> Dyadic {
    let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u64;
    radius_bits(bits)
}
