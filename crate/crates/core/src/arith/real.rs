//! Dyadic numbers and midpoint–radius enclosures of reals.
//!
//! A [`CertifiedReal`] is a dyadic midpoint with a dyadic radius; every
//! operation returns an enclosure of the exact result. Sums, differences and
//! products of midpoints are exact; only [`CertifiedReal::round`] and
//! [`CertifiedReal::div`] lose information, and they move the loss into the
//! radius. Radii are kept short by rounding them upward.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Significant bits kept in radii.
const RADIUS_BITS: u64 = 64;

/// `man · 2^exp`, normalized so that `man` is odd (or zero with `exp == 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

#[derive(Clone, Copy)]
enum Rounding {
    Nearest,
    Floor,
    Ceil,
}

impl Dyadic {
    pub fn new(man: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { man, exp };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic::default()
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n.into(), 0)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic { man: BigInt::one(), exp: k }
    }

    fn normalize(&mut self) {
        match self.man.trailing_zeros() {
            None => self.exp = 0,
            Some(0) => {}
            Some(tz) => {
                self.man >>= tz;
                self.exp += tz as i64;
            }
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn sign(&self) -> Sign {
        self.man.sign()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic { man: self.man.abs(), exp: self.exp }
    }

    /// Multiplies by `2^k`.
    pub fn shl(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { man: self.man.clone(), exp: self.exp + k }
    }

    /// `floor(log2 |self|)`; `None` for zero.
    pub fn log2_floor(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.man.bits() as i64 - 1 + self.exp)
    }

    fn round_with(&self, prec: u64, mode: Rounding) -> Dyadic {
        let bits = self.man.bits();
        if bits <= prec {
            return self.clone();
        }
        let shift = bits - prec;
        let unit = BigInt::one() << shift;
        let q = match mode {
            Rounding::Floor => self.man.div_floor(&unit),
            Rounding::Ceil => -(-&self.man).div_floor(&unit),
            Rounding::Nearest => (&self.man + (&unit >> 1u32)).div_floor(&unit),
        };
        Dyadic::new(q, self.exp + shift as i64)
    }

    /// Rounds to `prec` significant bits, to nearest. The error is at most
    /// half of the returned ulp.
    pub fn round_nearest(&self, prec: u64) -> (Dyadic, Dyadic) {
        let bits = self.man.bits();
        if bits <= prec {
            return (self.clone(), Dyadic::zero());
        }
        let shift = (bits - prec) as i64;
        let rounded = self.round_with(prec, Rounding::Nearest);
        // one ulp at the new scale bounds the error with a factor 2 to spare
        (rounded, Dyadic::pow2(self.exp + shift))
    }

    /// Rounds toward +∞ to `prec` significant bits.
    pub fn round_up(&self, prec: u64) -> Dyadic {
        self.round_with(prec, Rounding::Ceil)
    }

    /// Rounds toward −∞ to `prec` significant bits.
    pub fn round_down(&self, prec: u64) -> Dyadic {
        self.round_with(prec, Rounding::Floor)
    }

    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as u64
        } else {
            self.man.div_floor(&(BigInt::one() << (-self.exp) as u64))
        }
    }

    pub fn ceil(&self) -> BigInt {
        -(-self.clone()).floor()
    }

    /// Nearest integer, halves rounded up.
    pub fn round_to_int(&self) -> BigInt {
        (self + &Dyadic::pow2(-1)).floor()
    }

    /// Is the value an integer?
    pub fn is_integer(&self) -> bool {
        self.exp >= 0 || self.is_zero()
    }

    /// `self · 2^frac_bits` rounded in the given direction, as an `i128`.
    pub fn to_fixed(&self, frac_bits: u32, round_up: bool) -> Option<i128> {
        let scaled = self.shl(frac_bits as i64);
        let n = if round_up { scaled.ceil() } else { scaled.floor() };
        n.to_i128()
    }

    /// Quotient `a / b` rounded toward zero to about `prec` bits, with an
    /// absolute error bound.
    pub fn div(a: &Dyadic, b: &Dyadic, prec: u64) -> Result<(Dyadic, Dyadic)> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if a.is_zero() {
            return Ok((Dyadic::zero(), Dyadic::zero()));
        }
        let shift = (prec as i64 + b.man.bits() as i64 - a.man.bits() as i64 + 2).max(0);
        let num = &a.man << shift as u64;
        let (q, r) = num.div_rem(&b.man);
        let exp = a.exp - b.exp - shift;
        let err = if r.is_zero() { Dyadic::zero() } else { Dyadic::pow2(exp) };
        Ok((Dyadic::new(q, exp), err))
    }

    /// Upper bound for `a / b`, both nonnegative, `b > 0`.
    pub fn div_up(a: &Dyadic, b: &Dyadic, prec: u64) -> Result<Dyadic> {
        let (q, err) = Dyadic::div(a, b, prec)?;
        Ok((&q + &err).round_up(prec))
    }

    /// Lower bound for `a / b`, both nonnegative, `b > 0`.
    pub fn div_down(a: &Dyadic, b: &Dyadic, prec: u64) -> Result<Dyadic> {
        let (q, _) = Dyadic::div(a, b, prec)?;
        Ok(q.round_down(prec))
    }

    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u64) -> Result<(Dyadic, Dyadic)> {
        Dyadic::div(&Dyadic::from_int(num.clone()), &Dyadic::from_int(den.clone()), prec)
    }

    /// Compares `self` with `num / den`, `den > 0`.
    pub fn cmp_ratio(&self, num: &BigInt, den: &BigInt) -> Ordering {
        debug_assert!(den.is_positive());
        let lhs = &self.man * den;
        if self.exp >= 0 {
            (lhs << self.exp as u64).cmp(num)
        } else {
            lhs.cmp(&(num << (-self.exp) as u64))
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.man.bits();
        let shift = bits.saturating_sub(64);
        let top = (&self.man >> shift).to_f64().unwrap_or(0.0);
        let e = self.exp + shift as i64;
        if e > 2000 {
            return top.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        top * 2f64.powi(e as i32)
    }

    /// Natural logarithm of `|self|`, accurate to about 1e-15 relative;
    /// valid far outside the range of `f64`.
    pub fn ln_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.man.bits();
        let shift = bits.saturating_sub(64);
        let top = (&self.man.abs() >> shift).to_f64().unwrap_or(1.0);
        top.ln() + (self.exp + shift as i64) as f64 * std::f64::consts::LN_2
    }

    /// Scientific decimal string with `digits` significant digits, rounded to nearest.
    pub fn to_sci_string(&self, digits: usize) -> String {
        self.sci_string(digits, false)
    }

    /// Like [`Dyadic::to_sci_string`] but rounded away from zero, for printing bounds.
    pub fn to_sci_string_up(&self, digits: usize) -> String {
        self.sci_string(digits, true)
    }

    fn sci_string(&self, digits: usize, up: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let digits = digits.max(1);
        let neg = self.is_negative();
        let abs = self.abs();
        let scaled = |k: i64| if up { scaled_decimal_up(&abs, k) } else { scaled_decimal(&abs, k) };
        // estimate of floor(log10 |x|)
        let log10 = abs.ln_abs() / std::f64::consts::LN_10;
        let mut e10 = log10.floor() as i64;
        let mut m = scaled(digits as i64 - 1 - e10);
        let ten_pow = BigInt::from(10).pow(digits as u32);
        if m >= ten_pow {
            e10 += 1;
            m = scaled(digits as i64 - 1 - e10);
        } else if m < BigInt::from(10).pow(digits as u32 - 1) {
            e10 -= 1;
            m = scaled(digits as i64 - 1 - e10);
        }
        if m >= ten_pow {
            // rounding carried into a new digit
            e10 += 1;
            m = scaled(digits as i64 - 1 - e10);
        }
        let s = m.to_string();
        let (head, tail) = s.split_at(1);
        let sign = if neg { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{e10}")
        } else {
            format!("{sign}{head}.{tail}e{e10}")
        }
    }

    /// Fixed-point decimal string with `decimals` digits after the point,
    /// rounded to nearest.
    pub fn to_fixed_string(&self, decimals: usize) -> String {
        let neg = self.is_negative();
        let m = scaled_decimal(&self.abs(), decimals as i64);
        let s = m.to_string();
        let s = format!("{:0>width$}", s, width = decimals + 1);
        let (int, frac) = s.split_at(s.len() - decimals);
        let sign = if neg && !m.is_zero() { "-" } else { "" };
        if decimals == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    /// Parses a decimal or scientific string exactly when possible (the value
    /// must be dyadic), otherwise to nearest at `prec` bits.
    pub fn parse(s: &str, prec: u64) -> Result<Dyadic> {
        let bad = || Error::Parse(format!("not a decimal number: {s:?}"));
        let (mant, e10) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i64>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
        let digits: String = format!("{int}{frac}");
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let e10 = e10 - frac.len() as i64;
        if e10 >= 0 {
            Ok(Dyadic::from_int(n * BigInt::from(10).pow(e10 as u32)))
        } else {
            let den = BigInt::from(10).pow((-e10) as u32);
            let (q, _) = Dyadic::from_ratio(&n, &den, prec)?;
            Ok(q)
        }
    }
}

/// `ceil(x · 10^k)` for `x ≥ 0`.
fn scaled_decimal_up(x: &Dyadic, k: i64) -> BigInt {
    let ten = BigInt::from(10);
    let (mut num, mut den) = (x.man.clone(), BigInt::one());
    if k >= 0 {
        num *= ten.pow(k as u32);
    } else {
        den *= ten.pow((-k) as u32);
    }
    if x.exp >= 0 {
        num <<= x.exp as u64;
    } else {
        den <<= (-x.exp) as u64;
    }
    num.div_ceil(&den)
}

/// `round(x · 10^k)` for `x ≥ 0`.
fn scaled_decimal(x: &Dyadic, k: i64) -> BigInt {
    let ten = BigInt::from(10);
    let (mut num, mut den) = (x.man.clone(), BigInt::one());
    if k >= 0 {
        num *= ten.pow(k as u32);
    } else {
        den *= ten.pow((-k) as u32);
    }
    if x.exp >= 0 {
        num <<= x.exp as u64;
    } else {
        den <<= (-x.exp) as u64;
    }
    let two_den: BigInt = &den * 2;
    let twice: BigInt = num * 2 + den;
    twice.div_floor(&two_den)
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.sign(), other.sign()) {
            (a, b) if a != b => {
                let rank = |s: Sign| match s {
                    Sign::Minus => 0,
                    Sign::NoSign => 1,
                    Sign::Plus => 2,
                };
                rank(a).cmp(&rank(b))
            }
            (Sign::NoSign, _) => Ordering::Equal,
            (s, _) => {
                // same nonzero sign: compare magnitudes by leading bit first
                let la = self.log2_floor().unwrap_or(0);
                let lb = other.log2_floor().unwrap_or(0);
                let mag = if la != lb {
                    la.cmp(&lb)
                } else {
                    let e = self.exp.min(other.exp);
                    let a = self.man.abs() << (self.exp - e) as u64;
                    let b = other.man.abs() << (other.exp - e) as u64;
                    a.cmp(&b)
                };
                if s == Sign::Minus { mag.reverse() } else { mag }
            }
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(rhs.exp);
        let a = &self.man << (self.exp - e) as u64;
        let b = &rhs.man << (rhs.exp - e) as u64;
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs.clone())
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.man * &rhs.man, self.exp + rhs.exp)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic { man: -self.man, exp: self.exp }
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_int(n)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci_string(20))
    }
}

/// A real number known to lie in `[mid − rad, mid + rad]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CertifiedReal {
    mid: Dyadic,
    rad: Dyadic,
}

impl CertifiedReal {
    pub fn new(mid: Dyadic, rad: Dyadic) -> Self {
        assert!(!rad.is_negative(), "negative radius");
        CertifiedReal { mid, rad: rad.round_up(RADIUS_BITS) }
    }

    pub fn exact(mid: Dyadic) -> Self {
        CertifiedReal { mid, rad: Dyadic::zero() }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        CertifiedReal::exact(Dyadic::from_int(n))
    }

    /// Enclosure of `num / den` with midpoint carrying `prec` significant bits.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u64) -> Result<Self> {
        let (q, err) = Dyadic::from_ratio(num, den, prec)?;
        Ok(CertifiedReal::new(q, err))
    }

    /// Smallest enclosure of the interval `[lo, hi]`.
    pub fn from_bounds(lo: &Dyadic, hi: &Dyadic) -> Self {
        debug_assert!(lo <= hi);
        let mid = (lo + hi).shl(-1);
        let rad = (hi - lo).shl(-1);
        CertifiedReal::new(mid, rad)
    }

    pub fn mid(&self) -> &Dyadic {
        &self.mid
    }

    pub fn rad(&self) -> &Dyadic {
        &self.rad
    }

    pub fn lo(&self) -> Dyadic {
        &self.mid - &self.rad
    }

    pub fn hi(&self) -> Dyadic {
        &self.mid + &self.rad
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        (&self.mid - x).abs() <= self.rad
    }

    /// Does the enclosure contain `num / den` (`den > 0`)?
    pub fn contains_ratio(&self, num: &BigInt, den: &BigInt) -> bool {
        self.lo().cmp_ratio(num, den) != Ordering::Greater
            && self.hi().cmp_ratio(num, den) != Ordering::Less
    }

    pub fn contains_zero(&self) -> bool {
        self.mid.abs() <= self.rad
    }

    /// Is `self` inside `other`?
    pub fn subset_of(&self, other: &CertifiedReal) -> bool {
        &(&self.mid - &other.mid).abs() + &self.rad <= other.rad
    }

    /// Ordering when decided by the enclosures. Exact equal values compare
    /// `Equal`; overlapping inexact enclosures give `None`.
    pub fn cmp_certified(&self, other: &CertifiedReal) -> Option<Ordering> {
        if self.is_exact() && other.is_exact() {
            return Some(self.mid.cmp(&other.mid));
        }
        if self.hi() < other.lo() {
            Some(Ordering::Less)
        } else if other.hi() < self.lo() {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// Sign, when decided.
    pub fn signum(&self) -> Option<Ordering> {
        self.cmp_certified(&CertifiedReal::default())
    }

    /// Rounds the midpoint to `prec` significant bits.
    pub fn round(&self, prec: u64) -> CertifiedReal {
        let (mid, err) = self.mid.round_nearest(prec);
        CertifiedReal::new(mid, &self.rad + &err)
    }

    pub fn mul_int(&self, k: &BigInt) -> CertifiedReal {
        let k = Dyadic::from_int(k.clone());
        CertifiedReal::new(&self.mid * &k, &self.rad * &k.abs())
    }

    pub fn add_int(&self, k: &BigInt) -> CertifiedReal {
        CertifiedReal::new(&self.mid + &Dyadic::from_int(k.clone()), self.rad.clone())
    }

    /// Quotient with midpoint rounded to `prec` bits.
    pub fn div(&self, other: &CertifiedReal, prec: u64) -> Result<CertifiedReal> {
        if other.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, err) = Dyadic::div(&self.mid, &other.mid, prec)?;
        // |a/b − am/bm| ≤ (ar + |am/bm|·br) / (|bm| − br)
        let ratio_up = &q.abs() + &err;
        let num = (&self.rad + &(&ratio_up * &other.rad)).round_up(RADIUS_BITS);
        let den = (&other.mid.abs() - &other.rad).round_down(RADIUS_BITS);
        let prop = Dyadic::div_up(&num, &den, RADIUS_BITS)?;
        Ok(CertifiedReal::new(q, &prop + &err))
    }

    pub fn abs(&self) -> CertifiedReal {
        if self.mid.abs() >= self.rad {
            CertifiedReal { mid: self.mid.abs(), rad: self.rad.clone() }
        } else {
            let hi = &self.mid.abs() + &self.rad;
            CertifiedReal::from_bounds(&Dyadic::zero(), &hi)
        }
    }

    pub fn max(&self, other: &CertifiedReal) -> CertifiedReal {
        let lo = self.lo().max(other.lo());
        let hi = self.hi().max(other.hi());
        CertifiedReal::from_bounds(&lo, &hi)
    }

    pub fn min(&self, other: &CertifiedReal) -> CertifiedReal {
        let lo = self.lo().min(other.lo());
        let hi = self.hi().min(other.hi());
        CertifiedReal::from_bounds(&lo, &hi)
    }

    pub fn square(&self) -> CertifiedReal {
        let a = self.abs();
        CertifiedReal::new(
            &a.mid * &a.mid,
            &(&a.mid * &a.rad).shl(1) + &(&a.rad * &a.rad),
        )
    }

    /// `floor(x)` if the whole enclosure has the same floor.
    pub fn floor_determined(&self) -> Option<BigInt> {
        let f = self.lo().floor();
        (f == self.hi().floor()).then_some(f)
    }

    /// Enclosure of the distance to the nearest integer. The map is
    /// 1-Lipschitz, so the radius carries over unchanged.
    pub fn dist_to_nearest_int(&self) -> Result<CertifiedReal> {
        if self.rad >= Dyadic::pow2(-2) {
            return Err(Error::RadiusTooLarge {
                radius: self.rad.to_string(),
                context: "distance to nearest integer needs radius < 1/4".into(),
            });
        }
        let n = self.mid.round_to_int();
        let d = (&self.mid - &Dyadic::from_int(n)).abs();
        let enc = CertifiedReal { mid: d, rad: self.rad.clone() };
        // clip to [0, 1/2]
        let lo = enc.lo().max(Dyadic::zero());
        let hi = enc.hi().min(Dyadic::pow2(-1));
        Ok(CertifiedReal::from_bounds(&lo, &hi))
    }

    /// Bounds on `ln x` for a positive enclosure, widened by a relative 1e-12
    /// to absorb floating-point error in the logarithm itself.
    pub fn ln_bounds(&self) -> Option<(f64, f64)> {
        let lo = self.lo();
        if lo.sign() != Sign::Plus {
            return None;
        }
        let a = lo.ln_abs();
        let b = self.hi().ln_abs();
        let slack = |v: f64| 1e-12 * v.abs().max(1.0);
        Some((a - slack(a), b + slack(b)))
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    /// `log2` of the radius (−∞ for exact values).
    pub fn rad_log2(&self) -> f64 {
        if self.rad.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.rad.ln_abs() / std::f64::consts::LN_2
        }
    }

    /// Is the radius at most `2^-bits`?
    pub fn meets_bits(&self, bits: u64) -> bool {
        self.rad <= Dyadic::pow2(-(bits as i64))
    }

    /// Decimal midpoint with `digits` significant digits and a decimal
    /// radius that still encloses the original interval.
    pub fn to_decimal_pair(&self, digits: usize) -> (String, String) {
        let mid = self.mid.to_sci_string(digits);
        let rad = if self.mid.is_zero() {
            self.rad.clone()
        } else {
            let e10: i64 = mid.rsplit_once('e').and_then(|(_, e)| e.parse().ok()).unwrap_or(0);
            let ulp_exp = e10 - digits.max(1) as i64 + 1;
            let ten = BigInt::from(10);
            let ulp = if ulp_exp >= 0 {
                Dyadic::from_int(ten.pow(ulp_exp as u32))
            } else {
                Dyadic::div_up(&Dyadic::from(1), &Dyadic::from_int(ten.pow((-ulp_exp) as u32)), 64)
                    .expect("nonzero divisor")
            };
            &self.rad + &ulp
        };
        (mid, rad.to_sci_string_up(3))
    }
}

impl Add for &CertifiedReal {
    type Output = CertifiedReal;

    fn add(self, rhs: &CertifiedReal) -> CertifiedReal {
        CertifiedReal::new(&self.mid + &rhs.mid, &self.rad + &rhs.rad)
    }
}

impl Sub for &CertifiedReal {
    type Output = CertifiedReal;

    fn sub(self, rhs: &CertifiedReal) -> CertifiedReal {
        CertifiedReal::new(&self.mid - &rhs.mid, &self.rad + &rhs.rad)
    }
}

impl Add for CertifiedReal {
    type Output = CertifiedReal;

    fn add(self, rhs: CertifiedReal) -> CertifiedReal {
        &self + &rhs
    }
}

impl Mul for &CertifiedReal {
    type Output = CertifiedReal;

    fn mul(self, rhs: &CertifiedReal) -> CertifiedReal {
        let rad = &(&(&self.mid.abs() * &rhs.rad) + &(&rhs.mid.abs() * &self.rad))
            + &(&self.rad * &rhs.rad);
        CertifiedReal::new(&self.mid * &rhs.mid, rad)
    }
}

impl Neg for CertifiedReal {
    type Output = CertifiedReal;

    fn neg(self) -> CertifiedReal {
        CertifiedReal { mid: -self.mid, rad: self.rad }
    }
}

impl fmt::Display for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (mid, rad) = self.to_decimal_pair(20);
        write!(f, "{mid} ± {rad}")
    }
}
