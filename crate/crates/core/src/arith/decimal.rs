//! Decimal strings for very large integers.
//!
//! num-bigint converts in quadratic time, which dominates reading and writing
//! sequence files once terms reach hundreds of thousands of digits. With the
//! `gmp` feature, long values go through GMP's subquadratic routines.

use num_bigint::BigInt;

/// Shorter values are converted directly.
#[cfg(feature = "gmp")]
const LONG: u64 = 8192;

pub fn to_decimal(n: &BigInt) -> String {
    #[cfg(feature = "gmp")]
    if n.bits() > LONG {
        return to_gmp(n).to_string();
    }
    n.to_string()
}

/// Parses an optionally signed decimal integer; `None` on any other input.
pub fn parse_decimal(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    #[cfg(feature = "gmp")]
    if s.len() as u64 > LONG / 3 {
        let v = rug::Integer::from_str_radix(s, 10).ok()?;
        return Some(from_gmp(&v));
    }
    s.parse().ok()
}

#[cfg(feature = "gmp")]
fn to_gmp(n: &BigInt) -> rug::Integer {
    use num_bigint::Sign;
    let v = rug::Integer::from_digits(&n.magnitude().to_u64_digits(), rug::integer::Order::Lsf);
    if n.sign() == Sign::Minus {
        -v
    } else {
        v
    }
}

#[cfg(feature = "gmp")]
fn from_gmp(v: &rug::Integer) -> BigInt {
    use num_bigint::Sign;
    let sign = match v.cmp0() {
        std::cmp::Ordering::Less => Sign::Minus,
        std::cmp::Ordering::Equal => return BigInt::default(),
        std::cmp::Ordering::Greater => Sign::Plus,
    };
    let mut bytes = vec![0u8; v.significant_digits::<u8>()];
    v.write_digits(&mut bytes, rug::integer::Order::Lsf);
    BigInt::from_bytes_le(sign, &bytes)
}
