//! The continued fraction `[0; w1, w2, …]` whose partial quotients follow
//! the Fibonacci word over `{a, b}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{CertifiedReal, Dyadic};
use crate::error::{Error, Result};

/// The first `len` letters of the Fibonacci word: the limit of
/// `s1 = a`, `s2 = ab`, `s_{k+1} = s_k·s_{k−1}`.
pub fn fibonacci_word(a: u64, b: u64, len: usize) -> Vec<u64> {
    let (mut prev, mut cur) = (vec![a], vec![a, b]);
    while cur.len() < len {
        let next = [cur.as_slice(), prev.as_slice()].concat();
        prev = std::mem::replace(&mut cur, next);
    }
    if len == 1 {
        return prev;
    }
    cur.truncate(len);
    cur
}

/// A finite continued fraction prefix and the enclosure of its infinite limit.
#[derive(Clone, Debug)]
pub struct CfExpansion {
    /// `[0, w1, …, w_terms]`.
    pub quotients: Vec<BigInt>,
    pub value: CertifiedReal,
}

/// Convergents `p_k/q_k` of `[a0; a1, …]`, starting with `a0/1`.
pub fn convergents(quotients: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::zero(), BigInt::one());
    let mut out = Vec::with_capacity(quotients.len());
    for (k, a) in quotients.iter().enumerate() {
        let (p, q) = if k == 0 { (a.clone(), BigInt::one()) } else { (a * &p1 + &p0, a * &q1 + &q0) };
        if k == 0 {
            p0 = BigInt::one();
            q0 = BigInt::zero();
        } else {
            p0 = p1;
            q0 = q1;
        }
        p1 = p.clone();
        q1 = q.clone();
        out.push((p, q));
    }
    out
}

/// Enclosure of an infinite continued fraction from a prefix with all
/// remaining quotients positive: `|ξ − p_n/q_n| < 1/(q_n·(q_n + q_{n−1}))`.
pub fn cf_value(quotients: &[BigInt]) -> Result<CertifiedReal> {
    if quotients.len() < 2 {
        return Err(Error::InsufficientData("a continued fraction prefix needs two quotients".into()));
    }
    let conv = convergents(quotients);
    let (p, q) = &conv[conv.len() - 1];
    let (_, q_prev) = &conv[conv.len() - 2];
    let prec = 2 * q.bits() + 32;
    let tail_den = Dyadic::from_int(q * (q + q_prev));
    let tail = Dyadic::div_up(&Dyadic::from(1), &tail_den, 64)?;
    let (mid, err) = Dyadic::from_ratio(p, q, prec)?;
    Ok(CertifiedReal::new(mid, &tail + &err))
}

/// `[0; w1, …, w_terms]` for the Fibonacci word over `{a, b}`.
pub fn fibonacci_word_cf(a: u64, b: u64, terms: usize) -> Result<CfExpansion> {
    if a == b {
        return Err(Error::InvalidInput("a and b must be distinct".into()));
    }
    if a == 0 || b == 0 || terms == 0 {
        return Err(Error::InvalidInput("a, b and the number of terms must be positive".into()));
    }
    let quotients: Vec<BigInt> = std::iter::once(BigInt::zero())
        .chain(fibonacci_word(a, b, terms).into_iter().map(BigInt::from))
        .collect();
    let value = cf_value(&quotients)?;
    Ok(CfExpansion { quotients, value })
}

/// Enough quotients of the Fibonacci-word fraction for radius `target`.
pub fn fibonacci_word_cf_to(a: u64, b: u64, target: &Dyadic) -> Result<CfExpansion> {
    let need_bits = (-target.log2_floor().unwrap_or(0)).max(1) as usize;
    // q_k at least doubles every two steps
    let mut terms = need_bits + 4;
    loop {
        let cf = fibonacci_word_cf(a, b, terms)?;
        if cf.value.rad() <= target {
            return Ok(cf);
        }
        terms *= 2;
    }
}
