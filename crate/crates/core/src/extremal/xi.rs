//! Certified enclosure of `ξ = lim y_{t,1}/y_{t,0}`.
//!
//! With `d_j = d(y_j, y_{j+1})` and the triangle inequality
//! `d(x,z) ≤ d(x,y) + 2d(y,z)`, the limit point `y` satisfies
//! `d(y_i, y) ≤ Σ_{j ≥ i} 2^{j−i}·d_j`. Distances inside the generated range
//! are computed exactly. Beyond it, `d_j ≤ c8/‖y_j‖²` with
//! `c8 = 2·c4·c6/c5`, where `c4` bounds `|det y_j|`, `c6` is the sum of the
//! absolute entries of `M` and `c5` is the measured growth constant
//! `‖y_{j+2}‖ ≥ c5·‖y_{j+1}‖·‖y_j‖`. Once `c5²·‖y_{n−1}‖² ≥ 8` the tail terms
//! shrink by a factor 4 at each step and the tail is at most
//! `(4/3)·c8/‖y_n‖²`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{proj_dist_upper, CertifiedReal, Dyadic, RealSource};
use crate::error::{Error, Result};

use super::sequence::ExtremalSequence;

/// Significant bits kept in the radius bookkeeping.
const BOUND_BITS: u64 = 128;

/// The constants entering the tail bound, as upper (`c4`, `c6`, `c8`) and
/// lower (`c5`) dyadic bounds.
#[derive(Clone, Debug)]
pub struct TailConstants {
    pub c4: BigInt,
    pub c5: Dyadic,
    pub c6: BigInt,
    pub c8: Dyadic,
}

/// Measures `c4`, `c5`, `c6` and derives `c8` for a sequence of at least three terms.
pub fn tail_constants(seq: &ExtremalSequence) -> Result<TailConstants> {
    let ys = seq.triples();
    if ys.len() < 3 {
        return Err(Error::InsufficientTerms("at least three terms are needed".into()));
    }
    let c4 = ys.iter().map(|y| y.det2().abs()).max().unwrap_or_default();
    let c6 = seq.matrix().abs_sum();
    let norms: Vec<Dyadic> = ys.iter().map(|y| Dyadic::from_int(y.norm())).collect();
    let mut c5: Option<Dyadic> = None;
    for w in norms.windows(3) {
        let den = (&w[1] * &w[0]).round_up(BOUND_BITS);
        let r = Dyadic::div_down(&w[2], &den, BOUND_BITS)?;
        c5 = Some(match c5 {
            Some(c) if c <= r => c,
            _ => r,
        });
    }
    let c5 = c5.expect("three terms give one ratio");
    if c5.is_zero() || c4.is_zero() {
        return Err(Error::InvalidInput("degenerate growth or determinant constants".into()));
    }
    let num = Dyadic::from_int(&c4 * &c6 * 2);
    let c8 = Dyadic::div_up(&num, &c5, BOUND_BITS)?;
    Ok(TailConstants { c4, c5, c6, c8 })
}

/// Upper bound on `d(y_i, ξ-point)` for 1-based `i ∈ {n−1, n}`.
fn distance_to_limit(seq: &ExtremalSequence, i: usize, k: &TailConstants) -> Result<Dyadic> {
    let n = seq.len();
    let yn = Dyadic::from_int(seq.triples()[n - 1].norm());
    let yn1 = Dyadic::from_int(seq.triples()[n - 2].norm());
    let c5sq = &k.c5 * &k.c5;
    if &c5sq * &(&yn1 * &yn1) < Dyadic::from(8) {
        return Err(Error::InsufficientTerms(
            "terms too small for the tail bound".into(),
        ));
    }
    let yn_sq = (&yn * &yn).round_down(BOUND_BITS);
    let tail = Dyadic::div_up(&(&k.c8 * &Dyadic::from(4)), &(&yn_sq * &Dyadic::from(3)), BOUND_BITS)?;
    let mut bound = tail;
    for j in (i..n).rev() {
        let d = proj_dist_upper(&seq.triples()[j - 1], &seq.triples()[j], BOUND_BITS)?;
        bound = (&d + &bound.shl(1)).round_up(BOUND_BITS);
    }
    Ok(bound)
}

/// Best enclosure of `ξ` the sequence supports.
pub fn xi_best(seq: &ExtremalSequence) -> Result<CertifiedReal> {
    let k = tail_constants(seq)?;
    let n = seq.len();
    let i = if seq.triples()[n - 2].x0().is_zero() { n } else { n - 1 };
    let y = &seq.triples()[i - 1];
    if y.x0().is_zero() {
        return Err(Error::InsufficientTerms("no usable term with y0 ≠ 0".into()));
    }
    let d = distance_to_limit(seq, i, &k)?;
    let norm = Dyadic::from_int(y.norm());
    let y0 = Dyadic::from_int(y.x0().abs());
    // |ξ − y1/y0| ≤ D·‖y‖² / (|y0|·(|y0| − D·‖y‖))
    let slack = (&y0 - &(&d * &norm).round_up(BOUND_BITS)).round_down(BOUND_BITS);
    if slack <= Dyadic::zero() {
        return Err(Error::InsufficientTerms("distance bound too weak".into()));
    }
    let num = (&d * &(&norm * &norm)).round_up(BOUND_BITS);
    let den = (&y0 * &slack).round_down(BOUND_BITS);
    let rad = Dyadic::div_up(&num, &den, BOUND_BITS)?;
    let bits = (-rad.log2_floor().unwrap_or(0)).max(0) as u64 + 64;
    let (mid, err) = Dyadic::from_ratio(y.x1(), y.x0(), bits)?;
    Ok(CertifiedReal::new(mid, &rad + &err))
}

/// Enclosure of `ξ` with radius at most `target`.
pub fn xi_from_sequence(seq: &ExtremalSequence, target: &Dyadic) -> Result<CertifiedReal> {
    let x = xi_best(seq)?;
    if x.rad() > target {
        return Err(Error::InsufficientTerms(format!(
            "{} terms give radius {}, above the requested {}",
            seq.len(),
            x.rad().to_sci_string(3),
            target.to_sci_string(3)
        )));
    }
    Ok(x)
}

/// Extends `seq` until [`xi_from_sequence`] reaches `target`, within `max_terms`.
pub fn xi_extending(seq: &mut ExtremalSequence, target: &Dyadic, max_terms: usize) -> Result<CertifiedReal> {
    loop {
        if seq.len() >= 4 {
            match xi_from_sequence(seq, target) {
                Ok(x) => return Ok(x),
                Err(Error::InsufficientTerms(msg)) if seq.len() >= max_terms => {
                    return Err(Error::InsufficientTerms(msg))
                }
                Err(Error::InsufficientTerms(_)) => {}
                Err(e) => return Err(e),
            }
        }
        seq.extend(1)?;
    }
}

/// `ξ` as a [`RealSource`] backed by a fixed sequence.
#[derive(Clone, Debug)]
pub struct SequenceXi {
    best: CertifiedReal,
}

impl SequenceXi {
    pub fn new(seq: &ExtremalSequence) -> Result<Self> {
        Ok(SequenceXi { best: xi_best(seq)? })
    }

    /// Builds on a copy of `seq` extended until the radius reaches `2^-bits`.
    pub fn with_bits(seq: &ExtremalSequence, bits: u64, max_terms: usize) -> Result<Self> {
        let mut s = seq.clone();
        let best = xi_extending(&mut s, &Dyadic::pow2(-(bits as i64)), max_terms)?;
        Ok(SequenceXi { best })
    }

    pub fn enclosure(&self) -> &CertifiedReal {
        &self.best
    }
}

impl RealSource for SequenceXi {
    fn enclose(&self, bits: u64) -> Result<CertifiedReal> {
        self.best.enclose(bits)
    }

    fn max_bits(&self) -> Option<u64> {
        self.best.max_bits()
    }
}
