//! The distances `{y_{t,0}·ξ³}` from `y_{t,0}·ξ³` to the nearest integer,
//! and the behavior of the three subsequences `t mod 3`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::{CertifiedReal, Dyadic, PrecisionPolicy, RealSource};
use crate::error::{Error, Result};
use crate::extremal::ExtremalSequence;

/// `{y_{t,0}·ξ³}` for `t = 1..=count`.
///
/// Successive values in a class differ by roughly `1/y_{t,0}`, so every
/// value is enclosed to radius `2^-(2B + 64)` with `B` the bit length of the
/// largest `y_{t,0}` in range.
pub fn cubic_gap_sequence(
    seq: &ExtremalSequence,
    xi: &dyn RealSource,
    count: usize,
    policy: &PrecisionPolicy,
) -> Result<Vec<CertifiedReal>> {
    if count > seq.len() {
        return Err(Error::InsufficientTerms(format!(
            "{count} values requested from {} terms",
            seq.len()
        )));
    }
    let ys = &seq.triples()[..count];
    let b = ys.iter().map(|y| y.x0().bits()).max().unwrap_or(0);
    let target = Dyadic::pow2(-((2 * b + 64) as i64));
    let p = PrecisionPolicy { start_bits: policy.start_bits.max(3 * b + 72), ..*policy };
    let x3 = p.escalate("enclosure of ξ³ for the cubic gaps", |bits| {
        let x = xi.enclose(bits)?;
        let x3 = &x.square() * &x;
        let worst = x3.rad() * &Dyadic::from_int(BigInt::one() << b as usize);
        if worst <= target {
            return Ok(Some(x3));
        }
        if xi.max_bits().is_some_and(|m| m < bits) {
            return Err(Error::RadiusTooLarge {
                radius: x.rad().to_sci_string_up(3),
                context: format!("ξ for the cubic gaps of {count} terms; extend the sequence"),
            });
        }
        Ok(None)
    })?;
    ys.iter().map(|y| x3.mul_int(&y.x0().abs()).dist_to_nearest_int()).collect()
}

/// One subsequence `t ≡ residue (mod 3)`.
#[derive(Clone, Debug)]
pub struct GapClass {
    pub residue: usize,
    /// 1-based term indices.
    pub indices: Vec<usize>,
    pub values: Vec<CertifiedReal>,
    /// `Δ_j = v_{j+1} − v_j`.
    pub differences: Vec<CertifiedReal>,
    /// For `j ≥ 1`, whether `|Δ_j| ≤ |Δ_{j−1}|/factor`; `None` when undecided.
    pub contracts: Vec<Option<bool>>,
}

#[derive(Clone, Debug)]
pub struct GapAnalysis {
    pub factor: u32,
    pub classes: Vec<GapClass>,
    pub min_value: CertifiedReal,
}

impl GapAnalysis {
    /// Contraction of every difference from `Δ_2` on, in every class;
    /// `None` when some comparison is undecided.
    pub fn contracts_beyond_second(&self) -> Option<bool> {
        let mut all = Some(true);
        for c in &self.classes {
            for v in c.contracts.iter().skip(1) {
                match v {
                    Some(false) => return Some(false),
                    None => all = None,
                    Some(true) => {}
                }
            }
        }
        all
    }
}

/// Groups the values by `t mod 3`, `t` 1-based, and checks that successive
/// differences shrink by `factor`.
pub fn analyze_gaps(values: &[CertifiedReal], factor: u32) -> GapAnalysis {
    let classes = (0..3)
        .map(|residue| {
            let indices: Vec<usize> = (1..=values.len()).filter(|t| t % 3 == residue).collect();
            let vals: Vec<CertifiedReal> = indices.iter().map(|t| values[t - 1].clone()).collect();
            let differences: Vec<CertifiedReal> = vals.windows(2).map(|w| &w[1] - &w[0]).collect();
            let contracts = differences
                .windows(2)
                .map(|w| {
                    let scaled = w[1].abs().mul_int(&BigInt::from(factor));
                    scaled.cmp_certified(&w[0].abs()).map(|o| o != Ordering::Greater)
                })
                .collect();
            GapClass { residue, indices, values: vals, differences, contracts }
        })
        .collect();
    let min_value = values
        .iter()
        .cloned()
        .reduce(|a, b| if b.lo() < a.lo() { b } else { a })
        .unwrap_or_default();
    GapAnalysis { factor, classes, min_value }
}
