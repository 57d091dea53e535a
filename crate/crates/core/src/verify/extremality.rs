//! The four finite-range conditions characterizing extremal numbers:
//! growth `‖y_{i+1}‖ ≍ ‖y_i‖^γ`, `L_ξ(y_i) ≍ ‖y_i‖^{-1}`, and bounded
//! nonzero `det(y_i)` and `det(y_i, y_{i+1}, y_{i+2})`.

use std::io::Write;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::arith::{det3, height_l, CertifiedReal, Dyadic, GoldenExact, PrecisionPolicy, RealSource};
use crate::error::{Error, Result};
use crate::extremal::{seed::ln, ExtremalSequence};

use super::{f64_json, opt_certified_json, Verdict};

#[derive(Clone, Debug)]
pub struct ExtremalityOptions {
    /// 1-based inclusive range of rows.
    pub range: (usize, usize),
    /// Tolerance tests apply from this row on.
    pub tail_from: usize,
    pub tolerance: f64,
    /// Relative radius wanted on `L_ξ(y_i)·‖y_i‖`, in bits.
    pub rel_bits: u64,
    pub policy: PrecisionPolicy,
}

impl Default for ExtremalityOptions {
    fn default() -> Self {
        ExtremalityOptions { range: (1, 25), tail_from: 10, tolerance: 0.01, rel_bits: 40, policy: PrecisionPolicy::default() }
    }
}

#[derive(Clone, Debug)]
pub struct ExtremalityRow {
    pub i: usize,
    pub norm: BigInt,
    pub det2: BigInt,
    pub det3: BigInt,
    /// `L_ξ(y_i)·‖y_i‖`; `None` when precision ran out.
    pub l_times_norm: Option<CertifiedReal>,
    /// `log‖y_{i+1}‖ / log‖y_i‖`; not finite when `‖y_i‖ = 1`.
    pub log_ratio: f64,
    /// Bounds on `log L_ξ(y_i) / log‖y_i‖`.
    pub slope: Option<(f64, f64)>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct ExtremalityCertificate {
    pub range: (usize, usize),
    pub tail_from: usize,
    pub tolerance: f64,
    pub rows: Vec<ExtremalityRow>,
    /// Per-condition constants: growth, `L`, `det`, `det3`.
    pub constants: [f64; 4],
    /// Smallest `c` for which the four conditions hold on the range.
    pub c: f64,
    pub verdict: Verdict,
    pub failures: Vec<String>,
}

/// Encloses `L_ξ(y)·‖y‖` to `rel_bits` relative bits, or `None` if the
/// source or the cap stops first.
fn l_times_norm(y: &crate::arith::IntTriple, xi: &dyn RealSource, opts: &ExtremalityOptions) -> Option<CertifiedReal> {
    let norm = y.norm();
    let mut bits = opts.policy.start_bits.max(2 * norm.bits() + opts.rel_bits + 16);
    loop {
        let x = xi.enclose(bits).ok()?;
        let v = height_l(y, &x).mul_int(&norm);
        let lo = v.lo();
        if lo > Dyadic::zero() && v.rad() <= &(&lo * &Dyadic::pow2(-(opts.rel_bits as i64))) {
            return Some(v);
        }
        if bits >= opts.policy.cap_bits || xi.max_bits().is_some_and(|m| m < bits) {
            return None;
        }
        bits = (bits * 2).min(opts.policy.cap_bits);
    }
}

/// Evaluates all four condition families on `range`. Needs terms up to
/// `range.1 + 2`.
pub fn extremality_certificate(
    seq: &ExtremalSequence,
    xi: &dyn RealSource,
    opts: &ExtremalityOptions,
) -> Result<ExtremalityCertificate> {
    let (a, b) = opts.range;
    if seq.len() < 3 {
        return Err(Error::InsufficientTerms("at least three terms are needed".into()));
    }
    if a == 0 || a > b {
        return Err(Error::InvalidInput(format!("bad range {a}:{b}")));
    }
    if seq.len() < b + 2 {
        return Err(Error::InsufficientTerms(format!("range {a}:{b} needs {} terms, have {}", b + 2, seq.len())));
    }
    let gamma = GoldenExact::gamma().to_f64();
    let y = |i: usize| seq.term(i).expect("checked length");
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    let mut constants = [1.0f64; 4];
    for i in a..=b {
        let (yi, yj, yk) = (y(i), y(i + 1), y(i + 2));
        let norm = yi.norm();
        let det2 = yi.det2();
        let d3 = det3(yi, yj, yk);
        let mut verdict = Verdict::Pass;
        if det2.is_zero() {
            failures.push(format!("det(y_{i}) = 0"));
            verdict = Verdict::Fail;
        }
        if d3.is_zero() {
            failures.push(format!("det(y_{i}, y_{}, y_{}) = 0", i + 1, i + 2));
            verdict = Verdict::Fail;
        }
        constants[2] = constants[2].max(det2.abs().to_f64().unwrap_or(f64::INFINITY));
        constants[3] = constants[3].max(d3.abs().to_f64().unwrap_or(f64::INFINITY));

        let (ln_i, ln_j) = (ln(&norm), ln(&yj.norm()));
        constants[0] = constants[0].max((ln_j - gamma * ln_i).abs().exp());
        let log_ratio = ln_j / ln_i;

        let ln_norm = l_times_norm(yi, xi, opts);
        let slope = ln_norm.as_ref().and_then(|v| {
            let (lo, hi) = v.ln_bounds()?;
            constants[1] = constants[1].max(hi.exp()).max((-lo).exp());
            // log L = log(L‖y‖) − log‖y‖
            (ln_i > 0.0).then(|| ((lo - ln_i) / ln_i, (hi - ln_i) / ln_i))
        });
        if ln_norm.is_none() {
            verdict = verdict.and(Verdict::Indeterminate);
        }

        if i >= opts.tail_from {
            // NaN counts as outside
            let close = |v: f64| v.abs() <= opts.tolerance;
            if !close(log_ratio - gamma) {
                failures.push(format!("row {i}: log-ratio {log_ratio:.6} is not within {} of γ", opts.tolerance));
                verdict = Verdict::Fail;
            }
            match slope {
                Some((lo, hi)) => {
                    let (dlo, dhi) = (lo + 1.0, hi + 1.0);
                    if dlo.abs() <= opts.tolerance && dhi.abs() <= opts.tolerance {
                    } else if dlo > opts.tolerance || dhi < -opts.tolerance {
                        failures.push(format!("row {i}: slope in [{lo:.6}, {hi:.6}] is not within {} of −1", opts.tolerance));
                        verdict = Verdict::Fail;
                    } else {
                        verdict = verdict.and(Verdict::Indeterminate);
                    }
                }
                None => verdict = verdict.and(Verdict::Indeterminate),
            }
        }
        rows.push(ExtremalityRow { i, norm, det2, det3: d3, l_times_norm: ln_norm, log_ratio, slope, verdict });
    }
    let verdict = rows.iter().fold(Verdict::Pass, |v, r| v.and(r.verdict));
    let c = constants.iter().cloned().fold(1.0, f64::max);
    Ok(ExtremalityCertificate {
        range: (a, b),
        tail_from: opts.tail_from,
        tolerance: opts.tolerance,
        rows,
        constants,
        c,
        verdict,
        failures,
    })
}

impl ExtremalityCertificate {
    pub fn statement(&self) -> String {
        match self.verdict {
            Verdict::Pass => format!(
                "consistent with the extremality conditions on range [{}, {}] with c = {:.6}",
                self.range.0, self.range.1, self.c
            ),
            Verdict::Fail => format!("not consistent on range [{}, {}]: {}", self.range.0, self.range.1, self.failures.join("; ")),
            Verdict::Indeterminate => {
                format!("undecided on range [{}, {}]: precision exhausted on some rows", self.range.0, self.range.1)
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "i": r.i,
                    "norm": r.norm.to_string(),
                    "det2": r.det2.to_string(),
                    "det3": r.det3.to_string(),
                    "l_times_norm": opt_certified_json(&r.l_times_norm),
                    "log_ratio": f64_json(r.log_ratio),
                    "slope": r.slope.map(|(lo, hi)| json!([lo, hi])),
                    "verdict": r.verdict,
                })
            })
            .collect();
        json!({
            "kind": "extremality",
            "range": [self.range.0, self.range.1],
            "tail_from": self.tail_from,
            "tolerance": self.tolerance,
            "constants": {
                "growth": self.constants[0],
                "l": self.constants[1],
                "det2": self.constants[2],
                "det3": self.constants[3],
            },
            "c": self.c,
            "verdict": self.verdict,
            "statement": self.statement(),
            "failures": self.failures,
            "rows": rows,
        })
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["i", "norm", "det2", "det3", "l_times_norm_mid", "l_times_norm_rad", "log_ratio", "verdict"])?;
        for r in &self.rows {
            let (mid, rad) = r.l_times_norm.as_ref().map_or((String::new(), String::new()), |v| v.to_decimal_pair(20));
            out.write_record([
                r.i.to_string(),
                r.norm.to_string(),
                r.det2.to_string(),
                r.det3.to_string(),
                mid,
                rad,
                r.log_ratio.to_string(),
                r.verdict.to_string(),
            ])?;
        }
        out.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::radius_bits;
    use crate::extremal::{example_two_seed, fibonacci_seed, xi_extending};

    fn cert(seed: crate::extremal::Seed, b: usize) -> ExtremalityCertificate {
        let mut s = ExtremalSequence::generate(seed, b + 2).unwrap();
        let target = radius_bits(4 * s.term(b).unwrap().norm().bits() + 64);
        let x = xi_extending(&mut s, &target, b + 20).unwrap();
        let opts = ExtremalityOptions { range: (1, b), ..Default::default() };
        extremality_certificate(&s, &x, &opts).unwrap()
    }

    #[test]
    fn fibonacci_sequence_passes() {
        let c = cert(fibonacci_seed(1, 2).unwrap(), 20);
        assert_eq!(c.verdict, Verdict::Pass, "{:?}", c.failures);
        assert!(c.rows.iter().all(|r| r.det2.abs() == BigInt::from(1)));
        assert!(c.statement().starts_with("consistent"));
    }

    #[test]
    fn example_two_passes() {
        let c = cert(example_two_seed(2).unwrap(), 18);
        assert_eq!(c.verdict, Verdict::Pass, "{:?}", c.failures);
    }

    #[test]
    fn coarse_xi_is_indeterminate_not_fail() {
        let s = ExtremalSequence::generate(fibonacci_seed(1, 2).unwrap(), 14).unwrap();
        let x = CertifiedReal::from_ratio(&7205.into(), &10000.into(), 64).unwrap();
        let x = CertifiedReal::new(x.mid().clone(), Dyadic::pow2(-20));
        let opts = ExtremalityOptions { range: (1, 12), ..Default::default() };
        let c = extremality_certificate(&s, &x, &opts).unwrap();
        assert_eq!(c.verdict, Verdict::Indeterminate);
        assert_eq!(c.to_json()["verdict"], "INDETERMINATE");
    }

    #[test]
    fn short_sequence_is_an_error() {
        let s = ExtremalSequence::generate(fibonacci_seed(1, 2).unwrap(), 2).unwrap();
        let x = CertifiedReal::from_int(0);
        assert!(extremality_certificate(&s, &x, &ExtremalityOptions::default()).is_err());
    }
}
