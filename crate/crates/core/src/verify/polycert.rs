//! Checks on minimal polynomials: the subsequence `Q_k` with its height
//! growth, `|Q_k(ξ)| ≍ H(Q_k)^{−γ³}`, bounded resultants and determinants,
//! and the two-sided estimate for `L_ξ(P ∧ Q)`.

use std::cmp::Ordering;
use std::io::Write;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{
    det3, height_l, resultant, wedge_poly, CertifiedReal, Dyadic, GoldenExact, IntTriple, Poly2, PrecisionPolicy,
    RealSource,
};
use crate::error::{Error, Result};
use crate::extremal::ExtremalSequence;
use crate::minimal::{q_indices, MinimalPolyRecord};

use super::{f64_json, Verdict};

/// The exponent reading recorded in the certificate metadata.
pub const EXPONENT_READING: &str = "two-sided bound |Q_k(ξ)| ≍ H(Q_k)^(−γ³), γ³ = 2γ + 1";

#[derive(Clone, Debug)]
pub struct PolyRow {
    pub k: usize,
    /// Index into the list of minimal polynomials.
    pub record: usize,
    pub poly: Poly2,
    pub height: BigInt,
    /// Bounds on `|Q_k(ξ)|·H(Q_k)^{γ³}`; `None` when precision ran out.
    pub scaled_value: Option<(f64, f64)>,
    /// `|Res(Q_k, Q_{k+1})|`, when `Q_{k+1}` exists.
    pub resultant: Option<BigInt>,
    /// `|det(Q_k, Q_{k+1}, Q_{k+2})|`, when `Q_{k+2}` exists.
    pub det: Option<BigInt>,
    /// `log H(Q_{k+1}) / log H(Q_k)`.
    pub log_height_ratio: Option<f64>,
    /// `Q_k ∧ Q_{k+1}`.
    pub wedge: Option<IntTriple>,
    /// 1-based index `t` with `wedge = ±y_t`.
    pub wedge_term: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct PolyCertificate {
    pub rows: Vec<PolyRow>,
    /// Largest `|Res|`, `|det|` and two-sided value ratio over the rows.
    pub c2: f64,
    /// Largest `|Res(Q_k, Q_{k+1})|`.
    pub max_resultant: BigInt,
    pub verdict: Verdict,
    pub failures: Vec<String>,
}

/// `|P(ξ)|` to `rel_bits` relative bits.
fn abs_value(p: &Poly2, xi: &dyn RealSource, policy: &PrecisionPolicy, rel_bits: u64) -> Option<CertifiedReal> {
    let mut bits = policy.start_bits;
    loop {
        let v = p.eval(&xi.enclose(bits).ok()?).abs();
        let lo = v.lo();
        if lo > Dyadic::zero() && v.rad() <= &(&lo * &Dyadic::pow2(-(rel_bits as i64))) {
            return Some(v);
        }
        if bits >= policy.cap_bits || xi.max_bits().is_some_and(|m| m < bits) {
            return None;
        }
        bits = (bits * 2).min(policy.cap_bits);
    }
}

fn ln_big(n: &BigInt) -> f64 {
    Dyadic::from_int(n.clone()).ln_abs()
}

/// Certificate over the `Q_k` extracted from `polys`. When `seq` is given,
/// each wedge `Q_k ∧ Q_{k+1}` is matched against its terms.
pub fn poly_certificate(
    polys: &[MinimalPolyRecord],
    xi: &dyn RealSource,
    seq: Option<&ExtremalSequence>,
    policy: &PrecisionPolicy,
) -> Result<PolyCertificate> {
    let idx = q_indices(polys);
    if idx.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "{} usable polynomials Q_k among {} minimal polynomials; at least 3 are needed",
            idx.len(),
            polys.len()
        )));
    }
    let g3 = 2.0 * GoldenExact::gamma().to_f64() + 1.0;
    let q = |k: usize| &polys[idx[k]].poly;
    let mut failures = Vec::new();
    let mut verdict = Verdict::Pass;
    let mut c2 = 1.0f64;
    let mut max_resultant = BigInt::zero();
    let mut rows = Vec::new();
    for k in 0..idx.len() {
        let poly = q(k).clone();
        let height = poly.height();
        let ln_h = ln_big(&height);
        let scaled_value = abs_value(&poly, xi, policy, 40).and_then(|v| v.ln_bounds()).map(|(lo, hi)| {
            let slack = 1e-12 * (g3 * ln_h).abs().max(1.0);
            ((lo + g3 * ln_h - slack).exp(), (hi + g3 * ln_h + slack).exp())
        });
        match scaled_value {
            Some((lo, hi)) => c2 = c2.max(hi).max(1.0 / lo),
            None => verdict = verdict.and(Verdict::Indeterminate),
        }
        let next = (k + 1 < idx.len()).then(|| q(k + 1));
        let res = next.map(|n| resultant(&poly, n).abs());
        if let Some(r) = &res {
            if r.is_zero() {
                failures.push(format!("Res(Q_{}, Q_{}) = 0", k + 1, k + 2));
                verdict = Verdict::Fail;
            }
            c2 = c2.max(r.to_f64().unwrap_or(f64::INFINITY));
            max_resultant = max_resultant.max(r.clone());
        }
        let det = (k + 2 < idx.len()).then(|| det3(&poly.to_triple(), &q(k + 1).to_triple(), &q(k + 2).to_triple()).abs());
        if let Some(d) = &det {
            if d.is_zero() {
                failures.push(format!("det(Q_{}, Q_{}, Q_{}) = 0", k + 1, k + 2, k + 3));
                verdict = Verdict::Fail;
            }
            c2 = c2.max(d.to_f64().unwrap_or(f64::INFINITY));
        }
        let log_height_ratio = next.map(|n| ln_big(&n.height()) / ln_h);
        let wedge = next.map(|n| wedge_poly(&poly, n));
        let wedge_term = match (&wedge, seq) {
            (Some(w), Some(s)) => {
                let w = w.sign_normalized();
                s.triples().iter().position(|y| y.sign_normalized() == w).map(|i| i + 1)
            }
            _ => None,
        };
        rows.push(PolyRow {
            k: k + 1,
            record: idx[k],
            poly,
            height,
            scaled_value,
            resultant: res,
            det,
            log_height_ratio,
            wedge,
            wedge_term,
        });
    }
    Ok(PolyCertificate { rows, c2, max_resultant, verdict, failures })
}

impl PolyCertificate {
    /// Whether every scaled value interval lies inside `[lo, hi]`.
    pub fn values_within(&self, lo: f64, hi: f64) -> Option<bool> {
        let mut all = Some(true);
        for r in &self.rows {
            match r.scaled_value {
                Some((a, b)) if a >= lo && b <= hi => {}
                Some((a, b)) if b < lo || a > hi => return Some(false),
                _ => all = None,
            }
        }
        all
    }

    /// Largest `|Res(Q_k, Q_{k+1})|` over the first `rows` rows.
    pub fn max_resultant_upto(&self, rows: usize) -> BigInt {
        self.rows.iter().take(rows).filter_map(|r| r.resultant.clone()).max().unwrap_or_default()
    }

    /// Whether the largest resultant over all rows stays within a factor
    /// `1 + tol` of the largest over all rows but the last.
    pub fn resultant_stable(&self, tol: f64) -> bool {
        let n = self.rows.iter().filter(|r| r.resultant.is_some()).count();
        if n < 2 {
            return true;
        }
        let full = self.max_resultant.to_f64().unwrap_or(f64::INFINITY);
        let prefix = self.max_resultant_upto(n - 1).to_f64().unwrap_or(f64::INFINITY);
        full <= (1.0 + tol) * prefix
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": "polynomials",
            "reading": EXPONENT_READING,
            "c2": self.c2,
            "max_resultant": self.max_resultant.to_string(),
            "verdict": self.verdict,
            "failures": self.failures,
            "rows": self.rows.iter().map(|r| json!({
                "k": r.k,
                "record": r.record,
                "poly": r.poly.coeffs().map(|c| c.to_string()),
                "height": r.height.to_string(),
                "scaled_value": r.scaled_value.map(|(a, b)| json!([f64_json(a), f64_json(b)])),
                "resultant": r.resultant.as_ref().map(|v| v.to_string()),
                "det": r.det.as_ref().map(|v| v.to_string()),
                "log_height_ratio": r.log_height_ratio.map(f64_json),
                "wedge": r.wedge.as_ref().map(|w| w.0.clone().map(|v| v.to_string())),
                "wedge_term": r.wedge_term,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["k", "p0", "p1", "p2", "height", "scaled_lo", "scaled_hi", "resultant", "det", "wedge_term"])?;
        let opt = |v: &Option<BigInt>| v.as_ref().map_or(String::new(), |x| x.to_string());
        for r in &self.rows {
            let [p0, p1, p2] = r.poly.coeffs().map(|c| c.to_string());
            let (lo, hi) = r.scaled_value.map_or((String::new(), String::new()), |(a, b)| (a.to_string(), b.to_string()));
            out.write_record([
                r.k.to_string(),
                p0,
                p1,
                p2,
                r.height.to_string(),
                lo,
                hi,
                opt(&r.resultant),
                opt(&r.det),
                r.wedge_term.map_or(String::new(), |t| t.to_string()),
            ])?;
        }
        out.flush()?;
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SandwichStatus {
    Holds,
    Violated,
    PreconditionFalse,
    /// Precondition or bounds undecided at the precision cap; skipped.
    Undecided,
}

#[derive(Clone, Debug)]
pub struct SandwichRow {
    pub p: Poly2,
    pub q: Poly2,
    pub wedge: IntTriple,
    pub status: SandwichStatus,
}

#[derive(Clone, Debug)]
pub struct SandwichReport {
    pub rows: Vec<SandwichRow>,
    pub verdict: Verdict,
}

/// Evaluates the estimate for one pair at a fixed enclosure of `ξ`.
pub fn sandwich_at(p: &Poly2, q: &Poly2, x: &CertifiedReal) -> Option<SandwichStatus> {
    let (hp, hq) = (p.height(), q.height());
    let (pv, qv) = (p.eval(x).abs(), q.eval(x).abs());
    let lhs = qv.mul_int(&(hp * 2));
    let scale = pv.mul_int(&hq);
    if lhs.cmp_certified(&scale)? == Ordering::Greater {
        return Some(SandwichStatus::PreconditionFalse);
    }
    let l = height_l(&wedge_poly(p, q), x);
    let m = (&x.abs() + &x.square()).max(&CertifiedReal::from_int(1));
    let lower = scale.div(&m.mul_int(&2.into()), 128).ok()?;
    let upper = scale.mul_int(&3.into()).div(&CertifiedReal::from_int(2), 128).ok()?;
    let ok_lo = lower.cmp_certified(&l).map(|o| o != Ordering::Greater);
    let ok_hi = l.cmp_certified(&upper).map(|o| o != Ordering::Greater);
    match (ok_lo, ok_hi) {
        (Some(true), Some(true)) => Some(SandwichStatus::Holds),
        (Some(false), _) | (_, Some(false)) => Some(SandwichStatus::Violated),
        _ => None,
    }
}

/// Checks the two-sided `L_ξ(P ∧ Q)` estimate on consecutive records.
pub fn dual_sandwich_check(polys: &[MinimalPolyRecord], xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<SandwichReport> {
    let mut rows = Vec::new();
    for w in polys.windows(2) {
        let (p, q) = (&w[0].poly, &w[1].poly);
        let status = match policy.escalate("estimate for L(P ∧ Q)", |bits| Ok(sandwich_at(p, q, &xi.enclose(bits)?))) {
            Ok(s) => s,
            Err(Error::PrecisionCap { .. }) => SandwichStatus::Undecided,
            Err(e) => return Err(e),
        };
        rows.push(SandwichRow { p: p.clone(), q: q.clone(), wedge: wedge_poly(p, q), status });
    }
    let verdict = rows.iter().fold(Verdict::Pass, |v, r| {
        v.and(match r.status {
            SandwichStatus::Violated => Verdict::Fail,
            SandwichStatus::Undecided => Verdict::Indeterminate,
            _ => Verdict::Pass,
        })
    });
    Ok(SandwichReport { rows, verdict })
}

impl SandwichReport {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": "sandwich",
            "verdict": self.verdict,
            "rows": self.rows.iter().map(|r| json!({
                "p": r.p.coeffs().map(|c| c.to_string()),
                "q": r.q.coeffs().map(|c| c.to_string()),
                "wedge": r.wedge.0.clone().map(|v| v.to_string()),
                "status": r.status,
            })).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::radius_bits;
    use crate::extremal::{fibonacci_seed, xi_extending};
    use crate::minimal::{minimal_polys, ScanConfig};

    fn seven_tenths() -> CertifiedReal {
        CertifiedReal::from_ratio(&7.into(), &10.into(), 200).unwrap()
    }

    #[test]
    fn hand_checked_pairs() {
        let x = seven_tenths();
        // 2·1·0.49 > 1·0.7
        assert_eq!(sandwich_at(&Poly2::new(0, 1, 0), &Poly2::new(0, 0, 1), &x), Some(SandwichStatus::PreconditionFalse));
        // Q = 10T − 7 nearly vanishes; P ∧ Q = (0, 0, 3) and L = 3 = H(Q)|P(ξ)|
        let p = Poly2::new(-1, 1, 0);
        let q = Poly2::new(-7, 10, 0);
        assert_eq!(wedge_poly(&p, &q), IntTriple::new(0, 0, 3));
        assert_eq!(sandwich_at(&p, &q, &x), Some(SandwichStatus::Holds));
    }

    #[test]
    fn equal_pair_fails_precondition() {
        let x = seven_tenths();
        let p = Poly2::new(-2, 1, 3);
        assert_eq!(sandwich_at(&p, &p, &x), Some(SandwichStatus::PreconditionFalse));
    }

    #[test]
    fn fibonacci_polynomials_certify() {
        let mut s = ExtremalSequence::new(fibonacci_seed(1, 2).unwrap());
        let x = xi_extending(&mut s, &radius_bits(400), 40).unwrap();
        let polys = minimal_polys(&x, 3000, &ScanConfig::default()).unwrap();
        let policy = PrecisionPolicy::default();
        let c = poly_certificate(&polys, &x, Some(&s), &policy).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
        assert_eq!(c.values_within(1e-3, 1e3), Some(true));
        assert!(c.resultant_stable(0.1));
        assert!(c.rows.iter().filter(|r| r.wedge.is_some()).all(|r| r.wedge_term.is_some()));
        let sw = dual_sandwich_check(&polys, &x, &policy).unwrap();
        assert_eq!(sw.verdict, Verdict::Pass);
        assert!(sw.rows.iter().any(|r| r.status == SandwichStatus::Holds));
        assert!(c.to_json()["reading"].as_str().unwrap().contains("γ³"));
    }

    #[test]
    fn too_few_polynomials() {
        let polys: Vec<MinimalPolyRecord> = Vec::new();
        let x = seven_tenths();
        assert!(matches!(
            poly_certificate(&polys, &x, None, &PrecisionPolicy::default()),
            Err(Error::InsufficientData(_))
        ));
    }
}
