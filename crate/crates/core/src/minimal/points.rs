//! Minimal points: the integer points `x` with `‖x‖ ≤ X` realizing record
//! small values of `L_ξ(x)` as the norm grows.
//!
//! For `0 < ξ < 1` a point of norm `N ≥ 2` whose first coordinate is not `N`
//! has `L_ξ ≥ 1` and cannot beat the norm-one record, which is below `1/2`.
//! So beyond the exhaustively scanned norms `≤ 3` only
//! `(N, nearest(Nξ), nearest(Nξ²))` can be a record.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{height_l, CertifiedReal, IntTriple, PrecisionPolicy, RealSource};
use crate::error::{Error, Result};
use crate::extremal::ExtremalSequence;
use crate::fixed::{frac_bits_for, Fixed};
use crate::par::{map_chunks, Execution};

/// Norms up to this bound are scanned over the whole cube.
const EXHAUSTIVE_NORM: i64 = 3;

#[derive(Clone, Debug)]
pub struct MinimalPointRecord {
    pub point: IntTriple,
    pub norm: BigInt,
    pub l_value: CertifiedReal,
}

/// Execution settings shared by the scans.
#[derive(Clone, Copy, Debug)]
pub struct ScanConfig {
    pub exec: Execution,
    pub policy: PrecisionPolicy,
    /// Work items per parallel chunk.
    pub chunk: i64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { exec: Execution::default(), policy: PrecisionPolicy::default(), chunk: 1 << 14 }
    }
}

impl ScanConfig {
    pub fn with_exec(exec: Execution) -> Self {
        ScanConfig { exec, ..Default::default() }
    }
}

/// Encloses `ξ` for a scan and checks `0 < ξ < 1`.
pub(crate) fn unit_interval_xi(xi: &dyn RealSource, bits: u64) -> Result<CertifiedReal> {
    let x = xi.enclose(bits)?;
    let zero = CertifiedReal::default();
    let one = CertifiedReal::from_int(1);
    if x.cmp_certified(&zero) != Some(Ordering::Greater) || x.cmp_certified(&one) != Some(Ordering::Less) {
        return Err(Error::InvalidInput(
            "ξ must lie in (0, 1); translate it by an integer first".into(),
        ));
    }
    Ok(x)
}

/// The candidate of norm `n` and its `L` value in certified arithmetic, or
/// `None` when the rounding is not decided at this precision.
fn candidate_certified(n: i64, xi: &CertifiedReal) -> Option<(IntTriple, CertifiedReal)> {
    let nx = xi.mul_int(&n.into());
    let nx2 = xi.square().mul_int(&n.into());
    let a = nx.dist_to_nearest_int().ok()?;
    let b = nx2.dist_to_nearest_int().ok()?;
    let r1 = nx.lo().round_to_int();
    let r2 = nx2.lo().round_to_int();
    if r1 != nx.hi().round_to_int() || r2 != nx2.hi().round_to_int() {
        return None;
    }
    Some((IntTriple([n.into(), r1, r2]), a.max(&b)))
}

fn candidate_escalated(n: i64, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<(IntTriple, CertifiedReal)> {
    policy.escalate(&format!("rounding of the completion of x0 = {n}"), |bits| {
        Ok(candidate_certified(n, &xi.enclose(bits)?))
    })
}

/// The two linear forms `x1 − ξx0` and `x2 − ξ²x0` as coefficient vectors
/// over `(1, ξ, ξ²)`, sign-normalized so that equal absolute values of
/// distinct forms can only come from a quadratic relation for `ξ`.
fn l_forms(x: &IntTriple) -> [[BigInt; 3]; 2] {
    let norm = |f: [BigInt; 3]| {
        if f.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
            f.map(|c| -c)
        } else {
            f
        }
    };
    [
        norm([x.x1().clone(), -x.x0(), BigInt::zero()]),
        norm([x.x2().clone(), BigInt::zero(), -x.x0()]),
    ]
}

fn eval_form(f: &[BigInt; 3], xi: &CertifiedReal, xi2: &CertifiedReal) -> CertifiedReal {
    (&(&CertifiedReal::from_int(f[0].clone()) + &xi.mul_int(&f[1])) + &xi2.mul_int(&f[2])).abs()
}

/// The form realizing `L(x)` at this precision, if decided.
fn dominant<'a>(
    forms: &'a [[BigInt; 3]; 2],
    xi: &CertifiedReal,
    xi2: &CertifiedReal,
) -> Option<(&'a [BigInt; 3], CertifiedReal)> {
    let a = eval_form(&forms[0], xi, xi2);
    if forms[0] == forms[1] {
        return Some((&forms[0], a));
    }
    let b = eval_form(&forms[1], xi, xi2);
    match a.cmp_certified(&b)? {
        Ordering::Less => Some((&forms[1], b)),
        _ => Some((&forms[0], a)),
    }
}

/// Compares `L(a)` with `L(b)`, escalating precision as needed. Values that
/// coincide because both maxima come from the same form compare equal.
pub(crate) fn l_cmp(a: &IntTriple, b: &IntTriple, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<Ordering> {
    let (fa, fb) = (l_forms(a), l_forms(b));
    policy.escalate(&format!("comparison of L at {a} and {b}"), |bits| {
        let x = xi.enclose(bits)?;
        let x2 = x.square();
        let (Some((da, va)), Some((db, vb))) = (dominant(&fa, &x, &x2), dominant(&fb, &x, &x2)) else {
            return Ok(None);
        };
        if da == db {
            return Ok(Some(Ordering::Equal));
        }
        Ok(va.cmp_certified(&vb).filter(|o| *o != Ordering::Equal || x.is_exact()))
    })
}

fn l_less(a: &IntTriple, b: &IntTriple, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<bool> {
    Ok(l_cmp(a, b, xi, policy)? == Ordering::Less)
}

/// All primitive, sign-normalized points of norm `n`.
fn points_of_norm(n: i64) -> Vec<IntTriple> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in -n..=n {
            for c in -n..=n {
                let p = IntTriple::new(a, b, c);
                if p.norm() == BigInt::from(n) && p.is_primitive() {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[derive(Clone)]
struct Cand {
    n: i64,
    l: Fixed,
    point: Option<IntTriple>,
}

/// The minimal points of `ξ` with norm at most `xmax`.
pub fn minimal_points(xi: &dyn RealSource, xmax: u64, cfg: &ScanConfig) -> Result<Vec<MinimalPointRecord>> {
    if xmax == 0 {
        return Err(Error::InvalidInput("xmax must be positive".into()));
    }
    let xmax = i64::try_from(xmax).map_err(|_| Error::InvalidInput("xmax too large".into()))?;
    let frac = frac_bits_for(64 - xmax.leading_zeros() + 1);
    let x = unit_interval_xi(xi, frac as u64 + 16)?;
    let xf = Fixed::from_certified(&x, frac).expect("ξ in (0,1) fits");
    let x2f = Fixed::from_certified(&x.square(), frac).expect("ξ² in (0,1) fits");
    let policy = &cfg.policy;

    // exhaustive part: best point of each small norm, then prefix records
    let mut records: Vec<(IntTriple, Option<Fixed>)> = Vec::new();
    for n in 1..=EXHAUSTIVE_NORM.min(xmax) {
        let mut best: Option<IntTriple> = None;
        for p in points_of_norm(n) {
            best = match best {
                Some(b) if !l_less(&p, &b, xi, policy)? => Some(b),
                _ => Some(p),
            };
        }
        let best = best.expect("every norm has points");
        match records.last() {
            Some((r, _)) if !l_less(&best, r, xi, policy)? => {}
            _ => records.push((best, None)),
        }
    }

    // large norms: chunk-local prefix minima of L(N), merged in order
    let start = EXHAUSTIVE_NORM + 1;
    let chunk_records: Vec<Result<Vec<Cand>>> = if xmax >= start {
        map_chunks(start..xmax + 1, cfg.chunk, cfg.exec, |range| {
            let mut local: Vec<Cand> = Vec::new();
            for n in range {
                let cand = fixed_candidate(n, xf, x2f, frac)
                    .map(|l| Cand { n, l, point: None })
                    .map_or_else(|| escalated_cand(n, xi, policy, frac), Ok)?;
                let better = match local.last() {
                    None => true,
                    Some(prev) => cand_less(&cand, prev, xi, policy, frac, xf, x2f)?,
                };
                if better {
                    local.push(cand);
                }
            }
            Ok(local)
        })
    } else {
        Vec::new()
    };

    let mut current: Option<Cand> = None;
    let small_best = records.last().map(|(p, _)| p.clone());
    for chunk in chunk_records {
        for cand in chunk? {
            let better = match &current {
                Some(c) => cand_less(&cand, c, xi, policy, frac, xf, x2f)?,
                None => match &small_best {
                    Some(p) => l_less(&cand_point(&cand, xf, x2f, frac, xi, policy)?, p, xi, policy)?,
                    None => true,
                },
            };
            if better {
                current = Some(cand.clone());
                let p = cand_point(&cand, xf, x2f, frac, xi, policy)?;
                records.push((p, Some(cand.l)));
            }
        }
    }

    let finish_bits = policy.start_bits.max(frac as u64 + 16);
    let xfin = xi.enclose(finish_bits)?;
    Ok(records
        .into_iter()
        .map(|(point, _)| {
            let l_value = height_l(&point, &xfin);
            MinimalPointRecord { norm: point.norm(), point, l_value }
        })
        .collect())
}

/// `L(N)` in fixed point, when both roundings are decided.
fn fixed_candidate(n: i64, xf: Fixed, x2f: Fixed, frac: u32) -> Option<Fixed> {
    let (a, _) = xf.mul_int(n)?.dist_to_nearest_int(frac)?;
    let (b, _) = x2f.mul_int(n)?.dist_to_nearest_int(frac)?;
    Some(a.max(b))
}

fn escalated_cand(n: i64, xi: &dyn RealSource, policy: &PrecisionPolicy, frac: u32) -> Result<Cand> {
    let (p, l) = candidate_escalated(n, xi, policy)?;
    let lf = Fixed::from_certified(&l, frac).ok_or_else(|| Error::InvalidInput("L out of range".into()))?;
    Ok(Cand { n, l: lf, point: Some(p) })
}

fn cand_point(c: &Cand, xf: Fixed, x2f: Fixed, frac: u32, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<IntTriple> {
    if let Some(p) = &c.point {
        return Ok(p.clone());
    }
    let r1 = xf.mul_int(c.n).and_then(|v| v.nearest_int(frac));
    let r2 = x2f.mul_int(c.n).and_then(|v| v.nearest_int(frac));
    match (r1, r2) {
        (Some(a), Some(b)) => Ok(IntTriple::new(c.n, BigInt::from(a), BigInt::from(b))),
        _ => Ok(candidate_escalated(c.n, xi, policy)?.0),
    }
}

fn cand_less(
    a: &Cand,
    b: &Cand,
    xi: &dyn RealSource,
    policy: &PrecisionPolicy,
    frac: u32,
    xf: Fixed,
    x2f: Fixed,
) -> Result<bool> {
    match a.l.cmp_certified(&b.l) {
        Some(Ordering::Less) => Ok(true),
        Some(Ordering::Greater) => Ok(false),
        _ => {
            let pa = cand_point(a, xf, x2f, frac, xi, policy)?;
            let pb = cand_point(b, xf, x2f, frac, xi, policy)?;
            l_less(&pa, &pb, xi, policy)
        }
    }
}

/// Result of matching minimal points against the terms of a sequence.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    /// For each record, the 1-based index `t` with `point = ±y_t`, if any.
    pub matches: Vec<Option<usize>>,
    /// Smallest norm from which every record is `±` a term.
    pub n0: Option<BigInt>,
}

impl CrossCheck {
    pub fn unmatched<'a>(&'a self, records: &'a [MinimalPointRecord]) -> impl Iterator<Item = &'a MinimalPointRecord> {
        records.iter().zip(&self.matches).filter(|(_, m)| m.is_none()).map(|(r, _)| r)
    }
}

/// Matches each record with `±y_t`; `n0` is the norm of the first record
/// after the last unmatched one.
pub fn crosscheck(records: &[MinimalPointRecord], seq: &ExtremalSequence) -> CrossCheck {
    let matches: Vec<Option<usize>> = records
        .iter()
        .map(|r| {
            let p = r.point.sign_normalized();
            seq.triples().iter().position(|y| y.sign_normalized() == p).map(|i| i + 1)
        })
        .collect();
    let first_good = match matches.iter().rposition(Option::is_none) {
        None => Some(0),
        Some(k) if k + 1 < records.len() => Some(k + 1),
        Some(_) => None,
    };
    CrossCheck { n0: first_good.map(|k| records[k].norm.clone()), matches }
}

/// Checks the defining properties of a record list against the scan bound:
/// norms strictly increase and `L` strictly decreases.
pub fn check_records(records: &[MinimalPointRecord]) -> bool {
    records.windows(2).all(|w| {
        w[0].norm < w[1].norm && w[1].l_value.cmp_certified(&w[0].l_value) == Some(Ordering::Less)
    })
}

/// Brute-force reference over the whole cube of norm `≤ xmax`, for small bounds.
pub fn minimal_points_bruteforce(xi: &dyn RealSource, xmax: i64, policy: &PrecisionPolicy) -> Result<Vec<IntTriple>> {
    let mut out: Vec<IntTriple> = Vec::new();
    for n in 1..=xmax {
        let mut best: Option<IntTriple> = None;
        for p in points_of_norm(n) {
            if best.as_ref().map_or(Ok(true), |b| l_less(&p, b, xi, policy))? {
                best = Some(p);
            }
        }
        let p = best.expect("nonempty");
        if out.last().map_or(Ok(true), |o| l_less(&p, o, xi, policy))? {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{fibonacci_seed, xi_extending};
    use crate::arith::radius_bits;

    fn fib_xi(bits: u64) -> (CertifiedReal, ExtremalSequence) {
        let mut s = ExtremalSequence::new(fibonacci_seed(1, 2).unwrap());
        let x = xi_extending(&mut s, &radius_bits(bits), 40).unwrap();
        (x, s)
    }

    #[test]
    fn single_record_for_unit_bound() {
        let (x, _) = fib_xi(200);
        let r = minimal_points(&x, 1, &ScanConfig::default()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].point, IntTriple::new(1, 1, 1));
    }

    #[test]
    fn agrees_with_cube_bruteforce() {
        let (x, _) = fib_xi(200);
        let fast: Vec<IntTriple> = minimal_points(&x, 40, &ScanConfig::default())
            .unwrap()
            .into_iter()
            .map(|r| r.point)
            .collect();
        assert_eq!(fast, minimal_points_bruteforce(&x, 40, &PrecisionPolicy::default()).unwrap());
        let sqrt2m1 = CertifiedReal::from_ratio(&41421356237309504880u128.into(), &100000000000000000000u128.into(), 200).unwrap();
        let fast: Vec<IntTriple> = minimal_points(&sqrt2m1, 30, &ScanConfig::default())
            .unwrap()
            .into_iter()
            .map(|r| r.point)
            .collect();
        assert_eq!(fast, minimal_points_bruteforce(&sqrt2m1, 30, &PrecisionPolicy::default()).unwrap());
    }

    #[test]
    fn records_are_monotone_and_partition_independent() {
        let (x, _) = fib_xi(300);
        let a = minimal_points(&x, 100_000, &ScanConfig { chunk: 977, exec: Execution::Parallel, ..Default::default() }).unwrap();
        let b = minimal_points(&x, 100_000, &ScanConfig::with_exec(Execution::Sequential)).unwrap();
        assert!(check_records(&a));
        let pa: Vec<_> = a.iter().map(|r| r.point.clone()).collect();
        let pb: Vec<_> = b.iter().map(|r| r.point.clone()).collect();
        assert_eq!(pa, pb);
    }

    #[test]
    fn rejects_xi_outside_unit_interval() {
        let x = CertifiedReal::from_int(2);
        assert!(minimal_points(&x, 10, &ScanConfig::default()).is_err());
    }

    #[test]
    fn crosscheck_reports_n0() {
        let (x, s) = fib_xi(300);
        let r = minimal_points(&x, 1000, &ScanConfig::default()).unwrap();
        let c = crosscheck(&r, &s);
        assert!(c.n0.is_some());
        assert!(c.matches.last().unwrap().is_some());
    }
}
