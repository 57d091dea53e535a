//! Best approximations by monic cubics: smallest `|P(ξ)|` and closest real
//! root over the box `|p|, |q|, |r| ≤ H`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::arith::{CertifiedReal, Dyadic, MonicPoly3, PrecisionPolicy, RealSource};
use crate::error::{Error, Result};
use crate::fixed::{frac_bits_for, Fixed};
use crate::par::map_chunks;

use super::points::ScanConfig;
use super::roots::{common_root_in, isolate_roots, root_bound, QPoly, RootEnclosure};

#[derive(Clone, Debug)]
struct Entry {
    c: [i64; 3],
    val: Fixed,
}

impl Entry {
    fn poly(&self) -> MonicPoly3 {
        MonicPoly3::new(self.c[0], self.c[1], self.c[2])
    }
}

fn value_cmp(a: &MonicPoly3, b: &MonicPoly3, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<Ordering> {
    if a == b {
        return Ok(Ordering::Equal);
    }
    policy.escalate(&format!("comparison of |P(ξ)| for P = {a} and P = {b}"), |bits| {
        let x = xi.enclose(bits)?;
        let ord = a.eval(&x).abs().cmp_certified(&b.eval(&x).abs());
        Ok(ord.filter(|o| *o != Ordering::Equal || x.is_exact()))
    })
}

fn entry_better(a: &Entry, b: &Entry, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<bool> {
    let ord = match a.val.cmp_certified(&b.val) {
        Some(Ordering::Less) => Ordering::Less,
        Some(Ordering::Greater) => Ordering::Greater,
        _ => value_cmp(&a.poly(), &b.poly(), xi, policy)?,
    };
    Ok(match ord {
        Ordering::Equal => a.c < b.c,
        o => o == Ordering::Less,
    })
}

/// `r = −nearest(w)` clamped to the box, decided with escalating precision.
fn slow_r(p: i64, q: i64, h: i64, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<i64> {
    policy.escalate(&format!("nearest integer to ξ³ + {p}·ξ² + {q}·ξ"), |bits| {
        let x = xi.enclose(bits)?;
        let w = MonicPoly3::new(p, q, 0).eval(&x);
        let (a, b) = (w.lo().round_to_int(), w.hi().round_to_int());
        if a != b {
            return Ok(None);
        }
        let n = (-a).clamp(BigInt::from(-h), BigInt::from(h));
        Ok(Some(n.to_i64().expect("clamped")))
    })
}

fn certified_entry(c: [i64; 3], xi: &dyn RealSource, bits: u64, frac: u32) -> Result<Entry> {
    let x = xi.enclose(bits)?;
    let v = MonicPoly3::new(c[0], c[1], c[2]).eval(&x).abs();
    let val = Fixed::from_certified(&v, frac).ok_or_else(|| Error::InvalidInput("value out of range".into()))?;
    Ok(Entry { c, val })
}

/// The monic cubic `T³ + pT² + qT + r` with `|p|, |q|, |r| ≤ H` minimizing
/// `|P(ξ)|`, with an enclosure of that value. Ties go to the
/// lexicographically smallest `(p, q, r)`.
pub fn best_monic_cubic(xi: &dyn RealSource, hmax: u64, cfg: &ScanConfig) -> Result<(MonicPoly3, CertifiedReal)> {
    if hmax == 0 {
        return Err(Error::InvalidInput("the height must be at least 1".into()));
    }
    let h = i64::try_from(hmax).ok().filter(|h| *h < 1 << 40).ok_or_else(|| Error::InvalidInput("height too large".into()))?;
    let policy = &cfg.policy;
    let x = xi.enclose(64)?;
    let mag = x.abs().hi().log2_floor().unwrap_or(0).max(0) as u32 + 1;
    let frac = frac_bits_for(64 - h.leading_zeros() + 3 * mag + 3);
    let bits = frac as u64 + 16;
    let x = xi.enclose(bits)?;
    let conv = |v: &CertifiedReal| Fixed::from_certified(v, frac).ok_or_else(|| Error::InvalidInput("ξ too large".into()));
    let x2 = x.square();
    let (xf, x2f, x3f) = (conv(&x)?, conv(&x2)?, conv(&(&x2 * &x))?);

    let rows_per_chunk = (cfg.chunk / (2 * h + 1)).max(1);
    let chunked: Vec<Result<Option<Entry>>> = map_chunks(-h..h + 1, rows_per_chunk, cfg.exec, |rows| {
        let mut best: Option<Entry> = None;
        for p in rows {
            let mut w = x2f.mul_int(p).and_then(|a| a.checked_add(x3f)).and_then(|a| xf.mul_int(-h).and_then(|b| a.checked_add(b)));
            for q in -h..=h {
                let cur = w;
                w = w.and_then(|v| v.checked_add(xf));
                let centre = match cur.and_then(|v| v.nearest_int(frac)) {
                    Some(n) => (-n).clamp(-h as i128, h as i128) as i64,
                    None => slow_r(p, q, h, xi, policy)?,
                };
                for r in centre - 1..=centre + 1 {
                    if r.abs() > h {
                        continue;
                    }
                    let fast = cur.and_then(|v| v.checked_add(Fixed::int(r, frac)?)).map(Fixed::abs);
                    let e = match fast {
                        Some(val) => Entry { c: [p, q, r], val },
                        None => certified_entry([p, q, r], xi, bits, frac)?,
                    };
                    if best.as_ref().map_or(Ok(true), |b| entry_better(&e, b, xi, policy))? {
                        best = Some(e);
                    }
                }
            }
        }
        Ok(best)
    });
    let mut best: Option<Entry> = None;
    for e in chunked {
        if let Some(e) = e? {
            if best.as_ref().map_or(Ok(true), |b| entry_better(&e, b, xi, policy))? {
                best = Some(e);
            }
        }
    }
    let poly = best.expect("nonempty box").poly();
    let value = poly.eval(&xi.enclose(policy.start_bits.max(bits))?).abs();
    Ok((poly, value))
}

/// A real root of a monic cubic close to `ξ`.
#[derive(Clone, Debug)]
pub struct CubicRootApprox {
    pub poly: MonicPoly3,
    pub root: RootEnclosure,
    pub distance: CertifiedReal,
}

#[derive(Clone, Debug)]
struct RootCand {
    poly: MonicPoly3,
    root: RootEnclosure,
}

pub(crate) fn dyadic_to_rational(d: &Dyadic) -> BigRational {
    let e = d.exponent();
    if e >= 0 {
        BigRational::from_integer(d.mantissa() << e as usize)
    } else {
        BigRational::new(d.mantissa().clone(), BigInt::one() << (-e) as usize)
    }
}

fn enclosure_distance(x: &CertifiedReal, r: &RootEnclosure) -> CertifiedReal {
    (x - &r.to_certified()).abs()
}

/// Compares `|ξ − α|` for two candidates. Equal distances are recognized
/// when the roots coincide or, for exact `ξ`, are mirror images about `ξ`.
fn root_cmp(a: &mut RootCand, b: &mut RootCand, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<Ordering> {
    let pa = QPoly::from_ints(&a.poly.coeffs());
    let pb = QPoly::from_ints(&b.poly.coeffs());
    let context = format!("comparison of root distances for {} and {}", a.poly, b.poly);
    policy.escalate(&context, |bits| {
        a.root.refine(bits + 8);
        b.root.refine(bits + 8);
        let x = xi.enclose(bits)?;
        let (da, db) = (enclosure_distance(&x, &a.root), enclosure_distance(&x, &b.root));
        if let Some(o) = da.cmp_certified(&db).filter(|o| *o != Ordering::Equal) {
            return Ok(Some(o));
        }
        let lo = (&a.root.lo).max(&b.root.lo);
        let hi = (&a.root.hi).min(&b.root.hi);
        if lo <= hi && common_root_in(&pa, &pb, lo, hi) {
            return Ok(Some(Ordering::Equal));
        }
        if x.is_exact() {
            let twice = dyadic_to_rational(&x.mid().shl(1));
            if common_root_in(&pa, &pb.reflect(&twice), &a.root.lo, &a.root.hi) {
                return Ok(Some(Ordering::Equal));
            }
        }
        Ok(None)
    })
}

fn cand_better(a: &mut RootCand, b: &mut RootCand, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<bool> {
    Ok(match root_cmp(a, b, xi, policy)? {
        Ordering::Equal => (&a.poly, &a.root.lo) < (&b.poly, &b.root.lo),
        o => o == Ordering::Less,
    })
}

fn offer(best: &mut Option<RootCand>, mut c: RootCand, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<()> {
    let replace = match best {
        None => true,
        Some(b) => cand_better(&mut c, b, xi, policy)?,
    };
    if replace {
        *best = Some(c);
    }
    Ok(())
}

/// The real root of a monic cubic with `|p|, |q|, |r| ≤ H` closest to `ξ`.
///
/// A first pass takes the closest root `δ0` of the cubic minimizing
/// `|P(ξ)|`. Any closer root `α` of `P` forces `|P(ξ)| ≤ δ0·max|P'|` on
/// `[ξ − δ0, ξ + δ0]`, which confines `r` to a short window for each `(p, q)`.
pub fn best_cubic_algebraic_integer(xi: &dyn RealSource, hmax: u64, cfg: &ScanConfig) -> Result<CubicRootApprox> {
    if hmax == 0 {
        return Err(Error::InvalidInput("the height must be at least 1".into()));
    }
    let h = i64::try_from(hmax).ok().filter(|h| *h < 1 << 30).ok_or_else(|| Error::InvalidInput("height too large".into()))?;
    let policy = &cfg.policy;
    let (p1, _) = best_monic_cubic(xi, hmax, cfg)?;

    let bits = policy.start_bits;
    let x = xi.enclose(bits)?;
    let coeffs = p1.coeffs();
    let b = Dyadic::from_int(root_bound(&coeffs));
    let mut pass1: Option<RootCand> = None;
    for root in isolate_roots(&coeffs, &-b.clone(), &b) {
        offer(&mut pass1, RootCand { poly: p1.clone(), root }, xi, policy)?;
    }
    let mut first = pass1.expect("a cubic has a real root");
    first.root.refine(bits);
    let delta = (&enclosure_distance(&x, &first.root).hi() + &Dyadic::pow2(-(bits as i64))).round_up(64);

    let s = (&x.abs().hi() + &delta).ceil();
    let window_lo = &x.lo() - &delta;
    let window_hi = &x.hi() + &delta;
    let s_i = s.to_i64().ok_or_else(|| Error::InvalidInput("ξ too large".into()))?;

    let chunked: Vec<Result<Option<RootCand>>> = map_chunks(-h..h + 1, (cfg.chunk / (2 * h + 1)).max(1), cfg.exec, |rows| {
        let mut best: Option<RootCand> = None;
        for p in rows {
            for q in -h..=h {
                let w = MonicPoly3::new(p, q, 0).eval(&x);
                let d = 3 * s_i * s_i + 2 * p.abs() * s_i + q.abs();
                let slack = &delta * &Dyadic::from(d);
                let r_lo = (-(&w.hi() + &slack)).floor().max(BigInt::from(-h));
                let r_hi = (&slack - &w.lo()).ceil().min(BigInt::from(h));
                let (Some(r_lo), Some(r_hi)) = (r_lo.to_i64(), r_hi.to_i64()) else { continue };
                for r in r_lo..=r_hi {
                    let poly = MonicPoly3::new(p, q, r);
                    for root in isolate_roots(&poly.coeffs(), &window_lo, &window_hi) {
                        offer(&mut best, RootCand { poly: poly.clone(), root }, xi, policy)?;
                    }
                }
            }
        }
        Ok(best)
    });
    let mut best: Option<RootCand> = Some(first);
    for c in chunked {
        if let Some(c) = c? {
            offer(&mut best, c, xi, policy)?;
        }
    }
    let mut best = best.expect("first pass candidate");
    best.root.refine(bits);
    let distance = enclosure_distance(&xi.enclose(bits)?, &best.root);
    Ok(CubicRootApprox { poly: best.poly, root: best.root, distance })
}

/// Exhaustive reference: every real root of every monic cubic in the box.
pub fn best_cubic_algebraic_integer_bruteforce(xi: &dyn RealSource, h: i64, policy: &PrecisionPolicy) -> Result<CubicRootApprox> {
    let mut best: Option<RootCand> = None;
    for p in -h..=h {
        for q in -h..=h {
            for r in -h..=h {
                let poly = MonicPoly3::new(p, q, r);
                let coeffs = poly.coeffs();
                let b = Dyadic::from_int(root_bound(&coeffs));
                for root in isolate_roots(&coeffs, &-b.clone(), &b) {
                    offer(&mut best, RootCand { poly: poly.clone(), root }, xi, policy)?;
                }
            }
        }
    }
    let mut best = best.expect("nonempty box");
    best.root.refine(policy.start_bits);
    let distance = enclosure_distance(&xi.enclose(policy.start_bits)?, &best.root);
    Ok(CubicRootApprox { poly: best.poly, root: best.root, distance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::radius_bits;
    use crate::extremal::{example_two_seed, xi_extending, ExtremalSequence};
    use crate::par::Execution;

    fn ex2_xi() -> CertifiedReal {
        let mut s = ExtremalSequence::new(example_two_seed(2).unwrap());
        xi_extending(&mut s, &radius_bits(300), 40).unwrap()
    }

    fn exhaustive_cubic(xi: &CertifiedReal, h: i64) -> MonicPoly3 {
        let policy = PrecisionPolicy::default();
        let mut best: Option<MonicPoly3> = None;
        for p in -h..=h {
            for q in -h..=h {
                for r in -h..=h {
                    let c = MonicPoly3::new(p, q, r);
                    if best.as_ref().is_none_or(|b| value_cmp(&c, b, xi, &policy).unwrap() == Ordering::Less) {
                        best = Some(c);
                    }
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn half_has_no_cubic_root_of_small_height() {
        let half = CertifiedReal::from_ratio(&1.into(), &2.into(), 64).unwrap();
        let (p, v) = best_monic_cubic(&half, 1, &ScanConfig::default()).unwrap();
        assert_eq!(p, exhaustive_cubic(&half, 1));
        assert_eq!(v.signum(), Some(Ordering::Greater));
    }

    #[test]
    fn cubic_scan_matches_exhaustive() {
        let x = ex2_xi();
        for h in [1, 2, 5, 9] {
            assert_eq!(best_monic_cubic(&x, h, &ScanConfig::default()).unwrap().0, exhaustive_cubic(&x, h as i64));
        }
    }

    #[test]
    fn cubic_minimum_decreases_with_height() {
        let x = ex2_xi();
        let mut prev: Option<CertifiedReal> = None;
        for h in 1..=30 {
            let (_, v) = best_monic_cubic(&x, h, &ScanConfig::with_exec(Execution::Sequential)).unwrap();
            if let Some(p) = &prev {
                assert_ne!(v.cmp_certified(p), Some(Ordering::Greater));
            }
            prev = Some(v);
        }
    }

    #[test]
    fn closest_root_matches_exhaustive_isolation() {
        let policy = PrecisionPolicy::default();
        let half = CertifiedReal::from_ratio(&1.into(), &2.into(), 64).unwrap();
        let a = best_cubic_algebraic_integer(&half, 2, &ScanConfig::default()).unwrap();
        let b = best_cubic_algebraic_integer_bruteforce(&half, 2, &policy).unwrap();
        assert_eq!(a.poly, b.poly);
        assert!(a.root.lo <= b.root.hi && b.root.lo <= a.root.hi);
        let x = ex2_xi();
        for h in [1, 3, 6] {
            let a = best_cubic_algebraic_integer(&x, h, &ScanConfig::default()).unwrap();
            let b = best_cubic_algebraic_integer_bruteforce(&x, h as i64, &policy).unwrap();
            assert_eq!(a.poly, b.poly, "h = {h}");
            assert!(a.distance.hi() <= b.distance.hi() + Dyadic::pow2(-100));
        }
    }
}
