//! Minimal polynomials: integer polynomials of degree at most 2 realizing
//! record small values of `|P(ξ)|` as the height grows.
//!
//! For `|ξ| < 3/2` the height-one record is at most `1/2`. A constant term
//! other than the nearest integer to `−(p2ξ² + p1ξ)` gives `|P(ξ)| ≥ 1/2`, so
//! above height one only that nearest choice can produce a record.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{det3, resultant, CertifiedReal, Poly2, PrecisionPolicy, RealSource};
use crate::error::{Error, Result};
use crate::fixed::{frac_bits_for, Fixed};
use crate::par::map_chunks;

use super::points::ScanConfig;

#[derive(Clone, Debug)]
pub struct MinimalPolyRecord {
    pub poly: Poly2,
    pub height: u64,
    pub abs_value: CertifiedReal,
}

#[derive(Clone, Copy, Debug)]
struct Entry {
    c: [i64; 3],
    val: Fixed,
}

impl Entry {
    fn height(&self) -> u64 {
        self.c.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }

    fn poly(&self) -> Poly2 {
        Poly2::new(self.c[0], self.c[1], self.c[2])
    }
}

/// `|P(ξ)|` versus `|Q(ξ)|`, escalating precision. Distinct polynomials
/// compare equal only for an exactly known `ξ`.
pub(crate) fn abs_value_cmp(p: &Poly2, q: &Poly2, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<Ordering> {
    if p == q {
        return Ok(Ordering::Equal);
    }
    policy.escalate(&format!("comparison of |P(ξ)| for P = {p} and P = {q}"), |bits| {
        let x = xi.enclose(bits)?;
        let ord = p.eval(&x).abs().cmp_certified(&q.eval(&x).abs());
        Ok(ord.filter(|o| *o != Ordering::Equal || x.is_exact()))
    })
}

/// Strict improvement of `a` over `b`: smaller value, ties to the
/// lexicographically smaller coefficients `(p2, p1, p0)`.
fn entry_better(a: &Entry, b: &Entry, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<bool> {
    let ord = match a.val.cmp_certified(&b.val) {
        Some(Ordering::Less) => Ordering::Less,
        Some(Ordering::Greater) => Ordering::Greater,
        _ => abs_value_cmp(&a.poly(), &b.poly(), xi, policy)?,
    };
    Ok(match ord {
        Ordering::Equal => [a.c[2], a.c[1], a.c[0]] < [b.c[2], b.c[1], b.c[0]],
        o => o == Ordering::Less,
    })
}

/// Entries, in increasing height, that beat every earlier one.
fn prefix_records(entries: impl Iterator<Item = Entry>, xi: &dyn RealSource, policy: &PrecisionPolicy) -> Result<Vec<Entry>> {
    let mut out: Vec<Entry> = Vec::new();
    for e in entries {
        if out.last().map_or(Ok(true), |b| entry_better(&e, b, xi, policy))? {
            out.push(e);
        }
    }
    Ok(out)
}

/// Height-one polynomials, sign-normalized.
fn height_one() -> Vec<Poly2> {
    let mut out = Vec::new();
    for p2 in 0..=1 {
        for p1 in -1..=1 {
            for p0 in -1..=1 {
                let p = Poly2::new(p0, p1, p2);
                if !p.is_zero() && p.sign_normalized() == p {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Entry for `p2·T² + p1·T + p0` with `p0 = −nearest(p2ξ² + p1ξ)`, decided
/// with escalating precision.
fn slow_entry(p2: i64, p1: i64, xi: &dyn RealSource, policy: &PrecisionPolicy, frac: u32) -> Result<Entry> {
    policy.escalate(&format!("nearest integer to {p2}·ξ² + {p1}·ξ"), |bits| {
        let x = xi.enclose(bits)?;
        let v = &x.square().mul_int(&p2.into()) + &x.mul_int(&p1.into());
        let n = v.lo().round_to_int();
        if n != v.hi().round_to_int() {
            return Ok(None);
        }
        let Some(n) = n.to_i64() else {
            return Err(Error::InvalidInput("coefficient out of range".into()));
        };
        let val = v.add_int(&(-n).into()).abs();
        Ok(Fixed::from_certified(&val, frac).map(|val| Entry { c: [-n, p1, p2], val }))
    })
}

/// The minimal polynomials of `ξ` up to height `hmax`.
pub fn minimal_polys(xi: &dyn RealSource, hmax: u64, cfg: &ScanConfig) -> Result<Vec<MinimalPolyRecord>> {
    if hmax == 0 {
        return Err(Error::InvalidInput("hmax must be positive".into()));
    }
    let h = i64::try_from(hmax).map_err(|_| Error::InvalidInput("hmax too large".into()))?;
    if h > 1 << 40 {
        return Err(Error::InvalidInput("hmax too large".into()));
    }
    let policy = &cfg.policy;
    let frac = frac_bits_for(64 - h.leading_zeros() + 3);
    let x = xi.enclose(frac as u64 + 16)?;
    let bound = CertifiedReal::from_ratio(&3.into(), &2.into(), 8)?;
    if x.abs().cmp_certified(&bound) != Some(Ordering::Less) {
        return Err(Error::InvalidInput("minimal polynomials need |ξ| < 3/2".into()));
    }
    let xf = Fixed::from_certified(&x, frac).expect("|ξ| < 3/2 fits");
    let x2f = Fixed::from_certified(&x.square(), frac).expect("ξ² < 9/4 fits");

    let mut first: Option<Poly2> = None;
    for p in height_one() {
        first = match first {
            Some(b) if abs_value_cmp(&p, &b, xi, policy)? != Ordering::Less => Some(b),
            _ => Some(p),
        };
    }
    let first = first.expect("height one is nonempty");

    let hu = h as usize;
    let rows_per_chunk = (cfg.chunk / (2 * h + 1)).max(1);
    // each chunk returns its prefix records over height; a global record is
    // always one of them
    let chunked: Vec<Result<Vec<Entry>>> = map_chunks(0..h + 1, rows_per_chunk, cfg.exec, |rows| {
        let mut best: Vec<Option<Entry>> = vec![None; hu + 1];
        for p2 in rows {
            let start = x2f.mul_int(p2).and_then(|a| xf.mul_int(-h).and_then(|b| a.checked_add(b)));
            let mut v = start;
            for p1 in -h..=h {
                let cur = v;
                v = v.and_then(|v| v.checked_add(xf));
                if p2 == 0 && p1 <= 0 {
                    continue;
                }
                let fast = cur.and_then(|c| c.dist_to_nearest_int(frac)).and_then(|(val, n)| {
                    Some(Entry { c: [-(i64::try_from(n).ok()?), p1, p2], val })
                });
                let e = match fast {
                    Some(e) => e,
                    None => slow_entry(p2, p1, xi, policy, frac)?,
                };
                let height = e.height();
                if height < 2 || height > hmax {
                    continue;
                }
                let slot = &mut best[height as usize];
                let replace = match slot {
                    None => true,
                    Some(b) => entry_better(&e, b, xi, policy)?,
                };
                if replace {
                    *slot = Some(e);
                }
            }
        }
        prefix_records(best.into_iter().flatten(), xi, policy)
    });

    let mut best: BTreeMap<u64, Entry> = BTreeMap::new();
    for chunk in chunked {
        for e in chunk? {
            let replace = match best.get(&e.height()) {
                None => true,
                Some(b) => entry_better(&e, b, xi, policy)?,
            };
            if replace {
                best.insert(e.height(), e);
            }
        }
    }

    let mut polys = vec![first];
    for e in best.into_values() {
        let p = e.poly();
        if abs_value_cmp(&p, polys.last().expect("nonempty"), xi, policy)? == Ordering::Less {
            polys.push(p);
        }
    }
    let xfin = xi.enclose(policy.start_bits.max(frac as u64 + 32))?;
    Ok(polys
        .into_iter()
        .map(|poly| MinimalPolyRecord {
            height: poly.height().to_u64().expect("height within the box"),
            abs_value: poly.eval(&xfin).abs(),
            poly,
        })
        .collect())
}

/// Exhaustive reference over the whole box, for small heights.
pub fn minimal_polys_bruteforce(xi: &dyn RealSource, hmax: i64, policy: &PrecisionPolicy) -> Result<Vec<Poly2>> {
    let mut out: Vec<Poly2> = Vec::new();
    for h in 1..=hmax {
        let mut best: Option<Poly2> = None;
        for p2 in 0..=h {
            for p1 in -h..=h {
                for p0 in -h..=h {
                    let p = Poly2::new(p0, p1, p2);
                    if p.is_zero() || p.sign_normalized() != p || p.height() != BigInt::from(h) {
                        continue;
                    }
                    if best.as_ref().map_or(Ok(true), |b| abs_value_cmp(&p, b, xi, policy).map(|o| o == Ordering::Less))? {
                        best = Some(p);
                    }
                }
            }
        }
        let p = best.expect("nonempty");
        if out.last().map_or(Ok(true), |o| abs_value_cmp(&p, o, xi, policy).map(|o| o == Ordering::Less))? {
            out.push(p);
        }
    }
    Ok(out)
}

pub fn check_poly_records(records: &[MinimalPolyRecord]) -> bool {
    records.windows(2).all(|w| {
        w[0].height < w[1].height && w[1].abs_value.cmp_certified(&w[0].abs_value) == Some(Ordering::Less)
    })
}

fn coeff_det(a: &Poly2, b: &Poly2, c: &Poly2) -> BigInt {
    det3(&a.to_triple(), &b.to_triple(), &c.to_triple())
}

/// Indices (into `records`) of the subsequence `Q_k`: the `i` for which
/// `P_{i−1}, P_i, P_{i+1}` are linearly independent, starting from the first
/// such index after which every `Res(P_i, P_{i+1})` with `i` in the set is
/// nonzero.
pub fn q_indices(records: &[MinimalPolyRecord]) -> Vec<usize> {
    let n = records.len();
    if n < 3 {
        return Vec::new();
    }
    let p = |i: usize| &records[i].poly;
    let set: Vec<usize> = (1..n - 1).filter(|&i| !coeff_det(p(i - 1), p(i), p(i + 1)).is_zero()).collect();
    let last_bad = set.iter().rposition(|&i| resultant(p(i), p(i + 1)).is_zero());
    match last_bad {
        Some(k) => set[k + 1..].to_vec(),
        None => set,
    }
}

/// `|P_i(ξ)|·H(P_{i+1})^{γ+1}` for consecutive records, in floating point.
pub fn next_height_products(records: &[MinimalPolyRecord]) -> Vec<f64> {
    let g1 = crate::arith::GoldenExact::gamma().to_f64() + 1.0;
    records
        .windows(2)
        .map(|w| (w[0].abs_value.hi().ln_abs() + g1 * (w[1].height as f64).ln()).exp())
        .collect()
}
