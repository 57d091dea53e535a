use std::cmp::Ordering;
use std::fs::File;
use std::path::Path;

use extremal_core::arith::{radius_decimal, CertifiedReal, Dyadic, GoldenExact, PrecisionPolicy};
use extremal_core::extremal::{
    example_two_seed, fibonacci_seed, fibonacci_word_cf_to, parse_matrix, parse_triple, validate_seed, xi_best,
    xi_from_sequence, ExtremalSequence, Seed, SequenceXi,
};
use extremal_core::minimal::{
    analyze_gaps, best_cubic_algebraic_integer, best_monic_cubic, check_records, crosscheck, cubic_gap_sequence,
    minimal_points, minimal_polys, ScanConfig,
};
use extremal_core::relation::{
    admissible_profiles, enumerate_monomials, expand_known_relation, in_span, null_space, search_json, sweep,
    validate_candidates, KnownRelation, MultiDegree, Validation,
};
use extremal_core::verify::{
    certified_json, dual_sandwich_check, extremality_certificate, matrix_recovery, poly_certificate, relation_check,
    ExtremalityOptions, Verdict,
};
use extremal_core::{Error, Execution};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::{CliError, Command, SeedCmd};

type Res<T> = Result<T, CliError>;

/// `println!` that ignores a closed stdout, so piping into `head` is harmless.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CubicMode {
    Monic,
    Algebraic,
    Both,
}

fn exec(cfg: &RunConfig) -> Execution {
    if cfg.workers == 1 {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn policy(cfg: &RunConfig) -> PrecisionPolicy {
    PrecisionPolicy::new(128, cfg.cap_bits)
}

fn scan_config(cfg: &RunConfig) -> ScanConfig {
    ScanConfig { exec: exec(cfg), policy: policy(cfg), ..Default::default() }
}

fn read_seq(path: &Path) -> Res<ExtremalSequence> {
    Ok(ExtremalSequence::read_json(path)?)
}

fn write_json(cfg: &RunConfig, path: &Path, v: &Value) -> Res<()> {
    let target = cfg.output(path);
    std::fs::write(&target, serde_json::to_string_pretty(v)? + "\n")?;
    eprintln!("wrote {}", target.display());
    Ok(())
}

fn log2_ceil(n: u64) -> u64 {
    64 - n.max(1).leading_zeros() as u64
}

/// `ξ` from a copy of `seq` extended until the radius reaches `2^-bits`.
fn xi_at(seq: &ExtremalSequence, bits: u64) -> Res<SequenceXi> {
    Ok(SequenceXi::with_bits(seq, bits, seq.len() + 400)?)
}

/// A copy of `seq` extended past norm `bound`.
fn extended_past(seq: &ExtremalSequence, bound: &BigInt) -> Res<ExtremalSequence> {
    let mut s = seq.clone();
    while s.triples().last().is_none_or(|y| &y.norm() <= bound) {
        s.extend(1)?;
    }
    Ok(s)
}

/// Bounds on `v·h^e` from the logarithm of `v`.
fn scaled(v: &CertifiedReal, e: f64, h: f64) -> Option<(f64, f64)> {
    let (lo, hi) = v.ln_bounds()?;
    let s = e * h.ln();
    let slack = 1e-12 * s.abs().max(1.0);
    Some(((lo + s - slack).exp(), (hi + s + slack).exp()))
}

fn within(b: Option<(f64, f64)>, lo: f64, hi: f64) -> Verdict {
    match b {
        Some((a, c)) if a >= lo && c <= hi => Verdict::Pass,
        Some((a, c)) if c < lo || a > hi => Verdict::Fail,
        _ => Verdict::Indeterminate,
    }
}

fn pair_json(b: Option<(f64, f64)>) -> Value {
    b.map_or(Value::Null, |(a, c)| json!([a, c]))
}

fn show_pair(b: Option<(f64, f64)>) -> String {
    b.map_or(String::from("undecided"), |(a, c)| format!("[{a:.6e}, {c:.6e}]"))
}

/// `0.<digits> ± 10^-digits`, the stated error covering radius and rounding.
fn decimal(x: &CertifiedReal, digits: u64) -> String {
    format!("{} ± 10^-{digits}", x.mid().to_fixed_string(digits as usize))
}

pub fn dispatch(cmd: Command, cfg: &RunConfig) -> Res<Verdict> {
    match cmd {
        Command::Generate { seed } => generate(seed, cfg),
        Command::Xi { seq, digits, out } => xi(&seq, digits.unwrap_or(cfg.digits), out.as_deref(), cfg),
        Command::Cf { a, b, digits, seq } => cf(a, b, digits.unwrap_or(cfg.digits), seq.as_deref()),
        Command::Verify { seq, range, tail_from, tolerance, out, csv } => {
            verify(&seq, &range, tail_from, tolerance, out.as_deref(), csv.as_deref(), cfg)
        }
        Command::Minpoints { seq, xmax, crosscheck, n0_max, out, csv } => {
            minpoints(&seq, xmax.unwrap_or(cfg.xmax), crosscheck, n0_max, out.as_deref(), csv.as_deref(), cfg)
        }
        Command::Minpoly { seq, hmax, lo, hi, out, csv } => {
            minpoly(&seq, hmax.unwrap_or(cfg.hmax), lo, hi, out.as_deref(), csv.as_deref(), cfg)
        }
        Command::Cubicgap { seq, count, factor, min, out } => cubicgap(&seq, count, factor, min, out.as_deref(), cfg),
        Command::Cubic { seq, heights, mode, lo, hi, out } => cubic(&seq, &heights, mode, lo, hi, out.as_deref(), cfg),
        Command::Relations { d, p, seq, sweep_k, sweep_total, out } => match sweep_k {
            Some(k) => relation_sweep(k, sweep_total, out.as_deref(), cfg),
            None => relations(d.as_deref().unwrap_or_default(), p, seq.as_deref(), out.as_deref(), cfg),
        },
    }
}

fn generate(cmd: SeedCmd, cfg: &RunConfig) -> Res<Verdict> {
    let (seed, out): (Seed, _) = match cmd {
        SeedCmd::Fib { a, b, out } => (fibonacci_seed(a, b)?, out),
        SeedCmd::Ex2 { a, out } => (example_two_seed(a)?, out),
        SeedCmd::Explicit { matrix, y1, y2, out } => {
            (Seed::new(parse_matrix(&matrix)?, parse_triple(&y1)?, parse_triple(&y2)?), out)
        }
    };
    let report = validate_seed(&seed)?;
    say!("{report}");
    let seq = ExtremalSequence::generate(seed, out.terms)?;
    say!("{:>4}  {:>6}  norm", "t", "det");
    for (t, y) in seq.triples().iter().enumerate() {
        say!("{:>4}  {:>6}  {}", t + 1, y.det2(), short_int(&y.norm()));
    }
    let target = cfg.output(&out.out);
    seq.write_json(&target)?;
    eprintln!("wrote {}", target.display());
    Ok(Verdict::Pass)
}

/// Exact decimal for moderate sizes, otherwise `≈ m.mmmmmm·10^e` read off
/// the leading bits; full conversions of the late terms are slow.
fn short_int(n: &BigInt) -> String {
    let bits = n.bits();
    if bits <= 256 {
        return n.to_string();
    }
    let shift = bits - 64;
    let top = (n.magnitude() >> shift).to_u64_digits()[0] as f64;
    let l = top.log10() + shift as f64 * std::f64::consts::LOG10_2;
    let e = l.floor();
    format!("≈ {:.6}·10^{}", 10f64.powf(l - e), e as u64)
}

fn xi(path: &Path, digits: u64, out: Option<&Path>, cfg: &RunConfig) -> Res<Verdict> {
    let seq = read_seq(path)?;
    let x = xi_from_sequence(&seq, &radius_decimal(digits + 1))?;
    say!("{}", decimal(&x, digits));
    if let Some(o) = out {
        write_json(cfg, o, &json!({"terms": seq.len(), "digits": digits, "xi": certified_json(&x)}))?;
    }
    Ok(Verdict::Pass)
}

fn cf(a: u64, b: u64, digits: u64, seq: Option<&Path>) -> Res<Verdict> {
    let cf = fibonacci_word_cf_to(a, b, &radius_decimal(digits + 1))?;
    say!("{}", decimal(&cf.value, digits));
    say!("partial quotients used: {}", cf.quotients.len() - 1);
    let Some(path) = seq else { return Ok(Verdict::Pass) };
    let s = xi_best(&read_seq(path)?)?;
    let diff = &cf.value - &s;
    let combined = cf.value.rad() + s.rad();
    say!("sequence radius {}, combined radius {}", s.rad().to_sci_string_up(3), combined.to_sci_string_up(3));
    if diff.contains_zero() {
        say!("AGREE");
        Ok(Verdict::Pass)
    } else {
        say!("DISAGREE: difference {}", diff);
        Ok(Verdict::Fail)
    }
}

fn parse_range(s: &str) -> Res<(usize, usize)> {
    let bad = || CliError::Usage(format!("range must look like a:b, got {s:?}"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn verify(
    path: &Path,
    range: &str,
    tail_from: usize,
    tolerance: f64,
    out: Option<&Path>,
    csv: Option<&Path>,
    cfg: &RunConfig,
) -> Res<Verdict> {
    let seq = read_seq(path)?;
    let range = parse_range(range)?;
    if seq.len() < range.1 + 2 {
        return Err(Error::InsufficientTerms(format!("range {}:{} needs {} terms, file has {}", range.0, range.1, range.1 + 2, seq.len())).into());
    }
    let bits = 2 * seq.term(range.1).map_or(0, |y| y.norm().bits()) + 128;
    let xi = xi_at(&seq, bits)?;
    let opts = ExtremalityOptions { range, tail_from, tolerance, policy: policy(cfg), ..Default::default() };
    let cert = extremality_certificate(&seq, &xi, &opts)?;
    say!("{}", cert.statement());
    // the exact checks cover the same terms as the certificate
    let covered = seq.truncated(range.1 + 2);
    let rel = relation_check(&covered)?;
    let rel_verdict = if rel.i0.is_some() { Verdict::Pass } else { Verdict::Fail };
    match rel.i0 {
        Some(i) => say!("determinant relations vanish from i = {i}"),
        None => say!("determinant relations do not vanish on the last window"),
    }
    let (rec_verdict, rec_json) = match matrix_recovery(&covered) {
        Ok(r) => {
            say!("recovered matrix {} (canonical {})", r.recovered, r.canonical);
            let m = |m: &extremal_core::arith::Matrix2| m.entries().map(|v| v.to_string());
            (Verdict::Pass, json!({"recovered": m(&r.recovered), "canonical": m(&r.canonical), "checked": r.checked}))
        }
        Err(e @ Error::InconsistentRecovery { .. }) => {
            say!("{e}");
            (Verdict::Fail, json!({"error": e.to_string()}))
        }
        Err(e) => return Err(e.into()),
    };
    let verdict = cert.verdict.and(rel_verdict).and(rec_verdict);
    say!("{verdict}");
    if let Some(o) = out {
        write_json(
            cfg,
            o,
            &json!({"verdict": verdict, "extremality": cert.to_json(), "relations": rel.to_json(), "matrix": rec_json}),
        )?;
    }
    if let Some(c) = csv {
        cert.write_csv(File::create(cfg.output(c))?)?;
    }
    Ok(verdict)
}

fn minpoints(
    path: &Path,
    xmax: u64,
    check: bool,
    n0_max: u64,
    out: Option<&Path>,
    csv: Option<&Path>,
    cfg: &RunConfig,
) -> Res<Verdict> {
    let seq = read_seq(path)?;
    let xi = xi_at(&seq, 3 * log2_ceil(xmax) + 256)?;
    let records = minimal_points(&xi, xmax, &scan_config(cfg))?;
    let cc = check.then(|| extended_past(&seq, &BigInt::from(xmax))).transpose()?.map(|s| crosscheck(&records, &s));
    say!("{} records up to norm {xmax}", records.len());
    for (k, r) in records.iter().enumerate() {
        let m = cc.as_ref().and_then(|c| c.matches[k]).map_or(String::from("-"), |t| format!("±y_{t}"));
        say!("{:>12}  {:<40}  {:<8}  L = {}", r.norm, r.point.to_string(), m, r.l_value.mid().to_sci_string(6));
    }
    let mut verdict = Verdict::from_decision(Some(check_records(&records)));
    if let Some(c) = &cc {
        match &c.n0 {
            Some(n0) => {
                say!("every record from norm {n0} on is ± a sequence term");
                if n0 > &BigInt::from(n0_max) {
                    say!("N0 = {n0} exceeds {n0_max}");
                    verdict = verdict.and(Verdict::Fail);
                }
            }
            None => {
                say!("the last record is not a sequence term");
                verdict = verdict.and(Verdict::Fail);
            }
        }
    }
    say!("{verdict}");
    if let Some(o) = out {
        let rows: Vec<Value> = records
            .iter()
            .enumerate()
            .map(|(k, r)| {
                json!({
                    "point": r.point.0.clone().map(|v| v.to_string()),
                    "norm": r.norm.to_string(),
                    "l": certified_json(&r.l_value),
                    "term": cc.as_ref().and_then(|c| c.matches[k]),
                })
            })
            .collect();
        let n0 = cc.as_ref().and_then(|c| c.n0.as_ref()).map(|n| n.to_string());
        write_json(cfg, o, &json!({"xmax": xmax, "records": rows, "n0": n0, "verdict": verdict}))?;
    }
    if let Some(c) = csv {
        let mut w = csv_writer(cfg, c)?;
        writeln_csv(&mut w, &["norm", "x0", "x1", "x2", "l_mid", "l_rad", "term"])?;
        for (k, r) in records.iter().enumerate() {
            let (mid, rad) = r.l_value.to_decimal_pair(20);
            let t = cc.as_ref().and_then(|c| c.matches[k]).map_or(String::new(), |t| t.to_string());
            let [a, b, d] = r.point.0.clone().map(|v| v.to_string());
            writeln_csv(&mut w, &[&r.norm.to_string(), &a, &b, &d, &mid, &rad, &t])?;
        }
    }
    Ok(verdict)
}

fn csv_writer(cfg: &RunConfig, p: &Path) -> Res<File> {
    Ok(File::create(cfg.output(p))?)
}

fn writeln_csv(w: &mut File, fields: &[&str]) -> Res<()> {
    use std::io::Write;
    writeln!(w, "{}", fields.join(","))?;
    Ok(())
}

fn minpoly(path: &Path, hmax: u64, lo: f64, hi: f64, out: Option<&Path>, csv: Option<&Path>, cfg: &RunConfig) -> Res<Verdict> {
    let seq = read_seq(path)?;
    let xi = xi_at(&seq, 3 * log2_ceil(hmax) + 256)?;
    let records = minimal_polys(&xi, hmax, &scan_config(cfg))?;
    say!("{} minimal polynomials up to height {hmax}", records.len());
    for r in &records {
        say!("{:>8}  {}  |P(ξ)| = {}", r.height, r.poly, r.abs_value.mid().to_sci_string(6));
    }
    let ext = extended_past(&seq, &(BigInt::from(hmax) * BigInt::from(hmax) * 2))?;
    let cert = poly_certificate(&records, &xi, Some(&ext), &policy(cfg))?;
    let sandwich = dual_sandwich_check(&records, &xi, &policy(cfg))?;
    for r in &cert.rows {
        let term = r.wedge_term.map_or(String::from("-"), |t| format!("±y_{t}"));
        let res = r.resultant.as_ref().map_or(String::from("-"), |v| v.to_string());
        say!("Q_{}: H = {}, scaled {}, |Res| = {res}, wedge {term}", r.k, r.height, show_pair(r.scaled_value));
    }
    let in_band = Verdict::from_decision(cert.values_within(lo, hi));
    let stable = cert.resultant_stable(0.1);
    let wedges = cert.rows.iter().filter(|r| r.wedge.is_some()).all(|r| r.wedge_term.is_some());
    say!("c2 = {}, resultants stable: {stable}, wedges matched: {wedges}, estimate: {}", cert.c2, sandwich.verdict);
    let verdict = cert
        .verdict
        .and(sandwich.verdict)
        .and(in_band)
        .and(Verdict::from_decision(Some(stable && wedges)));
    say!("{verdict}");
    if let Some(o) = out {
        let recs: Vec<Value> = records
            .iter()
            .map(|r| json!({"poly": r.poly.coeffs().map(|c| c.to_string()), "height": r.height, "abs_value": certified_json(&r.abs_value)}))
            .collect();
        write_json(
            cfg,
            o,
            &json!({
                "hmax": hmax,
                "records": recs,
                "certificate": cert.to_json(),
                "sandwich": sandwich.to_json(),
                "resultants_stable": stable,
                "verdict": verdict,
            }),
        )?;
    }
    if let Some(c) = csv {
        cert.write_csv(File::create(cfg.output(c))?)?;
    }
    Ok(verdict)
}

fn cubicgap(path: &Path, count: Option<usize>, factor: u32, min: f64, out: Option<&Path>, cfg: &RunConfig) -> Res<Verdict> {
    let seq = read_seq(path)?;
    let count = count.unwrap_or(seq.len());
    let b = seq.triples().iter().take(count).map(|y| y.x0().bits()).max().unwrap_or(0);
    let xi = xi_at(&seq, 3 * b + 200)?;
    let values = cubic_gap_sequence(&seq, &xi, count, &policy(cfg))?;
    let a = analyze_gaps(&values, factor);
    for c in &a.classes {
        let diffs: Vec<String> = c.differences.iter().map(|d| d.mid().to_sci_string(3)).collect();
        say!("t ≡ {} (mod 3): terms {:?}", c.residue, c.indices);
        say!("  differences {}", diffs.join(", "));
        say!("  contracts {:?}", c.contracts);
    }
    let m = Dyadic::parse(&min.to_string(), 128)?;
    let floor = match a.min_value.cmp_certified(&CertifiedReal::exact(m)) {
        Some(Ordering::Less) => Verdict::Fail,
        Some(_) => Verdict::Pass,
        None => Verdict::Indeterminate,
    };
    let verdict = Verdict::from_decision(a.contracts_beyond_second()).and(floor);
    say!("smallest value {}", a.min_value);
    say!("{verdict}");
    if let Some(o) = out {
        let classes: Vec<Value> = a
            .classes
            .iter()
            .map(|c| {
                json!({
                    "residue": c.residue,
                    "indices": c.indices,
                    "values": c.values.iter().map(certified_json).collect::<Vec<_>>(),
                    "differences": c.differences.iter().map(certified_json).collect::<Vec<_>>(),
                    "contracts": c.contracts,
                })
            })
            .collect();
        write_json(
            cfg,
            o,
            &json!({"count": count, "factor": factor, "classes": classes, "min_value": certified_json(&a.min_value), "verdict": verdict}),
        )?;
    }
    Ok(verdict)
}

fn cubic(path: &Path, heights: &str, mode: CubicMode, lo: f64, hi: f64, out: Option<&Path>, cfg: &RunConfig) -> Res<Verdict> {
    let hs: Vec<u64> = heights
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| CliError::Usage(format!("bad height list {heights:?}"))))
        .collect::<Res<_>>()?;
    let seq = read_seq(path)?;
    let top = hs.iter().copied().max().unwrap_or(1);
    let xi = xi_at(&seq, 8 * log2_ceil(top) + 256)?;
    let gamma = GoldenExact::gamma().to_f64();
    let scfg = scan_config(cfg);
    let mut verdict = Verdict::Pass;
    let mut rows = Vec::new();
    for &h in &hs {
        if mode != CubicMode::Algebraic {
            let (p, v) = best_monic_cubic(&xi, h, &scfg)?;
            let s = scaled(&v, gamma, h as f64);
            say!("H = {h}: best monic {p}, |P(ξ)|·H^γ in {}", show_pair(s));
            verdict = verdict.and(within(s, lo, hi));
            rows.push(json!({"kind": "monic", "height": h, "poly": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(), "value": certified_json(&v), "scaled": pair_json(s)}));
        }
        if mode != CubicMode::Monic {
            let c = best_cubic_algebraic_integer(&xi, h, &scfg)?;
            let s = scaled(&c.distance, gamma + 1.0, h as f64);
            say!("H = {h}: best root of {}, |ξ − α|·H^(γ+1) in {}", c.poly, show_pair(s));
            verdict = verdict.and(within(s, lo, hi));
            rows.push(json!({"kind": "algebraic", "height": h, "poly": c.poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(), "root": certified_json(&c.root.to_certified()), "distance": certified_json(&c.distance), "scaled": pair_json(s)}));
        }
    }
    say!("{verdict}");
    if let Some(o) = out {
        write_json(cfg, o, &json!({"rows": rows, "band": [lo, hi], "verdict": verdict}))?;
    }
    Ok(verdict)
}

fn relations(d: &str, p: Option<u32>, seq: Option<&Path>, out: Option<&Path>, cfg: &RunConfig) -> Res<Verdict> {
    let d: Vec<u32> = d
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| CliError::Usage(format!("bad multi-degree {d:?}"))))
        .collect::<Res<_>>()?;
    let p = p.unwrap_or(d.iter().sum());
    let md = MultiDegree::new(d, p)?;
    let dim = enumerate_monomials(&md).len();
    let profiles = admissible_profiles(&md).len();
    let kernel = null_space(&md, exec(cfg));
    say!("E{md}: dimension {dim}, {profiles} admissible profiles, kernel dimension {}", kernel.len());
    for (n, c) in kernel.iter().enumerate() {
        say!("[{n}] {}", c.pretty());
    }
    let s = seq.map(read_seq).transpose()?;
    let mut verdict = Verdict::Pass;
    let mut known = Vec::new();
    for which in [KnownRelation::First, KnownRelation::Second] {
        if which.multidegree() == md {
            let rel = expand_known_relation(which);
            let ok = in_span(&kernel, &rel);
            say!("{which:?} determinant relation in kernel: {ok}");
            verdict = verdict.and(Verdict::from_decision(Some(ok)));
            let mut entry = json!({"relation": format!("{which:?}").to_lowercase(), "in_kernel": ok, "expansion": rel.to_json()});
            if let Some(s) = &s {
                let v = validate_candidates(std::slice::from_ref(&rel), s, exec(cfg))?.remove(0);
                say!("{which:?} determinant relation on the sequence: {}", v.label());
                verdict = verdict.and(Verdict::from_decision(Some(matches!(v, Validation::VanishesFrom { .. }))));
                entry["validation"] = v.to_json();
            }
            known.push(entry);
        }
    }
    let mut body = search_json(&md, dim, profiles, &kernel);
    body["known"] = json!(known);
    if let Some(s) = &s {
        let v = validate_candidates(&kernel, s, exec(cfg))?;
        for (n, r) in v.iter().enumerate() {
            say!("[{n}] {}", r.label());
        }
        body["validation"] = json!(v.iter().map(|r| r.to_json()).collect::<Vec<_>>());
    }
    body["verdict"] = json!(verdict);
    say!("{verdict}");
    if let Some(o) = out {
        write_json(cfg, o, &body)?;
    }
    Ok(verdict)
}

fn relation_sweep(k: usize, total: u32, out: Option<&Path>, cfg: &RunConfig) -> Res<Verdict> {
    if k > 6 {
        return Err(CliError::Usage("sweeps are limited to k ≤ 6".into()));
    }
    let found = sweep(k, total, exec(cfg));
    for e in &found {
        say!("E{}: dimension {}, {} profiles, kernel dimension {}", e.md, e.dimension, e.profiles, e.kernel.len());
    }
    if let Some(o) = out {
        let v: Vec<Value> = found.iter().map(|e| search_json(&e.md, e.dimension, e.profiles, &e.kernel)).collect();
        write_json(cfg, o, &json!(v))?;
    }
    Ok(Verdict::Pass)
}
