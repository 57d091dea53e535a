//! Seeds `(M, y1, y2)` and their validation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{trace_mj, IntTriple, Matrix2};
use crate::error::{Error, Result};

use super::sequence::ExtremalSequence;

/// The data determining a recurrence sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub m: Matrix2,
    pub y1: IntTriple,
    pub y2: IntTriple,
}

impl Seed {
    pub fn new(m: Matrix2, y1: IntTriple, y2: IntTriple) -> Self {
        Seed { m, y1, y2 }
    }
}

/// Outcome of [`validate_seed`] for a seed meeting every hard condition.
#[derive(Clone, Debug)]
pub struct SeedReport {
    pub det_m: BigInt,
    pub trace_mj: BigInt,
    pub det_y1: BigInt,
    pub det_y2: BigInt,
    /// Norms of the first ten terms.
    pub norms: Vec<BigInt>,
    /// Smallest `‖y_{i+2}‖ / (‖y_{i+1}‖·‖y_i‖)` over those terms.
    pub min_growth: f64,
}

impl fmt::Display for SeedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "det(M) = {}, trace(MJ) = {}", self.det_m, self.trace_mj)?;
        writeln!(f, "det(y1) = {}, det(y2) = {}", self.det_y1, self.det_y2)?;
        let norms: Vec<String> = self.norms.iter().map(|n| n.to_string()).collect();
        writeln!(f, "first norms: {}", norms.join(", "))?;
        write!(f, "min growth ratio: {:.6}", self.min_growth)
    }
}

fn fail(condition: &str) -> Error {
    Error::InvalidSeed { condition: condition.into() }
}

/// Checks the hard conditions on a seed and measures the growth of its
/// first terms. Unboundedness cannot be decided; the report carries the
/// evidence.
pub fn validate_seed(seed: &Seed) -> Result<SeedReport> {
    let m = &seed.m;
    if m.det().is_zero() {
        return Err(fail("M is singular"));
    }
    if m.is_symmetric() {
        return Err(fail("M is symmetric"));
    }
    if m.is_skew_symmetric() {
        return Err(fail("M is skew-symmetric"));
    }
    if !m.content().is_one() {
        return Err(fail("entries of M are not coprime"));
    }
    for (name, y) in [("y1", &seed.y1), ("y2", &seed.y2)] {
        if !y.content().is_one() {
            return Err(fail(&format!("{name} is not primitive")));
        }
        if y.det2().is_zero() {
            return Err(fail(&format!("{name} is singular")));
        }
    }
    let prod = crate::arith::sandwich(&seed.y2, m, &seed.y1);
    if !prod.is_symmetric() {
        return Err(fail("y2·M·y1 is not symmetric"));
    }
    let seq = ExtremalSequence::generate(seed.clone(), 10)?;
    let norms: Vec<BigInt> = seq.triples().iter().map(IntTriple::norm).collect();
    Ok(SeedReport {
        det_m: m.det(),
        trace_mj: trace_mj(m),
        det_y1: seed.y1.det2(),
        det_y2: seed.y2.det2(),
        min_growth: min_growth_ratio(&norms),
        norms,
    })
}

/// `min_i ‖y_{i+2}‖ / (‖y_{i+1}‖·‖y_i‖)` computed from logarithms.
pub fn min_growth_ratio(norms: &[BigInt]) -> f64 {
    norms
        .windows(3)
        .map(|w| (ln(&w[2]) - ln(&w[1]) - ln(&w[0])).exp())
        .fold(f64::INFINITY, f64::min)
}

pub(crate) fn ln(n: &BigInt) -> f64 {
    crate::arith::Dyadic::from_int(n.clone()).ln_abs()
}

/// The seed of the Fibonacci-word family: `A = [[a,1],[1,0]]`,
/// `B = [[b,1],[1,0]]`, `M = AB`, `y1 = A`, `y2 = ABA`.
pub fn fibonacci_seed(a: u64, b: u64) -> Result<Seed> {
    if a == b {
        return Err(fail("a and b must be distinct"));
    }
    if a == 0 || b == 0 {
        return Err(fail("a and b must be positive"));
    }
    let ma = Matrix2::new(a, 1, 1, 0);
    let mb = Matrix2::new(b, 1, 1, 0);
    let m = &ma * &mb;
    let aba = &m * &ma;
    let y2 = IntTriple::from_symmetric(&aba).expect("ABA is symmetric");
    let y1 = IntTriple::from_symmetric(&ma).expect("A is symmetric");
    Ok(Seed { m, y1, y2 })
}

/// The second family: `y1 = (1,1,0)`,
/// `y2 = (a³+2a, a³−a²+2a−1, a³−2a²+3a−2)`, `M = [[a,1],[−1,0]]`.
pub fn example_two_seed(a: u64) -> Result<Seed> {
    if a == 0 {
        return Err(fail("a must be positive"));
    }
    let a = BigInt::from(a);
    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let y2 = IntTriple([
        &a3 + &a * 2,
        &a3 - &a2 + &a * 2 - 1,
        &a3 - &a2 * 2 + &a * 3 - 2,
    ]);
    let m = Matrix2([[a, BigInt::one()], [-BigInt::one(), BigInt::zero()]]);
    Ok(Seed { m, y1: IntTriple::new(1, 1, 0), y2 })
}

/// Parses `"a,b,c,d"` as a row-major matrix.
pub fn parse_matrix(s: &str) -> Result<Matrix2> {
    let v = parse_ints(s, 4)?;
    Ok(Matrix2::from_entries([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]))
}

/// Parses `"x0,x1,x2"`.
pub fn parse_triple(s: &str) -> Result<IntTriple> {
    let v = parse_ints(s, 3)?;
    Ok(IntTriple([v[0].clone(), v[1].clone(), v[2].clone()]))
}

fn parse_ints(s: &str, n: usize) -> Result<Vec<BigInt>> {
    let v: Vec<BigInt> = s
        .split(',')
        .map(|t| t.trim().parse::<BigInt>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
    if v.len() != n {
        return Err(Error::Parse(format!("{s:?}: expected {n} integers, found {}", v.len())));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_seed_examples() {
        let s = fibonacci_seed(1, 2).unwrap();
        assert_eq!(s.y1, IntTriple::new(1, 1, 0));
        assert_eq!(s.y2, IntTriple::new(4, 3, 2));
        assert_eq!(s.m, Matrix2::new(3, 1, 2, 1));
        let s = fibonacci_seed(2, 1).unwrap();
        assert_eq!(s.y1, IntTriple::new(2, 1, 0));
        // A = [[2,1],[1,0]], B = [[1,1],[1,0]]: AB = [[3,2],[1,1]], ABA = [[8,3],[3,1]]
        assert_eq!(s.y2, IntTriple::new(8, 3, 1));
        assert!(fibonacci_seed(1, 1).is_err());
    }

    #[test]
    fn example_two_seed_examples() {
        let s = example_two_seed(1).unwrap();
        assert_eq!(s.y2, IntTriple::new(3, 1, 0));
        assert_eq!(s.y2.norm(), 3.into());
        let s = example_two_seed(2).unwrap();
        assert_eq!(s.y2, IntTriple::new(12, 7, 4));
        for a in 1..8 {
            let s = example_two_seed(a).unwrap();
            assert_eq!(s.y1.det2(), (-1).into());
            assert_eq!(s.y2.det2(), (-1).into());
            assert_eq!(s.m.det(), 1.into());
        }
    }

    #[test]
    fn validation_accepts_shipped_seeds() {
        let r = validate_seed(&fibonacci_seed(1, 2).unwrap()).unwrap();
        assert_eq!(r.trace_mj, 1.into());
        assert_eq!(r.norms.len(), 10);
        let r = validate_seed(&example_two_seed(1).unwrap()).unwrap();
        assert_eq!(r.norms[1], 3.into());
        assert_eq!(r.norms[2], 5.into());
        assert!(r.min_growth >= 0.5);
        let r = validate_seed(&example_two_seed(3).unwrap()).unwrap();
        assert!(r.min_growth >= 2.0);
    }

    #[test]
    fn validation_rejects_bad_seeds() {
        let mut s = fibonacci_seed(1, 2).unwrap();
        s.m = Matrix2::new(2, 1, 1, 1);
        let e = validate_seed(&s).unwrap_err().to_string();
        assert!(e.contains("symmetric"), "{e}");
        s.m = Matrix2::new(0, 1, -1, 0);
        assert!(validate_seed(&s).unwrap_err().to_string().contains("skew"));
        s.m = Matrix2::new(2, 4, 6, 2);
        assert!(validate_seed(&s).unwrap_err().to_string().contains("coprime"));
        let mut s = fibonacci_seed(1, 2).unwrap();
        s.y2 = IntTriple::new(4, 2, 1);
        assert!(validate_seed(&s).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_matrix("3, 1,2,1").unwrap(), Matrix2::new(3, 1, 2, 1));
        assert!(parse_triple("1,2").is_err());
        assert!(parse_triple("1,x,2").is_err());
    }
}
