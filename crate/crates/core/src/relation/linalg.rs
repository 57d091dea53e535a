//! Fraction-free Gauss–Jordan elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Echelon data: the reduced matrix, its pivot columns and the common
/// pivot value `D`.
struct Reduced {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    det: BigInt,
}

/// Every entry after step `k` is a `k×k` minor of the input, so the divisions
/// by the previous pivot are exact. On return each pivot entry equals `det`
/// and pivot columns are zero elsewhere.
fn reduce(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Reduced {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(best) = (r..nrows).filter(|&i| !a[i][col].is_zero()).max_by(|&i, &j| {
            a[i][col].magnitude().cmp(a[j][col].magnitude()).then(j.cmp(&i))
        }) else {
            continue;
        };
        a.swap(r, best);
        let p = a[r][col].clone();
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                let v = &p * &*x - &f * y;
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact fraction-free step");
                *x = q;
            }
        }
        prev = p;
        pivots.push(col);
        r += 1;
    }
    // Rows below the rank were multiplied along; they are zero.
    a.truncate(r);
    Reduced { rows: a, pivots, det: prev }
}

/// Divides by the content and makes the first nonzero entry positive.
pub fn normalize(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return;
    }
    let neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if neg {
            *x = -&*x;
        }
    }
}

/// Rank of an integer matrix.
pub fn rank(rows: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    reduce(rows, ncols).pivots.len()
}

/// Basis of the integer kernel `{v : A·v = 0}`, one vector per free column,
/// each content-normalized with positive leading entry.
pub fn null_space(rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    let red = reduce(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &c in &red.pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![BigInt::zero(); ncols];
            v[free] = red.det.clone();
            for (row, &pc) in red.rows.iter().zip(&red.pivots) {
                v[pc] = -&row[free];
            }
            normalize(&mut v);
            v
        })
        .collect()
}

/// `A·v`.
pub fn mat_vec(rows: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    rows.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}
