//! Integer points of Z^3, their symmetric-matrix view, and 2×2 integer matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A point `(x0, x1, x2)` of Z^3, identified with the symmetric matrix
/// `[[x0, x1], [x1, x2]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntTriple(pub [BigInt; 3]);

/// A 2×2 integer matrix `[[a, b], [c, d]]`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix2(pub [[BigInt; 2]; 2]);

impl IntTriple {
    pub fn new(x0: impl Into<BigInt>, x1: impl Into<BigInt>, x2: impl Into<BigInt>) -> Self {
        IntTriple([x0.into(), x1.into(), x2.into()])
    }

    pub fn zero() -> Self {
        IntTriple::new(0, 0, 0)
    }

    pub fn x0(&self) -> &BigInt {
        &self.0[0]
    }

    pub fn x1(&self) -> &BigInt {
        &self.0[1]
    }

    pub fn x2(&self) -> &BigInt {
        &self.0[2]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Max-norm `max(|x0|, |x1|, |x2|)`.
    pub fn norm(&self) -> BigInt {
        self.0.iter().map(|v| v.abs()).max().unwrap_or_default()
    }

    /// Squared Euclidean norm, used only by the Lagrange identity checks.
    pub fn euclid_norm_sq(&self) -> BigInt {
        self.dot(self)
    }

    pub fn dot(&self, other: &IntTriple) -> BigInt {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// `x0·x2 − x1²`, the determinant of the symmetric matrix.
    pub fn det2(&self) -> BigInt {
        &self.0[0] * &self.0[2] - &self.0[1] * &self.0[1]
    }

    pub fn to_matrix(&self) -> Matrix2 {
        let [a, b, c] = self.0.clone();
        Matrix2([[a, b.clone()], [b, c]])
    }

    /// Reads a symmetric matrix back as a triple; `None` if `m` is not symmetric.
    pub fn from_symmetric(m: &Matrix2) -> Option<IntTriple> {
        m.is_symmetric()
            .then(|| IntTriple([m.0[0][0].clone(), m.0[0][1].clone(), m.0[1][1].clone()]))
    }

    /// gcd of the absolute values of the coordinates.
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, v| g.gcd(v))
    }

    /// gcd of the coordinates and `bound`, computed by first reducing modulo
    /// `bound`. Cheap when `bound` is small, whatever the size of the point.
    pub fn content_dividing(&self, bound: &BigInt) -> BigInt {
        if bound.is_zero() {
            return self.content();
        }
        let bound = bound.abs();
        self.0
            .iter()
            .fold(bound.clone(), |g, v| g.gcd(&v.mod_floor(&bound)))
    }

    fn leading_sign_negative(&self) -> bool {
        self.0
            .iter()
            .find(|v| !v.is_zero())
            .is_some_and(|v| v.is_negative())
    }

    /// Splits `self = factor · p` with `p` primitive: coprime coordinates and
    /// first nonzero coordinate positive. The zero point maps to itself with
    /// factor zero.
    pub fn primitive(&self) -> (IntTriple, BigInt) {
        self.primitive_with_content(self.content())
    }

    /// Same as [`primitive`](Self::primitive) when the content is already known.
    pub fn primitive_with_content(&self, content: BigInt) -> (IntTriple, BigInt) {
        if self.is_zero() {
            return (self.clone(), BigInt::zero());
        }
        let factor = if self.leading_sign_negative() { -content } else { content };
        let p = if factor.is_one() {
            self.clone()
        } else {
            IntTriple(self.0.clone().map(|v| v / &factor))
        };
        (p, factor)
    }

    pub fn is_primitive(&self) -> bool {
        // the content squared divides det2, so a gcd with det2 suffices
        !self.is_zero() && self.content_dividing(&self.det2()).is_one() && !self.leading_sign_negative()
    }

    /// Sign-normalized copy (first nonzero coordinate positive), no gcd removal.
    pub fn sign_normalized(&self) -> IntTriple {
        if self.leading_sign_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Vector product `self ∧ other`.
    pub fn wedge(&self, other: &IntTriple) -> IntTriple {
        IntTriple(cross(&self.0, &other.0))
    }

    pub fn scale(&self, k: &BigInt) -> IntTriple {
        IntTriple(self.0.clone().map(|v| v * k))
    }
}

impl Neg for IntTriple {
    type Output = IntTriple;

    fn neg(self) -> IntTriple {
        IntTriple(self.0.map(|v| -v))
    }
}

impl Add for &IntTriple {
    type Output = IntTriple;

    fn add(self, rhs: &IntTriple) -> IntTriple {
        IntTriple([&self.0[0] + &rhs.0[0], &self.0[1] + &rhs.0[1], &self.0[2] + &rhs.0[2]])
    }
}

impl Sub for &IntTriple {
    type Output = IntTriple;

    fn sub(self, rhs: &IntTriple) -> IntTriple {
        IntTriple([&self.0[0] - &rhs.0[0], &self.0[1] - &rhs.0[1], &self.0[2] - &rhs.0[2]])
    }
}

impl fmt::Display for IntTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl Matrix2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Matrix2([[a.into(), b.into()], [c.into(), d.into()]])
    }

    pub fn identity() -> Self {
        Matrix2::new(1, 0, 0, 1)
    }

    /// `J = [[0, 1], [−1, 0]]`.
    pub fn j() -> Self {
        Matrix2::new(0, 1, -1, 0)
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.0[0][0], &self.0[0][1], &self.0[1][0], &self.0[1][1]]
    }

    pub fn from_entries(e: [BigInt; 4]) -> Self {
        let [a, b, c, d] = e;
        Matrix2([[a, b], [c, d]])
    }

    pub fn det(&self) -> BigInt {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }

    pub fn trace(&self) -> BigInt {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn transpose(&self) -> Matrix2 {
        let [[a, b], [c, d]] = self.0.clone();
        Matrix2([[a, c], [b, d]])
    }

    /// Adjugate `[[d, −b], [−c, a]]`, so that `m · adj(m) = det(m) · I`.
    pub fn adjoint(&self) -> Matrix2 {
        let [[a, b], [c, d]] = self.0.clone();
        Matrix2([[d, -b], [-c, a]])
    }

    pub fn is_symmetric(&self) -> bool {
        self.0[0][1] == self.0[1][0]
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.0[0][0].is_zero() && self.0[1][1].is_zero() && self.0[0][1] == -&self.0[1][0]
    }

    pub fn content(&self) -> BigInt {
        self.entries().into_iter().fold(BigInt::zero(), |g, v| g.gcd(v))
    }

    pub fn scale(&self, k: &BigInt) -> Matrix2 {
        Matrix2(self.0.clone().map(|row| row.map(|v| v * k)))
    }

    pub fn neg(&self) -> Matrix2 {
        self.scale(&BigInt::from(-1))
    }

    /// Sum of the absolute values of the entries.
    pub fn abs_sum(&self) -> BigInt {
        self.entries().into_iter().map(|v| v.abs()).sum()
    }
}

impl Mul for &Matrix2 {
    type Output = Matrix2;

    fn mul(self, rhs: &Matrix2) -> Matrix2 {
        let a = &self.0;
        let b = &rhs.0;
        Matrix2([
            [
                &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0],
                &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1],
            ],
            [
                &a[1][0] * &b[0][0] + &a[1][1] * &b[1][0],
                &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1],
            ],
        ])
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1]
        )
    }
}

/// Cross product over any commutative ring.
pub fn cross<T>(x: &[T; 3], y: &[T; 3]) -> [T; 3]
where
    T: Clone + Sub<Output = T> + Mul<Output = T>,
{
    let m = |a: &T, b: &T| a.clone() * b.clone();
    [
        m(&x[1], &y[2]) - m(&x[2], &y[1]),
        m(&x[2], &y[0]) - m(&x[0], &y[2]),
        m(&x[0], &y[1]) - m(&x[1], &y[0]),
    ]
}

/// Determinant of the 3×3 matrix with rows `x`, `y`, `z`, over any commutative ring.
pub fn det3_of<T>(x: &[T; 3], y: &[T; 3], z: &[T; 3]) -> T
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let c = cross(y, z);
    x[0].clone() * c[0].clone() + x[1].clone() * c[1].clone() + x[2].clone() * c[2].clone()
}

/// The symmetric matrix `x · adj(z) · x`, as a triple, over any commutative ring.
///
/// Entries, with `x = [[x0, x1], [x1, x2]]` and `adj(z) = [[z2, −z1], [−z1, z0]]`:
/// `(x0²z2 − 2x0x1z1 + x1²z0, x0x1z2 − (x1² + x0x2)z1 + x1x2z0, x1²z2 − 2x1x2z1 + x2²z0)`.
pub fn bracket_of<T>(x: &[T; 3], z: &[T; 3]) -> [T; 3]
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let m = |a: &T, b: &T| a.clone() * b.clone();
    let [x0, x1, x2] = x;
    let [z0, z1, z2] = z;
    let two = |a: T| a.clone() + a;
    let b0 = m(&m(x0, x0), z2) - two(m(&m(x0, x1), z1)) + m(&m(x1, x1), z0);
    let b1 = m(&m(x0, x1), z2) - m(&(m(x1, x1) + m(x0, x2)), z1) + m(&m(x1, x2), z0);
    let b2 = m(&m(x1, x1), z2) - two(m(&m(x1, x2), z1)) + m(&m(x2, x2), z0);
    [b0, b1, b2]
}

/// Exact 3×3 determinant of the rows `x, y, z`.
pub fn det3(x: &IntTriple, y: &IntTriple, z: &IntTriple) -> BigInt {
    det3_of(&x.0, &y.0, &z.0)
}

/// `[x, x, z] = x · adj(z) · x`.
pub fn bracket(x: &IntTriple, z: &IntTriple) -> IntTriple {
    let direct = IntTriple(bracket_of(&x.0, &z.0));
    debug_assert_eq!(
        Some(&direct),
        IntTriple::from_symmetric(&(&(&x.to_matrix() * &z.to_matrix().adjoint()) * &x.to_matrix()))
            .as_ref()
    );
    direct
}

/// `trace(M · J)` with `J = [[0, 1], [−1, 0]]`; equals `m10 − m01`.
pub fn trace_mj(m: &Matrix2) -> BigInt {
    (m * &Matrix2::j()).trace()
}

/// `y · S · x` for symmetric `y`, `x`.
pub fn sandwich(y: &IntTriple, s: &Matrix2, x: &IntTriple) -> Matrix2 {
    &(&y.to_matrix() * s) * &x.to_matrix()
}

/// `y · S · x` read as a triple when the product is known to be symmetric.
///
/// Only the three independent entries are multiplied out; the lower-left
/// entry is compared with the upper-right one modulo the prime `2^61 − 1`,
/// and `None` is returned when they differ.
pub fn symmetric_sandwich(y: &IntTriple, s: &Matrix2, x: &IntTriple) -> Option<IntTriple> {
    let a = &y.to_matrix() * s;
    let [x0, x1, x2] = &x.0;
    let n00 = &a.0[0][0] * x0 + &a.0[0][1] * x1;
    let n01 = &a.0[0][0] * x1 + &a.0[0][1] * x2;
    let n11 = &a.0[1][0] * x1 + &a.0[1][1] * x2;
    let p = BigInt::from((1u64 << 61) - 1);
    let r = |v: &BigInt| v.mod_floor(&p);
    let n10 = (r(&a.0[1][0]) * r(x0) + r(&a.0[1][1]) * r(x1)).mod_floor(&p);
    (n10 == r(&n01)).then_some(IntTriple([n00, n01, n11]))
}


#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64, c: i64) -> IntTriple {
        IntTriple::new(a, b, c)
    }

    #[test]
    fn det2_examples() {
        assert_eq!(t(1, 0, 1).det2(), 1.into());
        assert_eq!(t(1, 1, 0).det2(), (-1).into());
        assert_eq!(t(576, 415, 299).det2(), (-1).into());
    }

    #[test]
    fn det3_examples() {
        assert_eq!(det3(&t(1, 0, 0), &t(0, 1, 0), &t(0, 0, 1)), 1.into());
        assert_eq!(det3(&t(1, 1, 0), &t(4, 3, 2), &t(25, 18, 13)), 1.into());
        let x = t(3, -7, 2);
        assert_eq!(det3(&x, &t(5, 1, 9), &x), 0.into());
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(Matrix2::identity().adjoint(), Matrix2::identity());
        let m = Matrix2::new(1, 2, 3, 4);
        assert_eq!(m.adjoint(), Matrix2::new(4, -2, -3, 1));
        assert_eq!(&m * &m.adjoint(), Matrix2::identity().scale(&m.det()));
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(&t(1, 1, 0), &t(1, 0, 1)), t(2, 1, 1));
        let z = t(7, -3, 5);
        assert_eq!(bracket(&t(1, 0, 1), &z), t(5, 3, 7));
        assert_eq!(bracket(&t(4, 3, 2), &t(1, 1, 0)).det2(), (-1).into());
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(t(1, 0, 0).wedge(&t(0, 1, 0)), t(0, 0, 1));
        let x = t(4, -2, 9);
        assert!(x.wedge(&x).is_zero());
    }

    #[test]
    fn trace_mj_examples() {
        assert_eq!(trace_mj(&Matrix2::j()), (-2).into());
        assert_eq!(trace_mj(&Matrix2::new(5, 3, 3, 1)), 0.into());
        let (a, b) = (1, 2);
        assert_eq!(trace_mj(&Matrix2::new(a * b + 1, a, b, 1)), (b - a).into());
        for a in 1..5 {
            assert_eq!(trace_mj(&Matrix2::new(a, 1, -1, 0)), (-2).into());
        }
    }

    #[test]
    fn primitive_normalizes_sign_and_content() {
        let (p, f) = t(0, -6, 4).primitive();
        assert_eq!(p, t(0, 3, -2));
        assert_eq!(f, (-2).into());
        assert!(p.is_primitive());
        assert_eq!(t(0, -6, 4).content_dividing(&BigInt::from(10)), 2.into());
    }

    #[test]
    fn symmetric_round_trip() {
        let x = t(3, -1, 8);
        assert_eq!(IntTriple::from_symmetric(&x.to_matrix()), Some(x));
        assert_eq!(IntTriple::from_symmetric(&Matrix2::new(1, 2, 3, 4)), None);
    }
}
