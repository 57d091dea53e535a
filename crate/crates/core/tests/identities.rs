//! Algebraic identities and inequalities checked on random inputs.

use std::cmp::Ordering;

use extremal_core::extremal::{example_two_seed, fibonacci_seed, ExtremalSequence};
use extremal_core::relation::{constraint_system, integer_null_space, null_space, rank, MultiDegree};
use extremal_core::verify::{sandwich_at, SandwichStatus};
use extremal_core::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn triple() -> impl Strategy<Value = IntTriple> {
    (-60i64..60, -60i64..60, -60i64..60).prop_map(|(a, b, c)| IntTriple::new(a, b, c))
}

fn nonzero_triple() -> impl Strategy<Value = IntTriple> {
    triple().prop_filter("nonzero", |t| !t.is_zero())
}

fn matrix() -> impl Strategy<Value = Matrix2> {
    (-20i64..20, -20i64..20, -20i64..20, -20i64..20).prop_map(|(a, b, c, d)| Matrix2::new(a, b, c, d))
}

fn poly() -> impl Strategy<Value = Poly2> {
    (-40i64..40, -40i64..40, -40i64..40).prop_map(|(a, b, c)| Poly2::new(a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn trace_mj_reads_off_diagonal(m in matrix()) {
        let [_, b, c, _] = m.entries();
        prop_assert_eq!(trace_mj(&m), c - b);
    }

    #[test]
    fn trace_identity_on_sequences(a in 1u64..6, b in 1u64..6, e in 1u64..5, fib in any::<bool>()) {
        // det(y_i, y_{i+1}, y_{i+1}·S·y_i) = det(y_i)·det(y_{i+1})·trace(SJ)
        let seed = if fib {
            prop_assume!(a != b);
            fibonacci_seed(a, b).unwrap()
        } else {
            example_two_seed(e).unwrap()
        };
        let s = ExtremalSequence::generate(seed, 9).unwrap();
        for t in 3..=s.len() {
            let (x, y) = (s.term(t - 2).unwrap(), s.term(t - 1).unwrap());
            let n = sandwich(y, &s.step_matrix(t), x);
            let z = IntTriple::from_symmetric(&n).unwrap();
            prop_assert_eq!(det3(x, y, &z), x.det2() * y.det2() * trace_mj(&s.step_matrix(t)));
        }
    }

    #[test]
    fn bracket_determinant(x in triple(), z in triple()) {
        let b = bracket(&x, &z);
        let dx = x.det2();
        prop_assert_eq!(b.det2(), &dx * &dx * z.det2());
    }

    #[test]
    fn bracket_agrees_with_matrix_product(x in triple(), z in triple()) {
        let direct = &(&x.to_matrix() * &z.to_matrix().adjoint()) * &x.to_matrix();
        prop_assert_eq!(IntTriple::from_symmetric(&direct), Some(bracket(&x, &z)));
    }

    #[test]
    fn wedge_is_orthogonal_and_antisymmetric(x in triple(), y in triple(), z in triple()) {
        let w = x.wedge(&y);
        prop_assert!(w.dot(&x).is_zero());
        prop_assert!(w.dot(&y).is_zero());
        prop_assert_eq!(y.wedge(&x), w.scale(&BigInt::from(-1)));
        prop_assert_eq!(w.dot(&z), det3(&x, &y, &z));
    }

    #[test]
    fn golden_sign_matches_rational_brackets(a in -100_000i64..100_000, b in -100_000i64..100_000) {
        // F_{n+1}/F_n alternate around γ; a nonzero a + bγ has |a + bγ| ≥ 1/(|a| + 2|b|)
        let (mut f0, mut f1) = (BigInt::from(1), BigInt::from(1));
        for _ in 0..60 {
            let f2 = &f0 + &f1;
            f0 = f1;
            f1 = f2;
        }
        let f2 = &f0 + &f1;
        let (lo, hi) = (BigRational::new(f1.clone(), f0.clone()), BigRational::new(f2, f1));
        let (lo, hi) = if lo < hi { (lo, hi) } else { (hi, lo) };
        let g = GoldenExact::new(a, b);
        let at = |r: &BigRational| BigRational::from_integer(a.into()) + BigRational::from_integer(b.into()) * r;
        let (u, v) = (at(&lo), at(&hi));
        let expected = if a == 0 && b == 0 {
            Ordering::Equal
        } else {
            prop_assert_eq!(u.signum(), v.signum());
            u.cmp(&BigRational::zero())
        };
        prop_assert_eq!(g.signum(), expected);
        prop_assert_eq!(golden_compare(&g, &GoldenExact::from_int(0)), expected);
    }

    #[test]
    fn golden_arithmetic_matches_floats(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000, d in -1000i64..1000) {
        let (u, v) = (GoldenExact::new(a, b), GoldenExact::new(c, d));
        let prod = &u * &v;
        let expect = u.to_f64() * v.to_f64();
        prop_assert!((prod.to_f64() - expect).abs() <= 1e-9 * (1.0 + expect.abs()));
        prop_assert_eq!(golden_compare(&u, &v), (&u - &v).signum());
    }

    #[test]
    fn projective_triangle(x in nonzero_triple(), y in nonzero_triple(), z in nonzero_triple()) {
        let (nx, dx) = proj_dist_ratio(&x, &z).unwrap();
        let (ny, dy) = proj_dist_ratio(&x, &y).unwrap();
        let (nz, dz) = proj_dist_ratio(&y, &z).unwrap();
        // d(x,z) ≤ d(x,y) + 2·d(y,z), cross-multiplied
        prop_assert!(&nx * &dy * &dz <= &ny * &dx * &dz + BigInt::from(2) * &nz * &dx * &dy);
    }

    #[test]
    fn det2_envelope_bounds_det2(x in triple(), num in 1i64..1000) {
        let xi = CertifiedReal::from_ratio(&num.into(), &1000.into(), 80).unwrap();
        let env = det2_envelope(&x, &xi);
        let d = CertifiedReal::from_int(x.det2().abs());
        prop_assert_ne!(d.cmp_certified(&env), Some(Ordering::Greater));
    }

    #[test]
    fn sandwich_estimate_never_fails(p in poly(), q in poly(), num in 1i64..1000) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let x = CertifiedReal::exact(Dyadic::new(num.into(), -10));
        let s = sandwich_at(&p, &q, &x);
        prop_assert_ne!(s, Some(SandwichStatus::Violated), "P = {:?}, Q = {:?}", p, q);
    }

    #[test]
    fn resultant_vanishes_on_common_factor(a in -9i64..9, b in 1i64..9, c in -9i64..9, e in -9i64..9) {
        // P = (bT − a)(T − c), Q = (bT − a)(T − e)
        let p = Poly2::new(a * c, -(a + b * c), b);
        let q = Poly2::new(a * e, -(a + b * e), b);
        prop_assert!(resultant(&p, &q).is_zero());
        let w = wedge_poly(&p, &q);
        prop_assert!(w.dot(&IntTriple::new(a * c, -(a + b * c), b)).is_zero());
        prop_assert!(w.dot(&IntTriple::new(a * e, -(a + b * e), b)).is_zero());
    }

    #[test]
    fn kernel_survives_column_permutation(shift in 1usize..31) {
        let md = MultiDegree::new(vec![1, 1, 0, 2, 1], 5).unwrap();
        let sys = constraint_system(&md, Execution::Sequential);
        let n = sys.basis.len();
        let perm: Vec<usize> = (0..n).map(|i| (i * 7 + shift) % n).collect();
        prop_assume!({ let mut s = perm.clone(); s.sort(); s.dedup(); s.len() == n });
        let permuted: Vec<Vec<BigInt>> = sys.rows.iter().map(|r| perm.iter().map(|&j| r[j].clone()).collect()).collect();
        let kp = integer_null_space(permuted, n);
        let k = null_space(&md, Execution::Sequential);
        prop_assert_eq!(kp.len(), k.len());
        for v in &kp {
            let mut back = vec![BigInt::zero(); n];
            for (i, &j) in perm.iter().enumerate() {
                back[j] = v[i].clone();
            }
            let mut rows: Vec<Vec<BigInt>> = k.iter().map(|c| c.coeffs.clone()).collect();
            let r = rank(rows.clone(), n);
            rows.push(back);
            prop_assert_eq!(rank(rows, n), r);
        }
    }
}

#[test]
fn kernel_vectors_are_homogeneous() {
    for (d, p) in [(vec![1, 1, 0, 2, 1], 5), (vec![0, 1, 1, 2, 1], 5), (vec![1, 1, 2, 1], 5), (vec![2, 0, 2], 4)] {
        let md = MultiDegree::new(d, p).unwrap();
        for c in null_space(&md, Execution::Sequential) {
            assert!(c.is_homogeneous(), "{}", c.pretty());
        }
    }
}

#[test]
fn scans_do_not_depend_on_execution() {
    use extremal_core::extremal::SequenceXi;
    use extremal_core::minimal::{minimal_points, minimal_polys, ScanConfig};
    let seq = ExtremalSequence::generate(fibonacci_seed(1, 2).unwrap(), 12).unwrap();
    let xi = SequenceXi::new(&seq).unwrap();
    let (s, p) = (ScanConfig::with_exec(Execution::Sequential), ScanConfig::with_exec(Execution::Parallel));
    let a: Vec<_> = minimal_points(&xi, 20_000, &s).unwrap().into_iter().map(|r| r.point).collect();
    let b: Vec<_> = minimal_points(&xi, 20_000, &p).unwrap().into_iter().map(|r| r.point).collect();
    assert_eq!(a, b);
    let a: Vec<_> = minimal_polys(&xi, 300, &s).unwrap().into_iter().map(|r| r.poly).collect();
    let b: Vec<_> = minimal_polys(&xi, 300, &p).unwrap().into_iter().map(|r| r.poly).collect();
    assert_eq!(a, b);
    let md = MultiDegree::new(vec![1, 1, 0, 2, 1], 5).unwrap();
    assert_eq!(null_space(&md, Execution::Sequential), null_space(&md, Execution::Parallel));
}

#[test]
fn sequence_json_round_trip() {
    for seed in [fibonacci_seed(2, 5).unwrap(), example_two_seed(2).unwrap()] {
        let s = ExtremalSequence::generate(seed, 10).unwrap();
        let back = ExtremalSequence::from_json(&s.to_json().unwrap()).unwrap();
        assert_eq!(back.triples(), s.triples());
        assert_eq!(back.matrix(), s.matrix());
        back.check_recurrence().unwrap();
    }
}
