//! Exact and certified arithmetic.

pub mod analytic;
pub mod decimal;
pub mod golden;
pub mod poly;
pub mod real;
pub mod source;
pub mod triple;

pub use decimal::{parse_decimal, to_decimal};
pub use analytic::{det2_envelope, dist_to_nearest_int, height_l, proj_dist, proj_dist_ratio, proj_dist_upper};
pub use golden::{golden_compare, GoldenExact};
pub use poly::{resultant, wedge_poly, MonicPoly3, Poly2};
pub use real::{CertifiedReal, Dyadic};
pub use source::{radius_bits, radius_decimal, rational, PrecisionPolicy, RealSource};
pub use triple::{bracket, bracket_of, cross, det3, det3_of, sandwich, symmetric_sandwich, trace_mj, IntTriple, Matrix2};
