//! Brute-force searches for best approximations to `ξ`.

pub mod cubic;
pub mod gap;
pub mod points;
pub mod polys;
pub mod roots;

pub use cubic::{best_cubic_algebraic_integer, best_cubic_algebraic_integer_bruteforce, best_monic_cubic, CubicRootApprox};
pub use gap::{analyze_gaps, cubic_gap_sequence, GapAnalysis, GapClass};
pub use points::{
    check_records, crosscheck, minimal_points, minimal_points_bruteforce, CrossCheck, MinimalPointRecord, ScanConfig,
};
pub use polys::{
    check_poly_records, minimal_polys, minimal_polys_bruteforce, next_height_products, q_indices, MinimalPolyRecord,
};
pub use roots::{common_root_in, isolate_roots, root_bound, QPoly, RootEnclosure, Sturm};
