//! Finite-range certificates for the quantitative properties of a sequence.

pub mod extremality;
pub mod polycert;
pub mod relations;

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::CertifiedReal;

pub use extremality::{extremality_certificate, ExtremalityCertificate, ExtremalityOptions, ExtremalityRow};
pub use polycert::{
    dual_sandwich_check, poly_certificate, sandwich_at, PolyCertificate, PolyRow, SandwichReport, SandwichRow,
    SandwichStatus,
};
pub use relations::{matrix_recovery, relation_check, MatrixRecovery, RelationReport, RelationRow};

/// Outcome of a check. `Indeterminate` means precision ran out before the
/// question was decided; it never stands for a failed hypothesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Indeterminate,
    Fail,
}

impl Verdict {
    /// Process exit code: 0, 1 or 2.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Indeterminate => 2,
        }
    }

    /// `Fail` dominates `Indeterminate`, which dominates `Pass`.
    pub fn and(self, other: Verdict) -> Verdict {
        self.max(other)
    }

    pub fn from_decision(d: Option<bool>) -> Verdict {
        match d {
            Some(true) => Verdict::Pass,
            Some(false) => Verdict::Fail,
            None => Verdict::Indeterminate,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Indeterminate => "INDETERMINATE",
        })
    }
}

/// `{mid, rad}` with decimal strings; the radius is rounded outward.
pub fn certified_json(x: &CertifiedReal) -> Value {
    let (mid, rad) = x.to_decimal_pair(30);
    json!({ "mid": mid, "rad": rad })
}

pub(crate) fn opt_certified_json(x: &Option<CertifiedReal>) -> Value {
    x.as_ref().map_or(Value::Null, certified_json)
}

pub(crate) fn f64_json(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_combine_and_map_to_exit_codes() {
        assert_eq!(Verdict::Pass.and(Verdict::Indeterminate), Verdict::Indeterminate);
        assert_eq!(Verdict::Indeterminate.and(Verdict::Fail), Verdict::Fail);
        assert_eq!(Verdict::Pass.exit_code(), 0);
        assert_eq!(Verdict::Fail.exit_code(), 1);
        assert_eq!(Verdict::Indeterminate.exit_code(), 2);
        assert_eq!(serde_json::to_string(&Verdict::Indeterminate).unwrap(), "\"INDETERMINATE\"");
    }

    #[test]
    fn certified_json_encloses_value() {
        let x = CertifiedReal::from_ratio(&1.into(), &3.into(), 200).unwrap();
        let v = certified_json(&x);
        let mid = crate::arith::Dyadic::parse(v["mid"].as_str().unwrap(), 300).unwrap();
        let rad = crate::arith::Dyadic::parse(v["rad"].as_str().unwrap(), 300).unwrap();
        let back = CertifiedReal::new(mid, rad);
        assert!(back.contains_ratio(&1.into(), &3.into()));
    }
}
