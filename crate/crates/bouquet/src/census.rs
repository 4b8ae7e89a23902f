//! Machine-readable records of the counting results: numbers of conjugacy
//! classes of maximal tori (of Reeb type, by rank), bouquet shapes, and
//! the consistency checks between them. Shipped as a JSON data file baked
//! into the binary.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

use crate::join::{wz_family, WzFamily};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("census data does not parse: {0}")]
    Parse(String),
}

/// A cardinality that may be unknown, a finite exact count, a finite lower
/// bound, or countably infinite. The infinite sentinel is absorbing and is
/// excluded from finite checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Count {
    Unknown,
    Aleph0,
    Exact(u64),
    AtLeast(u64),
}

impl Count {
    pub fn finite_value(&self) -> Option<u64> {
        match self {
            Count::Exact(v) | Count::AtLeast(v) => Some(*v),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Count::Exact(_))
    }
}

impl std::fmt::Display for Count {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Count::Unknown => write!(f, "?"),
            Count::Aleph0 => write!(f, "aleph0"),
            Count::Exact(v) => write!(f, "{v}"),
            Count::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

/// Parameters tying a record back to the join families for recomputation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WzParams {
    pub family: WzFamilyTag,
    pub a: u64,
    pub b: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WzFamilyTag {
    D,
    #[serde(rename = "tildeD")]
    TildeD,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub manifold: String,
    pub structure: String,
    /// Manifold dimension 2n+1; torus ranks run over 1..=n+1.
    pub dim: u32,
    /// n_R: conjugacy classes of maximal tori of Reeb type.
    pub n_reeb: Count,
    /// rank -> n(D, rank), conjugacy classes of maximal tori of that rank.
    pub n_by_rank: BTreeMap<u32, Count>,
    /// Dimensions of the Sasaki cones of a known bouquet, when recorded.
    pub bouquet_cone_dims: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wz_params: Option<WzParams>,
    pub notes: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordReport {
    pub structure: String,
    pub consistent: bool,
    pub violations: Vec<String>,
}

const CENSUS_JSON: &str = include_str!("../data/census.json");

/// The shipped census.
pub fn load_census() -> Vec<CensusRecord> {
    serde_json::from_str(CENSUS_JSON).expect("shipped census data is valid")
}

pub fn parse_census(text: &str) -> Result<Vec<CensusRecord>, CensusError> {
    serde_json::from_str(text).map_err(|e| CensusError::Parse(e.to_string()))
}

/// Consistency of one record: torus ranks within 1..=n+1, the bouquet
/// cardinality matching n_R when both are present, and n_R bounded by the
/// total count over ranks when every count involved is finite and exact.
pub fn check_record(r: &CensusRecord) -> RecordReport {
    let mut violations = Vec::new();

    if r.dim < 3 || r.dim.is_multiple_of(2) {
        violations.push(format!("dimension {} is not an odd number >= 3", r.dim));
    }
    let max_rank = (r.dim - 1) / 2 + 1;

    for (&rank, count) in &r.n_by_rank {
        if rank < 1 || rank > max_rank {
            violations.push(format!(
                "rank {rank} outside 1..={max_rank} for a {}-manifold",
                r.dim
            ));
        }
        if let Count::AtLeast(0) = count {
            violations.push(format!("rank {rank}: a lower bound of zero says nothing"));
        }
    }

    if let Some(dims) = &r.bouquet_cone_dims {
        for &d in dims {
            if d < 1 || d > max_rank {
                violations.push(format!("bouquet cone dimension {d} outside 1..={max_rank}"));
            }
        }
        if let Some(n) = r.n_reeb.finite_value() {
            if dims.len() as u64 != n {
                violations.push(format!(
                    "bouquet of {} cones but n_R = {}",
                    dims.len(),
                    r.n_reeb
                ));
            }
        }
    }

    // n_R <= sum over ranks, checked only with complete exact finite data.
    if let Count::Exact(nr) = r.n_reeb {
        if !r.n_by_rank.is_empty() && r.n_by_rank.values().all(Count::is_exact) {
            let total: u64 = r.n_by_rank.values().filter_map(Count::finite_value).sum();
            if nr > total {
                violations.push(format!(
                    "n_R = {nr} exceeds the total count {total} over ranks"
                ));
            }
        }
    }

    // Records tied to the join families must agree with recomputation.
    if let Some(p) = r.wz_params {
        let family = match p.family {
            WzFamilyTag::D => WzFamily::D { k1: p.a, k2: p.b },
            WzFamilyTag::TildeD => WzFamily::TildeD { l: p.a, e: p.b },
        };
        match wz_family(family) {
            Ok(record) => {
                match r.n_reeb.finite_value() {
                    Some(n) if n == record.bouquet_size => {}
                    _ => violations.push(format!(
                        "recomputed bouquet size {} disagrees with n_R = {}",
                        record.bouquet_size, r.n_reeb
                    )),
                }
                if r.manifold != record.manifold.to_string() {
                    violations.push(format!(
                        "manifold {} disagrees with the recomputed {}",
                        r.manifold, record.manifold
                    ));
                }
            }
            Err(e) => violations.push(format!("family parameters invalid: {e}")),
        }
    }

    RecordReport {
        structure: r.structure.clone(),
        consistent: violations.is_empty(),
        violations,
    }
}

pub fn check_census(records: &[CensusRecord]) -> Vec<RecordReport> {
    records.iter().map(check_record).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_census_loads_and_passes() {
        let records = load_census();
        assert!(records.len() >= 12);
        for report in check_census(&records) {
            assert!(
                report.consistent,
                "{}: {:?}",
                report.structure, report.violations
            );
        }
    }

    #[test]
    fn shipped_census_covers_the_catalog() {
        let records = load_census();
        let find = |needle: &str| -> &CensusRecord {
            records
                .iter()
                .find(|r| r.structure.contains(needle))
                .unwrap_or_else(|| panic!("no record matching {needle}"))
        };

        let d72 = find("D(7,2)");
        assert_eq!(d72.n_reeb, Count::AtLeast(4));
        assert_eq!(d72.manifold, "S2xS3");

        let t3 = find("tight D_k, k = 1");
        assert_eq!(t3.n_reeb, Count::Exact(0));
        assert_eq!(t3.n_by_rank.get(&2), Some(&Count::Exact(1)));

        let overtwisted = find("overtwisted");
        assert_eq!(overtwisted.n_by_rank.get(&2), Some(&Count::Aleph0));

        let m9 = find("heptagon");
        assert_eq!(m9.bouquet_cone_dims, Some(vec![3, 4, 5]));
        assert_eq!(m9.dim, 9);

        let blowup = find("blow-up");
        assert_eq!(blowup.bouquet_cone_dims, Some(vec![3, 2]));
    }

    #[test]
    fn synthetic_violations_are_flagged() {
        let mut r = CensusRecord {
            manifold: "test".into(),
            structure: "synthetic".into(),
            dim: 5,
            n_reeb: Count::Exact(3),
            n_by_rank: BTreeMap::new(),
            bouquet_cone_dims: Some(vec![3, 2]),
            wz_params: None,
            notes: String::new(),
        };
        let report = check_record(&r);
        assert!(!report.consistent);
        assert!(report.violations[0].contains("bouquet of 2 cones but n_R = 3"));

        // Rank above n+1 is out of range.
        r.bouquet_cone_dims = None;
        r.n_by_rank.insert(4, Count::Exact(1));
        let report = check_record(&r);
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("rank 4 outside 1..=3")));

        // n_R exceeding the exact total over ranks.
        r.n_by_rank.clear();
        r.n_by_rank.insert(3, Count::Exact(1));
        let report = check_record(&r);
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("n_R = 3 exceeds the total count 1")));
    }

    #[test]
    fn aleph0_skips_finite_checks() {
        let mut n_by_rank = BTreeMap::new();
        n_by_rank.insert(2, Count::Aleph0);
        let r = CensusRecord {
            manifold: "S3".into(),
            structure: "synthetic overtwisted".into(),
            dim: 3,
            n_reeb: Count::Exact(0),
            n_by_rank,
            bouquet_cone_dims: None,
            wz_params: None,
            notes: String::new(),
        };
        assert!(check_record(&r).consistent);
    }

    #[test]
    fn count_serialization_shapes() {
        assert_eq!(
            serde_json::to_string(&Count::Unknown).unwrap(),
            "\"unknown\""
        );
        assert_eq!(serde_json::to_string(&Count::Aleph0).unwrap(), "\"aleph0\"");
        assert_eq!(
            serde_json::to_string(&Count::Exact(4)).unwrap(),
            "{\"exact\":4}"
        );
        assert_eq!(
            serde_json::to_string(&Count::AtLeast(2)).unwrap(),
            "{\"at_least\":2}"
        );
        let round: Count = serde_json::from_str("{\"at_least\":7}").unwrap();
        assert_eq!(round, Count::AtLeast(7));
    }

    #[test]
    fn census_roundtrips_through_json() {
        let records = load_census();
        let text = serde_json::to_string_pretty(&records).unwrap();
        let back = parse_census(&text).unwrap();
        assert_eq!(back, records);
    }
}
