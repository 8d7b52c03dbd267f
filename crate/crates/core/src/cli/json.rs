//! Machine-readable output.
//!
//! ```json
//! {"status": "empty" | "lattice",
//!  "reason": {"divisor": g, "target": d},      // empty only
//!  "base": [x, y, z], "generators": [[..], ..], // lattice only
//!  "case": "<tag>",
//!  "points": [[x, y, z], ..],                   // enumerate only
//!  "count": n,                                  // enumerate and count
//!  "oracle": {"agree": bool, "solver": n, "brute_force": n}}
//! ```

use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{AffineLattice, Obstruction, Point, SolutionSet3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Empty,
    Lattice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub divisor: i64,
    pub target: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub agree: bool,
    /// Points the solver found in the region.
    pub solver: u64,
    /// Points the exhaustive scan found in the region.
    pub brute_force: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<Reason>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Point<3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Point<3>>>,
    pub case: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Point<3>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

impl SolutionDocument {
    pub fn new(set: &SolutionSet3, case: impl Display) -> Self {
        let mut doc = SolutionDocument {
            status: Status::Empty,
            reason: None,
            base: None,
            generators: None,
            case: case.to_string(),
            points: None,
            count: None,
            oracle: None,
        };
        match set {
            SolutionSet3::Empty(o) => {
                doc.reason = Some(Reason {
                    divisor: o.divisor,
                    target: o.target,
                });
            }
            SolutionSet3::Lattice(l) => {
                doc.status = Status::Lattice;
                doc.base = Some(*l.base());
                doc.generators = Some(l.generators().to_vec());
            }
        }
        doc
    }

    /// Rebuilds the solution set described by the document.
    pub fn to_set(&self) -> Result<SolutionSet3> {
        match self.status {
            Status::Empty => {
                let r = self
                    .reason
                    .ok_or(Error::Contract("empty status without a reason"))?;
                Ok(SolutionSet3::Empty(Obstruction {
                    divisor: r.divisor,
                    target: r.target,
                }))
            }
            Status::Lattice => {
                let base = self
                    .base
                    .ok_or(Error::Contract("lattice status without a base"))?;
                let gens = self.generators.clone().unwrap_or_default();
                Ok(SolutionSet3::Lattice(AffineLattice::new(base, gens)?))
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
