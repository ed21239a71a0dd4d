use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

use crate::partition::LdcCertificate;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Exact,
    None,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::None => "none",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub name: String,
    pub value: usize,
}

impl Bound {
    pub fn new(name: &str, value: usize) -> Bound {
        Bound { name: name.to_string(), value }
    }
}

/// Outcome of an exact C_L computation.
///
/// `c_l` is `None` both when no LDC-partition exists (`status == None`) and
/// when the budget ran out (`status == Inconclusive`).
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub c_l: Option<usize>,
    pub certificate: Option<LdcCertificate>,
    pub bounds_used: Vec<Bound>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub status: Status,
}

impl SolveReport {
    pub(crate) fn exact(k: usize, cert: LdcCertificate, bounds: Vec<Bound>, nodes: u64, elapsed: Duration) -> Self {
        SolveReport {
            c_l: Some(k),
            certificate: Some(cert),
            bounds_used: bounds,
            nodes_explored: nodes,
            elapsed,
            status: Status::Exact,
        }
    }

    pub(crate) fn none(bounds: Vec<Bound>, nodes: u64, elapsed: Duration) -> Self {
        SolveReport {
            c_l: None,
            certificate: None,
            bounds_used: bounds,
            nodes_explored: nodes,
            elapsed,
            status: Status::None,
        }
    }

    pub(crate) fn inconclusive(bounds: Vec<Bound>, nodes: u64, elapsed: Duration) -> Self {
        SolveReport { status: Status::Inconclusive, ..Self::none(bounds, nodes, elapsed) }
    }

    /// JSON with the stable field names. `c_l` is a number, the string
    /// `"none"`, or `null` when inconclusive.
    pub fn to_json(&self) -> Value {
        let c_l = match (self.status, self.c_l) {
            (Status::Exact, Some(k)) => json!(k),
            (Status::None, _) => json!("none"),
            _ => Value::Null,
        };
        let (parts, partners) = match &self.certificate {
            Some(c) => (
                json!(c.partition.parts().iter().map(|p| p.to_vec()).collect::<Vec<_>>()),
                json!(c.partner),
            ),
            None => (Value::Null, Value::Null),
        };
        json!({
            "schema_version": SCHEMA_VERSION,
            "c_l": c_l,
            "parts": parts,
            "partners": partners,
            "bounds_used": self.bounds_used,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": self.elapsed.as_secs_f64() * 1000.0,
            "status": self.status,
        })
    }
}
