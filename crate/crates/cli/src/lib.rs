//! Command-line plumbing for `ldc`: graph input, the reproduction suite and
//! a naive reference solver.

pub mod input;
pub mod oracle;
pub mod repro;

use ldc_core::solver::{Decision, DecisionReport, SCHEMA_VERSION};
use ldc_core::Error;
use serde_json::{json, Value};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A check failed: a refused partition or a failing reproduction claim.
    pub const CHECK_FAILED: i32 = 1;
    /// Unparseable graph, partition or family spec.
    pub const INPUT: i32 = 2;
    pub const DISCONNECTED: i32 = 3;
    /// A budget ran out before the answer was known.
    pub const INCONCLUSIVE: i32 = 4;
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Disconnected => exit::DISCONNECTED,
        Error::Parse { .. }
        | Error::Graph6(_)
        | Error::InvalidFamily { .. }
        | Error::MalformedPartition(_)
        | Error::VertexOutOfRange { .. }
        | Error::OrderTooLarge(_)
        | Error::LoopEdge(_)
        | Error::EqualVertices(_) => exit::INPUT,
        _ => exit::CHECK_FAILED,
    }
}

/// JSON for an `--at-least k` query. `status` is `found`, `none` or
/// `inconclusive`.
pub fn decision_json(k: usize, r: &DecisionReport) -> Value {
    let (status, parts, partners) = match &r.decision {
        Decision::Found(c) => (
            "found",
            json!(c.partition.parts().iter().map(|p| p.to_vec()).collect::<Vec<_>>()),
            json!(c.partner),
        ),
        Decision::None => ("none", Value::Null, Value::Null),
        Decision::Inconclusive => ("inconclusive", Value::Null, Value::Null),
    };
    json!({
        "schema_version": SCHEMA_VERSION,
        "k": k,
        "status": status,
        "parts": parts,
        "partners": partners,
        "types_searched": r.types_searched,
        "nodes_explored": r.nodes_explored,
        "elapsed_ms": r.elapsed.as_secs_f64() * 1000.0,
    })
}
