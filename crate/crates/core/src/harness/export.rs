use std::io::Write;

use serde::{Deserialize, Serialize};

use super::verify::DiscrepancyReport;
use crate::graph::{Graph, Vertex};
use crate::solvers::{Bounds, SolveResult, SolveStats, SolveStatus, Variant};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInfo {
    pub family: Option<String>,
    pub params: Option<Vec<usize>>,
    pub n: usize,
    pub m: usize,
}

impl GraphInfo {
    pub fn of(g: &Graph, family: Option<String>, params: Option<Vec<usize>>) -> GraphInfo {
        GraphInfo {
            family,
            params,
            n: g.n(),
            m: g.m(),
        }
    }
}

/// Versioned record for one solved (or skipped) instance.
///
/// `stats` is the only field allowed to differ between identical runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema_version: u32,
    pub graph: GraphInfo,
    pub variant: Variant,
    pub k: u32,
    pub method: String,
    pub optimum: Option<usize>,
    pub set: Vec<Vertex>,
    /// `exact`, `heuristic` or `skipped: <reason>`.
    pub status: String,
    pub witness_ref: Option<String>,
    pub bounds: Option<Bounds>,
    pub claim_id: Option<String>,
    pub claimed: Option<usize>,
    pub claim_status: Option<String>,
    pub stats: SolveStats,
}

impl ResultRecord {
    pub fn from_solve(
        graph: GraphInfo,
        r: &SolveResult,
        method: &str,
        bounds: Option<Bounds>,
        witness_ref: Option<String>,
    ) -> ResultRecord {
        ResultRecord {
            schema_version: SCHEMA_VERSION,
            graph,
            variant: r.variant,
            k: r.k,
            method: method.to_string(),
            optimum: Some(r.optimum),
            set: r.set.clone(),
            status: match r.status {
                SolveStatus::Exact => "exact".into(),
                SolveStatus::Heuristic => "heuristic".into(),
            },
            witness_ref,
            bounds,
            claim_id: None,
            claimed: None,
            claim_status: None,
            stats: r.stats,
        }
    }

    pub fn from_report(d: &DiscrepancyReport) -> ResultRecord {
        ResultRecord {
            schema_version: SCHEMA_VERSION,
            graph: GraphInfo {
                family: Some(d.family.to_string()),
                params: Some(d.params.clone()),
                n: d.n.unwrap_or(0),
                m: d.m.unwrap_or(0),
            },
            variant: d.variant,
            k: d.k,
            method: "exact".into(),
            optimum: d.computed,
            set: d.set.clone().unwrap_or_default(),
            status: if d.computed.is_some() {
                "exact".into()
            } else {
                d.status.to_string()
            },
            witness_ref: None,
            bounds: None,
            claim_id: Some(d.claim_id.to_string()),
            claimed: Some(d.claimed),
            claim_status: Some(d.status.to_string()),
            stats: SolveStats {
                nodes: d.nodes,
                elapsed_ms: d.elapsed_ms,
            },
        }
    }

    /// Copy with zeroed stats, for comparing runs.
    pub fn without_stats(&self) -> ResultRecord {
        ResultRecord {
            stats: SolveStats::default(),
            ..self.clone()
        }
    }
}

/// Pretty JSON: a single object for one record, an array otherwise.
pub fn write_json(records: &[ResultRecord]) -> String {
    let mut s = if records.len() == 1 {
        serde_json::to_string_pretty(&records[0])
    } else {
        serde_json::to_string_pretty(records)
    }
    .expect("records serialize");
    s.push('\n');
    s
}

const CSV_HEADER: [&str; 24] = [
    "schema_version",
    "family",
    "params",
    "n",
    "m",
    "variant",
    "k",
    "method",
    "optimum",
    "set",
    "status",
    "witness_ref",
    "domination_lb",
    "degree_lb",
    "clique_lb",
    "trivial_ub",
    "order_diameter_ub",
    "diameter_ub",
    "half_ub",
    "claim_id",
    "claimed",
    "claim_status",
    "nodes",
    "elapsed_ms",
];

fn joined(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(T::to_string).unwrap_or_default()
}

/// One row per record; inapplicable bounds are left empty.
pub fn write_csv<W: Write>(records: &[ResultRecord], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        let mut row = vec![
            r.schema_version.to_string(),
            opt(&r.graph.family),
            r.graph.params.as_deref().map(joined).unwrap_or_default(),
            r.graph.n.to_string(),
            r.graph.m.to_string(),
            r.variant.to_string(),
            r.k.to_string(),
            r.method.clone(),
            opt(&r.optimum),
            joined(&r.set),
            r.status.clone(),
            opt(&r.witness_ref),
        ];
        match &r.bounds {
            Some(b) => row.extend(b.named().iter().map(|(_, x)| {
                if x.applicable {
                    x.value.to_string()
                } else {
                    String::new()
                }
            })),
            None => row.extend(std::iter::repeat_n(String::new(), 7)),
        }
        row.extend([
            opt(&r.claim_id),
            opt(&r.claimed),
            opt(&r.claim_status),
            r.stats.nodes.to_string(),
            r.stats.elapsed_ms.to_string(),
        ]);
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
