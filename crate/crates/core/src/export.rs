//! DOT and JSON renderings of materialized intervals.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::poset::{Interval, MobiusTable};
use crate::word::DyckWord;

pub const INTERVAL_SCHEMA: &str = "dyck-poset/interval/v1";

#[derive(Debug, Serialize)]
pub struct RankRecord {
    pub r: usize,
    pub count: usize,
    pub elements: Vec<DyckWord>,
}

#[derive(Debug, Serialize)]
pub struct IntervalRecord<'a> {
    pub schema: &'static str,
    pub bottom: DyckWord,
    pub top: DyckWord,
    pub ranks: Vec<RankRecord>,
    pub edges: Vec<(DyckWord, DyckWord)>,
    /// Keys in rank-then-lexicographic order.
    #[serde(serialize_with = "serialize_mobius")]
    pub mobius: &'a MobiusTable,
}

fn serialize_mobius<S: serde::Serializer>(
    table: &&MobiusTable,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_map(table.iter())
}

impl<'a> IntervalRecord<'a> {
    pub fn new(interval: &'a Interval) -> Result<Self> {
        Ok(IntervalRecord {
            schema: INTERVAL_SCHEMA,
            bottom: interval.bottom(),
            top: interval.top(),
            ranks: interval
                .rank_sizes()
                .into_iter()
                .map(|(r, count)| RankRecord {
                    r,
                    count,
                    elements: interval.rank(r).to_vec(),
                })
                .collect(),
            edges: interval.edges(),
            mobius: interval.mobius_table()?,
        })
    }
}

pub fn to_json(interval: &Interval) -> Result<String> {
    let record = IntervalRecord::new(interval)?;
    Ok(serde_json::to_string_pretty(&record).expect("interval records always serialize"))
}

/// Hasse diagram in DOT, bottom to top, one `rank=same` group per rank.
pub fn to_dot(interval: &Interval) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "digraph \"[{}, {}]\" {{",
        interval.bottom(),
        interval.top()
    );
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=plaintext, fontname=\"monospace\"];\n");
    out.push_str("  edge [arrowhead=none];\n");
    for (r, _) in interval.rank_sizes() {
        let _ = write!(out, "  {{ rank=same;");
        for x in interval.rank(r) {
            let _ = write!(out, " \"{x}\";");
        }
        let _ = writeln!(out, " }}  // rank {r}");
    }
    for (lower, upper) in interval.edges() {
        let _ = writeln!(out, "  \"{lower}\" -> \"{upper}\";");
    }
    out.push_str("}\n");
    out
}
