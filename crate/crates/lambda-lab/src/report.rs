//! Per-graph analysis records, sweep orchestration, and report rendering.
//!
//! Reports are byte-stable for identical inputs and flags: struct field
//! order fixes the JSON key order, sweep records are sorted by their graph6
//! string, and wall-clock metadata appears only when explicitly requested.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::connectivity::is_three_connected;
use crate::cycles::{characteristic, MAX_ENUMERATION_VERTICES};
use crate::error::{Error, Result};
use crate::generators::{catalog_candidate, lex_edges, random_3_connected};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::minors::hadwiger_cap;
use crate::theorem::{certify, lambda_of_complete, Certificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "ok")]
    Ok,
    #[serde(rename = "violation")]
    Violation,
    #[serde(rename = "skipped-not-3-connected")]
    SkippedNotThreeConnected,
    #[serde(rename = "skipped-too-large")]
    SkippedTooLarge,
}

/// One analyzed graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

/// Aggregate over a run. `verified + violations + skipped == count`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub count: usize,
    pub verified: usize,
    pub violations: usize,
    pub skipped: usize,
    /// Verified graphs with zero slack (`lambda == lhs`).
    pub tight: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_slack: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_slack: Option<i64>,
}

/// Wall-clock metadata, segregated so content sections stay byte-stable.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Meta {
    pub runtime_ms: u128,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<GraphRecord>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    /// Attach a verified reduction certificate to each 3-connected record.
    pub certify: bool,
    /// Include wall-clock metadata (breaks byte-stability on purpose).
    pub timestamps: bool,
    /// Drop per-graph records, keeping only the summary.
    pub summary_only: bool,
}

fn analyze_one(g: &Graph, with_certificate: bool) -> Result<GraphRecord> {
    let graph6 = write_graph6(g);
    let n = g.vertex_count();
    let m = g.edge_count();
    if n > hadwiger_cap() || n > MAX_ENUMERATION_VERTICES {
        return Ok(GraphRecord {
            graph6,
            n,
            m,
            verdict: Verdict::SkippedTooLarge,
            h: None,
            cycles: None,
            lambda: None,
            lhs: None,
            slack: None,
            certificate: None,
        });
    }
    if !is_three_connected(g) {
        return Ok(GraphRecord {
            graph6,
            n,
            m,
            verdict: Verdict::SkippedNotThreeConnected,
            h: None,
            cycles: None,
            lambda: None,
            lhs: None,
            slack: None,
            certificate: None,
        });
    }
    let h = crate::minors::hadwiger_number(g)?.h;
    let c = characteristic(g);
    let bound = lambda_of_complete(h)?.value;
    let holds = bound <= c.lambda;
    let certificate = if with_certificate { Some(certify(g)?) } else { None };
    Ok(GraphRecord {
        graph6,
        n,
        m,
        verdict: if holds { Verdict::Ok } else { Verdict::Violation },
        h: Some(h),
        cycles: Some(c.cycle_count),
        lambda: Some(c.lambda),
        lhs: Some(bound),
        slack: Some(c.lambda - bound),
        certificate,
    })
}

impl Summary {
    fn absorb(&mut self, r: &GraphRecord) {
        self.count += 1;
        match r.verdict {
            Verdict::Ok => {
                self.verified += 1;
                let slack = r.slack.unwrap_or(0);
                if slack == 0 {
                    self.tight += 1;
                }
                self.min_slack = Some(self.min_slack.map_or(slack, |m| m.min(slack)));
                self.max_slack = Some(self.max_slack.map_or(slack, |m| m.max(slack)));
            }
            Verdict::Violation => self.violations += 1,
            Verdict::SkippedNotThreeConnected | Verdict::SkippedTooLarge => self.skipped += 1,
        }
    }

    fn merge(mut self, other: Summary) -> Summary {
        self.count += other.count;
        self.verified += other.verified;
        self.violations += other.violations;
        self.skipped += other.skipped;
        self.tight += other.tight;
        self.min_slack = match (self.min_slack, other.min_slack) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.max_slack = match (self.max_slack, other.max_slack) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

fn summarize(records: &[GraphRecord]) -> Summary {
    let mut s = Summary::default();
    for r in records {
        s.absorb(r);
    }
    s
}

/// The report plus the graph6 lines of any violating graphs; a violation
/// must always leave a standalone counterexample artifact behind.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub report: Report,
    pub counterexamples: Vec<String>,
}

fn finish(
    mut records: Vec<GraphRecord>,
    opts: &AnalyzeOptions,
    started: std::time::Instant,
    sort_records: bool,
) -> RunOutcome {
    if sort_records {
        records.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    }
    let summary = summarize(&records);
    let counterexamples: Vec<String> = records
        .iter()
        .filter(|r| r.verdict == Verdict::Violation)
        .map(|r| r.graph6.clone())
        .collect();
    let records = if opts.summary_only { Vec::new() } else { records };
    RunOutcome {
        report: Report {
            records,
            summary,
            meta: opts.timestamps.then(|| Meta {
                runtime_ms: started.elapsed().as_millis(),
            }),
        },
        counterexamples,
    }
}

/// Analyzes graphs in their given order (no sorting; the input is the
/// user's list).
pub fn analyze(graphs: &[Graph], opts: &AnalyzeOptions) -> Result<RunOutcome> {
    let started = std::time::Instant::now();
    let records = graphs
        .iter()
        .map(|g| analyze_one(g, opts.certify))
        .collect::<Result<Vec<_>>>()?;
    Ok(finish(records, opts, started, false))
}

/// Streaming aggregation for summary-only sweeps: records are folded into
/// the summary as they are produced, so a large sweep never materializes
/// its record list.
fn fold_summary<I>(record_stream: I) -> Result<(Summary, Vec<String>)>
where
    I: ParallelIterator<Item = Result<GraphRecord>>,
{
    record_stream
        .try_fold(
            || (Summary::default(), Vec::new()),
            |(mut summary, mut counterexamples), record| {
                let record = record?;
                summary.absorb(&record);
                if record.verdict == Verdict::Violation {
                    counterexamples.push(record.graph6);
                }
                Ok((summary, counterexamples))
            },
        )
        .try_reduce(
            || (Summary::default(), Vec::new()),
            |(sa, mut ca), (sb, cb)| {
                ca.extend(cb);
                Ok((sa.merge(sb), ca))
            },
        )
}

/// Sweeps the main inequality over every labeled 3-connected graph on `n`
/// vertices, distributing edge-mask ranges over a worker pool. Records come
/// back sorted by graph6 string, so parallelism never changes the report.
pub fn sweep_exhaustive(n: usize, opts: &AnalyzeOptions) -> Result<RunOutcome> {
    if !(4..=8).contains(&n) {
        return Err(Error::CatalogRange { n });
    }
    let started = std::time::Instant::now();
    let edges = lex_edges(n);
    let end = 1u64 << edges.len();
    let stream = (0..end)
        .into_par_iter()
        .filter_map(|mask| catalog_candidate(n, mask, &edges))
        .map(|g| analyze_one(&g, opts.certify));
    if opts.summary_only {
        let (summary, mut counterexamples) = fold_summary(stream)?;
        counterexamples.sort();
        return Ok(RunOutcome {
            report: Report {
                records: Vec::new(),
                summary,
                meta: opts.timestamps.then(|| Meta {
                    runtime_ms: started.elapsed().as_millis(),
                }),
            },
            counterexamples,
        });
    }
    let records = stream.collect::<Result<Vec<_>>>()?;
    Ok(finish(records, opts, started, true))
}

/// Sweeps `count` seeded random 3-connected graphs on `n` vertices with
/// roughly `m` edges; graph `i` uses seed `seed + i`.
pub fn sweep_random(
    n: usize,
    m: usize,
    count: usize,
    seed: u64,
    opts: &AnalyzeOptions,
) -> Result<RunOutcome> {
    let started = std::time::Instant::now();
    let records = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let g = random_3_connected(n, m, seed.wrapping_add(i))?;
            analyze_one(&g, opts.certify)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(finish(records, opts, started, true))
}

/// Pretty JSON with fixed key order.
pub fn to_json(report: &Report) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)?)
}

/// Flat CSV projection of the per-graph records.
pub fn to_csv(report: &Report) -> String {
    let mut out = String::from("graph6,n,m,verdict,h,cycles,lambda,lhs,slack\n");
    let verdict_str = |v: Verdict| match v {
        Verdict::Ok => "ok",
        Verdict::Violation => "violation",
        Verdict::SkippedNotThreeConnected => "skipped-not-3-connected",
        Verdict::SkippedTooLarge => "skipped-too-large",
    };
    let opt = |x: Option<i64>| x.map_or(String::new(), |v| v.to_string());
    for r in &report.records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.graph6,
            r.n,
            r.m,
            verdict_str(r.verdict),
            r.h.map_or(String::new(), |v| v.to_string()),
            r.cycles.map_or(String::new(), |v| v.to_string()),
            opt(r.lambda),
            opt(r.lhs),
            opt(r.slack),
        ));
    }
    out
}
