//! Sweeping theorems over a stream of graphs.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::session::Session;
use super::{check_caps, evaluate, TheoremId, TheoremReport};
use crate::decision::{DecisionError, Limits, NkdParams};
use crate::graph::io::read_graph6;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecodeDiagnostic {
    /// 1-based line number in the input.
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct CensusOptions {
    /// Graphs above this order are counted and skipped.
    pub max_order: usize,
    pub theorems: Vec<TheoremId>,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    pub limits: Limits,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            max_order: 7,
            theorems: TheoremId::ALL.to_vec(),
            jobs: 1,
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    /// Graphs decoded from the stream, including skipped ones.
    pub graphs_read: usize,
    pub graphs_examined: usize,
    pub skipped_over_order: usize,
    pub decode_errors: Vec<DecodeDiagnostic>,
    /// One report per selected theorem, in [`TheoremId`] order.
    pub theorems: Vec<TheoremReport>,
    pub pass: bool,
}

impl CensusReport {
    pub fn violation_count(&self) -> usize {
        self.theorems.iter().map(|t| t.violations().len()).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary, one line per theorem.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "graphs read: {}, examined: {}, skipped over max order: {}, decode errors: {}",
            self.graphs_read,
            self.graphs_examined,
            self.skipped_over_order,
            self.decode_errors.len()
        );
        for d in &self.decode_errors {
            let _ = writeln!(out, "  line {}: {}", d.line, d.message);
        }
        for t in &self.theorems {
            let _ = writeln!(
                out,
                "{:<5} instances {:>7}  applicable {:>6}  checks {:>7}  violations {:>3}  {}",
                t.theorem().name(),
                t.instances(),
                t.applicable(),
                t.checks(),
                t.violations().len(),
                if t.pass() { "pass" } else { "FAIL" }
            );
            for v in t.violations() {
                let _ = writeln!(out, "  graph {} ({}) {}: {}", v.graph_index, v.graph6, v.params, v.detail);
            }
        }
        let _ = writeln!(out, "census: {}", if self.pass { "pass" } else { "FAIL" });
        out
    }
}

/// One entry per non-blank line: the decoded graph or a diagnostic.
pub fn read_graph6_stream(text: &str) -> Vec<Result<Graph, DecodeDiagnostic>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            read_graph6(l.trim()).map_err(|e| DecodeDiagnostic {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

/// Refuses a `max_order` that some selected theorem could not handle.
pub fn validate_census(options: &CensusOptions) -> Result<(), DecisionError> {
    for &id in &options.theorems {
        check_caps(id, options.max_order, &options.limits)?;
    }
    Ok(())
}

fn examine(g: &Graph, index: usize, theorems: &[TheoremId]) -> Vec<TheoremReport> {
    let mut session = Session::new(g);
    let mut reports: Vec<TheoremReport> = theorems.iter().map(|&id| TheoremReport::new(id)).collect();
    for r in &mut reports {
        r.graphs_examined = 1;
    }
    for p in NkdParams::sweep(g.order()) {
        for r in &mut reports {
            let id = r.theorem();
            evaluate(&mut session, id, p, index, r);
        }
    }
    reports
}

/// Runs every selected theorem on every admissible triple of every graph.
/// Graphs are indexed by their position among decoded entries. The report
/// does not depend on `jobs`.
pub fn run_census<I>(source: I, options: &CensusOptions) -> Result<CensusReport, DecisionError>
where
    I: IntoIterator<Item = Result<Graph, DecodeDiagnostic>>,
{
    validate_census(options)?;
    let mut theorems = options.theorems.clone();
    theorems.sort_unstable();
    theorems.dedup();

    let mut decode_errors = Vec::new();
    let mut graphs = Vec::new();
    let mut skipped = 0;
    let mut read = 0;
    for item in source {
        match item {
            Ok(g) => {
                let index = read;
                read += 1;
                if g.order() > options.max_order {
                    skipped += 1;
                } else {
                    graphs.push((index, g));
                }
            }
            Err(d) => decode_errors.push(d),
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .expect("thread pool");
    let per_graph: Vec<Vec<TheoremReport>> =
        pool.install(|| graphs.par_iter().map(|(i, g)| examine(g, *i, &theorems)).collect());

    let mut totals: Vec<TheoremReport> = theorems.iter().map(|&id| TheoremReport::new(id)).collect();
    for reports in per_graph {
        for (total, r) in totals.iter_mut().zip(reports) {
            total.merge(r);
        }
    }
    let pass = totals.iter().all(|t| t.pass());
    Ok(CensusReport {
        graphs_read: read,
        graphs_examined: graphs.len(),
        skipped_over_order: skipped,
        decode_errors,
        theorems: totals,
        pass,
    })
}
