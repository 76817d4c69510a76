//! Markdown, CSV, and JSON emitters for the report types.
//!
//! Every report struct deserializes from its own JSON, so rendered JSON
//! parses back into an equal value.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::bounds::BoundsRow;
use crate::error::Result;
use crate::labeling::{self, Labeling};
use crate::solver::{SolveOutcome, Status};
use crate::strength::{Method, StrengthResult};
use crate::verify::SuiteReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelRow {
    pub bit_string: String,
    #[serde(with = "crate::decimal")]
    pub label: BigUint,
}

/// The labeling as rows in label order.
pub fn label_rows(n: usize) -> Result<Vec<LabelRow>> {
    Ok(labeling::enumerate_sequence(n)?
        .into_iter()
        .enumerate()
        .map(|(p, x)| LabelRow {
            bit_string: x.to_string(),
            label: BigUint::from(p + 1),
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrengthReport {
    pub n: usize,
    #[serde(with = "crate::decimal")]
    pub value: BigUint,
    pub witness: [String; 2],
    pub method: Method,
    pub elapsed_ms: u64,
}

impl StrengthReport {
    pub fn new(n: usize, r: &StrengthResult, elapsed_ms: u64) -> Self {
        let witness = match r.witness_strings() {
            Some((a, b)) => [a.to_string(), b.to_string()],
            None => [r.witness.0.to_string(), r.witness.1.to_string()],
        };
        StrengthReport {
            n,
            value: r.value.clone(),
            witness,
            method: r.method,
            elapsed_ms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub graph: String,
    pub n: usize,
    pub status: Status,
    pub best_value: u64,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
    /// `(vertex, label)`; hypercube vertices are written as bit strings.
    pub labeling: Vec<(String, u64)>,
}

impl SolveReport {
    pub fn new(
        graph: &str,
        n: usize,
        dim: Option<usize>,
        out: &SolveOutcome,
        elapsed_ms: u64,
    ) -> Self {
        SolveReport {
            graph: graph.to_string(),
            n,
            status: out.status,
            best_value: out.best_value,
            nodes_explored: out.nodes_explored,
            elapsed_ms,
            labeling: vertex_labels(dim, &out.best_labeling),
        }
    }
}

fn vertex_labels(dim: Option<usize>, l: &Labeling) -> Vec<(String, u64)> {
    l.labels()
        .iter()
        .enumerate()
        .map(|(v, &label)| {
            let name = match dim.and_then(|d| BitString::from_word(d, v as u64).ok()) {
                Some(x) => x.to_string(),
                None => v.to_string(),
            };
            (name, label)
        })
        .collect()
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn csv_rows<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("flat rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

fn md_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut s = format!("| {} |\n|", header.join(" | "));
    for _ in header {
        s.push_str("---|");
    }
    s.push('\n');
    for r in rows {
        let _ = writeln!(s, "| {} |", r.join(" | "));
    }
    s
}

pub fn render_label_rows(rows: &[LabelRow], fmt: Format) -> String {
    match fmt {
        Format::Json => json(rows),
        Format::Csv => csv_rows(rows),
        Format::Markdown => md_table(
            &["bit string", "f(x)"],
            rows.iter()
                .map(|r| vec![r.bit_string.clone(), r.label.to_string()]),
        ),
    }
}

pub fn render_strength(r: &StrengthReport, fmt: Format) -> String {
    match fmt {
        Format::Json => json(r),
        Format::Csv => {
            let method = method_name(r.method);
            format!(
                "n,value,witness_odd,witness_even,method,elapsed_ms\n{},{},{},{},{},{}\n",
                r.n, r.value, r.witness[0], r.witness[1], method, r.elapsed_ms
            )
        }
        Format::Markdown => md_table(
            &["n", "strength", "witness edge", "method", "elapsed (ms)"],
            [vec![
                r.n.to_string(),
                r.value.to_string(),
                format!("{} - {}", r.witness[0], r.witness[1]),
                method_name(r.method).to_string(),
                r.elapsed_ms.to_string(),
            ]],
        ),
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::EdgeScan => "edge_scan",
        Method::PairScan => "pair_scan",
        Method::Solver => "solver",
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Optimal => "optimal",
        Status::FeasibleOnly => "feasible_only",
        Status::Timeout => "timeout",
    }
}

pub fn render_solve(r: &SolveReport, fmt: Format) -> String {
    match fmt {
        Format::Json => json(r),
        Format::Csv => {
            let mut s = format!(
                "graph,n,status,best_value,nodes_explored,elapsed_ms\n{},{},{},{},{},{}\n\nvertex,label\n",
                r.graph,
                r.n,
                status_name(r.status),
                r.best_value,
                r.nodes_explored,
                r.elapsed_ms
            );
            for (v, l) in &r.labeling {
                let _ = writeln!(s, "{v},{l}");
            }
            s
        }
        Format::Markdown => {
            let mut s = format!(
                "{} n={}: {} {} ({} nodes, {} ms)\n\n",
                r.graph,
                r.n,
                status_name(r.status),
                r.best_value,
                r.nodes_explored,
                r.elapsed_ms
            );
            s.push_str(&md_table(
                &["vertex", "label"],
                r.labeling
                    .iter()
                    .map(|(v, l)| vec![v.clone(), l.to_string()]),
            ));
            s
        }
    }
}

pub fn render_bounds(rows: &[BoundsRow], fmt: Format) -> String {
    match fmt {
        Format::Json => json(rows),
        Format::Csv => csv_rows(rows),
        Format::Markdown => md_table(
            &[
                "n",
                "lower",
                "prior upper",
                "recurrence upper",
                "closed-form upper",
            ],
            rows.iter().map(|r| {
                vec![
                    r.n.to_string(),
                    r.lower.to_string(),
                    r.upper_prior.to_string(),
                    r.upper_recurrence.to_string(),
                    r.upper_closed
                        .as_ref()
                        .map_or_else(|| "-".into(), |v| v.to_string()),
                ]
            }),
        ),
    }
}

#[derive(Serialize)]
struct VerifyCsvRow<'a> {
    suite: &'a str,
    check: &'a str,
    passed: bool,
    cases: u64,
    counterexample: &'a str,
}

pub fn render_verify(reports: &[SuiteReport], fmt: Format) -> String {
    match fmt {
        Format::Json => json(reports),
        Format::Csv => {
            let rows: Vec<_> = reports
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(move |c| VerifyCsvRow {
                        suite: &r.suite,
                        check: &c.name,
                        passed: c.passed,
                        cases: c.cases,
                        counterexample: c.counterexample.as_deref().unwrap_or(""),
                    })
                })
                .collect();
            csv_rows(&rows)
        }
        Format::Markdown => md_table(
            &[
                "suite",
                "n max",
                "check",
                "result",
                "cases",
                "counterexample",
            ],
            reports.iter().flat_map(|r| {
                r.checks.iter().map(move |c| {
                    vec![
                        r.suite.clone(),
                        r.n_max.to_string(),
                        c.name.replace('|', "\\|"),
                        if c.passed { "pass" } else { "FAIL" }.to_string(),
                        c.cases.to_string(),
                        c.counterexample.clone().unwrap_or_default(),
                    ]
                })
            }),
        ),
    }
}
