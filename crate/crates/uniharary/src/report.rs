//! Text and JSON renderings of reports and traces.
//!
//! All output is deterministic: exact fractions are always written as
//! `numerator/denominator` strings, graphs as graph6 strings, and the JSON
//! documents carry a top-level `schema_version`. Approximate decimals only
//! ever accompany the exact form.

use crate::format::emit_graph6;
use crate::graph::Graph;
use crate::indices::IndexReport;
use crate::rational::Rational;
use crate::transform::{TransformStep, TransformTrace};
use crate::verify::{ExtremalReport, VerifyReport};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u64 = 1;

fn graph6_of(g: &Graph) -> String {
    emit_graph6(g).expect("report graphs stay within the graph6 range")
}

fn rational_json(r: &Rational) -> Value {
    json!({ "exact": r.to_string(), "approx": r.to_f64() })
}

pub fn index_text(report: &IndexReport) -> String {
    format!(
        "H_A = {} ({})\nHarary = {} ({})\nWiener = {}\n",
        report.h_a,
        report.h_a.approx_string(),
        report.harary,
        report.harary.approx_string(),
        report.wiener,
    )
}

pub fn index_json(g: &Graph, report: &IndexReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "graph6": graph6_of(g),
        "h_a": rational_json(&report.h_a),
        "harary": rational_json(&report.harary),
        "wiener": report.wiener,
    })
}

/// Aligned-column table of enumerated classes and their exact values.
pub fn enumeration_text(n: usize, rows: &[(Graph, Rational)]) -> String {
    let mut lines = vec![format!("n = {}: {} isomorphism classes", n, rows.len())];
    let g6: Vec<String> = rows.iter().map(|(g, _)| graph6_of(g)).collect();
    let exact: Vec<String> = rows.iter().map(|(_, v)| v.to_string()).collect();
    let w_idx = rows.len().to_string().len().max(5);
    let w_g6 = g6.iter().map(String::len).max().unwrap_or(6).max(6);
    let w_exact = exact.iter().map(String::len).max().unwrap_or(3).max(3);
    lines.push(format!(
        "{:>w_idx$}  {:<w_g6$}  {:>w_exact$}  approx",
        "class", "graph6", "h_a",
    ));
    for (i, (_, value)) in rows.iter().enumerate() {
        lines.push(format!(
            "{:>w_idx$}  {:<w_g6$}  {:>w_exact$}  {}",
            i,
            g6[i],
            exact[i],
            value.approx_string(),
        ));
    }
    lines.join("\n") + "\n"
}

pub fn enumeration_json(n: usize, rows: &[(Graph, Rational)]) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "class_count": rows.len(),
        "classes": rows
            .iter()
            .map(|(g, v)| json!({ "graph6": graph6_of(g), "h_a": rational_json(v) }))
            .collect::<Vec<_>>(),
    })
}

fn attainers_text(report: &ExtremalReport, max: bool) -> String {
    let list = if max { &report.max_attainers } else { &report.min_attainers };
    list.iter()
        .map(|a| graph6_of(&a.graph))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn verify_text(report: &VerifyReport) -> String {
    let mut lines = vec![
        format!("verify n = {}: {} isomorphism classes", report.n, report.scan.class_count),
        format!(
            "max H_A = {} ({}), expected {}, attained by: {}",
            report.scan.max_value,
            report.scan.max_value.approx_string(),
            report.max_expected,
            attainers_text(&report.scan, true),
        ),
        format!(
            "min H_A = {} ({}), expected {}, attained by: {}",
            report.scan.min_value,
            report.scan.min_value.approx_string(),
            report.min_expected,
            attainers_text(&report.scan, false),
        ),
    ];
    for check in &report.checks {
        let status = match (check.asserted, check.passed) {
            (true, true) => "PASS",
            (true, false) => "FAIL",
            (false, _) => "NOTE",
        };
        lines.push(format!("{status}  {:<32}  {}", check.name, check.detail));
    }
    lines.push(format!(
        "result: {}",
        if report.all_asserted_passed() { "PASS" } else { "FAIL" }
    ));
    lines.join("\n") + "\n"
}

pub fn verify_json(report: &VerifyReport) -> Value {
    let attainers = |list: &[crate::verify::Attainer]| {
        list.iter()
            .map(|a| json!({ "graph6": graph6_of(&a.graph), "certificate": a.certificate.to_string() }))
            .collect::<Vec<_>>()
    };
    json!({
        "schema_version": SCHEMA_VERSION,
        "n": report.n,
        "class_count": report.scan.class_count,
        "max": {
            "value": rational_json(&report.scan.max_value),
            "expected": report.max_expected.to_string(),
            "attainers": attainers(&report.scan.max_attainers),
        },
        "min": {
            "value": rational_json(&report.scan.min_value),
            "expected": report.min_expected.to_string(),
            "attainers": attainers(&report.scan.min_attainers),
        },
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "asserted": c.asserted,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "all_asserted_passed": report.all_asserted_passed(),
    })
}

fn edge_list_text(edges: &[(usize, usize)]) -> String {
    edges
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn step_line(i: usize, step: &TransformStep) -> String {
    format!(
        "step {:>3}  {:<34}  -[{}] +[{}]  h_a {} -> {}",
        i + 1,
        step.kind.to_string(),
        edge_list_text(&step.edges_removed),
        edge_list_text(&step.edges_added),
        step.h_a_before,
        step.h_a_after,
    )
}

/// Line-oriented trace report: initial and final graphs with exact values,
/// one line per step.
pub fn trace_text(trace: &TransformTrace, with_steps: bool) -> String {
    let mut lines = Vec::new();
    let initial_value = trace
        .steps
        .first()
        .map(|s| s.h_a_before.clone())
        .unwrap_or_else(|| {
            crate::indices::additively_weighted_harary(&trace.initial)
                .expect("trace endpoints are connected")
        });
    let final_value = trace
        .steps
        .last()
        .map(|s| s.h_a_after.clone())
        .unwrap_or_else(|| initial_value.clone());
    lines.push(format!(
        "initial  {}  h_a = {} ({})",
        graph6_of(&trace.initial),
        initial_value,
        initial_value.approx_string(),
    ));
    if with_steps {
        for (i, step) in trace.steps.iter().enumerate() {
            lines.push(step_line(i, step));
        }
    }
    lines.push(format!("steps    {}", trace.steps.len()));
    lines.push(format!(
        "final    {}  h_a = {} ({})",
        graph6_of(&trace.final_graph),
        final_value,
        final_value.approx_string(),
    ));
    lines.join("\n") + "\n"
}

pub fn trace_json(trace: &TransformTrace) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "initial": graph6_of(&trace.initial),
        "final": graph6_of(&trace.final_graph),
        "steps": trace.steps.iter().map(|s| json!({
            "transform": s.kind.to_string(),
            "edges_removed": s.edges_removed,
            "edges_added": s.edges_added,
            "h_a_before": rational_json(&s.h_a_before),
            "h_a_after": rational_json(&s.h_a_after),
        })).collect::<Vec<_>>(),
    })
}
