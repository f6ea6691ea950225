//! Canonical system formatting and report serialization (JSON and text).

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::behavior::{AutonomyDegree, AutonomyReport, SystemMatrix};
use crate::control::StrengthReport;
use crate::genericity::ExperimentStats;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug)]
pub enum Report<'a> {
    Autonomy(&'a AutonomyReport),
    Strength(&'a StrengthReport),
    Experiment(&'a ExperimentStats),
}

/// Canonical system file text; a fixed point of parse-then-format.
pub fn format_system(m: &SystemMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.n(), m.k(), m.num_rows());
    for row in m.rows() {
        let entries: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(out, "{}", entries.join("; "));
    }
    out
}

fn degree_value(d: AutonomyDegree) -> Value {
    match d {
        AutonomyDegree::Finite(v) => json!(v),
        AutonomyDegree::Infinite => json!("infinity"),
    }
}

fn autonomy_json(r: &AutonomyReport) -> Value {
    json!({
        "n": r.n,
        "k": r.k,
        "rows": r.rows,
        "degree_of_autonomy": degree_value(r.degree),
        "autonomous": r.autonomous,
        "strongly_autonomous": r.strongly_autonomous,
        "zero_behavior": r.zero_behavior,
        "under_determined": r.under_determined,
        "char_ideal_dimension": r.char_ideal_dim,
        "char_ideal_generators": r.char_ideal_gens.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

fn strength_json(r: &StrengthReport) -> Value {
    json!({
        "n": r.n,
        "k": r.k,
        "rows": r.plant_rows,
        "controller_rows": r.controller_rows,
        "delta_plant": degree_value(r.delta_plant),
        "delta_controlled": degree_value(r.delta_controlled),
        "strength": degree_value(r.strength),
        "generic_bound": degree_value(r.generic_bound),
        "max_efficient": r.max_efficient,
    })
}

fn experiment_json(r: &ExperimentStats) -> Value {
    json!({
        "trials": r.trials,
        "histogram": r.histogram,
        "fraction_generic": r.fraction_generic(),
        "predicted": r.predicted,
        "seed": r.seed,
        "wall_time_ms": r.wall_time.as_millis() as u64,
    })
}

fn autonomy_text(r: &AutonomyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", r.n);
    let _ = writeln!(out, "k: {}", r.k);
    let _ = writeln!(out, "rows: {}", r.rows);
    let _ = writeln!(out, "degree_of_autonomy: {}", r.degree);
    let _ = writeln!(out, "autonomous: {}", r.autonomous);
    let _ = writeln!(out, "strongly_autonomous: {}", r.strongly_autonomous);
    let _ = writeln!(out, "zero_behavior: {}", r.zero_behavior);
    let _ = writeln!(out, "under_determined: {}", r.under_determined);
    match r.char_ideal_dim {
        Some(d) => {
            let _ = writeln!(out, "char_ideal_dimension: {d}");
        }
        None => {
            let _ = writeln!(out, "char_ideal_dimension: empty");
        }
    }
    if r.char_ideal_gens.is_empty() {
        let _ = writeln!(out, "char_ideal_generators: 0");
    } else {
        let gens: Vec<String> = r.char_ideal_gens.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(out, "char_ideal_generators: {}", gens.join(", "));
    }
    out
}

fn strength_text(r: &StrengthReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", r.n);
    let _ = writeln!(out, "k: {}", r.k);
    let _ = writeln!(out, "rows: {}", r.plant_rows);
    let _ = writeln!(out, "controller_rows: {}", r.controller_rows);
    let _ = writeln!(out, "delta_plant: {}", r.delta_plant);
    let _ = writeln!(out, "delta_controlled: {}", r.delta_controlled);
    let _ = writeln!(out, "strength: {}", r.strength);
    let _ = writeln!(out, "generic_bound: {}", r.generic_bound);
    let _ = writeln!(out, "max_efficient: {}", r.max_efficient);
    out
}

fn experiment_text(r: &ExperimentStats) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "trials: {}", r.trials);
    let _ = writeln!(out, "seed: {}", r.seed);
    let _ = writeln!(out, "predicted: {}", r.predicted);
    for (key, count) in &r.histogram {
        let _ = writeln!(out, "histogram[{key}]: {count}");
    }
    let _ = writeln!(out, "fraction_generic: {}", r.fraction_generic());
    let _ = writeln!(out, "wall_time_ms: {}", r.wall_time.as_millis());
    out
}

/// The JSON value of a report, for embedding into larger documents.
pub fn report_value(report: Report<'_>) -> Value {
    match report {
        Report::Autonomy(r) => autonomy_json(r),
        Report::Strength(r) => strength_json(r),
        Report::Experiment(r) => experiment_json(r),
    }
}

/// Serializes a report with the stable field names of the wire format.
pub fn write_report(report: Report<'_>, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let value = report_value(report);
            let mut s = serde_json::to_string_pretty(&value).expect("report serialization");
            s.push('\n');
            s
        }
        ReportFormat::Text => match report {
            Report::Autonomy(r) => autonomy_text(r),
            Report::Strength(r) => strength_text(r),
            Report::Experiment(r) => experiment_text(r),
        },
    }
}
