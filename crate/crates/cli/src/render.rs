//! JSON views and plain-text tables.

use irrmeasure::numerics::{BoundedReal, EtaValue};
use irrmeasure::report::{BoundReport, Condition, Status as CondStatus};
use serde_json::{json, Value};

use crate::Status;

pub fn status_name(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Inapplicable => "inapplicable",
        Status::Indeterminate => "indeterminate",
        Status::Usage => "error",
    }
}

pub fn interval(x: &BoundedReal) -> Value {
    serde_json::to_value(x).expect("intervals serialize")
}

pub fn opt_interval(x: Option<&BoundedReal>) -> Value {
    x.map(interval).unwrap_or(Value::Null)
}

pub fn eta(e: &EtaValue) -> Value {
    json!({
        "lo": e.value.lo().to_decimal_string(),
        "hi": e.value.hi().to_decimal_string(),
        "kind": e.kind,
        "exact": e.exact.as_ref().map(|q| q.to_string()),
        "log_argument": e.exact_arg.to_string(),
    })
}

pub fn conditions(c: &[Condition]) -> Value {
    serde_json::to_value(c).expect("conditions serialize")
}

pub fn report(r: &BoundReport, ledger: bool) -> Value {
    let mut v = json!({
        "theorem": r.theorem.as_str(),
        "applicable": r.applicable,
        "failed_conditions": r.failed_conditions(),
        "eta": r.eta.as_ref().map(eta),
        "bound": opt_interval(r.bound.as_ref()),
        "strict": r.strict,
        "liouville": r.liouville.to_string(),
        "best": opt_interval(r.best.as_ref()),
    });
    if let Some(note) = &r.note {
        v["note"] = json!(note);
    }
    if ledger {
        v["conditions"] = conditions(&r.conditions);
    }
    v
}

/// Certified upper value, rounded up to six decimals.
pub fn upper(x: &BoundedReal) -> String {
    if x.is_exact() {
        x.hi().to_string()
    } else {
        x.hi().to_decimal_ceil(6)
    }
}

/// Certified lower value, rounded down to six decimals.
pub fn lower(x: &BoundedReal) -> String {
    if x.is_exact() {
        x.lo().to_string()
    } else {
        x.lo().to_decimal_floor(6)
    }
}

fn cond_status(s: CondStatus) -> &'static str {
    match s {
        CondStatus::Pass => "pass",
        CondStatus::Fail => "FAIL",
        CondStatus::Unchecked => "unchecked",
        CondStatus::Info => "info",
    }
}

pub fn condition_rows(c: &[Condition]) -> Vec<Vec<String>> {
    c.iter()
        .map(|c| {
            vec![
                format!("  {}", c.name),
                cond_status(c.status).to_string(),
                c.detail.clone().unwrap_or_default(),
            ]
        })
        .collect()
}

/// Left-aligned columns separated by two spaces.
pub fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|i| rows.iter().filter_map(|r| r.get(i)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (i, cell) in r.iter().enumerate() {
            if i + 1 == r.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<w$}  ", w = widths[i]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn report_rows(reports: &[BoundReport], ledger: bool) -> String {
    let mut rows = vec![vec![
        "theorem".to_string(),
        "applicable".to_string(),
        "bound (upper)".to_string(),
        "best".to_string(),
        "failed / note".to_string(),
    ]];
    for r in reports {
        let failed = r.failed_conditions();
        let last = if failed.is_empty() {
            r.note.clone().unwrap_or_default()
        } else {
            failed.join("; ")
        };
        let bound = r
            .bound
            .as_ref()
            .map(|b| format!("{}{}", if r.strict { "< " } else { "" }, upper(b)))
            .unwrap_or_else(|| "-".into());
        rows.push(vec![
            r.theorem.to_string(),
            if r.applicable { "yes" } else { "no" }.to_string(),
            bound,
            r.best.as_ref().map(upper).unwrap_or_else(|| "-".into()),
            last,
        ]);
        if ledger {
            rows.extend(condition_rows(&r.conditions));
        }
    }
    table(&rows)
}
