use std::error::Error;

use clap::ValueEnum;
use qsphere::verify::CheckResult;
use serde_json::Value;

use crate::commands::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn render(report: &Report, format: Format) -> Result<String, Box<dyn Error>> {
    match format {
        Format::Json => {
            let mut s = if report.list {
                serde_json::to_string_pretty(&report.results)?
            } else {
                serde_json::to_string_pretty(&report.results[0])?
            };
            s.push('\n');
            Ok(s)
        }
        Format::Csv => csv(report),
        Format::Text => Ok(text(report)),
    }
}

fn status(r: &CheckResult) -> String {
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    match r.elapsed_ms {
        Some(ms) => format!("{verdict} {} ({ms} ms)", r.check),
        None => format!("{verdict} {}", r.check),
    }
}

fn text(report: &Report) -> String {
    let mut out = String::new();
    if let Some(t) = &report.text {
        out.push_str(t);
        if !t.is_empty() && !t.ends_with('\n') {
            out.push('\n');
        }
        // queries print only their answer
        if report.results.iter().all(|r| r.expected.is_null()) {
            return out;
        }
    }
    for r in &report.results {
        out.push_str(&status(r));
        out.push('\n');
    }
    if report.list {
        let passed = report.results.iter().filter(|r| r.pass).count();
        out.push_str(&format!("{passed}/{} passed\n", report.results.len()));
    }
    out
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(items) if items.iter().all(Value::is_string) => {
            items.iter().filter_map(Value::as_str).collect::<Vec<_>>().join("; ")
        }
        other => other.to_string(),
    }
}

/// The row-shaped part of a result: the result itself, or its `cells` or
/// `basis` field.
fn table(result: &Value) -> Option<&Vec<Value>> {
    [Some(result), result.get("cells"), result.get("basis")]
        .into_iter()
        .flatten()
        .find_map(|v| v.as_array().filter(|a| !a.is_empty()))
}

fn csv(report: &Report) -> Result<String, Box<dyn Error>> {
    let mut w = ::csv::Writer::from_writer(Vec::new());
    let single = (!report.list).then(|| &report.results[0]);
    match single.and_then(|r| table(&r.result)) {
        Some(rows) if rows.iter().all(Value::is_object) => {
            let mut header: Vec<&String> = Vec::new();
            for row in rows {
                for k in row.as_object().expect("object").keys() {
                    if !header.contains(&k) {
                        header.push(k);
                    }
                }
            }
            w.write_record(&header)?;
            for row in rows {
                w.write_record(header.iter().map(|k| cell(&row[k.as_str()])))?;
            }
        }
        Some(rows) => {
            w.write_record(["value"])?;
            for row in rows {
                w.write_record([cell(row)])?;
            }
        }
        None => {
            w.write_record(["check", "pass", "elapsed_ms", "params", "result"])?;
            for r in &report.results {
                let ms = r.elapsed_ms.map(|m| m.to_string()).unwrap_or_default();
                let result = if report.list { String::new() } else { cell(&r.result) };
                w.write_record([r.check.clone(), r.pass.to_string(), ms, r.params.to_string(), result])?;
            }
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
