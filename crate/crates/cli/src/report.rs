//! Deterministic reports in a fixed-width text layout or canonical JSON.

use gmr_core::verdict::Verdict;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Where the report's input came from.
#[derive(Clone, Debug, PartialEq)]
pub struct Input {
    /// File name only, so reports do not depend on the working directory.
    pub file: String,
    pub sha256: String,
    /// Canonical echo of the parsed spec, absent when parsing failed.
    pub spec: Option<Value>,
}

impl Input {
    pub fn new(file: impl Into<String>, bytes: &[u8]) -> Self {
        Input {
            file: file.into(),
            sha256: hex::encode(Sha256::digest(bytes)),
            spec: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Section {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Section {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub input: Option<Input>,
    /// Ordered key/value facts about the ring.
    pub summary: Vec<(String, String)>,
    pub sections: Vec<Section>,
    pub verdicts: Vec<Verdict>,
    pub error: Option<String>,
    pub timing_ms: Option<u128>,
    pub exit: i32,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            input: None,
            summary: Vec::new(),
            sections: Vec::new(),
            verdicts: Vec::new(),
            error: None,
            timing_ms: None,
            exit: 0,
        }
    }

    pub fn fact(&mut self, key: &str, value: impl Into<String>) {
        self.summary.push((key.to_string(), value.into()));
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        if let Some(i) = &self.input {
            let mut im = Map::new();
            im.insert("file".into(), json!(i.file));
            im.insert("sha256".into(), json!(i.sha256));
            if let Some(s) = &i.spec {
                im.insert("spec".into(), s.clone());
            }
            m.insert("input".into(), Value::Object(im));
        }
        let summary: Map<String, Value> = self.summary.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        m.insert("summary".into(), Value::Object(summary));
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| json!({"title": s.title, "columns": s.columns, "rows": s.rows}))
            .collect();
        m.insert("sections".into(), json!(sections));
        let verdicts: Vec<Value> = self
            .verdicts
            .iter()
            .map(|v| json!({"claim": v.claim, "status": v.status.name(), "detail": v.detail}))
            .collect();
        m.insert("verdicts".into(), json!(verdicts));
        if let Some(e) = &self.error {
            m.insert("error".into(), json!(e));
        }
        if let Some(t) = self.timing_ms {
            m.insert("timing_ms".into(), json!(t as u64));
        }
        m.insert("exit".into(), json!(self.exit));
        Value::Object(m)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("gmr {}\n", self.command));
        let mut head: Vec<(String, String)> = Vec::new();
        if let Some(i) = &self.input {
            head.push(("input".into(), i.file.clone()));
            head.push(("sha256".into(), i.sha256.clone()));
        }
        head.extend(self.summary.iter().cloned());
        let kw = head.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        for (k, v) in &head {
            out.push_str(&format!("{k:<kw$}  {v}\n"));
        }
        for s in &self.sections {
            out.push_str(&format!("\n[{}]\n", s.title));
            table(&mut out, &s.columns, &s.rows);
        }
        if !self.verdicts.is_empty() {
            out.push_str("\n[verdicts]\n");
            let rows: Vec<Vec<String>> = self
                .verdicts
                .iter()
                .map(|v| vec![v.status.name().to_string(), v.claim.clone(), v.detail.clone()])
                .collect();
            table(&mut out, &["status".into(), "claim".into(), "detail".into()], &rows);
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("\nerror  {e}\n"));
        }
        if let Some(t) = self.timing_ms {
            out.push_str(&format!("\ntiming  {t} ms\n"));
        }
        out.push_str(&format!("\nexit {}\n", self.exit));
        out
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => pretty(&self.to_json()),
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Left-aligned columns; the last column is not padded.
fn table(out: &mut String, columns: &[String], rows: &[Vec<String>]) {
    let n = columns.len();
    let mut w: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
    for r in rows {
        for (k, c) in r.iter().enumerate() {
            w[k] = w[k].max(c.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let mut s = String::new();
        for (k, c) in cells.iter().enumerate() {
            if k + 1 == n {
                s.push_str(c);
            } else {
                s.push_str(&format!("{c:<width$}  ", width = w[k]));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    out.push_str(&line(columns));
    let rule: Vec<String> = w.iter().map(|&k| "-".repeat(k)).collect();
    out.push_str(&line(&rule));
    for r in rows {
        out.push_str(&line(r));
    }
}

/// Several reports from a corpus run; exit is the largest member exit.
pub fn emit_batch(reports: &[Report], format: Format) -> (String, i32) {
    let exit = reports.iter().map(|r| r.exit).max().unwrap_or(0);
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                s.push_str(&r.to_text());
                s.push_str("\n========\n\n");
            }
            s.push_str(&format!("batch {} reports, exit {exit}\n", reports.len()));
            s
        }
        Format::Json => pretty(&json!({
            "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
            "exit": exit,
        })),
    };
    (text, exit)
}
