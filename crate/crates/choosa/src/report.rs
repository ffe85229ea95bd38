//! Run reports: a line-oriented `key: value` structure that serializes
//! identically across runs with the same inputs and seeds.

use std::fmt::Display;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Structured,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Option<ReportFormat> {
        match s {
            "text" => Some(ReportFormat::Text),
            "structured" => Some(ReportFormat::Structured),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunReport {
    entries: Vec<(String, String)>,
    /// Lines printed verbatim in text mode (the payload).
    payload: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        let mut r = RunReport::default();
        r.set("command", command);
        r
    }

    pub fn set(&mut self, key: &str, value: impl Display) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn set_elapsed(&mut self, elapsed: Duration) {
        self.set("elapsed_ms", elapsed.as_millis());
    }

    /// Payload lines appear on stdout in text mode and under `result.`
    /// keys in structured mode.
    pub fn payload(&mut self, line: impl Display) {
        self.payload.push(line.to_string());
    }

    pub fn render(&self, format: ReportFormat) -> String {
        let mut out = String::new();
        match format {
            ReportFormat::Text => {
                for line in &self.payload {
                    out.push_str(line);
                    out.push('\n');
                }
            }
            ReportFormat::Structured => {
                for (k, v) in &self.entries {
                    out.push_str(&format!("{k}: {v}\n"));
                }
                for (i, line) in self.payload.iter().enumerate() {
                    out.push_str(&format!("result.{i}: {line}\n"));
                }
            }
        }
        out
    }
}
