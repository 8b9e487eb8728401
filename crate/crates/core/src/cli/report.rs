//! The report document shared by every command.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::structure::LogicalStructure;

pub const SCHEMA: &str = "lsx-report/1";

#[derive(Debug, Clone, Serialize)]
pub struct CommandEcho {
    pub name: String,
    pub args: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureInfo {
    pub name: String,
    pub n: usize,
    pub digest: String,
}

impl StructureInfo {
    pub fn new(name: &str, s: &LogicalStructure) -> Self {
        StructureInfo {
            name: name.to_string(),
            n: s.n(),
            digest: s.digest(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub check: String,
    pub text: String,
    pub data: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema: &'static str,
    pub command: CommandEcho,
    pub structure: Option<StructureInfo>,
    pub verdicts: Map<String, Value>,
    pub witnesses: Vec<Witness>,
    pub details: Value,
    pub timing: Timing,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ReportDocument {
    pub fn new(command: CommandEcho) -> Self {
        ReportDocument {
            schema: SCHEMA,
            command,
            structure: None,
            verdicts: Map::new(),
            witnesses: Vec::new(),
            details: Value::Null,
            timing: Timing { elapsed_ms: 0.0 },
            exit_code: 0,
            error: None,
        }
    }

    pub fn verdict(&mut self, name: impl Into<String>, value: bool) {
        self.verdicts.insert(name.into(), Value::Bool(value));
    }

    pub fn witness(
        &mut self,
        check: impl Into<String>,
        text: impl Into<String>,
        data: impl Serialize,
    ) {
        self.witnesses.push(Witness {
            check: check.into(),
            text: text.into(),
            data: serde_json::to_value(data).unwrap_or(Value::Null),
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Human-readable rendering: the same verdicts as the JSON, one per line,
    /// then the witnesses and the command's own notes.
    pub fn to_text(&self, notes: &str) -> String {
        let mut out = String::new();
        if let Some(s) = &self.structure {
            let _ = writeln!(
                out,
                "structure {} (n = {}, sha256 {})",
                s.name, s.n, s.digest
            );
        }
        out.push_str(notes);
        for (k, v) in &self.verdicts {
            let _ = writeln!(out, "verdict {k} {v}");
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "witness {}: {}", w.check, w.text);
        }
        let _ = writeln!(
            out,
            "exit {} ({:.1} ms)",
            self.exit_code, self.timing.elapsed_ms
        );
        out
    }
}
