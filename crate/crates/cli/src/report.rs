//! Report assembly and rendering in the three output formats.

use std::fmt::Write as _;

use rrclosure::ass::PrimeSet;
use rrclosure::{ModuleElement, MonomialSubmodule};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Default)]
pub struct Flags {
    pub increasing: Option<bool>,
    pub stabilization_candidate: Option<u32>,
    pub certified: Option<bool>,
}

#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub instance: Option<String>,
    pub params: Map<String, Value>,
    pub results: Value,
    pub flags: Flags,
    /// Command-specific top-level fields.
    pub extra: Map<String, Value>,
    pub text: Vec<String>,
    /// Header row first.
    pub csv: Vec<Vec<String>>,
    /// Set when the command found a property failure or mismatch.
    pub failure: Option<String>,
}

impl Report {
    pub fn new(command: &'static str, instance: Option<String>) -> Self {
        Report {
            command,
            instance,
            params: Map::new(),
            results: Value::Array(Vec::new()),
            flags: Flags::default(),
            extra: Map::new(),
            text: Vec::new(),
            csv: Vec::new(),
            failure: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    pub fn extra(&mut self, key: &str, value: impl Into<Value>) {
        self.extra.insert(key.to_string(), value.into());
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn fail(&mut self, reason: impl Into<String>) {
        if self.failure.is_none() {
            self.failure = Some(reason.into());
        }
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert(
            "instance".into(),
            self.instance.clone().map_or(Value::Null, Value::String),
        );
        out.insert("command".into(), json!(self.command));
        out.insert("params".into(), Value::Object(self.params.clone()));
        out.insert("results".into(), self.results.clone());
        out.insert(
            "flags".into(),
            json!({
                "increasing": self.flags.increasing,
                "stabilization_candidate": self.flags.stabilization_candidate,
                "certified": self.flags.certified,
            }),
        );
        for (k, v) in &self.extra {
            out.insert(k.clone(), v.clone());
        }
        out.insert("ok".into(), json!(self.failure.is_none()));
        if let Some(f) = &self.failure {
            out.insert("failure".into(), json!(f));
        }
        Value::Object(out)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = String::new();
                for row in &self.csv {
                    let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                    writeln!(s, "{}", cells.join(",")).unwrap();
                }
                s
            }
            Format::Text => {
                let mut s = String::new();
                for l in &self.text {
                    writeln!(s, "{l}").unwrap();
                }
                let f = &self.flags;
                if let Some(b) = f.increasing {
                    writeln!(s, "increasing: {b}").unwrap();
                }
                if self.flags.increasing.is_some() || f.stabilization_candidate.is_some() {
                    let c = f.stabilization_candidate.map_or("none".to_string(), |n| n.to_string());
                    writeln!(s, "stabilization candidate: {c}").unwrap();
                }
                if let Some(b) = f.certified {
                    writeln!(s, "certified: {b}").unwrap();
                }
                match &self.failure {
                    Some(r) => writeln!(s, "FAIL: {r}").unwrap(),
                    None => writeln!(s, "PASS").unwrap(),
                }
                s
            }
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// A prime set as a list of sorted variable-name lists.
pub fn primes_json(set: &PrimeSet, names: &[String]) -> Value {
    Value::Array(set.iter().map(|p| json!(p.var_names(names))).collect())
}

pub fn primes_text(set: &PrimeSet, names: &[String]) -> String {
    let parts: Vec<String> = set
        .iter()
        .map(|p| {
            let v = p.var_names(names);
            if v.is_empty() {
                "(0)".to_string()
            } else {
                format!("({})", v.join(","))
            }
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn element_text(e: &ModuleElement, rank: usize, names: &[String]) -> String {
    let m = e.mono.display_with(names).to_string();
    if rank == 1 {
        m
    } else if e.mono.is_one() {
        format!("e{}", e.coord + 1)
    } else {
        format!("e{}*{}", e.coord + 1, m)
    }
}

pub fn generators(sub: &MonomialSubmodule, names: &[String]) -> Vec<String> {
    sub.elements().map(|e| element_text(&e, sub.rank(), names)).collect()
}
