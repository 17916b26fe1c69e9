//! Line-oriented key/value reports with an optional JSON rendering.
//! Identical inputs produce byte-identical output.

use serde_json::{json, Map, Value};

pub enum Entry {
    Scalar(String, String),
    Block(String, Vec<String>),
}

#[derive(Default)]
pub struct Report {
    entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Self {
        Report {
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.entries
            .push(Entry::Scalar(key.to_string(), value.to_string()));
    }

    pub fn block(&mut self, key: &str, lines: Vec<String>) {
        self.entries.push(Entry::Block(key.to_string(), lines));
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            match e {
                Entry::Scalar(k, v) => {
                    out.push_str(k);
                    out.push(' ');
                    out.push_str(v);
                    out.push('\n');
                }
                Entry::Block(k, lines) => {
                    for line in lines {
                        out.push_str(k);
                        out.push(' ');
                        out.push_str(line);
                        out.push('\n');
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for e in &self.entries {
            match e {
                Entry::Scalar(k, v) => {
                    map.insert(k.clone(), json!(v));
                }
                Entry::Block(k, lines) => {
                    map.insert(k.clone(), json!(lines));
                }
            }
        }
        Value::Object(map)
    }
}
