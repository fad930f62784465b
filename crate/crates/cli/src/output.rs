//! Dual-mode report emitter: line-oriented `key=value` text for
//! scripting, or one JSON object with identical fields under `--json`.
//! Absent values print as `n/a` in text mode and `null` in JSON.

use std::io::Write;

use serde_json::{Map, Value};

/// Writes a chunk to stdout, swallowing broken pipes: when the reader
/// (e.g. `head`) goes away early, stop printing instead of panicking.
pub fn emit(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    let _ = stdout.flush();
}

pub struct Output {
    json: bool,
    lines: Vec<String>,
    object: Map<String, Value>,
}

impl Output {
    pub fn new(json: bool) -> Self {
        Output {
            json,
            lines: Vec::new(),
            object: Map::new(),
        }
    }

    fn push(&mut self, key: &str, text: String, value: Value) {
        self.lines.push(format!("{key}={text}"));
        self.object.insert(key.to_string(), value);
    }

    pub fn str(&mut self, key: &str, value: &str) {
        self.push(key, value.to_string(), Value::String(value.to_string()));
    }

    pub fn uint(&mut self, key: &str, value: u64) {
        self.push(key, value.to_string(), Value::from(value));
    }

    pub fn boolean(&mut self, key: &str, value: bool) {
        self.push(key, value.to_string(), Value::Bool(value));
    }

    pub fn opt_uint(&mut self, key: &str, value: Option<u32>) {
        match value {
            Some(v) => self.uint(key, v as u64),
            None => self.push(key, "n/a".to_string(), Value::Null),
        }
    }

    pub fn uint_list(&mut self, key: &str, values: impl IntoIterator<Item = u32>) {
        let values: Vec<u32> = values.into_iter().collect();
        let text = values
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        self.push(key, text, Value::from(values));
    }

    pub fn bool_list(&mut self, key: &str, values: impl IntoIterator<Item = bool>) {
        let values: Vec<bool> = values.into_iter().collect();
        let text = values
            .iter()
            .map(bool::to_string)
            .collect::<Vec<_>>()
            .join(",");
        self.push(key, text, Value::from(values));
    }

    pub fn finish(self) {
        if self.json {
            let json = serde_json::to_string(&Value::Object(self.object)).expect("report serializes");
            emit(&json);
            emit("\n");
        } else {
            for line in self.lines {
                emit(&line);
                emit("\n");
            }
        }
    }
}
