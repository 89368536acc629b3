//! Output records: JSON lines or plain text.

use std::io::Write;

use serde_json::{Map, Value};

/// Replace every JSON number by its decimal string, recursively.
pub fn stringify_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(a) => Value::Array(a.into_iter().map(stringify_numbers).collect()),
        Value::Object(o) => Value::Object(
            o.into_iter()
                .map(|(k, v)| (k, stringify_numbers(v)))
                .collect::<Map<String, Value>>(),
        ),
        other => other,
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

/// One line of `key=value` pairs, led by the record type.
pub fn render_text(v: &Value) -> String {
    match v {
        Value::Object(o) => {
            let mut parts = Vec::new();
            if let Some(t) = o.get("type") {
                parts.push(format!("[{}]", text_value(t)));
            }
            for (k, val) in o.iter().filter(|(k, _)| k.as_str() != "type") {
                parts.push(format!("{k}={}", text_value(val)));
            }
            parts.join(" ")
        }
        other => text_value(other),
    }
}

pub struct Emitter<'a> {
    out: &'a mut dyn Write,
    json: bool,
}

impl<'a> Emitter<'a> {
    pub fn new(out: &'a mut dyn Write, json: bool) -> Self {
        Emitter { out, json }
    }

    pub fn emit(&mut self, record: Value) -> std::io::Result<()> {
        let record = stringify_numbers(record);
        if self.json {
            writeln!(self.out, "{}", serde_json::to_string(&record).expect("values serialize"))
        } else {
            writeln!(self.out, "{}", render_text(&record))
        }
    }
}
