//! Report documents rendered either as aligned text or JSON. Every field
//! records the library operation that produced it.

use std::fmt::Write as _;

use entangle_core::Complex64;
use serde::Serialize;

use crate::statefile::format_amplitude;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Number(f64),
    Integer(i64),
    Complex { re: f64, im: f64 },
    Text(String),
    Flag(bool),
    Absent,
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Number(x) => format!("{x}"),
            Value::Integer(k) => k.to_string(),
            Value::Complex { re, im } => format_amplitude(Complex64::new(*re, *im)),
            Value::Text(s) => s.clone(),
            Value::Flag(b) => b.to_string(),
            Value::Absent => "-".into(),
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Number(x)
    }
}

impl From<usize> for Value {
    fn from(k: usize) -> Self {
        Value::Integer(k as i64)
    }
}

impl From<Complex64> for Value {
    fn from(z: Complex64) -> Self {
        Value::Complex { re: z.re, im: z.im }
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Flag(b)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::Absent, Into::into)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Field {
    pub name: String,
    pub value: Value,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Section {
    pub title: String,
    pub fields: Vec<Field>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            fields: Vec::new(),
        }
    }

    pub fn field(mut self, name: impl Into<String>, value: impl Into<Value>, source: &str) -> Self {
        self.push(name, value, source);
        self
    }

    pub fn push(&mut self, name: impl Into<String>, value: impl Into<Value>, source: &str) {
        self.fields.push(Field {
            name: name.into(),
            value: value.into(),
            source: source.to_string(),
        });
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.fields
            .iter()
            .find(|f| f.name == name)
            .map(|f| &f.value)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            sections: Vec::new(),
        }
    }

    pub fn section(&self, title: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.title == title)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, section) in self.sections.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "[{}]", section.title);
            let rendered: Vec<String> = section.fields.iter().map(|f| f.value.render()).collect();
            let name_w = section
                .fields
                .iter()
                .map(|f| f.name.len())
                .max()
                .unwrap_or(0);
            let value_w = rendered.iter().map(String::len).max().unwrap_or(0);
            for (field, value) in section.fields.iter().zip(&rendered) {
                let _ = writeln!(
                    out,
                    "  {:<name_w$}  {:<value_w$}  ({})",
                    field.name, value, field.source
                );
            }
        }
        out
    }
}
