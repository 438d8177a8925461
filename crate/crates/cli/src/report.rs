//! Report assembly in human text and machine-readable JSON.

use std::str::FromStr;

use gset_fourier::{Complex64, FiniteAbelianGroup};
use serde_json::{Map, Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

/// Exit status attached to a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Computed,
    Inconsistent,
}

/// Text lines plus a JSON object with sorted keys.
#[derive(Debug)]
pub struct Report {
    pub lines: Vec<String>,
    pub fields: Map<String, Value>,
    pub status: Status,
}

impl Report {
    /// A report carrying the always-present keys, null until filled.
    pub fn new(command: &str, tolerance: f64) -> Report {
        let mut fields = Map::new();
        fields.insert("command".into(), Value::String(command.into()));
        for key in ["verdict", "energies", "derivative_sums", "distance"] {
            fields.insert(key.into(), Value::Null);
        }
        fields.insert("tolerance".into(), real(tolerance));
        Report {
            lines: Vec::new(),
            fields,
            status: Status::Computed,
        }
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.fields.insert(key.into(), value);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = self.lines.join("\n");
                out.push('\n');
                out
            }
            Format::Machine => {
                let mut out = serde_json::to_string_pretty(&Value::Object(self.fields.clone()))
                    .expect("report serializes");
                out.push('\n');
                out
            }
        }
    }
}

/// A real number with 17 significant digits.
pub fn real(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let x = if x == 0.0 { 0.0 } else { x };
    Value::Number(Number::from_str(&format!("{x:.16e}")).expect("formatted float parses"))
}

/// A complex number as an `[re, im]` pair.
pub fn complex(z: Complex64) -> Value {
    Value::Array(vec![real(z.re), real(z.im)])
}

pub fn reals(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| real(x)).collect())
}

pub fn complexes(zs: &[Complex64]) -> Value {
    Value::Array(zs.iter().map(|&z| complex(z)).collect())
}

pub fn integers<T: Copy + Into<u64>>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|&x| Value::from(x.into())).collect())
}

pub fn usizes(xs: &[usize]) -> Value {
    Value::Array(xs.iter().map(|&x| Value::from(x as u64)).collect())
}

/// Residue tuple of a group element, as JSON.
pub fn element(g: &FiniteAbelianGroup, a: usize) -> Value {
    usizes(&g.residues(a))
}

/// Residue tuple of a group element, as text: `(1,0)`.
pub fn element_name(g: &FiniteAbelianGroup, a: usize) -> String {
    let r: Vec<String> = g.residues(a).iter().map(usize::to_string).collect();
    format!("({})", r.join(","))
}

pub fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

pub fn fixed(x: f64) -> String {
    let x = if x.abs() < 5e-10 { 0.0 } else { x };
    format!("{x:.9}")
}

pub fn complex_text(z: Complex64) -> String {
    let re = fixed(z.re);
    let im = fixed(z.im);
    if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}
