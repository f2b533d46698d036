//! Report and error rendering.

use genuscenter::catalog::scalar_to_json;
use genuscenter::exactnum::Cyclotomic;
use serde_json::{json, Value};

/// A finished report: the JSON form, the text form and the verdict.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl Report {
    pub fn print(&self, as_json: bool) {
        if as_json {
            println!("{}", serde_json::to_string_pretty(&self.json).expect("reports serialize"));
        } else {
            print!("{}", self.text);
        }
    }
}

/// A diagnostic. Usage failures exit with 2, computation failures with 1.
#[derive(Debug)]
pub struct Failure {
    pub usage: bool,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    pub fn usage(kind: &'static str, message: impl ToString) -> Self {
        Failure { usage: true, kind, message: message.to_string() }
    }

    pub fn compute(kind: &'static str, message: impl ToString) -> Self {
        Failure { usage: false, kind, message: message.to_string() }
    }

    pub fn code(&self) -> u8 {
        if self.usage {
            2
        } else {
            1
        }
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            let v = json!({ "error": { "kind": self.kind, "message": self.message } });
            println!("{}", serde_json::to_string_pretty(&v).expect("errors serialize"));
        } else {
            eprintln!("error ({}): {}", self.kind, self.message);
        }
    }
}

fn decimal(c: &Cyclotomic, digits: usize) -> String {
    let z = c.to_complex();
    let tiny = 0.5 * 10f64.powi(-(digits as i32));
    let re = if z.re.abs() < tiny { 0.0 } else { z.re };
    if z.im.abs() < tiny {
        format!("{re:.digits$}")
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{re:.digits$}{sign}{:.digits$}i", z.im.abs())
    }
}

/// Exact term list, plus a decimal rendering when requested.
pub fn scalar(c: &Cyclotomic, float: Option<usize>) -> Value {
    let mut v = scalar_to_json(c);
    if let Some(d) = float {
        v["float"] = Value::String(decimal(c, d));
    }
    v
}

pub fn scalar_text(c: &Cyclotomic, float: Option<usize>) -> String {
    match float {
        Some(d) => format!("{c} ≈ {}", decimal(c, d)),
        None => c.to_string(),
    }
}

pub fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}
