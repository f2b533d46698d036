//! Line-oriented diagram text format.
//!
//! ```text
//! # comment (whole lines only)
//! source: tau+ tau+        (optional top boundary)
//! cup:%w id:tau+           (one slice per line, applied top to bottom)
//! ```
//!
//! Tokens, where a color is a label name or an Ω variable `%name`:
//!
//! | token                  | generator                         |
//! |------------------------|-----------------------------------|
//! | `id:a+`, `id:a-`       | identity strand, orientation      |
//! | `x:over`, `x:under`    | braiding / inverse braiding       |
//! | `cup:a`, `cupr:a`      | `coev: 1 -> a a*`, `coev': 1 -> a* a` |
//! | `cap:a`, `capr:a`      | `ev: a* a -> 1`, `ev': a a* -> 1` |
//! | `merge:a,b>c#0`        | vertex `a b -> c`, channel 0      |
//! | `split:c>a,b#0`        | vertex `c -> a b`, channel 0      |
//! | `twist:a+`, `twist:a-` | twist and inverse twist on `a`    |
//! | `coupon:name`          | a registered coupon               |

use std::fmt::Write;

use crate::fusion::CategorySpec;

use super::{Color, Diagram, DiagramError, Generator, Orient};

fn color(spec: &CategorySpec, s: &str, line: usize) -> Result<Color, DiagramError> {
    if let Some(v) = s.strip_prefix('%') {
        if v.is_empty() {
            return Err(DiagramError::Parse { line, detail: "empty Ω variable".into() });
        }
        return Ok(Color::Omega(v.to_string()));
    }
    spec.label_index(s)
        .map(Color::Label)
        .ok_or_else(|| DiagramError::Parse { line, detail: format!("unknown label {s:?}") })
}

fn signed(s: &str, line: usize) -> Result<(&str, bool), DiagramError> {
    if let Some(r) = s.strip_suffix('+') {
        Ok((r, true))
    } else if let Some(r) = s.strip_suffix('-') {
        Ok((r, false))
    } else {
        Err(DiagramError::Parse { line, detail: format!("{s:?} needs a trailing + or -") })
    }
}

fn channel(s: &str, line: usize) -> Result<(&str, usize), DiagramError> {
    match s.split_once('#') {
        None => Ok((s, 0)),
        Some((body, mu)) => {
            let mu = mu.parse().map_err(|_| DiagramError::Parse { line, detail: format!("bad channel index {mu:?}") })?;
            Ok((body, mu))
        }
    }
}

fn pair(s: &str, line: usize) -> Result<(&str, &str), DiagramError> {
    s.split_once(',').ok_or_else(|| DiagramError::Parse { line, detail: format!("expected a,b in {s:?}") })
}

fn token(spec: &CategorySpec, tok: &str, line: usize) -> Result<Generator, DiagramError> {
    let (kind, arg) =
        tok.split_once(':').ok_or_else(|| DiagramError::Parse { line, detail: format!("token {tok:?} lacks ':'") })?;
    let orient = |plus: bool| if plus { Orient::Plus } else { Orient::Minus };
    Ok(match kind {
        "id" => {
            let (c, plus) = signed(arg, line)?;
            Generator::Id(color(spec, c, line)?, orient(plus))
        }
        "x" => match arg {
            "over" => Generator::Cross { over: true },
            "under" => Generator::Cross { over: false },
            _ => return Err(DiagramError::Parse { line, detail: format!("crossing must be over or under, got {arg:?}") }),
        },
        "cup" => Generator::Cup(color(spec, arg, line)?),
        "cupr" => Generator::CupRight(color(spec, arg, line)?),
        "cap" => Generator::Cap(color(spec, arg, line)?),
        "capr" => Generator::CapRight(color(spec, arg, line)?),
        "merge" => {
            let (body, mu) = channel(arg, line)?;
            let (ab, c) = body
                .split_once('>')
                .ok_or_else(|| DiagramError::Parse { line, detail: format!("expected a,b>c in {arg:?}") })?;
            let (a, b) = pair(ab, line)?;
            Generator::Merge { a: color(spec, a, line)?, b: color(spec, b, line)?, c: color(spec, c, line)?, mu }
        }
        "split" => {
            let (body, mu) = channel(arg, line)?;
            let (c, ab) = body
                .split_once('>')
                .ok_or_else(|| DiagramError::Parse { line, detail: format!("expected c>a,b in {arg:?}") })?;
            let (a, b) = pair(ab, line)?;
            Generator::Split { c: color(spec, c, line)?, a: color(spec, a, line)?, b: color(spec, b, line)?, mu }
        }
        "twist" => {
            let (c, plus) = signed(arg, line)?;
            Generator::Twist { color: color(spec, c, line)?, inverse: !plus }
        }
        "coupon" => Generator::Coupon(arg.to_string()),
        _ => return Err(DiagramError::Parse { line, detail: format!("unknown generator {kind:?}") }),
    })
}

/// Parses the text format. Coupons are attached afterwards with
/// [`Diagram::add_coupon`].
pub fn parse_diagram(spec: &CategorySpec, text: &str) -> Result<Diagram, DiagramError> {
    let mut d = Diagram::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        // '#' also marks channel indices, so comments are whole lines only.
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if let Some(rest) = content.strip_prefix("source:") {
            let mut src = Vec::new();
            for t in rest.split_whitespace() {
                let (c, plus) = signed(t, line)?;
                src.push((color(spec, c, line)?, if plus { Orient::Plus } else { Orient::Minus }));
            }
            d.source = Some(src);
            continue;
        }
        let slice = content.split_whitespace().map(|t| token(spec, t, line)).collect::<Result<Vec<_>, _>>()?;
        d.slices.push(slice);
    }
    Ok(d)
}

fn color_text(spec: &CategorySpec, c: &Color) -> String {
    match c {
        Color::Label(l) => spec.label_name(*l).to_string(),
        Color::Omega(v) => format!("%{v}"),
    }
}

/// Renders a diagram in the text format.
pub fn diagram_text(spec: &CategorySpec, d: &Diagram) -> String {
    let mut out = String::new();
    let sign = |o: &Orient| if *o == Orient::Plus { '+' } else { '-' };
    if let Some(src) = &d.source {
        let toks: Vec<String> = src.iter().map(|(c, o)| format!("{}{}", color_text(spec, c), sign(o))).collect();
        let _ = writeln!(out, "source: {}", toks.join(" "));
    }
    for slice in &d.slices {
        let toks: Vec<String> = slice
            .iter()
            .map(|g| match g {
                Generator::Id(c, o) => format!("id:{}{}", color_text(spec, c), sign(o)),
                Generator::Cross { over } => format!("x:{}", if *over { "over" } else { "under" }),
                Generator::Cup(c) => format!("cup:{}", color_text(spec, c)),
                Generator::CupRight(c) => format!("cupr:{}", color_text(spec, c)),
                Generator::Cap(c) => format!("cap:{}", color_text(spec, c)),
                Generator::CapRight(c) => format!("capr:{}", color_text(spec, c)),
                Generator::Merge { a, b, c, mu } => {
                    format!("merge:{},{}>{}#{mu}", color_text(spec, a), color_text(spec, b), color_text(spec, c))
                }
                Generator::Split { c, a, b, mu } => {
                    format!("split:{}>{},{}#{mu}", color_text(spec, c), color_text(spec, a), color_text(spec, b))
                }
                Generator::Twist { color, inverse } => {
                    format!("twist:{}{}", color_text(spec, color), if *inverse { '-' } else { '+' })
                }
                Generator::Coupon(n) => format!("coupon:{n}"),
            })
            .collect();
        let _ = writeln!(out, "{}", toks.join(" "));
    }
    out
}
