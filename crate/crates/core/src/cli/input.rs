//! The problem file format:
//!
//! ```text
//! // comments run to the end of the line
//! ring Q [x, y, z];
//! ideal = x*(x + y^2), x*z;
//! ```
//!
//! The field is `Q`, `Fp` (p = 32003) or `Fp:<p>`.

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::parse::parse_polynomial_list;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};
use crate::scalar::CoefficientField;

pub const DEFAULT_PRIME: u64 = 32003;

#[derive(Debug, Clone)]
pub struct Problem {
    pub ring: RingRef,
    pub generators: Vec<Polynomial>,
}

pub fn parse_field(text: &str) -> Result<CoefficientField> {
    match text.trim() {
        "Q" | "QQ" => Ok(CoefficientField::Rationals),
        "Fp" => CoefficientField::prime(DEFAULT_PRIME),
        other => match other.strip_prefix("Fp:").map(str::parse::<u64>) {
            Some(Ok(p)) => CoefficientField::prime(p),
            _ => Err(Error::InvalidRing(format!("unknown field `{other}`"))),
        },
    }
}

pub fn parse_order(text: &str) -> Result<MonomialOrder> {
    MonomialOrder::from_name(text.trim()).ok_or_else(|| Error::InvalidRing(format!("unknown order `{text}`")))
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax { position, message: message.into() }
}

/// Blanks out `//` comments, keeping byte offsets intact.
fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|line| match line.find("//") {
            Some(i) => format!("{}{}", &line[..i], " ".repeat(line.len() - i)),
            None => line.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parses a problem, with optional overrides for the field and order.
pub fn parse_problem(text: &str, field: Option<CoefficientField>, order: Option<MonomialOrder>) -> Result<Problem> {
    let clean = strip_comments(text);
    let mut ring: Option<RingRef> = None;
    let mut generators: Option<Vec<Polynomial>> = None;
    let mut offset = 0;
    for stmt in clean.split(';') {
        let start = offset + (stmt.len() - stmt.trim_start().len());
        offset += stmt.len() + 1;
        let s = stmt.trim();
        if s.is_empty() {
            continue;
        }
        if let Some(rest) = s.strip_prefix("ring") {
            if ring.is_some() {
                return Err(syntax(start, "second `ring` statement"));
            }
            let open = rest.find('[').ok_or_else(|| syntax(start, "expected `[` after the field"))?;
            let close = rest.rfind(']').ok_or_else(|| syntax(start, "expected `]`"))?;
            if !rest[close + 1..].trim().is_empty() {
                return Err(syntax(start + 4 + close + 1, "unexpected text after `]`"));
            }
            let f = match field {
                Some(f) => f,
                None => parse_field(&rest[..open])?,
            };
            let names: Vec<&str> = rest[open + 1..close].split(',').map(str::trim).filter(|n| !n.is_empty()).collect();
            ring = Some(Ring::new(&names, f, order.clone().unwrap_or(MonomialOrder::DegRevLex))?);
        } else if let Some(rest) = s.strip_prefix("ideal") {
            let r = ring.as_ref().ok_or_else(|| syntax(start, "`ideal` before `ring`"))?;
            if generators.is_some() {
                return Err(syntax(start, "second `ideal` statement"));
            }
            let eq = rest.find('=').ok_or_else(|| syntax(start + 5, "expected `=`"))?;
            if !rest[..eq].trim().is_empty() {
                return Err(syntax(start + 5, "expected `=`"));
            }
            let body_start = start + 5 + eq + 1;
            let gens = parse_polynomial_list(&rest[eq + 1..], r).map_err(|e| match e {
                Error::Syntax { position, message } => syntax(body_start + position, message),
                other => other,
            })?;
            generators = Some(gens);
        } else {
            return Err(syntax(start, "expected `ring` or `ideal`"));
        }
    }
    let ring = ring.ok_or_else(|| syntax(0, "missing `ring` statement"))?;
    let generators = generators.ok_or_else(|| syntax(clean.len(), "missing `ideal` statement"))?;
    Ok(Problem { ring, generators })
}

/// Writes a problem back in the file format.
pub fn format_problem(ring: &RingRef, generators: &[Polynomial]) -> String {
    let gens: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
    format!("{ring};\nideal = {};\n", gens.join(", "))
}
