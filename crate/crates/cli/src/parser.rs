//! Line-oriented declarative input format.
//!
//! ```text
//! # comment
//! ring R = GF(32003)[x,y,z] weights [1,1,1] mod [x*y, x*z]
//! ring S = QQ[u] mod []
//! module M over R = coker [[y]]
//! module N over R = coker [[x,0],[0,y]] shifts [0,1]
//! ideal I over R = [y, z]
//! ```
//!
//! `weights`, `mod`, and `shifts` clauses are optional. Matrix rows are
//! bracketed lists of polynomial expressions using `+`, `-`, `*`, `^`.

use std::collections::BTreeMap;
use syzygy_core::error::AlgebraError;
use syzygy_core::fpmod::FPModule;
use syzygy_core::freemod::{FreeModule, ModuleMap};
use syzygy_core::parse::parse_polynomial;
use syzygy_core::poly::Polynomial;
use syzygy_core::ring::{AmbientRing, QuotientRing};
use syzygy_core::scalar::FieldSpec;

#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parsed environment of named rings, modules, and ideals.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub rings: BTreeMap<String, QuotientRing>,
    pub modules: BTreeMap<String, (String, FPModule)>,
    pub ideals: BTreeMap<String, (String, Vec<Polynomial>)>,
}

impl Document {
    pub fn ring(&self, name: &str) -> Result<&QuotientRing, ParseError> {
        self.rings.get(name).ok_or_else(|| ParseError {
            line: 0,
            message: format!("unknown ring '{name}'"),
        })
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn algebra(line: usize, e: AlgebraError) -> ParseError {
    err(line, e.to_string())
}

/// Split a bracketed list `[a, b, c]` into the item strings, respecting
/// nested brackets and parentheses.
fn split_bracketed(s: &str, line: usize) -> Result<Vec<String>, ParseError> {
    let s = s.trim();
    if !s.starts_with('[') || !s.ends_with(']') {
        return Err(err(line, format!("expected a bracketed list, found '{s}'")));
    }
    let inner = &s[1..s.len() - 1];
    let mut items = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in inner.chars() {
        match c {
            '[' | '(' => {
                depth += 1;
                cur.push(c);
            }
            ']' | ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(err(line, "unbalanced brackets"));
                }
                cur.push(c);
            }
            ',' if depth == 0 => {
                items.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if depth != 0 {
        return Err(err(line, "unbalanced brackets"));
    }
    if !cur.trim().is_empty() {
        items.push(cur.trim().to_string());
    }
    Ok(items)
}

fn parse_field(spec: &str, line: usize) -> Result<FieldSpec, ParseError> {
    let spec = spec.trim();
    if spec == "QQ" {
        return Ok(FieldSpec::Rational);
    }
    if let Some(rest) = spec.strip_prefix("GF(") {
        if let Some(num) = rest.strip_suffix(')') {
            let p: u64 = num
                .trim()
                .parse()
                .map_err(|_| err(line, format!("bad field characteristic '{num}'")))?;
            return FieldSpec::prime_field(p)
                .ok_or_else(|| err(line, format!("{p} is not prime")));
        }
    }
    Err(err(line, format!("unknown field '{spec}' (use GF(p) or QQ)")))
}

fn parse_ring_line(rhs: &str, line: usize) -> Result<QuotientRing, ParseError> {
    // GF(32003)[x,y,z] weights [1,1,1] mod [x*y, x*z]
    let bracket = rhs
        .find('[')
        .ok_or_else(|| err(line, "ring declaration needs a variable list"))?;
    let field = parse_field(&rhs[..bracket], line)?;
    let close = rhs[bracket..]
        .find(']')
        .map(|i| bracket + i)
        .ok_or_else(|| err(line, "unterminated variable list"))?;
    let vars: Vec<String> = rhs[bracket + 1..close]
        .split(',')
        .map(|v| v.trim().to_string())
        .filter(|v| !v.is_empty())
        .collect();
    if vars.is_empty() {
        return Err(err(line, "ring needs at least one variable"));
    }
    let mut rest = rhs[close + 1..].trim();
    let mut weights: Vec<u32> = vec![1; vars.len()];
    if let Some(r) = rest.strip_prefix("weights") {
        let r = r.trim_start();
        let endpos = r
            .find(']')
            .ok_or_else(|| err(line, "unterminated weights list"))?;
        let items = split_bracketed(&r[..=endpos], line)?;
        weights = items
            .iter()
            .map(|w| {
                w.parse::<u32>()
                    .map_err(|_| err(line, format!("bad weight '{w}'")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if weights.len() != vars.len() {
            return Err(err(line, "one weight per variable required"));
        }
        rest = r[endpos + 1..].trim();
    }
    let ambient = AmbientRing::new(vars, weights, field).map_err(|e| algebra(line, e))?;
    let mut gens: Vec<Polynomial> = Vec::new();
    if let Some(r) = rest.strip_prefix("mod") {
        let items = split_bracketed(r.trim(), line)?;
        for item in items {
            gens.push(parse_polynomial(&ambient, &item).map_err(|e| algebra(line, e))?);
        }
        rest = "";
    }
    if !rest.is_empty() {
        return Err(err(line, format!("trailing input '{rest}'")));
    }
    QuotientRing::new(&ambient, gens).map_err(|e| algebra(line, e))
}

fn parse_matrix(
    text: &str,
    ring: &QuotientRing,
    line: usize,
) -> Result<Vec<Vec<Polynomial>>, ParseError> {
    let rows = split_bracketed(text, line)?;
    let mut matrix = Vec::new();
    for row in rows {
        let entries = split_bracketed(&row, line)?;
        let mut prow = Vec::new();
        for e in entries {
            prow.push(parse_polynomial(ring.ambient(), &e).map_err(|er| algebra(line, er))?);
        }
        matrix.push(prow);
    }
    let width = matrix.first().map(|r| r.len()).unwrap_or(0);
    if matrix.iter().any(|r| r.len() != width) {
        return Err(err(line, "ragged matrix rows"));
    }
    Ok(matrix)
}

/// Infer source shifts of a presentation from homogeneous entries, given
/// the target shifts.
fn infer_module(
    matrix: Vec<Vec<Polynomial>>,
    target_shifts: Vec<i64>,
    ring: &QuotientRing,
    line: usize,
) -> Result<FPModule, ParseError> {
    let rows = matrix.len();
    if rows != target_shifts.len() {
        return Err(err(
            line,
            format!("{} shifts for a {}-row matrix", target_shifts.len(), rows),
        ));
    }
    let cols = matrix.first().map(|r| r.len()).unwrap_or(0);
    let mut src_shifts = Vec::with_capacity(cols);
    for j in 0..cols {
        let mut degree: Option<i64> = None;
        for i in 0..rows {
            let e = ring.reduce(&matrix[i][j]);
            if e.is_zero() {
                continue;
            }
            let d = e
                .homogeneous_degree()
                .ok_or_else(|| err(line, format!("entry ({i},{j}) is not homogeneous")))?
                as i64
                + target_shifts[i];
            match degree {
                None => degree = Some(d),
                Some(dd) if dd == d => {}
                Some(dd) => {
                    return Err(err(
                        line,
                        format!("column {j} mixes degrees {dd} and {d}"),
                    ));
                }
            }
        }
        src_shifts.push(degree.unwrap_or(0));
    }
    let reduced: Vec<Vec<Polynomial>> = matrix
        .iter()
        .map(|r| r.iter().map(|e| ring.reduce(e)).collect())
        .collect();
    let map = ModuleMap::new(
        FreeModule::new(ring, src_shifts),
        FreeModule::new(ring, target_shifts),
        reduced,
    )
    .map_err(|e| algebra(line, e))?;
    Ok(FPModule::from_presentation(map))
}

/// Parse a whole document.
pub fn parse_document(input: &str) -> Result<Document, ParseError> {
    let mut doc = Document::default();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("ring ") {
            let (name, rhs) = rest
                .split_once('=')
                .ok_or_else(|| err(line_no, "ring declaration needs '='"))?;
            let name = name.trim().to_string();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(err(line_no, format!("bad ring name '{name}'")));
            }
            let ring = parse_ring_line(rhs.trim(), line_no)?;
            doc.rings.insert(name, ring);
        } else if let Some(rest) = line.strip_prefix("module ") {
            let (head, rhs) = rest
                .split_once('=')
                .ok_or_else(|| err(line_no, "module declaration needs '='"))?;
            let head = head.trim();
            let (name, ring_name) = head
                .split_once(" over ")
                .ok_or_else(|| err(line_no, "module declaration needs 'over <ring>'"))?;
            let name = name.trim().to_string();
            let ring_name = ring_name.trim().to_string();
            let ring = doc
                .rings
                .get(&ring_name)
                .ok_or_else(|| err(line_no, format!("unknown ring '{ring_name}'")))?
                .clone();
            let rhs = rhs.trim();
            let body = rhs
                .strip_prefix("coker")
                .ok_or_else(|| err(line_no, "module body must be 'coker [[..],..]'"))?
                .trim();
            // optional trailing shifts clause
            let (matrix_text, shifts_text) = match body.rfind("shifts") {
                Some(pos) if body[..pos].trim_end().ends_with(']') => {
                    (body[..pos].trim(), Some(body[pos + 6..].trim()))
                }
                _ => (body, None),
            };
            let matrix = parse_matrix(matrix_text, &ring, line_no)?;
            let rows = matrix.len();
            let shifts = match shifts_text {
                Some(st) => split_bracketed(st, line_no)?
                    .iter()
                    .map(|s| {
                        s.parse::<i64>()
                            .map_err(|_| err(line_no, format!("bad shift '{s}'")))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
                None => vec![0; rows],
            };
            let module = infer_module(matrix, shifts, &ring, line_no)?;
            doc.modules.insert(name, (ring_name, module));
        } else if let Some(rest) = line.strip_prefix("ideal ") {
            let (head, rhs) = rest
                .split_once('=')
                .ok_or_else(|| err(line_no, "ideal declaration needs '='"))?;
            let head = head.trim();
            let (name, ring_name) = head
                .split_once(" over ")
                .ok_or_else(|| err(line_no, "ideal declaration needs 'over <ring>'"))?;
            let name = name.trim().to_string();
            let ring_name = ring_name.trim().to_string();
            let ring = doc
                .rings
                .get(&ring_name)
                .ok_or_else(|| err(line_no, format!("unknown ring '{ring_name}'")))?
                .clone();
            let items = split_bracketed(rhs.trim(), line_no)?;
            let mut gens = Vec::new();
            for item in items {
                let p = parse_polynomial(ring.ambient(), &item).map_err(|e| algebra(line_no, e))?;
                if !p.is_homogeneous() {
                    return Err(err(line_no, format!("ideal generator '{item}' inhomogeneous")));
                }
                gens.push(p);
            }
            doc.ideals.insert(name, (ring_name, gens));
        } else {
            return Err(err(
                line_no,
                format!("unrecognized declaration '{line}' (expected ring/module/ideal/comment)"),
            ));
        }
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ring_module_ideal() {
        let doc = parse_document(
            "# fixture\n\
             ring R = GF(32003)[x,y,z] weights [1,1,1] mod [x*y, x*z]\n\
             module M over R = coker [[y]]\n\
             ideal I over R = [y, z]\n",
        )
        .unwrap();
        assert_eq!(doc.rings.len(), 1);
        let r = doc.ring("R").unwrap();
        assert_eq!(r.reduced_gb().len(), 2);
        let (ring_name, m) = &doc.modules["M"];
        assert_eq!(ring_name, "R");
        assert_eq!(m.generator_count(), 1);
        assert_eq!(doc.ideals["I"].1.len(), 2);
    }

    #[test]
    fn optional_clauses() {
        let doc = parse_document(
            "ring S = QQ[u]\n\
             module F over S = coker [[0]]\n",
        )
        .unwrap();
        assert!(doc.ring("S").unwrap().reduced_gb().is_empty());
    }

    #[test]
    fn multi_row_matrix_with_shifts() {
        let doc = parse_document(
            "ring R = GF(32003)[x,y] mod [x*y]\n\
             module D over R = coker [[y,0],[0,x]] shifts [1,1]\n",
        )
        .unwrap();
        let (_, d) = &doc.modules["D"];
        assert_eq!(d.generator_count(), 2);
        assert_eq!(d.generator_degrees(), &[1, 1]);
        assert_eq!(d.presentation().source().shifts(), &[2, 2]);
    }

    #[test]
    fn errors_are_located() {
        let e = parse_document("ring R = GF(32003)[x]\nmodule M over Q = coker [[x]]\n")
            .unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_document("ring R = GF(4)[x]\n").is_err());
        assert!(parse_document("bogus line\n").is_err());
        assert!(parse_document("ring R = GF(32003)[x] mod [x + x^2]\n").is_err());
    }

    #[test]
    fn inhomogeneous_column_rejected() {
        let e = parse_document(
            "ring R = GF(32003)[x,y] mod []\nmodule M over R = coker [[x],[x*y]]\n",
        )
        .unwrap_err();
        assert!(e.message.contains("mixes degrees"));
    }
}
