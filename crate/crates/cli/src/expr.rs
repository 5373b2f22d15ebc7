//! Module expressions used in command arguments:
//!
//! ```text
//! M                    a module declared in the input file
//! cyclic(I)            R/I for a declared ideal
//! idealmod(I)          the ideal I as a module
//! maxideal(R)          the maximal ideal of a declared ring
//! residue(R)           the residue field k
//! free(R)              R itself
//! syz(EXPR, i)         the i-th syzygy
//! transpose(EXPR)      the Auslander transpose
//! twist(EXPR, t)       degree shift
//! EXPR ++ EXPR         direct sum
//! ```

use crate::parser::Document;
use syzygy_core::fpmod::FPModule;
use syzygy_core::resolution;

#[derive(Debug, Clone)]
pub struct ExprError(pub String);

impl std::fmt::Display for ExprError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ExprError {}

fn fail<T>(msg: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError(msg.into()))
}

/// Split on a top-level `++`.
fn split_sum(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            '(' | '[' => {
                depth += 1;
                cur.push(c);
            }
            ')' | ']' => {
                depth -= 1;
                cur.push(c);
            }
            '+' if depth == 0 && i + 1 < chars.len() && chars[i + 1] == '+' => {
                parts.push(cur.trim().to_string());
                cur.clear();
                i += 1;
            }
            _ => cur.push(c),
        }
        i += 1;
    }
    if !cur.trim().is_empty() {
        parts.push(cur.trim().to_string());
    }
    parts
}

fn call_args(s: &str) -> Result<Vec<String>, ExprError> {
    let open = s.find('(').ok_or_else(|| ExprError("missing '('".into()))?;
    if !s.ends_with(')') {
        return fail(format!("missing ')' in '{s}'"));
    }
    let inner = &s[open + 1..s.len() - 1];
    let mut args = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in inner.chars() {
        match c {
            '(' | '[' => {
                depth += 1;
                cur.push(c);
            }
            ')' | ']' => {
                depth -= 1;
                cur.push(c);
            }
            ',' if depth == 0 => {
                args.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        args.push(cur.trim().to_string());
    }
    Ok(args)
}

/// Evaluate a module expression against a parsed document.
pub fn eval_module(doc: &Document, expr: &str) -> Result<FPModule, ExprError> {
    let expr = expr.trim();
    let parts = split_sum(expr);
    if parts.len() > 1 {
        let mut acc: Option<FPModule> = None;
        for p in parts {
            let m = eval_module(doc, &p)?;
            acc = Some(match acc {
                None => m,
                Some(a) => a
                    .direct_sum(&m)
                    .map_err(|e| ExprError(e.to_string()))?,
            });
        }
        return Ok(acc.unwrap());
    }
    if let Some(rest) = expr.strip_prefix("syz") {
        let args = call_args(rest)?;
        if args.len() != 2 {
            return fail("syz(EXPR, i) takes two arguments");
        }
        let m = eval_module(doc, &args[0])?;
        let i: usize = args[1]
            .parse()
            .map_err(|_| ExprError(format!("bad syzygy index '{}'", args[1])))?;
        return resolution::syzygy(&m, i).map_err(|e| ExprError(e.to_string()));
    }
    if let Some(rest) = expr.strip_prefix("transpose") {
        let args = call_args(rest)?;
        if args.len() != 1 {
            return fail("transpose(EXPR) takes one argument");
        }
        let m = eval_module(doc, &args[0])?;
        return Ok(m.auslander_transpose());
    }
    if let Some(rest) = expr.strip_prefix("twist") {
        let args = call_args(rest)?;
        if args.len() != 2 {
            return fail("twist(EXPR, t) takes two arguments");
        }
        let m = eval_module(doc, &args[0])?;
        let t: i64 = args[1]
            .parse()
            .map_err(|_| ExprError(format!("bad twist '{}'", args[1])))?;
        return Ok(m.twist(t));
    }
    if let Some(rest) = expr.strip_prefix("cyclic") {
        let args = call_args(rest)?;
        if args.len() != 1 {
            return fail("cyclic(I) takes one ideal name");
        }
        let (ring_name, gens) = doc
            .ideals
            .get(&args[0])
            .ok_or_else(|| ExprError(format!("unknown ideal '{}'", args[0])))?;
        let ring = doc.rings.get(ring_name).unwrap();
        return FPModule::cyclic(ring, gens).map_err(|e| ExprError(e.to_string()));
    }
    if let Some(rest) = expr.strip_prefix("idealmod") {
        let args = call_args(rest)?;
        if args.len() != 1 {
            return fail("idealmod(I) takes one ideal name");
        }
        let (ring_name, gens) = doc
            .ideals
            .get(&args[0])
            .ok_or_else(|| ExprError(format!("unknown ideal '{}'", args[0])))?;
        let ring = doc.rings.get(ring_name).unwrap();
        return FPModule::ideal_module(ring, gens).map_err(|e| ExprError(e.to_string()));
    }
    if let Some(rest) = expr.strip_prefix("maxideal") {
        let args = call_args(rest)?;
        if args.len() != 1 {
            return fail("maxideal(R) takes one ring name");
        }
        let ring = doc
            .rings
            .get(&args[0])
            .ok_or_else(|| ExprError(format!("unknown ring '{}'", args[0])))?;
        return Ok(FPModule::maximal_ideal(ring));
    }
    if let Some(rest) = expr.strip_prefix("residue") {
        let args = call_args(rest)?;
        if args.len() != 1 {
            return fail("residue(R) takes one ring name");
        }
        let ring = doc
            .rings
            .get(&args[0])
            .ok_or_else(|| ExprError(format!("unknown ring '{}'", args[0])))?;
        return Ok(FPModule::residue_field(ring));
    }
    if let Some(rest) = expr.strip_prefix("free") {
        let args = call_args(rest)?;
        if args.len() != 1 {
            return fail("free(R) takes one ring name");
        }
        let ring = doc
            .rings
            .get(&args[0])
            .ok_or_else(|| ExprError(format!("unknown ring '{}'", args[0])))?;
        return Ok(FPModule::free(ring, vec![0]));
    }
    match doc.modules.get(expr) {
        Some((_, m)) => Ok(m.clone()),
        None => fail(format!("unknown module expression '{expr}'")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_document;

    fn doc() -> Document {
        parse_document(
            "ring R = GF(32003)[x,y] mod [x*y]\n\
             module M over R = coker [[x]]\n\
             ideal I over R = [x]\n",
        )
        .unwrap()
    }

    #[test]
    fn evaluates_names_and_calls() {
        let d = doc();
        assert_eq!(eval_module(&d, "M").unwrap().generator_count(), 1);
        assert_eq!(eval_module(&d, "maxideal(R)").unwrap().generator_count(), 2);
        assert_eq!(eval_module(&d, "residue(R)").unwrap().generator_count(), 1);
        let s = eval_module(&d, "syz(M, 2)").unwrap();
        assert_eq!(s.generator_count(), 1);
        let sum = eval_module(&d, "M ++ cyclic(I)").unwrap();
        assert_eq!(sum.generator_count(), 2);
        let t = eval_module(&d, "twist(M, 3)").unwrap();
        assert_eq!(t.generator_degrees(), &[3]);
        assert!(eval_module(&d, "syz(M)").is_err());
        assert!(eval_module(&d, "nonsense(M)").is_err());
    }
}
