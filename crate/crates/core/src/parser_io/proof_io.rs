use serde_json::{json, Value};

use super::model_io::{array, field, schema, LoadError};
use super::{parse_formula_with, print_formula_with, Symbols};
use crate::logic_systems::{Justification, Logic, ProofLine, ProofScript, RuleId, SchemaId};

fn label(v: &Value, path: &str) -> Result<String, LoadError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => schema(path, "expected a schema or rule id"),
    }
}

/// Loads a proof script. Formulas are parsed under the language of the
/// declared logic, sharing one symbol table.
pub fn load_proof(text: &str) -> Result<ProofScript, LoadError> {
    let doc: Value = serde_json::from_str(text)?;
    let Some(top) = doc.as_object() else { return schema("", "expected an object") };
    let logic: Logic = match field(top, "logic", "")?.as_str() {
        Some(s) => s.parse().map_err(|message| LoadError::Schema { path: "logic".into(), message })?,
        None => return schema("logic", "expected a string"),
    };
    let raw = array(field(top, "lines", "")?, "lines")?;
    let mut symbols = Symbols::new();
    for l in raw {
        if let Some(s) = l.get("formula").and_then(Value::as_str) {
            symbols.reserve_literals(s);
        }
    }
    let mut lines = Vec::with_capacity(raw.len());
    for (i, l) in raw.iter().enumerate() {
        let path = format!("lines[{i}]");
        let Some(o) = l.as_object() else { return schema(path, "expected an object") };
        let fpath = format!("{path}.formula");
        let Some(text) = field(o, "formula", &path)?.as_str() else { return schema(fpath, "expected a string") };
        let formula = parse_formula_with(text, logic.language(), &mut symbols)
            .map_err(|source| LoadError::Formula { path: fpath, source })?;
        let jpath = format!("{path}.just");
        let Some(j) = field(o, "just", &path)?.as_object() else { return schema(jpath, "expected an object") };
        let just = match (j.get("axiom"), j.get("rule")) {
            (Some(a), None) => {
                let apath = format!("{jpath}.axiom");
                let id: SchemaId = label(a, &apath)?.parse().map_err(|message| LoadError::Schema { path: apath, message })?;
                Justification::Axiom(id)
            }
            (None, Some(r)) => {
                let rpath = format!("{jpath}.rule");
                let id: RuleId = label(r, &rpath)?.parse().map_err(|message| LoadError::Schema { path: rpath, message })?;
                let ppath = format!("{jpath}.premises");
                let mut premises = Vec::new();
                for (k, p) in array(field(j, "premises", &jpath)?, &ppath)?.iter().enumerate() {
                    let kpath = format!("{ppath}[{k}]");
                    match p.as_u64() {
                        Some(n) if n >= 1 && (n as usize) <= i => premises.push(n as usize),
                        Some(n) => return schema(kpath, format!("line {} cites line {n}, which is not an earlier line", i + 1)),
                        None => return schema(kpath, "expected a line number"),
                    }
                }
                Justification::Rule(id, premises)
            }
            _ => return schema(jpath, "expected exactly one of `axiom` or `rule`"),
        };
        lines.push(ProofLine { formula, just });
    }
    Ok(ProofScript { logic, lines, symbols })
}

/// JSON document for `p`, in the format read by [`load_proof`].
pub fn proof_to_json(p: &ProofScript) -> Value {
    let lines: Vec<Value> = p
        .lines
        .iter()
        .map(|l| {
            let just = match &l.just {
                Justification::Axiom(a) => json!({"axiom": a.label()}),
                Justification::Rule(r, ps) => json!({"rule": r.label(), "premises": ps}),
            };
            json!({"formula": print_formula_with(&l.formula, &p.symbols), "just": just})
        })
        .collect();
    json!({"logic": p.logic.name(), "lines": lines})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_proof_is_valid() {
        let p = load_proof(r#"{"logic":"QC2","lines":[]}"#).unwrap();
        assert!(p.lines.is_empty());
        assert!(crate::logic_systems::verify_proof(&p).is_accepted());
    }

    #[test]
    fn premise_must_be_earlier() {
        let doc = r#"{"logic":"QC2","lines":[
            {"formula":"bot -> F(x)","just":{"axiom":"18"}},
            {"formula":"(G(x) > bot) -> (G(x) > F(x))","just":{"rule":"26","premises":[3]}}]}"#;
        match load_proof(doc) {
            Err(LoadError::Schema { path, .. }) => assert_eq!(path, "lines[1].just.premises[0]"),
            other => panic!("{other:?}"),
        }
        let ok = doc.replace("[3]", "[1]");
        let p = load_proof(&ok).unwrap();
        assert!(crate::logic_systems::verify_proof(&p).is_accepted());
        let again = load_proof(&proof_to_json(&p).to_string()).unwrap();
        assert_eq!(again.lines.len(), 2);
    }

    #[test]
    fn language_follows_logic() {
        let doc = r#"{"logic":"QC2","lines":[{"formula":"E(x)","just":{"axiom":18}}]}"#;
        assert!(matches!(load_proof(doc), Err(LoadError::Formula { .. })));
        let doc = r#"{"logic":"QC2vE","lines":[{"formula":"E(x) -> E(x)","just":{"axiom":18}}]}"#;
        assert!(load_proof(doc).is_ok());
    }
}
