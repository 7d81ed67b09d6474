use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Map, Value};

use super::{ParseError, Symbols};
use crate::semantics::{
    tuple_code, Assignment, BitSet, Frame, FrameBase, FrameError, Interpretation, Model, OrderingFrame, PredTable,
    QuasiSelectionFrame, QuasiStrategy, SelectionDefault, SelectionFrame, SelectionTable, WorldSet,
};
use crate::syntax::{Language, Predicate};

/// A rejected model or proof document. `path` locates the offending entry,
/// e.g. `selection[2].out`.
#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("{path}: invariant violated: {message}")]
    Invariant { path: String, message: String },
    #[error("{path}: {source}")]
    Formula { path: String, source: ParseError },
}

pub(super) fn schema<T>(path: impl Into<String>, message: impl Into<String>) -> Result<T, LoadError> {
    Err(LoadError::Schema { path: path.into(), message: message.into() })
}

fn invariant(path: impl Into<String>, e: FrameError) -> LoadError {
    LoadError::Invariant { path: path.into(), message: e.to_string() }
}

/// World and element names may be written as strings or integers.
fn name(v: &Value, path: &str) -> Result<String, LoadError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        _ => schema(path, "expected a name (string or integer)"),
    }
}

pub(super) fn array<'v>(v: &'v Value, path: &str) -> Result<&'v Vec<Value>, LoadError> {
    v.as_array().map_or_else(|| schema(path, "expected an array"), Ok)
}

fn object<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>, LoadError> {
    v.as_object().map_or_else(|| schema(path, "expected an object"), Ok)
}

fn names(v: &Value, path: &str) -> Result<Vec<String>, LoadError> {
    array(v, path)?.iter().enumerate().map(|(i, x)| name(x, &format!("{path}[{i}]"))).collect()
}

pub(super) fn field<'v>(obj: &'v Map<String, Value>, key: &str, path: &str) -> Result<&'v Value, LoadError> {
    obj.get(key).map_or_else(|| schema(path, format!("missing field `{key}`")), Ok)
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn world(base: &FrameBase, v: &Value, path: &str) -> Result<usize, LoadError> {
    let n = name(v, path)?;
    base.world_index(&n).map_or_else(|| schema(path, format!("unknown world `{n}`")), Ok)
}

fn world_by_name(base: &FrameBase, n: &str, path: &str) -> Result<usize, LoadError> {
    base.world_index(n).map_or_else(|| schema(path, format!("unknown world `{n}`")), Ok)
}

fn elem(base: &FrameBase, v: &Value, path: &str) -> Result<usize, LoadError> {
    let n = name(v, path)?;
    base.elem_index(&n).map_or_else(|| schema(path, format!("`{n}` is not an element of D")), Ok)
}

fn world_set(base: &FrameBase, v: &Value, path: &str) -> Result<WorldSet, LoadError> {
    let mut s = BitSet::EMPTY;
    for (i, x) in array(v, path)?.iter().enumerate() {
        s = s.with(world(base, x, &format!("{path}[{i}]"))?);
    }
    Ok(s)
}

fn pair(v: &Value, path: &str) -> Result<(Value, Value), LoadError> {
    match v.as_array().map(|a| a.as_slice()) {
        Some([a, b]) => Ok((a.clone(), b.clone())),
        _ => schema(path, "expected a pair [a, b]"),
    }
}

/// Loads a selection, ordering, or quasi-selection model from JSON text.
pub fn load_model(text: &str) -> Result<Model, LoadError> {
    let doc: Value = serde_json::from_str(text)?;
    let top = object(&doc, "")?;
    let kind = field(top, "kind", "")?.as_str().map_or_else(|| schema("kind", "expected a string"), Ok)?;
    let base = load_base(top)?;
    let frame = match kind {
        "selection" => {
            let default = match field(top, "default", "")?.as_str() {
                Some("empty") => SelectionDefault::Empty,
                Some("centering") => SelectionDefault::Centering,
                _ => return schema("default", "expected \"empty\" or \"centering\""),
            };
            let mut entries: HashMap<(WorldSet, usize), WorldSet> = HashMap::new();
            for (i, e) in array(field(top, "selection", "")?, "selection")?.iter().enumerate() {
                let path = format!("selection[{i}]");
                let o = object(e, &path)?;
                let p = world_set(&base, field(o, "P", &path)?, &join(&path, "P"))?;
                let w = world(&base, field(o, "w", &path)?, &join(&path, "w"))?;
                let out = world_set(&base, field(o, "out", &path)?, &join(&path, "out"))?;
                if let Some(prev) = entries.insert((p, w), out) {
                    if prev != out {
                        return schema(path, "conflicting entry for the same (P, w)");
                    }
                }
                if !out.is_subset(base.access(w)) {
                    let n = |s| base.world_set_names(s).join(",");
                    return Err(LoadError::Invariant {
                        path,
                        message: format!(
                            "f({{{}}}, {}) = {{{}}} is not a subset of R({})",
                            n(p),
                            base.world_name(w),
                            n(out),
                            base.world_name(w)
                        ),
                    });
                }
            }
            let table = SelectionTable::sparse(base.n_worlds(), entries, default);
            Frame::Selection(SelectionFrame::new(base.clone(), table).map_err(|e| invariant("selection", e))?)
        }
        "ordering" => Frame::Ordering(load_order(top, &base)?),
        "quasi-selection" => {
            let strategy = match field(top, "quasiStrategy", "")?.as_str() {
                Some("min-of-order") => QuasiStrategy::MinOfOrder,
                _ => return schema("quasiStrategy", "expected \"min-of-order\""),
            };
            Frame::Quasi(QuasiSelectionFrame { order: load_order(top, &base)?, strategy })
        }
        other => return schema("kind", format!("unknown kind `{other}`")),
    };
    let interp = match top.get("interpretation") {
        Some(v) => load_interpretation(v, &base)?,
        None => Interpretation::new(),
    };
    let language = match top.get("language") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.parse::<Language>().map_err(|e| LoadError::Schema {
            path: "language".into(),
            message: e.to_string(),
        })?),
        Some(_) => return schema("language", "expected a string"),
    };
    Ok(Model { frame, interp, language })
}

fn load_base(top: &Map<String, Value>) -> Result<FrameBase, LoadError> {
    let worlds = names(field(top, "worlds", "")?, "worlds")?;
    let domain = names(field(top, "domain", "")?, "domain")?;
    let n = worlds.len();
    // Accessibility and domains are filled in after the names validate.
    let probe = FrameBase::new(worlds.clone(), vec![BitSet::EMPTY; n], domain.clone(), vec![BitSet::EMPTY; n])
        .map_err(|e| invariant("worlds", e))?;
    let mut access = vec![BitSet::EMPTY; n];
    for (i, p) in array(field(top, "R", "")?, "R")?.iter().enumerate() {
        let path = format!("R[{i}]");
        let (a, b) = pair(p, &path)?;
        let w = world(&probe, &a, &format!("{path}[0]"))?;
        let v = world(&probe, &b, &format!("{path}[1]"))?;
        access[w] = access[w].with(v);
    }
    let full = BitSet::full(domain.len());
    let local = match top.get("localDomains") {
        None | Some(Value::Null) => vec![full; n],
        Some(v) => {
            let o = object(v, "localDomains")?;
            let mut local = vec![None; n];
            for (k, elems) in o {
                let path = join("localDomains", k);
                let w = world_by_name(&probe, k, &path)?;
                let mut d = BitSet::EMPTY;
                for (i, e) in array(elems, &path)?.iter().enumerate() {
                    d = d.with(elem(&probe, e, &format!("{path}[{i}]"))?);
                }
                local[w] = Some(d);
            }
            let mut out = Vec::with_capacity(n);
            for (w, d) in local.into_iter().enumerate() {
                match d {
                    Some(d) => out.push(d),
                    None => return schema("localDomains", format!("no entry for world `{}`", probe.world_name(w))),
                }
            }
            out
        }
    };
    FrameBase::new(worlds, access, domain, local).map_err(|e| invariant("", e))
}

fn load_order(top: &Map<String, Value>, base: &FrameBase) -> Result<OrderingFrame, LoadError> {
    let o = object(field(top, "order", "")?, "order")?;
    let mut pairs = vec![None; base.n_worlds()];
    for (k, rel) in o {
        let path = join("order", k);
        let w = world_by_name(base, k, &path)?;
        let mut v = Vec::new();
        for (i, p) in array(rel, &path)?.iter().enumerate() {
            let pp = format!("{path}[{i}]");
            let (a, b) = pair(p, &pp)?;
            let x = world(base, &a, &format!("{pp}[0]"))?;
            let y = world(base, &b, &format!("{pp}[1]"))?;
            let r = base.access(w);
            if !(r.contains(x) && r.contains(y)) {
                return Err(LoadError::Invariant {
                    path: pp,
                    message: format!(
                        "pair ({}, {}) is not in R({}) × R({})",
                        base.world_name(x),
                        base.world_name(y),
                        base.world_name(w),
                        base.world_name(w)
                    ),
                });
            }
            v.push((x, y));
        }
        pairs[w] = Some(v);
    }
    let mut all = Vec::with_capacity(pairs.len());
    for (w, p) in pairs.into_iter().enumerate() {
        match p {
            Some(p) => all.push(p),
            None => return schema("order", format!("no entry for world `{}`", base.world_name(w))),
        }
    }
    OrderingFrame::new(base.clone(), &all).map_err(|e| invariant("order", e))
}

/// Splits a key `P` or `P/n`.
fn predicate_key(key: &str, path: &str) -> Result<(String, Option<usize>), LoadError> {
    let (name, arity) = match key.split_once('/') {
        Some((n, a)) => match a.parse() {
            Ok(a) => (n, Some(a)),
            Err(_) => return schema(path, format!("bad arity in `{key}`")),
        },
        None => (key, None),
    };
    let ok = name.chars().next().is_some_and(|c| c.is_uppercase())
        && name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
        && name != "E";
    if !ok {
        return schema(path, format!("`{name}` is not a predicate name"));
    }
    Ok((name.to_string(), arity))
}

fn load_interpretation(v: &Value, base: &FrameBase) -> Result<Interpretation, LoadError> {
    let mut interp = Interpretation::new();
    let (nw, nd) = (base.n_worlds(), base.n_domain());
    for (key, ext) in object(v, "interpretation")? {
        let path = join("interpretation", key);
        let (pname, declared) = predicate_key(key, &path)?;
        let mut arity = declared;
        let mut cells: Vec<(usize, Vec<usize>, String)> = Vec::new();
        for (wname, tuples) in object(ext, &path)? {
            let wpath = join(&path, wname);
            let w = world_by_name(base, wname, &wpath)?;
            for (i, t) in array(tuples, &wpath)?.iter().enumerate() {
                let tpath = format!("{wpath}[{i}]");
                let t = array(t, &tpath)?;
                match arity {
                    Some(a) if a != t.len() => {
                        return schema(tpath, format!("tuple has {} elements, {pname} has arity {a}", t.len()))
                    }
                    None => arity = Some(t.len()),
                    _ => {}
                }
                let tuple = t.iter().enumerate().map(|(j, e)| elem(base, e, &format!("{tpath}[{j}]"))).collect::<Result<Vec<_>, _>>()?;
                cells.push((w, tuple, tpath));
            }
        }
        // An unannotated predicate with no tuples is empty everywhere, which
        // is also what an absent predicate means.
        let Some(arity) = arity else { continue };
        let pred = Predicate::new(&pname, arity);
        if interp.table(&pred).is_some() {
            return schema(path, format!("{pred} is interpreted twice"));
        }
        let mut table = PredTable::empty(arity, nw, nd);
        for (w, tuple, _) in cells {
            table.set_code(w, tuple_code(&tuple, nd), true);
        }
        interp.insert(pred, table);
    }
    Ok(interp)
}

/// JSON document for `model`, in the format read by [`load_model`].
pub fn model_to_json(model: &Model) -> Value {
    let base = model.base();
    let wn = |w: usize| Value::String(base.world_name(w).to_string());
    let set = |s: WorldSet| Value::Array(s.iter().map(wn).collect());
    let mut doc = Map::new();
    doc.insert("kind".into(), json!(model.frame.kind()));
    doc.insert("worlds".into(), json!(base.world_names()));
    let mut r = Vec::new();
    for w in 0..base.n_worlds() {
        for v in base.access(w).iter() {
            r.push(json!([base.world_name(w), base.world_name(v)]));
        }
    }
    doc.insert("R".into(), Value::Array(r));
    doc.insert("domain".into(), json!(base.domain_names()));
    let full = BitSet::full(base.n_domain());
    if (0..base.n_worlds()).any(|w| base.local(w) != full) {
        let mut ld = Map::new();
        for w in 0..base.n_worlds() {
            let elems: Vec<&str> = base.local(w).iter().map(|e| base.elem_name(e)).collect();
            ld.insert(base.world_name(w).to_string(), json!(elems));
        }
        doc.insert("localDomains".into(), Value::Object(ld));
    }
    let order_json = |o: &OrderingFrame| {
        let mut m = Map::new();
        for w in 0..base.n_worlds() {
            let pairs: Vec<Value> =
                o.pairs(w).into_iter().map(|(x, y)| json!([base.world_name(x), base.world_name(y)])).collect();
            m.insert(base.world_name(w).to_string(), Value::Array(pairs));
        }
        Value::Object(m)
    };
    match &model.frame {
        Frame::Selection(s) => {
            let (entries, default) = s.table().listing();
            let sel: Vec<Value> =
                entries.into_iter().map(|(p, w, out)| json!({"P": set(p), "w": wn(w), "out": set(out)})).collect();
            doc.insert("selection".into(), Value::Array(sel));
            doc.insert("default".into(), serde_json::to_value(default).expect("enum serialises"));
        }
        Frame::Ordering(o) => {
            doc.insert("order".into(), order_json(o));
        }
        Frame::Quasi(q) => {
            doc.insert("quasiStrategy".into(), serde_json::to_value(q.strategy).expect("enum serialises"));
            doc.insert("order".into(), order_json(&q.order));
        }
    }
    let mut interp = Map::new();
    for (p, t) in model.interp.predicates() {
        let mut ext = BTreeMap::new();
        for w in 0..base.n_worlds() {
            let mut tuples = Vec::new();
            for code in 0..t.stride() {
                if t.get_code(w, code) {
                    let tuple = crate::semantics::decode_tuple(code, p.arity(), base.n_domain());
                    tuples.push(json!(tuple.iter().map(|&e| base.elem_name(e)).collect::<Vec<_>>()));
                }
            }
            ext.insert(base.world_name(w).to_string(), Value::Array(tuples));
        }
        interp.insert(format!("{}/{}", p.name(), p.arity()), json!(ext));
    }
    doc.insert("interpretation".into(), Value::Object(interp));
    if let Some(l) = model.language {
        doc.insert("language".into(), json!(l.to_string()));
    }
    Value::Object(doc)
}

/// Parses `x=a, y=b` against the domain of `base`. Variable names go
/// through `symbols` so they agree with the formulas of the same batch.
pub fn parse_assignment(text: &str, symbols: &mut Symbols, base: &FrameBase) -> Result<Assignment, String> {
    let mut g = Assignment::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (v, e) = part.split_once('=').ok_or_else(|| format!("expected `var=element`, found `{part}`"))?;
        let (v, e) = (v.trim(), e.trim());
        if !v.chars().next().is_some_and(|c| c.is_lowercase()) {
            return Err(format!("`{v}` is not a variable"));
        }
        let idx = base.elem_index(e).ok_or_else(|| format!("`{e}` is not an element of D"))?;
        g.set(symbols.var(v), idx);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    const REMARK: &str = r#"{
        "kind": "selection",
        "worlds": ["1", "2"],
        "R": [["1","1"],["1","2"],["2","1"],["2","2"]],
        "domain": ["a"],
        "selection": [],
        "default": "centering"
    }"#;

    #[test]
    fn centering_document_loads() {
        let m = load_model(REMARK).unwrap();
        let Frame::Selection(s) = &m.frame else { panic!() };
        assert_eq!(s.f(BitSet(0b11), 0), BitSet(0b01));
        assert_eq!(s.f(BitSet(0b10), 0), BitSet::EMPTY);
        // defaults to a constant domain
        assert_eq!(m.base().local(1), BitSet(1));
    }

    #[test]
    fn selection_outside_access_is_rejected() {
        let doc = r#"{"kind":"selection","worlds":["1","2"],"R":[["1","1"],["2","2"]],"domain":["a"],
            "selection":[{"P":["2"],"w":"1","out":["2"]}],"default":"empty"}"#;
        match load_model(doc) {
            Err(LoadError::Invariant { path, .. }) => assert_eq!(path, "selection[0]"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn schema_errors_name_the_entry() {
        let doc = r#"{"kind":"ordering","worlds":[1,2],"R":[[1,3]],"domain":["a"],"order":{}}"#;
        match load_model(doc) {
            Err(LoadError::Schema { path, .. }) => assert_eq!(path, "R[0][1]"),
            other => panic!("{other:?}"),
        }
        let doc = r#"{"kind":"selection","worlds":["1"],"R":[],"domain":["a"],"selection":[]}"#;
        assert!(matches!(load_model(doc), Err(LoadError::Schema { .. })));
    }

    #[test]
    fn interpretation_arity_and_round_trip() {
        let doc = r#"{"kind":"ordering","worlds":["u","v"],"R":[["u","u"],["u","v"],["v","v"]],
            "domain":["a","b"],"localDomains":{"u":["a"],"v":["a","b"]},
            "order":{"u":[["u","u"],["u","v"],["v","v"]],"v":[["v","v"]]},
            "interpretation":{"F":{"u":[["a"]],"v":[["b"]]},"G/2":{"v":[["a","b"]]},"Q/0":{"u":[[]]}},
            "language":"LE"}"#;
        let m = load_model(doc).unwrap();
        let f = Predicate::new("F", 1);
        assert!(m.interp.holds(&f, 0, &[0], 2));
        assert!(m.interp.holds(&f, 1, &[1], 2));
        assert!(m.interp.holds(&Predicate::new("Q", 0), 0, &[], 2));
        assert_eq!(m.language, Some(Language::Existence));
        let again = load_model(&model_to_json(&m).to_string()).unwrap();
        assert_eq!(again, m);
        let bad = doc.replace(r#"[["a","b"]]"#, r#"[["a"]]"#);
        assert!(load_model(&bad).is_err());
    }

    #[test]
    fn assignments() {
        let m = load_model(REMARK).unwrap();
        let mut s = Symbols::new();
        let g = parse_assignment("x=a, y = a", &mut s, m.base()).unwrap();
        assert_eq!(g.get(s.lookup_var("y").unwrap()), Some(0));
        assert!(parse_assignment("x=b", &mut s, m.base()).is_err());
    }
}
