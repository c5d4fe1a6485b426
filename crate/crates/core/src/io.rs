//! JSON structure files.
//!
//! A file is an object with `"kind"` (`mv`, `pco` or `co`), an optional
//! `"v": 1`, and either explicit tables or exactly one generator:
//!
//! ```json
//! {"kind":"mv","v":1,"size":3,"oplus":[[0,1,2],[1,2,2],[2,2,2]],"neg":[2,1,0],"zero":0}
//! {"kind":"co","v":1,"size":3,"add":[[0,1,2],[1,2,0],[2,0,1]],"neg":[0,2,1],"zero":0,"R":[[0,1,2],[1,2,0],[2,0,1]]}
//! {"kind":"mv","gamma":[2,3]}
//! {"kind":"co","cyclic":5}
//! {"kind":"pco","wound":[2,3]}
//! {"kind":"mv","product":[{"kind":"mv","gamma":[2]}, "l3.json"]}
//! ```
//!
//! Product members are nested objects or paths relative to the containing
//! file. Serialization always writes explicit tables with sorted keys,
//! except for wound-rounds of rank two or more, whose carrier is infinite.

use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use crate::correspondence::wound_to_finite;
use crate::error::{Error, Result};
use crate::mv::MvAlgebra;
use crate::pco::{make_cyclic_group, make_product_pco, FinitePco, LatticeQuotientPco};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Mv,
    Pco,
    Co,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Mv => "mv",
            Kind::Pco => "pco",
            Kind::Co => "co",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Mv(MvAlgebra),
    Pco(FinitePco),
    /// A p.c.o. group validated as cyclically ordered.
    Co(FinitePco),
    Wound(LatticeQuotientPco),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Mv(_) => Kind::Mv,
            Structure::Pco(_) | Structure::Wound(_) => Kind::Pco,
            Structure::Co(_) => Kind::Co,
        }
    }

    /// The table-backed p.c.o. group, if this structure has one. Rank-one
    /// wound-rounds are expanded.
    pub fn finite_pco(&self) -> Result<Option<FinitePco>> {
        Ok(match self {
            Structure::Pco(c) | Structure::Co(c) => Some(c.clone()),
            Structure::Wound(w) if w.rank() == 1 => Some(wound_to_finite(w)?),
            _ => None,
        })
    }
}

fn schema(path: &str, msg: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_string(),
        msg: msg.into(),
    }
}

/// Parses a document; product paths resolve against the working directory.
pub fn parse_structure(bytes: &[u8]) -> Result<Structure> {
    parse_in(bytes, Path::new("."))
}

/// Reads and parses a file; product paths resolve against its directory.
pub fn load_structure(path: &Path) -> Result<Structure> {
    let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let dir = path.parent().map_or_else(|| PathBuf::from("."), Path::to_path_buf);
    parse_in(&bytes, &dir)
}

fn parse_in(bytes: &[u8], dir: &Path) -> Result<Structure> {
    let text = std::str::from_utf8(bytes).map_err(|e| schema("$", format!("not UTF-8: {e}")))?;
    let v: Value = serde_json::from_str(text).map_err(|e| schema("$", e.to_string()))?;
    from_value(&v, "$", dir)
}

fn uint(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn int_vec(v: &Value, path: &str) -> Result<Vec<i64>> {
    let arr = v.as_array().ok_or_else(|| schema(path, "expected an array"))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| x.as_i64().ok_or_else(|| schema(&format!("{path}[{i}]"), "expected an integer")))
        .collect()
}

fn uint_vec(v: &Value, path: &str) -> Result<Vec<usize>> {
    let arr = v.as_array().ok_or_else(|| schema(path, "expected an array"))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| uint(x, &format!("{path}[{i}]")))
        .collect()
}

fn table(v: &Value, path: &str) -> Result<Vec<Vec<usize>>> {
    let arr = v.as_array().ok_or_else(|| schema(path, "expected an array of rows"))?;
    arr.iter()
        .enumerate()
        .map(|(i, row)| uint_vec(row, &format!("{path}[{i}]")))
        .collect()
}

fn field<'v>(obj: &'v Map<String, Value>, key: &str, path: &str) -> Result<&'v Value> {
    obj.get(key)
        .ok_or_else(|| schema(&format!("{path}.{key}"), "missing field"))
}

const GENERATORS: [&str; 4] = ["gamma", "cyclic", "product", "wound"];

fn from_value(v: &Value, path: &str, dir: &Path) -> Result<Structure> {
    let obj = v.as_object().ok_or_else(|| schema(path, "expected an object"))?;
    let kind = match field(obj, "kind", path)?.as_str() {
        Some("mv") => Kind::Mv,
        Some("pco") => Kind::Pco,
        Some("co") => Kind::Co,
        _ => return Err(schema(&format!("{path}.kind"), "expected \"mv\", \"pco\" or \"co\"")),
    };
    if let Some(ver) = obj.get("v") {
        if ver.as_u64() != Some(FORMAT_VERSION) {
            return Err(schema(&format!("{path}.v"), "unsupported version"));
        }
    }
    let allowed: &[&str] = match kind {
        Kind::Mv => &["kind", "v", "size", "oplus", "neg", "zero", "gamma", "product"],
        _ => &["kind", "v", "size", "add", "neg", "zero", "R", "cyclic", "product", "wound"],
    };
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(schema(&format!("{path}.{k}"), format!("unexpected field for kind {}", kind.name())));
    }
    let gens: Vec<&str> = GENERATORS.iter().copied().filter(|g| obj.contains_key(*g)).collect();
    let s = match gens.as_slice() {
        [] => explicit(obj, kind, path)?,
        [g] => {
            let table_keys = ["size", "oplus", "add", "neg", "zero", "R"];
            if let Some(k) = table_keys.iter().find(|k| obj.contains_key(**k)) {
                return Err(schema(&format!("{path}.{k}"), "tables cannot accompany a generator"));
            }
            generated(obj, kind, g, path, dir)?
        }
        _ => return Err(schema(path, "at most one generator is allowed")),
    };
    if kind == Kind::Co {
        if let Structure::Pco(c) = s {
            if !c.is_co() {
                return Err(schema(path, "structure is not a cyclically ordered group"));
            }
            return Ok(Structure::Co(c));
        }
    }
    Ok(s)
}

fn explicit(obj: &Map<String, Value>, kind: Kind, path: &str) -> Result<Structure> {
    let op_key = if kind == Kind::Mv { "oplus" } else { "add" };
    let op = table(field(obj, op_key, path)?, &format!("{path}.{op_key}"))?;
    let neg = uint_vec(field(obj, "neg", path)?, &format!("{path}.neg"))?;
    let zero = uint(field(obj, "zero", path)?, &format!("{path}.zero"))?;
    if let Some(sz) = obj.get("size") {
        let sz = uint(sz, &format!("{path}.size"))?;
        if sz != op.len() {
            return Err(schema(&format!("{path}.size"), format!("size {sz} but {} rows", op.len())));
        }
    }
    let closure = |e: Error| schema(path, e.to_string());
    if kind == Kind::Mv {
        return MvAlgebra::new(op, neg, zero).map(Structure::Mv).map_err(closure);
    }
    let rpath = format!("{path}.R");
    let rows = table(field(obj, "R", path)?, &rpath)?;
    let mut triples = Vec::with_capacity(rows.len());
    for (i, t) in rows.iter().enumerate() {
        let t: [usize; 3] = t
            .as_slice()
            .try_into()
            .map_err(|_| schema(&format!("{rpath}[{i}]"), "expected a triple"))?;
        triples.push(t);
    }
    FinitePco::new(op, neg, zero, &triples).map(Structure::Pco).map_err(closure)
}

fn generated(obj: &Map<String, Value>, kind: Kind, g: &str, path: &str, dir: &Path) -> Result<Structure> {
    let gpath = format!("{path}.{g}");
    let v = &obj[g];
    let wrong = || schema(&gpath, format!("generator not available for kind {}", kind.name()));
    let closure = |e: Error| schema(&gpath, e.to_string());
    match (g, kind) {
        ("gamma", Kind::Mv) => MvAlgebra::gamma(&int_vec(v, &gpath)?).map(Structure::Mv).map_err(closure),
        ("cyclic", Kind::Pco | Kind::Co) => make_cyclic_group(uint(v, &gpath)?)
            .map(Structure::Pco)
            .map_err(closure),
        ("wound", Kind::Pco) => LatticeQuotientPco::wound_round(&int_vec(v, &gpath)?)
            .map(Structure::Wound)
            .map_err(closure),
        ("wound", Kind::Co) => {
            let w = LatticeQuotientPco::wound_round(&int_vec(v, &gpath)?).map_err(closure)?;
            wound_to_finite(&w).map(Structure::Pco).map_err(closure)
        }
        ("product", _) => product(v, kind, &gpath, dir),
        _ => Err(wrong()),
    }
}

fn product(v: &Value, kind: Kind, path: &str, dir: &Path) -> Result<Structure> {
    let refs = v.as_array().ok_or_else(|| schema(path, "expected an array"))?;
    if refs.is_empty() {
        return Err(schema(path, "product needs at least one factor"));
    }
    let mut factors = Vec::new();
    for (i, r) in refs.iter().enumerate() {
        let p = format!("{path}[{i}]");
        let s = match r {
            Value::String(file) => load_structure(&dir.join(file))
                .map_err(|e| schema(&p, e.to_string()))?,
            _ => from_value(r, &p, dir)?,
        };
        factors.push((p, s));
    }
    match kind {
        Kind::Mv => {
            let mut out: Option<MvAlgebra> = None;
            for (p, s) in factors {
                let Structure::Mv(a) = s else {
                    return Err(schema(&p, "factor is not an MV-algebra"));
                };
                out = Some(match out {
                    None => a,
                    Some(acc) => MvAlgebra::product(&acc, &a),
                });
            }
            Ok(Structure::Mv(out.expect("nonempty")))
        }
        _ => {
            let mut out: Option<FinitePco> = None;
            for (p, s) in factors {
                let c = s
                    .finite_pco()?
                    .filter(|_| !matches!(s, Structure::Mv(_)))
                    .ok_or_else(|| schema(&p, "factor is not a finite p.c.o. group"))?;
                out = Some(match out {
                    None => c,
                    Some(acc) => make_product_pco(&acc, &c),
                });
            }
            Ok(Structure::Pco(out.expect("nonempty")))
        }
    }
}

/// The canonical JSON value of a structure.
pub fn to_value(s: &Structure) -> Value {
    match s {
        Structure::Mv(a) => json!({
            "kind": "mv",
            "v": FORMAT_VERSION,
            "size": a.size(),
            "oplus": a.oplus_rows(),
            "neg": a.neg_table(),
            "zero": a.zero(),
        }),
        Structure::Pco(c) | Structure::Co(c) => json!({
            "kind": s.kind().name(),
            "v": FORMAT_VERSION,
            "size": c.size(),
            "add": c.add_rows(),
            "neg": c.neg_table(),
            "zero": c.zero(),
            "R": c.triples(),
        }),
        Structure::Wound(w) => json!({
            "kind": "pco",
            "v": FORMAT_VERSION,
            "wound": w.unit(),
        }),
    }
}

/// Canonical text: sorted keys, no whitespace, trailing newline.
pub fn serialize_structure(s: &Structure) -> String {
    let mut out = to_value(s).to_string();
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_generators() {
        let s = parse_structure(br#"{"kind":"mv","gamma":[4]}"#).unwrap();
        assert_eq!(s, Structure::Mv(MvAlgebra::lukasiewicz(4).unwrap()));
        let s = parse_structure(br#"{"kind":"co","cyclic":5}"#).unwrap();
        assert_eq!(s, Structure::Co(make_cyclic_group(5).unwrap()));
        let s = parse_structure(br#"{"kind":"pco","wound":[2,3],"v":1}"#).unwrap();
        assert!(matches!(s, Structure::Wound(_)));
    }

    #[test]
    fn schema_errors_carry_paths() {
        let e = parse_structure(br#"{"kind":"mv","oplus":[[0]]}"#).unwrap_err();
        assert_eq!(e, schema("$.neg", "missing field"));
        let e = parse_structure(br#"{"kind":"mv","gamma":[1,"x"]}"#).unwrap_err();
        assert!(matches!(e, Error::Schema { ref path, .. } if path == "$.gamma[1]"));
        let e = parse_structure(br#"{"kind":"co","product":[{"kind":"co","cyclic":5},{"kind":"co","cyclic":5}]}"#)
            .unwrap_err();
        assert!(matches!(e, Error::Schema { ref path, .. } if path == "$"));
        let e = parse_structure(br#"{"kind":"mv","cyclic":3}"#).unwrap_err();
        assert!(matches!(e, Error::Schema { ref path, .. } if path == "$.cyclic"));
        assert!(parse_structure(br#"{"kind":"mv","gamma":[2],"v":2}"#).is_err());
        assert!(parse_structure(b"not json").is_err());
        let e = parse_structure(br#"{"kind":"mv","size":1,"oplus":[[0]],"neg":[1],"zero":0}"#).unwrap_err();
        assert!(matches!(e, Error::Schema { ref path, .. } if path == "$"));
    }

    #[test]
    fn round_trip_is_stable() {
        for doc in [
            r#"{"kind":"mv","gamma":[2,3]}"#,
            r#"{"kind":"co","cyclic":6}"#,
            r#"{"kind":"pco","wound":[2,2]}"#,
            r#"{"kind":"pco","product":[{"kind":"co","cyclic":2},{"kind":"pco","cyclic":3}]}"#,
        ] {
            let s = parse_structure(doc.as_bytes()).unwrap();
            let text = serialize_structure(&s);
            assert!(text.ends_with('\n'));
            let again = parse_structure(text.as_bytes()).unwrap();
            assert_eq!(again, s);
            assert_eq!(serialize_structure(&again), text);
        }
    }

    #[test]
    fn keys_are_sorted() {
        let s = parse_structure(br#"{"kind":"co","cyclic":3}"#).unwrap();
        let text = serialize_structure(&s);
        assert!(text.starts_with(r#"{"R":[[0,1,2],[1,2,0],[2,0,1]],"add":"#));
    }
}
