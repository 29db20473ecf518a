//! Ring-spec documents: a versioned JSON tree describing one Γ_I-system.
//!
//! Validation walks the raw JSON so that every diagnostic can name the
//! exact field (`$.construction.edges[2]`) that caused it.

use std::collections::BTreeMap;
use std::fmt;

use gmr_core::abelian::parse_coords;
use gmr_core::{FinAbGroup, GammaSystem, Limits, PathAlgebraSpec};
use serde_json::{json, Map, Value};

/// A rejected spec: stable code, JSON path, human message.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: &'static str,
    pub path: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.code, self.path, self.message)
    }
}

pub mod codes {
    pub const SYNTAX: &str = "E001";
    pub const VERSION: &str = "E002";
    pub const UNKNOWN_KIND: &str = "E003";
    pub const FIELD: &str = "E004";
    pub const COORDINATES: &str = "E005";
    pub const LABEL: &str = "E006";
    pub const CONSTRUCTION: &str = "E007";
}

fn diag(code: &'static str, path: impl Into<String>, message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        code,
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    MatrixHom {
        objects: Vec<(String, usize)>,
        modulus: u32,
        zero_blocks: Vec<(String, String)>,
    },
    PathAlgebra(PathAlgebraSpec),
    Tables {
        labels: Vec<String>,
        /// Invariant factors keyed by `(i, j)` label positions.
        components: BTreeMap<(usize, usize), Vec<u32>>,
        /// `products[(i,j,k)][x][z]` is the coordinate tuple of `x·z`.
        products: BTreeMap<(usize, usize, usize), Vec<Vec<Vec<u32>>>>,
    },
}

impl Construction {
    pub fn kind(&self) -> &'static str {
        match self {
            Construction::MatrixHom { .. } => "matrix_hom",
            Construction::PathAlgebra(_) => "path_algebra",
            Construction::Tables { .. } => "tables",
        }
    }

    pub fn labels(&self) -> Vec<String> {
        match self {
            Construction::MatrixHom { objects, .. } => objects.iter().map(|(l, _)| l.clone()).collect(),
            Construction::PathAlgebra(p) => p.vertices.clone(),
            Construction::Tables { labels, .. } => labels.clone(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Caps {
    pub max_order: Option<usize>,
    pub max_lattice: Option<usize>,
    pub max_radical: Option<usize>,
}

impl Caps {
    pub fn apply(&self, mut limits: Limits) -> Limits {
        if let Some(v) = self.max_order {
            limits.max_order = v;
        }
        if let Some(v) = self.max_lattice {
            limits.max_lattice = v;
        }
        if let Some(v) = self.max_radical {
            limits.max_radical = v;
        }
        limits
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpecDocument {
    pub version: u64,
    pub name: Option<String>,
    pub construction: Construction,
    /// Ideal name → generators in `i,j:(c1,...)` notation.
    pub named_ideals: BTreeMap<String, Vec<String>>,
    pub caps: Caps,
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, Diagnostic> {
    obj.get(key)
        .ok_or_else(|| diag(codes::FIELD, format!("{path}.{key}"), "missing field"))
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, Diagnostic> {
    v.as_object().ok_or_else(|| diag(codes::FIELD, path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, Diagnostic> {
    v.as_array().ok_or_else(|| diag(codes::FIELD, path, "expected an array"))
}

fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str, Diagnostic> {
    v.as_str().ok_or_else(|| diag(codes::FIELD, path, "expected a string"))
}

fn as_uint(v: &Value, path: &str) -> Result<u64, Diagnostic> {
    v.as_u64().ok_or_else(|| diag(codes::FIELD, path, "expected a non-negative integer"))
}

fn as_bool(v: &Value, path: &str) -> Result<bool, Diagnostic> {
    v.as_bool().ok_or_else(|| diag(codes::FIELD, path, "expected a boolean"))
}

fn as_u32(v: &Value, path: &str) -> Result<u32, Diagnostic> {
    u32::try_from(as_uint(v, path)?).map_err(|_| diag(codes::FIELD, path, "integer out of range"))
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<(), Diagnostic> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(diag(codes::FIELD, format!("{path}.{k}"), "unknown field")),
        None => Ok(()),
    }
}

fn labels_of(v: &Value, path: &str) -> Result<Vec<String>, Diagnostic> {
    let mut out: Vec<String> = Vec::new();
    for (n, l) in as_array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{n}]");
        let s = as_str(l, &p)?;
        if s.is_empty() || s.contains([',', ':', '(', ')', '+']) || s.trim() != s {
            return Err(diag(codes::LABEL, p, format!("label {s:?} is empty or contains ',:()+' or spaces")));
        }
        if out.iter().any(|o| o == s) {
            return Err(diag(codes::LABEL, p, format!("duplicate label {s:?}")));
        }
        out.push(s.to_string());
    }
    if out.is_empty() {
        return Err(diag(codes::LABEL, path, "at least one label is required"));
    }
    Ok(out)
}

fn label_pos(labels: &[String], l: &str, path: &str, what: &str) -> Result<usize, Diagnostic> {
    labels
        .iter()
        .position(|x| x == l)
        .ok_or_else(|| diag(codes::LABEL, path, format!("{what} references undeclared label {l:?}")))
}

fn label_pair(v: &Value, path: &str) -> Result<(String, String), Diagnostic> {
    let a = as_array(v, path)?;
    if a.len() != 2 {
        return Err(diag(codes::FIELD, path, "expected a pair of labels"));
    }
    Ok((as_str(&a[0], &format!("{path}[0]"))?.to_string(), as_str(&a[1], &format!("{path}[1]"))?.to_string()))
}

/// Splits a `"i,j"` or `"i,j,k"` key into label positions.
fn index_key(key: &str, arity: usize, labels: &[String], path: &str) -> Result<Vec<usize>, Diagnostic> {
    let parts: Vec<&str> = key.split(',').collect();
    if parts.len() != arity {
        return Err(diag(codes::FIELD, path, format!("key {key:?} must name {arity} labels separated by ','")));
    }
    parts.iter().map(|p| label_pos(labels, p.trim(), path, "key")).collect()
}

fn coordinate(v: &Value, rank: usize, path: &str) -> Result<Vec<u32>, Diagnostic> {
    let a = v
        .as_array()
        .ok_or_else(|| diag(codes::COORDINATES, path, "coordinates must be an array of integers"))?;
    if a.len() != rank {
        return Err(diag(codes::COORDINATES, path, format!("expected {rank} coordinates, found {}", a.len())));
    }
    a.iter()
        .enumerate()
        .map(|(n, c)| {
            c.as_u64()
                .and_then(|c| u32::try_from(c).ok())
                .ok_or_else(|| diag(codes::COORDINATES, format!("{path}[{n}]"), "coordinate must be a small non-negative integer"))
        })
        .collect()
}

fn parse_matrix_hom(obj: &Map<String, Value>, p: &str) -> Result<Construction, Diagnostic> {
    reject_unknown(obj, &["kind", "objects", "modulus", "zero_blocks"], p)?;
    let op = format!("{p}.objects");
    let mut objects: Vec<(String, usize)> = Vec::new();
    for (n, o) in as_array(field(obj, "objects", p)?, &op)?.iter().enumerate() {
        let q = format!("{op}[{n}]");
        let pair = as_array(o, &q)?;
        if pair.len() != 2 {
            return Err(diag(codes::FIELD, q, "expected [label, dimension]"));
        }
        let l = as_str(&pair[0], &format!("{q}[0]"))?;
        let d = as_uint(&pair[1], &format!("{q}[1]"))? as usize;
        if objects.iter().any(|(x, _)| x == l) {
            return Err(diag(codes::LABEL, q, format!("duplicate label {l:?}")));
        }
        objects.push((l.to_string(), d));
    }
    if objects.is_empty() {
        return Err(diag(codes::LABEL, op, "at least one object is required"));
    }
    let modulus = as_u32(field(obj, "modulus", p)?, &format!("{p}.modulus"))?;
    let labels: Vec<String> = objects.iter().map(|(l, _)| l.clone()).collect();
    let mut zero_blocks = Vec::new();
    if let Some(z) = obj.get("zero_blocks") {
        let zp = format!("{p}.zero_blocks");
        for (n, b) in as_array(z, &zp)?.iter().enumerate() {
            let q = format!("{zp}[{n}]");
            let (a, c) = label_pair(b, &q)?;
            label_pos(&labels, &a, &q, "zero block")?;
            label_pos(&labels, &c, &q, "zero block")?;
            zero_blocks.push((a, c));
        }
    }
    Ok(Construction::MatrixHom {
        objects,
        modulus,
        zero_blocks,
    })
}

fn parse_path_algebra(obj: &Map<String, Value>, p: &str) -> Result<Construction, Diagnostic> {
    reject_unknown(obj, &["kind", "vertices", "edges", "modulus", "truncation", "include_trivial_paths"], p)?;
    let vertices = labels_of(field(obj, "vertices", p)?, &format!("{p}.vertices"))?;
    let ep = format!("{p}.edges");
    let mut edges = Vec::new();
    for (n, e) in as_array(field(obj, "edges", p)?, &ep)?.iter().enumerate() {
        let q = format!("{ep}[{n}]");
        let (a, b) = label_pair(e, &q)?;
        label_pos(&vertices, &a, &q, &format!("edge {n}"))?;
        label_pos(&vertices, &b, &q, &format!("edge {n}"))?;
        edges.push((a, b));
    }
    let include_trivial_paths = match obj.get("include_trivial_paths") {
        Some(v) => as_bool(v, &format!("{p}.include_trivial_paths"))?,
        None => true,
    };
    Ok(Construction::PathAlgebra(PathAlgebraSpec {
        vertices,
        edges,
        modulus: as_u32(field(obj, "modulus", p)?, &format!("{p}.modulus"))?,
        truncation: as_uint(field(obj, "truncation", p)?, &format!("{p}.truncation"))? as usize,
        include_trivial_paths,
    }))
}

fn parse_tables(obj: &Map<String, Value>, p: &str) -> Result<Construction, Diagnostic> {
    reject_unknown(obj, &["kind", "labels", "components", "products"], p)?;
    let labels = labels_of(field(obj, "labels", p)?, &format!("{p}.labels"))?;
    let cp = format!("{p}.components");
    let mut components = BTreeMap::new();
    for (key, v) in as_object(field(obj, "components", p)?, &cp)? {
        let q = format!("{cp}.{key}");
        let ij = index_key(key, 2, &labels, &q)?;
        let factors = as_array(v, &q)?
            .iter()
            .enumerate()
            .map(|(n, f)| as_u32(f, &format!("{q}[{n}]")))
            .collect::<Result<Vec<u32>, _>>()?;
        components.insert((ij[0], ij[1]), factors);
    }
    let pp = format!("{p}.products");
    let mut products = BTreeMap::new();
    if let Some(pv) = obj.get("products") {
        for (key, v) in as_object(pv, &pp)? {
            let q = format!("{pp}.{key}");
            let ijk = index_key(key, 3, &labels, &q)?;
            let rows = as_array(v, &q)?
                .iter()
                .enumerate()
                .map(|(x, row)| {
                    let rp = format!("{q}[{x}]");
                    as_array(row, &rp)?
                        .iter()
                        .enumerate()
                        .map(|(z, c)| {
                            let cpath = format!("{rp}[{z}]");
                            let a = c.as_array().ok_or_else(|| {
                                diag(codes::COORDINATES, &cpath, "coordinates must be an array of integers")
                            })?;
                            coordinate(c, a.len(), &cpath)
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            products.insert((ijk[0], ijk[1], ijk[2]), rows);
        }
    }
    Ok(Construction::Tables {
        labels,
        components,
        products,
    })
}

/// Parses and validates spec text. Bounds that depend on the built
/// groups (coordinate ranges, element addresses) are checked by [`build`].
pub fn parse_spec(text: &str) -> Result<RingSpecDocument, Diagnostic> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| diag(codes::SYNTAX, "$", format!("not valid JSON: {e}")))?;
    parse_value(&root)
}

pub fn parse_value(root: &Value) -> Result<RingSpecDocument, Diagnostic> {
    let obj = as_object(root, "$")?;
    reject_unknown(obj, &["version", "name", "construction", "named_ideals", "caps"], "$")?;
    let version = match obj.get("version") {
        Some(v) => v.as_u64().filter(|&v| v == 1).ok_or_else(|| {
            diag(codes::VERSION, "$.version", format!("unsupported version {v}, expected 1"))
        })?,
        None => return Err(diag(codes::VERSION, "$.version", "missing version, expected 1")),
    };
    let name = match obj.get("name") {
        Some(v) => Some(as_str(v, "$.name")?.to_string()),
        None => None,
    };
    let cobj = as_object(field(obj, "construction", "$")?, "$.construction")?;
    let kind = as_str(field(cobj, "kind", "$.construction")?, "$.construction.kind")?;
    let construction = match kind {
        "matrix_hom" => parse_matrix_hom(cobj, "$.construction")?,
        "path_algebra" => parse_path_algebra(cobj, "$.construction")?,
        "tables" => parse_tables(cobj, "$.construction")?,
        other => {
            return Err(diag(
                codes::UNKNOWN_KIND,
                "$.construction.kind",
                format!("unknown construction kind {other:?}; expected matrix_hom, path_algebra or tables"),
            ))
        }
    };
    let labels = construction.labels();
    let mut named_ideals = BTreeMap::new();
    if let Some(v) = obj.get("named_ideals") {
        for (name, gens) in as_object(v, "$.named_ideals")? {
            let q = format!("$.named_ideals.{name}");
            let mut out = Vec::new();
            for (n, g) in as_array(gens, &q)?.iter().enumerate() {
                let gp = format!("{q}[{n}]");
                let s = as_str(g, &gp)?;
                check_element_syntax(s, &labels, &gp)?;
                out.push(s.to_string());
            }
            named_ideals.insert(name.clone(), out);
        }
    }
    let mut caps = Caps::default();
    if let Some(v) = obj.get("caps") {
        let c = as_object(v, "$.caps")?;
        reject_unknown(c, &["max_order", "max_lattice", "max_radical"], "$.caps")?;
        let get = |k: &str| -> Result<Option<usize>, Diagnostic> {
            c.get(k).map(|v| as_uint(v, &format!("$.caps.{k}")).map(|n| n as usize)).transpose()
        };
        caps.max_order = get("max_order")?;
        caps.max_lattice = get("max_lattice")?;
        caps.max_radical = get("max_radical")?;
    }
    Ok(RingSpecDocument {
        version,
        name,
        construction,
        named_ideals,
        caps,
    })
}

/// `i,j:(c1,...)` terms joined by `+`, or `0`.
fn check_element_syntax(s: &str, labels: &[String], path: &str) -> Result<(), Diagnostic> {
    if s.trim() == "0" {
        return Ok(());
    }
    for term in s.split('+') {
        let (pair, coords) = term
            .trim()
            .split_once(':')
            .ok_or_else(|| diag(codes::COORDINATES, path, format!("element term {term:?} is not of the form i,j:(c)")))?;
        let (a, b) = pair
            .split_once(',')
            .ok_or_else(|| diag(codes::COORDINATES, path, format!("element term {term:?} is not of the form i,j:(c)")))?;
        label_pos(labels, a.trim(), path, "element")?;
        label_pos(labels, b.trim(), path, "element")?;
        parse_coords(coords).map_err(|e| diag(codes::COORDINATES, path, e.to_string()))?;
    }
    Ok(())
}

/// Builds the Γ_I-system. Constructor rejections become `E005`/`E007`
/// diagnostics; resource caps are passed through untouched.
pub fn build_system(doc: &RingSpecDocument, limits: &Limits) -> Result<GammaSystem, BuildError> {
    let cons = "$.construction";
    match &doc.construction {
        Construction::MatrixHom {
            objects,
            modulus,
            zero_blocks,
        } => GammaSystem::from_matrix_homs(objects, *modulus, zero_blocks, limits).map_err(|e| wrap(e, cons)),
        Construction::PathAlgebra(p) => GammaSystem::from_digraph(p, limits).map_err(|e| wrap(e, cons)),
        Construction::Tables {
            labels,
            components,
            products,
        } => {
            let mut groups = BTreeMap::new();
            for (&(i, j), f) in components {
                let factors: Vec<i64> = f.iter().map(|&x| x as i64).collect();
                let g = FinAbGroup::with_cap(&factors, limits.max_order)
                    .map_err(|e| wrap(e, &format!("{cons}.components.{},{}", labels[i], labels[j])))?;
                groups.insert((i, j), g);
            }
            let trivial = FinAbGroup::trivial();
            let comp = |i: usize, j: usize| groups.get(&(i, j)).unwrap_or(&trivial);
            let mut tables = BTreeMap::new();
            for (&(i, j, k), rows) in products {
                let key = format!("{cons}.products.{},{},{}", labels[i], labels[j], labels[k]);
                let (a, b, c) = (comp(i, j), comp(j, k), comp(i, k));
                if rows.len() != a.order() {
                    return Err(BuildError::Diagnostic(diag(
                        codes::COORDINATES,
                        key,
                        format!("expected {} rows, one per element of the left factor", a.order()),
                    )));
                }
                let mut flat = Vec::with_capacity(a.order() * b.order());
                for (x, row) in rows.iter().enumerate() {
                    if row.len() != b.order() {
                        return Err(BuildError::Diagnostic(diag(
                            codes::COORDINATES,
                            format!("{key}[{x}]"),
                            format!("expected {} entries, one per element of the right factor", b.order()),
                        )));
                    }
                    for (z, coords) in row.iter().enumerate() {
                        let idx = c
                            .index(coords)
                            .map_err(|e| BuildError::Diagnostic(diag(codes::COORDINATES, format!("{key}[{x}][{z}]"), e.to_string())))?;
                        flat.push(idx);
                    }
                }
                tables.insert((i, j, k), flat);
            }
            GammaSystem::from_tables(labels.clone(), groups, tables, limits).map_err(|e| wrap(e, cons))
        }
    }
}

#[derive(Debug)]
pub enum BuildError {
    Diagnostic(Diagnostic),
    Core(gmr_core::Error),
}

fn wrap(e: gmr_core::Error, path: &str) -> BuildError {
    match e {
        gmr_core::Error::InvalidInput(msg) => BuildError::Diagnostic(diag(codes::CONSTRUCTION, path, msg)),
        other => BuildError::Core(other),
    }
}

/// Canonical JSON form of a document; re-parses to an equal document.
pub fn to_value(doc: &RingSpecDocument) -> Value {
    let construction = match &doc.construction {
        Construction::MatrixHom {
            objects,
            modulus,
            zero_blocks,
        } => json!({
            "kind": "matrix_hom",
            "objects": objects.iter().map(|(l, d)| json!([l, d])).collect::<Vec<_>>(),
            "modulus": modulus,
            "zero_blocks": zero_blocks.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
        }),
        Construction::PathAlgebra(p) => json!({
            "kind": "path_algebra",
            "vertices": p.vertices,
            "edges": p.edges.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "modulus": p.modulus,
            "truncation": p.truncation,
            "include_trivial_paths": p.include_trivial_paths,
        }),
        Construction::Tables {
            labels,
            components,
            products,
        } => {
            let comps: Map<String, Value> = components
                .iter()
                .map(|(&(i, j), f)| (format!("{},{}", labels[i], labels[j]), json!(f)))
                .collect();
            let prods: Map<String, Value> = products
                .iter()
                .map(|(&(i, j, k), t)| (format!("{},{},{}", labels[i], labels[j], labels[k]), json!(t)))
                .collect();
            json!({"kind": "tables", "labels": labels, "components": comps, "products": prods})
        }
    };
    let mut root = Map::new();
    root.insert("version".into(), json!(doc.version));
    if let Some(n) = &doc.name {
        root.insert("name".into(), json!(n));
    }
    root.insert("construction".into(), construction);
    if !doc.named_ideals.is_empty() {
        root.insert("named_ideals".into(), json!(doc.named_ideals));
    }
    let mut caps = Map::new();
    for (k, v) in [
        ("max_order", doc.caps.max_order),
        ("max_lattice", doc.caps.max_lattice),
        ("max_radical", doc.caps.max_radical),
    ] {
        if let Some(v) = v {
            caps.insert(k.into(), json!(v));
        }
    }
    if !caps.is_empty() {
        root.insert("caps".into(), Value::Object(caps));
    }
    Value::Object(root)
}
