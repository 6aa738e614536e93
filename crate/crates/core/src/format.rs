//! The algebra file format.
//!
//! A JSON object with keys `field` (`"Q"` or `{"Fp": p}`), `dim`, `basis`,
//! `unit`, `mult`, and optionally `frobenius_form`, `idempotents`, `modules`
//! and `expected`. Scalars are canonical text. `mult` lists the nonzero basis
//! products as `[i, j, [[c, k], ...]]`, the pairs with `i ≤ j` first, each
//! group in row-major order. Output has sorted keys and one product per line,
//! so writing the same bundle always gives the same bytes.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, ModulePresentation};
use crate::arith::{Field, FieldSpec, Matrix, PrimeField, Rationals};
use crate::catalog::{AnyBundle, Bundle, Expected};
use crate::error::{Error, Result};

const KEYS: [&str; 9] =
    ["basis", "dim", "expected", "field", "frobenius_form", "idempotents", "modules", "mult", "unit"];

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("json values serialize")
}

fn scalars<F: Field>(f: &F, v: &[F::Elem]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(f.format(c))).collect())
}

fn matrix_json<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Value {
    json!(m.format(f))
}

/// Product pairs in file order.
pub fn mult_order(n: usize) -> impl Iterator<Item = (usize, usize)> {
    let upper = (0..n).flat_map(move |i| (i..n).map(move |j| (i, j)));
    let lower = (0..n).flat_map(move |i| (0..i).map(move |j| (i, j)));
    upper.chain(lower)
}

/// Canonical text of a bundle.
pub fn write_bundle<F: Field>(b: &Bundle<F>) -> String {
    let alg = &b.algebra;
    let f = alg.field();
    let mut fields: BTreeMap<&str, String> = BTreeMap::new();
    let field = match f.spec() {
        FieldSpec::Rationals => json!("Q"),
        FieldSpec::Prime(p) => json!({ "Fp": p }),
    };
    fields.insert("field", compact(&field));
    fields.insert("dim", alg.dim().to_string());
    fields.insert("basis", compact(&json!(alg.labels())));
    fields.insert("unit", compact(&scalars(f, alg.unit())));
    let triples: Vec<String> = mult_order(alg.dim())
        .filter(|&(i, j)| !alg.product(i, j).is_empty())
        .map(|(i, j)| {
            let terms: Vec<Value> = alg.product(i, j).iter().map(|(k, c)| json!([f.format(c), k])).collect();
            compact(&json!([i, j, terms]))
        })
        .collect();
    fields.insert("mult", block(&triples.iter().map(|t| t.as_str()).collect::<Vec<_>>(), '[', ']'));
    if let Some(l) = &b.frobenius_form {
        fields.insert("frobenius_form", compact(&scalars(f, l)));
    }
    if let Some(idems) = &b.idempotents {
        let rows: Vec<String> = idems.iter().map(|e| compact(&scalars(f, e))).collect();
        fields.insert("idempotents", block(&rows.iter().map(|t| t.as_str()).collect::<Vec<_>>(), '[', ']'));
    }
    if !b.modules.is_empty() {
        let mut named: Vec<(String, String)> = b
            .modules
            .iter()
            .map(|m| {
                let mats: Vec<Value> = m.action().iter().map(|a| matrix_json(f, a)).collect();
                (compact(&json!(m.name)), compact(&Value::Array(mats)))
            })
            .collect();
        named.sort();
        let rows: Vec<String> = named.into_iter().map(|(k, v)| format!("{k}: {v}")).collect();
        fields.insert("modules", block(&rows.iter().map(|t| t.as_str()).collect::<Vec<_>>(), '{', '}'));
    }
    if !b.expected.is_empty() {
        let rows: Vec<String> = b
            .expected
            .iter()
            .map(|(k, e)| {
                format!("{}: {}", compact(&json!(k)), compact(&serde_json::to_value(e).expect("serializable")))
            })
            .collect();
        fields.insert("expected", block(&rows.iter().map(|t| t.as_str()).collect::<Vec<_>>(), '{', '}'));
    }
    let body: Vec<String> = fields.into_iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

fn block(items: &[&str], open: char, close: char) -> String {
    if items.is_empty() {
        return format!("{open}{close}");
    }
    format!("{open}\n    {}\n  {close}", items.join(",\n    "))
}

pub fn write_any(b: &AnyBundle) -> String {
    match b {
        AnyBundle::Q(b) => write_bundle(b),
        AnyBundle::Fp(b) => write_bundle(b),
    }
}

pub fn write_file(path: &Path, b: &AnyBundle) -> Result<()> {
    std::fs::write(path, write_any(b))?;
    Ok(())
}

pub fn read_file(path: &Path) -> Result<AnyBundle> {
    parse_bundle(&std::fs::read_to_string(path)?)
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field_spec(v: &Value) -> Result<FieldSpec> {
    match v {
        Value::String(s) if s == "Q" => Ok(FieldSpec::Rationals),
        Value::Object(m) if m.len() == 1 && m.contains_key("Fp") => {
            let p = m["Fp"].as_u64().ok_or_else(|| parse_err("`Fp` must be an unsigned integer"))?;
            let p = u32::try_from(p).map_err(|_| Error::Input(format!("field modulus {p} is not below 2^31")))?;
            FieldSpec::Prime(p).validate()
        }
        _ => Err(parse_err("`field` must be \"Q\" or {\"Fp\": p}")),
    }
}

/// Parses a bundle, checking shapes and indices but not the algebra axioms.
pub fn parse_bundle(text: &str) -> Result<AnyBundle> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let obj = v.as_object().ok_or_else(|| parse_err("top level must be an object"))?;
    if let Some(k) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(parse_err(format!("unknown key `{k}`")));
    }
    let spec = field_spec(obj.get("field").ok_or_else(|| parse_err("missing `field`"))?)?;
    Ok(match spec {
        FieldSpec::Rationals => AnyBundle::Q(parse_with(Rationals, obj)?),
        FieldSpec::Prime(p) => AnyBundle::Fp(parse_with(PrimeField::new(p)?, obj)?),
    })
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))
}

fn index(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|i| i as usize).ok_or_else(|| parse_err(format!("{what} must be an unsigned integer")))
}

fn scalar<F: Field>(f: &F, v: &Value) -> Result<F::Elem> {
    let s = v.as_str().ok_or_else(|| parse_err(format!("scalar {v} must be a string")))?;
    f.parse(s)
}

fn vector<F: Field>(f: &F, v: &Value, len: usize, what: &str) -> Result<Vec<F::Elem>> {
    let a = array(v, what)?;
    if a.len() != len {
        return Err(Error::Input(format!("{what} has length {}, expected {len}", a.len())));
    }
    a.iter().map(|c| scalar(f, c)).collect()
}

fn matrix<F: Field>(f: &F, v: &Value, what: &str) -> Result<Matrix<F::Elem>> {
    let rows = array(v, what)?;
    let cols = rows.first().map(|r| array(r, what).map(|r| r.len())).transpose()?.unwrap_or(0);
    let rows: Vec<Vec<F::Elem>> = rows.iter().map(|r| vector(f, r, cols, what)).collect::<Result<_>>()?;
    Matrix::from_rows(cols, rows)
}

fn parse_with<F: Field>(f: F, obj: &Map<String, Value>) -> Result<Bundle<F>> {
    let get = |k: &str| obj.get(k).ok_or_else(|| parse_err(format!("missing `{k}`")));
    let n = index(get("dim")?, "`dim`")?;
    let labels: Vec<String> = array(get("basis")?, "`basis`")?
        .iter()
        .map(|l| l.as_str().map(String::from).ok_or_else(|| parse_err("basis labels must be strings")))
        .collect::<Result<_>>()?;
    if labels.len() != n {
        return Err(Error::Input(format!("`basis` has {} labels but `dim` is {n}", labels.len())));
    }
    let unit = vector(&f, get("unit")?, n, "`unit`")?;
    let mut products = Vec::new();
    for t in array(get("mult")?, "`mult`")? {
        let t = array(t, "product triple")?;
        if t.len() != 3 {
            return Err(parse_err("product triples have the form [i, j, [[c, k], ...]]"));
        }
        let (i, j) = (index(&t[0], "product index")?, index(&t[1], "product index")?);
        let terms = array(&t[2], "product terms")?
            .iter()
            .map(|term| {
                let term = array(term, "product term")?;
                if term.len() != 2 {
                    return Err(parse_err("product terms have the form [c, k]"));
                }
                Ok((index(&term[1], "output index")?, scalar(&f, &term[0])?))
            })
            .collect::<Result<Vec<_>>>()?;
        products.push((i, j, terms));
    }
    let algebra = Algebra::new(f.clone(), labels, unit, products)?;
    let mut b = Bundle::new(algebra);
    if let Some(l) = obj.get("frobenius_form") {
        b.frobenius_form = Some(vector(&f, l, n, "`frobenius_form`")?);
    }
    if let Some(list) = obj.get("idempotents") {
        let idems =
            array(list, "`idempotents`")?.iter().map(|e| vector(&f, e, n, "idempotent")).collect::<Result<_>>()?;
        b.idempotents = Some(idems);
    }
    if let Some(mods) = obj.get("modules") {
        let mods = mods.as_object().ok_or_else(|| parse_err("`modules` must map names to matrix lists"))?;
        for (name, mats) in mods {
            let action = array(mats, "module action")?
                .iter()
                .map(|m| matrix(&f, m, "action matrix"))
                .collect::<Result<Vec<_>>>()?;
            b.modules.push(ModulePresentation::new(&b.algebra, name.clone(), action)?);
        }
    }
    if let Some(exp) = obj.get("expected") {
        let exp = exp.as_object().ok_or_else(|| parse_err("`expected` must be an object"))?;
        for (k, e) in exp {
            let e: Expected =
                serde_json::from_value(e.clone()).map_err(|err| parse_err(format!("expected `{k}`: {err}")))?;
            b.expected.insert(k.clone(), e);
        }
    }
    Ok(b)
}
