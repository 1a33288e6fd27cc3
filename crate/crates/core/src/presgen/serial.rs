//! Canonical JSON and plain-text renderings of a [`Presentation`].
//!
//! JSON objects are emitted with sorted keys and every integer that can grow
//! (coefficients) as a decimal string, so output is byte-deterministic.
//! Polynomials are lists of `[num, den, [[var, exp], ...]]` terms in
//! descending degree-reverse-lexicographic order.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use super::{build_vartable, Presentation, RelationTag, TaggedRelation};
use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, Polynomial, Rational, VarDesc, VarTable};
use crate::ideal::MonomialOrder;
use crate::linalg::Matrix;
use crate::slnalg::{matrix_table, IndexSeq, PresVar, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    CanonicalJson,
    Text,
}

fn poly_json(p: &Polynomial) -> Value {
    Value::Array(
        p.sorted_terms(&MonomialOrder::DegRevLex)
            .into_iter()
            .map(|(m, c)| {
                let factors: Vec<Value> = m.factors().map(|(v, e)| json!([v, e])).collect();
                json!([c.numer().to_string(), c.denom().to_string(), factors])
            })
            .collect(),
    )
}

fn tag_json(tag: &RelationTag) -> Value {
    match tag {
        RelationTag::Plucker { sign, p, q, i, j } => json!({
            "kind": "plucker",
            "params": { "sign": sign.symbol(), "p": p, "q": q, "i": i, "j": j },
        }),
        RelationTag::PluckerBasis { sign, p, q, index } => json!({
            "kind": "plucker-basis",
            "params": { "sign": sign.symbol(), "p": p, "q": q, "index": index },
        }),
        RelationTag::Sl2 { d } => json!({ "kind": "sl2", "params": { "d": d } }),
    }
}

fn to_json(pres: &Presentation) -> Value {
    let variables: Vec<Value> = pres
        .vartable()
        .descs()
        .iter()
        .map(|d| match d {
            VarDesc::Pres(v) => json!({ "sign": v.sign.symbol(), "indices": v.seq.entries() }),
            _ => unreachable!("presentation tables hold only generators"),
        })
        .collect();
    let relations: Vec<Value> =
        pres.relations().iter().map(|r| json!({ "tag": tag_json(&r.tag), "poly": poly_json(&r.poly) })).collect();
    let phi: Map<String, Value> =
        pres.phi_images().iter().enumerate().map(|(id, p)| (id.to_string(), poly_json(p))).collect();
    json!({
        "n": pres.n(),
        "variables": variables,
        "matrix_variables": { "n": pres.n() },
        "relations": relations,
        "phi": phi,
        "det_relation": poly_json(pres.det_relation()),
    })
}

fn to_text(pres: &Presentation) -> String {
    let mut out = format!("presentation of SL_{}\n", pres.n());
    let names: Vec<String> = (0..pres.vartable().len()).map(|i| pres.vartable().name(i)).collect();
    out.push_str(&format!("variables ({}): {}\n", names.len(), names.join(" ")));
    out.push_str(&format!("relations ({}):\n", pres.relations().len()));
    for r in pres.relations() {
        out.push_str(&format!("  [{}] {}\n", r.tag, r.poly));
    }
    out.push_str("phi:\n");
    for (id, img) in pres.phi_images().iter().enumerate() {
        out.push_str(&format!("  {} -> {}\n", names[id], img));
    }
    out.push_str(&format!("det relation: {}\n", pres.det_relation()));
    out
}

/// Renders a presentation. Canonical JSON ends with a newline and is
/// byte-identical across runs.
pub fn emit(pres: &Presentation, format: Format) -> Vec<u8> {
    match format {
        Format::CanonicalJson => {
            let mut s = serde_json::to_string_pretty(&to_json(pres)).expect("values serialize");
            s.push('\n');
            s.into_bytes()
        }
        Format::Text => to_text(pres).into_bytes(),
    }
}

/// Replaces each Plücker family by a row-reduced basis of its span.
pub fn reduce_plucker(pres: &Presentation) -> Presentation {
    let mut families: Vec<((Sign, usize, usize), Vec<Polynomial>)> = Vec::new();
    let mut others = Vec::new();
    for r in pres.relations() {
        match &r.tag {
            RelationTag::Plucker { sign, p, q, .. } | RelationTag::PluckerBasis { sign, p, q, .. } => {
                let key = (*sign, *p, *q);
                match families.last_mut() {
                    Some((k, polys)) if *k == key => polys.push(r.poly.clone()),
                    _ => families.push((key, vec![r.poly.clone()])),
                }
            }
            RelationTag::Sl2 { .. } => others.push(r.clone()),
        }
    }
    let mut relations = Vec::new();
    for ((sign, p, q), polys) in families {
        for (index, poly) in row_reduce(&polys).into_iter().enumerate() {
            relations.push(TaggedRelation { tag: RelationTag::PluckerBasis { sign, p, q, index }, poly });
        }
    }
    relations.extend(others);
    pres.with_relations(relations)
}

/// Nonzero rows of the reduced row echelon form of the coefficient matrix,
/// columns ordered by descending monomial.
fn row_reduce(polys: &[Polynomial]) -> Vec<Polynomial> {
    let table = polys[0].table().clone();
    let mut monos: Vec<Monomial> = Vec::new();
    for p in polys {
        for (m, _) in p.sorted_terms(&MonomialOrder::DegRevLex) {
            if !monos.contains(&m) {
                monos.push(m);
            }
        }
    }
    let order = MonomialOrder::DegRevLex;
    let n = table.len();
    monos.sort_by(|a, b| order.cmp_dense(&b.to_dense(n), &a.to_dense(n)));
    let rows: Vec<Vec<Rational>> = polys.iter().map(|p| monos.iter().map(|m| p.coefficient(m)).collect()).collect();
    let (r, pivots) = Matrix::from_rows(rows).rref();
    (0..pivots.len())
        .map(|i| Polynomial::from_terms(&table, monos.iter().cloned().zip(r.row(i).iter().cloned())))
        .collect()
}

fn perr(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("at {path}: {msg}"))
}

fn get<'a>(obj: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    obj.as_object()
        .ok_or_else(|| perr(path, "expected an object"))?
        .get(key)
        .ok_or_else(|| perr(path, format!("missing field `{key}`")))
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| perr(path, "expected a non-negative integer"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| perr(path, "expected an array"))
}

fn as_usize_list(v: &Value, path: &str) -> Result<Vec<usize>> {
    as_array(v, path)?.iter().enumerate().map(|(k, x)| as_usize(x, &format!("{path}[{k}]"))).collect()
}

fn parse_sign(v: &Value, path: &str) -> Result<Sign> {
    match v.as_str() {
        Some("+") => Ok(Sign::Plus),
        Some("-") | Some("\u{2212}") => Ok(Sign::Minus),
        _ => Err(perr(path, "expected \"+\" or \"-\"")),
    }
}

fn parse_bigint(v: &Value, path: &str) -> Result<BigInt> {
    v.as_str()
        .ok_or_else(|| perr(path, "expected a decimal string"))?
        .parse::<BigInt>()
        .map_err(|e| perr(path, e))
}

fn parse_poly(v: &Value, table: &Arc<VarTable>, path: &str) -> Result<Polynomial> {
    let mut terms = Vec::new();
    for (k, term) in as_array(v, path)?.iter().enumerate() {
        let tp = format!("{path}[{k}]");
        let parts = as_array(term, &tp)?;
        if parts.len() != 3 {
            return Err(perr(&tp, "expected [num, den, factors]"));
        }
        let num = parse_bigint(&parts[0], &format!("{tp}[0]"))?;
        let den = parse_bigint(&parts[1], &format!("{tp}[1]"))?;
        if den.is_zero() {
            return Err(perr(&format!("{tp}[1]"), "zero denominator"));
        }
        let mut pairs = Vec::new();
        for (f, factor) in as_array(&parts[2], &format!("{tp}[2]"))?.iter().enumerate() {
            let fp = format!("{tp}[2][{f}]");
            let ve = as_usize_list(factor, &fp)?;
            if ve.len() != 2 || ve[1] == 0 {
                return Err(perr(&fp, "expected [variable id, positive exponent]"));
            }
            if ve[0] >= table.len() {
                return Err(perr(&fp, format!("undeclared variable id {}", ve[0])));
            }
            pairs.push((ve[0], ve[1] as u32));
        }
        terms.push((Monomial::from_pairs(pairs), Rational::new(num, den)));
    }
    Ok(Polynomial::from_terms(table, terms))
}

fn parse_tag(v: &Value, path: &str) -> Result<RelationTag> {
    let kind = get(v, "kind", path)?.as_str().ok_or_else(|| perr(&format!("{path}.kind"), "expected a string"))?;
    let pp = format!("{path}.params");
    let params = get(v, "params", path)?;
    let field = |name: &str| get(params, name, &pp).and_then(|x| as_usize(x, &format!("{pp}.{name}")));
    match kind {
        "plucker" => Ok(RelationTag::Plucker {
            sign: parse_sign(get(params, "sign", &pp)?, &format!("{pp}.sign"))?,
            p: field("p")?,
            q: field("q")?,
            i: as_usize_list(get(params, "i", &pp)?, &format!("{pp}.i"))?,
            j: as_usize_list(get(params, "j", &pp)?, &format!("{pp}.j"))?,
        }),
        "plucker-basis" => Ok(RelationTag::PluckerBasis {
            sign: parse_sign(get(params, "sign", &pp)?, &format!("{pp}.sign"))?,
            p: field("p")?,
            q: field("q")?,
            index: field("index")?,
        }),
        "sl2" => Ok(RelationTag::Sl2 { d: field("d")? }),
        other => Err(perr(&format!("{path}.kind"), format!("unknown relation kind `{other}`"))),
    }
}

/// Reads canonical JSON back. Syntax errors report line and column; schema
/// errors report the JSON path of the offending value.
pub fn parse(bytes: &[u8]) -> Result<Presentation> {
    let root: Value = serde_json::from_slice(bytes)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    let n = as_usize(get(&root, "n", "$")?, "$.n")?;
    if n < 2 {
        return Err(perr("$.n", "n must be at least 2"));
    }
    let mn = as_usize(get(get(&root, "matrix_variables", "$")?, "n", "$.matrix_variables")?, "$.matrix_variables.n")?;
    if mn != n {
        return Err(perr("$.matrix_variables.n", format!("expected {n}, found {mn}")));
    }
    let mut descs = Vec::new();
    for (k, var) in as_array(get(&root, "variables", "$")?, "$.variables")?.iter().enumerate() {
        let path = format!("$.variables[{k}]");
        let sign = parse_sign(get(var, "sign", &path)?, &format!("{path}.sign"))?;
        let seq = IndexSeq::new(n, as_usize_list(get(var, "indices", &path)?, &format!("{path}.indices"))?)
            .map_err(|e| perr(&format!("{path}.indices"), e))?;
        let desc = VarDesc::Pres(PresVar::new(sign, seq));
        if descs.contains(&desc) {
            return Err(perr(&path, format!("duplicate variable `{desc}`")));
        }
        descs.push(desc);
    }
    let table = VarTable::new(descs);
    let canonical = build_vartable(n)?;
    if *table != *canonical {
        return Err(perr("$.variables", "variables do not match the canonical enumeration"));
    }
    let mt = matrix_table(n);
    let mut relations = Vec::new();
    for (k, rel) in as_array(get(&root, "relations", "$")?, "$.relations")?.iter().enumerate() {
        let path = format!("$.relations[{k}]");
        let tag = parse_tag(get(rel, "tag", &path)?, &format!("{path}.tag"))?;
        let poly = parse_poly(get(rel, "poly", &path)?, &table, &format!("{path}.poly"))?;
        relations.push(TaggedRelation { tag, poly });
    }
    let phi_obj =
        get(&root, "phi", "$")?.as_object().ok_or_else(|| perr("$.phi", "expected an object"))?;
    let mut phi_map: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for (key, val) in phi_obj {
        let path = format!("$.phi.{key}");
        let id: usize = key.parse().map_err(|_| perr(&path, "key is not a variable id"))?;
        if id >= table.len() {
            return Err(perr(&path, format!("undeclared variable id {id}")));
        }
        phi_map.insert(id, parse_poly(val, &mt, &path)?);
    }
    if phi_map.len() != table.len() {
        return Err(perr("$.phi", format!("expected {} images, found {}", table.len(), phi_map.len())));
    }
    let det_relation = parse_poly(get(&root, "det_relation", "$")?, &mt, "$.det_relation")?;
    Ok(Presentation::from_parts(n, table, relations, phi_map.into_values().collect(), det_relation))
}
