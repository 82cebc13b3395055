use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use vlink::algebra::{BiquandleTables, FiniteGroup, GroupTables, QuandleTables};
use vlink::catalog::{catalog, lookup, resolve};
use vlink::gauss::{apply_move, enumerate_moves, supporting_genus_report, GaussCode, MoveInstance, MoveKind};
use vlink::present::{
    abelianization, count_biquandle_colorings_with, count_quandle_colorings_with, semiarc_biquandle, wirtinger_group,
    wirtinger_quandle, Presentation,
};
use vlink::ribbon::RibbonData;
use vlink::spun::{sheet_biquandle, DoublePointData};
use vlink::Exec;

use crate::targets::{self, Algebra};
use crate::{CliError, Kind};

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

fn code(text: &str) -> Result<GaussCode, CliError> {
    resolve(text).map_err(domain)
}

fn presentation_value(p: &Presentation) -> Value {
    let mut v = to_value(p);
    v["text"] = Value::String(p.to_string());
    v
}

fn read_file(flag: &str, path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{flag} `{path}`: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::Domain(format!("invalid {what}: {e}")))
}

fn validate_json(v: Value) -> Result<Value, CliError> {
    let has = |k: &str| v.get(k).is_some();
    if has("bases") {
        let r: RibbonData = parse_json("ribbon data", v)?;
        Ok(json!({"kind": "ribbon_data", "valid": true, "genus": r.genus(), "bases": r.num_bases(), "handles": r.handles().len()}))
    } else if has("sheets") {
        let d: DoublePointData = parse_json("double point data", v)?;
        let d = DoublePointData::new(d.sheets, d.curves).map_err(domain)?;
        Ok(json!({"kind": "double_point_data", "valid": true, "realizability": d.realizability, "sheets": d.sheets.len(), "curves": d.curves.len()}))
    } else if has("mul") {
        let t: GroupTables = parse_json("group table", v)?;
        let g = FiniteGroup::validate(&t).map_err(domain)?;
        Ok(json!({"kind": "group", "valid": true, "order": g.order(), "abelian": g.is_abelian()}))
    } else if has("up") {
        let t: BiquandleTables = parse_json("biquandle tables", v)?;
        let b = vlink::algebra::validate_biquandle(&t).map_err(domain)?;
        Ok(json!({"kind": "biquandle", "valid": true, "size": b.size(), "alternative_axioms": b.satisfies_alternative_axioms()}))
    } else if has("op") {
        let t: QuandleTables = parse_json("quandle tables", v)?;
        let q = vlink::algebra::validate_quandle(&t).map_err(domain)?;
        Ok(json!({"kind": "quandle", "valid": true, "size": q.size(), "involutory": q.is_involutory()}))
    } else {
        Err(CliError::Domain("unrecognized JSON document".into()))
    }
}

fn validate_code(c: GaussCode) -> Value {
    json!({"kind": "gauss_code", "valid": true, "code": c.canonical_string(), "components": c.num_components(), "crossings": c.num_crossings()})
}

pub fn validate(input: &str) -> Result<Value, CliError> {
    let mut report = if lookup(input).is_some() || !Path::new(input).exists() {
        validate_code(code(input)?)
    } else {
        let text = read_file("validate", input)?;
        match serde_json::from_str::<Value>(&text) {
            Ok(v) if v.is_object() => validate_json(v)?,
            _ => validate_code(vlink::gauss::parse_gauss(text.trim()).map_err(domain)?),
        }
    };
    report["input"] = Value::String(input.to_string());
    Ok(report)
}

pub fn genus(text: &str) -> Result<Value, CliError> {
    let c = code(text)?;
    let r = supporting_genus_report(&c);
    let mut v = to_value(&r);
    v["realizable"] = Value::Bool(r.genus == 0);
    v["code"] = Value::String(c.canonical_string());
    Ok(v)
}

pub fn invariants(text: &str, specs: &[String]) -> Result<Value, CliError> {
    let c = code(text)?;
    let targets = if specs.is_empty() {
        targets::defaults()
    } else {
        specs.iter().map(|s| targets::parse(s)).collect::<Result<Vec<_>, _>>()?
    };
    let (wq, sb) = (wirtinger_quandle(&c), semiarc_biquandle(&c));
    let counts = Exec::Parallel.map(&targets, |t| {
        let (kind, count) = match &t.algebra {
            Algebra::Quandle(q) => ("quandle", count_quandle_colorings_with(&wq, q, &t.name, Exec::Sequential)),
            Algebra::Biquandle(b) => ("biquandle", count_biquandle_colorings_with(&sb, b, &t.name, Exec::Sequential)),
        };
        count.map(|n| {
            let mut v = to_value(&n);
            v["kind"] = Value::String(kind.into());
            (t.name.clone(), v)
        })
    });
    let counts: BTreeMap<String, Value> = counts.into_iter().collect::<Result<_, _>>().map_err(domain)?;
    let genus = supporting_genus_report(&c);
    let ab = abelianization(&wirtinger_group(&c)).map_err(domain)?;
    Ok(json!({
        "input": text,
        "code": c.canonical_string(),
        "genus": genus.genus,
        "realizable": genus.genus == 0,
        "disconnected": genus.disconnected,
        "abelianization": {"free_rank": ab.free_rank, "torsion": ab.torsion, "text": ab.to_string()},
        "counts": counts,
    }))
}

pub fn present(text: &str, kind: Kind) -> Result<Value, CliError> {
    let c = code(text)?;
    let p = match kind {
        Kind::Quandle => wirtinger_quandle(&c),
        Kind::Group => wirtinger_group(&c),
        Kind::Biquandle => semiarc_biquandle(&c),
    };
    Ok(presentation_value(&p))
}

pub fn abelianize(text: &str) -> Result<Value, CliError> {
    let c = code(text)?;
    let a = abelianization(&wirtinger_group(&c)).map_err(domain)?;
    let mut v = to_value(&a);
    v["text"] = Value::String(a.to_string());
    v["code"] = Value::String(c.canonical_string());
    Ok(v)
}

fn move_kind(text: &str) -> Result<MoveKind, CliError> {
    serde_json::from_value(Value::String(text.to_string())).map_err(|_| {
        CliError::Usage(format!(
            "--kind `{text}`: expected one of R1_insert, R1_delete, R2_insert, R2_delete, R3, Forbidden"
        ))
    })
}

fn moves_of(c: &GaussCode, kind: Option<MoveKind>) -> Vec<MoveInstance> {
    enumerate_moves(c).into_iter().filter(|m| kind.is_none_or(|k| m.kind() == k)).collect()
}

pub fn move_list(text: &str, kind: Option<&str>) -> Result<Value, CliError> {
    let c = code(text)?;
    let kind = kind.map(move_kind).transpose()?;
    let moves = moves_of(&c, kind);
    Ok(json!({"code": c.canonical_string(), "count": moves.len(), "moves": moves}))
}

pub fn move_apply(text: &str, kind: &str, site: &str) -> Result<Value, CliError> {
    let c = code(text)?;
    let k = move_kind(kind)?;
    let m = if let Ok(i) = site.trim().parse::<usize>() {
        let moves = moves_of(&c, Some(k));
        moves.get(i).cloned().ok_or_else(|| domain(format!("site index {i} out of range: {} {kind} sites", moves.len())))?
    } else {
        let site: Value =
            serde_json::from_str(site).map_err(|e| CliError::Usage(format!("--site `{site}`: not JSON: {e}")))?;
        serde_json::from_value(json!({"kind": kind, "site": site}))
            .map_err(|e| CliError::Usage(format!("--site: does not describe a {kind} site: {e}")))?
    };
    let moved = apply_move(&c, &m).map_err(domain)?;
    Ok(json!({"input": c.canonical_string(), "move": m, "result": moved.canonical_string()}))
}

pub fn move_orbit(text: &str, depth: usize, welded: bool, cap: usize) -> Result<Value, CliError> {
    let start = code(text)?;
    let mut seen = BTreeSet::from([start.canonical_string()]);
    let mut queue = VecDeque::from([(start.clone(), 0usize)]);
    let mut truncated = false;
    'search: while let Some((c, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        for m in enumerate_moves(&c) {
            if !welded && m.kind() == MoveKind::Forbidden {
                continue;
            }
            let next = apply_move(&c, &m).map_err(domain)?;
            if seen.insert(next.canonical_string()) {
                if seen.len() >= cap {
                    truncated = true;
                    break 'search;
                }
                queue.push_back((next, d + 1));
            }
        }
    }
    Ok(json!({
        "start": start.canonical_string(),
        "depth": depth,
        "welded": welded,
        "cap": cap,
        "truncated": truncated,
        "size": seen.len(),
        "codes": seen,
    }))
}

pub fn tube(text: &str) -> Result<Value, CliError> {
    let c = code(text)?;
    let r = vlink::ribbon::tube(&c).map_err(domain)?;
    Ok(json!({"code": c.canonical_string(), "genus": r.genus(), "ribbon": r}))
}

pub fn ribbon_quandle(path: &str) -> Result<Value, CliError> {
    let text = read_file("ribbon-quandle", path)?;
    let r: RibbonData = serde_json::from_str(&text).map_err(|e| CliError::Domain(format!("invalid ribbon data: {e}")))?;
    let mut v = presentation_value(&vlink::ribbon::ribbon_quandle(&r));
    v["genus"] = json!(r.genus());
    Ok(v)
}

pub fn spin(text: &str) -> Result<Value, CliError> {
    let c = code(text)?;
    let d = vlink::spun::spin(&c).map_err(domain)?;
    let p = sheet_biquandle(&d).map_err(domain)?;
    Ok(json!({"code": c.canonical_string(), "data": d, "sheet_biquandle": presentation_value(&p)}))
}

pub fn catalog_list() -> Result<Value, CliError> {
    Ok(to_value(&catalog()))
}

pub fn catalog_show(name: &str) -> Result<Value, CliError> {
    let e = lookup(name).ok_or_else(|| {
        let names: Vec<&str> = catalog().iter().map(|e| e.name).collect();
        CliError::Domain(format!("no catalog entry `{name}`; known: {}", names.join(", ")))
    })?;
    let mut v = to_value(&e);
    v["genus"] = json!(supporting_genus_report(&e.code).genus);
    Ok(v)
}
