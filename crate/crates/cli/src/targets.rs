//! Coloring target specs.
//!
//! ```text
//! dihedral:n | trivial:n | alexander:p,t          quandles
//! conj:GROUP | coset:GROUP:P-elements:m          quandles from a group
//! alexander:p,s,t | induced:dihedral:n           biquandles
//! table:FILE                                     quandle or biquandle tables
//! ```
//!
//! `GROUP` is a JSON file `{"n": .., "mul": [[..]]}` or a built-in group name
//! such as `S3`, `A4` or `Q8`.

use std::path::Path;

use serde_json::Value;
use vlink::algebra::{
    alexander_biquandle, alexander_quandle, conjugation_quandle, coset_quandle, dihedral_quandle, small_groups,
    trivial_quandle, validate_biquandle, validate_quandle, AlgebraError, BiquandleTables, FiniteBiquandle,
    FiniteGroup, FiniteQuandle, GroupTables, QuandleTables,
};

use crate::CliError;

pub enum Algebra {
    Quandle(FiniteQuandle),
    Biquandle(FiniteBiquandle),
}

pub struct Target {
    pub name: String,
    pub algebra: Algebra,
}

fn usage(spec: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("--targets `{spec}`: {msg}"))
}

fn domain(spec: &str, e: AlgebraError) -> CliError {
    CliError::Domain(format!("target `{spec}`: {e}"))
}

fn numbers(spec: &str, text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| usage(spec, format!("`{x}` is not an integer")))).collect()
}

fn read_json(spec: &str, path: &str) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(spec, format!("cannot read `{path}`: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::Domain(format!("`{path}` is not valid JSON: {e}")))
}

pub fn group(spec: &str, source: &str) -> Result<FiniteGroup, CliError> {
    if !Path::new(source).exists() {
        if let Some((_, g)) = small_groups(12).into_iter().find(|(n, _)| n == source) {
            return Ok(g);
        }
        return Err(usage(spec, format!("`{source}` is neither a file nor a built-in group")));
    }
    let tables: GroupTables = serde_json::from_value(read_json(spec, source)?)
        .map_err(|e| CliError::Domain(format!("`{source}` is not a group table: {e}")))?;
    FiniteGroup::validate(&tables).map_err(|e| domain(spec, e))
}

/// Reads quandle or biquandle tables, telling them apart by their keys.
pub fn table_algebra(spec: &str, path: &str) -> Result<Algebra, CliError> {
    let v = read_json(spec, path)?;
    if v.get("up").is_some() {
        let t: BiquandleTables = serde_json::from_value(v)
            .map_err(|e| CliError::Domain(format!("`{path}` is not a biquandle table: {e}")))?;
        validate_biquandle(&t).map(Algebra::Biquandle).map_err(|e| domain(spec, e))
    } else {
        let t: QuandleTables = serde_json::from_value(v)
            .map_err(|e| CliError::Domain(format!("`{path}` is not a quandle table: {e}")))?;
        validate_quandle(&t).map(Algebra::Quandle).map_err(|e| domain(spec, e))
    }
}

pub fn parse(spec: &str) -> Result<Target, CliError> {
    let (head, rest) = spec.split_once(':').ok_or_else(|| usage(spec, "expected KIND:ARGS"))?;
    let size = |text: &str| text.parse::<usize>().map_err(|_| usage(spec, format!("`{text}` is not a size")));
    let algebra = match head {
        "dihedral" => Algebra::Quandle(dihedral_quandle(size(rest)?).map_err(|e| domain(spec, e))?),
        "trivial" => Algebra::Quandle(trivial_quandle(size(rest)?).map_err(|e| domain(spec, e))?),
        "alexander" => match *numbers(spec, rest)?.as_slice() {
            [p, t] if p > 0 => Algebra::Quandle(alexander_quandle(p as u64, t).map_err(|e| domain(spec, e))?),
            [p, s, t] if p > 0 => {
                Algebra::Biquandle(alexander_biquandle(p as u64, s, t).map_err(|e| domain(spec, e))?)
            }
            _ => return Err(usage(spec, "expected alexander:p,t or alexander:p,s,t with p > 0")),
        },
        "induced" => match parse(rest)?.algebra {
            Algebra::Quandle(q) => Algebra::Biquandle(FiniteBiquandle::from_quandle(&q)),
            Algebra::Biquandle(_) => return Err(usage(spec, "induced: needs a quandle spec")),
        },
        "conj" => Algebra::Quandle(conjugation_quandle(&group(spec, rest)?)),
        "coset" => {
            let mut parts = rest.rsplitn(3, ':');
            let (Some(m), Some(p), Some(source)) = (parts.next(), parts.next(), parts.next()) else {
                return Err(usage(spec, "expected coset:GROUP:P-elements:m"));
            };
            let g = group(spec, source)?;
            let p: Vec<usize> = numbers(spec, p)?.into_iter().map(|x| x as usize).collect();
            Algebra::Quandle(coset_quandle(&g, &p, size(m)?).map_err(|e| domain(spec, e))?)
        }
        "table" => table_algebra(spec, rest)?,
        _ => return Err(usage(spec, format!("unknown target kind `{head}`"))),
    };
    Ok(Target { name: spec.to_string(), algebra })
}

/// The built-in quandle and biquandle libraries.
pub fn defaults() -> Vec<Target> {
    let q = vlink::algebra::quandle_library()
        .into_iter()
        .map(|q| Target { name: q.name, algebra: Algebra::Quandle(q.quandle) });
    let b = vlink::algebra::biquandle_library()
        .into_iter()
        .map(|b| Target { name: b.name, algebra: Algebra::Biquandle(b.biquandle) });
    q.chain(b).collect()
}
