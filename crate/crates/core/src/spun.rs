//! Double point curve data of broken surface diagrams, the spinning map from
//! knot codes, and sheet presentations.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gauss::{GaussCode, Sign};
use crate::present::{OpKind, Presentation, PresentationKind, Relation};

/// The four sheets meeting along one double point curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Curve {
    pub over_in: String,
    pub over_out: String,
    pub under_in: String,
    pub under_out: String,
    pub sign: Sign,
}

/// Whether the data is known to come from an embedded surface.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Realizability {
    /// Produced by [`spin`].
    Spun,
    #[default]
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublePointData {
    pub sheets: Vec<String>,
    pub curves: Vec<Curve>,
    /// Input data is never trusted to be realizable.
    #[serde(skip_deserializing, default)]
    pub realizability: Realizability,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpunError {
    #[error("spinning needs a one-component code, got {0} components")]
    MultiComponent(usize),
    #[error("invalid double point data: {0}")]
    InvalidData(String),
}

impl DoublePointData {
    /// Checks that sheets are distinct and every curve slot names a sheet.
    pub fn new(sheets: Vec<String>, curves: Vec<Curve>) -> Result<DoublePointData, SpunError> {
        let d = DoublePointData { sheets, curves, realizability: Realizability::Unchecked };
        d.index()?;
        Ok(d)
    }

    fn index(&self) -> Result<HashMap<&str, usize>, SpunError> {
        let mut idx = HashMap::new();
        for (i, s) in self.sheets.iter().enumerate() {
            if idx.insert(s.as_str(), i).is_some() {
                return Err(SpunError::InvalidData(format!("sheet `{s}` declared twice")));
            }
        }
        for (k, c) in self.curves.iter().enumerate() {
            for s in [&c.over_in, &c.over_out, &c.under_in, &c.under_out] {
                if !idx.contains_key(s.as_str()) {
                    return Err(SpunError::InvalidData(format!("curve {k} names undeclared sheet `{s}`")));
                }
            }
        }
        Ok(idx)
    }
}

/// Spins a knot code: sheets are the semi-arcs crossed with a circle and each
/// crossing sweeps out one double point curve between the same semi-arcs.
pub fn spin(code: &GaussCode) -> Result<DoublePointData, SpunError> {
    if !code.is_knot() {
        return Err(SpunError::MultiComponent(code.num_components()));
    }
    let comp = &code.components()[0];
    let len = comp.len().max(1);
    let name = |i: usize| format!("s{}", i + 1);
    let curves = code
        .crossings()
        .values()
        .map(|c| Curve {
            over_in: name(code.prev_pos(c.over).idx),
            over_out: name(c.over.idx),
            under_in: name(code.prev_pos(c.under).idx),
            under_out: name(c.under.idx),
            sign: c.sign,
        })
        .collect();
    Ok(DoublePointData { sheets: (0..len).map(name).collect(), curves, realizability: Realizability::Spun })
}

/// Sheet biquandle: per curve, `under_out = under_in ^ over_in` and
/// `over_out = over_in _ under_in`, barred for negative curves.
pub fn sheet_biquandle(d: &DoublePointData) -> Result<Presentation, SpunError> {
    d.index()?;
    let mut relations = Vec::new();
    for c in &d.curves {
        let (up, down) = match c.sign {
            Sign::Pos => (OpKind::Up, OpKind::Down),
            Sign::Neg => (OpKind::UpBar, OpKind::DownBar),
        };
        relations.push(Relation::equation(c.under_out.clone(), c.under_in.clone(), vec![(up, c.over_in.clone())]));
        relations.push(Relation::equation(c.over_out.clone(), c.over_in.clone(), vec![(down, c.under_in.clone())]));
    }
    Ok(Presentation { kind: PresentationKind::Biquandle, generators: d.sheets.clone(), relations })
}

/// Faces: classes of sheets glued across the over side of each curve.
/// Returns the face of every sheet, faces numbered by their first sheet.
pub fn faces(d: &DoublePointData) -> Result<Vec<usize>, SpunError> {
    let idx = d.index()?;
    let n = d.sheets.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for c in &d.curves {
        let (a, b) = (find(&mut parent, idx[c.over_in.as_str()]), find(&mut parent, idx[c.over_out.as_str()]));
        let (lo, hi) = (a.min(b), a.max(b));
        parent[hi] = lo;
    }
    let mut label = HashMap::new();
    Ok((0..n)
        .map(|s| {
            let r = find(&mut parent, s);
            let next = label.len();
            *label.entry(r).or_insert(next)
        })
        .collect())
}

/// Face quandle `f1..`: per curve, `under_out = under_in ^ over` with the
/// faces of the named sheets, barred for negative curves.
pub fn face_quandle(d: &DoublePointData) -> Result<Presentation, SpunError> {
    let face = faces(d)?;
    let idx = d.index()?;
    let count = face.iter().max().map_or(0, |m| m + 1);
    let name = |s: &str| format!("f{}", face[idx[s]] + 1);
    let relations = d
        .curves
        .iter()
        .map(|c| {
            let op = if c.sign == Sign::Pos { OpKind::Up } else { OpKind::UpBar };
            Relation::equation(name(&c.under_out), name(&c.under_in), vec![(op, name(&c.over_in))])
        })
        .collect();
    Ok(Presentation { kind: PresentationKind::Quandle, generators: (1..=count).map(|i| format!("f{i}")).collect(), relations })
}
