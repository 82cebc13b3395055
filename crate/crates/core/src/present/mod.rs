//! Presentations of link quandles, groups and biquandles, and coloring counts
//! by finite targets.

mod abelian;
mod adconj;
mod color;
mod diagram;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use abelian::{abelianization, smith_normal_form, Abelianization};
pub use adconj::adconj;
pub use color::{
    count_biquandle_colorings, count_biquandle_colorings_with, count_group_homomorphisms,
    count_group_homomorphisms_with, count_quandle_colorings, count_quandle_colorings_with, ColoringCount,
};
pub use diagram::{arcs, semiarc_biquandle, wirtinger_group, wirtinger_quandle, ArcData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PresentationKind {
    Quandle,
    Group,
    Biquandle,
}

impl fmt::Display for PresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PresentationKind::Quandle => "quandle",
            PresentationKind::Group => "group",
            PresentationKind::Biquandle => "biquandle",
        })
    }
}

/// One of the four biquandle operations; quandle words use only `Up`
/// (`^x`) and `UpBar` (`^{~x}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpKind {
    Up,
    UpBar,
    Down,
    DownBar,
}

impl OpKind {
    pub const ALL: [OpKind; 4] = [OpKind::Up, OpKind::UpBar, OpKind::Down, OpKind::DownBar];

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    pub fn is_quandle_op(self) -> bool {
        matches!(self, OpKind::Up | OpKind::UpBar)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Op {
    pub op: OpKind,
    pub arg: String,
}

/// `base` acted on by each of `ops` in turn, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    pub base: String,
    pub ops: Vec<Op>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub gen: String,
    pub exp: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Relation {
    /// `lhs = rhs` (quandle and biquandle kinds).
    Equation { lhs: String, rhs: Word },
    /// A group word equal to the identity, read left to right.
    Relator { relator: Vec<Letter> },
}

impl Relation {
    pub fn equation(lhs: impl Into<String>, base: impl Into<String>, ops: Vec<(OpKind, String)>) -> Relation {
        Relation::Equation {
            lhs: lhs.into(),
            rhs: Word { base: base.into(), ops: ops.into_iter().map(|(op, arg)| Op { op, arg }).collect() },
        }
    }

    pub fn relator(letters: Vec<(String, i32)>) -> Relation {
        Relation::Relator { relator: letters.into_iter().map(|(g, exp)| Letter { gen: g, exp }).collect() }
    }

    fn symbols(&self) -> Vec<&str> {
        match self {
            Relation::Equation { lhs, rhs } => std::iter::once(lhs.as_str())
                .chain(std::iter::once(rhs.base.as_str()))
                .chain(rhs.ops.iter().map(|o| o.arg.as_str()))
                .collect(),
            Relation::Relator { relator } => relator.iter().map(|l| l.gen.as_str()).collect(),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Equation { lhs, rhs } => {
                write!(f, "{lhs} = {}", rhs.base)?;
                for o in &rhs.ops {
                    let s = match o.op {
                        OpKind::Up => "^",
                        OpKind::UpBar => "^~",
                        OpKind::Down => "_",
                        OpKind::DownBar => "_~",
                    };
                    write!(f, " {s}{}", o.arg)?;
                }
                Ok(())
            }
            Relation::Relator { relator } => {
                if relator.is_empty() {
                    return f.write_str("1");
                }
                let parts: Vec<String> = relator
                    .iter()
                    .map(|l| if l.exp == 1 { l.gen.clone() } else { format!("{}^{}", l.gen, l.exp) })
                    .collect();
                f.write_str(&parts.join(" "))
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentError {
    #[error("expected a {expected} presentation, found {found}")]
    KindMismatch { expected: PresentationKind, found: PresentationKind },
    #[error("relation {relation} uses undeclared generator `{name}`")]
    UnknownGenerator { relation: usize, name: String },
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("relation {0} does not fit the presentation kind")]
    WrongRelationShape(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub kind: PresentationKind,
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(
        kind: PresentationKind,
        generators: Vec<String>,
        relations: Vec<Relation>,
    ) -> Result<Presentation, PresentError> {
        let p = Presentation { kind, generators, relations };
        p.check()?;
        Ok(p)
    }

    /// Every symbol is declared once and every relation fits `kind`.
    pub fn check(&self) -> Result<(), PresentError> {
        self.index().map(|_| ())
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub(crate) fn index(&self) -> Result<HashMap<&str, usize>, PresentError> {
        let mut idx = HashMap::new();
        for (i, g) in self.generators.iter().enumerate() {
            if idx.insert(g.as_str(), i).is_some() {
                return Err(PresentError::DuplicateGenerator(g.clone()));
            }
        }
        for (r, rel) in self.relations.iter().enumerate() {
            let shape_ok = match (self.kind, rel) {
                (PresentationKind::Group, Relation::Relator { .. }) => true,
                (PresentationKind::Quandle, Relation::Equation { rhs, .. }) => {
                    rhs.ops.iter().all(|o| o.op.is_quandle_op())
                }
                (PresentationKind::Biquandle, Relation::Equation { .. }) => true,
                _ => false,
            };
            if !shape_ok {
                return Err(PresentError::WrongRelationShape(r));
            }
            if let Some(name) = rel.symbols().into_iter().find(|s| !idx.contains_key(s)) {
                return Err(PresentError::UnknownGenerator { relation: r, name: name.to_string() });
            }
        }
        Ok(idx)
    }

    pub(crate) fn expect_kind(&self, kind: PresentationKind) -> Result<(), PresentError> {
        if self.kind != kind {
            return Err(PresentError::KindMismatch { expected: kind, found: self.kind });
        }
        Ok(())
    }

    /// Renames generators by `f`; relations follow.
    pub fn rename(&self, f: impl Fn(&str) -> String) -> Presentation {
        let relations = self
            .relations
            .iter()
            .map(|r| match r {
                Relation::Equation { lhs, rhs } => Relation::Equation {
                    lhs: f(lhs),
                    rhs: Word {
                        base: f(&rhs.base),
                        ops: rhs.ops.iter().map(|o| Op { op: o.op, arg: f(&o.arg) }).collect(),
                    },
                },
                Relation::Relator { relator } => Relation::Relator {
                    relator: relator.iter().map(|l| Letter { gen: f(&l.gen), exp: l.exp }).collect(),
                },
            })
            .collect();
        Presentation { kind: self.kind, generators: self.generators.iter().map(|g| f(g)).collect(), relations }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
        write!(f, "<{} | {}>", self.generators.join(", "), rels.join(", "))
    }
}
