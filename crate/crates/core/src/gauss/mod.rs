//! Gauss codes of virtual link diagrams.
//!
//! A code is a list of components, each a cyclic sequence of passages through
//! classical crossings. Virtual crossings are never recorded: two diagrams that
//! differ by virtual moves have the same code.

mod braid;
mod canon;
mod genus;
mod moves;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use braid::braid_closure;
pub use genus::{is_realizable, supporting_genus, supporting_genus_report, GenusReport};
pub use moves::{
    apply_move, apply_move_with_inverse, enumerate_moves, Gap, MoveInstance, MoveKind, Segment,
};
pub use parse::{parse_gauss, serialize_gauss};

/// Which strand a passage lies on at its crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn letter(self) -> char {
        match self {
            Role::Over => 'O',
            Role::Under => 'U',
        }
    }
}

/// Crossing sign (writhe contribution).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i8(s: i8) -> Option<Sign> {
        match s {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Passage {
    pub crossing: u32,
    pub role: Role,
    pub sign: Sign,
}

impl Passage {
    pub fn new(crossing: u32, role: Role, sign: Sign) -> Self {
        Self { crossing, role, sign }
    }

    pub fn over(crossing: u32, sign: Sign) -> Self {
        Self::new(crossing, Role::Over, sign)
    }

    pub fn under(crossing: u32, sign: Sign) -> Self {
        Self::new(crossing, Role::Under, sign)
    }
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.role.letter(), self.crossing, self.sign.symbol())
    }
}

/// Location of a passage: component index and position within the component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Position {
    pub comp: usize,
    pub idx: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingInfo {
    pub over: Position,
    pub under: Position,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Violation {
    /// The crossing id is zero; ids are positive.
    ZeroId,
    /// The crossing appears more than once with this role.
    DuplicateRole(u32, Role),
    SignMismatch(u32),
    UnpairedCrossing(u32),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroId => write!(f, "crossing id 0 is not allowed"),
            Violation::DuplicateRole(id, role) => {
                write!(f, "crossing {id} appears more than once as {role:?}")
            }
            Violation::SignMismatch(id) => write!(f, "crossing {id} has passages of opposite sign"),
            Violation::UnpairedCrossing(id) => {
                write!(f, "crossing {id} does not have both an over and an under passage")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaussError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid Gauss code: {}", list_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("move pattern mismatch: {0}")]
    PatternMismatch(String),
    #[error("invalid move site: {0}")]
    InvalidSite(String),
}

fn list_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// Checks the pairing invariants of raw component data.
pub fn validate(components: &[Vec<Passage>]) -> Vec<Violation> {
    let mut seen: BTreeMap<u32, (u8, u8, Option<Sign>, bool)> = BTreeMap::new();
    let mut out = Vec::new();
    let mut zero = false;
    for p in components.iter().flatten() {
        if p.crossing == 0 {
            zero = true;
            continue;
        }
        let e = seen.entry(p.crossing).or_insert((0, 0, None, false));
        match p.role {
            Role::Over => e.0 += 1,
            Role::Under => e.1 += 1,
        }
        match e.2 {
            None => e.2 = Some(p.sign),
            Some(s) if s != p.sign => e.3 = true,
            _ => {}
        }
    }
    if zero {
        out.push(Violation::ZeroId);
    }
    for (&id, &(o, u, _, mismatch)) in &seen {
        if o > 1 {
            out.push(Violation::DuplicateRole(id, Role::Over));
        }
        if u > 1 {
            out.push(Violation::DuplicateRole(id, Role::Under));
        }
        if o == 0 || u == 0 {
            out.push(Violation::UnpairedCrossing(id));
        }
        if mismatch {
            out.push(Violation::SignMismatch(id));
        }
    }
    out
}

/// A validated Gauss code.
///
/// Equality and hashing are up to component rotation, component reordering and
/// crossing relabeling; they go through [`GaussCode::canonical_string`].
#[derive(Clone, Debug)]
pub struct GaussCode {
    components: Vec<Vec<Passage>>,
}

impl GaussCode {
    pub fn new(components: Vec<Vec<Passage>>) -> Result<Self, GaussError> {
        let violations = validate(&components);
        if violations.is_empty() {
            Ok(Self { components })
        } else {
            Err(GaussError::Invalid(violations))
        }
    }

    /// The crossingless unknot: one component with no passages.
    pub fn unknot() -> Self {
        Self { components: vec![Vec::new()] }
    }

    /// `n` crossingless circles.
    pub fn unlink(n: usize) -> Self {
        Self { components: vec![Vec::new(); n] }
    }

    pub fn components(&self) -> &[Vec<Passage>] {
        &self.components
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn num_crossings(&self) -> usize {
        self.components.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn num_passages(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    pub fn max_crossing_id(&self) -> u32 {
        self.components.iter().flatten().map(|p| p.crossing).max().unwrap_or(0)
    }

    pub fn passage(&self, pos: Position) -> Passage {
        self.components[pos.comp][pos.idx]
    }

    /// Position following `pos` cyclically on its component.
    pub fn next_pos(&self, pos: Position) -> Position {
        let len = self.components[pos.comp].len();
        Position { comp: pos.comp, idx: (pos.idx + 1) % len }
    }

    pub fn prev_pos(&self, pos: Position) -> Position {
        let len = self.components[pos.comp].len();
        Position { comp: pos.comp, idx: (pos.idx + len - 1) % len }
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(comp, c)| (0..c.len()).map(move |idx| Position { comp, idx }))
    }

    /// Over/under location and sign of every crossing, keyed by id.
    pub fn crossings(&self) -> BTreeMap<u32, CrossingInfo> {
        let mut over = BTreeMap::new();
        let mut under = BTreeMap::new();
        let mut sign = BTreeMap::new();
        for pos in self.positions() {
            let p = self.passage(pos);
            sign.insert(p.crossing, p.sign);
            match p.role {
                Role::Over => over.insert(p.crossing, pos),
                Role::Under => under.insert(p.crossing, pos),
            };
        }
        sign.into_iter()
            .map(|(id, s)| (id, CrossingInfo { over: over[&id], under: under[&id], sign: s }))
            .collect()
    }

    /// Code with every crossing renumbered by `f`. `f` must be injective.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> GaussCode {
        let components = self
            .components
            .iter()
            .map(|c| c.iter().map(|p| Passage { crossing: f(p.crossing), ..*p }).collect())
            .collect();
        GaussCode { components }
    }

    /// Rotates component `comp` left by `k` positions.
    pub fn rotate(&self, comp: usize, k: usize) -> GaussCode {
        let mut components = self.components.clone();
        let c = &mut components[comp];
        if !c.is_empty() {
            let k = k % c.len();
            c.rotate_left(k);
        }
        GaussCode { components }
    }

    /// Reorders components; `order[i]` is the old index of the new component `i`.
    pub fn permute_components(&self, order: &[usize]) -> GaussCode {
        GaussCode { components: order.iter().map(|&i| self.components[i].clone()).collect() }
    }

    /// The code in the order given at construction, not canonicalized.
    pub fn raw_text(&self) -> String {
        parse::write_components(&self.components)
    }

    pub fn canonical_string(&self) -> String {
        canon::canonical_string(&self.components)
    }

    pub fn canonicalize(&self) -> GaussCode {
        parse_gauss(&self.canonical_string()).expect("canonical form reparses")
    }

    pub(crate) fn from_components_unchecked(components: Vec<Vec<Passage>>) -> Self {
        debug_assert!(validate(&components).is_empty());
        Self { components }
    }
}

impl PartialEq for GaussCode {
    fn eq(&self, other: &Self) -> bool {
        self.num_passages() == other.num_passages()
            && self.num_components() == other.num_components()
            && self.canonical_string() == other.canonical_string()
    }
}

impl Eq for GaussCode {}

impl Hash for GaussCode {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical_string().hash(state);
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl std::str::FromStr for GaussCode {
    type Err = GaussError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_gauss(s)
    }
}

impl Serialize for GaussCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.canonical_string())
    }
}

impl<'de> Deserialize<'de> for GaussCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_gauss(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(id: u32, role: Role, s: Sign) -> Passage {
        Passage::new(id, role, s)
    }

    #[test]
    fn trefoil_is_valid() {
        let t = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        assert!(validate(t.components()).is_empty());
        assert_eq!(t.num_crossings(), 3);
    }

    #[test]
    fn sign_mismatch_reported() {
        let comps = vec![vec![
            p(1, Role::Over, Sign::Pos),
            p(2, Role::Under, Sign::Pos),
            p(1, Role::Under, Sign::Pos),
            p(2, Role::Over, Sign::Neg),
        ]];
        assert_eq!(validate(&comps), vec![Violation::SignMismatch(2)]);
    }

    #[test]
    fn unpaired_reported() {
        let comps = vec![vec![
            p(1, Role::Over, Sign::Pos),
            p(1, Role::Under, Sign::Pos),
            p(5, Role::Over, Sign::Pos),
        ]];
        assert_eq!(validate(&comps), vec![Violation::UnpairedCrossing(5)]);
    }

    #[test]
    fn duplicate_over_reported() {
        let comps = vec![vec![
            p(1, Role::Over, Sign::Pos),
            p(1, Role::Under, Sign::Pos),
            p(1, Role::Over, Sign::Pos),
        ]];
        assert_eq!(validate(&comps), vec![Violation::DuplicateRole(1, Role::Over)]);
    }

    #[test]
    fn equality_ignores_rotation_and_labels() {
        let a = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        let b = parse_gauss("U7+ O5+ U9+ O7+ U5+ O9+").unwrap();
        assert_eq!(a, b);
        let c = parse_gauss("O1- U2- O3- U1- O2- U3-").unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn crossing_table() {
        let t = parse_gauss("O1+ U2- O3+ U1+ O2- U3+").unwrap();
        let x = t.crossings();
        assert_eq!(x[&2].over, Position { comp: 0, idx: 4 });
        assert_eq!(x[&2].under, Position { comp: 0, idx: 1 });
        assert_eq!(x[&2].sign, Sign::Neg);
    }
}
