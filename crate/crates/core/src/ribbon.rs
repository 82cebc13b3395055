//! Ribbon presentations: bases joined by handles that pass through bases.
//!
//! Bases are numbered from 1. A handle runs from its start base to its end
//! base and records each base it passes through with a sign, `+1` when it
//! crosses along the base's normal.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gauss::{GaussCode, Role};
use crate::present::{arcs, OpKind, Presentation, PresentationKind, Relation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Handle {
    pub start: usize,
    /// `(base, sign)` with sign `1` or `-1`.
    pub passes: Vec<(usize, i8)>,
    pub end: usize,
}

impl Handle {
    /// The same handle traversed from its end.
    pub fn reversed(&self) -> Handle {
        Handle { start: self.end, passes: reverse_word(&self.passes), end: self.start }
    }
}

fn reverse_word(w: &[(usize, i8)]) -> Vec<(usize, i8)> {
    w.iter().rev().map(|&(b, s)| (b, -s)).collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RibbonError {
    #[error("invalid ribbon data: {0}")]
    InvalidRibbonData(String),
    #[error("base {0} does not exist")]
    BadBaseId(usize),
    #[error("handle {0} does not exist")]
    BadHandleId(usize),
    #[error("the slid end of handle {slide} is not on handle {along}")]
    NotIncident { slide: usize, along: usize },
    #[error("a handle cannot slide along itself")]
    SelfSlide,
    #[error("tube needs a one-component code, got {0} components")]
    MultiComponent(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HandleEnd {
    Start,
    End,
}

/// Validated ribbon data of a ribbon knot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRibbon", into = "RawRibbon")]
pub struct RibbonData {
    bases: usize,
    handles: Vec<Handle>,
}

#[derive(Serialize, Deserialize)]
struct RawRibbon {
    bases: usize,
    handles: Vec<Handle>,
}

impl TryFrom<RawRibbon> for RibbonData {
    type Error = RibbonError;

    fn try_from(r: RawRibbon) -> Result<Self, RibbonError> {
        RibbonData::new(r.bases, r.handles)
    }
}

impl From<RibbonData> for RawRibbon {
    fn from(r: RibbonData) -> Self {
        RawRibbon { bases: r.bases, handles: r.handles }
    }
}

impl RibbonData {
    /// Checks base ids, signs and connectivity.
    pub fn new(bases: usize, handles: Vec<Handle>) -> Result<RibbonData, RibbonError> {
        if bases == 0 {
            return Err(RibbonError::InvalidRibbonData("at least one base is required".into()));
        }
        let in_range = |b: usize| (1..=bases).contains(&b);
        for h in &handles {
            for b in [h.start, h.end].into_iter().chain(h.passes.iter().map(|p| p.0)) {
                if !in_range(b) {
                    return Err(RibbonError::BadBaseId(b));
                }
            }
            if let Some(&(b, s)) = h.passes.iter().find(|p| p.1 != 1 && p.1 != -1) {
                return Err(RibbonError::InvalidRibbonData(format!("pass through base {b} has sign {s}")));
            }
        }
        let mut parent: Vec<usize> = (0..=bases).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut pieces = bases;
        for h in &handles {
            let (a, b) = (find(&mut parent, h.start), find(&mut parent, h.end));
            if a != b {
                parent[a] = b;
                pieces -= 1;
            }
        }
        if pieces != 1 {
            return Err(RibbonError::InvalidRibbonData(format!(
                "bases and handles form {pieces} connected pieces; a ribbon knot needs one"
            )));
        }
        Ok(RibbonData { bases, handles })
    }

    pub fn num_bases(&self) -> usize {
        self.bases
    }

    pub fn handles(&self) -> &[Handle] {
        &self.handles
    }

    /// Number of 1-handles on the sphere: `|H| - |B| + 1`.
    pub fn genus(&self) -> usize {
        self.handles.len() + 1 - self.bases
    }

    pub fn is_spherical(&self) -> bool {
        self.genus() == 0
    }

    /// Adds base `k + 1` with a pass-free handle to `attach_to`.
    pub fn add_trivial_base(&self, attach_to: usize) -> Result<RibbonData, RibbonError> {
        if !(1..=self.bases).contains(&attach_to) {
            return Err(RibbonError::BadBaseId(attach_to));
        }
        let mut handles = self.handles.clone();
        handles.push(Handle { start: self.bases + 1, passes: Vec::new(), end: attach_to });
        Ok(RibbonData { bases: self.bases + 1, handles })
    }

    /// Moves one end of handle `slide` across handle `along` to its other
    /// endpoint. The slid handle picks up the passage word of `along`, read
    /// in the direction it now travels.
    pub fn handle_slide(&self, slide: usize, along: usize, which_end: HandleEnd) -> Result<RibbonData, RibbonError> {
        let n = self.handles.len();
        for h in [slide, along] {
            if h >= n {
                return Err(RibbonError::BadHandleId(h));
            }
        }
        if slide == along {
            return Err(RibbonError::SelfSlide);
        }
        let s = &self.handles[slide];
        let a = &self.handles[along];
        let old = match which_end {
            HandleEnd::Start => s.start,
            HandleEnd::End => s.end,
        };
        // `forward` is along's word read from the old base to the new one.
        let (new, forward) = if old == a.start {
            (a.end, a.passes.clone())
        } else if old == a.end {
            (a.start, reverse_word(&a.passes))
        } else {
            return Err(RibbonError::NotIncident { slide, along });
        };
        let mut moved = s.clone();
        match which_end {
            HandleEnd::Start => {
                let mut w = if a.start == a.end { forward } else { reverse_word(&forward) };
                w.extend_from_slice(&s.passes);
                moved.start = new;
                moved.passes = w;
            }
            HandleEnd::End => {
                moved.passes.extend_from_slice(&forward);
                moved.end = new;
            }
        }
        let mut handles = self.handles.clone();
        handles[slide] = moved;
        Ok(RibbonData { bases: self.bases, handles })
    }

    /// Every slide whose chosen end lies on the other handle.
    pub fn legal_slides(&self) -> Vec<(usize, usize, HandleEnd)> {
        let mut out = Vec::new();
        for (i, s) in self.handles.iter().enumerate() {
            for (j, a) in self.handles.iter().enumerate() {
                if i == j {
                    continue;
                }
                for (end, base) in [(HandleEnd::Start, s.start), (HandleEnd::End, s.end)] {
                    if base == a.start || base == a.end {
                        out.push((i, j, end));
                    }
                }
            }
        }
        out
    }

    /// Passing one handle through another does not change the data.
    pub fn handle_pass(&self) -> RibbonData {
        self.clone()
    }

    /// Replaces handle `j` by its reversal.
    pub fn reverse_handle(&self, j: usize) -> Result<RibbonData, RibbonError> {
        let h = self.handles.get(j).ok_or(RibbonError::BadHandleId(j))?;
        let mut handles = self.handles.clone();
        handles[j] = h.reversed();
        Ok(RibbonData { bases: self.bases, handles })
    }
}

/// Generators `b1..bk`; a handle with word `w` gives `b_end = b_start^{w}`
/// where a positive pass through `b` acts by `^{~b}` and a negative one by
/// `^b`.
pub fn ribbon_quandle(r: &RibbonData) -> Presentation {
    let name = |b: usize| format!("b{b}");
    let relations = r
        .handles
        .iter()
        .map(|h| {
            let ops = h
                .passes
                .iter()
                .map(|&(b, s)| (if s > 0 { OpKind::UpBar } else { OpKind::Up }, name(b)))
                .collect();
            Relation::equation(name(h.end), name(h.start), ops)
        })
        .collect();
    Presentation { kind: PresentationKind::Quandle, generators: (1..=r.bases).map(name).collect(), relations }
}

/// Satoh's Tube map on a welded knot: a base per arc and, per crossing, a
/// handle from the incoming to the outgoing under arc passing once through
/// the over arc's base against the crossing sign. A crossingless knot gives
/// one base with a pass-free loop.
pub fn tube(code: &GaussCode) -> Result<RibbonData, RibbonError> {
    if !code.is_knot() {
        return Err(RibbonError::MultiComponent(code.num_components()));
    }
    let data = arcs(code);
    let base = |pos| data.arc_at(pos) + 1;
    let mut handles: Vec<Handle> = code
        .crossings()
        .values()
        .map(|c| Handle {
            start: base(c.under),
            passes: vec![(base(c.over), -c.sign.to_i8())],
            end: base(code.next_pos(c.under)),
        })
        .collect();
    if handles.is_empty() {
        handles.push(Handle { start: 1, passes: Vec::new(), end: 1 });
    }
    debug_assert!(code.components()[0].iter().filter(|p| p.role == Role::Under).count().max(1) == data.num_arcs);
    RibbonData::new(data.num_arcs, handles)
}
