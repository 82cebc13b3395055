//! Finite quandles, biquandles and groups as validated operation tables.
//!
//! Elements are `0..n`; tables are row-major with the row indexed by the first
//! argument, so `op.get(a, b)` is `a * b` (written `a^b`).

mod biquandle;
mod group;
mod library;
mod quandle;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use biquandle::{alexander_biquandle, validate_biquandle, validate_biquandle_with, BiquandleTables, FiniteBiquandle};
pub use group::{small_groups, FiniteGroup, GroupTables};
pub use library::{all_biquandles, biquandle_library, quandle_library, NamedBiquandle, NamedQuandle};
pub use quandle::{
    alexander_quandle, conjugation_quandle, coset_quandle, dihedral_quandle, trivial_quandle,
    validate_quandle, validate_quandle_with, FiniteQuandle, QuandleTables,
};

/// Square operation table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Table {
    n: usize,
    data: Vec<usize>,
}

impl Table {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                data.push(f(a, b));
            }
        }
        Self { n, data }
    }

    /// Checks shape and entry range.
    pub fn from_rows(rows: &[Vec<usize>], n: usize, name: &str) -> Result<Self, AlgebraError> {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::BadShape(format!("table `{name}` is not {n}x{n}")));
        }
        if let Some(x) = rows.iter().flatten().find(|&&x| x >= n) {
            return Err(AlgebraError::BadShape(format!("table `{name}` has entry {x} outside 0..{n}")));
        }
        Ok(Self { n, data: rows.concat() })
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.data[a * self.n + b]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[usize]>::to_vec).collect()
    }

    /// For fixed `b`, is `a -> a op b` a bijection? Returns the inverse table
    /// (`inv.get(op(a, b), b) == a`) when it is for every `b`.
    pub fn right_inverse(&self) -> Result<Table, usize> {
        let n = self.n;
        let mut inv = vec![usize::MAX; n * n];
        for b in 0..n {
            for a in 0..n {
                let x = self.get(a, b);
                if inv[x * n + b] != usize::MAX {
                    return Err(b);
                }
                inv[x * n + b] = a;
            }
        }
        Ok(Table { n, data: inv })
    }

    /// Relabels elements by `perm` (old -> new).
    pub fn relabel(&self, perm: &[usize]) -> Table {
        let n = self.n;
        let mut inverse = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        Table::from_fn(n, |a, b| perm[self.get(inverse[a], inverse[b])])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `a * a = a`.
    Idempotence,
    /// `x -> x * b` is a bijection for every `b`.
    RightInvertibility,
    /// The supplied inverse table does not invert the operation.
    InverseTable,
    /// `(a * b) * c = (a * c) * (b * c)`.
    SelfDistributivity,
    /// For fixed `b`, `a -> a op b` is a bijection for each of the four
    /// biquandle operations.
    Bijectivity,
    /// `c = a_c` iff `a = c^a`, and `b = a^{~b}` iff `a = b_{~a}`.
    FixedPoint,
    /// One of the ten exchange identities, numbered 1 to 10.
    Exchange(u8),
    Associativity,
    Identity,
    Inverses,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::Exchange(k) => write!(f, "exchange identity {k}"),
            other => write!(f, "{}", format!("{other:?}").to_lowercase()),
        }
    }
}

/// A failed axiom: the first witnessing tuple and how many tuples fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
    pub failures: usize,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?} ({} failing tuples)", self.axiom, self.witness, self.failures)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("size must be at least 1")]
    ZeroSize,
    #[error("bad table shape: {0}")]
    BadShape(String),
    #[error("axiom violations: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    AxiomViolation(Vec<AxiomViolation>),
    #[error("elements {0:?} do not form a subgroup")]
    NotSubgroup(Vec<usize>),
    #[error("element {0} is not in the center of the subgroup")]
    MNotInCenterOfP(usize),
    #[error("{0} is not a unit modulo {1}")]
    NonUnit(i64, u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Collects violations of one axiom across a search space.
pub(crate) struct Tally {
    axiom: Axiom,
    witness: Option<Vec<usize>>,
    failures: usize,
}

impl Tally {
    pub(crate) fn new(axiom: Axiom) -> Self {
        Self { axiom, witness: None, failures: 0 }
    }

    pub(crate) fn fail(&mut self, witness: &[usize]) {
        if self.witness.is_none() {
            self.witness = Some(witness.to_vec());
        }
        self.failures += 1;
    }

    pub(crate) fn merge(mut self, other: Tally) -> Tally {
        if self.witness.is_none() {
            self.witness = other.witness;
        }
        self.failures += other.failures;
        self
    }

    pub(crate) fn finish(self, out: &mut Vec<AxiomViolation>) {
        if let Some(witness) = self.witness {
            out.push(AxiomViolation { axiom: self.axiom, witness, failures: self.failures });
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub(crate) fn mod_inverse(a: i64, m: u64) -> Option<u64> {
    let m = m as i64;
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1 || (m == 1 && r0 == 0)).then(|| s0.rem_euclid(m) as u64)
}
