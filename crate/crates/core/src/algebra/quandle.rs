use serde::{Deserialize, Serialize};

use super::{is_prime, mod_inverse, AlgebraError, Axiom, AxiomViolation, FiniteGroup, Table, Tally};
use crate::exec::Exec;

/// JSON form: `{"n": 3, "op": [[...]], "inv_op": [[...]]}`. A missing
/// `inv_op` is derived from `op` when possible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleTables {
    pub n: usize,
    pub op: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inv_op: Option<Vec<Vec<usize>>>,
}

/// A quandle: `op.get(a, b)` is `a^b`, `inv_op.get(a, b)` is `a^{~b}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteQuandle {
    op: Table,
    inv_op: Table,
}

impl FiniteQuandle {
    pub fn size(&self) -> usize {
        self.op.size()
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op.get(a, b)
    }

    #[inline]
    pub fn inv_op(&self, a: usize, b: usize) -> usize {
        self.inv_op.get(a, b)
    }

    pub fn op_table(&self) -> &Table {
        &self.op
    }

    pub fn inv_op_table(&self) -> &Table {
        &self.inv_op
    }

    pub fn tables(&self) -> QuandleTables {
        QuandleTables { n: self.size(), op: self.op.rows(), inv_op: Some(self.inv_op.rows()) }
    }

    /// `a^b = a` for all `a, b`.
    pub fn is_trivial(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.op(a, b) == a))
    }

    /// `(a^b)^b = a` for all `a, b`.
    pub fn is_involutory(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.op(self.op(a, b), b) == a))
    }

    /// The quandle with `op` and `inv_op` exchanged.
    pub fn dual(&self) -> FiniteQuandle {
        FiniteQuandle { op: self.inv_op.clone(), inv_op: self.op.clone() }
    }

    /// Same quandle with elements renamed by `perm` (old -> new).
    pub fn relabel(&self, perm: &[usize]) -> FiniteQuandle {
        FiniteQuandle { op: self.op.relabel(perm), inv_op: self.inv_op.relabel(perm) }
    }

    fn checked(op: Table, inv_op: Option<Table>, exec: Exec) -> Result<FiniteQuandle, AlgebraError> {
        let n = op.size();
        if n == 0 {
            return Err(AlgebraError::ZeroSize);
        }
        let mut violations = Vec::new();

        let mut idem = Tally::new(Axiom::Idempotence);
        for a in 0..n {
            if op.get(a, a) != a {
                idem.fail(&[a]);
            }
        }
        idem.finish(&mut violations);

        let derived = op.right_inverse();
        if let Err(b) = &derived {
            let a = (0..n)
                .find(|&a| (0..n).filter(|&x| op.get(x, *b) == a).count() != 1)
                .unwrap_or(0);
            violations.push(AxiomViolation { axiom: Axiom::RightInvertibility, witness: vec![a, *b], failures: 1 });
        }
        let inv_op = match (inv_op, derived) {
            (Some(given), _) => {
                let mut t = Tally::new(Axiom::InverseTable);
                for a in 0..n {
                    for b in 0..n {
                        if given.get(op.get(a, b), b) != a || op.get(given.get(a, b), b) != a {
                            t.fail(&[a, b]);
                        }
                    }
                }
                t.finish(&mut violations);
                given
            }
            (None, Ok(inv)) => inv,
            (None, Err(_)) => op.clone(),
        };

        let rows: Vec<usize> = (0..n).collect();
        let tallies = exec.map(&rows, |&a| {
            let mut t = Tally::new(Axiom::SelfDistributivity);
            for b in 0..n {
                for c in 0..n {
                    if op.get(op.get(a, b), c) != op.get(op.get(a, c), op.get(b, c)) {
                        t.fail(&[a, b, c]);
                    }
                }
            }
            t
        });
        tallies.into_iter().reduce(Tally::merge).unwrap().finish(&mut violations);

        if violations.is_empty() {
            Ok(FiniteQuandle { op, inv_op })
        } else {
            Err(AlgebraError::AxiomViolation(violations))
        }
    }

    pub(crate) fn trusted(op: Table) -> FiniteQuandle {
        Self::checked(op, None, Exec::Sequential).expect("construction yields a quandle")
    }
}

/// Checks the three quandle axioms exhaustively.
pub fn validate_quandle(tables: &QuandleTables) -> Result<FiniteQuandle, AlgebraError> {
    validate_quandle_with(tables, Exec::default())
}

pub fn validate_quandle_with(tables: &QuandleTables, exec: Exec) -> Result<FiniteQuandle, AlgebraError> {
    if tables.n == 0 {
        return Err(AlgebraError::ZeroSize);
    }
    let op = Table::from_rows(&tables.op, tables.n, "op")?;
    let inv = tables.inv_op.as_ref().map(|t| Table::from_rows(t, tables.n, "inv_op")).transpose()?;
    FiniteQuandle::checked(op, inv, exec)
}

/// `a^b = a`.
pub fn trivial_quandle(n: usize) -> Result<FiniteQuandle, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::ZeroSize);
    }
    Ok(FiniteQuandle::trusted(Table::from_fn(n, |a, _| a)))
}

/// `a^b = 2b - a mod n`.
pub fn dihedral_quandle(n: usize) -> Result<FiniteQuandle, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::ZeroSize);
    }
    Ok(FiniteQuandle::trusted(Table::from_fn(n, |a, b| (2 * b + n - a) % n)))
}

/// `a^b = t a + (1 - t) b` over `Z_p`.
pub fn alexander_quandle(p: u64, t: i64) -> Result<FiniteQuandle, AlgebraError> {
    if !is_prime(p) {
        return Err(AlgebraError::NotPrime(p));
    }
    if mod_inverse(t, p).is_none() {
        return Err(AlgebraError::NonUnit(t, p));
    }
    let (n, t) = (p as i64, t.rem_euclid(p as i64));
    Ok(FiniteQuandle::trusted(Table::from_fn(p as usize, |a, b| {
        (t * a as i64 + (1 - t) * b as i64).rem_euclid(n) as usize
    })))
}

/// `a^b = b a b^-1` on the elements of `g`.
pub fn conjugation_quandle(g: &FiniteGroup) -> FiniteQuandle {
    FiniteQuandle::trusted(Table::from_fn(g.order(), |a, b| g.conj(a, b)))
}

/// Quandle on the right cosets `P\G` with `Pg^{Ph} = P(g h^-1 m h)`, for a
/// subgroup `P` and `m` in the center of `P`.
///
/// Cosets are numbered in order of their least element.
pub fn coset_quandle(g: &FiniteGroup, p: &[usize], m: usize) -> Result<FiniteQuandle, AlgebraError> {
    let (coset_of, reps) = right_cosets(g, p, m)?;
    Ok(coset_quandle_from_reps(g, m, &coset_of, &reps))
}

/// Coset bookkeeping: `coset_of[x]` is the index of `Px`, `reps` the least
/// element of each coset.
pub(crate) fn right_cosets(
    g: &FiniteGroup,
    p: &[usize],
    m: usize,
) -> Result<(Vec<usize>, Vec<usize>), AlgebraError> {
    if !g.is_subgroup(p) {
        return Err(AlgebraError::NotSubgroup(p.to_vec()));
    }
    if m >= g.order() || !g.center_of(p).contains(&m) {
        return Err(AlgebraError::MNotInCenterOfP(m));
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &h in p {
            coset_of[g.mul(h, x)] = reps.len();
        }
        reps.push(x);
    }
    Ok((coset_of, reps))
}

pub(crate) fn coset_quandle_from_reps(
    g: &FiniteGroup,
    m: usize,
    coset_of: &[usize],
    reps: &[usize],
) -> FiniteQuandle {
    let k = reps.len();
    FiniteQuandle::trusted(Table::from_fn(k, |a, b| {
        let (x, h) = (reps[a], reps[b]);
        let y = g.mul(g.mul(g.mul(x, g.inv(h)), m), h);
        coset_of[y]
    }))
}
