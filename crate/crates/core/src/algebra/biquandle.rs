use serde::{Deserialize, Serialize};

use super::{is_prime, mod_inverse, AlgebraError, Axiom, FiniteQuandle, Table, Tally};
use crate::exec::Exec;

/// JSON form: `{"n", "up", "down", "up_bar", "down_bar"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiquandleTables {
    pub n: usize,
    pub up: Vec<Vec<usize>>,
    pub down: Vec<Vec<usize>>,
    pub up_bar: Vec<Vec<usize>>,
    pub down_bar: Vec<Vec<usize>>,
}

/// Four operations, first argument is the row: `up(a, b) = a^b`,
/// `down(a, b) = a_b`, `up_bar(a, b) = a^{~b}`, `down_bar(a, b) = a_{~b}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteBiquandle {
    up: Table,
    down: Table,
    up_bar: Table,
    down_bar: Table,
}

impl FiniteBiquandle {
    pub fn size(&self) -> usize {
        self.up.size()
    }

    #[inline]
    pub fn up(&self, a: usize, b: usize) -> usize {
        self.up.get(a, b)
    }

    #[inline]
    pub fn down(&self, a: usize, b: usize) -> usize {
        self.down.get(a, b)
    }

    #[inline]
    pub fn up_bar(&self, a: usize, b: usize) -> usize {
        self.up_bar.get(a, b)
    }

    #[inline]
    pub fn down_bar(&self, a: usize, b: usize) -> usize {
        self.down_bar.get(a, b)
    }

    /// Tables in the order up, up_bar, down, down_bar.
    pub fn op_tables(&self) -> [&Table; 4] {
        [&self.up, &self.up_bar, &self.down, &self.down_bar]
    }

    pub fn tables(&self) -> BiquandleTables {
        BiquandleTables {
            n: self.size(),
            up: self.up.rows(),
            down: self.down.rows(),
            up_bar: self.up_bar.rows(),
            down_bar: self.down_bar.rows(),
        }
    }

    /// `a^b = a * b`, `a^{~b} = a *^-1 b`, `a_b = a_{~b} = a`.
    pub fn from_quandle(q: &FiniteQuandle) -> FiniteBiquandle {
        let id = Table::from_fn(q.size(), |a, _| a);
        FiniteBiquandle {
            up: q.op_table().clone(),
            up_bar: q.inv_op_table().clone(),
            down: id.clone(),
            down_bar: id,
        }
    }

    /// The underlying quandle when both lower operations are trivial.
    pub fn as_quandle(&self) -> Option<FiniteQuandle> {
        let n = self.size();
        let trivial = |t: &Table| (0..n).all(|a| (0..n).all(|b| t.get(a, b) == a));
        (trivial(&self.down) && trivial(&self.down_bar)).then(|| FiniteQuandle::trusted(self.up.clone()))
    }

    /// Whether the alternative four-identity axiom set also holds:
    /// `(a_b)_c = (a_{c^b})_{b_c}`, `(a^b)^c = (a^{c_b})^{b^c}`,
    /// `(a_b)^{c_{b^a}} = (a^c)_{b^{c_a}}` and `(a_{~a})^{~(a_{~a})} = a`.
    pub fn satisfies_alternative_axioms(&self) -> bool {
        let n = self.size();
        let up = |a: usize, b: usize| self.up(a, b);
        let dn = |a: usize, b: usize| self.down(a, b);
        let ub = |a: usize, b: usize| self.up_bar(a, b);
        let db = |a: usize, b: usize| self.down_bar(a, b);
        let unary = (0..n).all(|a| ub(db(a, a), db(a, a)) == a);
        unary
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n).all(|c| {
                        dn(dn(a, b), c) == dn(dn(a, up(c, b)), dn(b, c))
                            && up(up(a, b), c) == up(up(a, dn(c, b)), up(b, c))
                            && up(dn(a, b), dn(c, up(b, a))) == dn(up(a, c), up(b, dn(c, a)))
                    })
                })
            })
    }

    fn checked(up: Table, down: Table, up_bar: Table, down_bar: Table, exec: Exec) -> Result<Self, AlgebraError> {
        let n = up.size();
        if n == 0 {
            return Err(AlgebraError::ZeroSize);
        }
        let b = FiniteBiquandle { up, down, up_bar, down_bar };
        let mut violations = Vec::new();

        let mut bij = Tally::new(Axiom::Bijectivity);
        for (k, t) in b.op_tables().into_iter().enumerate() {
            if let Err(col) = t.right_inverse() {
                bij.fail(&[k, col]);
            }
        }
        bij.finish(&mut violations);

        let mut fixed = Tally::new(Axiom::FixedPoint);
        for x in 0..n {
            for y in 0..n {
                let lower = (b.down(x, y) == y) == (b.up(y, x) == x);
                let upper = (b.up_bar(x, y) == y) == (b.down_bar(y, x) == x);
                if !(lower && upper) {
                    fixed.fail(&[x, y]);
                }
            }
        }
        fixed.finish(&mut violations);

        let mut pairs: Vec<Tally> = (1..=4).map(|k| Tally::new(Axiom::Exchange(k))).collect();
        for a in 0..n {
            for c in 0..n {
                if b.up_bar(b.up(a, c), b.down(c, a)) != a {
                    pairs[0].fail(&[a, c]);
                }
                if b.down_bar(b.down(c, a), b.up(a, c)) != c {
                    pairs[1].fail(&[a, c]);
                }
                if b.up(b.up_bar(a, c), b.down_bar(c, a)) != a {
                    pairs[2].fail(&[a, c]);
                }
                if b.down(b.down_bar(c, a), b.up_bar(a, c)) != c {
                    pairs[3].fail(&[a, c]);
                }
            }
        }
        for t in pairs {
            t.finish(&mut violations);
        }

        let rows: Vec<usize> = (0..n).collect();
        let per_row = exec.map(&rows, |&a| {
            let mut t: Vec<Tally> = (5..=10).map(|k| Tally::new(Axiom::Exchange(k))).collect();
            for bb in 0..n {
                for c in 0..n {
                    for (k, ok) in b.triple_identities(a, bb, c).into_iter().enumerate() {
                        if !ok {
                            t[k].fail(&[a, bb, c]);
                        }
                    }
                }
            }
            t
        });
        let mut merged: Vec<Tally> = (5..=10).map(|k| Tally::new(Axiom::Exchange(k))).collect();
        for row in per_row {
            merged = merged.into_iter().zip(row).map(|(x, y)| x.merge(y)).collect();
        }
        for t in merged {
            t.finish(&mut violations);
        }

        if violations.is_empty() {
            Ok(b)
        } else {
            Err(AlgebraError::AxiomViolation(violations))
        }
    }

    /// Identities 5 to 10 at one triple.
    fn triple_identities(&self, a: usize, b: usize, c: usize) -> [bool; 6] {
        let up = |x: usize, y: usize| self.up(x, y);
        let dn = |x: usize, y: usize| self.down(x, y);
        let ub = |x: usize, y: usize| self.up_bar(x, y);
        let db = |x: usize, y: usize| self.down_bar(x, y);
        [
            up(up(a, b), c) == up(up(a, dn(c, b)), up(b, c)),
            dn(dn(c, b), a) == dn(dn(c, up(a, b)), dn(b, a)),
            up(dn(b, a), dn(c, up(a, b))) == dn(up(b, c), up(a, dn(c, b))),
            ub(db(b, a), db(c, ub(a, b))) == db(ub(b, c), ub(a, db(c, b))),
            ub(ub(a, b), c) == ub(ub(a, db(c, b)), ub(b, c)),
            db(db(c, b), a) == db(db(c, ub(a, b)), db(b, a)),
        ]
    }
}

/// Checks axioms 1 and 2 and the ten exchange identities exhaustively.
pub fn validate_biquandle(tables: &BiquandleTables) -> Result<FiniteBiquandle, AlgebraError> {
    validate_biquandle_with(tables, Exec::default())
}

pub fn validate_biquandle_with(tables: &BiquandleTables, exec: Exec) -> Result<FiniteBiquandle, AlgebraError> {
    let n = tables.n;
    if n == 0 {
        return Err(AlgebraError::ZeroSize);
    }
    FiniteBiquandle::checked(
        Table::from_rows(&tables.up, n, "up")?,
        Table::from_rows(&tables.down, n, "down")?,
        Table::from_rows(&tables.up_bar, n, "up_bar")?,
        Table::from_rows(&tables.down_bar, n, "down_bar")?,
        exec,
    )
}

/// `a^b = ta + (1 - st)b`, `a_b = sa` over `Z_p`, with the barred operations
/// obtained by inverting `s` and `t`.
pub fn alexander_biquandle(p: u64, s: i64, t: i64) -> Result<FiniteBiquandle, AlgebraError> {
    if !is_prime(p) {
        return Err(AlgebraError::NotPrime(p));
    }
    let si = mod_inverse(s, p).ok_or(AlgebraError::NonUnit(s, p))? as i64;
    let ti = mod_inverse(t, p).ok_or(AlgebraError::NonUnit(t, p))? as i64;
    let m = p as i64;
    let (s, t) = (s.rem_euclid(m), t.rem_euclid(m));
    let n = p as usize;
    let lin = |x: i64, y: i64| move |a: usize, b: usize| (x * a as i64 + y * b as i64).rem_euclid(m) as usize;
    let b = FiniteBiquandle {
        up: Table::from_fn(n, lin(t, 1 - s * t)),
        up_bar: Table::from_fn(n, lin(ti, 1 - si * ti)),
        down: Table::from_fn(n, lin(s, 0)),
        down_bar: Table::from_fn(n, lin(si, 0)),
    };
    debug_assert!(FiniteBiquandle::checked(
        b.up.clone(),
        b.down.clone(),
        b.up_bar.clone(),
        b.down_bar.clone(),
        Exec::Sequential
    )
    .is_ok());
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::dihedral_quandle;

    fn identity_tables(n: usize) -> BiquandleTables {
        let id: Vec<Vec<usize>> = (0..n).map(|a| vec![a; n]).collect();
        BiquandleTables { n, up: id.clone(), down: id.clone(), up_bar: id.clone(), down_bar: id }
    }

    #[test]
    fn identity_tables_valid() {
        for n in 1..5 {
            assert!(validate_biquandle(&identity_tables(n)).is_ok());
        }
    }

    #[test]
    fn quandle_induced_valid() {
        let q = dihedral_quandle(3).unwrap();
        let b = FiniteBiquandle::from_quandle(&q);
        assert!(validate_biquandle(&b.tables()).is_ok());
        assert_eq!(b.as_quandle(), Some(q));
    }

    #[test]
    fn non_bijective_up_is_axiom_one() {
        let mut t = identity_tables(3);
        t.up = vec![vec![0, 0, 0], vec![1, 0, 1], vec![2, 2, 2]];
        let Err(AlgebraError::AxiomViolation(v)) = validate_biquandle(&t) else { panic!() };
        assert_eq!(v[0].axiom, Axiom::Bijectivity);
        assert_eq!(v[0].witness, vec![0, 1]);
    }

    #[test]
    fn up_bijective_in_a_but_not_b_passes_axiom_one() {
        // up = identity in a is constant in b; axiom 1 only binds a.
        let b = validate_biquandle(&identity_tables(3)).unwrap();
        assert_eq!(b.up(1, 0), b.up(1, 2));
    }

    #[test]
    fn alexander_examples() {
        let b = alexander_biquandle(2, 1, 1).unwrap();
        for op in b.op_tables() {
            assert_eq!(op.rows(), vec![vec![0, 0], vec![1, 1]]);
        }
        // 1 - st = -3 vanishes mod 3, so up reduces to 2a.
        let b = alexander_biquandle(3, 2, 2).unwrap();
        for a in 0..3 {
            for c in 0..3 {
                assert_eq!(b.up(a, c), 2 * a % 3);
            }
        }
        assert!(validate_biquandle(&b.tables()).is_ok());
        let b = alexander_biquandle(5, 1, 2).unwrap();
        assert!(b.as_quandle().is_some());
        assert!(validate_biquandle(&b.tables()).is_ok());
    }

    #[test]
    fn alexander_errors() {
        assert_eq!(alexander_biquandle(6, 1, 1), Err(AlgebraError::NotPrime(6)));
        assert_eq!(alexander_biquandle(5, 0, 1), Err(AlgebraError::NonUnit(0, 5)));
        assert_eq!(alexander_biquandle(5, 1, 10), Err(AlgebraError::NonUnit(10, 5)));
    }

    #[test]
    fn broken_exchange_reported() {
        let mut t = alexander_biquandle(5, 2, 3).unwrap().tables();
        t.down = t.down_bar.clone();
        let Err(AlgebraError::AxiomViolation(v)) = validate_biquandle(&t) else { panic!() };
        assert!(v.iter().any(|x| matches!(x.axiom, Axiom::Exchange(_))));
        assert!(v.iter().all(|x| x.failures > 0));
    }
}
