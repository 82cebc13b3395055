use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{AlgebraError, Axiom, AxiomViolation, Table, Tally};
use crate::exec::Exec;

/// JSON form: `{"n": 6, "mul": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTables {
    pub n: usize,
    pub mul: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    mul: Table,
    inv: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    pub fn validate(tables: &GroupTables) -> Result<FiniteGroup, AlgebraError> {
        if tables.n == 0 {
            return Err(AlgebraError::ZeroSize);
        }
        let mul = Table::from_rows(&tables.mul, tables.n, "mul")?;
        Self::from_table(mul, Exec::default())
    }

    pub fn from_table(mul: Table, exec: Exec) -> Result<FiniteGroup, AlgebraError> {
        let n = mul.size();
        let mut violations = Vec::new();
        let rows: Vec<usize> = (0..n).collect();
        let assoc = exec.map(&rows, |&a| {
            let mut t = Tally::new(Axiom::Associativity);
            for b in 0..n {
                for c in 0..n {
                    if mul.get(mul.get(a, b), c) != mul.get(a, mul.get(b, c)) {
                        t.fail(&[a, b, c]);
                    }
                }
            }
            t
        });
        assoc.into_iter().reduce(Tally::merge).unwrap().finish(&mut violations);

        let identity = (0..n).find(|&e| (0..n).all(|a| mul.get(e, a) == a && mul.get(a, e) == a));
        let Some(identity) = identity else {
            violations.push(AxiomViolation { axiom: Axiom::Identity, witness: vec![], failures: 1 });
            return Err(AlgebraError::AxiomViolation(violations));
        };
        let mut inv = vec![0; n];
        let mut missing = Tally::new(Axiom::Inverses);
        for a in 0..n {
            match (0..n).find(|&b| mul.get(a, b) == identity && mul.get(b, a) == identity) {
                Some(b) => inv[a] = b,
                None => missing.fail(&[a]),
            }
        }
        missing.finish(&mut violations);
        if violations.is_empty() {
            Ok(FiniteGroup { mul, inv, identity })
        } else {
            Err(AlgebraError::AxiomViolation(violations))
        }
    }

    pub fn tables(&self) -> GroupTables {
        GroupTables { n: self.order(), mul: self.mul.rows() }
    }

    pub fn order(&self) -> usize {
        self.mul.size()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `b a b^-1`.
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(b, a), self.inv(b))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Smallest subgroup containing `elems`, sorted.
    pub fn closure(&self, elems: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = elems.iter().copied().collect();
        set.insert(self.identity);
        let mut frontier: Vec<usize> = set.iter().copied().collect();
        let gens: Vec<usize> = elems.to_vec();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        if elems.is_empty() || elems.iter().any(|&x| x >= self.order()) {
            return false;
        }
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        set.contains(&self.identity)
            && set.iter().all(|&a| set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    /// Every subgroup, each as a sorted element list, ordered by size then
    /// elements.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut found: BTreeSet<Vec<usize>> = (0..n).map(|g| self.closure(&[g])).collect();
        loop {
            let current: Vec<Vec<usize>> = found.iter().cloned().collect();
            let mut grew = false;
            for h in &current {
                for g in 0..n {
                    if h.binary_search(&g).is_err() {
                        let mut gens = h.clone();
                        gens.push(g);
                        grew |= found.insert(self.closure(&gens));
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Elements of `sub` commuting with every element of `sub`.
    pub fn center_of(&self, sub: &[usize]) -> Vec<usize> {
        sub.iter()
            .copied()
            .filter(|&m| sub.iter().all(|&h| self.mul(m, h) == self.mul(h, m)))
            .collect()
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        Self::trusted(Table::from_fn(n, |a, b| (a + b) % n))
    }

    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let m = h.order();
        Self::trusted(Table::from_fn(g.order() * m, |a, b| {
            g.mul(a / m, b / m) * m + h.mul(a % m, b % m)
        }))
    }

    /// Group generated by permutations of `0..degree`, composed as
    /// `(p q)(x) = p(q(x))`. Element 0 is the identity.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> FiniteGroup {
        let id: Vec<usize> = (0..degree).collect();
        let compose = |p: &[usize], q: &[usize]| q.iter().map(|&x| p[x]).collect::<Vec<usize>>();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let y = compose(&elems[i], g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            i += 1;
        }
        let table = Table::from_fn(elems.len(), |a, b| index[&compose(&elems[a], &elems[b])]);
        Self::trusted(table)
    }

    /// Symmetries of the regular `n`-gon, order `2n`.
    pub fn dihedral(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        if n <= 2 {
            // The polygon action is not faithful here; build Z_n x Z_2 directly.
            return Self::direct_product(&Self::cyclic(n), &Self::cyclic(2));
        }
        Self::from_permutations(n, &[rot, refl])
    }

    /// Dicyclic group of order `4n`: `<a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>`.
    pub fn dicyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let m = 2 * n;
        // Element (k, e) = a^k x^e, encoded as 2k + e.
        Self::trusted(Table::from_fn(2 * m, |p, q| {
            let (k, e, l, f) = (p / 2, p % 2, q / 2, q % 2);
            let (k2, e2) = match (e, f) {
                (0, f) => ((k + l) % m, f),
                (_, 0) => ((k + m - l) % m, 1),
                _ => ((k + m - l + n) % m, 0),
            };
            2 * k2 + e2
        }))
    }

    pub fn symmetric(k: usize) -> FiniteGroup {
        if k <= 1 {
            return Self::cyclic(1);
        }
        let swap: Vec<usize> = (0..k).map(|i| if i < 2 { 1 - i } else { i }).collect();
        let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
        Self::from_permutations(k, &[swap, cycle])
    }

    pub fn alternating(k: usize) -> FiniteGroup {
        if k <= 2 {
            return Self::cyclic(1);
        }
        let gens: Vec<Vec<usize>> = (2..k)
            .map(|j| {
                let mut p: Vec<usize> = (0..k).collect();
                // 3-cycle (0 1 j)
                p[0] = 1;
                p[1] = j;
                p[j] = 0;
                p
            })
            .collect();
        Self::from_permutations(k, &gens)
    }

    fn trusted(mul: Table) -> FiniteGroup {
        Self::from_table(mul, Exec::Sequential).expect("constructed group satisfies the axioms")
    }
}

/// Every group of order at most `max_order` (up to isomorphism), for
/// `max_order <= 12`, with a descriptive name.
pub fn small_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    assert!(max_order <= 12, "group catalog stops at order 12");
    let z = FiniteGroup::cyclic;
    let x = FiniteGroup::direct_product;
    type Build<'a> = Box<dyn Fn() -> FiniteGroup + 'a>;
    let all: Vec<(&str, Build<'_>)> = vec![
        ("Z1", Box::new(|| z(1))),
        ("Z2", Box::new(|| z(2))),
        ("Z3", Box::new(|| z(3))),
        ("Z4", Box::new(|| z(4))),
        ("Z2xZ2", Box::new(|| x(&z(2), &z(2)))),
        ("Z5", Box::new(|| z(5))),
        ("Z6", Box::new(|| z(6))),
        ("S3", Box::new(|| FiniteGroup::symmetric(3))),
        ("Z7", Box::new(|| z(7))),
        ("Z8", Box::new(|| z(8))),
        ("Z4xZ2", Box::new(|| x(&z(4), &z(2)))),
        ("Z2xZ2xZ2", Box::new(|| x(&x(&z(2), &z(2)), &z(2)))),
        ("D4", Box::new(|| FiniteGroup::dihedral(4))),
        ("Q8", Box::new(|| FiniteGroup::dicyclic(2))),
        ("Z9", Box::new(|| z(9))),
        ("Z3xZ3", Box::new(|| x(&z(3), &z(3)))),
        ("Z10", Box::new(|| z(10))),
        ("D5", Box::new(|| FiniteGroup::dihedral(5))),
        ("Z11", Box::new(|| z(11))),
        ("Z12", Box::new(|| z(12))),
        ("Z6xZ2", Box::new(|| x(&z(6), &z(2)))),
        ("D6", Box::new(|| FiniteGroup::dihedral(6))),
        ("A4", Box::new(|| FiniteGroup::alternating(4))),
        ("Dic3", Box::new(|| FiniteGroup::dicyclic(3))),
    ];
    all.into_iter()
        .map(|(name, f)| (name.to_string(), f()))
        .filter(|(_, g)| g.order() <= max_order)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn element_orders(g: &FiniteGroup) -> Vec<usize> {
        let mut v: Vec<usize> = (0..g.order())
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != g.identity() {
                    x = g.mul(x, a);
                    k += 1;
                }
                k
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn catalog_orders_and_isomorphism_types() {
        let groups = small_groups(12);
        assert_eq!(groups.len(), 24);
        let orders: Vec<usize> = groups.iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8, 9, 9, 10, 10, 11, 12, 12, 12, 12, 12]);
        // Within each order, (abelian, element-order multiset) separates the
        // listed groups, so none is duplicated.
        for i in 0..groups.len() {
            for j in 0..i {
                let (a, b) = (&groups[i].1, &groups[j].1);
                if a.order() == b.order() {
                    assert!(
                        a.is_abelian() != b.is_abelian() || element_orders(a) != element_orders(b),
                        "{} and {} look isomorphic",
                        groups[i].0,
                        groups[j].0
                    );
                }
            }
        }
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q8 = FiniteGroup::dicyclic(2);
        assert!(!q8.is_abelian());
        assert_eq!(element_orders(&q8).iter().filter(|&&k| k == 2).count(), 1);
    }

    #[test]
    fn subgroups_of_s3() {
        let s3 = FiniteGroup::symmetric(3);
        let subs = s3.subgroups();
        // trivial, three of order 2, one of order 3, whole group
        let sizes: Vec<usize> = subs.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3, 6]);
        assert!(subs.iter().all(|h| s3.is_subgroup(h)));
        assert!(!s3.is_subgroup(&[0, 1, 2]) || s3.closure(&[0, 1, 2]).len() == 3);
    }

    #[test]
    fn rejects_non_group() {
        let t = GroupTables { n: 2, mul: vec![vec![0, 0], vec![0, 0]] };
        assert!(matches!(FiniteGroup::validate(&t), Err(AlgebraError::AxiomViolation(_))));
        let t = GroupTables { n: 2, mul: vec![vec![0, 1]] };
        assert!(matches!(FiniteGroup::validate(&t), Err(AlgebraError::BadShape(_))));
    }

    #[test]
    fn center_of_subgroup() {
        let d4 = FiniteGroup::dihedral(4);
        assert_eq!(d4.center_of(&(0..8).collect::<Vec<_>>()).len(), 2);
    }
}
