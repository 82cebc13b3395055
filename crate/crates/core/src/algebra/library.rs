use std::collections::BTreeSet;

use crate::Exec;

use super::{
    alexander_biquandle, validate_biquandle_with, BiquandleTables, alexander_quandle, conjugation_quandle, coset_quandle, dihedral_quandle, trivial_quandle,
    FiniteBiquandle, FiniteGroup, FiniteQuandle,
};

#[derive(Clone, Debug)]
pub struct NamedQuandle {
    pub name: String,
    pub quandle: FiniteQuandle,
}

#[derive(Clone, Debug)]
pub struct NamedBiquandle {
    pub name: String,
    pub biquandle: FiniteBiquandle,
}

/// Small quandles used as default coloring targets.
pub fn quandle_library() -> Vec<NamedQuandle> {
    let mut out = Vec::new();
    let mut push = |name: String, quandle: FiniteQuandle| out.push(NamedQuandle { name, quandle });
    push("trivial:2".into(), trivial_quandle(2).unwrap());
    for n in 3..=8 {
        push(format!("dihedral:{n}"), dihedral_quandle(n).unwrap());
    }
    push("conj:S3".into(), conjugation_quandle(&FiniteGroup::symmetric(3)));
    for (p, t) in [(5, 2), (5, 3), (7, 3)] {
        push(format!("alexander:{p},1,{t}"), alexander_quandle(p, t).unwrap());
    }
    let a4 = FiniteGroup::alternating(4);
    let c3 = a4.subgroups().into_iter().find(|h| h.len() == 3).unwrap();
    push("coset:A4:C3".into(), coset_quandle(&a4, &c3, c3[1]).unwrap());
    out
}

/// Small biquandles used as default coloring targets.
pub fn biquandle_library() -> Vec<NamedBiquandle> {
    let mut out = Vec::new();
    for (p, s, t) in [(3, 2, 2), (3, 2, 1), (5, 2, 3), (5, 2, 1), (5, 4, 2), (7, 2, 3)] {
        out.push(NamedBiquandle { name: format!("alexander:{p},{s},{t}"), biquandle: alexander_biquandle(p, s, t).unwrap() });
    }
    for n in [3, 5] {
        out.push(NamedBiquandle {
            name: format!("induced:dihedral:{n}"),
            biquandle: FiniteBiquandle::from_quandle(&dihedral_quandle(n).unwrap()),
        });
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every biquandle on `n <= 3` elements up to isomorphism, named
/// `enum:n:k` in a fixed order.
///
/// Up and down range over tables whose columns are permutations; the barred
/// operations are then forced by inverting `(a, c) -> (a^c, c_a)`.
pub fn all_biquandles(n: usize) -> Vec<NamedBiquandle> {
    assert!((1..=3).contains(&n), "exhaustive enumeration is limited to sizes 1 to 3");
    let perms = permutations(n);
    // Tables whose column `b` is the permutation `a -> t[a][b]`.
    let mut column_tables: Vec<Vec<Vec<usize>>> = vec![vec![vec![0; n]; n]];
    for b in 0..n {
        column_tables = column_tables
            .into_iter()
            .flat_map(|t| {
                perms.iter().map(move |p| {
                    let mut t = t.clone();
                    for a in 0..n {
                        t[a][b] = p[a];
                    }
                    t
                })
            })
            .collect();
    }
    let canonical = |up: &[Vec<usize>], down: &[Vec<usize>]| {
        perms
            .iter()
            .map(|p| {
                let mut inv = vec![0; n];
                for (old, &new) in p.iter().enumerate() {
                    inv[new] = old;
                }
                let rel = |t: &[Vec<usize>]| -> Vec<Vec<usize>> {
                    (0..n).map(|a| (0..n).map(|b| p[t[inv[a]][inv[b]]]).collect()).collect()
                };
                (rel(up), rel(down))
            })
            .min()
            .expect("at least one permutation")
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for up in &column_tables {
        for down in &column_tables {
            let mut up_bar = vec![vec![usize::MAX; n]; n];
            let mut down_bar = vec![vec![usize::MAX; n]; n];
            let mut bijective = true;
            for a in 0..n {
                for c in 0..n {
                    let (x, y) = (up[a][c], down[c][a]);
                    if up_bar[x][y] != usize::MAX {
                        bijective = false;
                    }
                    up_bar[x][y] = a;
                    down_bar[y][x] = c;
                }
            }
            if !bijective {
                continue;
            }
            let key = canonical(up, down);
            if seen.contains(&key) {
                continue;
            }
            let tables = BiquandleTables { n, up: up.clone(), down: down.clone(), up_bar, down_bar };
            if let Ok(biquandle) = validate_biquandle_with(&tables, Exec::Sequential) {
                seen.insert(key);
                out.push(biquandle);
            }
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(k, biquandle)| NamedBiquandle { name: format!("enum:{n}:{}", k + 1), biquandle })
        .collect()
}
