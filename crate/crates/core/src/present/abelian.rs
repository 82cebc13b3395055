use serde::{Deserialize, Serialize};

use super::{PresentError, Presentation, PresentationKind, Relation};

/// `Z^free_rank + Z/t1 + ... + Z/tk` with `t1 | t2 | ... | tk`, all `ti > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl std::fmt::Display for Abelianization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("Z/{t}")).collect();
        if self.free_rank > 0 {
            parts.insert(0, if self.free_rank == 1 { "Z".into() } else { format!("Z^{}", self.free_rank) });
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Abelianization of a group presentation via the Smith normal form of its
/// exponent-sum matrix.
pub fn abelianization(g: &Presentation) -> Result<Abelianization, PresentError> {
    g.expect_kind(PresentationKind::Group)?;
    let idx = g.index()?;
    let n = g.generators.len();
    let rows: Vec<Vec<i64>> = g
        .relations
        .iter()
        .map(|r| {
            let mut row = vec![0i64; n];
            if let Relation::Relator { relator } = r {
                for l in relator {
                    row[idx[l.gen.as_str()]] += l.exp as i64;
                }
            }
            row
        })
        .collect();
    let d = smith_normal_form(&rows, n);
    Ok(Abelianization {
        free_rank: n - d.len(),
        torsion: d.into_iter().filter(|&x| x > 1).collect(),
    })
}

/// Nonzero diagonal of the Smith normal form of an `m x cols` integer matrix,
/// each entry dividing the next.
pub fn smith_normal_form(matrix: &[Vec<i64>], cols: usize) -> Vec<u64> {
    let mut a: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let m = a.len();
    let mut diag = Vec::new();
    for t in 0..m.min(cols) {
        let Some((pr, pc)) = smallest_nonzero(&a, t, cols) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t].div_euclid(a[t][t]);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(a[t][t]);
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                let p = a[t][t];
                let bad = (t + 1..m).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
                match bad {
                    None => break,
                    Some(i) => {
                        for j in t..cols {
                            a[t][j] += a[i][j];
                        }
                    }
                }
            }
            let (pr, pc) = smallest_nonzero(&a, t, cols).expect("pivot row is nonzero");
            if (pr, pc) != (t, t) && a[pr][pc].abs() < a[t][t].abs() {
                a.swap(t, pr);
                for row in a.iter_mut() {
                    row.swap(t, pc);
                }
            }
        }
        diag.push(a[t][t].unsigned_abs() as u64);
    }
    diag
}

/// Smallest nonzero entry in the submatrix from `(t, t)`, preferring row
/// `t` and column `t` on ties.
fn smallest_nonzero(a: &[Vec<i128>], t: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &x) in row.iter().enumerate().take(cols).skip(t) {
            if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}
