//! Coloring counts by backtracking with relation propagation.
//!
//! Generators are branched on in declaration order and values ascend. Before
//! each branch, every relation whose right-hand side is fully known fixes its
//! left-hand side, and every relation whose left side and arguments are known
//! fixes its base by inverting the operations.

use serde::{Deserialize, Serialize};

use super::{PresentError, Presentation, PresentationKind, Relation};
use crate::algebra::{FiniteBiquandle, FiniteGroup, FiniteQuandle, Table};
use crate::exec::Exec;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoringCount {
    pub target: String,
    pub total: u64,
    /// Colorings whose image is the whole target.
    pub surjective: u64,
    /// Colorings using a single element.
    pub constant: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Tally {
    total: u64,
    surjective: u64,
    constant: u64,
}

impl Tally {
    fn add(self, o: Tally) -> Tally {
        Tally { total: self.total + o.total, surjective: self.surjective + o.surjective, constant: self.constant + o.constant }
    }

    fn into_count(self, target: &str) -> ColoringCount {
        ColoringCount { target: target.to_string(), total: self.total, surjective: self.surjective, constant: self.constant }
    }
}

/// Forward and inverse tables for each operation, indexed by [`OpKind`].
struct Ops {
    n: usize,
    fwd: [Table; 4],
    inv: [Table; 4],
}

impl Ops {
    fn from_tables(fwd: [Table; 4]) -> Ops {
        let inv = fwd.clone().map(|t| t.right_inverse().expect("validated operations are right-invertible"));
        Ops { n: fwd[0].size(), fwd, inv }
    }

    fn quandle(q: &FiniteQuandle) -> Ops {
        let id = Table::from_fn(q.size(), |a, _| a);
        Ops::from_tables([q.op_table().clone(), q.inv_op_table().clone(), id.clone(), id])
    }

    fn biquandle(b: &FiniteBiquandle) -> Ops {
        Ops::from_tables(b.op_tables().map(Table::clone))
    }
}

struct Equation {
    lhs: usize,
    base: usize,
    ops: Vec<(usize, usize)>,
}

struct System {
    gens: usize,
    eqs: Vec<Equation>,
    /// Equations mentioning each generator.
    watch: Vec<Vec<usize>>,
}

impl System {
    fn compile(p: &Presentation) -> Result<System, PresentError> {
        let idx = p.index()?;
        let mut eqs = Vec::new();
        for r in &p.relations {
            let Relation::Equation { lhs, rhs } = r else { unreachable!("checked shape") };
            eqs.push(Equation {
                lhs: idx[lhs.as_str()],
                base: idx[rhs.base.as_str()],
                ops: rhs.ops.iter().map(|o| (o.op.index(), idx[o.arg.as_str()])).collect(),
            });
        }
        let mut watch = vec![Vec::new(); p.generators.len()];
        for (k, e) in eqs.iter().enumerate() {
            let mut syms: Vec<usize> = vec![e.lhs, e.base];
            syms.extend(e.ops.iter().map(|o| o.1));
            syms.sort_unstable();
            syms.dedup();
            for s in syms {
                watch[s].push(k);
            }
        }
        Ok(System { gens: p.generators.len(), eqs, watch })
    }
}

const FREE: usize = usize::MAX;

struct Search<'a> {
    sys: &'a System,
    ops: &'a Ops,
}

impl Search<'_> {
    /// Assigns `g = v` and propagates; on conflict returns false. Every
    /// assignment made is pushed on `trail`.
    fn assign(&self, vals: &mut [usize], trail: &mut Vec<usize>, g: usize, v: usize) -> bool {
        let mut queue = vec![(g, v)];
        while let Some((g, v)) = queue.pop() {
            if vals[g] != FREE {
                if vals[g] != v {
                    return false;
                }
                continue;
            }
            vals[g] = v;
            trail.push(g);
            for &k in &self.sys.watch[g] {
                match self.evaluate(vals, k) {
                    Eval::Conflict => return false,
                    Eval::Forces(h, w) => queue.push((h, w)),
                    Eval::Nothing => {}
                }
            }
        }
        true
    }

    fn evaluate(&self, vals: &[usize], k: usize) -> Eval {
        let e = &self.sys.eqs[k];
        if e.ops.iter().any(|&(_, a)| vals[a] == FREE) {
            return Eval::Nothing;
        }
        if vals[e.base] != FREE {
            let x = e.ops.iter().fold(vals[e.base], |x, &(op, a)| self.ops.fwd[op].get(x, vals[a]));
            if vals[e.lhs] == FREE {
                Eval::Forces(e.lhs, x)
            } else if vals[e.lhs] == x {
                Eval::Nothing
            } else {
                Eval::Conflict
            }
        } else if vals[e.lhs] != FREE {
            let x = e.ops.iter().rev().fold(vals[e.lhs], |x, &(op, a)| self.ops.inv[op].get(x, vals[a]));
            Eval::Forces(e.base, x)
        } else {
            Eval::Nothing
        }
    }

    fn undo(vals: &mut [usize], trail: &mut Vec<usize>, mark: usize) {
        for g in trail.drain(mark..) {
            vals[g] = FREE;
        }
    }

    fn dfs(&self, vals: &mut [usize], trail: &mut Vec<usize>) -> Tally {
        let Some(g) = vals.iter().position(|&v| v == FREE) else {
            return self.leaf(vals);
        };
        let mut t = Tally::default();
        for v in 0..self.ops.n {
            let mark = trail.len();
            if self.assign(vals, trail, g, v) {
                t = t.add(self.dfs(vals, trail));
            }
            Self::undo(vals, trail, mark);
        }
        t
    }

    fn leaf(&self, vals: &[usize]) -> Tally {
        let mut seen = vec![false; self.ops.n];
        let mut image = 0;
        for &v in vals {
            if !seen[v] {
                seen[v] = true;
                image += 1;
            }
        }
        Tally { total: 1, surjective: (image == self.ops.n) as u64, constant: (image <= 1) as u64 }
    }

    fn run(&self, exec: Exec) -> Tally {
        let vals = vec![FREE; self.sys.gens];
        if self.sys.gens == 0 {
            return self.leaf(&vals);
        }
        let firsts: Vec<usize> = (0..self.ops.n).collect();
        let parts = exec.map(&firsts, |&v| {
            let mut vals = vals.clone();
            let mut trail = Vec::new();
            if self.assign(&mut vals, &mut trail, 0, v) {
                self.dfs(&mut vals, &mut trail)
            } else {
                Tally::default()
            }
        });
        parts.into_iter().fold(Tally::default(), Tally::add)
    }
}

enum Eval {
    Nothing,
    Forces(usize, usize),
    Conflict,
}

fn count(p: &Presentation, ops: &Ops, target: &str, exec: Exec) -> Result<ColoringCount, PresentError> {
    let sys = System::compile(p)?;
    Ok(Search { sys: &sys, ops }.run(exec).into_count(target))
}

/// Quandle homomorphisms from the presented quandle to `q`.
pub fn count_quandle_colorings(p: &Presentation, q: &FiniteQuandle, target: &str) -> Result<ColoringCount, PresentError> {
    count_quandle_colorings_with(p, q, target, Exec::default())
}

pub fn count_quandle_colorings_with(
    p: &Presentation,
    q: &FiniteQuandle,
    target: &str,
    exec: Exec,
) -> Result<ColoringCount, PresentError> {
    p.expect_kind(PresentationKind::Quandle)?;
    count(p, &Ops::quandle(q), target, exec)
}

/// Biquandle homomorphisms from the presented biquandle to `b`.
pub fn count_biquandle_colorings(
    p: &Presentation,
    b: &FiniteBiquandle,
    target: &str,
) -> Result<ColoringCount, PresentError> {
    count_biquandle_colorings_with(p, b, target, Exec::default())
}

pub fn count_biquandle_colorings_with(
    p: &Presentation,
    b: &FiniteBiquandle,
    target: &str,
    exec: Exec,
) -> Result<ColoringCount, PresentError> {
    p.expect_kind(PresentationKind::Biquandle)?;
    count(p, &Ops::biquandle(b), target, exec)
}

/// Group homomorphisms from the presented group to `g`. A relator with a
/// single unknown generator occurring once is solved for it.
pub fn count_group_homomorphisms(p: &Presentation, g: &FiniteGroup, target: &str) -> Result<ColoringCount, PresentError> {
    count_group_homomorphisms_with(p, g, target, Exec::default())
}

pub fn count_group_homomorphisms_with(
    p: &Presentation,
    g: &FiniteGroup,
    target: &str,
    exec: Exec,
) -> Result<ColoringCount, PresentError> {
    p.expect_kind(PresentationKind::Group)?;
    let idx = p.index()?;
    let relators: Vec<Vec<(usize, i32)>> = p
        .relations
        .iter()
        .map(|r| {
            let Relation::Relator { relator } = r else { unreachable!("checked shape") };
            relator.iter().map(|l| (idx[l.gen.as_str()], l.exp)).collect()
        })
        .collect();
    let search = GroupSearch { g, relators, gens: p.generators.len() };
    let firsts: Vec<usize> = (0..g.order()).collect();
    let tally = if search.gens == 0 {
        search.leaf(&[])
    } else {
        exec.map(&firsts, |&v| {
            let mut vals = vec![FREE; search.gens];
            vals[0] = v;
            search.dfs(&mut vals)
        })
        .into_iter()
        .fold(Tally::default(), Tally::add)
    };
    Ok(tally.into_count(target))
}

struct GroupSearch<'a> {
    g: &'a FiniteGroup,
    relators: Vec<Vec<(usize, i32)>>,
    gens: usize,
}

impl GroupSearch<'_> {
    fn pow(&self, x: usize, e: i32) -> usize {
        let base = if e < 0 { self.g.inv(x) } else { x };
        (0..e.unsigned_abs()).fold(self.g.identity(), |acc, _| self.g.mul(acc, base))
    }

    fn product(&self, word: &[(usize, i32)], vals: &[usize]) -> usize {
        word.iter().fold(self.g.identity(), |acc, &(s, e)| self.g.mul(acc, self.pow(vals[s], e)))
    }

    /// Checks complete relators and solves those with one unknown letter.
    /// Returns false on conflict; assigned generators are appended to `set`.
    fn propagate(&self, vals: &mut [usize], set: &mut Vec<usize>) -> bool {
        loop {
            let mut progress = false;
            for w in &self.relators {
                let unknown: Vec<usize> = (0..w.len()).filter(|&i| vals[w[i].0] == FREE).collect();
                match unknown.as_slice() {
                    [] => {
                        if self.product(w, vals) != self.g.identity() {
                            return false;
                        }
                    }
                    &[i] if w[i].1.abs() == 1 => {
                        // A x^e B = 1  =>  x^e = A^-1 B^-1.
                        let a = self.product(&w[..i], vals);
                        let b = self.product(&w[i + 1..], vals);
                        let y = self.g.mul(self.g.inv(a), self.g.inv(b));
                        let x = if w[i].1 == 1 { y } else { self.g.inv(y) };
                        vals[w[i].0] = x;
                        set.push(w[i].0);
                        progress = true;
                    }
                    _ => {}
                }
            }
            if !progress {
                return true;
            }
        }
    }

    fn dfs(&self, vals: &mut [usize]) -> Tally {
        let mut set = Vec::new();
        let ok = self.propagate(vals, &mut set);
        let t = if !ok {
            Tally::default()
        } else if let Some(gi) = vals.iter().position(|&v| v == FREE) {
            let mut t = Tally::default();
            for v in 0..self.g.order() {
                vals[gi] = v;
                t = t.add(self.dfs(vals));
            }
            vals[gi] = FREE;
            t
        } else {
            self.leaf(vals)
        };
        for s in set {
            vals[s] = FREE;
        }
        t
    }

    fn leaf(&self, vals: &[usize]) -> Tally {
        let mut seen = vec![false; self.g.order()];
        vals.iter().for_each(|&v| seen[v] = true);
        let image = seen.iter().filter(|&&s| s).count();
        Tally { total: 1, surjective: (image == self.g.order()) as u64, constant: (image <= 1) as u64 }
    }
}
