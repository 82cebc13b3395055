//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use vlink::algebra::{validate_biquandle, BiquandleTables, FiniteBiquandle, FiniteGroup, FiniteQuandle};
use vlink::gauss::{GaussCode, Role, Sign};
use vlink::present::{OpKind, Presentation, Relation};

fn assignments(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(k as u32).expect("assignment space fits in usize");
    (0..total).map(move |code| (0..k).map(|i| code / n.pow(i as u32) % n).collect())
}

fn brute_equations(p: &Presentation, n: usize, apply: impl Fn(OpKind, usize, usize) -> usize) -> u64 {
    let pos: HashMap<&str, usize> = p.generators.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
    assignments(n, p.generators.len())
        .filter(|v| {
            p.relations.iter().all(|r| {
                let Relation::Equation { lhs, rhs } = r else { panic!("relator in an equational presentation") };
                let x = rhs.ops.iter().fold(v[pos[rhs.base.as_str()]], |x, o| apply(o.op, x, v[pos[o.arg.as_str()]]));
                x == v[pos[lhs.as_str()]]
            })
        })
        .count() as u64
}

/// Counts quandle colorings by trying every assignment.
pub fn brute_quandle(p: &Presentation, q: &FiniteQuandle) -> u64 {
    brute_equations(p, q.size(), |op, a, b| match op {
        OpKind::Up => q.op(a, b),
        OpKind::UpBar => q.inv_op(a, b),
        _ => panic!("biquandle operation in a quandle presentation"),
    })
}

pub fn brute_biquandle(p: &Presentation, b: &FiniteBiquandle) -> u64 {
    brute_equations(p, b.size(), |op, x, y| match op {
        OpKind::Up => b.up(x, y),
        OpKind::UpBar => b.up_bar(x, y),
        OpKind::Down => b.down(x, y),
        OpKind::DownBar => b.down_bar(x, y),
    })
}

pub fn brute_group(p: &Presentation, g: &FiniteGroup) -> u64 {
    let pos: HashMap<&str, usize> = p.generators.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    assignments(g.order(), p.generators.len())
        .filter(|v| {
            p.relations.iter().all(|r| {
                let Relation::Relator { relator } = r else { panic!("equation in a group presentation") };
                let mut x = g.identity();
                for l in relator {
                    let base = if l.exp < 0 { g.inv(v[pos[l.gen.as_str()]]) } else { v[pos[l.gen.as_str()]] };
                    for _ in 0..l.exp.unsigned_abs() {
                        x = g.mul(x, base);
                    }
                }
                x == g.identity()
            })
        })
        .count() as u64
}

/// Genus from a dart rotation system: faces are orbits of rotation after
/// edge involution, and each connected piece contributes `(2 - V + E - F) / 2`.
pub fn genus_oracle(code: &GaussCode) -> usize {
    // Darts per passage: 2k is the incoming end, 2k + 1 the outgoing end.
    let mut flat = Vec::new();
    let mut next = Vec::new();
    for comp in code.components() {
        let base = flat.len();
        for (i, p) in comp.iter().enumerate() {
            flat.push(*p);
            next.push(base + (i + 1) % comp.len());
        }
    }
    let darts = 2 * flat.len();
    let mut alpha = vec![0; darts];
    for (k, &nk) in next.iter().enumerate() {
        alpha[2 * k + 1] = 2 * nk;
        alpha[2 * nk] = 2 * k + 1;
    }
    let mut sigma = vec![0; darts];
    let mut vertex = vec![0; darts];
    let mut by_crossing: HashMap<u32, [usize; 2]> = HashMap::new();
    for (k, p) in flat.iter().enumerate() {
        let slot = if p.role == Role::Under { 0 } else { 1 };
        by_crossing.entry(p.crossing).or_insert([0, 0])[slot] = k;
    }
    for (v, (_, [u, o])) in by_crossing.iter().enumerate() {
        let sign = flat[*u].sign;
        let (ui, uo, oi, oo) = (2 * u, 2 * u + 1, 2 * o, 2 * o + 1);
        let cycle = if sign == Sign::Pos { [ui, oi, uo, oo] } else { [ui, oo, uo, oi] };
        for i in 0..4 {
            sigma[cycle[i]] = cycle[(i + 1) % 4];
            vertex[cycle[i]] = v;
        }
    }
    let mut seen = vec![false; darts];
    let mut face_of = vec![0; darts];
    let mut faces = 0;
    for d in 0..darts {
        if seen[d] {
            continue;
        }
        let mut x = d;
        while !seen[x] {
            seen[x] = true;
            face_of[x] = faces;
            x = sigma[alpha[x]];
        }
        faces += 1;
    }
    // Connected pieces of the graph, through the edges.
    let v = by_crossing.len();
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for d in 0..darts {
        let (a, b) = (find(&mut parent, vertex[d]), find(&mut parent, vertex[alpha[d]]));
        parent[a] = b;
    }
    let mut piece_v = HashMap::new();
    for x in 0..v {
        *piece_v.entry(find(&mut parent, x)).or_insert(0i64) += 1;
    }
    let mut piece_f: HashMap<usize, std::collections::HashSet<usize>> = HashMap::new();
    for d in 0..darts {
        let r = find(&mut parent, vertex[d]);
        piece_f.entry(r).or_default().insert(face_of[d]);
    }
    piece_v
        .iter()
        .map(|(r, &nv)| {
            let chi = nv - 2 * nv + piece_f[r].len() as i64;
            ((2 - chi) / 2) as usize
        })
        .sum()
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|s| s.count_ones() as usize == k).map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect()).collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Nonzero invariant factors from determinantal divisors `d_k`, the gcd of
/// all `k x k` minors.
pub fn invariant_factors_oracle(m: &[Vec<i64>], cols: usize) -> Vec<u64> {
    let rows = m.len();
    let mut prev = 1i128;
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut d = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect()).collect();
                d = gcd(d, det(&sub));
            }
        }
        if d == 0 {
            break;
        }
        out.push((d / prev) as u64);
        prev = d;
    }
    out
}

/// All biquandles `(x, y) -> (A x + B y, C y + D x)` on `F_2^2`.
pub fn linear_biquandles_f2_squared() -> Vec<FiniteBiquandle> {
    let apply = |m: usize, v: usize| {
        let (x0, x1) = (v & 1, v >> 1);
        let r0 = ((m & 1) * x0 + (m >> 1 & 1) * x1) & 1;
        let r1 = ((m >> 2 & 1) * x0 + (m >> 3 & 1) * x1) & 1;
        r0 | r1 << 1
    };
    let mut out = Vec::new();
    for code in 0..1usize << 16 {
        let (a, b, c, d) = (code & 15, code >> 4 & 15, code >> 8 & 15, code >> 12);
        let up: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|y| apply(a, x) ^ apply(b, y)).collect()).collect();
        let down: Vec<Vec<usize>> = (0..4).map(|y| (0..4).map(|x| apply(c, y) ^ apply(d, x)).collect()).collect();
        let mut up_bar = vec![vec![usize::MAX; 4]; 4];
        let mut down_bar = vec![vec![usize::MAX; 4]; 4];
        let mut bijective = true;
        for x in 0..4 {
            for y in 0..4 {
                let (u, w) = (up[x][y], down[y][x]);
                bijective &= up_bar[u][w] == usize::MAX;
                up_bar[u][w] = x;
                down_bar[w][u] = y;
            }
        }
        if bijective {
            if let Ok(b) = validate_biquandle(&BiquandleTables { n: 4, up, down, up_bar, down_bar }) {
                out.push(b);
            }
        }
    }
    out
}
