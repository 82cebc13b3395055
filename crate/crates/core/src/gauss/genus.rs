//! Supporting genus: thicken the 4-valent diagram graph into a band surface
//! using the crossing rotation below, cap the boundary circles, and read off
//! the genus of each connected piece.
//!
//! Band ends at a crossing, in cyclic order:
//!   positive: under-in, over-in, under-out, over-out
//!   negative: under-in, over-out, under-out, over-in

use serde::{Deserialize, Serialize};

use super::{GaussCode, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusReport {
    /// Sum of the genera of the capped pieces.
    pub genus: usize,
    /// Connected pieces of the diagram, counting crossingless circles.
    pub pieces: usize,
    pub boundary_circles: usize,
    /// The diagram graph has more than one piece; the summed genus is then a
    /// convention rather than a realizability statement about a single surface.
    pub disconnected: bool,
}

pub fn supporting_genus(code: &GaussCode) -> usize {
    supporting_genus_report(code).genus
}

/// Genus zero: the code comes from a diagram on the sphere.
pub fn is_realizable(code: &GaussCode) -> bool {
    supporting_genus(code) == 0
}

pub fn supporting_genus_report(code: &GaussCode) -> GenusReport {
    // Global passage index g; band end 2g is the "in" end at that passage,
    // 2g + 1 the "out" end.
    let comps = code.components();
    let mut offset = Vec::with_capacity(comps.len());
    let mut total = 0;
    for c in comps {
        offset.push(total);
        total += c.len();
    }
    let global = |comp: usize, idx: usize| offset[comp] + idx;

    // partner[end]: the other end of the band edge through it.
    let mut partner = vec![0usize; 2 * total];
    for (ci, c) in comps.iter().enumerate() {
        for idx in 0..c.len() {
            let here = global(ci, idx);
            let next = global(ci, (idx + 1) % c.len());
            partner[2 * here + 1] = 2 * next;
            partner[2 * next] = 2 * here + 1;
        }
    }

    let crossings = code.crossings();
    let mut rot_next = vec![0usize; 2 * total];
    let mut vertex_of = vec![0usize; 2 * total];
    for (v, info) in crossings.values().enumerate() {
        let o = global(info.over.comp, info.over.idx);
        let u = global(info.under.comp, info.under.idx);
        let (ui, uo, oi, oo) = (2 * u, 2 * u + 1, 2 * o, 2 * o + 1);
        let cycle = match info.sign {
            Sign::Pos => [ui, oi, uo, oo],
            Sign::Neg => [ui, oo, uo, oi],
        };
        for k in 0..4 {
            rot_next[cycle[k]] = cycle[(k + 1) % 4];
            vertex_of[cycle[k]] = v;
        }
    }

    let nv = crossings.len();
    let mut uf = UnionFind::new(nv);
    for end in 0..2 * total {
        uf.union(vertex_of[end], vertex_of[partner[end]]);
    }

    // Each boundary circle: leave along `end`, arrive at partner, turn to the
    // next end in the rotation.
    let mut seen = vec![false; 2 * total];
    let mut faces_per_root = vec![0usize; nv];
    let mut circles = 0;
    for start in 0..2 * total {
        if seen[start] {
            continue;
        }
        circles += 1;
        faces_per_root[uf.find(vertex_of[start])] += 1;
        let mut e = start;
        while !seen[e] {
            seen[e] = true;
            e = rot_next[partner[e]];
        }
    }

    let mut verts_per_root = vec![0usize; nv];
    for v in 0..nv {
        verts_per_root[uf.find(v)] += 1;
    }
    let mut genus = 0;
    let mut pieces = 0;
    for root in 0..nv {
        if verts_per_root[root] == 0 {
            continue;
        }
        pieces += 1;
        // chi = V - E + F with E = 2V.
        let v = verts_per_root[root] as isize;
        let f = faces_per_root[root] as isize;
        let chi = f - v;
        debug_assert!((2 - chi) % 2 == 0 && chi <= 2);
        genus += ((2 - chi) / 2) as usize;
    }
    let empty = comps.iter().filter(|c| c.is_empty()).count();
    circles += 2 * empty;
    pieces += empty;
    GenusReport { genus, pieces, boundary_circles: circles, disconnected: pieces > 1 }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
