use super::{OpKind, Presentation, PresentationKind, Relation};
use crate::gauss::{GaussCode, Position, Role, Sign};

/// Arcs of a diagram: each arc ends at an under passage (inclusive) and
/// starts just after the previous one on its component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcData {
    /// `arc_of[comp][idx]` is the arc containing that passage.
    pub arc_of: Vec<Vec<usize>>,
    /// First arc index of each component.
    pub first_arc: Vec<usize>,
    pub num_arcs: usize,
}

impl ArcData {
    pub fn arc_at(&self, pos: Position) -> usize {
        self.arc_of[pos.comp][pos.idx]
    }
}

/// Arcs are numbered component by component, in order of their closing
/// under passage. A component without under passages is one arc.
pub fn arcs(code: &GaussCode) -> ArcData {
    let mut arc_of = Vec::new();
    let mut first_arc = Vec::new();
    let mut next = 0;
    for comp in code.components() {
        first_arc.push(next);
        let unders: Vec<usize> = (0..comp.len()).filter(|&i| comp[i].role == Role::Under).collect();
        if unders.is_empty() {
            arc_of.push(vec![next; comp.len()]);
            next += 1;
            continue;
        }
        let mut local = vec![0; comp.len()];
        let mut j = 0;
        for (i, slot) in local.iter_mut().enumerate() {
            while j < unders.len() && unders[j] < i {
                j += 1;
            }
            *slot = next + if j == unders.len() { 0 } else { j };
        }
        arc_of.push(local);
        next += unders.len();
    }
    ArcData { arc_of, first_arc, num_arcs: next }
}

fn arc_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("a{i}")).collect()
}

/// The knot quandle of the diagram: one generator per arc and one relation
/// per crossing, `x = z^y` at a positive crossing and `x = z^{~y}` at a
/// negative one, where `y` is the over arc and `z`, `x` the incoming and
/// outgoing under arcs.
pub fn wirtinger_quandle(code: &GaussCode) -> Presentation {
    let data = arcs(code);
    let names = arc_names(data.num_arcs);
    let relations = code
        .crossings()
        .values()
        .map(|c| {
            let z = data.arc_at(c.under);
            let x = data.arc_at(code.next_pos(c.under));
            let y = data.arc_at(c.over);
            let op = match c.sign {
                Sign::Pos => OpKind::Up,
                Sign::Neg => OpKind::UpBar,
            };
            Relation::equation(names[x].clone(), names[z].clone(), vec![(op, names[y].clone())])
        })
        .collect();
    Presentation { kind: PresentationKind::Quandle, generators: names, relations }
}

/// The link group: relator `x y z^-1 y^-1` at a positive crossing and
/// `x y^-1 z^-1 y` at a negative one.
pub fn wirtinger_group(code: &GaussCode) -> Presentation {
    let data = arcs(code);
    let names = arc_names(data.num_arcs);
    let relations = code
        .crossings()
        .values()
        .map(|c| {
            let z = names[data.arc_at(c.under)].clone();
            let x = names[data.arc_at(code.next_pos(c.under))].clone();
            let y = names[data.arc_at(c.over)].clone();
            let e = c.sign.to_i8() as i32;
            Relation::relator(vec![(x, 1), (y.clone(), e), (z, -1), (y, -e)])
        })
        .collect();
    Presentation { kind: PresentationKind::Group, generators: names, relations }
}

/// Semi-arc `p` runs from passage `p` to the next passage; passages are
/// numbered component by component. A crossingless component is one
/// semi-arc.
fn semiarc_numbering(code: &GaussCode) -> (Vec<usize>, usize) {
    let mut start = Vec::new();
    let mut next = 0;
    for comp in code.components() {
        start.push(next);
        next += comp.len().max(1);
    }
    (start, next)
}

/// The biquandle of the diagram on its semi-arcs. With `a` the incoming
/// under semi-arc and `b` the incoming over semi-arc, a positive crossing
/// gives outgoing under `a^b` and outgoing over `b_a`; a negative one gives
/// `a^{~b}` and `b_{~a}`.
pub fn semiarc_biquandle(code: &GaussCode) -> Presentation {
    let (start, total) = semiarc_numbering(code);
    let names: Vec<String> = (1..=total).map(|i| format!("s{i}")).collect();
    let semi = |p: Position| start[p.comp] + p.idx;
    let mut relations = Vec::new();
    for c in code.crossings().values() {
        let a = names[semi(code.prev_pos(c.under))].clone();
        let b = names[semi(code.prev_pos(c.over))].clone();
        let under_out = names[semi(c.under)].clone();
        let over_out = names[semi(c.over)].clone();
        let (up, down) = match c.sign {
            Sign::Pos => (OpKind::Up, OpKind::Down),
            Sign::Neg => (OpKind::UpBar, OpKind::DownBar),
        };
        relations.push(Relation::equation(under_out, a.clone(), vec![(up, b.clone())]));
        relations.push(Relation::equation(over_out, b, vec![(down, a)]));
    }
    Presentation { kind: PresentationKind::Biquandle, generators: names, relations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::parse_gauss;

    #[test]
    fn unknot_presentations() {
        let u = GaussCode::unknot();
        for p in [wirtinger_quandle(&u), wirtinger_group(&u), semiarc_biquandle(&u)] {
            assert_eq!(p.generators.len(), 1);
            assert!(p.relations.is_empty());
            p.check().unwrap();
        }
        let p = wirtinger_group(&GaussCode::unlink(2));
        assert_eq!(p.generators, vec!["a1", "a2"]);
    }

    #[test]
    fn trefoil_wirtinger_by_hand() {
        // Unders at 1, 3, 5: arcs a1 = {0, 1}, a2 = {2, 3}, a3 = {4, 5}.
        let t = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        let p = wirtinger_quandle(&t);
        assert_eq!(p.generators.len(), 3);
        let rels: Vec<String> = p.relations.iter().map(|r| r.to_string()).collect();
        // Crossing 1: over at 0 (a1), under at 3 (a2 -> a3).
        // Crossing 2: over at 4 (a3), under at 1 (a1 -> a2).
        // Crossing 3: over at 2 (a2), under at 5 (a3 -> a1).
        assert_eq!(rels, vec!["a3 = a2 ^a1", "a2 = a1 ^a3", "a1 = a3 ^a2"]);
    }

    #[test]
    fn virtual_trefoil_has_two_arcs() {
        let v = parse_gauss("O1+ U2+ U1+ O2+").unwrap();
        let p = wirtinger_quandle(&v);
        assert_eq!(p.generators.len(), 2);
        assert_eq!(p.relations.len(), 2);
    }

    #[test]
    fn single_under_gives_self_relation() {
        let c = parse_gauss("O1- U1-").unwrap();
        let p = wirtinger_quandle(&c);
        assert_eq!(p.relations[0].to_string(), "a1 = a1 ^~a1");
    }

    #[test]
    fn semiarc_counts() {
        let t = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        let p = semiarc_biquandle(&t);
        assert_eq!(p.generators.len(), 6);
        assert_eq!(p.relations.len(), 6);
        p.check().unwrap();
        let rels: Vec<String> = p.relations.iter().take(2).map(|r| r.to_string()).collect();
        // Crossing 1: under at 3 (in s3, out s4), over at 0 (in s6, out s1).
        assert_eq!(rels, vec!["s4 = s3 ^s6", "s1 = s6 _s3"]);
    }

    #[test]
    fn arcs_wrap_around() {
        let c = parse_gauss("U1+ O2+ O1+ U2+ O3- U3-").unwrap();
        let a = arcs(&c);
        assert_eq!(a.arc_of, vec![vec![0, 1, 1, 1, 2, 2]]);
    }
}
