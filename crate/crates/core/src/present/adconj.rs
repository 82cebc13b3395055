use super::{OpKind, PresentError, Presentation, PresentationKind, Relation};

/// Group presentation of a quandle presentation, reading `z^y` as `y z y^-1`
/// and `z^{~y}` as `y^-1 z y`. The relation `x = z^{w}` becomes the relator
/// `x W z^-1 W^-1` where `W` is the conjugating word.
pub fn adconj(q: &Presentation) -> Result<Presentation, PresentError> {
    q.expect_kind(PresentationKind::Quandle)?;
    q.check()?;
    let relations = q
        .relations
        .iter()
        .map(|r| {
            let Relation::Equation { lhs, rhs } = r else { unreachable!("checked quandle shape") };
            let w: Vec<(String, i32)> = rhs
                .ops
                .iter()
                .rev()
                .map(|o| (o.arg.clone(), if o.op == OpKind::Up { 1 } else { -1 }))
                .collect();
            let mut letters = vec![(lhs.clone(), 1)];
            letters.extend(w.iter().cloned());
            letters.push((rhs.base.clone(), -1));
            letters.extend(w.iter().rev().map(|(g, e)| (g.clone(), -e)));
            Relation::relator(letters)
        })
        .collect();
    Ok(Presentation { kind: PresentationKind::Group, generators: q.generators.clone(), relations })
}
