//! Gauss codes of braid closures.

use super::{GaussCode, Passage, Sign};

/// Closure of a braid word on `strands` strands. Letter `i > 0` is the
/// generator where the strand in position `i - 1` crosses over the strand in
/// position `i` (a positive crossing); `-i` is its inverse.
pub fn braid_closure(strands: usize, word: &[i32]) -> GaussCode {
    assert!(strands >= 1);
    assert!(word.iter().all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
    let mut visited = vec![false; strands];
    let mut components = Vec::new();
    for start in 0..strands {
        if visited[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut p = start;
        loop {
            visited[p] = true;
            for (k, &l) in word.iter().enumerate() {
                let i = l.unsigned_abs() as usize;
                let id = k as u32 + 1;
                let sign = if l > 0 { Sign::Pos } else { Sign::Neg };
                if p == i - 1 {
                    comp.push(if l > 0 { Passage::over(id, sign) } else { Passage::under(id, sign) });
                    p = i;
                } else if p == i {
                    comp.push(if l > 0 { Passage::under(id, sign) } else { Passage::over(id, sign) });
                    p = i - 1;
                }
            }
            if p == start {
                break;
            }
        }
        components.push(comp);
    }
    GaussCode::new(components).expect("braid closure is a valid code")
}
