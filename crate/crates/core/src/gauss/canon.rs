//! Canonical text form: the lexicographically least serialization over all
//! component orders, rotations, and relabelings by first appearance.

use std::collections::HashMap;
use std::fmt::Write;

use super::Passage;

pub(super) fn canonical_string(components: &[Vec<Passage>]) -> String {
    let mut search = Search { components, best: None };
    let mut used = vec![false; components.len()];
    search.extend(&mut used, &HashMap::new(), 0, String::new());
    search.best.unwrap_or_default()
}

struct Search<'a> {
    components: &'a [Vec<Passage>],
    best: Option<String>,
}

impl Search<'_> {
    fn extend(&mut self, used: &mut [bool], labels: &HashMap<u32, u32>, placed: usize, prefix: String) {
        if placed == self.components.len() {
            if self.best.as_ref().is_none_or(|b| prefix < *b) {
                self.best = Some(prefix);
            }
            return;
        }
        for ci in 0..self.components.len() {
            if used[ci] {
                continue;
            }
            let comp = &self.components[ci];
            let rotations = comp.len().max(1);
            for r in 0..rotations {
                let mut labels = labels.clone();
                let mut s = prefix.clone();
                if placed > 0 {
                    s.push(';');
                }
                if comp.is_empty() {
                    s.push_str("()");
                }
                for k in 0..comp.len() {
                    let p = comp[(r + k) % comp.len()];
                    let next = labels.len() as u32 + 1;
                    let id = *labels.entry(p.crossing).or_insert(next);
                    if k > 0 {
                        s.push(' ');
                    }
                    let _ = write!(s, "{}{}{}", p.role.letter(), id, p.sign.symbol());
                }
                if self.pruned(&s) {
                    continue;
                }
                used[ci] = true;
                self.extend(used, &labels, placed + 1, s);
                used[ci] = false;
            }
        }
    }

    /// True when no completion of `prefix` can beat the current best.
    fn pruned(&self, prefix: &str) -> bool {
        match &self.best {
            None => false,
            Some(best) => {
                let n = prefix.len().min(best.len());
                prefix.as_bytes()[..n] > best.as_bytes()[..n]
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::gauss::parse_gauss;

    #[test]
    fn relabels_by_first_appearance() {
        let c = parse_gauss("U5+ O9+ U9+ O5+").unwrap();
        assert_eq!(c.canonical_string(), "O1+ U1+ O2+ U2+");
    }

    #[test]
    fn orders_components() {
        let c = parse_gauss("U1- O2+; ();O1- U2+").unwrap();
        let s = c.canonical_string();
        assert_eq!(s, "();O1+ U2-;O2- U1+");
        assert_eq!(parse_gauss(&s).unwrap().canonical_string(), s);
    }

    #[test]
    fn trefoil_canonical() {
        let c = parse_gauss("U3+ O1+ U2+ O3+ U1+ O2+").unwrap();
        assert_eq!(c.canonical_string(), "O1+ U2+ O3+ U1+ O2+ U3+");
    }
}
