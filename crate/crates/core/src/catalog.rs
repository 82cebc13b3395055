//! Named codes.

use serde::Serialize;

use crate::gauss::{braid_closure, parse_gauss, GaussCode};

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub code: GaussCode,
    pub notes: &'static str,
}

const KISHINO: &str = "O1+ U2- U1+ O2- O3- O4+ U3- U4+";

pub fn catalog() -> Vec<CatalogEntry> {
    let entry = |name, text: &str, notes| CatalogEntry { name, code: parse_gauss(text).expect("catalog code"), notes };
    vec![
        CatalogEntry { name: "unknot", code: GaussCode::unknot(), notes: "crossingless circle" },
        entry("trefoil", "O1+ U2+ O3+ U1+ O2+ U3+", "right-handed trefoil, closure of the 2-braid s1^3"),
        CatalogEntry {
            name: "figure-eight",
            code: braid_closure(3, &[1, -2, 1, -2]),
            notes: "closure of the 3-braid s1 s2^-1 s1 s2^-1",
        },
        entry(
            "virtual-trefoil",
            "O1+ U2+ U1+ O2+",
            "two classical crossings of the trefoil diagram with the third made virtual",
        ),
        entry("kishino", KISHINO, "connected sum of two trivial two-crossing virtual knots; supporting genus 2"),
    ]
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// A catalog name or a Gauss code literal.
pub fn resolve(text: &str) -> Result<GaussCode, crate::gauss::GaussError> {
    match lookup(text.trim()) {
        Some(e) => Ok(e.code),
        None => parse_gauss(text),
    }
}
