//! Bundled catalog of named groups.
//!
//! Backed by assets/catalog.json, which lists each group either as a
//! multiplication table or as permutation generators (closure-enumerated on
//! load). The same file format is accepted for user-supplied `--group` files.

use serde::Deserialize;
use std::sync::Arc;

use crate::group::{FiniteGroup, GroupError, GroupRef};

pub const DEFAULT_GROUP_CAP: usize = 64;

#[derive(Deserialize)]
struct CatalogFile {
    groups: Vec<CatalogEntry>,
}

#[derive(Deserialize)]
struct CatalogEntry {
    name: String,
    #[serde(default)]
    description: String,
    #[serde(default)]
    degree: Option<usize>,
    #[serde(default)]
    generators: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    table: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    element_names: Option<Vec<String>>,
}

const CATALOG_JSON: &str = include_str!("../assets/catalog.json");

fn parse_catalog() -> Vec<CatalogEntry> {
    let f: CatalogFile = serde_json::from_str(CATALOG_JSON).expect("bundled catalog is valid");
    f.groups
}

pub fn names() -> Vec<&'static str> {
    // aliases included for CLI convenience
    vec![
        "z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z2xz2", "s3", "d4", "q8", "dic12",
        "sl2_3",
    ]
}

pub fn descriptions() -> Vec<(String, String, usize)> {
    parse_catalog()
        .iter()
        .map(|e| {
            let g = build(e).unwrap();
            (e.name.clone(), e.description.clone(), g.order())
        })
        .collect()
}

fn build(entry: &CatalogEntry) -> Result<GroupRef, GroupError> {
    let mut g = if let Some(table) = &entry.table {
        FiniteGroup::from_table(table)?
    } else {
        let gens = entry.generators.clone().unwrap_or_default();
        let degree = entry.degree.unwrap_or_else(|| {
            gens.first().map(|p| p.len()).unwrap_or(1)
        });
        FiniteGroup::from_generators(&gens, degree, DEFAULT_GROUP_CAP)?
    };
    if let Some(names) = &entry.element_names {
        let inner = Arc::get_mut(&mut g).expect("fresh group is uniquely owned");
        inner.element_names = Some(names.clone());
    }
    Ok(g)
}

/// Look up a catalog group by name (case-insensitive; "dicyclic-12" and
/// "sl2(3)" style aliases accepted).
pub fn by_name(name: &str) -> Option<GroupRef> {
    let canon = name
        .to_ascii_lowercase()
        .replace(['(', ')'], "_")
        .replace("dicyclic-12", "dic12")
        .replace("sl2_3_", "sl2_3");
    let canon = canon.trim_end_matches('_');
    parse_catalog()
        .iter()
        .find(|e| e.name == canon)
        .map(|e| build(e).expect("bundled catalog entries are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        let expect = [
            ("z1", 1),
            ("z2", 2),
            ("z3", 3),
            ("z4", 4),
            ("z5", 5),
            ("z6", 6),
            ("z7", 7),
            ("z8", 8),
            ("z2xz2", 4),
            ("s3", 6),
            ("d4", 8),
            ("q8", 8),
            ("dic12", 12),
            ("sl2_3", 24),
        ];
        for (name, order) in expect {
            let g = by_name(name).unwrap_or_else(|| panic!("missing {name}"));
            assert_eq!(g.order(), order, "{name}");
        }
    }

    #[test]
    fn aliases_resolve() {
        assert!(by_name("dicyclic-12").is_some());
        assert!(by_name("SL2(3)").is_some());
        assert!(by_name("Q8").is_some());
    }

    #[test]
    fn sl2_3_structure() {
        let g = by_name("sl2_3").unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.unique_involution().is_some(), true);
        assert_eq!(g.center().len(), 2);
        assert_eq!(g.conjugacy_classes().count(), 7);
        use crate::group::Sylow2Type;
        assert_eq!(g.sylow2_type(), Sylow2Type::GeneralizedQuaternion);
    }

    #[test]
    fn dic12_structure() {
        let g = by_name("dic12").unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.unique_involution().is_some());
        assert_eq!(g.exponent(), 12);
    }
}
