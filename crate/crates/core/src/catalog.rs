//! Built-in algebras addressable as `catalog:<key>`.

use crate::algebra::RelationAlgebra;
use crate::error::{Error, Result};
use crate::format::parse_algebra;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub algebra: RelationAlgebra,
    pub provenance: &'static str,
}

const RA17: &str = include_str!("../catalog/ra17.alg");
const RA18: &str = include_str!("../catalog/ra18.alg");

const ENTRIES: &[(&str, &str, &str)] = &[
    (
        "ra17",
        RA17,
        "Andreka-Maddux #17; normal representation: Henson graph expanded by its definable binary relations",
    ),
    (
        "ra18",
        RA18,
        "Andreka-Maddux #18; normal representation: random graph expanded by its definable binary relations",
    ),
];

pub fn keys() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|e| e.0)
}

pub fn source(key: &str) -> Option<&'static str> {
    ENTRIES.iter().find(|e| e.0 == key).map(|e| e.1)
}

pub fn entry(key: &str) -> Result<CatalogEntry> {
    let (key, text, provenance) = ENTRIES
        .iter()
        .find(|e| e.0 == key)
        .ok_or_else(|| Error::usage(format!("unknown catalog key `{key}`")))?;
    Ok(CatalogEntry {
        key,
        algebra: parse_algebra(text).expect("catalog data parses"),
        provenance,
    })
}

pub fn entries() -> Vec<CatalogEntry> {
    keys().map(|k| entry(k).expect("listed key")).collect()
}

pub fn ra17() -> RelationAlgebra {
    entry("ra17").unwrap().algebra
}

pub fn ra18() -> RelationAlgebra {
    entry("ra18").unwrap().algebra
}

#[cfg(test)]
mod tests {
    use super::*;

    // Tables transcribed cell by cell; rows and columns in order id, a, b.
    const TABLE_RA17: [[&[&str]; 3]; 3] = [
        [&["id"], &["a"], &["b"]],
        [&["a"], &["id", "b"], &["a", "b"]],
        [&["b"], &["a", "b"], &["id", "a", "b"]],
    ];
    const TABLE_RA18: [[&[&str]; 3]; 3] = [
        [&["id"], &["a"], &["b"]],
        [&["a"], &["id", "a", "b"], &["a", "b"]],
        [&["b"], &["a", "b"], &["id", "a", "b"]],
    ];

    fn matches_table(alg: &RelationAlgebra, table: &[[&[&str]; 3]; 3]) {
        assert_eq!(alg.atom_names(), ["id", "a", "b"]);
        assert!(alg.is_symmetric());
        for (i, row) in table.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let got = alg.comp_atoms(i.into(), j.into());
                assert_eq!(got, alg.parse_set(cell).unwrap(), "cell ({i},{j})");
            }
        }
    }

    #[test]
    fn golden_tables() {
        matches_table(&ra17(), &TABLE_RA17);
        matches_table(&ra18(), &TABLE_RA18);
    }

    #[test]
    fn every_entry_validates() {
        for e in entries() {
            assert!(e.algebra.validate().ok, "{}", e.key);
            assert_eq!(e.algebra.name(), e.key);
        }
        assert!(entry("ra99").is_err());
    }
}
