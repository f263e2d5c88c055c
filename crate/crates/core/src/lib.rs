//! Finite relation algebras: network satisfaction and the P / NP-complete
//! classification of the network satisfaction problem for symmetric
//! integral algebras with a flexible atom.
//!
//! ```
//! use relalg::{catalog, classify, ClassVerdict, ClassifyOptions};
//!
//! let report = classify(&catalog::ra18(), ClassifyOptions::default()).unwrap();
//! assert_eq!(report.verdict, ClassVerdict::P);
//! ```

pub mod algebra;
pub mod analysis;
pub mod catalog;
pub mod classify;
pub mod element;
pub mod error;
pub mod format;
pub mod generate;
pub mod network;
pub mod search;
pub mod solver;
pub mod structure;

pub use algebra::{AlgebraBuilder, Axiom, RelationAlgebra, ValidationReport, Violation};
pub use analysis::{
    add_flexible_atom, analyze, integralize, translate_network_integral, AnalysisReport,
    IntegralTranslation, Integralized,
};
pub use classify::{
    brute_force_pair_witness, classify, find_injective_binary, find_pair_witness,
    maximal_symmetric, red_edges, ClassVerdict, ClassificationReport, ClassifyOptions, PairWitness,
    RedEdges, WitnessKind,
};
pub use element::{AtomId, ElementSet};
pub use error::{Error, Result};
pub use generate::{gen_algebra, gen_network};
pub use network::{normalize, Network, Normalized};
pub use search::{Budget, SearchResult};
pub use solver::{
    brute_force_solve, extract_model, is_closed, reduce_to_atom_csp, solve, solve_atom_csp,
    Refinement, Semantics, Solution, Verdict,
};
pub use structure::{
    build_atom_structure, compose_behaviours, is_siggers, preserves, AtomStructure, Behaviour,
};

/// Resolves `catalog:<key>` to a built-in algebra and anything else to a
/// file in the algebra text format.
pub fn load_algebra(reference: &str) -> Result<RelationAlgebra> {
    match reference.strip_prefix("catalog:") {
        Some(key) => Ok(catalog::entry(key)?.algebra),
        None => format::parse_algebra(&std::fs::read_to_string(reference)?),
    }
}
