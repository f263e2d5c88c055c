use crate::algebra::RelationAlgebra;
use crate::element::{AtomId, ElementSet};
use crate::error::{Error, Result};
use crate::network::{canonical_labels, Network};
use crate::search::{AtomCsp, Budget, SearchResult, SearchStats, VarOrder};
use crate::structure::AtomStructure;

use super::Refinement;

/// A constraint instance over the atom structure: one variable per node pair
/// `(i, j)` with `i ≤ j`, a unary domain per variable and an `H` constraint
/// for every `i ≤ j ≤ l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CspInstance {
    pub nodes: usize,
    pub variables: Vec<(usize, usize)>,
    pub unary: Vec<ElementSet>,
    /// `[var(i,j), var(j,l), var(i,l)]`
    pub ternary: Vec<[usize; 3]>,
}

impl CspInstance {
    pub fn var(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= j && j < self.nodes);
        // rows r < i hold n - r pairs each
        i * self.nodes - i * i.saturating_sub(1) / 2 + (j - i)
    }

    /// Reads an assignment back as a refinement of the network.
    pub fn refinement(&self, alg: &RelationAlgebra, assignment: &[AtomId]) -> Refinement {
        Refinement::from_upper(alg, self.nodes, |i, j| assignment[self.var(i, j)])
    }

    /// Whether `assignment` meets every unary and `H` constraint.
    pub fn satisfied_by(&self, os: &AtomStructure, assignment: &[AtomId]) -> bool {
        assignment.len() == self.variables.len()
            && self
                .unary
                .iter()
                .zip(assignment)
                .all(|(d, &a)| d.contains(a))
            && self
                .ternary
                .iter()
                .all(|&[x, y, z]| os.contains(assignment[x], assignment[y], assignment[z]))
    }
}

/// Builds the atom-structure instance of a network: unary constraints from
/// the labels (a label given as `(j, i)` contributes its converse) and a
/// triangle constraint for each `i ≤ j ≤ l`.
pub fn reduce_to_atom_csp(alg: &RelationAlgebra, net: &Network) -> CspInstance {
    let n = net.node_count();
    let labels = canonical_labels(alg, net);
    let variables: Vec<(usize, usize)> = labels.iter().map(|(p, _)| *p).collect();
    let unary = labels.iter().map(|(_, l)| *l).collect();
    let mut inst = CspInstance {
        nodes: n,
        variables,
        unary,
        ternary: Vec::new(),
    };
    for i in 0..n {
        for j in i..n {
            for l in j..n {
                inst.ternary
                    .push([inst.var(i, j), inst.var(j, l), inst.var(i, l)]);
            }
        }
    }
    inst
}

/// Arc consistency plus backtracking on the instance.
pub fn solve_atom_csp(
    os: &AtomStructure,
    inst: &CspInstance,
    budget: Budget,
) -> Result<(SearchResult<Vec<AtomId>>, SearchStats)> {
    if inst.unary.iter().any(|d| !d.fits(os.atom_count())) {
        return Err(Error::usage(
            "instance domain does not fit the atom structure",
        ));
    }
    if inst.unary.iter().any(|d| d.is_empty()) {
        return Ok((SearchResult::Absent, SearchStats::default()));
    }
    let mut csp = AtomCsp::new(os, inst.unary.clone());
    for &t in &inst.ternary {
        csp.add_triple(t);
    }
    Ok(csp.solve(VarOrder::SmallestDomain, budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::format::parse_network;
    use crate::structure::build_atom_structure;

    #[test]
    fn instance_sizes() {
        let alg = catalog::ra17();
        let inst = reduce_to_atom_csp(&alg, &Network::with_nodes("t", "ra17", 3));
        assert_eq!(inst.variables.len(), 6);
        assert_eq!(inst.ternary.len(), 10);
        let one = reduce_to_atom_csp(&alg, &Network::with_nodes("p", "ra17", 1));
        assert_eq!((one.variables.len(), one.ternary.len()), (1, 1));
        for n in 1..6 {
            let inst = reduce_to_atom_csp(&alg, &Network::with_nodes("n", "ra17", n));
            for (k, &(i, j)) in inst.variables.iter().enumerate() {
                assert_eq!(inst.var(i, j), k);
            }
            assert_eq!(inst.ternary.len(), n * (n + 1) * (n + 2) / 6);
        }
    }

    #[test]
    fn worked_example_unary_constraints() {
        let alg = catalog::ra17();
        let net = parse_network(super::super::tests::EXAMPLE, &alg).unwrap();
        let inst = reduce_to_atom_csp(&alg, &net);
        let set = |n: &[&str]| alg.parse_set(n).unwrap();
        assert_eq!(inst.unary[inst.var(0, 1)], set(&["a"]));
        assert_eq!(inst.unary[inst.var(0, 2)], set(&["id", "a"]));
        assert_eq!(inst.unary[inst.var(1, 2)], set(&["a", "b"]));
        for i in 0..3 {
            assert_eq!(inst.unary[inst.var(i, i)], set(&["id"]));
        }
        let os = build_atom_structure(&alg);
        let (r, _) = solve_atom_csp(&os, &inst, Budget::default()).unwrap();
        let sol = r.found().expect("satisfiable");
        assert!(inst.satisfied_by(&os, &sol));
        assert!(super::super::is_closed(&alg, &inst.refinement(&alg, &sol)));
    }

    #[test]
    fn reversed_label_contributes_converse() {
        let text = "algebra pt\natoms id lt gt\nidentity id\nconverse lt gt\n\
                    comp lt lt = lt\ncomp lt gt = id lt gt\ncomp gt lt = id lt gt\ncomp gt gt = gt\n";
        let alg = crate::format::parse_algebra(text).unwrap();
        let mut net = Network::with_nodes("n", "pt", 2);
        net.constrain(1, 0, alg.parse_set(&["lt"]).unwrap());
        let inst = reduce_to_atom_csp(&alg, &net);
        assert_eq!(inst.unary[inst.var(0, 1)], alg.parse_set(&["gt"]).unwrap());
    }

    #[test]
    fn empty_unary_is_unsat() {
        let alg = catalog::ra18();
        let os = build_atom_structure(&alg);
        let mut net = Network::with_nodes("n", "ra18", 3);
        net.constrain(0, 2, ElementSet::EMPTY);
        let inst = reduce_to_atom_csp(&alg, &net);
        let (r, stats) = solve_atom_csp(&os, &inst, Budget::default()).unwrap();
        assert!(r.is_absent());
        assert_eq!(stats.nodes, 0);
    }
}
