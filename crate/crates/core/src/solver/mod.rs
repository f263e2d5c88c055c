//! Network satisfaction by path consistency and backtracking over atoms.
//!
//! A network is satisfiable in a fully universal representation exactly when
//! it has an atomic closed refinement, which is what [`solve`] searches for.
//! [`reduce_to_atom_csp`] and [`solve_atom_csp`] give a second, independent
//! route through the atom structure, and [`brute_force_solve`] enumerates.

mod model;
mod oracle;
mod pc;
mod reduction;

pub use model::{extract_model, Model, ModelView};
pub use oracle::{brute_force_solve, BRUTE_FORCE_MAX_NODES, BRUTE_FORCE_MAX_REFINEMENTS};
pub use pc::{path_consistency, path_consistency_with, Inconsistent, QueueOrder};
pub use reduction::{reduce_to_atom_csp, solve_atom_csp, CspInstance};

use serde::{Deserialize, Serialize};

use crate::algebra::RelationAlgebra;
use crate::analysis::analyze;
use crate::element::{AtomId, ElementSet};
use crate::error::Result;
use crate::network::{normalize, DomainMatrix, Network, Normalized};
use crate::search::Budget;

/// An atom for every ordered node pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Refinement {
    n: usize,
    atoms: Vec<AtomId>,
}

impl Refinement {
    /// Builds the full matrix from the pairs `i ≤ j`; `(j, i)` gets the converse.
    pub fn from_upper(
        alg: &RelationAlgebra,
        n: usize,
        mut upper: impl FnMut(usize, usize) -> AtomId,
    ) -> Refinement {
        let mut atoms = vec![AtomId(0); n * n];
        for i in 0..n {
            for j in i..n {
                let a = upper(i, j);
                atoms[i * n + j] = a;
                atoms[j * n + i] = alg.conv_atom(a);
            }
        }
        Refinement { n, atoms }
    }

    /// Takes an arbitrary full matrix, for checking hand-made labellings.
    pub fn from_matrix(n: usize, atoms: Vec<AtomId>) -> Refinement {
        assert_eq!(atoms.len(), n * n);
        Refinement { n, atoms }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> AtomId {
        self.atoms[i * self.n + j]
    }

    /// True when every atom lies in the corresponding label of `net`.
    pub fn refines(&self, alg: &RelationAlgebra, net: &Network) -> bool {
        crate::network::canonical_labels(alg, net)
            .into_iter()
            .all(|((i, j), l)| l.contains(self.get(i, j)))
    }
}

/// The closure conditions on an atomic labelling: identity atoms on the
/// diagonal, converse-consistent pairs and only allowed triangles.
pub fn is_closed(alg: &RelationAlgebra, g: &Refinement) -> bool {
    let n = g.n;
    for i in 0..n {
        if !alg.identity_atoms().contains(g.get(i, i)) {
            return false;
        }
        for j in 0..n {
            if g.get(j, i) != alg.conv_atom(g.get(i, j)) {
                return false;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ij = g.get(i, j);
            for k in 0..n {
                if !alg.comp_atoms(ij, g.get(j, k)).contains(g.get(i, k)) {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Sat,
    Unsat,
    Inconclusive,
}

/// What a `Sat` answer certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Semantics {
    /// The algebra has a flexible atom, so a fully universal representation
    /// exists and refinements are models.
    NetworkSatisfaction,
    /// Only the existence of an atomic closed refinement is claimed.
    AtomicClosedRefinement,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes_explored: u64,
    pub pc_passes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub verdict: Verdict,
    pub semantics: Semantics,
    pub refinement: Option<Refinement>,
    pub stats: SolveStats,
}

/// Searches for an atomic closed refinement of `net`.
///
/// Branches on the pair with the smallest domain (lowest pair index on ties),
/// trying atoms in index order, with path consistency after every choice.
pub fn solve(alg: &RelationAlgebra, net: &Network, budget: Budget) -> Result<Solution> {
    let semantics = if analyze(alg).flexible_atoms.is_empty() {
        Semantics::AtomicClosedRefinement
    } else {
        Semantics::NetworkSatisfaction
    };
    let mut stats = SolveStats::default();
    let norm = match normalize(alg, net)? {
        Normalized::Network(n) => n,
        Normalized::TriviallyUnsat { .. } => {
            return Ok(Solution {
                verdict: Verdict::Unsat,
                semantics,
                refinement: None,
                stats,
            })
        }
    };
    let mut dm = DomainMatrix::from_network(alg, &norm);
    let n = dm.size();
    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    stats.pc_passes += 1;
    let (verdict, refinement) = if !pc::propagate(alg, &mut dm, &all, QueueOrder::Fifo) {
        (Verdict::Unsat, None)
    } else {
        let mut search = Search {
            alg,
            budget,
            started: std::time::Instant::now(),
            stats: &mut stats,
        };
        match search.dfs(dm, &all) {
            Ok(Some(dm)) => (
                Verdict::Sat,
                Some(Refinement::from_upper(alg, n, |i, j| {
                    dm.get(i, j).first().expect("atomic")
                })),
            ),
            Ok(None) => (Verdict::Unsat, None),
            Err(()) => (Verdict::Inconclusive, None),
        }
    };
    Ok(Solution {
        verdict,
        semantics,
        refinement,
        stats,
    })
}

struct Search<'a> {
    alg: &'a RelationAlgebra,
    budget: Budget,
    started: std::time::Instant,
    stats: &'a mut SolveStats,
}

impl Search<'_> {
    fn dfs(
        &mut self,
        dm: DomainMatrix,
        pairs: &[(usize, usize)],
    ) -> std::result::Result<Option<DomainMatrix>, ()> {
        let pick = pairs
            .iter()
            .copied()
            .filter(|&(i, j)| dm.get(i, j).len() > 1)
            .min_by_key(|&(i, j)| dm.get(i, j).len());
        let Some((i, j)) = pick else {
            return Ok(Some(dm));
        };
        for a in dm.get(i, j) {
            self.stats.nodes_explored += 1;
            if self.stats.nodes_explored > self.budget.max_nodes {
                return Err(());
            }
            if let Some(t) = self.budget.timeout {
                if self.started.elapsed() > t {
                    return Err(());
                }
            }
            let mut next = dm.clone();
            next.set(self.alg, i, j, ElementSet::singleton(a));
            self.stats.pc_passes += 1;
            if pc::propagate(self.alg, &mut next, &[(i, j)], QueueOrder::Fifo) {
                if let Some(done) = self.dfs(next, pairs)? {
                    return Ok(Some(done));
                }
            }
        }
        Ok(None)
    }
}

/// One labelled pair of a refinement in JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeView {
    pub u: String,
    pub v: String,
    pub atom: String,
}

/// JSON form of a [`Solution`], with the extracted model when satisfiable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveView {
    pub network: String,
    pub algebra: String,
    pub verdict: Verdict,
    pub semantics: Semantics,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub refinement: Option<Vec<EdgeView>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub model: Option<ModelView>,
    pub stats: SolveStats,
}

impl Solution {
    pub fn view(&self, alg: &RelationAlgebra, net: &Network) -> SolveView {
        let names = net.nodes();
        let refinement = self.refinement.as_ref().map(|g| {
            let n = g.size();
            (0..n)
                .flat_map(|i| (i..n).map(move |j| (i, j)))
                .map(|(i, j)| EdgeView {
                    u: names[i].clone(),
                    v: names[j].clone(),
                    atom: alg.atom_name(g.get(i, j)).to_string(),
                })
                .collect()
        });
        let model = self
            .refinement
            .as_ref()
            .map(|g| extract_model(alg, g).view(alg, names));
        SolveView {
            network: net.name.clone(),
            algebra: alg.name().to_string(),
            verdict: self.verdict,
            semantics: self.semantics,
            refinement,
            model,
            stats: self.stats,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::format::parse_network;

    pub(crate) const EXAMPLE: &str = "network example over ra17\nnode x1 x2 x3\n\
        edge x1 x2 : a\nedge x1 x3 : id a\nedge x2 x3 : a b\n";

    fn triangle(alg: &RelationAlgebra, labels: [&[&str]; 3]) -> Network {
        let mut net = Network::with_nodes("t", alg.name(), 3);
        net.constrain(0, 1, alg.parse_set(labels[0]).unwrap());
        net.constrain(0, 2, alg.parse_set(labels[1]).unwrap());
        net.constrain(1, 2, alg.parse_set(labels[2]).unwrap());
        net
    }

    #[test]
    fn worked_example_is_sat() {
        let alg = catalog::ra17();
        let net = parse_network(EXAMPLE, &alg).unwrap();
        let sol = solve(&alg, &net, Budget::default()).unwrap();
        assert_eq!(sol.verdict, Verdict::Sat);
        assert_eq!(sol.semantics, Semantics::NetworkSatisfaction);
        let g = sol.refinement.unwrap();
        assert!(is_closed(&alg, &g));
        assert!(g.refines(&alg, &net));
        let (id, a) = (AtomId(0), AtomId(1));
        assert_eq!((g.get(0, 1), g.get(0, 2), g.get(1, 2)), (a, id, a));
    }

    #[test]
    fn all_a_triangle_is_unsat() {
        let alg = catalog::ra17();
        let net = triangle(&alg, [&["a"], &["a"], &["a"]]);
        let sol = solve(&alg, &net, Budget::default()).unwrap();
        assert_eq!(sol.verdict, Verdict::Unsat);
        assert!(sol.refinement.is_none());
    }

    #[test]
    fn single_node() {
        let alg = catalog::ra17();
        let mut net = Network::with_nodes("one", "ra17", 1);
        net.constrain(0, 0, alg.identity_atoms());
        let sol = solve(&alg, &net, Budget::default()).unwrap();
        assert_eq!(sol.verdict, Verdict::Sat);
    }

    #[test]
    fn hand_labellings_checked_for_closure() {
        let alg = catalog::ra17();
        let (id, a, b) = (AtomId(0), AtomId(1), AtomId(2));
        let closed = Refinement::from_upper(&alg, 3, |i, j| match (i, j) {
            (0, 1) | (1, 2) => a,
            (0, 2) => b,
            _ => id,
        });
        assert!(is_closed(&alg, &closed));
        let aaa = Refinement::from_upper(&alg, 3, |i, j| if i == j { id } else { a });
        assert!(!is_closed(&alg, &aaa));
        let mut raw = vec![id; 4];
        raw[1] = a;
        raw[2] = b;
        assert!(!is_closed(&alg, &Refinement::from_matrix(2, raw)));
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let alg = catalog::ra18();
        let net = Network::with_nodes("big", "ra18", 4);
        let sol = solve(&alg, &net, Budget::nodes(0)).unwrap();
        assert_eq!(sol.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn view_contains_model() {
        let alg = catalog::ra17();
        let net = parse_network(EXAMPLE, &alg).unwrap();
        let sol = solve(&alg, &net, Budget::default()).unwrap();
        let v = sol.view(&alg, &net);
        let json = serde_json::to_string(&v).unwrap();
        assert!(
            json.starts_with("{\"network\":\"example\",\"algebra\":\"ra17\",\"verdict\":\"sat\"")
        );
        let back: SolveView = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        assert_eq!(v.model.unwrap().nodes.len(), 2);
    }
}
