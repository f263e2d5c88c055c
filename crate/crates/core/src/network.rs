//! Constraint networks over a relation algebra.

use std::collections::BTreeMap;

use crate::algebra::RelationAlgebra;
use crate::element::ElementSet;
use crate::error::{Error, Result};

/// An `A`-network: named nodes and element labels on ordered node pairs.
///
/// Labels may be given in either direction and pairs may be left out; see
/// [`normalize`] for how the input is completed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    pub name: String,
    pub over: String,
    nodes: Vec<String>,
    labels: BTreeMap<(usize, usize), ElementSet>,
}

impl Network {
    pub fn new(name: impl Into<String>, over: impl Into<String>) -> Network {
        Network {
            name: name.into(),
            over: over.into(),
            nodes: Vec::new(),
            labels: BTreeMap::new(),
        }
    }

    /// A network on `n` nodes named `x1 .. xn` with no labels.
    pub fn with_nodes(name: impl Into<String>, over: impl Into<String>, n: usize) -> Network {
        let mut net = Network::new(name, over);
        for i in 1..=n {
            net.add_node(format!("x{i}")).expect("fresh names");
        }
        net
    }

    pub fn add_node(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        if self.node(&name).is_some() {
            return Err(Error::usage(format!("duplicate node `{name}`")));
        }
        self.nodes.push(name);
        Ok(self.nodes.len() - 1)
    }

    pub fn node(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n == name)
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Constrains the pair `(u, v)`; a repeated pair is intersected.
    pub fn constrain(&mut self, u: usize, v: usize, label: ElementSet) {
        assert!(
            u < self.nodes.len() && v < self.nodes.len(),
            "node out of range"
        );
        self.labels
            .entry((u, v))
            .and_modify(|l| *l = l.intersection(label))
            .or_insert(label);
    }

    pub fn label(&self, u: usize, v: usize) -> Option<ElementSet> {
        self.labels.get(&(u, v)).copied()
    }

    /// Explicit labels in `(u, v)` order.
    pub fn labels(&self) -> impl Iterator<Item = ((usize, usize), ElementSet)> + '_ {
        self.labels.iter().map(|(k, v)| (*k, *v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    Network(Network),
    /// Some label became `0`; `pair` is the first such pair with `u ≤ v`.
    TriviallyUnsat {
        pair: (usize, usize),
    },
}

/// Completes a network to canonical form: every pair `(i, j)` with `i ≤ j`
/// carries a label, equal to the intersection of what was given in both
/// directions, with the diagonal cut down to identity atoms and missing pairs
/// set to the top element.
pub fn normalize(alg: &RelationAlgebra, net: &Network) -> Result<Normalized> {
    let width = alg.atom_count();
    for (_, l) in net.labels() {
        if !l.fits(width) {
            return Err(Error::usage(format!(
                "label {l:?} does not fit algebra `{}`",
                alg.name()
            )));
        }
    }
    let mut out = Network {
        name: net.name.clone(),
        over: net.over.clone(),
        nodes: net.nodes.clone(),
        labels: BTreeMap::new(),
    };
    let mut first_empty = None;
    for ((i, j), l) in canonical_labels(alg, net) {
        if l.is_empty() && first_empty.is_none() {
            first_empty = Some((i, j));
        }
        out.labels.insert((i, j), l);
    }
    Ok(match first_empty {
        Some(pair) => Normalized::TriviallyUnsat { pair },
        None => Normalized::Network(out),
    })
}

/// The label of every pair `(i, j)` with `i ≤ j`, in row-major order, after
/// completing missing pairs and merging both directions. Labels may be empty.
pub(crate) fn canonical_labels(
    alg: &RelationAlgebra,
    net: &Network,
) -> Vec<((usize, usize), ElementSet)> {
    let n = net.node_count();
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            let mut l = alg.top();
            if let Some(x) = net.label(i, j) {
                l = l.intersection(x);
            }
            if let Some(x) = net.label(j, i) {
                l = l.intersection(alg.conv_set(x));
            }
            if i == j {
                l = l.intersection(alg.identity_atoms());
            }
            out.push(((i, j), l));
        }
    }
    out
}

/// Candidate atoms for every ordered node pair, kept converse-consistent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DomainMatrix {
    n: usize,
    cells: Vec<ElementSet>,
}

impl DomainMatrix {
    /// Domains of a normalized network.
    pub fn from_network(alg: &RelationAlgebra, net: &Network) -> DomainMatrix {
        let n = net.node_count();
        let mut dm = DomainMatrix {
            n,
            cells: vec![alg.top(); n * n],
        };
        for i in 0..n {
            for j in i..n {
                let top = if i == j {
                    alg.identity_atoms()
                } else {
                    alg.top()
                };
                let l = net.label(i, j).unwrap_or(top);
                dm.set(alg, i, j, l);
            }
        }
        dm
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> ElementSet {
        self.cells[i * self.n + j]
    }

    /// Sets `(i, j)` and the converse cell `(j, i)`.
    #[inline]
    pub fn set(&mut self, alg: &RelationAlgebra, i: usize, j: usize, s: ElementSet) {
        self.cells[i * self.n + j] = s;
        if i != j {
            self.cells[j * self.n + i] = alg.conv_set(s);
        } else {
            debug_assert_eq!(alg.conv_set(s), s, "diagonal must be self-converse");
        }
    }

    /// Like [`DomainMatrix::set`] but takes the pair in either orientation.
    #[inline]
    pub(crate) fn set_any(&mut self, alg: &RelationAlgebra, i: usize, j: usize, s: ElementSet) {
        if i <= j {
            self.set(alg, i, j, s);
        } else {
            self.set(alg, j, i, alg.conv_set(s));
        }
    }

    pub fn is_atomic(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    pub fn has_empty(&self) -> bool {
        self.cells.iter().any(|c| c.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn missing_pairs_default_to_top() {
        let alg = catalog::ra17();
        let net = Network::with_nodes("n", "ra17", 2);
        let Normalized::Network(norm) = normalize(&alg, &net).unwrap() else {
            panic!("satisfiable input");
        };
        assert_eq!(norm.label(0, 1), Some(alg.top()));
        assert_eq!(norm.label(0, 0), Some(alg.identity_atoms()));
        assert_eq!(norm.label(1, 0), None);
    }

    #[test]
    fn conflicting_directions_are_unsat() {
        let alg = catalog::ra17();
        let mut net = Network::with_nodes("n", "ra17", 2);
        net.constrain(0, 1, alg.parse_set(&["a"]).unwrap());
        net.constrain(1, 0, alg.parse_set(&["b"]).unwrap());
        assert_eq!(
            normalize(&alg, &net).unwrap(),
            Normalized::TriviallyUnsat { pair: (0, 1) }
        );
    }

    #[test]
    fn empty_label_is_unsat() {
        let alg = catalog::ra18();
        let mut net = Network::with_nodes("n", "ra18", 3);
        net.constrain(1, 2, ElementSet::EMPTY);
        assert_eq!(
            normalize(&alg, &net).unwrap(),
            Normalized::TriviallyUnsat { pair: (1, 2) }
        );
        let mut diag = Network::with_nodes("d", "ra18", 1);
        diag.constrain(0, 0, alg.parse_set(&["a"]).unwrap());
        assert_eq!(
            normalize(&alg, &diag).unwrap(),
            Normalized::TriviallyUnsat { pair: (0, 0) }
        );
    }

    #[test]
    fn wide_labels_rejected() {
        let alg = catalog::ra17();
        let mut net = Network::with_nodes("n", "ra17", 2);
        net.constrain(0, 1, ElementSet(0b1000));
        assert!(normalize(&alg, &net).is_err());
    }

    #[test]
    fn domain_matrix_keeps_converse() {
        let text = "algebra pt\natoms id lt gt\nidentity id\nconverse lt gt\n\
                    comp lt lt = lt\ncomp lt gt = id lt gt\ncomp gt lt = id lt gt\ncomp gt gt = gt\n";
        let alg = crate::format::parse_algebra(text).unwrap();
        let mut net = Network::with_nodes("n", "pt", 2);
        net.constrain(1, 0, alg.parse_set(&["lt"]).unwrap());
        let Normalized::Network(norm) = normalize(&alg, &net).unwrap() else {
            panic!()
        };
        assert_eq!(norm.label(0, 1), Some(alg.parse_set(&["gt"]).unwrap()));
        let dm = DomainMatrix::from_network(&alg, &norm);
        assert_eq!(dm.get(1, 0), alg.parse_set(&["lt"]).unwrap());
    }
}
