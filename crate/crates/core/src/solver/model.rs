use serde::{Deserialize, Serialize};

use crate::algebra::RelationAlgebra;
use crate::element::AtomId;

use super::{EdgeView, Refinement};

/// The finite structure described by a closed refinement: nodes joined by an
/// identity atom are merged, the rest keep their atom labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    /// Node indices in each class, classes ordered by their smallest node.
    pub classes: Vec<Vec<usize>>,
    /// The identity atom on each class.
    pub identity: Vec<AtomId>,
    /// Atom between classes `p < q`.
    pub edges: Vec<(usize, usize, AtomId)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelView {
    /// Each point as the `=`-joined names of the merged nodes.
    pub nodes: Vec<String>,
    pub edges: Vec<EdgeView>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = x;
    while parent[c] != r {
        let next = parent[c];
        parent[c] = r;
        c = next;
    }
    r
}

pub fn extract_model(alg: &RelationAlgebra, g: &Refinement) -> Model {
    let n = g.size();
    let ids = alg.identity_atoms();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            if ids.contains(g.get(i, j)) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![usize::MAX; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        if class_of[root] == usize::MAX {
            class_of[root] = classes.len();
            classes.push(Vec::new());
        }
        class_of[i] = class_of[root];
        classes[class_of[root]].push(i);
    }
    let identity = classes.iter().map(|c| g.get(c[0], c[0])).collect();
    let mut edges = Vec::new();
    for p in 0..classes.len() {
        for q in p + 1..classes.len() {
            edges.push((p, q, g.get(classes[p][0], classes[q][0])));
        }
    }
    Model {
        classes,
        identity,
        edges,
    }
}

impl Model {
    pub fn size(&self) -> usize {
        self.classes.len()
    }

    pub fn view<S: AsRef<str>>(&self, alg: &RelationAlgebra, node_names: &[S]) -> ModelView {
        let nodes: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&i| node_names[i].as_ref())
                    .collect::<Vec<_>>()
                    .join("=")
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|&(p, q, a)| EdgeView {
                u: nodes[p].clone(),
                v: nodes[q].clone(),
                atom: alg.atom_name(a).to_string(),
            })
            .collect();
        ModelView { nodes, edges }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn worked_example_has_two_points() {
        let alg = catalog::ra17();
        let (id, a) = (AtomId(0), AtomId(1));
        let g = Refinement::from_upper(&alg, 3, |i, j| match (i, j) {
            (0, 1) | (1, 2) => a,
            _ => id,
        });
        let m = extract_model(&alg, &g);
        assert_eq!(m.classes, vec![vec![0, 2], vec![1]]);
        assert_eq!(m.edges, vec![(0, 1, a)]);
        let v = m.view(&alg, &["x1", "x2", "x3"]);
        assert_eq!(v.nodes, ["x1=x3", "x2"]);
        assert_eq!(v.edges[0].atom, "a");
    }

    #[test]
    fn no_identity_edges() {
        let alg = catalog::ra18();
        let g = Refinement::from_upper(&alg, 3, |i, j| AtomId(if i == j { 0 } else { 1 }));
        assert_eq!(extract_model(&alg, &g).size(), 3);
    }

    #[test]
    fn all_identity_collapses() {
        let alg = catalog::ra18();
        let g = Refinement::from_upper(&alg, 4, |_, _| AtomId(0));
        let m = extract_model(&alg, &g);
        assert_eq!(m.size(), 1);
        assert!(m.edges.is_empty());
    }
}
