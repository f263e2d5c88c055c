//! Structural properties of an algebra and the two algebra transformations:
//! reduction to the integral case and adjoining a fresh flexible atom.

use serde::{Deserialize, Serialize};

use crate::algebra::RelationAlgebra;
use crate::element::{AtomId, ElementSet};
use crate::error::{Error, Result};
use crate::network::{normalize, Network, Normalized};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub symmetric: bool,
    pub integral: bool,
    pub identity_atoms: ElementSet,
    pub flexible_atoms: ElementSet,
    /// Symmetric with at least one flexible atom.
    pub in_theorem_scope: bool,
}

/// Name-based rendering of an [`AnalysisReport`] for JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisView {
    pub algebra: String,
    pub atom_count: usize,
    pub symmetric: bool,
    pub integral: bool,
    pub identity_atoms: Vec<String>,
    pub flexible_atoms: Vec<String>,
    pub in_theorem_scope: bool,
}

impl AnalysisReport {
    pub fn view(&self, alg: &RelationAlgebra) -> AnalysisView {
        AnalysisView {
            algebra: alg.name().to_string(),
            atom_count: alg.atom_count(),
            symmetric: self.symmetric,
            integral: self.integral,
            identity_atoms: alg.set_names(self.identity_atoms),
            flexible_atoms: alg.set_names(self.flexible_atoms),
            in_theorem_scope: self.in_theorem_scope,
        }
    }

    pub fn first_flexible(&self) -> Option<AtomId> {
        self.flexible_atoms.first()
    }
}

/// Decides symmetry, integrality and which atoms are flexible.
///
/// An atom `s ∉ I` is flexible when `s ≤ a ∘ b` for all atoms `a, b ∉ I`;
/// by additivity this is the same as asking it for all elements outside `I`.
pub fn analyze(alg: &RelationAlgebra) -> AnalysisReport {
    let ids = alg.identity_atoms();
    let non_id = alg.top().difference(ids);
    let mut flexible = non_id;
    for a in non_id {
        for b in non_id {
            flexible = flexible.intersection(alg.comp_atoms(a, b));
        }
    }
    let symmetric = alg.is_symmetric();
    AnalysisReport {
        symmetric,
        integral: alg.is_integral(),
        identity_atoms: ids,
        flexible_atoms: flexible,
        in_theorem_scope: symmetric && !flexible.is_empty(),
    }
}

/// The integral algebra produced by [`integralize`], with its embedding.
#[derive(Clone, Debug)]
pub struct Integralized {
    pub algebra: RelationAlgebra,
    /// `mapping[i]` is the original atom behind new atom `i`.
    pub mapping: Vec<AtomId>,
    /// The identity atom `e₁` that is kept.
    pub kept_identity: AtomId,
    /// False when the input was already integral and is returned as is.
    pub changed: bool,
}

impl Integralized {
    /// Original atoms that exist in the integral algebra, as an element of
    /// the original algebra.
    pub fn kept_atoms(&self) -> ElementSet {
        self.mapping.iter().copied().collect()
    }

    /// Renumbers an element of the original algebra; atoms that were dropped
    /// disappear.
    pub fn restrict(&self, x: ElementSet) -> ElementSet {
        self.mapping
            .iter()
            .enumerate()
            .filter(|(_, old)| x.contains(**old))
            .map(|(new, _)| AtomId::from(new))
            .collect()
    }
}

/// Keeps the identity atom `e₁` with `e₁ ∘ s = s` for the first flexible atom
/// `s`, drops every other identity atom and restricts the tables.
pub fn integralize(alg: &RelationAlgebra) -> Result<Integralized> {
    let report = analyze(alg);
    let s = report
        .first_flexible()
        .ok_or_else(|| Error::Scope(format!("algebra `{}` has no flexible atom", alg.name())))?;
    if report.integral {
        let e = report.identity_atoms.first().expect("identity atom");
        return Ok(Integralized {
            algebra: alg.clone(),
            mapping: alg.atoms().collect(),
            kept_identity: e,
            changed: false,
        });
    }
    let ids = report.identity_atoms;
    let candidates: Vec<AtomId> = ids
        .iter()
        .filter(|&e| alg.comp_atoms(e, s) == ElementSet::singleton(s))
        .collect();
    let [e1] = candidates[..] else {
        return Err(Error::Scope(format!(
            "{} identity atoms fix the flexible atom `{}`; expected exactly one",
            candidates.len(),
            alg.atom_name(s)
        )));
    };
    let mapping: Vec<AtomId> = alg
        .atoms()
        .filter(|&a| a == e1 || !ids.contains(a))
        .collect();
    let n = mapping.len();
    let restrict = |x: ElementSet| -> ElementSet {
        mapping
            .iter()
            .enumerate()
            .filter(|(_, old)| x.contains(**old))
            .map(|(new, _)| AtomId::from(new))
            .collect()
    };
    let new_index = |old: AtomId| -> AtomId {
        AtomId::from(mapping.iter().position(|&m| m == old).expect("kept atom"))
    };
    let mut comp = Vec::with_capacity(n * n);
    for &x in &mapping {
        for &y in &mapping {
            comp.push(restrict(alg.comp_atoms(x, y)));
        }
    }
    let converse = mapping
        .iter()
        .map(|&a| new_index(alg.conv_atom(a)))
        .collect();
    let algebra = RelationAlgebra::new(
        format!("{}-integral", alg.name()),
        mapping
            .iter()
            .map(|&a| alg.atom_name(a).to_string())
            .collect(),
        ElementSet::singleton(new_index(e1)),
        converse,
        comp,
    )?;
    Ok(Integralized {
        algebra,
        mapping,
        kept_identity: e1,
        changed: true,
    })
}

/// Result of moving a network to the integral algebra.
///
/// The original network is satisfiable exactly when `collapse` is set or
/// `network` is present and satisfiable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralTranslation {
    /// Labels with the dropped identity atoms removed; `None` when that
    /// empties some label.
    pub network: Option<Network>,
    /// A dropped identity atom contained in every label. Mapping all nodes to
    /// one point carrying that identity satisfies the network.
    pub collapse: Option<AtomId>,
}

impl IntegralTranslation {
    pub fn is_trivially_unsat(&self) -> bool {
        self.network.is_none() && self.collapse.is_none()
    }
}

pub fn translate_network_integral(
    alg: &RelationAlgebra,
    integral: &Integralized,
    net: &Network,
) -> Result<IntegralTranslation> {
    let norm = match normalize(alg, net)? {
        Normalized::Network(n) => n,
        Normalized::TriviallyUnsat { .. } => {
            return Ok(IntegralTranslation {
                network: None,
                collapse: None,
            })
        }
    };
    if !integral.changed {
        let mut same = net.clone();
        same.over = integral.algebra.name().to_string();
        return Ok(IntegralTranslation {
            network: Some(same),
            collapse: None,
        });
    }
    let dropped = alg.identity_atoms().without(integral.kept_identity);
    let collapse = dropped
        .iter()
        .find(|&e| norm.labels().all(|(_, l)| l.contains(e)));

    let mut out = Network::new(norm.name.clone(), integral.algebra.name());
    for name in norm.nodes() {
        out.add_node(name.clone())?;
    }
    let mut emptied = false;
    for ((u, v), l) in norm.labels() {
        let stripped = integral.restrict(l.difference(dropped));
        emptied |= stripped.is_empty();
        out.constrain(u, v, stripped);
    }
    Ok(IntegralTranslation {
        network: (!emptied).then_some(out),
        collapse,
    })
}

/// Adjoins a fresh symmetric flexible atom `s` to an integral algebra.
///
/// Composition on the new atom set `A₀ ∪ {s}`:
/// `s∘s` is everything, `s∘a = a∘s = (A₀ ∖ {id}) ∪ {s}` for other atoms,
/// `id` stays neutral, and `x∘y` gains `s` for non-identity `x, y ∈ A₀`.
/// The new forbidden triples are exactly the orderings of `(s, a, id)`.
pub fn add_flexible_atom(alg: &RelationAlgebra) -> Result<RelationAlgebra> {
    if !alg.is_integral() {
        return Err(Error::Scope(format!(
            "algebra `{}` is not integral",
            alg.name()
        )));
    }
    if alg.atom_count() + 1 > crate::element::MAX_ATOMS {
        return Err(Error::LimitExceeded("no room for another atom".into()));
    }
    let id = alg.identity_atoms().first().expect("identity atom");
    let mut s_name = "s".to_string();
    let mut suffix = 1;
    while alg.atom(&s_name).is_some() {
        s_name = format!("s{suffix}");
        suffix += 1;
    }
    let n = alg.atom_count();
    let s = AtomId::from(n);
    let old_all = alg.top();
    let all = old_all.with(s);
    let non_id = old_all.without(id).with(s);

    let mut comp = Vec::with_capacity((n + 1) * (n + 1));
    for x in (0..=n).map(AtomId::from) {
        for y in (0..=n).map(AtomId::from) {
            let cell = if x == s && y == s {
                all
            } else if x == id {
                ElementSet::singleton(y)
            } else if y == id {
                ElementSet::singleton(x)
            } else if x == s || y == s {
                non_id
            } else {
                alg.comp_atoms(x, y).with(s)
            };
            comp.push(cell);
        }
    }
    let mut names = alg.atom_names().to_vec();
    names.push(s_name.clone());
    let mut converse: Vec<AtomId> = alg.atoms().map(|a| alg.conv_atom(a)).collect();
    converse.push(s);
    RelationAlgebra::new(
        format!("{}+{}", alg.name(), s_name),
        names,
        ElementSet::singleton(id),
        converse,
        comp,
    )
}
