//! Finite relation algebras given by their atom composition table.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::element::{AtomId, ElementSet, MAX_ATOMS};
use crate::error::{Error, Result};

/// A finite relation algebra described at the level of its atoms.
///
/// Elements are unions of atoms ([`ElementSet`]); composition and converse
/// extend additively from the atom table. The value is immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationAlgebra {
    name: String,
    atom_names: Vec<String>,
    identity: ElementSet,
    converse: Vec<AtomId>,
    comp: Vec<ElementSet>,
}

impl RelationAlgebra {
    /// Builds an algebra from raw tables, checking only structural
    /// well-formedness. Use [`RelationAlgebra::validate`] for the axioms.
    pub fn new(
        name: impl Into<String>,
        atom_names: Vec<String>,
        identity: ElementSet,
        converse: Vec<AtomId>,
        comp: Vec<ElementSet>,
    ) -> Result<RelationAlgebra> {
        let n = atom_names.len();
        if n == 0 {
            return Err(Error::usage("an algebra needs at least one atom"));
        }
        if n > MAX_ATOMS {
            return Err(Error::LimitExceeded(format!(
                "{n} atoms requested, at most {MAX_ATOMS} are supported"
            )));
        }
        let mut seen = HashSet::new();
        for a in &atom_names {
            if a.is_empty() || a.chars().any(char::is_whitespace) {
                return Err(Error::usage(format!("invalid atom name `{a}`")));
            }
            if !seen.insert(a.as_str()) {
                return Err(Error::usage(format!("duplicate atom name `{a}`")));
            }
        }
        if identity.is_empty() || !identity.fits(n) {
            return Err(Error::usage("identity must be a nonempty set of atoms"));
        }
        if converse.len() != n || converse.iter().any(|c| c.index() >= n) {
            return Err(Error::usage("converse map must be total over the atoms"));
        }
        if comp.len() != n * n || comp.iter().any(|s| !s.fits(n)) {
            return Err(Error::usage(
                "composition table must be total over atom pairs",
            ));
        }
        Ok(RelationAlgebra {
            name: name.into(),
            atom_names,
            identity,
            converse,
            comp,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn atom_count(&self) -> usize {
        self.atom_names.len()
    }

    pub fn atom_names(&self) -> &[String] {
        &self.atom_names
    }

    pub fn atom_name(&self, a: AtomId) -> &str {
        &self.atom_names[a.index()]
    }

    pub fn atom(&self, name: &str) -> Option<AtomId> {
        self.atom_names
            .iter()
            .position(|n| n == name)
            .map(AtomId::from)
    }

    pub fn atoms(&self) -> impl Iterator<Item = AtomId> + Clone {
        (0..self.atom_count()).map(AtomId::from)
    }

    /// The set of atoms below `id`.
    pub fn identity_atoms(&self) -> ElementSet {
        self.identity
    }

    /// The top element `1`.
    pub fn top(&self) -> ElementSet {
        ElementSet::full(self.atom_count())
    }

    pub fn is_symmetric(&self) -> bool {
        self.atoms().all(|a| self.conv_atom(a) == a)
    }

    pub fn is_integral(&self) -> bool {
        self.identity.len() == 1
    }

    #[inline]
    pub fn conv_atom(&self, a: AtomId) -> AtomId {
        self.converse[a.index()]
    }

    /// Composition of two atoms, straight from the table.
    #[inline]
    pub fn comp_atoms(&self, a: AtomId, b: AtomId) -> ElementSet {
        self.comp[a.index() * self.atom_count() + b.index()]
    }

    /// Composition without the width check; members outside the algebra
    /// must not be present.
    #[inline]
    pub(crate) fn comp_sets(&self, x: ElementSet, y: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for a in x {
            for b in y {
                out = out.union(self.comp_atoms(a, b));
            }
        }
        out
    }

    #[inline]
    pub(crate) fn conv_set(&self, x: ElementSet) -> ElementSet {
        x.iter().map(|a| self.conv_atom(a)).collect()
    }

    fn check_width(&self, x: ElementSet) -> Result<()> {
        if x.fits(self.atom_count()) {
            Ok(())
        } else {
            Err(Error::usage(format!(
                "element {x:?} does not fit an algebra with {} atoms",
                self.atom_count()
            )))
        }
    }

    /// `x ∘ y`, the union of the atom compositions `a ∘ b` for `a ∈ x`, `b ∈ y`.
    pub fn compose(&self, x: ElementSet, y: ElementSet) -> Result<ElementSet> {
        self.check_width(x)?;
        self.check_width(y)?;
        Ok(self.comp_sets(x, y))
    }

    pub fn converse(&self, x: ElementSet) -> Result<ElementSet> {
        self.check_width(x)?;
        Ok(self.conv_set(x))
    }

    /// Allowed triples `(x, y, z)` with `z ≤ x ∘ y`, in lexicographic order.
    pub fn allowed_triples(&self) -> Vec<[AtomId; 3]> {
        let mut out = Vec::new();
        for x in self.atoms() {
            for y in self.atoms() {
                for z in self.comp_atoms(x, y) {
                    out.push([x, y, z]);
                }
            }
        }
        out
    }

    /// Complement of [`RelationAlgebra::allowed_triples`] in `A₀³`.
    pub fn forbidden_triples(&self) -> Vec<[AtomId; 3]> {
        let mut out = Vec::new();
        for x in self.atoms() {
            for y in self.atoms() {
                let c = self.comp_atoms(x, y);
                for z in self.atoms() {
                    if !c.contains(z) {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out
    }

    /// Renders an element as `{a,b}` using atom names.
    pub fn format_set(&self, x: ElementSet) -> String {
        let mut s = String::from("{");
        for (i, a) in x.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{}", self.atom_name(a));
        }
        s.push('}');
        s
    }

    pub fn set_names(&self, x: ElementSet) -> Vec<String> {
        x.iter().map(|a| self.atom_name(a).to_string()).collect()
    }

    pub fn parse_set<S: AsRef<str>>(&self, names: &[S]) -> Result<ElementSet> {
        let mut s = ElementSet::EMPTY;
        for n in names {
            let a = self
                .atom(n.as_ref())
                .ok_or_else(|| Error::usage(format!("unknown atom `{}`", n.as_ref())))?;
            s = s.with(a);
        }
        Ok(s)
    }

    /// Checks the atom-structure axioms: converse is an involution, the
    /// identity law, the Peircean triangle law and associativity.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let name = |a: AtomId| self.atom_name(a).to_string();

        for a in self.atoms() {
            let c = self.conv_atom(a);
            if self.conv_atom(c) != a {
                violations.push(Violation {
                    axiom: Axiom::Involution,
                    atoms: vec![name(a), name(c)],
                    message: format!(
                        "conv(conv({})) = {} != {}",
                        name(a),
                        name(self.conv_atom(c)),
                        name(a)
                    ),
                });
            }
        }

        let e = self.identity;
        for x in self.atoms() {
            let sx = ElementSet::singleton(x);
            let left = self.comp_sets(e, sx);
            let right = self.comp_sets(sx, e);
            if left != sx || right != sx {
                violations.push(Violation {
                    axiom: Axiom::Identity,
                    atoms: vec![name(x)],
                    message: format!(
                        "id;{0} = {1}, {0};id = {2}, expected {{{0}}}",
                        name(x),
                        self.format_set(left),
                        self.format_set(right)
                    ),
                });
            }
        }

        for a in self.atoms() {
            for b in self.atoms() {
                for c in self.atoms() {
                    let p = self.comp_atoms(a, b).contains(c);
                    let q = self.comp_atoms(c, self.conv_atom(b)).contains(a);
                    let r = self.comp_atoms(self.conv_atom(a), c).contains(b);
                    if p != q || p != r {
                        violations.push(Violation {
                            axiom: Axiom::Peircean,
                            atoms: vec![name(a), name(b), name(c)],
                            message: format!(
                                "{c} in {a};{b} is {p}, {a} in {c};conv({b}) is {q}, {b} in conv({a});{c} is {r}",
                                a = name(a),
                                b = name(b),
                                c = name(c)
                            ),
                        });
                    }
                }
            }
        }

        for x in self.atoms() {
            for y in self.atoms() {
                let xy = self.comp_atoms(x, y);
                for z in self.atoms() {
                    let left = self.comp_sets(xy, ElementSet::singleton(z));
                    let right = self.comp_sets(ElementSet::singleton(x), self.comp_atoms(y, z));
                    if left != right {
                        violations.push(Violation {
                            axiom: Axiom::Associativity,
                            atoms: vec![name(x), name(y), name(z)],
                            message: format!(
                                "({x};{y});{z} = {} != {} = {x};({y};{z})",
                                self.format_set(left),
                                self.format_set(right),
                                x = name(x),
                                y = name(y),
                                z = name(z)
                            ),
                        });
                    }
                }
            }
        }

        ValidationReport {
            algebra: self.name.clone(),
            ok: violations.is_empty(),
            violations,
        }
    }

    /// Validates and turns a failed report into an error.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.ok {
            Ok(())
        } else {
            Err(Error::Validation {
                name: self.name.clone(),
                report,
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Involution,
    Identity,
    Peircean,
    Associativity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub atoms: Vec<String>,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub algebra: String,
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Incremental construction of an algebra by atom name.
///
/// Rows `id ∘ x` and `x ∘ id` are filled in automatically when there is a
/// single identity atom and the row was not given explicitly.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    name: String,
    atoms: Vec<String>,
    identity: ElementSet,
    converse: Vec<AtomId>,
    comp: Vec<Option<ElementSet>>,
}

impl AlgebraBuilder {
    pub fn new<S: AsRef<str>>(name: impl Into<String>, atoms: &[S]) -> AlgebraBuilder {
        let atoms: Vec<String> = atoms.iter().map(|s| s.as_ref().to_string()).collect();
        let n = atoms.len();
        AlgebraBuilder {
            name: name.into(),
            converse: (0..n).map(AtomId::from).collect(),
            comp: vec![None; n * n],
            identity: ElementSet::EMPTY,
            atoms,
        }
    }

    fn idx(&self, name: &str) -> Result<AtomId> {
        self.atoms
            .iter()
            .position(|a| a == name)
            .map(AtomId::from)
            .ok_or_else(|| Error::usage(format!("unknown atom `{name}`")))
    }

    fn set(&self, names: &[&str]) -> Result<ElementSet> {
        names
            .iter()
            .map(|n| self.idx(n))
            .collect::<Result<Vec<_>>>()
            .map(ElementSet::from_atoms)
    }

    pub fn identity(&mut self, names: &[&str]) -> Result<&mut Self> {
        self.identity = self.set(names)?;
        Ok(self)
    }

    pub fn converse(&mut self, a: &str, b: &str) -> Result<&mut Self> {
        let (a, b) = (self.idx(a)?, self.idx(b)?);
        self.converse[a.index()] = b;
        self.converse[b.index()] = a;
        Ok(self)
    }

    /// Sets `a ∘ b`; returns an error if the row was already given.
    pub fn comp(&mut self, a: &str, b: &str, result: &[&str]) -> Result<&mut Self> {
        let (ai, bi) = (self.idx(a)?, self.idx(b)?);
        let r = self.set(result)?;
        self.comp_ids(ai, bi, r)?;
        Ok(self)
    }

    pub fn comp_ids(&mut self, a: AtomId, b: AtomId, result: ElementSet) -> Result<&mut Self> {
        let n = self.atoms.len();
        let slot = &mut self.comp[a.index() * n + b.index()];
        if slot.is_some() {
            return Err(Error::usage(format!(
                "composition row {} {} given twice",
                self.atoms[a.index()],
                self.atoms[b.index()]
            )));
        }
        *slot = Some(result);
        Ok(self)
    }

    pub fn build(&self) -> Result<RelationAlgebra> {
        let n = self.atoms.len();
        let unique_id = if self.identity.len() == 1 {
            self.identity.first()
        } else {
            None
        };
        let mut comp = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let cell = match self.comp[a * n + b] {
                    Some(s) => s,
                    None => match unique_id {
                        Some(e) if e.index() == a => ElementSet::singleton(AtomId::from(b)),
                        Some(e) if e.index() == b => ElementSet::singleton(AtomId::from(a)),
                        _ => {
                            return Err(Error::usage(format!(
                                "missing composition row {} {}",
                                self.atoms[a], self.atoms[b]
                            )))
                        }
                    },
                };
                comp.push(cell);
            }
        }
        RelationAlgebra::new(
            self.name.clone(),
            self.atoms.clone(),
            self.identity,
            self.converse.clone(),
            comp,
        )
    }
}
