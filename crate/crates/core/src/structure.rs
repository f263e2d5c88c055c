//! The finite atom structure of an algebra and operation tables on it.
//!
//! The atom structure has the atoms as its domain, a ternary relation `H` of
//! allowed triples, the converse graph `E`, and one unary relation per element
//! (the element's atoms). The unary relations are never stored: a table
//! operation preserves all of them exactly when it is conservative, which
//! [`Behaviour`] enforces on construction.

use serde::Serialize;

use crate::algebra::RelationAlgebra;
use crate::element::{AtomId, ElementSet};
use crate::error::{Error, Result};

/// Largest supported operation arity.
pub const MAX_ARITY: usize = 6;
/// Largest operation table, in cells.
pub const MAX_TABLE_CELLS: usize = 1 << 22;
/// Largest number of `H`-tuple combinations [`preserves`] will enumerate.
pub const PRESERVES_LIMIT: u128 = 2_000_000_000;

#[derive(Clone, Debug)]
pub struct AtomStructure {
    n: usize,
    atom_names: Vec<String>,
    converse: Vec<AtomId>,
    identity: ElementSet,
    symmetric: bool,
    triples: Vec<[AtomId; 3]>,
    // third[x*n+y] = {z : H(x,y,z)}; first and second are the other two views.
    third: Vec<ElementSet>,
    first: Vec<ElementSet>,
    second: Vec<ElementSet>,
}

/// Builds the atom structure of `alg`.
pub fn build_atom_structure(alg: &RelationAlgebra) -> AtomStructure {
    let n = alg.atom_count();
    let triples = alg.allowed_triples();
    let mut third = vec![ElementSet::EMPTY; n * n];
    let mut first = vec![ElementSet::EMPTY; n * n];
    let mut second = vec![ElementSet::EMPTY; n * n];
    for &[x, y, z] in &triples {
        third[x.index() * n + y.index()] = third[x.index() * n + y.index()].with(z);
        first[y.index() * n + z.index()] = first[y.index() * n + z.index()].with(x);
        second[x.index() * n + z.index()] = second[x.index() * n + z.index()].with(y);
    }
    AtomStructure {
        n,
        atom_names: alg.atom_names().to_vec(),
        converse: alg.atoms().map(|a| alg.conv_atom(a)).collect(),
        identity: alg.identity_atoms(),
        symmetric: alg.is_symmetric(),
        triples,
        third,
        first,
        second,
    }
}

impl AtomStructure {
    pub fn atom_count(&self) -> usize {
        self.n
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

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Atoms below the identity of the source algebra.
    pub fn identity_atoms(&self) -> ElementSet {
        self.identity
    }

    /// The allowed triples in lexicographic order.
    pub fn triples(&self) -> &[[AtomId; 3]] {
        &self.triples
    }

    pub fn h_size(&self) -> usize {
        self.triples.len()
    }

    #[inline]
    pub fn contains(&self, x: AtomId, y: AtomId, z: AtomId) -> bool {
        self.third[x.index() * self.n + y.index()].contains(z)
    }

    #[inline]
    pub fn conv(&self, a: AtomId) -> AtomId {
        self.converse[a.index()]
    }

    /// The pairs `(a, conv(a))`.
    pub fn converse_pairs(&self) -> Vec<(AtomId, AtomId)> {
        (0..self.n)
            .map(|i| (AtomId::from(i), self.converse[i]))
            .collect()
    }

    #[inline]
    pub(crate) fn third(&self, x: AtomId, y: AtomId) -> ElementSet {
        self.third[x.index() * self.n + y.index()]
    }

    #[inline]
    pub(crate) fn first(&self, y: AtomId, z: AtomId) -> ElementSet {
        self.first[y.index() * self.n + z.index()]
    }

    #[inline]
    pub(crate) fn second(&self, x: AtomId, z: AtomId) -> ElementSet {
        self.second[x.index() * self.n + z.index()]
    }

    /// All atoms as an element.
    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.n)
    }
}

/// An operation table `A₀ᵏ → A₀` whose value is always one of its arguments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Behaviour {
    arity: usize,
    atoms: usize,
    table: Vec<AtomId>,
}

pub(crate) fn table_len(atoms: usize, arity: usize) -> Result<usize> {
    if arity == 0 || arity > MAX_ARITY {
        return Err(Error::usage(format!(
            "arity {arity} outside 1..={MAX_ARITY}"
        )));
    }
    let mut len: usize = 1;
    for _ in 0..arity {
        len = len
            .checked_mul(atoms)
            .filter(|&l| l <= MAX_TABLE_CELLS)
            .ok_or_else(|| {
                Error::LimitExceeded(format!(
                    "table of arity {arity} over {atoms} atoms exceeds {MAX_TABLE_CELLS} cells"
                ))
            })?;
    }
    Ok(len)
}

/// Argument tuple of a table cell; the first argument is the most
/// significant digit, so cell order is lexicographic order.
pub(crate) fn decode_cell(mut index: usize, atoms: usize, arity: usize) -> Vec<AtomId> {
    let mut out = vec![AtomId(0); arity];
    for slot in out.iter_mut().rev() {
        *slot = AtomId::from(index % atoms);
        index /= atoms;
    }
    out
}

pub(crate) fn encode_cell(args: &[AtomId], atoms: usize) -> usize {
    args.iter().fold(0, |acc, a| acc * atoms + a.index())
}

impl Behaviour {
    pub fn new(arity: usize, atoms: usize, table: Vec<AtomId>) -> Result<Behaviour> {
        let len = table_len(atoms, arity)?;
        if table.len() != len {
            return Err(Error::usage(format!(
                "table has {} cells, expected {len}",
                table.len()
            )));
        }
        for (i, &v) in table.iter().enumerate() {
            let args = decode_cell(i, atoms, arity);
            if !args.contains(&v) {
                return Err(Error::usage(format!(
                    "table is not conservative at {:?} -> {}",
                    args.iter().map(|a| a.0).collect::<Vec<_>>(),
                    v.0
                )));
            }
        }
        Ok(Behaviour {
            arity,
            atoms,
            table,
        })
    }

    pub fn from_fn(
        arity: usize,
        atoms: usize,
        f: impl Fn(&[AtomId]) -> AtomId,
    ) -> Result<Behaviour> {
        let len = table_len(atoms, arity)?;
        let table = (0..len).map(|i| f(&decode_cell(i, atoms, arity))).collect();
        Behaviour::new(arity, atoms, table)
    }

    /// The `i`-th projection (0-based).
    pub fn projection(arity: usize, atoms: usize, i: usize) -> Result<Behaviour> {
        if i >= arity {
            return Err(Error::usage(format!("projection {i} of arity {arity}")));
        }
        Behaviour::from_fn(arity, atoms, |t| t[i])
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn atom_count(&self) -> usize {
        self.atoms
    }

    pub fn table(&self) -> &[AtomId] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, args: &[AtomId]) -> AtomId {
        debug_assert_eq!(args.len(), self.arity);
        self.table[encode_cell(args, self.atoms)]
    }

    /// True when `f(a, b) = f(b, a)`; binary tables only.
    pub fn is_symmetric_on(&self, a: AtomId, b: AtomId) -> bool {
        self.arity == 2 && self.apply(&[a, b]) == self.apply(&[b, a])
    }

    /// True when the restriction to `pairᵏ` equals `target` there.
    pub fn agrees_on(&self, pair: [AtomId; 2], target: impl Fn(&[AtomId]) -> AtomId) -> bool {
        let mut args = vec![pair[0]; self.arity];
        for mask in 0..1usize << self.arity {
            for (i, slot) in args.iter_mut().enumerate() {
                *slot = pair[mask >> (self.arity - 1 - i) & 1];
            }
            if self.apply(&args) != target(&args) {
                return false;
            }
        }
        true
    }

    /// True when every value on `pairᵏ` equals some fixed coordinate.
    pub fn is_projection_on(&self, pair: [AtomId; 2]) -> bool {
        (0..self.arity).any(|i| self.agrees_on(pair, |t| t[i]))
    }
}

/// Why a table fails to be a polymorphism of the atom structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Counterexample {
    /// Applying the table row-wise to these allowed triples gives `image`,
    /// which is not allowed.
    Triples {
        rows: Vec<[AtomId; 3]>,
        image: [AtomId; 3],
    },
    /// `f(conv t) != conv f(t)` for the argument tuple `args`.
    Converse {
        args: Vec<AtomId>,
        value: AtomId,
        value_on_converse: AtomId,
    },
}

/// Checks that `g` maps allowed triples to allowed triples and commutes with
/// converse. Returns the first counterexample in lexicographic order of the
/// row triples.
pub fn preserves(os: &AtomStructure, g: &Behaviour) -> Result<Option<Counterexample>> {
    if g.atoms != os.n {
        return Err(Error::usage(format!(
            "behaviour over {} atoms, structure has {}",
            g.atoms, os.n
        )));
    }
    let k = g.arity;
    let combos = (os.h_size() as u128).pow(k as u32);
    if combos > PRESERVES_LIMIT {
        return Err(Error::LimitExceeded(format!(
            "{} allowed triples to the power {k} exceeds {PRESERVES_LIMIT}",
            os.h_size()
        )));
    }

    let mut choice = vec![0usize; k];
    if let Some(image) = preserves_rec(os, g, 0, [0, 0, 0], &mut choice) {
        let rows = choice.iter().map(|&i| os.triples[i]).collect();
        return Ok(Some(Counterexample::Triples { rows, image }));
    }

    if !os.symmetric {
        let len = g.table.len();
        for i in 0..len {
            let args = decode_cell(i, os.n, k);
            let conv_args: Vec<AtomId> = args.iter().map(|&a| os.conv(a)).collect();
            let v = g.table[i];
            let w = g.apply(&conv_args);
            if w != os.conv(v) {
                return Ok(Some(Counterexample::Converse {
                    args,
                    value: v,
                    value_on_converse: w,
                }));
            }
        }
    }
    Ok(None)
}

fn preserves_rec(
    os: &AtomStructure,
    g: &Behaviour,
    depth: usize,
    cells: [usize; 3],
    choice: &mut [usize],
) -> Option<[AtomId; 3]> {
    if depth == choice.len() {
        let image = [g.table[cells[0]], g.table[cells[1]], g.table[cells[2]]];
        return (!os.contains(image[0], image[1], image[2])).then_some(image);
    }
    let n = os.n;
    for (i, t) in os.triples.iter().enumerate() {
        choice[depth] = i;
        let next = [
            cells[0] * n + t[0].index(),
            cells[1] * n + t[1].index(),
            cells[2] * n + t[2].index(),
        ];
        if let Some(img) = preserves_rec(os, g, depth + 1, next, choice) {
            return Some(img);
        }
    }
    None
}

/// `outer(inner₁, …, innerₘ)`, evaluated pointwise.
pub fn compose_behaviours(outer: &Behaviour, inners: &[Behaviour]) -> Result<Behaviour> {
    if inners.len() != outer.arity {
        return Err(Error::usage(format!(
            "outer arity {} but {} inner operations",
            outer.arity,
            inners.len()
        )));
    }
    let first = &inners[0];
    if inners
        .iter()
        .any(|g| g.arity != first.arity || g.atoms != first.atoms)
        || first.atoms != outer.atoms
    {
        return Err(Error::usage("inner operations disagree in arity or domain"));
    }
    let mut args = vec![AtomId(0); outer.arity];
    let table = (0..first.table.len())
        .map(|i| {
            for (slot, g) in args.iter_mut().zip(inners) {
                *slot = g.table[i];
            }
            outer.apply(&args)
        })
        .collect();
    Ok(Behaviour {
        arity: first.arity,
        atoms: first.atoms,
        table,
    })
}

/// Checks `g(x,x,y,y,z,z) = g(y,z,x,z,x,y)` for all atoms.
pub fn is_siggers(g: &Behaviour) -> Result<bool> {
    if g.arity != 6 {
        return Err(Error::usage(format!(
            "the Siggers identity needs arity 6, got {}",
            g.arity
        )));
    }
    let atoms = (0..g.atoms).map(AtomId::from);
    for x in atoms.clone() {
        for y in atoms.clone() {
            for z in atoms.clone() {
                if g.apply(&[x, x, y, y, z, z]) != g.apply(&[y, z, x, z, x, y]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
