//! Searching for conservative polymorphism tables with prescribed values.

use serde::{Deserialize, Serialize};

use crate::element::{AtomId, ElementSet};
use crate::error::{Error, Result};
use crate::search::{AtomCsp, Budget, SearchResult, SearchStats, VarOrder};
use crate::structure::{decode_cell, encode_cell, preserves, table_len, AtomStructure, Behaviour};

/// Above this many atoms ternary searches are refused.
pub const MAX_TERNARY_ATOMS: usize = 6;
/// Above this many atoms binary searches are refused.
pub const MAX_BINARY_ATOMS: usize = 12;

/// The four non-projection conservative operations on a two-element set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// Symmetric, returning the lower-indexed atom of the pair.
    Min,
    /// Symmetric, returning the higher-indexed atom of the pair.
    Max,
    Majority,
    Minority,
}

impl WitnessKind {
    /// Search order.
    pub const ALL: [WitnessKind; 4] = [
        WitnessKind::Min,
        WitnessKind::Max,
        WitnessKind::Majority,
        WitnessKind::Minority,
    ];

    pub fn arity(self) -> usize {
        match self {
            WitnessKind::Min | WitnessKind::Max => 2,
            WitnessKind::Majority | WitnessKind::Minority => 3,
        }
    }

    /// The operation on `pair`, for arguments drawn from `pair`.
    pub fn eval(self, pair: [AtomId; 2], args: &[AtomId]) -> AtomId {
        let [lo, hi] = pair;
        match self {
            WitnessKind::Min => {
                if args.contains(&lo) {
                    lo
                } else {
                    hi
                }
            }
            WitnessKind::Max => {
                if args.contains(&hi) {
                    hi
                } else {
                    lo
                }
            }
            WitnessKind::Majority => {
                if args[0] == args[1] || args[0] == args[2] {
                    args[0]
                } else {
                    args[1]
                }
            }
            WitnessKind::Minority => {
                if args[0] == args[1] {
                    args[2]
                } else if args[0] == args[2] {
                    args[1]
                } else {
                    args[0]
                }
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::Min => "min",
            WitnessKind::Max => "max",
            WitnessKind::Majority => "majority",
            WitnessKind::Minority => "minority",
        }
    }
}

/// A polymorphism table whose restriction to `pair` is the `kind` operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub pair: [AtomId; 2],
    pub kind: WitnessKind,
    pub behaviour: Behaviour,
}

impl PairWitness {
    /// Re-checks both defining properties independently of the search.
    pub fn verify(&self, os: &AtomStructure) -> Result<bool> {
        let restricted = self
            .behaviour
            .agrees_on(self.pair, |t| self.kind.eval(self.pair, t));
        Ok(restricted
            && self.behaviour.arity() == self.kind.arity()
            && preserves(os, &self.behaviour)?.is_none())
    }
}

pub(crate) fn check_pair(os: &AtomStructure, pair: [AtomId; 2]) -> Result<[AtomId; 2]> {
    let n = os.atom_count();
    if pair[0] == pair[1] {
        return Err(Error::usage("a pair needs two distinct atoms"));
    }
    if pair.iter().any(|a| a.index() >= n) {
        return Err(Error::usage("pair atom outside the structure"));
    }
    let mut p = pair;
    p.sort();
    Ok(p)
}

fn check_size(os: &AtomStructure, arity: usize) -> Result<()> {
    let n = os.atom_count();
    let cap = if arity <= 2 {
        MAX_BINARY_ATOMS
    } else {
        MAX_TERNARY_ATOMS
    };
    if n > cap {
        return Err(Error::LimitExceeded(format!(
            "arity-{arity} search supports at most {cap} atoms, structure has {n}"
        )));
    }
    Ok(())
}

/// Looks for a conservative `H`-preserving table of the given arity that
/// takes the prescribed values on some cells. Cells are branched on in
/// lexicographic order, values in atom order.
pub fn search_behaviour(
    os: &AtomStructure,
    arity: usize,
    fixed: &[(Vec<AtomId>, AtomId)],
    budget: Budget,
) -> Result<(SearchResult<Behaviour>, SearchStats)> {
    check_size(os, arity)?;
    let n = os.atom_count();
    let len = table_len(n, arity)?;
    let mut domains: Vec<ElementSet> = (0..len)
        .map(|c| decode_cell(c, n, arity).into_iter().collect())
        .collect();
    for (args, v) in fixed {
        let c = encode_cell(args, n);
        domains[c] = domains[c].intersection(ElementSet::singleton(*v));
    }
    if domains.iter().any(|d| d.is_empty()) {
        return Ok((SearchResult::Absent, SearchStats::default()));
    }
    let mut csp = AtomCsp::new(os, domains);
    if !os.is_symmetric() {
        for c in 0..len {
            let conv: Vec<AtomId> = decode_cell(c, n, arity)
                .into_iter()
                .map(|a| os.conv(a))
                .collect();
            let d = encode_cell(&conv, n);
            if c <= d {
                csp.add_converse(c, d);
            }
        }
    }
    add_row_constraints(os, &mut csp, arity, [0; 3]);
    let (result, stats) = csp.solve(VarOrder::Lexicographic, budget);
    let result = match result {
        SearchResult::Found(table) => SearchResult::Found(Behaviour::new(arity, n, table)?),
        SearchResult::Absent => SearchResult::Absent,
        SearchResult::Inconclusive => SearchResult::Inconclusive,
    };
    Ok((result, stats))
}

/// One constraint per choice of `arity` allowed triples; the three cells
/// read off column-wise must take an allowed triple.
fn add_row_constraints(
    os: &AtomStructure,
    csp: &mut AtomCsp<'_>,
    remaining: usize,
    cells: [usize; 3],
) {
    if remaining == 0 {
        csp.add_triple(cells);
        return;
    }
    let n = os.atom_count();
    for t in os.triples() {
        let next = [
            cells[0] * n + t[0].index(),
            cells[1] * n + t[1].index(),
            cells[2] * n + t[2].index(),
        ];
        add_row_constraints(os, csp, remaining - 1, next);
    }
}

/// Cells of `pairᵏ` with the values of the `kind` operation.
fn pair_cells(pair: [AtomId; 2], kind: WitnessKind) -> Vec<(Vec<AtomId>, AtomId)> {
    let k = kind.arity();
    (0..1usize << k)
        .map(|mask| {
            let args: Vec<AtomId> = (0..k).map(|i| pair[mask >> (k - 1 - i) & 1]).collect();
            let v = kind.eval(pair, &args);
            (args, v)
        })
        .collect()
}

/// Searches for a witness of one kind on `pair`.
pub fn find_witness_of_kind(
    os: &AtomStructure,
    pair: [AtomId; 2],
    kind: WitnessKind,
    budget: Budget,
) -> Result<(SearchResult<PairWitness>, SearchStats)> {
    let pair = check_pair(os, pair)?;
    let (r, stats) = search_behaviour(os, kind.arity(), &pair_cells(pair, kind), budget)?;
    let r = r.map(|behaviour| PairWitness {
        pair,
        kind,
        behaviour,
    });
    if let SearchResult::Found(w) = &r {
        if !w.verify(os)? {
            panic!("search returned a table that fails verification");
        }
    }
    Ok((r, stats))
}

/// One search attempt in a pair's record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attempt {
    pub kind: WitnessKind,
    pub found: bool,
    pub exhausted: bool,
    pub nodes: u64,
}

/// The result for one pair with the attempts that led to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSearch {
    pub pair: [AtomId; 2],
    pub result: SearchResult<PairWitness>,
    pub attempts: Vec<Attempt>,
}

/// Tries min, max, majority and minority in that order and returns the first
/// witness. `Absent` certifies that none of the four exists.
pub fn find_pair_witness(
    os: &AtomStructure,
    pair: [AtomId; 2],
    budget: Budget,
) -> Result<PairSearch> {
    find_pair_witness_among(os, pair, &WitnessKind::ALL, budget)
}

pub(crate) fn find_pair_witness_among(
    os: &AtomStructure,
    pair: [AtomId; 2],
    kinds: &[WitnessKind],
    budget: Budget,
) -> Result<PairSearch> {
    let pair = check_pair(os, pair)?;
    let mut attempts = Vec::new();
    let mut inconclusive = false;
    for &kind in kinds {
        let (r, stats) = find_witness_of_kind(os, pair, kind, budget)?;
        attempts.push(Attempt {
            kind,
            found: r.is_found(),
            exhausted: !matches!(r, SearchResult::Inconclusive),
            nodes: stats.nodes,
        });
        match r {
            SearchResult::Found(w) => {
                return Ok(PairSearch {
                    pair,
                    result: SearchResult::Found(w),
                    attempts,
                })
            }
            SearchResult::Inconclusive => inconclusive = true,
            SearchResult::Absent => {}
        }
    }
    Ok(PairSearch {
        pair,
        result: if inconclusive {
            SearchResult::Inconclusive
        } else {
            SearchResult::Absent
        },
        attempts,
    })
}

/// A binary table with `f(x, id) = f(id, x) = x` for all atoms: the
/// behaviour of an injective binary canonical polymorphism.
pub fn find_injective_binary(
    os: &AtomStructure,
    budget: Budget,
) -> Result<SearchResult<Behaviour>> {
    let ids = os.identity_atoms();
    let [id] = ids.iter().collect::<Vec<_>>()[..] else {
        return Err(Error::Scope(
            "injective binary search needs an integral algebra".into(),
        ));
    };
    let fixed: Vec<(Vec<AtomId>, AtomId)> = (0..os.atom_count())
        .map(AtomId::from)
        .flat_map(|x| [(vec![x, id], x), (vec![id, x], x)])
        .collect();
    let (r, _) = search_behaviour(os, 2, &fixed, budget)?;
    if let SearchResult::Found(g) = &r {
        assert!(
            preserves(os, g)?.is_none(),
            "injective table fails verification"
        );
    }
    Ok(r)
}
