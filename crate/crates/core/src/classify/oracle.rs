//! Exhaustive pair-witness enumeration for small structures.
//!
//! Plain backtracking over table cells with a check of every constraint as
//! soon as its last cell is assigned. No propagation, so it shares nothing
//! with the search engine beyond the atom structure itself.

use crate::element::AtomId;
use crate::error::{Error, Result};
use crate::structure::{AtomStructure, Behaviour};

use super::witness::{check_pair, WitnessKind};

pub const BRUTE_FORCE_MAX_BINARY: usize = 4;
pub const BRUTE_FORCE_MAX_TERNARY: usize = 3;

/// Every conservative table of the kind's arity whose restriction to `pair`
/// is the `kind` operation is tried; returns the first that preserves the
/// allowed triples (and converse, for non-symmetric structures).
pub fn brute_force_pair_witness(
    os: &AtomStructure,
    pair: [AtomId; 2],
    kind: WitnessKind,
) -> Result<Option<Behaviour>> {
    let pair = check_pair(os, pair)?;
    let n = os.atom_count();
    let k = kind.arity();
    let cap = if k == 2 {
        BRUTE_FORCE_MAX_BINARY
    } else {
        BRUTE_FORCE_MAX_TERNARY
    };
    if n > cap {
        return Err(Error::LimitExceeded(format!(
            "exhaustive arity-{k} enumeration is limited to {cap} atoms"
        )));
    }
    let cells = n.pow(k as u32);
    let tuple = |mut c: usize| -> Vec<AtomId> {
        let mut t = vec![AtomId(0); k];
        for slot in t.iter_mut().rev() {
            *slot = AtomId::from(c % n);
            c /= n;
        }
        t
    };
    let index = |t: &[AtomId]| t.iter().fold(0, |acc, a| acc * n + a.index());

    let choices: Vec<Vec<AtomId>> = (0..cells)
        .map(|c| {
            let t = tuple(c);
            if t.iter().all(|a| pair.contains(a)) {
                vec![kind.eval(pair, &t)]
            } else {
                let mut v = t.clone();
                v.sort();
                v.dedup();
                v
            }
        })
        .collect();

    // checks[c] holds the constraints whose largest cell is c.
    let mut checks: Vec<Vec<Check>> = vec![Vec::new(); cells];
    let h = os.triples();
    for combo in 0..h.len().pow(k as u32) {
        let mut rows = vec![0usize; k];
        let mut rest = combo;
        for r in rows.iter_mut().rev() {
            *r = rest % h.len();
            rest /= h.len();
        }
        let mut col = [0usize; 3];
        for (pos, slot) in col.iter_mut().enumerate() {
            let t: Vec<AtomId> = rows.iter().map(|&r| h[r][pos]).collect();
            *slot = index(&t);
        }
        let last = *col.iter().max().unwrap();
        checks[last].push(Check::Triple(col));
    }
    if !os.is_symmetric() {
        for c in 0..cells {
            let t: Vec<AtomId> = tuple(c).into_iter().map(|a| os.conv(a)).collect();
            let d = index(&t);
            checks[c.max(d)].push(Check::Converse(c, d));
        }
    }

    let mut table = vec![AtomId(0); cells];
    if extend(os, &choices, &checks, &mut table, 0) {
        Ok(Some(Behaviour::new(k, n, table)?))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Copy, Debug)]
enum Check {
    Triple([usize; 3]),
    Converse(usize, usize),
}

fn extend(
    os: &AtomStructure,
    choices: &[Vec<AtomId>],
    checks: &[Vec<Check>],
    table: &mut [AtomId],
    cell: usize,
) -> bool {
    if cell == table.len() {
        return true;
    }
    for &v in &choices[cell] {
        table[cell] = v;
        let ok = checks[cell].iter().all(|c| match *c {
            Check::Triple([x, y, z]) => os.contains(table[x], table[y], table[z]),
            Check::Converse(c, d) => table[d] == os.conv(table[c]),
        });
        if ok && extend(os, choices, checks, table, cell + 1) {
            return true;
        }
    }
    false
}
