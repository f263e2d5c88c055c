use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::element::AtomId;
use crate::error::{Error, Result};
use crate::structure::{decode_cell, encode_cell, table_len, Behaviour};

use super::lines;

/// One `x1 ... xk -> r` line per argument tuple, in lexicographic order.
pub fn write_behaviour<S: AsRef<str>>(g: &Behaviour, atom_names: &[S]) -> String {
    let mut s = String::new();
    for (i, v) in g.table().iter().enumerate() {
        for a in decode_cell(i, g.atom_count(), g.arity()) {
            s.push_str(atom_names[a.index()].as_ref());
            s.push(' ');
        }
        let _ = writeln!(s, "-> {}", atom_names[v.index()].as_ref());
    }
    s
}

/// Parses a behaviour table; every argument tuple must appear exactly once.
pub fn parse_behaviour<S: AsRef<str>>(text: &str, atom_names: &[S]) -> Result<Behaviour> {
    let n = atom_names.len();
    let lookup = |ln: usize, t: &str| {
        atom_names
            .iter()
            .position(|a| a.as_ref() == t)
            .map(AtomId::from)
            .ok_or_else(|| Error::parse(ln, format!("unknown atom `{t}`")))
    };
    let mut arity = None;
    let mut cells: BTreeMap<usize, AtomId> = BTreeMap::new();
    let mut last = 0;
    for (ln, toks) in lines(text) {
        last = ln;
        let arrow = toks
            .iter()
            .position(|&t| t == "->")
            .ok_or_else(|| Error::parse(ln, "expected `x1 ... xk -> r`"))?;
        if arrow == 0 || arrow + 2 != toks.len() {
            return Err(Error::parse(ln, "expected `x1 ... xk -> r`"));
        }
        let k = *arity.get_or_insert(arrow);
        if k != arrow {
            return Err(Error::parse(ln, format!("arity {arrow}, expected {k}")));
        }
        let args = toks[..arrow]
            .iter()
            .map(|t| lookup(ln, t))
            .collect::<Result<Vec<_>>>()?;
        let v = lookup(ln, toks[arrow + 1])?;
        if cells.insert(encode_cell(&args, n), v).is_some() {
            return Err(Error::parse(ln, "argument tuple listed twice"));
        }
    }
    let k = arity.ok_or_else(|| Error::parse(0, "empty behaviour table"))?;
    let len = table_len(n, k)?;
    if cells.len() != len {
        return Err(Error::parse(
            last,
            format!("{} of {len} argument tuples given", cells.len()),
        ));
    }
    Behaviour::new(k, n, cells.into_values().collect()).map_err(|e| match e {
        Error::Usage(m) => Error::parse(last, m),
        other => other,
    })
}
