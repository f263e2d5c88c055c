use std::fmt::Write as _;

use crate::algebra::{AlgebraBuilder, RelationAlgebra};
use crate::element::AtomId;
use crate::error::{Error, Result};

use super::lines;

/// Parses the `algebra / atoms / identity / converse / comp` format.
pub fn parse_algebra(text: &str) -> Result<RelationAlgebra> {
    let mut name: Option<String> = None;
    let mut builder: Option<AlgebraBuilder> = None;
    let mut have_identity = false;
    let mut last_line = 0;

    for (ln, toks) in lines(text) {
        last_line = ln;
        let err = |m: String| Error::parse(ln, m);
        match toks[0] {
            "algebra" => {
                if name.is_some() {
                    return Err(err("duplicate `algebra` line".into()));
                }
                if toks.len() != 2 {
                    return Err(err("expected `algebra <name>`".into()));
                }
                name = Some(toks[1].to_string());
            }
            "atoms" => {
                let Some(n) = &name else {
                    return Err(err("`atoms` before `algebra`".into()));
                };
                if builder.is_some() {
                    return Err(err("duplicate `atoms` line".into()));
                }
                if toks.len() < 2 {
                    return Err(err("expected at least one atom".into()));
                }
                builder = Some(AlgebraBuilder::new(n.clone(), &toks[1..]));
            }
            "identity" => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| err("`identity` before `atoms`".into()))?;
                if have_identity {
                    return Err(err("duplicate `identity` line".into()));
                }
                if toks.len() < 2 {
                    return Err(err("expected at least one identity atom".into()));
                }
                b.identity(&toks[1..]).map_err(|e| err(e.to_string()))?;
                have_identity = true;
            }
            "converse" => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| err("`converse` before `atoms`".into()))?;
                if toks.len() != 3 {
                    return Err(err("expected `converse <atom> <atom>`".into()));
                }
                b.converse(toks[1], toks[2])
                    .map_err(|e| err(e.to_string()))?;
            }
            "comp" => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| err("`comp` before `atoms`".into()))?;
                if toks.len() < 4 || toks[3] != "=" {
                    return Err(err("expected `comp <a> <b> = <atoms...>`".into()));
                }
                b.comp(toks[1], toks[2], &toks[4..])
                    .map_err(|e| err(e.to_string()))?;
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }

    let b = builder.ok_or_else(|| Error::parse(last_line, "missing `atoms` line"))?;
    if !have_identity {
        return Err(Error::parse(last_line, "missing `identity` line"));
    }
    b.build().map_err(|e| match e {
        Error::Usage(m) => Error::parse(last_line, m),
        other => other,
    })
}

/// Canonical serialization: atoms, identity and converse pairs first, then
/// every composition row in atom-index order. Rows involving the identity atom
/// of an integral algebra are left implicit.
pub fn write_algebra(alg: &RelationAlgebra) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebra {}", alg.name());
    let _ = writeln!(s, "atoms {}", alg.atom_names().join(" "));
    let _ = writeln!(
        s,
        "identity {}",
        alg.set_names(alg.identity_atoms()).join(" ")
    );
    for a in alg.atoms() {
        let c = alg.conv_atom(a);
        if a < c {
            let _ = writeln!(s, "converse {} {}", alg.atom_name(a), alg.atom_name(c));
        }
    }
    let implicit: Option<AtomId> = if alg.is_integral() {
        alg.identity_atoms().first()
    } else {
        None
    };
    for a in alg.atoms() {
        for b in alg.atoms() {
            if implicit.is_some_and(|e| e == a || e == b) {
                continue;
            }
            let row = alg.set_names(alg.comp_atoms(a, b));
            let _ = write!(s, "comp {} {} =", alg.atom_name(a), alg.atom_name(b));
            for r in row {
                s.push(' ');
                s.push_str(&r);
            }
            s.push('\n');
        }
    }
    s
}
