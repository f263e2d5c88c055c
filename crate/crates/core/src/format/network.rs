use std::fmt::Write as _;

use crate::algebra::RelationAlgebra;
use crate::error::{Error, Result};
use crate::network::Network;

use super::lines;

/// Parses `network <name> over <algebra>` / `node ...` / `edge u v : atoms...`.
///
/// The declared algebra name must match `alg`.
pub fn parse_network(text: &str, alg: &RelationAlgebra) -> Result<Network> {
    let mut net: Option<Network> = None;
    for (ln, toks) in lines(text) {
        let err = |m: String| Error::parse(ln, m);
        match toks[0] {
            "network" => {
                if net.is_some() {
                    return Err(err("duplicate `network` line".into()));
                }
                if toks.len() != 4 || toks[2] != "over" {
                    return Err(err("expected `network <name> over <algebra>`".into()));
                }
                if toks[3] != alg.name() {
                    return Err(err(format!(
                        "network is over `{}` but algebra `{}` was supplied",
                        toks[3],
                        alg.name()
                    )));
                }
                net = Some(Network::new(toks[1], toks[3]));
            }
            "node" => {
                let n = net
                    .as_mut()
                    .ok_or_else(|| err("`node` before `network`".into()))?;
                for name in &toks[1..] {
                    n.add_node(*name).map_err(|e| err(e.to_string()))?;
                }
            }
            "edge" => {
                let n = net
                    .as_mut()
                    .ok_or_else(|| err("`edge` before `network`".into()))?;
                if toks.len() < 4 || toks[3] != ":" {
                    return Err(err("expected `edge <u> <v> : <atoms...>`".into()));
                }
                let u = n
                    .node(toks[1])
                    .ok_or_else(|| err(format!("unknown node `{}`", toks[1])))?;
                let v = n
                    .node(toks[2])
                    .ok_or_else(|| err(format!("unknown node `{}`", toks[2])))?;
                let label = alg.parse_set(&toks[4..]).map_err(|e| err(e.to_string()))?;
                n.constrain(u, v, label);
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }
    net.ok_or_else(|| Error::parse(0, "missing `network` line"))
}

pub fn write_network(net: &Network, alg: &RelationAlgebra) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "network {} over {}", net.name, net.over);
    if net.node_count() > 0 {
        let _ = writeln!(s, "node {}", net.nodes().join(" "));
    }
    for ((u, v), l) in net.labels() {
        let _ = write!(s, "edge {} {} :", net.nodes()[u], net.nodes()[v]);
        for a in alg.set_names(l) {
            s.push(' ');
            s.push_str(&a);
        }
        s.push('\n');
    }
    s
}
