use crate::algebra::RelationAlgebra;
use crate::element::AtomId;
use crate::error::{Error, Result};
use crate::network::{canonical_labels, Network};

use super::{is_closed, Refinement};

pub const BRUTE_FORCE_MAX_NODES: usize = 5;
pub const BRUTE_FORCE_MAX_REFINEMENTS: u128 = 100_000_000;

/// Tries every atomic refinement of the labels and accepts if one is closed.
/// Testing oracle; refuses instances above the size limits.
pub fn brute_force_solve(alg: &RelationAlgebra, net: &Network) -> Result<bool> {
    let n = net.node_count();
    if n > BRUTE_FORCE_MAX_NODES {
        return Err(Error::LimitExceeded(format!(
            "brute force handles at most {BRUTE_FORCE_MAX_NODES} nodes, got {n}"
        )));
    }
    let labels = canonical_labels(alg, net);
    let choices: Vec<Vec<AtomId>> = labels.iter().map(|(_, l)| l.iter().collect()).collect();
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(false);
    }
    let total: u128 = choices.iter().map(|c| c.len() as u128).product();
    if total > BRUTE_FORCE_MAX_REFINEMENTS {
        return Err(Error::LimitExceeded(format!(
            "{total} refinements exceed {BRUTE_FORCE_MAX_REFINEMENTS}"
        )));
    }
    let mut digits = vec![0usize; choices.len()];
    loop {
        let mut slot = 0;
        let g = Refinement::from_upper(alg, n, |_, _| {
            let a = choices[slot][digits[slot]];
            slot += 1;
            a
        });
        if is_closed(alg, &g) {
            return Ok(true);
        }
        // odometer
        let mut p = 0;
        loop {
            if p == digits.len() {
                return Ok(false);
            }
            digits[p] += 1;
            if digits[p] < choices[p].len() {
                break;
            }
            digits[p] = 0;
            p += 1;
        }
    }
}
