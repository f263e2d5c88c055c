use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::RelationAlgebra;
use crate::network::DomainMatrix;

/// Queue discipline for path consistency. The fixpoint does not depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueueOrder {
    Fifo,
    Lifo,
    /// Pop a uniformly random queued pair, from a seeded generator.
    Shuffled(u64),
}

/// Some domain became empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inconsistent;

/// Shrinks every `D(i,k)` to `D(i,k) ∩ D(i,j) ∘ D(j,k)` until nothing changes.
pub fn path_consistency(
    alg: &RelationAlgebra,
    dm: &DomainMatrix,
) -> Result<DomainMatrix, Inconsistent> {
    path_consistency_with(alg, dm, QueueOrder::Fifo)
}

pub fn path_consistency_with(
    alg: &RelationAlgebra,
    dm: &DomainMatrix,
    order: QueueOrder,
) -> Result<DomainMatrix, Inconsistent> {
    let mut out = dm.clone();
    let n = out.size();
    if out.has_empty() {
        return Err(Inconsistent);
    }
    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    if propagate(alg, &mut out, &all, order) {
        Ok(out)
    } else {
        Err(Inconsistent)
    }
}

/// Queue-driven propagation starting from the changed pairs `seeds` (each
/// with `i ≤ j`). Returns false on a wipe-out.
pub(crate) fn propagate(
    alg: &RelationAlgebra,
    dm: &mut DomainMatrix,
    seeds: &[(usize, usize)],
    order: QueueOrder,
) -> bool {
    let n = dm.size();
    let mut queued = vec![false; n * n];
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    let mut rng = match order {
        QueueOrder::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    for &(i, j) in seeds {
        if !queued[i * n + j] {
            queued[i * n + j] = true;
            queue.push_back((i, j));
        }
    }
    let key = |x: usize, y: usize| if x <= y { (x, y) } else { (y, x) };

    while !queue.is_empty() {
        let (i, j) = match order {
            QueueOrder::Fifo => queue.pop_front(),
            QueueOrder::Lifo => queue.pop_back(),
            QueueOrder::Shuffled(_) => {
                let pos = rng.as_mut().expect("seeded").gen_range(0..queue.len());
                queue.remove(pos)
            }
        }
        .expect("non-empty queue");
        queued[i * n + j] = false;

        // Use (i,j) and its converse (j,i) as the left factor and as the
        // right factor of every triangle.
        for (x, y) in [(i, j), (j, i)] {
            for k in 0..n {
                // D(x,k) ⊆ D(x,y) ∘ D(y,k)
                let target = dm.get(x, k);
                let narrowed = target.intersection(alg.comp_sets(dm.get(x, y), dm.get(y, k)));
                if narrowed != target {
                    if narrowed.is_empty() {
                        return false;
                    }
                    dm.set_any(alg, x, k, narrowed);
                    let (p, q) = key(x, k);
                    if !queued[p * n + q] {
                        queued[p * n + q] = true;
                        queue.push_back((p, q));
                    }
                }
                // D(k,y) ⊆ D(k,x) ∘ D(x,y)
                let target = dm.get(k, y);
                let narrowed = target.intersection(alg.comp_sets(dm.get(k, x), dm.get(x, y)));
                if narrowed != target {
                    if narrowed.is_empty() {
                        return false;
                    }
                    dm.set_any(alg, k, y, narrowed);
                    let (p, q) = key(k, y);
                    if !queued[p * n + q] {
                        queued[p * n + q] = true;
                        queue.push_back((p, q));
                    }
                }
            }
        }
    }
    true
}
