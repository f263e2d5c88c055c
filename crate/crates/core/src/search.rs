//! Finite-domain search over atom-valued variables constrained by `H`.
//!
//! Every constraint says that a triple of variables takes an allowed triple
//! of the atom structure, or that one variable is the converse of another.
//! Propagation maintains generalized arc consistency; branching is
//! depth-first with a node budget.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::element::{AtomId, ElementSet};
use crate::structure::AtomStructure;

/// Default per-search node limit.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub timeout: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: DEFAULT_NODE_BUDGET,
            timeout: None,
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Budget {
        Budget {
            max_nodes,
            timeout: None,
        }
    }

    pub fn with_timeout(self, timeout: Duration) -> Budget {
        Budget {
            timeout: Some(timeout),
            ..self
        }
    }
}

/// Outcome of a budgeted search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchResult<T> {
    Found(T),
    /// The search space was exhausted.
    Absent,
    /// The budget ran out first.
    Inconclusive,
}

impl<T> SearchResult<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchResult::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchResult::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, SearchResult::Absent)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchResult<U> {
        match self {
            SearchResult::Found(t) => SearchResult::Found(f(t)),
            SearchResult::Absent => SearchResult::Absent,
            SearchResult::Inconclusive => SearchResult::Inconclusive,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub revisions: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarOrder {
    /// Lowest-index unassigned variable first.
    Lexicographic,
    /// Smallest domain first, ties broken by index.
    SmallestDomain,
}

#[derive(Clone, Copy, Debug)]
enum Constraint {
    Triple([u32; 3]),
    /// `v[1] = conv(v[0])`
    Converse([u32; 2]),
}

/// A constraint problem over the atoms of one atom structure.
#[derive(Clone, Debug)]
pub struct AtomCsp<'a> {
    os: &'a AtomStructure,
    domains: Vec<ElementSet>,
    constraints: Vec<Constraint>,
}

impl<'a> AtomCsp<'a> {
    pub fn new(os: &'a AtomStructure, domains: Vec<ElementSet>) -> AtomCsp<'a> {
        AtomCsp {
            os,
            domains,
            constraints: Vec::new(),
        }
    }

    pub fn var_count(&self) -> usize {
        self.domains.len()
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    pub fn domain(&self, v: usize) -> ElementSet {
        self.domains[v]
    }

    /// Adds `H(v₀, v₁, v₂)` unless every combination of the current domains
    /// already satisfies it. Returns whether it was kept.
    pub fn add_triple(&mut self, vars: [usize; 3]) -> bool {
        let d = [
            self.domains[vars[0]],
            self.domains[vars[1]],
            self.domains[vars[2]],
        ];
        let entailed = if vars[0] != vars[1] && vars[1] != vars[2] && vars[0] != vars[2] {
            d[0].iter()
                .all(|x| d[1].iter().all(|y| d[2].is_subset(self.os.third(x, y))))
        } else {
            let mut all = true;
            for_each_consistent(vars, d, |x, y, z| {
                all &= self.os.contains(x, y, z);
            });
            all
        };
        if !entailed {
            self.constraints
                .push(Constraint::Triple(vars.map(|v| v as u32)));
        }
        !entailed
    }

    /// Adds `v[b] = conv(v[a])`.
    pub fn add_converse(&mut self, a: usize, b: usize) {
        if a == b {
            let d = self.domains[a];
            self.domains[a] = d.iter().filter(|&x| self.os.conv(x) == x).collect();
        } else {
            self.constraints
                .push(Constraint::Converse([a as u32, b as u32]));
        }
    }

    /// Depth-first search with propagation; values are tried in atom order.
    pub fn solve(
        &self,
        order: VarOrder,
        budget: Budget,
    ) -> (SearchResult<Vec<AtomId>>, SearchStats) {
        let mut engine = Engine::new(self, budget);
        let mut domains = self.domains.clone();
        let all: Vec<u32> = (0..domains.len() as u32).collect();
        let result = if !engine.propagate(&mut domains, &all) {
            SearchResult::Absent
        } else {
            match engine.dfs(domains, order) {
                Ok(Some(sol)) => SearchResult::Found(sol),
                Ok(None) => SearchResult::Absent,
                Err(OutOfBudget) => SearchResult::Inconclusive,
            }
        };
        (result, engine.stats)
    }
}

/// Enumerates value combinations that give repeated variables equal values.
fn for_each_consistent(
    vars: [usize; 3],
    d: [ElementSet; 3],
    mut f: impl FnMut(AtomId, AtomId, AtomId),
) {
    for x in d[0] {
        for y in d[1] {
            if vars[0] == vars[1] && x != y {
                continue;
            }
            for z in d[2] {
                if (vars[0] == vars[2] && x != z) || (vars[1] == vars[2] && y != z) {
                    continue;
                }
                f(x, y, z);
            }
        }
    }
}

struct OutOfBudget;

struct Engine<'p, 'a> {
    csp: &'p AtomCsp<'a>,
    // CSR adjacency: constraints touching each variable.
    watch_start: Vec<u32>,
    watch: Vec<u32>,
    budget: Budget,
    started: Instant,
    stats: SearchStats,
    queue: Vec<u32>,
    queued: Vec<bool>,
}

impl<'p, 'a> Engine<'p, 'a> {
    fn new(csp: &'p AtomCsp<'a>, budget: Budget) -> Self {
        let n = csp.domains.len();
        let mut count = vec![0u32; n + 1];
        let vars_of = |c: &Constraint| -> ([u32; 3], usize) {
            match *c {
                Constraint::Triple(v) => (v, 3),
                Constraint::Converse([a, b]) => ([a, b, b], 2),
            }
        };
        for c in &csp.constraints {
            let (vs, k) = vars_of(c);
            for (i, &v) in vs[..k].iter().enumerate() {
                if !vs[..i].contains(&v) {
                    count[v as usize + 1] += 1;
                }
            }
        }
        for i in 0..n {
            count[i + 1] += count[i];
        }
        let mut fill = count.clone();
        let mut watch = vec![0u32; count[n] as usize];
        for (ci, c) in csp.constraints.iter().enumerate() {
            let (vs, k) = vars_of(c);
            for (i, &v) in vs[..k].iter().enumerate() {
                if !vs[..i].contains(&v) {
                    watch[fill[v as usize] as usize] = ci as u32;
                    fill[v as usize] += 1;
                }
            }
        }
        Engine {
            csp,
            watch_start: count,
            watch,
            budget,
            started: Instant::now(),
            stats: SearchStats::default(),
            queue: Vec::new(),
            queued: vec![false; n],
        }
    }

    fn revise(&mut self, c: Constraint, dom: &mut [ElementSet]) -> [u32; 3] {
        self.stats.revisions += 1;
        let os = self.csp.os;
        match c {
            Constraint::Triple(v) => {
                let [a, b, c] = v.map(|x| x as usize);
                let (da, db, dc) = (dom[a], dom[b], dom[c]);
                let (na, nb, nc);
                if a != b && b != c && a != c {
                    let mut zc = ElementSet::EMPTY;
                    for x in da {
                        for y in db {
                            zc = zc.union(os.third(x, y));
                        }
                    }
                    nc = dc.intersection(zc);
                    let mut za = ElementSet::EMPTY;
                    for y in db {
                        for z in nc {
                            za = za.union(os.first(y, z));
                        }
                    }
                    na = da.intersection(za);
                    let mut zb = ElementSet::EMPTY;
                    for x in na {
                        for z in nc {
                            zb = zb.union(os.second(x, z));
                        }
                    }
                    nb = db.intersection(zb);
                } else {
                    let (mut sa, mut sb, mut sc) =
                        (ElementSet::EMPTY, ElementSet::EMPTY, ElementSet::EMPTY);
                    for_each_consistent([a, b, c], [da, db, dc], |x, y, z| {
                        if os.contains(x, y, z) {
                            sa = sa.with(x);
                            sb = sb.with(y);
                            sc = sc.with(z);
                        }
                    });
                    na = sa;
                    nb = sb;
                    nc = sc;
                }
                let mut changed = [u32::MAX; 3];
                for (slot, (var, new)) in [(a, na), (b, nb), (c, nc)].into_iter().enumerate() {
                    if new != dom[var] {
                        dom[var] = new;
                        changed[slot] = var as u32;
                    }
                }
                changed
            }
            Constraint::Converse([a, b]) => {
                let (a, b) = (a as usize, b as usize);
                let conv = |s: ElementSet| -> ElementSet { s.iter().map(|x| os.conv(x)).collect() };
                let nb = dom[b].intersection(conv(dom[a]));
                let na = dom[a].intersection(conv(nb));
                let mut changed = [u32::MAX; 3];
                if na != dom[a] {
                    dom[a] = na;
                    changed[0] = a as u32;
                }
                if nb != dom[b] {
                    dom[b] = nb;
                    changed[1] = b as u32;
                }
                changed
            }
        }
    }

    /// Returns false on a wipe-out.
    fn propagate(&mut self, dom: &mut [ElementSet], seeds: &[u32]) -> bool {
        self.queue.clear();
        self.queued.iter_mut().for_each(|q| *q = false);
        for &v in seeds {
            if !self.queued[v as usize] {
                self.queued[v as usize] = true;
                self.queue.push(v);
            }
        }
        while let Some(v) = self.queue.pop() {
            self.queued[v as usize] = false;
            let (lo, hi) = (
                self.watch_start[v as usize] as usize,
                self.watch_start[v as usize + 1] as usize,
            );
            for w in lo..hi {
                let c = self.csp.constraints[self.watch[w] as usize];
                let changed = self.revise(c, dom);
                for x in changed {
                    if x == u32::MAX {
                        continue;
                    }
                    if dom[x as usize].is_empty() {
                        return false;
                    }
                    if !self.queued[x as usize] {
                        self.queued[x as usize] = true;
                        self.queue.push(x);
                    }
                }
            }
        }
        true
    }

    fn pick(&self, dom: &[ElementSet], order: VarOrder) -> Option<usize> {
        match order {
            VarOrder::Lexicographic => dom.iter().position(|d| d.len() > 1),
            VarOrder::SmallestDomain => dom
                .iter()
                .enumerate()
                .filter(|(_, d)| d.len() > 1)
                .min_by_key(|(i, d)| (d.len(), *i))
                .map(|(i, _)| i),
        }
    }

    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.budget.max_nodes {
            return Err(OutOfBudget);
        }
        if let Some(t) = self.budget.timeout {
            if self.stats.nodes.is_multiple_of(256) && self.started.elapsed() > t {
                return Err(OutOfBudget);
            }
        }
        Ok(())
    }

    fn dfs(
        &mut self,
        dom: Vec<ElementSet>,
        order: VarOrder,
    ) -> Result<Option<Vec<AtomId>>, OutOfBudget> {
        let Some(var) = self.pick(&dom, order) else {
            return Ok(Some(
                dom.iter().map(|d| d.first().expect("nonempty")).collect(),
            ));
        };
        for value in dom[var] {
            self.tick()?;
            let mut next = dom.clone();
            next[var] = ElementSet::singleton(value);
            if self.propagate(&mut next, &[var as u32]) {
                if let Some(sol) = self.dfs(next, order)? {
                    return Ok(Some(sol));
                }
            }
        }
        Ok(None)
    }
}
