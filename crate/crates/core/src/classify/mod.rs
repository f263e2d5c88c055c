//! The P / NP-complete classification of network satisfaction for
//! symmetric integral algebras with a flexible atom.
//!
//! Every two-element subset of atoms is tested for a conservative
//! polymorphism of the atom structure that acts on it as one of Post's four
//! non-projection operations. All pairs witnessed means a Siggers behaviour
//! exists and the problem is tractable; a pair on which every behaviour is a
//! projection makes it NP-complete.

mod oracle;
mod witness;

use std::time::{Duration, Instant};

use serde::Serialize;

pub use oracle::{brute_force_pair_witness, BRUTE_FORCE_MAX_BINARY, BRUTE_FORCE_MAX_TERNARY};
pub use witness::{
    find_injective_binary, find_pair_witness, find_witness_of_kind, search_behaviour, Attempt,
    PairSearch, PairWitness, WitnessKind, MAX_BINARY_ATOMS, MAX_TERNARY_ATOMS,
};

use crate::algebra::RelationAlgebra;
use crate::analysis::{analyze, integralize, AnalysisReport, AnalysisView};
use crate::element::AtomId;
use crate::error::{Error, Result};
use crate::format::write_behaviour;
use crate::search::{Budget, SearchResult};
use crate::structure::{
    build_atom_structure, compose_behaviours, preserves, AtomStructure, Behaviour,
};

/// Largest atom count accepted by [`classify`].
pub const MAX_CLASSIFY_ATOMS: usize = MAX_TERNARY_ATOMS;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassVerdict {
    #[serde(rename = "P")]
    P,
    #[serde(rename = "NP-complete")]
    NpComplete,
    #[serde(rename = "out-of-scope-advisory-P")]
    AdvisoryP,
    #[serde(rename = "out-of-scope-advisory-hard")]
    AdvisoryHard,
    /// Some pair exhausted its budget and no pair was certified bad.
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

impl ClassVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassVerdict::P => "P",
            ClassVerdict::NpComplete => "NP-complete",
            ClassVerdict::AdvisoryP => "out-of-scope-advisory-P",
            ClassVerdict::AdvisoryHard => "out-of-scope-advisory-hard",
            ClassVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// Pairs admitting a binary behaviour symmetric on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedEdges {
    pub edges: Vec<PairWitness>,
    /// Pairs whose min/max searches ran out of budget.
    pub inconclusive: Vec<[AtomId; 2]>,
}

impl RedEdges {
    pub fn pairs(&self) -> Vec<[AtomId; 2]> {
        self.edges.iter().map(|w| w.pair).collect()
    }
}

fn all_pairs(n: usize) -> impl Iterator<Item = [AtomId; 2]> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| [AtomId::from(i), AtomId::from(j)]))
}

/// A binary behaviour is symmetric on a pair exactly when it acts there as
/// min or max, so this is the pair search restricted to those two kinds.
pub fn red_edges(os: &AtomStructure, budget: Budget) -> Result<RedEdges> {
    let mut edges = Vec::new();
    let mut inconclusive = Vec::new();
    for pair in all_pairs(os.atom_count()) {
        let s = witness::find_pair_witness_among(
            os,
            pair,
            &[WitnessKind::Min, WitnessKind::Max],
            budget,
        )?;
        match s.result {
            SearchResult::Found(w) => edges.push(w),
            SearchResult::Inconclusive => inconclusive.push(pair),
            SearchResult::Absent => {}
        }
    }
    Ok(RedEdges {
        edges,
        inconclusive,
    })
}

/// Folds the red-edge witnesses into the first projection with
/// `g'(x, y) = f(g(x, y), g(y, x))`. Symmetry already gained on earlier edges
/// survives each step, so one pass suffices.
pub fn maximal_symmetric_from(os: &AtomStructure, red: &RedEdges) -> Result<Behaviour> {
    let n = os.atom_count();
    let p1 = Behaviour::projection(2, n, 0)?;
    let p2 = Behaviour::projection(2, n, 1)?;
    let mut g = p1.clone();
    for w in &red.edges {
        let swapped = compose_behaviours(&g, &[p2.clone(), p1.clone()])?;
        g = compose_behaviours(&w.behaviour, &[g, swapped])?;
    }
    debug_assert!(red
        .edges
        .iter()
        .all(|w| g.is_symmetric_on(w.pair[0], w.pair[1])));
    Ok(g)
}

/// [`red_edges`] followed by [`maximal_symmetric_from`].
pub fn maximal_symmetric(os: &AtomStructure, budget: Budget) -> Result<Behaviour> {
    let red = red_edges(os, budget)?;
    if let Some(p) = red.inconclusive.first() {
        return Err(Error::BudgetExceeded(format!(
            "red-edge search on {{{},{}}} ran out of budget",
            os.atom_name(p[0]),
            os.atom_name(p[1])
        )));
    }
    maximal_symmetric_from(os, &red)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ClassifyOptions {
    /// Applied to each individual search.
    pub budget: Budget,
    /// Adds wall-clock time per pair to the report, which makes the JSON
    /// output vary between runs.
    pub record_timing: bool,
}

#[derive(Clone, Debug)]
pub struct PairRecord {
    pub pair: [AtomId; 2],
    pub result: SearchResult<PairWitness>,
    pub attempts: Vec<Attempt>,
    pub elapsed: Option<Duration>,
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    /// The algebra that was classified: the input, or its integral
    /// reduction when `integralized` is set.
    pub algebra: RelationAlgebra,
    pub input_name: String,
    pub verdict: ClassVerdict,
    /// Analysis of the input algebra.
    pub scope: AnalysisReport,
    pub integralized: bool,
    pub pairs: Vec<PairRecord>,
    pub bad_pair: Option<[AtomId; 2]>,
    pub red_edges: Vec<[AtomId; 2]>,
    /// `None` when the classified algebra is not integral.
    pub injective_binary: Option<SearchResult<Behaviour>>,
}

impl ClassificationReport {
    pub fn witness(&self, pair: [AtomId; 2]) -> Option<&PairWitness> {
        let mut p = pair;
        p.sort();
        self.pairs
            .iter()
            .find(|r| r.pair == p)
            .and_then(|r| match &r.result {
                SearchResult::Found(w) => Some(w),
                _ => None,
            })
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &PairWitness> {
        self.pairs.iter().filter_map(|r| match &r.result {
            SearchResult::Found(w) => Some(w),
            _ => None,
        })
    }

    pub fn view(&self) -> ClassificationView {
        let alg = &self.algebra;
        let names = alg.atom_names();
        let pair_names = |p: [AtomId; 2]| {
            [
                alg.atom_name(p[0]).to_string(),
                alg.atom_name(p[1]).to_string(),
            ]
        };
        let lines = |g: &Behaviour| -> Vec<String> {
            write_behaviour(g, names)
                .lines()
                .map(str::to_string)
                .collect()
        };
        ClassificationView {
            algebra: self.input_name.clone(),
            classified: alg.name().to_string(),
            verdict: self.verdict,
            in_theorem_scope: self.scope.in_theorem_scope,
            integralized: self.integralized,
            bad_pair: self.bad_pair.map(pair_names),
            red_edges: self.red_edges.iter().copied().map(pair_names).collect(),
            injective_binary: InjectiveView {
                status: self.injective_status(),
                behaviour: match &self.injective_binary {
                    Some(SearchResult::Found(g)) => Some(lines(g)),
                    _ => None,
                },
            },
            pairs: self
                .pairs
                .iter()
                .map(|r| PairView {
                    pair: pair_names(r.pair),
                    status: status(&r.result),
                    kind: match &r.result {
                        SearchResult::Found(w) => Some(w.kind),
                        _ => None,
                    },
                    behaviour: match &r.result {
                        SearchResult::Found(w) => Some(lines(&w.behaviour)),
                        _ => None,
                    },
                    attempts: r
                        .attempts
                        .iter()
                        .map(|a| AttemptView {
                            kind: a.kind,
                            result: if a.found {
                                "found"
                            } else if a.exhausted {
                                "absent"
                            } else {
                                "inconclusive"
                            },
                            nodes: a.nodes,
                        })
                        .collect(),
                    elapsed_ms: r.elapsed.map(|d| d.as_secs_f64() * 1e3),
                })
                .collect(),
            scope: self.scope.view(alg),
        }
    }

    /// A few lines for terminal output.
    pub fn summary(&self) -> String {
        let alg = &self.algebra;
        let mut out = format!("{}: {}\n", self.input_name, self.verdict.as_str());
        if !self.scope.in_theorem_scope {
            out.push_str("  advisory only: the algebra is not symmetric with a flexible atom\n");
        }
        if self.integralized {
            out.push_str(&format!(
                "  classified the integral reduction {}\n",
                alg.name()
            ));
        }
        for r in &self.pairs {
            let p = format!(
                "{{{},{}}}",
                alg.atom_name(r.pair[0]),
                alg.atom_name(r.pair[1])
            );
            let what = match &r.result {
                SearchResult::Found(w) => w.kind.name().to_string(),
                SearchResult::Absent => "no witness".to_string(),
                SearchResult::Inconclusive => "inconclusive".to_string(),
            };
            out.push_str(&format!("  {p}: {what}\n"));
        }
        out.push_str(&format!(
            "  injective binary: {}\n",
            self.injective_status()
        ));
        out
    }

    fn injective_status(&self) -> &'static str {
        self.injective_binary
            .as_ref()
            .map_or("not-applicable", status)
    }
}

fn status<T>(r: &SearchResult<T>) -> &'static str {
    match r {
        SearchResult::Found(_) => "found",
        SearchResult::Absent => "absent",
        SearchResult::Inconclusive => "inconclusive",
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationView {
    pub algebra: String,
    pub classified: String,
    pub verdict: ClassVerdict,
    pub in_theorem_scope: bool,
    pub integralized: bool,
    pub bad_pair: Option<[String; 2]>,
    pub red_edges: Vec<[String; 2]>,
    pub injective_binary: InjectiveView,
    pub pairs: Vec<PairView>,
    pub scope: AnalysisView,
}

#[derive(Clone, Debug, Serialize)]
pub struct InjectiveView {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub behaviour: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairView {
    pub pair: [String; 2],
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<WitnessKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub behaviour: Option<Vec<String>>,
    pub attempts: Vec<AttemptView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AttemptView {
    pub kind: WitnessKind,
    pub result: &'static str,
    pub nodes: u64,
}

/// Runs the whole pipeline on a validated algebra.
pub fn classify(alg: &RelationAlgebra, options: ClassifyOptions) -> Result<ClassificationReport> {
    alg.ensure_valid()?;
    let scope = analyze(alg);
    let (target, integralized) = if !scope.integral && scope.first_flexible().is_some() {
        (integralize(alg)?.algebra, true)
    } else {
        (alg.clone(), false)
    };
    let n = target.atom_count();
    if n > MAX_CLASSIFY_ATOMS {
        return Err(Error::LimitExceeded(format!(
            "classification supports at most {MAX_CLASSIFY_ATOMS} atoms, {} has {n}",
            target.name()
        )));
    }
    let os = build_atom_structure(&target);

    let mut pairs = Vec::new();
    for pair in all_pairs(n) {
        let start = Instant::now();
        let s = find_pair_witness(&os, pair, options.budget)?;
        pairs.push(PairRecord {
            pair,
            result: s.result,
            attempts: s.attempts,
            elapsed: options.record_timing.then(|| start.elapsed()),
        });
    }

    let bad_pair = pairs.iter().find(|r| r.result.is_absent()).map(|r| r.pair);
    let any_inconclusive = pairs
        .iter()
        .any(|r| matches!(r.result, SearchResult::Inconclusive));
    let in_scope = scope.in_theorem_scope;
    let verdict = match (bad_pair.is_some(), any_inconclusive, in_scope) {
        (true, _, true) => ClassVerdict::NpComplete,
        (true, _, false) => ClassVerdict::AdvisoryHard,
        (false, true, _) => ClassVerdict::Inconclusive,
        (false, false, true) => ClassVerdict::P,
        (false, false, false) => ClassVerdict::AdvisoryP,
    };

    // A pair is red iff its first witness is min or max: the search tries
    // those kinds first, so a later kind means both were absent.
    let red_edges = pairs
        .iter()
        .filter_map(|r| match &r.result {
            SearchResult::Found(w) if w.kind.arity() == 2 => Some(r.pair),
            _ => None,
        })
        .collect();

    let injective_binary = if target.is_integral() {
        Some(find_injective_binary(&os, options.budget)?)
    } else {
        None
    };
    if in_scope
        && injective_binary
            .as_ref()
            .is_some_and(SearchResult::is_absent)
    {
        assert!(
            verdict != ClassVerdict::P,
            "no injective binary behaviour yet every pair is witnessed"
        );
    }
    for w in pairs.iter().filter_map(|r| match &r.result {
        SearchResult::Found(w) => Some(w),
        _ => None,
    }) {
        assert!(preserves(&os, &w.behaviour)?.is_none());
    }

    Ok(ClassificationReport {
        algebra: target,
        input_name: alg.name().to_string(),
        verdict,
        scope,
        integralized,
        pairs,
        bad_pair,
        red_edges,
        injective_binary,
    })
}
