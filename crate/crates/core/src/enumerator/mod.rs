//! Exhaustive and random generation of small linear {2,3}-uniform hypergraphs,
//! plus the verification campaigns built on top of it.
//!
//! Exhaustive generation is a DFS over candidate hyperedges in lexicographic
//! order: a node is a set of candidate indices `i_1 < … < i_r`, its children
//! append one later candidate that covers no already-covered pair. Pre-order
//! therefore visits edge sets in strictly increasing lexicographic order, and
//! a visitor may prune a node's whole subtree (used for monotone properties
//! such as "contains a Berge path of length k").

pub mod campaign;
pub mod canonical;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Hyperedge, LinearHypergraph, VertexId};

pub use campaign::*;
pub use canonical::{canonical_form, canonical_with_rep, DEFAULT_ISO_CAP};

/// Exhaustive cap for {2,3}-uniform enumeration.
pub const DEFAULT_CAP_MIXED: usize = 7;
/// Exhaustive cap for 3-uniform enumeration.
pub const DEFAULT_CAP_TRIPLES: usize = 8;
/// Largest `n` any generator accepts (pair bitmasks are 128 bits wide).
pub const MAX_GENERATOR_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("n={n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid campaign parameters: {0}")]
    InvalidParams(String),
}

impl EnumerateError {
    pub fn code(&self) -> &'static str {
        match self {
            EnumerateError::CapExceeded { .. } => "E_CAP_EXCEEDED",
            EnumerateError::InvalidParams(_) => "E_INVALID_PARAMS",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Uniformity {
    /// 3-uniform only.
    Three,
    /// {2,3}-uniform.
    TwoThree,
}

impl Uniformity {
    pub fn default_cap(self) -> usize {
        match self {
            Uniformity::Three => DEFAULT_CAP_TRIPLES,
            Uniformity::TwoThree => DEFAULT_CAP_MIXED,
        }
    }
}

/// Candidate hyperedges on `n` vertices in lexicographic order, with pair masks.
#[derive(Debug, Clone)]
pub struct Candidates {
    n: usize,
    edges: Vec<Hyperedge>,
    masks: Vec<u128>,
}

fn pair_bit(n: usize, a: usize, b: usize) -> u32 {
    debug_assert!(a < b);
    (a * (2 * n - a - 1) / 2 + (b - a - 1)) as u32
}

impl Candidates {
    pub fn new(n: usize, uniformity: Uniformity) -> Result<Self, EnumerateError> {
        if n > MAX_GENERATOR_N {
            return Err(EnumerateError::CapExceeded { n, cap: MAX_GENERATOR_N });
        }
        let n32 = n as VertexId;
        let mut edges = Vec::new();
        for a in 0..n32 {
            for b in a + 1..n32 {
                if uniformity == Uniformity::TwoThree {
                    edges.push(Hyperedge::pair(a, b));
                }
                for c in b + 1..n32 {
                    edges.push(Hyperedge::triple(a, b, c));
                }
            }
        }
        edges.sort_unstable();
        let masks = edges
            .iter()
            .map(|e| e.pairs().fold(0u128, |m, (a, b)| m | 1 << pair_bit(n, a as usize, b as usize)))
            .collect();
        Ok(Candidates { n, edges, masks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge(&self, i: usize) -> Hyperedge {
        self.edges[i]
    }
}

/// A node of the enumeration tree.
#[derive(Debug)]
pub struct Instance<'a> {
    pub n: usize,
    /// Sorted hyperedges.
    pub edges: &'a [Hyperedge],
    /// Candidate indices, strictly increasing.
    pub ids: &'a [usize],
    pub triples: usize,
}

impl Instance<'_> {
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// e(∂H) = m₂ + 3·m₃.
    pub fn shadow_edges(&self) -> usize {
        self.edges.len() + 2 * self.triples
    }

    pub fn to_hypergraph(&self) -> LinearHypergraph {
        LinearHypergraph::from_sorted_unchecked(self.n, self.edges.to_vec())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Visit {
    Descend,
    Prune,
}

struct Walker<'c> {
    cands: &'c Candidates,
    edges: Vec<Hyperedge>,
    ids: Vec<usize>,
    triples: usize,
    covered: u128,
}

impl<'c> Walker<'c> {
    fn new(cands: &'c Candidates) -> Self {
        Walker { cands, edges: Vec::new(), ids: Vec::new(), triples: 0, covered: 0 }
    }

    fn try_push(&mut self, j: usize) -> bool {
        let mask = self.cands.masks[j];
        if mask & self.covered != 0 {
            return false;
        }
        self.covered |= mask;
        let e = self.cands.edges[j];
        self.triples += e.is_triple() as usize;
        self.edges.push(e);
        self.ids.push(j);
        true
    }

    fn pop(&mut self) {
        let j = self.ids.pop().unwrap();
        let e = self.edges.pop().unwrap();
        self.triples -= e.is_triple() as usize;
        self.covered &= !self.cands.masks[j];
    }

    fn visit<F: FnMut(&Instance<'_>) -> Visit>(&self, f: &mut F) -> Visit {
        f(&Instance { n: self.cands.n, edges: &self.edges, ids: &self.ids, triples: self.triples })
    }

    /// Visits the current node, then its subtree unless pruned. Returns nodes visited.
    fn walk<F: FnMut(&Instance<'_>) -> Visit>(&mut self, f: &mut F) -> u64 {
        let mut count = 1;
        if self.visit(f) == Visit::Prune {
            return count;
        }
        let start = self.ids.last().map_or(0, |&j| j + 1);
        for j in start..self.cands.len() {
            if self.try_push(j) {
                count += self.walk(f);
                self.pop();
            }
        }
        count
    }
}

/// Visits every linear hypergraph over `cands` in lexicographic pre-order.
/// Returns the number of visited nodes.
pub fn enumerate_with<F: FnMut(&Instance<'_>) -> Visit>(cands: &Candidates, mut visitor: F) -> u64 {
    Walker::new(cands).walk(&mut visitor)
}

/// Visits every labeled linear hypergraph with the given uniformity on `n`
/// vertices exactly once (no pruning). Enforces `n ≤ cap`.
pub fn enumerate<F: FnMut(&Instance<'_>)>(
    n: usize,
    uniformity: Uniformity,
    cap: usize,
    mut visitor: F,
) -> Result<u64, EnumerateError> {
    if n > cap {
        return Err(EnumerateError::CapExceeded { n, cap });
    }
    let cands = Candidates::new(n, uniformity)?;
    Ok(enumerate_with(&cands, |inst| {
        visitor(inst);
        Visit::Descend
    }))
}

/// Visits one representative (the lexicographically first labeling) of each
/// isomorphism class. Sequential.
pub fn enumerate_up_to_isomorphism<F: FnMut(&Instance<'_>)>(
    n: usize,
    uniformity: Uniformity,
    cap: usize,
    mut visitor: F,
) -> Result<u64, EnumerateError> {
    let cap = cap.min(DEFAULT_ISO_CAP);
    if n > cap {
        return Err(EnumerateError::CapExceeded { n, cap });
    }
    let cands = Candidates::new(n, uniformity)?;
    let mut seen = std::collections::HashSet::new();
    let mut classes = 0;
    enumerate_with(&cands, |inst| {
        let code = canonical_form(&inst.to_hypergraph(), cap).expect("within cap");
        if seen.insert(code) {
            classes += 1;
            visitor(inst);
        }
        Visit::Descend
    });
    Ok(classes)
}

/// Parallel pruned enumeration. The tree is split into work units by edge
/// prefixes of length ≤ 2; each unit folds into its own state, and states are
/// merged in pre-order of their prefixes, so the result does not depend on
/// scheduling.
pub fn enumerate_par<S, I, V, M>(cands: &Candidates, init: I, visit: V, merge: M) -> S
where
    S: Send,
    I: Fn() -> S + Sync,
    V: Fn(&mut S, &Instance<'_>) -> Visit + Sync,
    M: Fn(S, S) -> S,
{
    // depth ≤ 1 sequentially, remembering which nodes descend
    let mut head = init();
    let mut w = Walker::new(cands);
    let root_descends = w.visit(&mut |inst: &Instance<'_>| visit(&mut head, inst)) == Visit::Descend;
    let mut units: Vec<(Vec<usize>, S)> = Vec::new();
    let mut second_level: Vec<(usize, usize)> = Vec::new();
    if root_descends {
        for j in 0..cands.len() {
            let mut st = init();
            w.try_push(j);
            let descends = w.visit(&mut |inst: &Instance<'_>| visit(&mut st, inst)) == Visit::Descend;
            w.pop();
            units.push((vec![j], st));
            if descends {
                for j2 in j + 1..cands.len() {
                    if cands.masks[j] & cands.masks[j2] == 0 {
                        second_level.push((j, j2));
                    }
                }
            }
        }
    }
    let deep: Vec<(Vec<usize>, S)> = second_level
        .into_par_iter()
        .map(|(j, j2)| {
            let mut st = init();
            let mut w = Walker::new(cands);
            w.try_push(j);
            w.try_push(j2);
            w.walk(&mut |inst: &Instance<'_>| visit(&mut st, inst));
            (vec![j, j2], st)
        })
        .collect();
    units.extend(deep);
    units.sort_by(|a, b| a.0.cmp(&b.0));
    units.into_iter().fold(head, |acc, (_, st)| merge(acc, st))
}

/// A seeded random linear hypergraph: `attempts ~ U[0, |candidates|]`, each
/// attempt inserts a uniformly chosen candidate unless it breaks linearity.
/// Stream `index` of the seed gives independent, reproducible samples.
pub fn random_instance(cands: &Candidates, seed: u64, index: u64) -> LinearHypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let c = cands.len();
    let mut chosen = vec![false; c];
    let mut covered = 0u128;
    if c > 0 {
        let attempts = rng.random_range(0..=c);
        for _ in 0..attempts {
            let j = rng.random_range(0..c);
            if !chosen[j] && cands.masks[j] & covered == 0 {
                chosen[j] = true;
                covered |= cands.masks[j];
            }
        }
    }
    let edges = (0..c).filter(|&j| chosen[j]).map(|j| cands.edges[j]).collect();
    LinearHypergraph::from_sorted_unchecked(cands.n, edges)
}
