//! Exact longest Berge path and Berge cycle search.
//!
//! In a linear hypergraph every shadow pair `{v, w}` lies in exactly one
//! hyperedge, so a Berge path is a simple path of the shadow graph whose
//! consecutive pairs map to pairwise distinct hyperedges. The search is a DFS
//! over shadow paths with a used-hyperedge bitset, bounded by
//! `min(unused hyperedges, vertices still reachable)`.
//!
//! Vertices are explored in ascending order, so the first witness of maximum
//! length is the lexicographically smallest vertex sequence.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Hyperedge, LinearHypergraph, PairIndex, VertexId};

/// `v_1, h_1, v_2, …, h_k, v_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergePath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Hyperedge>,
}

impl BergePath {
    /// Number of hyperedges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// `v_1, h_1, …, v_ℓ, h_ℓ, v_1` with `{v_i, v_{i+1 mod ℓ}} ⊆ h_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Hyperedge>,
}

impl BergeCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Drops the closing hyperedge, giving a path of length ℓ−1.
    pub fn unroll(&self) -> BergePath {
        let mut edges = self.edges.clone();
        edges.pop();
        BergePath { vertices: self.vertices.clone(), edges }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("solver supports at most {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
}

impl SolveError {
    pub fn code(&self) -> &'static str {
        "E_TOO_MANY_VERTICES"
    }
}

fn all_distinct<T: Ord + Clone>(items: &[T]) -> bool {
    let mut sorted = items.to_vec();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

pub fn is_valid_berge_path(h: &LinearHypergraph, p: &BergePath) -> bool {
    if p.vertices.is_empty() || p.vertices.len() != p.edges.len() + 1 {
        return false;
    }
    if p.vertices.iter().any(|&v| v as usize >= h.n()) || !all_distinct(&p.vertices) {
        return false;
    }
    if !all_distinct(&p.edges) || !p.edges.iter().all(|e| h.contains_edge(e)) {
        return false;
    }
    p.edges
        .iter()
        .zip(p.vertices.windows(2))
        .all(|(e, w)| e.contains(w[0]) && e.contains(w[1]))
}

pub fn is_valid_berge_cycle(h: &LinearHypergraph, c: &BergeCycle) -> bool {
    let l = c.vertices.len();
    if l < 2 || c.edges.len() != l {
        return false;
    }
    if c.vertices.iter().any(|&v| v as usize >= h.n()) || !all_distinct(&c.vertices) {
        return false;
    }
    if !all_distinct(&c.edges) || !c.edges.iter().all(|e| h.contains_edge(e)) {
        return false;
    }
    (0..l).all(|i| c.edges[i].contains(c.vertices[i]) && c.edges[i].contains(c.vertices[(i + 1) % l]))
}

#[inline]
fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Number of vertices of `allowed` reachable from `from` through `allowed`.
#[inline]
fn reach(idx: &PairIndex, from: usize, allowed: u128) -> usize {
    let mut seen = 0u128;
    let mut frontier = idx.adj(from) & allowed;
    while frontier != 0 {
        seen |= frontier;
        let mut next = 0u128;
        for b in bits(frontier) {
            next |= idx.adj(b);
        }
        frontier = next & allowed & !seen;
    }
    seen.count_ones() as usize
}

struct UsedEdges {
    words: Vec<u64>,
}

impl UsedEdges {
    fn new(m: usize) -> Self {
        UsedEdges { words: vec![0; m.div_ceil(64).max(1)] }
    }

    #[inline]
    fn get(&self, e: usize) -> bool {
        self.words[e >> 6] >> (e & 63) & 1 == 1
    }

    #[inline]
    fn toggle(&mut self, e: usize) {
        self.words[e >> 6] ^= 1 << (e & 63);
    }
}

/// Reusable exact solver over one hypergraph.
pub struct Solver<'a> {
    n: usize,
    edges: &'a [Hyperedge],
    idx: PairIndex,
}

impl<'a> Solver<'a> {
    pub const MAX_VERTICES: usize = PairIndex::MAX_VERTICES;

    pub fn new(h: &'a LinearHypergraph) -> Result<Self, SolveError> {
        if h.n() > Self::MAX_VERTICES {
            return Err(SolveError::TooManyVertices { n: h.n(), max: Self::MAX_VERTICES });
        }
        Ok(Self::from_parts(h.n(), h.edges()))
    }

    /// `edges` must be a valid linear edge set on `n ≤ MAX_VERTICES` vertices.
    pub(crate) fn from_parts(n: usize, edges: &'a [Hyperedge]) -> Self {
        Solver { n, edges, idx: PairIndex::new(n, edges) }
    }

    pub(crate) fn index(&self) -> &PairIndex {
        &self.idx
    }

    fn path_from(&self, vs: &[usize]) -> BergePath {
        BergePath {
            vertices: vs.iter().map(|&v| v as VertexId).collect(),
            edges: vs
                .windows(2)
                .map(|w| self.edges[self.idx.edge_of(w[0], w[1]).expect("shadow pair")])
                .collect(),
        }
    }

    fn cycle_from(&self, vs: &[usize]) -> BergeCycle {
        let l = vs.len();
        BergeCycle {
            vertices: vs.iter().map(|&v| v as VertexId).collect(),
            edges: (0..l)
                .map(|i| self.edges[self.idx.edge_of(vs[i], vs[(i + 1) % l]).expect("shadow pair")])
                .collect(),
        }
    }

    /// Searches for a path of length `target` (or the longest one when no
    /// such path exists). Returns the best vertex sequence found.
    fn search_path(&self, target: usize) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        let mut st = PathState {
            idx: &self.idx,
            m: self.edges.len(),
            full: if self.n == 128 { u128::MAX } else { (1u128 << self.n) - 1 },
            used: UsedEdges::new(self.edges.len()),
            stack: Vec::with_capacity(self.n),
            best: Vec::new(),
            target,
            done: false,
        };
        for s in 0..self.n {
            st.stack.push(s);
            st.dfs(s, 1 << s, 0);
            st.stack.pop();
            if st.done {
                break;
            }
        }
        st.best
    }

    /// Longest Berge path; empty only when `n == 0`.
    pub fn longest_path(&self) -> BergePath {
        let cap = self.n.saturating_sub(1).min(self.edges.len());
        self.path_from(&self.search_path(cap))
    }

    /// A Berge path of length exactly `k`, if one exists.
    pub fn find_path(&self, k: usize) -> Option<BergePath> {
        if self.n == 0 || k > self.edges.len() || k >= self.n {
            return None;
        }
        let best = self.search_path(k);
        (best.len() > k).then(|| self.path_from(&best[..=k]))
    }

    pub fn has_path(&self, k: usize) -> bool {
        self.find_path(k).is_some()
    }

    fn cycle_state(&self, mode: CycleMode) -> CycleState<'_> {
        CycleState {
            idx: &self.idx,
            m: self.edges.len(),
            allowed: 0,
            start: 0,
            used: UsedEdges::new(self.edges.len()),
            stack: Vec::with_capacity(self.n),
            best_len: 0,
            best: Vec::new(),
            target: self.n.min(self.edges.len()),
            mode,
            found: Vec::new(),
            done: false,
        }
    }

    /// Vertices of shadow degree ≥ 2 (the only ones that can lie on a cycle).
    fn cycle_candidates(&self) -> u128 {
        let mut mask = 0u128;
        for v in 0..self.n {
            if self.idx.adj(v).count_ones() >= 2 {
                mask |= 1 << v;
            }
        }
        mask
    }

    fn run_cycles(&self, st: &mut CycleState<'_>) {
        let candidates = self.cycle_candidates();
        for s in bits(candidates) {
            let above = if s >= 127 { 0 } else { !((2u128 << s) - 1) };
            let allowed = candidates & above;
            let room = allowed.count_ones() as usize + 1;
            let threshold = match st.mode {
                CycleMode::Longest => st.best_len + 1,
                CycleMode::AllOfLength(l) => l,
            };
            if room < threshold.max(3) {
                break;
            }
            st.allowed = allowed;
            st.start = s;
            st.stack.push(s);
            st.dfs(s, 1 << s, 0);
            st.stack.pop();
            if st.done {
                break;
            }
        }
    }

    /// A longest Berge cycle, or `None` for Berge-acyclic hypergraphs.
    /// The witness starts at its smallest vertex with `v_2 < v_ℓ`.
    pub fn longest_cycle(&self) -> Option<BergeCycle> {
        let mut st = self.cycle_state(CycleMode::Longest);
        self.run_cycles(&mut st);
        (st.best_len > 0).then(|| self.cycle_from(&st.best))
    }

    /// Every Berge cycle of length `len`, once each (smallest vertex first, `v_2 < v_ℓ`),
    /// in lexicographic order.
    pub fn cycles_of_length(&self, len: usize) -> Vec<BergeCycle> {
        if len < 3 || len > self.n.min(self.edges.len()) {
            return Vec::new();
        }
        let mut st = self.cycle_state(CycleMode::AllOfLength(len));
        self.run_cycles(&mut st);
        st.found.iter().map(|c| self.cycle_from(c)).collect()
    }

    /// All longest Berge cycles (empty when acyclic).
    pub fn longest_cycles(&self) -> Vec<BergeCycle> {
        match self.longest_cycle() {
            Some(c) => self.cycles_of_length(c.len()),
            None => Vec::new(),
        }
    }
}

struct PathState<'s> {
    idx: &'s PairIndex,
    m: usize,
    full: u128,
    used: UsedEdges,
    stack: Vec<usize>,
    best: Vec<usize>,
    target: usize,
    done: bool,
}

impl PathState<'_> {
    fn dfs(&mut self, v: usize, visited: u128, len: usize) {
        if len + 1 > self.best.len() {
            self.best.clear();
            self.best.extend_from_slice(&self.stack);
            if len >= self.target {
                self.done = true;
                return;
            }
        }
        let free = self.full & !visited;
        let bound = len + (self.m - len).min(reach(self.idx, v, free));
        if bound + 1 <= self.best.len() {
            return;
        }
        for w in bits(self.idx.adj(v) & free) {
            let e = self.idx.edge_of(v, w).unwrap();
            if self.used.get(e) {
                continue;
            }
            self.used.toggle(e);
            self.stack.push(w);
            self.dfs(w, visited | 1 << w, len + 1);
            self.stack.pop();
            self.used.toggle(e);
            if self.done {
                return;
            }
        }
    }
}

#[derive(Clone, Copy)]
enum CycleMode {
    Longest,
    AllOfLength(usize),
}

struct CycleState<'s> {
    idx: &'s PairIndex,
    m: usize,
    allowed: u128,
    start: usize,
    used: UsedEdges,
    stack: Vec<usize>,
    best_len: usize,
    best: Vec<usize>,
    target: usize,
    mode: CycleMode,
    found: Vec<Vec<usize>>,
    done: bool,
}

impl CycleState<'_> {
    fn dfs(&mut self, v: usize, visited: u128, len: usize) {
        let s = self.start;
        if len >= 2 && self.idx.adj(v) >> s & 1 == 1 {
            let e = self.idx.edge_of(v, s).unwrap();
            if !self.used.get(e) {
                let l = len + 1;
                match self.mode {
                    CycleMode::Longest if l > self.best_len => {
                        self.best_len = l;
                        self.best.clear();
                        self.best.extend_from_slice(&self.stack);
                        if l >= self.target {
                            self.done = true;
                            return;
                        }
                    }
                    CycleMode::AllOfLength(want) if l == want && self.stack[1] < v => {
                        self.found.push(self.stack.clone());
                    }
                    _ => {}
                }
            }
        }
        let free = self.allowed & !visited;
        let bound = (len + 1 + reach(self.idx, v, free)).min(self.m);
        match self.mode {
            CycleMode::Longest if bound <= self.best_len => return,
            CycleMode::AllOfLength(want) if bound < want || len + 1 >= want => return,
            _ => {}
        }
        for w in bits(self.idx.adj(v) & free) {
            let e = self.idx.edge_of(v, w).unwrap();
            if self.used.get(e) {
                continue;
            }
            self.used.toggle(e);
            self.stack.push(w);
            self.dfs(w, visited | 1 << w, len + 1);
            self.stack.pop();
            self.used.toggle(e);
            if self.done {
                return;
            }
        }
    }
}

/// Longest Berge path of `h` (length 0 with an empty witness when `n == 0`).
pub fn longest_berge_path(h: &LinearHypergraph) -> Result<BergePath, SolveError> {
    Ok(Solver::new(h)?.longest_path())
}

pub fn has_berge_path(h: &LinearHypergraph, k: usize) -> Result<bool, SolveError> {
    Ok(Solver::new(h)?.has_path(k))
}

/// Circumference with witness; `None` when `h` has no Berge cycle.
pub fn longest_berge_cycle(h: &LinearHypergraph) -> Result<Option<BergeCycle>, SolveError> {
    Ok(Solver::new(h)?.longest_cycle())
}
