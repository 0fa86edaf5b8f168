//! Linear {2,3}-uniform hypergraphs, their two-shadow and basic operations.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense 0-based vertex index.
pub type VertexId = u32;

/// A hyperedge of size 2 or 3, stored as a strictly increasing vertex list.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hyperedge {
    verts: [VertexId; 3],
    len: u8,
}

impl Hyperedge {
    /// A 2-edge `{a, b}`. Panics if `a == b`.
    pub fn pair(a: VertexId, b: VertexId) -> Self {
        assert_ne!(a, b, "hyperedge vertices must be distinct");
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        Hyperedge { verts: [a, b, 0], len: 2 }
    }

    /// A 3-edge `{a, b, c}`. Panics on repeated vertices.
    pub fn triple(a: VertexId, b: VertexId, c: VertexId) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        assert!(v[0] < v[1] && v[1] < v[2], "hyperedge vertices must be distinct");
        Hyperedge { verts: v, len: 3 }
    }

    /// Builds from an arbitrary vertex list, enforcing size and distinctness.
    pub fn from_slice(vertices: &[VertexId]) -> Result<Self, HypergraphError> {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(HypergraphError::RepeatedVertex { edge: vertices.to_vec() });
        }
        match v.len() {
            2 => Ok(Hyperedge::pair(v[0], v[1])),
            3 => Ok(Hyperedge::triple(v[0], v[1], v[2])),
            size => Err(HypergraphError::EdgeSize { edge: vertices.to_vec(), size }),
        }
    }

    #[inline]
    pub fn vertices(&self) -> &[VertexId] {
        &self.verts[..self.len as usize]
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_triple(&self) -> bool {
        self.len == 3
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices().contains(&v)
    }

    /// The 2-subsets of this edge, each as `(low, high)`.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let v = self.vertices();
        (0..v.len()).flat_map(move |i| (i + 1..v.len()).map(move |j| (v[i], v[j])))
    }

    /// Vertex in a triple other than `a` and `b`.
    pub fn third(&self, a: VertexId, b: VertexId) -> Option<VertexId> {
        if !self.is_triple() {
            return None;
        }
        self.vertices().iter().copied().find(|&x| x != a && x != b)
    }

    /// Number of vertices shared with `other`.
    pub fn intersection_size(&self, other: &Hyperedge) -> usize {
        self.vertices().iter().filter(|v| other.contains(**v)).count()
    }

    pub(crate) fn map_vertices(&self, f: impl Fn(VertexId) -> VertexId) -> Hyperedge {
        let v = self.vertices();
        if self.len == 2 {
            Hyperedge::pair(f(v[0]), f(v[1]))
        } else {
            Hyperedge::triple(f(v[0]), f(v[1]), f(v[2]))
        }
    }
}

impl Ord for Hyperedge {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices().cmp(other.vertices())
    }
}

impl PartialOrd for Hyperedge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Hyperedge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.vertices().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hyperedge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<VertexId>::deserialize(d)?;
        Hyperedge::from_slice(&v).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("hyperedge {edge:?} has size {size}, expected 2 or 3")]
    EdgeSize { edge: Vec<VertexId>, size: usize },
    #[error("hyperedge {edge:?} repeats a vertex")]
    RepeatedVertex { edge: Vec<VertexId> },
    #[error("hyperedge {edge} appears more than once")]
    DuplicateEdge { edge: Hyperedge },
    #[error("hyperedges {first} and {second} share two vertices")]
    LinearityViolation { first: Hyperedge, second: Hyperedge },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
}

impl HypergraphError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            HypergraphError::EdgeSize { .. } => "E_EDGE_SIZE",
            HypergraphError::RepeatedVertex { .. } => "E_REPEATED_VERTEX",
            HypergraphError::DuplicateEdge { .. } => "E_DUPLICATE_EDGE",
            HypergraphError::LinearityViolation { .. } => "E_LINEARITY",
            HypergraphError::VertexOutOfRange { .. } => "E_VERTEX_RANGE",
        }
    }
}

/// A validated linear {2,3}-uniform hypergraph.
///
/// Edges are kept sorted and distinct; no two edges share two vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearHypergraph {
    n: usize,
    edges: Vec<Hyperedge>,
}

impl fmt::Debug for LinearHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearHypergraph(n={}, {:?})", self.n, self.edges)
    }
}

impl LinearHypergraph {
    /// Validates raw vertex sets, reporting the first violated invariant in input order.
    pub fn new<E: AsRef<[VertexId]>>(n: usize, raw_edges: &[E]) -> Result<Self, HypergraphError> {
        let mut cover: HashMap<(VertexId, VertexId), Hyperedge> = HashMap::new();
        let mut edges = Vec::with_capacity(raw_edges.len());
        for raw in raw_edges {
            let raw = raw.as_ref();
            if !(2..=3).contains(&raw.len()) {
                return Err(HypergraphError::EdgeSize { edge: raw.to_vec(), size: raw.len() });
            }
            if let Some(&vertex) = raw.iter().find(|&&v| v as usize >= n) {
                return Err(HypergraphError::VertexOutOfRange { vertex, n });
            }
            let edge = Hyperedge::from_slice(raw)?;
            for p in edge.pairs() {
                if let Some(&prev) = cover.get(&p) {
                    return Err(if prev == edge {
                        HypergraphError::DuplicateEdge { edge }
                    } else {
                        HypergraphError::LinearityViolation { first: prev, second: edge }
                    });
                }
            }
            for p in edge.pairs() {
                cover.insert(p, edge);
            }
            edges.push(edge);
        }
        edges.sort_unstable();
        Ok(LinearHypergraph { n, edges })
    }

    /// Validates already-typed hyperedges.
    pub fn from_edges(n: usize, edges: &[Hyperedge]) -> Result<Self, HypergraphError> {
        let raw: Vec<&[VertexId]> = edges.iter().map(|e| e.vertices()).collect();
        Self::new(n, &raw)
    }

    /// Skips validation; callers must guarantee sorted, distinct, linear, in-range edges.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Hyperedge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        LinearHypergraph { n, edges }
    }

    pub fn empty(n: usize) -> Self {
        LinearHypergraph { n, edges: Vec::new() }
    }

    /// Number of vertices, v(H).
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of hyperedges, e(H).
    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn contains_edge(&self, e: &Hyperedge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn count_pairs(&self) -> usize {
        self.edges.iter().filter(|e| !e.is_triple()).count()
    }

    pub fn count_triples(&self) -> usize {
        self.edges.iter().filter(|e| e.is_triple()).count()
    }

    pub fn is_three_uniform(&self) -> bool {
        self.edges.iter().all(Hyperedge::is_triple)
    }

    /// e(∂H), computed as m₂ + 3·m₃ (exact because of linearity).
    pub fn shadow_edge_count(&self) -> usize {
        self.count_pairs() + 3 * self.count_triples()
    }

    pub fn shadow(&self) -> ShadowGraph {
        let mut cover = BTreeMap::new();
        for e in &self.edges {
            for p in e.pairs() {
                cover.insert(p, *e);
            }
        }
        ShadowGraph { n: self.n, cover }
    }

    /// d_H(v).
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// d_∂H(v).
    pub fn shadow_degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).map(|e| e.len() - 1).sum()
    }

    pub fn min_shadow_degree(&self) -> Option<usize> {
        (0..self.n as VertexId).map(|v| self.shadow_degree(v)).min()
    }

    pub fn max_shadow_degree(&self) -> Option<usize> {
        (0..self.n as VertexId).map(|v| self.shadow_degree(v)).max()
    }

    /// H_V: keeps `h ∩ V` for every edge meeting `V` in at least two vertices,
    /// relabeling `V` in ascending order. Returns the old→new vertex map.
    ///
    /// Out-of-range entries of `keep` are ignored.
    pub fn restrict(&self, keep: &[VertexId]) -> (LinearHypergraph, Vec<Option<VertexId>>) {
        let mut mapping = vec![None; self.n];
        let mut sorted: Vec<VertexId> =
            keep.iter().copied().filter(|&v| (v as usize) < self.n).collect();
        sorted.sort_unstable();
        sorted.dedup();
        for (new, &old) in sorted.iter().enumerate() {
            mapping[old as usize] = Some(new as VertexId);
        }
        let mut edges: Vec<Hyperedge> = self
            .edges
            .iter()
            .filter_map(|e| {
                let kept: Vec<VertexId> =
                    e.vertices().iter().filter_map(|&v| mapping[v as usize]).collect();
                (kept.len() >= 2).then(|| Hyperedge::from_slice(&kept).expect("distinct vertices"))
            })
            .collect();
        edges.sort_unstable();
        (LinearHypergraph::from_sorted_unchecked(sorted.len(), edges), mapping)
    }

    /// H_{V(H) ∖ removed}.
    pub fn remove_vertices(&self, removed: &[VertexId]) -> (LinearHypergraph, Vec<Option<VertexId>>) {
        let keep: Vec<VertexId> =
            (0..self.n as VertexId).filter(|v| !removed.contains(v)).collect();
        self.restrict(&keep)
    }

    /// Connected components of ∂H, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let v = e.vertices();
            let root = find(&mut parent, v[0] as usize);
            for &w in &v[1..] {
                let r = find(&mut parent, w as usize);
                if r != root {
                    parent[r] = root;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for v in 0..self.n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v as VertexId);
        }
        let mut comps: Vec<Vec<VertexId>> = groups.into_values().collect();
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// Vertex counts add; `other` is shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &LinearHypergraph) -> LinearHypergraph {
        let shift = self.n as VertexId;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| e.map_vertices(|v| v + shift)));
        edges.sort_unstable();
        LinearHypergraph::from_sorted_unchecked(self.n + other.n, edges)
    }

    /// Applies a vertex permutation (`perm[old] = new`).
    pub fn relabel(&self, perm: &[VertexId]) -> LinearHypergraph {
        assert_eq!(perm.len(), self.n);
        let mut edges: Vec<Hyperedge> =
            self.edges.iter().map(|e| e.map_vertices(|v| perm[v as usize])).collect();
        edges.sort_unstable();
        LinearHypergraph::from_sorted_unchecked(self.n, edges)
    }

    /// Adds one edge, re-validating linearity.
    pub fn with_edge(&self, edge: Hyperedge) -> Result<LinearHypergraph, HypergraphError> {
        let mut edges = self.edges.clone();
        edges.push(edge);
        LinearHypergraph::from_edges(self.n, &edges)
    }
}

/// The two-shadow ∂H with each pair mapped to its unique covering hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowGraph {
    n: usize,
    cover: BTreeMap<(VertexId, VertexId), Hyperedge>,
}

impl ShadowGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// e(∂H).
    pub fn len(&self) -> usize {
        self.cover.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cover.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.cover.keys().copied()
    }

    pub fn contains(&self, u: VertexId, v: VertexId) -> bool {
        self.cover(u, v).is_some()
    }

    pub fn cover(&self, u: VertexId, v: VertexId) -> Option<Hyperedge> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.cover.get(&key).copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.cover.keys().filter(|(a, b)| *a == v || *b == v).count()
    }
}

/// Dense pair → edge-index table plus shadow adjacency bitmasks, for hypergraphs
/// with at most [`PairIndex::MAX_VERTICES`] vertices.
#[derive(Debug, Clone)]
pub(crate) struct PairIndex {
    n: usize,
    adj: Vec<u128>,
    pair_edge: Vec<u32>,
}

impl PairIndex {
    pub const MAX_VERTICES: usize = 128;
    const NONE: u32 = u32::MAX;

    pub fn new(n: usize, edges: &[Hyperedge]) -> Self {
        assert!(n <= Self::MAX_VERTICES);
        let mut adj = vec![0u128; n];
        let mut pair_edge = vec![Self::NONE; n * n];
        for (i, e) in edges.iter().enumerate() {
            for (a, b) in e.pairs() {
                let (a, b) = (a as usize, b as usize);
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
                pair_edge[a * n + b] = i as u32;
                pair_edge[b * n + a] = i as u32;
            }
        }
        PairIndex { n, adj, pair_edge }
    }

    #[inline]
    pub fn adj(&self, v: usize) -> u128 {
        self.adj[v]
    }

    /// Index of the edge covering `{a, b}`, if any.
    #[inline]
    pub fn edge_of(&self, a: usize, b: usize) -> Option<usize> {
        let e = self.pair_edge[a * self.n + b];
        (e != Self::NONE).then_some(e as usize)
    }
}
