//! Peripheral sets around a longest Berge cycle and executable checks of the
//! splice lemmas that follow from its maximality.
//!
//! For a cycle `v_1, h_1, …, v_ℓ, h_ℓ` and an off-cycle vertex `u`:
//! * `S(u)`: cycle vertices joined to `u` by a hyperedge that is not one of the `h_i`;
//! * `L(u)`: the `v_i` with `h_i = {v_i, v_{i+1}, u}`;
//! * `R(u) = L(u)⁺`.
//!
//! Positions are 0-based internally (`v_1` is position 0).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Hyperedge, LinearHypergraph, PairIndex, VertexId};
use crate::solver::{is_valid_berge_cycle, BergeCycle, SolveError, Solver};

/// A subset of cycle positions `{0, …, ℓ−1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycleSet {
    bits: u128,
    len: usize,
}

impl std::fmt::Debug for CycleSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.positions()).finish()
    }
}

impl CycleSet {
    pub fn empty(len: usize) -> Self {
        assert!(len <= 128);
        CycleSet { bits: 0, len }
    }

    pub fn from_positions(len: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(len);
        for p in positions {
            s.insert(p);
        }
        s
    }

    fn mask(len: usize) -> u128 {
        if len == 128 { u128::MAX } else { (1u128 << len) - 1 }
    }

    pub fn cycle_len(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, p: usize) {
        assert!(p < self.len, "position {p} outside cycle of length {}", self.len);
        self.bits |= 1 << p;
    }

    pub fn contains(&self, p: usize) -> bool {
        p < self.len && self.bits >> p & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&p| self.contains(p))
    }

    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn union(&self, other: &CycleSet) -> CycleSet {
        debug_assert_eq!(self.len, other.len);
        CycleSet { bits: self.bits | other.bits, len: self.len }
    }

    pub fn intersection(&self, other: &CycleSet) -> CycleSet {
        debug_assert_eq!(self.len, other.len);
        CycleSet { bits: self.bits & other.bits, len: self.len }
    }

    /// Moves every position `p` to `p + offset (mod ℓ)`: `+1` is `S⁺`, `−1` is `S⁻`.
    pub fn shift(&self, offset: i64) -> CycleSet {
        if self.len == 0 {
            return *self;
        }
        let o = offset.rem_euclid(self.len as i64) as u32;
        if o == 0 {
            return *self;
        }
        let l = self.len as u32;
        let bits = ((self.bits << o) | (self.bits >> (l - o))) & Self::mask(self.len);
        CycleSet { bits, len: self.len }
    }
}

/// `shift(S, offset, ℓ)` with `S` given as 0-based positions.
pub fn shift(positions: &[usize], offset: i64, len: usize) -> Vec<usize> {
    CycleSet::from_positions(len, positions.iter().copied()).shift(offset).positions().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("vertex {0} is a defining vertex of the cycle")]
    VertexOnCycle(VertexId),
    #[error("hyperedge {0} meets a defining vertex of the cycle")]
    TripleTouchesCycle(Hyperedge),
    #[error("hyperedges {0} and {1} must share exactly one vertex")]
    BadSharingPattern(Hyperedge, Hyperedge),
    #[error("hyperedge {0} is not a triple of the hypergraph")]
    NotATriple(Hyperedge),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(VertexId),
    #[error("the given sequence is not a Berge cycle of the hypergraph")]
    InvalidCycle,
    #[error(transparent)]
    Solve(#[from] SolveError),
}

impl ClaimError {
    pub fn code(&self) -> &'static str {
        match self {
            ClaimError::VertexOnCycle(_) => "E_VERTEX_ON_CYCLE",
            ClaimError::TripleTouchesCycle(_) => "E_TRIPLE_TOUCHES_CYCLE",
            ClaimError::BadSharingPattern(..) => "E_BAD_SHARING_PATTERN",
            ClaimError::NotATriple(_) => "E_NOT_A_TRIPLE",
            ClaimError::VertexOutOfRange(_) => "E_VERTEX_RANGE",
            ClaimError::InvalidCycle => "E_INVALID_CYCLE",
            ClaimError::Solve(e) => e.code(),
        }
    }
}

/// A Berge cycle together with lookup tables for its defining structure.
#[derive(Debug, Clone)]
pub struct CycleContext {
    cycle: BergeCycle,
    n: usize,
    edges: Vec<Hyperedge>,
    idx: PairIndex,
    position: Vec<Option<usize>>,
    third: Vec<Option<VertexId>>,
    defining: Vec<bool>,
    certified_longest: bool,
}

impl CycleContext {
    fn build(n: usize, edges: &[Hyperedge], idx: PairIndex, cycle: BergeCycle, certified_longest: bool) -> Self {
        let l = cycle.len();
        let mut position = vec![None; n];
        for (i, &v) in cycle.vertices.iter().enumerate() {
            position[v as usize] = Some(i);
        }
        let third = (0..l)
            .map(|i| cycle.edges[i].third(cycle.vertices[i], cycle.vertices[(i + 1) % l]))
            .collect();
        let mut defining = vec![false; edges.len()];
        for e in &cycle.edges {
            let i = edges.binary_search(e).expect("defining hyperedge belongs to the hypergraph");
            defining[i] = true;
        }
        CycleContext { cycle, n, edges: edges.to_vec(), idx, position, third, defining, certified_longest }
    }

    /// Uses the solver's first-found longest cycle; `None` if `h` is Berge-acyclic.
    pub fn longest(h: &LinearHypergraph) -> Result<Option<Self>, SolveError> {
        let solver = Solver::new(h)?;
        Ok(solver.longest_cycle().map(|c| Self::build(h.n(), h.edges(), solver.index().clone(), c, true)))
    }

    /// One context per longest cycle of `h`.
    pub fn all_longest(h: &LinearHypergraph) -> Result<Vec<Self>, SolveError> {
        let solver = Solver::new(h)?;
        Ok(solver
            .longest_cycles()
            .into_iter()
            .map(|c| Self::build(h.n(), h.edges(), solver.index().clone(), c, true))
            .collect())
    }

    pub(crate) fn from_solver(n: usize, edges: &[Hyperedge], solver: &Solver<'_>, cycle: BergeCycle) -> Self {
        Self::build(n, edges, solver.index().clone(), cycle, true)
    }

    /// Wraps an arbitrary valid cycle without checking that it is longest.
    /// The claim checks are only meaningful for longest cycles; this exists for
    /// negative controls.
    pub fn from_cycle(h: &LinearHypergraph, cycle: BergeCycle) -> Result<Self, ClaimError> {
        if h.n() > PairIndex::MAX_VERTICES {
            return Err(SolveError::TooManyVertices { n: h.n(), max: PairIndex::MAX_VERTICES }.into());
        }
        if !is_valid_berge_cycle(h, &cycle) {
            return Err(ClaimError::InvalidCycle);
        }
        Ok(Self::build(h.n(), h.edges(), PairIndex::new(h.n(), h.edges()), cycle, false))
    }

    pub fn cycle(&self) -> &BergeCycle {
        &self.cycle
    }

    /// ℓ.
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn is_certified_longest(&self) -> bool {
        self.certified_longest
    }

    pub fn defining_vertices(&self) -> &[VertexId] {
        &self.cycle.vertices
    }

    pub fn defining_hyperedges(&self) -> &[Hyperedge] {
        &self.cycle.edges
    }

    /// `x_i` for a size-3 `h_i` (0-based `i`).
    pub fn third_vertex(&self, i: usize) -> Option<VertexId> {
        self.third[i]
    }

    pub fn position_of(&self, v: VertexId) -> Option<usize> {
        self.position.get(v as usize).copied().flatten()
    }

    pub fn is_on_cycle(&self, v: VertexId) -> bool {
        self.position_of(v).is_some()
    }

    /// Vertices off the cycle, ascending.
    pub fn off_cycle_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n as VertexId).filter(|&v| !self.is_on_cycle(v))
    }

    /// Triples of `H` disjoint from every defining vertex (the size-3 edges of `H'`).
    pub fn off_cycle_triples(&self) -> impl Iterator<Item = Hyperedge> + '_ {
        self.edges
            .iter()
            .copied()
            .filter(|e| e.is_triple() && !e.vertices().iter().any(|&v| self.is_on_cycle(v)))
    }

    pub fn vertex_at(&self, p: usize) -> VertexId {
        self.cycle.vertices[p % self.len()]
    }

    fn edge_between(&self, a: VertexId, b: VertexId) -> Option<Hyperedge> {
        self.idx.edge_of(a as usize, b as usize).map(|e| self.edges[e])
    }

    pub fn peripheral_sets(&self, u: VertexId) -> Result<PeripheralSets, ClaimError> {
        if u as usize >= self.n {
            return Err(ClaimError::VertexOutOfRange(u));
        }
        if self.is_on_cycle(u) {
            return Err(ClaimError::VertexOnCycle(u));
        }
        let l = self.len();
        let mut s = CycleSet::empty(l);
        let mut left = CycleSet::empty(l);
        for (i, &v) in self.cycle.vertices.iter().enumerate() {
            if let Some(e) = self.idx.edge_of(u as usize, v as usize) {
                if !self.defining[e] {
                    s.insert(i);
                }
            }
            if self.third[i] == Some(u) {
                left.insert(i);
            }
        }
        Ok(PeripheralSets { u, s, l: left, r: left.shift(1) })
    }

    /// Claim `(S(u) ∪ L(u)) ∩ S(u)⁻ = ∅`.
    pub fn check_claim_plus(&self, u: VertexId) -> Result<Option<Violation>, ClaimError> {
        let p = self.peripheral_sets(u)?;
        let hit = p.s_or_l().intersection(&p.s.shift(-1));
        Ok(hit.first().map(|g| self.violation(ClaimKind::Plus, "(S(u)∪L(u)) ∩ S(u)⁻", &[u], g, &[(u, 0), (u, 1)], &[])))
    }

    fn triple_in_h_prime(&self, t: &Hyperedge) -> Result<(), ClaimError> {
        if !t.is_triple() || self.edges.binary_search(t).is_err() {
            return Err(ClaimError::NotATriple(*t));
        }
        if t.vertices().iter().any(|&v| self.is_on_cycle(v)) {
            return Err(ClaimError::TripleTouchesCycle(*t));
        }
        Ok(())
    }

    /// For every ordered pair `u_i ≠ u_j` of the triple:
    /// `(S∪L)(u_i) ∩ ((S∪L)(u_j))⁻ = ∅` and `(S∪L)(u_i) ∩ S(u_j)⁻⁻ = ∅`.
    pub fn check_claim_plus_plus(&self, triple: &Hyperedge) -> Result<Option<Violation>, ClaimError> {
        self.triple_in_h_prime(triple)?;
        let vs = triple.vertices();
        let sets: Vec<PeripheralSets> = vs.iter().map(|&u| self.peripheral_sets(u)).collect::<Result<_, _>>()?;
        for a in 0..3 {
            for b in 0..3 {
                if a == b {
                    continue;
                }
                let (pi, pj) = (&sets[a], &sets[b]);
                let (ui, uj) = (vs[a], vs[b]);
                let hit = pi.s_or_l().intersection(&pj.s_or_l().shift(-1));
                if let Some(g) = hit.first() {
                    let cond = "(S(u_i)∪L(u_i)) ∩ (S(u_j)∪L(u_j))⁻";
                    return Ok(Some(self.violation(ClaimKind::PlusPlus, cond, &[ui, uj], g, &[(ui, 0), (uj, 1)], &[*triple])));
                }
                let hit = pi.s_or_l().intersection(&pj.s.shift(-2));
                if let Some(g) = hit.first() {
                    let cond = "(S(u_i)∪L(u_i)) ∩ S(u_j)⁻⁻";
                    return Ok(Some(self.violation(ClaimKind::PlusPlus, cond, &[ui, uj], g, &[(ui, 0), (uj, 2)], &[*triple])));
                }
            }
        }
        Ok(None)
    }

    /// For `e1 = {u_1,u_2,u_3}`, `e2 = {u_1,u_4,u_5}`, `i ∈ {2,3}`, `j ∈ {4,5}`:
    /// `(S∪L)(u_i)` misses `((S∪L)(u_j))⁻`, `((S∪L)(u_j))⁻⁻` and `S(u_j)⁻⁻⁻`.
    pub fn check_claim_triple(&self, e1: &Hyperedge, e2: &Hyperedge) -> Result<Option<Violation>, ClaimError> {
        if !e1.is_triple() || !e2.is_triple() || e1.intersection_size(e2) != 1 {
            return Err(ClaimError::BadSharingPattern(*e1, *e2));
        }
        self.triple_in_h_prime(e1)?;
        self.triple_in_h_prime(e2)?;
        let shared = *e1.vertices().iter().find(|&&v| e2.contains(v)).unwrap();
        let left: Vec<VertexId> = e1.vertices().iter().copied().filter(|&v| v != shared).collect();
        let right: Vec<VertexId> = e2.vertices().iter().copied().filter(|&v| v != shared).collect();
        for &ui in &left {
            let pi = self.peripheral_sets(ui)?;
            for &uj in &right {
                let pj = self.peripheral_sets(uj)?;
                let tests: [(&str, CycleSet, i64); 3] = [
                    ("(S(u_i)∪L(u_i)) ∩ (S(u_j)∪L(u_j))⁻", pj.s_or_l(), 1),
                    ("(S(u_i)∪L(u_i)) ∩ (S(u_j)∪L(u_j))⁻⁻", pj.s_or_l(), 2),
                    ("(S(u_i)∪L(u_i)) ∩ S(u_j)⁻⁻⁻", pj.s, 3),
                ];
                for (cond, set, d) in tests {
                    if let Some(g) = pi.s_or_l().intersection(&set.shift(-d)).first() {
                        return Ok(Some(self.violation(
                            ClaimKind::Triple,
                            cond,
                            &[ui, uj],
                            g,
                            &[(ui, 0), (uj, d as usize)],
                            &[*e1, *e2],
                        )));
                    }
                }
            }
        }
        Ok(None)
    }

    fn violation(
        &self,
        claim: ClaimKind,
        condition: &str,
        vertices: &[VertexId],
        position: usize,
        incidences: &[(VertexId, usize)],
        extra: &[Hyperedge],
    ) -> Violation {
        let mut hyperedges = Vec::new();
        for &(u, d) in incidences {
            if let Some(e) = self.edge_between(u, self.vertex_at(position + d)) {
                hyperedges.push(e);
            }
        }
        hyperedges.extend_from_slice(extra);
        Violation {
            claim,
            condition: condition.to_string(),
            vertices: vertices.to_vec(),
            cycle_vertex: self.vertex_at(position),
            cycle_position: position,
            hyperedges,
            cycle_length: self.len(),
        }
    }

    /// Runs every check on every eligible vertex, triple and sharing pair.
    pub fn check_all(&self) -> ClaimSummary {
        let l = self.len();
        let mut summary = ClaimSummary { cycle_length: l, ..Default::default() };
        let off: Vec<VertexId> = self.off_cycle_vertices().collect();
        for &u in &off {
            summary.checked_vertices += 1;
            let p = self.peripheral_sets(u).expect("off-cycle vertex");
            if p.s.count() > l / 2 {
                summary.violations.push(Violation {
                    claim: ClaimKind::SBound,
                    condition: "|S(u)| ≤ ⌊ℓ/2⌋".into(),
                    vertices: vec![u],
                    cycle_vertex: self.vertex_at(p.s.first().unwrap()),
                    cycle_position: p.s.first().unwrap(),
                    hyperedges: p.s.positions().filter_map(|i| self.edge_between(u, self.vertex_at(i))).collect(),
                    cycle_length: l,
                });
            }
            if let Some(v) = self.check_claim_plus(u).expect("off-cycle vertex") {
                summary.violations.push(v);
            }
        }
        let triples: Vec<Hyperedge> = self.off_cycle_triples().collect();
        for t in &triples {
            summary.checked_triples += 1;
            if let Some(v) = self.check_claim_plus_plus(t).expect("eligible triple") {
                summary.violations.push(v);
            }
        }
        for e1 in &triples {
            for e2 in &triples {
                if e1 != e2 && e1.intersection_size(e2) == 1 {
                    summary.checked_pairs += 1;
                    if let Some(v) = self.check_claim_triple(e1, e2).expect("eligible pair") {
                        summary.violations.push(v);
                    }
                }
            }
        }
        summary
    }
}

/// `S(u)`, `L(u)`, `R(u)` for one off-cycle vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeripheralSets {
    pub u: VertexId,
    pub s: CycleSet,
    pub l: CycleSet,
    pub r: CycleSet,
}

impl PeripheralSets {
    pub fn s_or_l(&self) -> CycleSet {
        self.s.union(&self.l)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    /// `(S(u) ∪ L(u)) ∩ S(u)⁻ = ∅`
    Plus,
    /// the single-triple strengthening
    PlusPlus,
    /// the two-triples-sharing-a-vertex strengthening
    Triple,
    /// `|S(u)| ≤ ⌊ℓ/2⌋`
    SBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Violation {
    pub claim: ClaimKind,
    pub condition: String,
    /// The off-cycle vertices involved (`u`, or `u_i, u_j`).
    pub vertices: Vec<VertexId>,
    /// The offending `v_γ`.
    pub cycle_vertex: VertexId,
    pub cycle_position: usize,
    pub hyperedges: Vec<Hyperedge>,
    pub cycle_length: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimSummary {
    pub cycle_length: usize,
    pub checked_vertices: u64,
    pub checked_triples: u64,
    pub checked_pairs: u64,
    pub violations: Vec<Violation>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fano;
    use crate::solver::longest_berge_cycle;

    fn hg(n: usize, edges: &[&[u32]]) -> LinearHypergraph {
        LinearHypergraph::new(n, edges).unwrap()
    }

    #[test]
    fn shift_basics() {
        assert_eq!(shift(&[], 3, 5), Vec::<usize>::new());
        assert_eq!(shift(&[0], 1, 5), vec![1]);
        assert_eq!(shift(&[0], -1, 5), vec![4]);
        assert_eq!(shift(&[3, 4], 2, 5), vec![0, 1]);
        let s = CycleSet::from_positions(7, [0, 2, 6]);
        assert_eq!(s.shift(1).shift(-1), s);
        assert_eq!(s.shift(0), s);
        assert_eq!(s.shift(7), s);
        assert_eq!(s.shift(-3).count(), 3);
    }

    #[test]
    fn isolated_vertex_has_empty_sets() {
        let h = hg(4, &[&[0, 1], &[1, 2], &[0, 2]]);
        let ctx = CycleContext::longest(&h).unwrap().unwrap();
        let p = ctx.peripheral_sets(3).unwrap();
        assert!(p.s.is_empty() && p.l.is_empty() && p.r.is_empty());
        assert_eq!(ctx.check_claim_plus(3).unwrap(), None);
        assert_eq!(ctx.peripheral_sets(0), Err(ClaimError::VertexOnCycle(0)));
    }

    #[test]
    fn third_vertex_gives_l_and_r() {
        // cycle 0-1-2 with h_1 = {0,1,3}
        let h = hg(4, &[&[0, 1, 3], &[1, 2], &[0, 2]]);
        let ctx = CycleContext::longest(&h).unwrap().unwrap();
        assert_eq!(ctx.defining_vertices(), &[0, 1, 2]);
        assert_eq!(ctx.third_vertex(0), Some(3));
        let p = ctx.peripheral_sets(3).unwrap();
        assert_eq!(p.l.positions().collect::<Vec<_>>(), vec![0]);
        assert_eq!(p.r.positions().collect::<Vec<_>>(), vec![1]);
        assert!(p.s.is_empty());
    }

    #[test]
    fn pendant_pair_lands_in_s() {
        let h = hg(4, &[&[0, 1], &[1, 2], &[0, 2], &[0, 3]]);
        // vertex 3 has shadow degree 1, so no cycle through it: the triangle is longest
        assert_eq!(longest_berge_cycle(&h).unwrap().unwrap().len(), 3);
        let ctx = CycleContext::longest(&h).unwrap().unwrap();
        let p = ctx.peripheral_sets(3).unwrap();
        assert_eq!(p.s.positions().map(|i| ctx.vertex_at(i)).collect::<Vec<_>>(), vec![0]);
        assert!(p.l.is_empty() && p.r.is_empty());
        assert_eq!(ctx.check_all().violations, vec![]);
    }

    #[test]
    fn fano_has_no_off_cycle_vertex() {
        let f = fano();
        let ctx = CycleContext::longest(&f).unwrap().unwrap();
        assert_eq!(ctx.len(), 7);
        let s = ctx.check_all();
        assert_eq!((s.checked_vertices, s.violations.len()), (0, 0));
    }

    #[test]
    fn non_maximum_cycle_produces_violations() {
        // triangle 0-1-2 plus vertex 3 adjacent to 0 and 1: the 4-cycle 0-3-1-2 is longer
        let h = hg(4, &[&[0, 1], &[1, 2], &[0, 2], &[0, 3], &[1, 3]]);
        let tri = BergeCycle {
            vertices: vec![0, 1, 2],
            edges: vec![Hyperedge::pair(0, 1), Hyperedge::pair(1, 2), Hyperedge::pair(0, 2)],
        };
        let ctx = CycleContext::from_cycle(&h, tri).unwrap();
        assert!(!ctx.is_certified_longest());
        let v = ctx.check_claim_plus(3).unwrap().unwrap();
        assert_eq!(v.claim, ClaimKind::Plus);
        assert_eq!(v.cycle_vertex, 0);
        assert_eq!(v.hyperedges, vec![Hyperedge::pair(0, 3), Hyperedge::pair(1, 3)]);
        // the certified longest cycle is clean
        let best = CycleContext::longest(&h).unwrap().unwrap();
        assert_eq!(best.len(), 4);
        assert!(best.check_all().violations.is_empty());
    }

    #[test]
    fn non_maximum_cycle_violates_the_triple_claim() {
        // triangle 0-1-2; triple {3,4,5}; 0~3 and 1~4 by 2-edges: 0,3,T,4,1,2 is a 5-cycle
        let h = hg(6, &[&[0, 1], &[1, 2], &[0, 2], &[3, 4, 5], &[0, 3], &[1, 4]]);
        let tri = BergeCycle {
            vertices: vec![0, 1, 2],
            edges: vec![Hyperedge::pair(0, 1), Hyperedge::pair(1, 2), Hyperedge::pair(0, 2)],
        };
        let ctx = CycleContext::from_cycle(&h, tri).unwrap();
        let v = ctx.check_claim_plus_plus(&Hyperedge::triple(3, 4, 5)).unwrap().unwrap();
        assert_eq!(v.claim, ClaimKind::PlusPlus);
        assert_eq!(v.vertices, vec![3, 4]);
        let best = CycleContext::longest(&h).unwrap().unwrap();
        assert_eq!(best.len(), 5);
    }

    #[test]
    fn triple_checks_reject_bad_inputs() {
        let h = hg(9, &[&[0, 1], &[1, 2], &[0, 2], &[3, 4, 5], &[3, 6, 7], &[0, 5, 8]]);
        let ctx = CycleContext::longest(&h).unwrap().unwrap();
        let t1 = Hyperedge::triple(3, 4, 5);
        let t2 = Hyperedge::triple(3, 6, 7);
        assert_eq!(ctx.check_claim_plus_plus(&t1).unwrap(), None);
        assert_eq!(ctx.check_claim_triple(&t1, &t2).unwrap(), None);
        assert_eq!(ctx.check_claim_triple(&t1, &t1), Err(ClaimError::BadSharingPattern(t1, t1)));
        assert_eq!(
            ctx.check_claim_plus_plus(&Hyperedge::triple(0, 5, 8)),
            Err(ClaimError::TripleTouchesCycle(Hyperedge::triple(0, 5, 8)))
        );
        assert_eq!(
            ctx.check_claim_plus_plus(&Hyperedge::triple(4, 6, 8)),
            Err(ClaimError::NotATriple(Hyperedge::triple(4, 6, 8)))
        );
    }

    #[test]
    fn disjoint_triangles() {
        let h = hg(6, &[&[0, 1], &[1, 2], &[0, 2], &[3, 4, 5]]);
        let ctx = CycleContext::longest(&h).unwrap().unwrap();
        assert_eq!(ctx.check_claim_plus_plus(&Hyperedge::triple(3, 4, 5)).unwrap(), None);
    }
}
