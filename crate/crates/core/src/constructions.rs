//! Extremal and near-extremal families: Steiner triple systems, their disjoint
//! unions, triple stars, triple matchings and complete 2-edge graphs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Hyperedge, LinearHypergraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family} requires {requirement}, got n={n}")]
    BadResidue { family: Family, n: usize, requirement: &'static str },
    #[error("{family} requires an odd n >= 3, got n={n}")]
    BadParity { family: Family, n: usize },
    #[error("{family}: missing or invalid parameter `{name}`")]
    BadParameter { family: Family, name: &'static str },
}

impl ConstructionError {
    pub fn code(&self) -> &'static str {
        match self {
            ConstructionError::BadResidue { .. } => "E_BAD_RESIDUE",
            ConstructionError::BadParity { .. } => "E_BAD_PARITY",
            ConstructionError::BadParameter { .. } => "E_BAD_PARAMETER",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Fano,
    StsBose,
    StsSkolem,
    DisjointSts,
    StarK3,
    MatchingK2,
    TwoEdgeClique,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Family::Fano => "fano",
            Family::StsBose => "sts_bose",
            Family::StsSkolem => "sts_skolem",
            Family::DisjointSts => "disjoint_sts",
            Family::StarK3 => "star_k3",
            Family::MatchingK2 => "matching_k2",
            Family::TwoEdgeClique => "two_edge_clique",
        };
        f.write_str(name)
    }
}

/// A family plus whichever of `n`, `k`, `copies` it needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub family: Family,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub copies: Option<usize>,
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<LinearHypergraph, ConstructionError> {
        let need = |v: Option<usize>, name| v.ok_or(ConstructionError::BadParameter { family: self.family, name });
        match self.family {
            Family::Fano => Ok(fano()),
            Family::StsBose => sts_bose(need(self.n, "n")?),
            Family::StsSkolem => sts_skolem(need(self.n, "n")?),
            Family::DisjointSts => extremal_disjoint_sts(need(self.k, "k")?, need(self.copies, "copies")?),
            Family::StarK3 => star_k3(need(self.n, "n")?),
            Family::MatchingK2 => matching_k2(need(self.n, "n")?),
            Family::TwoEdgeClique => two_edge_clique(need(self.n, "n")?),
        }
    }
}

fn from_triples(n: usize, triples: impl IntoIterator<Item = [VertexId; 3]>) -> LinearHypergraph {
    let mut edges: Vec<Hyperedge> = triples.into_iter().map(|[a, b, c]| Hyperedge::triple(a, b, c)).collect();
    edges.sort_unstable();
    LinearHypergraph::from_edges(n, &edges).expect("construction produces a linear hypergraph")
}

/// The Fano plane: lines `{i, i+1, i+3} mod 7`.
pub fn fano() -> LinearHypergraph {
    from_triples(7, (0..7).map(|i| [i, (i + 1) % 7, (i + 3) % 7]))
}

/// Bose construction for `n ≡ 3 (mod 6)`.
///
/// Points are `(x, i)` with `x ∈ Z_{2t+1}`, `i ∈ Z_3`, labeled `x + i·(2t+1)`,
/// over the idempotent commutative quasigroup `x∘y = (x+y)/2 mod 2t+1`.
pub fn sts_bose(n: usize) -> Result<LinearHypergraph, ConstructionError> {
    if n < 3 || n % 6 != 3 {
        return Err(ConstructionError::BadResidue { family: Family::StsBose, n, requirement: "n ≡ 3 (mod 6)" });
    }
    let q = n / 3;
    let half = (q + 1) / 2; // inverse of 2 mod q
    let op = |x: usize, y: usize| (x + y) * half % q;
    let p = |x: usize, i: usize| (x + (i % 3) * q) as VertexId;
    let mut triples = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..q {
        triples.push([p(x, 0), p(x, 1), p(x, 2)]);
    }
    for x in 0..q {
        for y in x + 1..q {
            for i in 0..3 {
                triples.push([p(x, i), p(y, i), p(op(x, y), i + 1)]);
            }
        }
    }
    Ok(from_triples(n, triples))
}

/// Skolem construction for `n ≡ 1 (mod 6)`, `n ≥ 7`.
///
/// Points are `(x, i)` with `x ∈ Z_{2t}`, `i ∈ Z_3`, labeled `x + i·2t`, plus
/// `∞ = n − 1`, over the half-idempotent commutative quasigroup
/// `x∘y = ⌊s/2⌋ + t·(s mod 2)` where `s = (x+y) mod 2t`.
pub fn sts_skolem(n: usize) -> Result<LinearHypergraph, ConstructionError> {
    if n < 7 || n % 6 != 1 {
        return Err(ConstructionError::BadResidue {
            family: Family::StsSkolem,
            n,
            requirement: "n ≡ 1 (mod 6) and n >= 7",
        });
    }
    let q = (n - 1) / 3;
    let t = q / 2;
    let op = |x: usize, y: usize| {
        let s = (x + y) % q;
        s / 2 + t * (s % 2)
    };
    let p = |x: usize, i: usize| (x + (i % 3) * q) as VertexId;
    let inf = (n - 1) as VertexId;
    let mut triples = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..t {
        triples.push([p(x, 0), p(x, 1), p(x, 2)]);
        for i in 0..3 {
            triples.push([inf, p(x + t, i), p(x, i + 1)]);
        }
    }
    for x in 0..q {
        for y in x + 1..q {
            for i in 0..3 {
                triples.push([p(x, i), p(y, i), p(op(x, y), i + 1)]);
            }
        }
    }
    Ok(from_triples(n, triples))
}

/// A Steiner triple system on `k` points (`k ≡ 1, 3 mod 6`; `k = 1` is the single point).
pub fn sts(k: usize) -> Result<LinearHypergraph, ConstructionError> {
    match k % 6 {
        3 => sts_bose(k),
        1 if k == 1 => Ok(LinearHypergraph::empty(1)),
        1 => sts_skolem(k),
        _ => Err(ConstructionError::BadResidue { family: Family::DisjointSts, n: k, requirement: "k ≡ 1 or 3 (mod 6)" }),
    }
}

/// `copies` disjoint copies of an STS on `k` points: `n = k·copies`, `e = (k−1)n/6`.
pub fn extremal_disjoint_sts(k: usize, copies: usize) -> Result<LinearHypergraph, ConstructionError> {
    if copies == 0 {
        return Err(ConstructionError::BadParameter { family: Family::DisjointSts, name: "copies" });
    }
    let one = sts(k)?;
    Ok((1..copies).fold(one.clone(), |acc, _| acc.disjoint_union(&one)))
}

/// `(n−1)/2` triples `{0, 2i−1, 2i}` through vertex 0.
pub fn star_k3(n: usize) -> Result<LinearHypergraph, ConstructionError> {
    if n < 3 || n % 2 == 0 {
        return Err(ConstructionError::BadParity { family: Family::StarK3, n });
    }
    Ok(from_triples(n, (1..=(n as VertexId - 1) / 2).map(|i| [0, 2 * i - 1, 2 * i])))
}

/// `n/3` disjoint triples.
pub fn matching_k2(n: usize) -> Result<LinearHypergraph, ConstructionError> {
    if n % 3 != 0 {
        return Err(ConstructionError::BadResidue { family: Family::MatchingK2, n, requirement: "n ≡ 0 (mod 3)" });
    }
    Ok(from_triples(n, (0..n as VertexId / 3).map(|i| [3 * i, 3 * i + 1, 3 * i + 2])))
}

/// Every pair of `n` vertices as a 2-edge.
pub fn two_edge_clique(n: usize) -> Result<LinearHypergraph, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::BadParameter { family: Family::TwoEdgeClique, name: "n" });
    }
    let n32 = n as VertexId;
    let edges: Vec<Hyperedge> = (0..n32).flat_map(|a| (a + 1..n32).map(move |b| Hyperedge::pair(a, b))).collect();
    Ok(LinearHypergraph::from_edges(n, &edges).expect("complete graph is linear"))
}
