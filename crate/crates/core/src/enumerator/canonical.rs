//! Canonical forms for isomorphism testing of small hypergraphs.
//!
//! The form is the minimum edge encoding over all relabelings that respect a
//! vertex-invariant ordering (vertices sorted by their 2-edge and 3-edge
//! degrees). Isomorphisms preserve the invariant, so equal forms ⇔ isomorphic.

use itertools::Itertools;

use super::EnumerateError;
use crate::hypergraph::{Hyperedge, LinearHypergraph, VertexId};

pub const DEFAULT_ISO_CAP: usize = 8;

fn encode(n: usize, edges: &mut [Hyperedge]) -> Vec<u8> {
    edges.sort_unstable();
    let mut out = Vec::with_capacity(2 + 3 * edges.len());
    out.push(n as u8);
    out.push(edges.len() as u8);
    for e in edges.iter() {
        let v = e.vertices();
        out.extend([v[0] as u8, v[1] as u8, v.get(2).map_or(u8::MAX, |&x| x as u8)]);
    }
    out
}

/// Returns the canonical byte string of `h` and the relabeled hypergraph achieving it.
pub fn canonical_with_rep(h: &LinearHypergraph, cap: usize) -> Result<(Vec<u8>, LinearHypergraph), EnumerateError> {
    if h.n() > cap {
        return Err(EnumerateError::CapExceeded { n: h.n(), cap });
    }
    let n = h.n();
    let mut inv = vec![(0usize, 0usize); n];
    for e in h.edges() {
        for &v in e.vertices() {
            if e.is_triple() {
                inv[v as usize].1 += 1;
            } else {
                inv[v as usize].0 += 1;
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(inv[v].1), std::cmp::Reverse(inv[v].0), v));
    let cells: Vec<Vec<usize>> = order
        .chunk_by(|&a, &b| inv[a] == inv[b])
        .map(|c| c.to_vec())
        .collect();

    let mut best: Option<(Vec<u8>, Vec<VertexId>)> = None;
    let mut perm = vec![0 as VertexId; n];
    let mut scratch: Vec<Hyperedge> = Vec::with_capacity(h.m());

    fn go(
        h: &LinearHypergraph,
        cells: &[Vec<usize>],
        next_label: usize,
        perm: &mut Vec<VertexId>,
        scratch: &mut Vec<Hyperedge>,
        best: &mut Option<(Vec<u8>, Vec<VertexId>)>,
    ) {
        let Some((cell, rest)) = cells.split_first() else {
            scratch.clear();
            scratch.extend(h.edges().iter().map(|e| e.map_vertices(|v| perm[v as usize])));
            let code = encode(h.n(), scratch);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, perm.clone()));
            }
            return;
        };
        for p in cell.iter().copied().permutations(cell.len()) {
            for (i, v) in p.into_iter().enumerate() {
                perm[v] = (next_label + i) as VertexId;
            }
            go(h, rest, next_label + cell.len(), perm, scratch, best);
        }
    }

    go(h, &cells, 0, &mut perm, &mut scratch, &mut best);
    let (code, perm) = best.expect("at least one labeling");
    Ok((code, h.relabel(&perm)))
}

/// Equal outputs iff the hypergraphs are isomorphic. Requires `n ≤ cap`.
pub fn canonical_form(h: &LinearHypergraph, cap: usize) -> Result<Vec<u8>, EnumerateError> {
    canonical_with_rep(h, cap).map(|(c, _)| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano, sts_skolem};

    #[test]
    fn relabeled_fano_matches() {
        let f = fano();
        let perm: Vec<VertexId> = vec![3, 6, 0, 5, 1, 4, 2];
        let g = f.relabel(&perm);
        assert_ne!(f, g);
        assert_eq!(canonical_form(&f, 8).unwrap(), canonical_form(&g, 8).unwrap());
        assert_eq!(canonical_form(&f, 8).unwrap(), canonical_form(&sts_skolem(7).unwrap(), 8).unwrap());
    }

    #[test]
    fn distinguishes_triple_from_pair() {
        let t = LinearHypergraph::new(3, &[[0, 1, 2]]).unwrap();
        let p = LinearHypergraph::new(3, &[[0, 1]]).unwrap();
        assert_ne!(canonical_form(&t, 8).unwrap(), canonical_form(&p, 8).unwrap());
        assert_eq!(canonical_form(&t, 8).unwrap(), canonical_form(&t, 8).unwrap());
    }

    #[test]
    fn same_degrees_different_structure() {
        // 6-cycle vs two triangles of 2-edges: every vertex has 2-degree 2
        let c6 = LinearHypergraph::new(6, &[[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [0, 5]]).unwrap();
        let tt = LinearHypergraph::new(6, &[[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]]).unwrap();
        assert_ne!(canonical_form(&c6, 8).unwrap(), canonical_form(&tt, 8).unwrap());
    }

    #[test]
    fn representative_reproduces_the_form() {
        let h = LinearHypergraph::new(5, &[vec![0, 4], vec![1, 2, 3]]).unwrap();
        let (code, rep) = canonical_with_rep(&h, 8).unwrap();
        assert_eq!(canonical_form(&rep, 8).unwrap(), code);
    }

    #[test]
    fn cap() {
        assert!(matches!(
            canonical_form(&LinearHypergraph::empty(9), 8),
            Err(EnumerateError::CapExceeded { n: 9, cap: 8 })
        ));
    }
}
