#![allow(dead_code)]

use berge_core::{Hyperedge, LinearHypergraph, VertexId};
use proptest::prelude::*;

/// Random linear {2,3}-uniform hypergraph: draw edge proposals and keep those
/// that preserve linearity.
pub fn linear_hypergraph(min_n: usize, max_n: usize) -> impl Strategy<Value = LinearHypergraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let v = 0..n.max(1) as VertexId;
        let proposal = (v.clone(), v.clone(), v, any::<bool>());
        prop::collection::vec(proposal, 0..40).prop_map(move |props| {
            let mut h = LinearHypergraph::empty(n);
            for (a, b, c, triple) in props {
                let slice: Vec<VertexId> = if triple { vec![a, b, c] } else { vec![a, b] };
                if let Ok(e) = Hyperedge::from_slice(&slice) {
                    if let Ok(next) = h.with_edge(e) {
                        h = next;
                    }
                }
            }
            h
        })
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<VertexId>> {
    Just((0..n as VertexId).collect::<Vec<_>>()).prop_shuffle()
}

/// Distinct hyperedges for each slot, by plain backtracking.
fn distinct_choice(options: &[Vec<usize>], used: &mut Vec<usize>) -> bool {
    let Some((first, rest)) = options.split_first() else { return true };
    for &e in first {
        if !used.contains(&e) {
            used.push(e);
            if distinct_choice(rest, used) {
                return true;
            }
            used.pop();
        }
    }
    false
}

fn covering(h: &LinearHypergraph, a: VertexId, b: VertexId) -> Vec<usize> {
    h.edges().iter().enumerate().filter(|(_, e)| e.contains(a) && e.contains(b)).map(|(i, _)| i).collect()
}

/// Longest Berge cycle length (0 if none) by trying every cyclic vertex sequence.
pub fn brute_circumference(h: &LinearHypergraph) -> usize {
    fn go(h: &LinearHypergraph, seq: &mut Vec<VertexId>, best: &mut usize) {
        let n = h.n() as VertexId;
        if seq.len() >= 2 {
            let l = seq.len();
            let opts: Vec<Vec<usize>> = (0..l).map(|i| covering(h, seq[i], seq[(i + 1) % l])).collect();
            if l > *best && opts.iter().all(|o| !o.is_empty()) && distinct_choice(&opts, &mut Vec::new()) {
                *best = l;
            }
        }
        for w in seq[0] + 1..n {
            if !seq.contains(&w) && !covering(h, *seq.last().unwrap(), w).is_empty() {
                seq.push(w);
                go(h, seq, best);
                seq.pop();
            }
        }
    }
    let mut best = 0;
    for s in 0..h.n() as VertexId {
        go(h, &mut vec![s], &mut best);
    }
    best
}

pub fn parse(text: &str) -> LinearHypergraph {
    berge_core::hg::parse(text).expect("valid fixture")
}
