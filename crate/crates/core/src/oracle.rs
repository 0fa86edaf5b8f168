//! Slow, structurally independent longest-path oracle.
//!
//! Enumerates injective vertex sequences and asks whether the consecutive
//! pairs admit a system of distinct covering hyperedges (a bipartite matching
//! between positions and hyperedges). Nothing here assumes linearity.

use thiserror::Error;

use crate::hypergraph::LinearHypergraph;

pub const DEFAULT_ORACLE_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle limited to {cap} vertices, got {n}")]
    InstanceTooLarge { n: usize, cap: usize },
}

/// Kuhn's augmenting-path matching. `options[i]` lists hyperedges usable at position `i`.
fn has_distinct_representatives(options: &[Vec<usize>], edge_count: usize) -> bool {
    fn augment(i: usize, options: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &e in &options[i] {
            if seen[e] {
                continue;
            }
            seen[e] = true;
            if owner[e].is_none_or(|j| augment(j, options, owner, seen)) {
                owner[e] = Some(i);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; edge_count];
    (0..options.len()).all(|i| {
        let mut seen = vec![false; edge_count];
        augment(i, options, &mut owner, &mut seen)
    })
}

/// Longest Berge path length over arbitrary hyperedges (any sizes, overlaps allowed).
pub fn oracle_longest_path_raw(n: usize, edges: &[Vec<u32>], cap: usize) -> Result<usize, OracleError> {
    if n > cap {
        return Err(OracleError::InstanceTooLarge { n, cap });
    }
    let covering = |a: u32, b: u32| -> Vec<usize> {
        edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.contains(&a) && e.contains(&b))
            .map(|(i, _)| i)
            .collect()
    };
    let mut best = 0;
    let mut seq: Vec<u32> = Vec::with_capacity(n);
    let mut options: Vec<Vec<usize>> = Vec::with_capacity(n);

    fn extend(
        n: usize,
        edges: &[Vec<u32>],
        seq: &mut Vec<u32>,
        options: &mut Vec<Vec<usize>>,
        best: &mut usize,
        covering: &dyn Fn(u32, u32) -> Vec<usize>,
    ) {
        *best = (*best).max(options.len());
        for w in 0..n as u32 {
            if seq.contains(&w) {
                continue;
            }
            let last = *seq.last().unwrap();
            let opts = covering(last, w);
            if opts.is_empty() {
                continue;
            }
            options.push(opts);
            // a sequence whose prefix has no representative system cannot be extended either
            if has_distinct_representatives(options, edges.len()) {
                seq.push(w);
                extend(n, edges, seq, options, best, covering);
                seq.pop();
            }
            options.pop();
        }
    }

    for s in 0..n as u32 {
        seq.push(s);
        extend(n, edges, &mut seq, &mut options, &mut best, &covering);
        seq.pop();
    }
    Ok(best)
}

pub fn oracle_longest_path(h: &LinearHypergraph, cap: usize) -> Result<usize, OracleError> {
    let raw: Vec<Vec<u32>> = h.edges().iter().map(|e| e.vertices().to_vec()).collect();
    oracle_longest_path_raw(h.n(), &raw, cap)
}
