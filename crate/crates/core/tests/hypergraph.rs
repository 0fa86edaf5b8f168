mod common;

use berge_core::hg;
use berge_core::{Hyperedge, LinearHypergraph};
use common::linear_hypergraph;
use proptest::prelude::*;

proptest! {
    #[test]
    fn shadow_counts_agree(h in linear_hypergraph(0, 12)) {
        let s = h.shadow();
        prop_assert_eq!(s.len(), h.shadow_edge_count());
        prop_assert_eq!(s.len(), h.count_pairs() + 3 * h.count_triples());
        let degree_sum: usize = (0..h.n() as u32).map(|v| h.shadow_degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * s.len());
        for (a, b) in s.pairs() {
            let e = s.cover(a, b).unwrap();
            prop_assert!(e.contains(a) && e.contains(b) && h.contains_edge(&e));
        }
    }

    #[test]
    fn restriction_stays_linear(h in linear_hypergraph(1, 10), mask in any::<u16>()) {
        let keep: Vec<u32> = (0..h.n() as u32).filter(|v| mask >> v & 1 == 1).collect();
        let (r, map) = h.restrict(&keep);
        prop_assert_eq!(r.n(), keep.len());
        // re-validation from scratch must succeed
        prop_assert_eq!(LinearHypergraph::from_edges(r.n(), r.edges()), Ok(r.clone()));
        let expected: Vec<Hyperedge> = {
            let mut v: Vec<Hyperedge> = h.edges().iter().filter_map(|e| {
                let kept: Vec<u32> = e.vertices().iter().filter_map(|&x| map[x as usize]).collect();
                (kept.len() >= 2).then(|| Hyperedge::from_slice(&kept).unwrap())
            }).collect();
            v.sort();
            v
        };
        prop_assert_eq!(r.edges(), expected.as_slice());
    }

    #[test]
    fn hg_round_trip(h in linear_hypergraph(0, 12)) {
        let text = hg::to_string(&h);
        prop_assert_eq!(hg::parse(&text).unwrap(), h);
    }

    #[test]
    fn components_partition_the_vertices(h in linear_hypergraph(0, 12)) {
        let comps = h.components();
        let mut all: Vec<u32> = comps.concat();
        all.sort();
        prop_assert_eq!(all, (0..h.n() as u32).collect::<Vec<_>>());
        for e in h.edges() {
            let owner = comps.iter().position(|c| c.contains(&e.vertices()[0])).unwrap();
            prop_assert!(e.vertices().iter().all(|v| comps[owner].contains(v)));
        }
    }
}

#[test]
fn linearity_violation_names_both_edges() {
    let err = LinearHypergraph::new(5, &[vec![0, 1, 2], vec![3, 4], vec![1, 2, 3]]).unwrap_err();
    assert_eq!(err.code(), "E_LINEARITY");
    let msg = err.to_string();
    assert!(msg.contains("{0,1,2}") && msg.contains("{1,2,3}"), "{msg}");
}
