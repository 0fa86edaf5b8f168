mod common;

use berge_core::oracle::{oracle_longest_path, DEFAULT_ORACLE_CAP};
use berge_core::solver::{is_valid_berge_cycle, is_valid_berge_path};
use berge_core::{Hyperedge, LinearHypergraph, Solver};
use common::{brute_circumference, linear_hypergraph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn longest_path_matches_oracle(h in linear_hypergraph(1, 7)) {
        let p = Solver::new(&h).unwrap().longest_path();
        prop_assert_eq!(p.len(), oracle_longest_path(&h, DEFAULT_ORACLE_CAP).unwrap());
    }

    #[test]
    fn path_witnesses_are_valid(h in linear_hypergraph(1, 10)) {
        let s = Solver::new(&h).unwrap();
        let p = s.longest_path();
        prop_assert!(is_valid_berge_path(&h, &p));
        for k in 0..=p.len() {
            let q = s.find_path(k).expect("shorter paths exist");
            prop_assert_eq!(q.len(), k);
            prop_assert!(is_valid_berge_path(&h, &q));
        }
        prop_assert!(!s.has_path(p.len() + 1));
    }

    #[test]
    fn circumference_matches_brute_force(h in linear_hypergraph(1, 6)) {
        let s = Solver::new(&h).unwrap();
        let c = s.longest_cycle();
        prop_assert_eq!(c.as_ref().map_or(0, |c| c.len()), brute_circumference(&h));
        if let Some(c) = c {
            prop_assert!(is_valid_berge_cycle(&h, &c));
            let all = s.longest_cycles();
            prop_assert!(all.iter().all(|d| d.len() == c.len() && is_valid_berge_cycle(&h, d)));
            prop_assert!(all.contains(&c));
        }
    }

    #[test]
    fn adding_an_edge_never_shortens(h in linear_hypergraph(3, 8), a in 0u32..8, b in 0u32..8, c in 0u32..8) {
        let n = h.n() as u32;
        let Ok(e) = Hyperedge::from_slice(&[a % n, b % n, c % n]) else { return Ok(()) };
        let Ok(bigger) = h.with_edge(e) else { return Ok(()) };
        let (s, t) = (Solver::new(&h).unwrap(), Solver::new(&bigger).unwrap());
        prop_assert!(s.longest_path().len() <= t.longest_path().len());
        let circ = |x: &Solver| x.longest_cycle().map_or(0, |c| c.len());
        prop_assert!(circ(&s) <= circ(&t));
    }

    #[test]
    fn relabeling_preserves_lengths(h in linear_hypergraph(1, 8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<u32> = (0..h.n() as u32).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let g = h.relabel(&perm);
        let (s, t) = (Solver::new(&h).unwrap(), Solver::new(&g).unwrap());
        prop_assert_eq!(s.longest_path().len(), t.longest_path().len());
        prop_assert_eq!(s.longest_cycle().map(|c| c.len()), t.longest_cycle().map(|c| c.len()));
    }
}

#[test]
fn exhaustive_agreement_up_to_five_vertices() {
    use berge_core::enumerator::{enumerate, Uniformity};
    for n in 1..=5 {
        let mut checked = 0;
        enumerate(n, Uniformity::TwoThree, 7, |inst| {
            let h = inst.to_hypergraph();
            assert_eq!(
                Solver::new(&h).unwrap().longest_path().len(),
                oracle_longest_path(&h, DEFAULT_ORACLE_CAP).unwrap(),
                "{h:?}"
            );
            checked += 1;
        })
        .unwrap();
        assert!(checked > 0);
    }
}

#[test]
fn components_bound_paths() {
    // a path never leaves its component
    let h = LinearHypergraph::new(7, &[vec![0, 1, 2], vec![2, 3], vec![4, 5, 6]]).unwrap();
    let p = Solver::new(&h).unwrap().longest_path();
    assert_eq!(p.len(), 2);
    assert_eq!(h.components().len(), 2);
}
