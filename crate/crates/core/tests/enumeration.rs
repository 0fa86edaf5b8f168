mod common;

use std::collections::{BTreeSet, HashSet};

use berge_core::constructions::{fano, matching_k2, star_k3, sts_skolem, two_edge_clique};
use berge_core::enumerator::{
    canonical_form, enumerate, enumerate_up_to_isomorphism, random_instance, verify_claims_campaign, Candidates,
    CampaignParams, EnumerateError, Uniformity, DEFAULT_ISO_CAP,
};
use berge_core::{Hyperedge, LinearHypergraph};
use common::linear_hypergraph;
use itertools::Itertools;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

/// All subsets of all 2- and 3-sets, kept when pairwise intersections are ≤ 1.
fn brute_force_family(n: usize, with_pairs: bool) -> BTreeSet<Vec<Hyperedge>> {
    let vs: Vec<u32> = (0..n as u32).collect();
    let mut cands: Vec<Hyperedge> = vs.iter().copied().tuple_combinations().map(|(a, b, c)| Hyperedge::triple(a, b, c)).collect();
    if with_pairs {
        cands.extend(vs.iter().copied().tuple_combinations().map(|(a, b)| Hyperedge::pair(a, b)));
    }
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << cands.len() {
        let set: Vec<Hyperedge> = (0..cands.len()).filter(|i| mask >> i & 1 == 1).map(|i| cands[i]).sorted().collect();
        if set.iter().tuple_combinations().all(|(x, y)| x.intersection_size(y) <= 1) {
            out.insert(set);
        }
    }
    out
}

fn enumerated(n: usize, u: Uniformity) -> Vec<Vec<Hyperedge>> {
    let mut v = Vec::new();
    enumerate(n, u, 8, |inst| v.push(inst.edges.to_vec())).unwrap();
    v
}

#[test]
fn labeled_counts_match_brute_force() {
    assert_eq!(enumerated(4, Uniformity::Three).len(), 5);
    assert_eq!(enumerated(3, Uniformity::Three).len(), 2);
    assert_eq!(enumerated(3, Uniformity::TwoThree).len(), 9);
    for (n, pairs, u) in [(4, true, Uniformity::TwoThree), (5, false, Uniformity::Three), (6, false, Uniformity::Three)] {
        let got = enumerated(n, u);
        let set: BTreeSet<Vec<Hyperedge>> = got.iter().cloned().collect();
        assert_eq!(set.len(), got.len(), "duplicates at n={n}");
        assert_eq!(set, brute_force_family(n, pairs), "n={n}");
    }
}

#[test]
fn visit_order_is_strictly_lexicographic() {
    for w in enumerated(5, Uniformity::TwoThree).windows(2) {
        assert!(w[0] < w[1], "{:?} then {:?}", w[0], w[1]);
    }
}

#[test]
fn isomorphism_classes_match_a_pairwise_oracle() {
    // classes by explicit isomorphism search between labeled instances
    let n = 5;
    let all = enumerated(n, Uniformity::TwoThree);
    let perms: Vec<Vec<u32>> = (0..n as u32).permutations(n).collect();
    let mut reps: Vec<LinearHypergraph> = Vec::new();
    for edges in all {
        let h = LinearHypergraph::from_edges(n, &edges).unwrap();
        if !reps.iter().any(|r| r.m() == h.m() && perms.iter().any(|p| &h.relabel(p) == r)) {
            reps.push(h);
        }
    }
    let classes = enumerate_up_to_isomorphism(n, Uniformity::TwoThree, 7, |_| {}).unwrap();
    assert_eq!(classes as usize, reps.len());
    let codes: HashSet<Vec<u8>> = reps.iter().map(|r| canonical_form(r, DEFAULT_ISO_CAP).unwrap()).collect();
    assert_eq!(codes.len(), reps.len());
}

#[test]
fn canonical_form_is_invariant_on_fixtures() {
    let fixtures = [fano(), sts_skolem(7).unwrap(), star_k3(7).unwrap(), matching_k2(6).unwrap(), two_edge_clique(5).unwrap()];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for h in &fixtures {
        let code = canonical_form(h, DEFAULT_ISO_CAP).unwrap();
        for _ in 0..100 {
            let mut perm: Vec<u32> = (0..h.n() as u32).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&h.relabel(&perm), DEFAULT_ISO_CAP).unwrap(), code);
        }
    }
    assert_eq!(canonical_form(&fano(), 8).unwrap(), canonical_form(&sts_skolem(7).unwrap(), 8).unwrap());
    let t = LinearHypergraph::new(3, &[[0, 1, 2]]).unwrap();
    let p = LinearHypergraph::new(3, &[[0, 1]]).unwrap();
    assert_ne!(canonical_form(&t, 8).unwrap(), canonical_form(&p, 8).unwrap());
    assert_eq!(canonical_form(&LinearHypergraph::empty(9), 8), Err(EnumerateError::CapExceeded { n: 9, cap: 8 }));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_is_a_relabeling_invariant(h in linear_hypergraph(1, 7), seed in any::<u64>()) {
        let mut perm: Vec<u32> = (0..h.n() as u32).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(canonical_form(&h, 8).unwrap(), canonical_form(&h.relabel(&perm), 8).unwrap());
    }

    #[test]
    fn random_instances_are_reproducible(seed in any::<u64>(), idx in any::<u64>(), n in 1usize..=12) {
        let cands = Candidates::new(n, Uniformity::TwoThree).unwrap();
        let a = random_instance(&cands, seed, idx);
        prop_assert_eq!(&a, &random_instance(&cands, seed, idx));
        prop_assert_eq!(LinearHypergraph::from_edges(a.n(), a.edges()), Ok(a.clone()));
    }
}

#[test]
fn random_campaign_reports_are_bit_identical() {
    let p = CampaignParams::random(11, None, Uniformity::TwoThree, 500, 99);
    let a = serde_json::to_string(&verify_claims_campaign(&p).unwrap()).unwrap();
    let b = serde_json::to_string(&verify_claims_campaign(&p).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn caps_are_enforced() {
    assert_eq!(enumerate(8, Uniformity::TwoThree, 7, |_| {}), Err(EnumerateError::CapExceeded { n: 8, cap: 7 }));
    assert_eq!(enumerate(9, Uniformity::Three, 8, |_| {}), Err(EnumerateError::CapExceeded { n: 9, cap: 8 }));
}
