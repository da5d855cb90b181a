mod common;

use listpack::color::{extract_packing, is_proper_coloring, is_proper_packing, lift_lists, ListAssignment};
use listpack::graph::{complete_graph, path_graph};
use listpack::packer::{pack_complete, pack_via_product, PackRequest};
use listpack::search::{solve_list_coloring, solve_packing, Backtracking, Search, SearchBudget};
use listpack::Color;
use rand::Rng;

#[test]
fn randomized_pack_complete() {
    let mut rng = common::rng(11);
    for n in 1..=6 {
        for m in n..=n + 3 {
            for _ in 0..20 {
                let l = common::random_assignment(&mut rng, n, m, 3 * m as Color);
                let p = pack_complete(&PackRequest::new(n, l.clone()).unwrap()).unwrap();
                assert_eq!(p.k(), m);
                assert!(p.rows().iter().all(|r| r.len() == n));
                let g = complete_graph(n).unwrap();
                assert!(is_proper_packing(&g, &l, &p).unwrap().ok());
            }
        }
    }
}

#[test]
fn pack_complete_is_deterministic() {
    let mut rng = common::rng(5);
    let l = common::random_assignment(&mut rng, 5, 6, 18);
    let req = PackRequest::new(5, l).unwrap();
    assert_eq!(pack_complete(&req).unwrap(), pack_complete(&req).unwrap());
}

#[test]
fn truncated_lists_still_pack() {
    // if K_n packs at size m it packs at every m' in n..=m with truncated lists
    let mut rng = common::rng(9);
    let budget = SearchBudget::default();
    for n in 2..=3 {
        for _ in 0..10 {
            let m = n + 2;
            let l = common::random_assignment(&mut rng, n, m, 3 * m as Color);
            let g = complete_graph(n).unwrap();
            for size in n..=m {
                let cut = ListAssignment::new(
                    l.lists()
                        .iter()
                        .map(|s| s.iter().copied().take(size).collect())
                        .collect(),
                )
                .unwrap();
                let p = pack_complete(&PackRequest::new(n, cut.clone()).unwrap()).unwrap();
                assert!(is_proper_packing(&g, &cut, &p).unwrap().ok());
                assert!(solve_packing(&g, &cut, size, &budget).unwrap().is_found());
            }
        }
    }
}

#[test]
fn via_product_matches_direct_search_on_p3() {
    let mut rng = common::rng(0);
    let g = path_graph(3).unwrap();
    let budget = SearchBudget::default();
    let solver = Backtracking { budget };
    for _ in 0..30 {
        let l = common::random_assignment(&mut rng, 3, 2, 4);
        let via = pack_via_product(&g, &l, 2, &solver).unwrap();
        let direct = solve_packing(&g, &l, 2, &budget).unwrap();
        assert_eq!(via.is_found(), direct.is_found(), "{l}");
        if let Search::Found(p) = via {
            assert!(is_proper_packing(&g, &l, &p).unwrap().ok());
        }
    }
}

#[test]
fn extraction_round_trip_preserves_properness() {
    // any proper L_H-coloring of G □ K_k reads off to a proper L-packing
    let mut rng = common::rng(21);
    let budget = SearchBudget::default();
    for _ in 0..50 {
        let n = rng.gen_range(1..=4);
        let g = common::small_graphs(4)
            .into_iter()
            .filter(|g| g.n() == n)
            .nth(rng.gen_range(0..common::graphs_up_to_iso(n).len()))
            .unwrap();
        let k = rng.gen_range(1..=3);
        let size = k + rng.gen_range(0..=1);
        let l = common::random_assignment(&mut rng, n, size, 6);
        let (h, lh) = lift_lists(&g, &l, k).unwrap();
        if let Search::Found(f) = solve_list_coloring(&h, &lh, &budget).unwrap() {
            assert!(is_proper_coloring(&h, &lh, &f).unwrap().ok());
            let p = extract_packing(&g, k, &h, &f).unwrap();
            assert_eq!(p.k(), k);
            assert!(is_proper_packing(&g, &l, &p).unwrap().ok());
        }
    }
}

#[test]
fn pack_complete_agrees_with_exhaustive_search_on_small_cases() {
    let mut rng = common::rng(4);
    let budget = SearchBudget::default();
    for n in 1..=3 {
        let g = complete_graph(n).unwrap();
        for _ in 0..20 {
            let l = common::random_assignment(&mut rng, n, n, 2 * n as Color);
            assert!(pack_complete(&PackRequest::new(n, l.clone()).unwrap()).is_ok());
            assert!(solve_packing(&g, &l, n, &budget).unwrap().is_found());
        }
    }
}
