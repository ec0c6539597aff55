//! Exact linear algebra on arbitrary small graphs.

use num_bigint::BigUint;
use proptest::prelude::*;
use wgamma_core::graph::EdgeSet;
use wgamma_core::laplacian::multipartite_laplacian_charpoly;
use wgamma_core::oracle::{
    charpoly_exact, laplacian_matrix, mohar_join_check, mohar_sample, rank_exact,
    spanning_trees_oracle,
};
use wgamma_core::structure::MultipartiteShape;

fn graph(max_n: usize) -> impl Strategy<Value = EdgeSet> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            EdgeSet::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn laplacian_rank_counts_components(g in graph(12)) {
        let l = laplacian_matrix(&g);
        prop_assert_eq!(rank_exact(&l).unwrap(), g.vertex_count() - g.component_count());
    }

    #[test]
    fn trees_vanish_exactly_on_disconnected_graphs(g in graph(9)) {
        let t = spanning_trees_oracle(&g).unwrap();
        prop_assert_eq!(t == BigUint::from(0u32), g.component_count() > 1);
    }

    #[test]
    fn join_formula_holds(a in graph(6), b in graph(6)) {
        let r = mohar_join_check(&a, &b).unwrap();
        prop_assert_eq!(r.direct, r.formula);
    }

    #[test]
    fn multipartite_charpoly_matches_matrix(sizes in prop::collection::vec(1u64..5, 1..5)) {
        let parts: Vec<usize> = sizes.iter().map(|&s| s as usize).collect();
        let g = EdgeSet::complete_multipartite(&parts);
        let shape = MultipartiteShape::from_sizes(&sizes).unwrap();
        prop_assert_eq!(
            charpoly_exact(&laplacian_matrix(&g)).unwrap(),
            multipartite_laplacian_charpoly(&shape).unwrap()
        );
    }
}

#[test]
fn cayley_formula() {
    for n in 1..=9u32 {
        let t = spanning_trees_oracle(&EdgeSet::complete(n as usize)).unwrap();
        let expected = if n == 1 {
            BigUint::from(1u32)
        } else {
            BigUint::from(n).pow(n - 2)
        };
        assert_eq!(t, expected, "K_{n}");
    }
}

#[test]
fn seeded_mohar_sample() {
    for (a, b) in mohar_sample(2024, 50, 6) {
        assert!(mohar_join_check(&a, &b).unwrap().passed());
    }
}
