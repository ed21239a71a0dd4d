use ldc_core::canon::canonical_form;
use ldc_core::format::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use ldc_core::ld::{gamma_l, is_ld_mask};
use ldc_core::partition::{coalition_graph, verify_ldc_partition};
use ldc_core::solver::{c_l_at_least, c_l_exact, Status};
use ldc_core::vertex_set::combinations;
use ldc_core::{Graph, Partition};
use proptest::prelude::*;

/// A random connected graph: a random tree plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        let extra = proptest::collection::vec((0..n, 0..n), 0..n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (i + 1, p)).collect();
            edges.extend(extra.into_iter().filter(|(a, b)| a != b));
            edges.sort_unstable_by_key(|&(a, b)| (a.min(b), a.max(b)));
            edges.dedup_by_key(|&mut (a, b)| (a.min(b), a.max(b)));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_l_is_minimum(g in connected_graph(8)) {
        let (gamma, witness) = gamma_l(&g).unwrap();
        prop_assert_eq!(witness.len(), gamma);
        prop_assert!(is_ld_mask(&g, witness.bits()));
        prop_assert!(combinations(g.order(), gamma - 1).all(|m| !is_ld_mask(&g, m)));
    }

    #[test]
    fn certificates_verify_and_respect_bounds(g in connected_graph(7)) {
        let r = c_l_exact(&g).unwrap();
        let gamma = gamma_l(&g).unwrap().0;
        match r.status {
            Status::Exact => {
                let k = r.c_l.unwrap();
                let cert = r.certificate.unwrap();
                prop_assert!(cert.verify(&g));
                prop_assert_eq!(cert.len(), k);
                prop_assert!(k <= g.order() + 2 - gamma);
                let cg = coalition_graph(&g, &cert.partition).unwrap();
                prop_assert!(cg.min_degree() >= 1);
                prop_assert!((0..k).all(|i| cg.degree(i) <= 2 * g.max_degree()));
                prop_assert!(c_l_at_least(&g, k + 1).unwrap().is_none());
            }
            Status::None => prop_assert!(c_l_at_least(&g, 2).unwrap().is_none()),
            Status::Inconclusive => prop_assert!(false, "no budget was set"),
        }
    }

    #[test]
    fn formats_round_trip(g in connected_graph(12)) {
        prop_assert_eq!(&from_graph6(&to_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&from_edge_list(&to_edge_list(&g)).unwrap(), &g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in connected_graph(9), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permuted(&perm)).unwrap());
    }

    #[test]
    fn certificate_text_round_trip(g in connected_graph(7)) {
        if let Some(cert) = c_l_exact(&g).unwrap().certificate {
            let p = Partition::parse(g.order(), &cert.partition.to_text()).unwrap();
            prop_assert_eq!(&p, &cert.partition);
            prop_assert!(verify_ldc_partition(&g, &p).unwrap().is_ok());
        }
    }
}
