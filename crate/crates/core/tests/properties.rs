mod common;

use common::*;
use proptest::prelude::*;
use pseudocircles::analysis::{agarwal_drawing, graph_checks, touching_graph};
use pseudocircles::constructions::{contract_digon, relax_touching, Side};
use pseudocircles::format::{parse_arr, parse_wir, write_arr, write_wir};
use pseudocircles::Wiring;

fn wirings() -> impl Strategy<Value = Wiring> {
    (2usize..=6, any::<bool>(), prop::collection::vec(any::<u32>(), 40))
        .prop_filter_map("search budget exhausted", |(n, touch, choices)| guided_wiring(n, touch, &choices))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn converted_wirings_are_valid_and_cylindrical(w in wirings()) {
        prop_assert!(w.validate().is_ok());
        let a = w.to_arrangement().unwrap();
        prop_assert!(a.validate().is_ok(), "{}", a.validate().summary());
        prop_assert!(a.is_cylindrical().is_some());
        prop_assert!(euler_identities(&a).is_ok());
        prop_assert_eq!(traced_faces(&a), library_faces(&a));
    }

    #[test]
    fn stats_are_symmetry_invariant(w in wirings(), k in 0usize..64) {
        let base = w.to_arrangement().unwrap().cell_stats();
        for v in [w.rotated(k), w.reflected(), w.reversed(), w.canonical_form()] {
            prop_assert_eq!(&v.to_arrangement().unwrap().cell_stats(), &base);
            prop_assert_eq!(v.canonical_key(), w.canonical_key());
        }
    }

    #[test]
    fn cuts_keep_the_pair_multiset(w in wirings(), k in 0usize..64) {
        let offset = k % w.events.len();
        let lw = w.cut(offset).unwrap();
        let mut before: Vec<_> = w.pair_intersections().into_values().collect();
        let mut after: Vec<_> = lw.pair_intersections().into_values().collect();
        before.sort_unstable();
        after.sort_unstable();
        prop_assert_eq!(before, after);
        prop_assert!(lw.validate().is_ok());
    }

    #[test]
    fn claim3_holds_on_cylindrical_instances(w in wirings()) {
        let a = w.to_arrangement().unwrap();
        let g = touching_graph(&a);
        prop_assert_eq!(g.edges.len(), a.touching_count());
        let checks = graph_checks(&g);
        prop_assert!(checks.bipartite && checks.planar);
        if a.n() >= 3 {
            prop_assert!(a.touching_count() <= 2 * a.n() - 4);
        }
        let d = agarwal_drawing(&w.cut(0).unwrap()).unwrap();
        prop_assert!(d.all_even());
        prop_assert!(d.mixed_sides.is_empty());
    }

    #[test]
    fn digon_free_instances_meet_the_triangle_floor(w in wirings()) {
        let st = w.to_arrangement().unwrap().cell_stats();
        if st.p2_combined == 0 {
            prop_assert!(st.triangles >= ceil_4n_3(w.n));
        }
    }

    #[test]
    fn contract_then_relax_restores_stats(w in wirings()) {
        let a = w.to_arrangement().unwrap();
        let faces = a.faces();
        if let Some(f) = (0..faces.len()).find(|&f| a.is_lens(&faces[f])) {
            let t = contract_digon(&a, f).unwrap();
            let e = t.edge_count();
            prop_assert_eq!((t.vertex_count(), e, t.faces().len()), (a.vertex_count() - 1, a.edge_count() - 2, faces.len() - 1));
            let x = t.touching_vertices().max().unwrap();
            let back: Vec<_> = [Side::In, Side::Out].into_iter().filter_map(|s| relax_touching(&t, x, s).ok()).collect();
            prop_assert_eq!(back.len(), 1);
            prop_assert_eq!(back[0].cell_stats(), a.cell_stats());
            prop_assert_eq!(touching_graph(&back[0]).edges, touching_graph(&a).edges);
        }
    }

    #[test]
    fn text_formats_round_trip(w in wirings()) {
        prop_assert_eq!(&parse_wir(&write_wir(&w)).unwrap(), &w);
        let a = w.to_arrangement().unwrap();
        let text = write_arr(&a);
        let back = parse_arr(&text).unwrap();
        prop_assert_eq!(write_arr(&back), text);
    }
}
