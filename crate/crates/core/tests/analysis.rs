mod common;

use std::collections::BTreeSet;

use common::*;
use pseudocircles::analysis::*;
use pseudocircles::circles::{realize, Circle};
use pseudocircles::constructions::*;
use pseudocircles::{Arrangement, Event, Wiring};

fn touching_k() -> Vec<Circle> {
    let h = 3f64.sqrt();
    vec![Circle::new(0.0, 0.0, 1.0), Circle::new(2.0, 0.0, 1.0), Circle::new(1.0, h, 1.0)]
}

fn k_plus(extra: &[(f64, f64, f64)]) -> Arrangement {
    let mut circles = touching_k();
    circles.extend(extra.iter().map(|&(x, y, r)| Circle::new(x, y, r)));
    let touching: BTreeSet<(usize, usize)> = [(0, 1), (0, 2), (1, 2)].into_iter().collect();
    realize(&circles, &touching).unwrap()
}

fn labels(a: &Arrangement) -> Vec<Vec<String>> {
    pc_arc_types(a, [0, 1, 2]).unwrap().into_iter().map(|(_, arcs)| arcs.iter().map(PcArc::label).collect()).collect()
}

#[test]
fn wheel_graph_checks() {
    let g = touching_graph(&wheel(6).unwrap());
    assert_eq!(g.degree(0), 5);
    let checks = graph_checks(&g);
    assert!(!checks.bipartite);
    assert!(checks.planar);
    assert_eq!(checks.triangles.len(), 5);
    assert!(checks.triangles.iter().all(|t| t.contains(&0)));
}

#[test]
fn trivial_graphs() {
    let g = touching_graph(&krupp());
    assert!(g.edges.is_empty());
    let checks = graph_checks(&g);
    assert!(checks.bipartite && checks.planar && checks.triangles.is_empty());
    assert!(graph_checks(&touching_graph(&prop1_family(11).unwrap())).triangles.is_empty());
}

#[test]
fn touching_order_follows_the_circle_walk() {
    for (name, a) in family_corpus() {
        let g = touching_graph(&a);
        assert_eq!(g.edges.len(), a.touching_count(), "{name}");
        for c in 0..a.n() {
            let walk: Vec<usize> = a
                .circle_walk(c)
                .iter()
                .filter(|e| e.kind == pseudocircles::VertexKind::Touching)
                .map(|e| e.other)
                .collect();
            assert_eq!(g.order[c], walk, "{name} circle {c}");
        }
    }
}

#[test]
fn blossomed_wheel_graph_has_twenty_edges() {
    let g = touching_graph(&blossom(&wheel(6).unwrap(), 0).unwrap());
    assert_eq!(g.edges.len(), 20);
    let checks = graph_checks(&g);
    assert!(checks.triangles.is_empty());
    // the new circles subdivide a pentagon whose diagonals are the rim touchings: a K5
    assert!(!checks.planar);
}

#[test]
fn no_witness_without_triangles() {
    let two = Wiring::from_cross_slots(2, &[0, 0]).to_arrangement().unwrap();
    assert!(alternation_witness(&two, 0).is_none());
    assert!(alternation_witness(&two, 1).is_none());
}

#[test]
fn witnesses_alternate_and_are_least() {
    for m in 6..=8 {
        let a = base_family(m).unwrap();
        for c in 0..m {
            let all = alternation_witnesses(&a, c);
            assert!(!all.is_empty());
            assert_eq!(alternation_witness(&a, c).as_ref(), all.first());
            for w in &all {
                assert!(w.sides[0] != w.sides[1] && w.sides[1] != w.sides[2] && w.sides[2] != w.sides[3]);
                assert!(w.edges.windows(2).all(|p| p[0] < p[1]));
            }
        }
    }
}

#[test]
fn pc_arcs_of_threaded_circles() {
    assert_eq!(labels(&k_plus(&[(1.42, -0.80, 1.61)])), vec![vec!["α′β′", "βγ", "αγ"]]);
    assert_eq!(labels(&k_plus(&[(0.3106, 1.7864, 1.5301)])), vec![vec!["α′γ′", "β′γ′", "αβ"]]);
    assert_eq!(labels(&k_plus(&[(1.0, 0.577, 0.4)])), vec![vec!["αβ", "βγ", "αγ"]]);
    assert_eq!(labels(&k_plus(&[(0.8184, 0.5633, 0.3911)])), vec![vec!["αγ", "βγ", "αβ"]]);
    assert!(labels(&k_plus(&[])).is_empty());
}

#[test]
fn one_arc_per_type_class() {
    for extra in [(1.42, -0.80, 1.61), (0.3106, 1.7864, 1.5301), (1.0, 0.577, 0.4)] {
        let a = k_plus(&[extra]);
        let per = pc_arc_types(&a, [0, 1, 2]).unwrap();
        let mut classes: Vec<_> = per[0].1.iter().map(PcArc::class).collect();
        classes.sort_unstable();
        assert_eq!(classes, vec![(0, 1), (0, 2), (1, 2)]);
    }
}

#[test]
fn claim1_fixtures() {
    let single = claim1_check(&k_plus(&[(1.42, -0.80, 1.61)]), [0, 1, 2]).unwrap();
    assert!(single.holds() && single.pairs.is_empty());
    let double = k_plus(&[(0.8952, 0.6387, 2.0838), (1.0454, 0.6891, 1.9401)]);
    assert_eq!(labels(&double), vec![vec!["α′β′", "β′γ′", "α′γ′"]; 2]);
    let report = claim1_check(&double, [0, 1, 2]).unwrap();
    assert_eq!(report.pairs.len(), 1);
    let (x, y, same) = &report.pairs[0];
    assert_eq!((x.label().as_str(), y.label().as_str(), *same), ("β′γ′", "β′γ′", true));
    assert!(report.holds() && report.class_violations.is_empty());
}

#[test]
fn claim1_on_the_corpus() {
    let mut checked = 0;
    for (name, a) in family_corpus() {
        for t in touching_triples(&a) {
            let r = claim1_check(&a, t).unwrap();
            assert!(r.holds(), "{name} {t:?}: {r:?}");
            assert!(r.class_violations.is_empty(), "{name} {t:?}");
            checked += 1;
        }
    }
    assert!(checked >= 5 * 4);
}

#[test]
fn pc_arcs_reject_non_triples() {
    let w = wheel(6).unwrap();
    let t = touching_triples(&w)[0];
    assert!(pc_arc_types(&w, t).is_ok());
    let rim_only = [1, 2, 3];
    assert_eq!(pc_arc_types(&w, rim_only).unwrap_err().code(), "not-a-touching-triple");
    assert_eq!(claim1_check(&krupp(), [0, 1, 2]).unwrap_err().code(), "not-a-touching-triple");
}

#[test]
fn agarwal_parities_are_even() {
    for n in 4..=12 {
        let w = grunbaum_touch_wiring(n);
        for k in [0, 3, w.events.len() / 2] {
            let d = agarwal_drawing(&w.cut(k).unwrap()).unwrap();
            assert_eq!(d.edges.len(), 2 * n - 4);
            assert!(d.all_even(), "n={n} cut {k}: {:?}", d.odd_pairs().collect::<Vec<_>>());
            assert!(d.mixed_sides.is_empty());
        }
    }
    let lone = Wiring::linear(3, vec![Event::touch(0), Event::cross(1), Event::cross(0), Event::cross(0), Event::cross(1)]);
    assert!(lone.validate().is_ok());
    let d = agarwal_drawing(&lone).unwrap();
    assert!(d.edges.len() == 1 && d.all_even());
}

#[test]
fn agarwal_rejects_non_intersecting_pairs() {
    let lw = Wiring::linear(3, vec![Event::cross(0)]);
    assert!(agarwal_drawing(&lw).is_err());
}

#[test]
fn touch_sides_color_the_touching_graph() {
    for n in 4..=9 {
        let d = agarwal_drawing(&grunbaum_touch_wiring(n).cut(0).unwrap()).unwrap();
        for &(u, v) in &d.edges {
            assert_ne!(d.touch_sides[u], d.touch_sides[v], "edge ({u},{v})");
        }
    }
}

#[test]
fn reports() {
    let r = report(&triangle_family(12).unwrap()).unwrap();
    assert_eq!((r.p3(), r.p3_floor()), (16, 16));
    assert!(r.digon_free() && r.cylindrical);
    let kv = r.to_kv();
    assert!(kv.lines().any(|l| l == "p3_floor_met=true"));

    let g = report(&grunbaum_digons(7).unwrap()).unwrap();
    assert!(g.to_kv().lines().any(|l| l == "p2_combined=12"));
    assert!(g.to_kv().lines().any(|l| l == "p3_floor_met=na"));

    let p = report(&prop1_family(15).unwrap()).unwrap();
    let kv = p.to_kv();
    for line in ["p2_combined=28", "p2_bound=28", "p2_within_bound=true", "tg_triangles=0", "theorem1_hypothesis=false"] {
        assert!(kv.lines().any(|l| l == line), "missing {line} in\n{kv}");
    }
    let tsv = p.to_tsv();
    let rows: Vec<&str> = tsv.lines().collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0].split('\t').count(), rows[1].split('\t').count());
}
