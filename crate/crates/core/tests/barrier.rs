use std::collections::BTreeSet;

use tutte_toughness::barrier::{analyze, analyze_barrier, outerplanar_cover, ComponentRole};
use tutte_toughness::two_factor::{biased_barrier, check_biased_properties, classify_components, find_all_barriers};
use tutte_toughness::{delta, BarrierPair, ExactRational, Graph};

/// Triangles A = {0,1,2} and B = {3,4,5}; y_i = 6 + i joins vertex i of A
/// to vertex 3 + i of B.
fn two_triangles() -> (Graph, BarrierPair) {
    let g = Graph::from_edges(
        9,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (6, 0), (6, 3), (7, 1), (7, 4), (8, 2), (8, 5)],
    )
    .unwrap();
    let b = BarrierPair {
        s: vec![],
        t: vec![6, 7, 8],
        delta: -2,
    };
    (g, b)
}

#[test]
fn fixture_classification() {
    let (g, b) = two_triangles();
    assert_eq!(delta(&g, &b.s, &b.t).unwrap(), -2);
    let cls = classify_components(&g, &b.s, &b.t).unwrap();
    assert_eq!(cls.c3(), 2);
    assert_eq!(cls.t2, vec![6, 7, 8]);
    assert!(cls.t0.is_empty() && cls.t1.is_empty());
    assert_eq!(cls.p, 0);
    assert_eq!(cls.eq_t_residual, 0);
}

#[test]
fn fixture_ledger() {
    let (g, b) = two_triangles();
    let l = analyze_barrier(&g, None, b).unwrap();
    let h = &l.h.h;
    assert_eq!(h.vertex_count(), 2);
    assert_eq!(h.edge_count(), 3);
    assert_eq!(h.multiplicity(0, 1), 3);
    assert!(l.h_invariants.all_hold());
    assert_eq!(l.h_invariants.max_degree, 3);

    let so = &l.stage_one;
    assert_eq!(so.x.len(), 1);
    assert_eq!(so.q(), 0);
    assert_eq!(so.s_star(), 0);
    let other: Vec<_> = so.detection.components.iter().filter(|c| c.role == ComponentRole::Y { class: 3 }).collect();
    assert_eq!(other.len(), 1);
    assert_eq!(so.m_count, 1);
    assert_eq!(so.deficiency_bound.df, 0);
    assert!(so.deficiency_bound.holds);
    assert!(so.matching_properties_hold());

    assert_eq!(l.c3.lhs, 2);
    assert_eq!(l.c3.rhs, ExactRational::new(8, 3));
    assert!(l.c3.holds);

    let cut = &l.cutset;
    assert_eq!(cut.t_prime.len(), 1);
    assert!(cut.t_prime_is_m);
    assert_eq!(cut.s_prime.len(), 5);
    assert!(cut.size_identity_holds);
    assert_eq!(cut.component_count, 4);
    assert!(cut.lower_bound_holds);
    assert_eq!(cut.ratio, Some(ExactRational::new(5, 4)));
    // each triangle keeps exactly the vertex facing the representative's T-vertex
    let y = cut.t_prime[0];
    for sd in cut.s_d.values() {
        assert_eq!(sd.len(), 2);
        assert!(sd.iter().all(|&v| !g.has_edge(v, y)));
    }
}

#[test]
fn star_ledger_is_empty() {
    let g = Graph::complete_bipartite(1, 3);
    let l = analyze(&g, None, 18).unwrap();
    assert_eq!((l.barrier.s.clone(), l.barrier.t.clone()), (vec![], vec![0]));
    assert_eq!(l.h.h.vertex_count(), 0);
    assert_eq!(l.stage_one.m_count, 0);
    assert!(l.c3.holds);
    assert_eq!(l.cutset.s_prime, Vec::<usize>::new());
}

#[test]
fn bridged_stars() {
    // centers 0 and 4, leaves 1..=3 and 5..=7, bridge 3-5
    let g = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7), (3, 5)]).unwrap();
    // a single center already separates three odd components
    assert!(!find_all_barriers(&g, Some(1), 18).unwrap().is_empty());
    let b = biased_barrier(&g, 18).unwrap();
    assert_eq!((b.s.clone(), b.t.clone()), (vec![], vec![0]));
    let p = check_biased_properties(&g, &b).unwrap();
    assert!(p.all_hold(), "{p:?}");
}

#[test]
fn outerplanar_examples() {
    let p5 = Graph::path(5);
    let w = outerplanar_cover(&p5, 2).unwrap();
    assert_eq!(w.len(), 3);
    let c7 = Graph::cycle(7);
    let w: BTreeSet<usize> = outerplanar_cover(&c7, 3).unwrap().into_iter().collect();
    assert_eq!(w.len(), 4);
    let rest: Vec<usize> = (0..7).filter(|v| !w.contains(v)).collect();
    assert!(rest.iter().all(|&u| rest.iter().all(|&v| !c7.has_edge(u, v))));
    assert_eq!(outerplanar_cover(&Graph::new(5), 2).unwrap().len(), 3);
    assert!(outerplanar_cover(&Graph::complete(5), 2).is_err());
    assert!(outerplanar_cover(&p5, 3).is_err());
}
