use std::collections::BTreeSet;

use proptest::prelude::*;
use tutte_toughness::generators::{apollonian, random_flip_triangulation, stellate, GeneratorKind, GeneratorSpec};
use tutte_toughness::matching::{
    bipartite_cover_matching, build_bx, cover_matching_with_quota, deficiency, max_matching, merge_matchings,
};
use tutte_toughness::toughness::vertex_connectivity;
use tutte_toughness::{delta, toughness, ExactRational, Graph, Multigraph, ToughnessValue};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn multigraph_strategy(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| {
            let mut mg = Multigraph::new(n);
            for (u, v) in pairs {
                if u != v {
                    mg.add_edge(u, v).unwrap();
                }
            }
            mg
        })
    })
}

/// Components of `g - removed`, by a plain DFS.
fn count_components(g: &Graph, removed: &BTreeSet<usize>) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut c = 0;
    for s in (0..n).filter(|v| !removed.contains(v)) {
        if seen[s] {
            continue;
        }
        c += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] && !removed.contains(&w) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    c
}

fn subset(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dist_condition_matches_neighborhoods(g in graph_strategy(12)) {
        let n = g.vertex_count();
        let cubic: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 3).collect();
        let mut expected = true;
        for (i, &u) in cubic.iter().enumerate() {
            for &v in &cubic[i + 1..] {
                let common = g.neighbors(u).iter().any(|w| g.neighbors(v).contains(w));
                if g.has_edge(u, v) || common {
                    expected = false;
                }
            }
        }
        prop_assert_eq!(g.dist_condition().holds, expected);
    }

    #[test]
    fn delta_is_even(g in graph_strategy(10), s_mask in any::<u64>(), t_mask in any::<u64>()) {
        let n = g.vertex_count();
        let s = subset(n, s_mask);
        let t = subset(n, t_mask & !s_mask);
        prop_assert_eq!(delta(&g, &s, &t).unwrap() % 2, 0);
    }

    #[test]
    fn toughness_is_bounded_by_every_cutset(g in graph_strategy(9), mask in any::<u64>()) {
        let n = g.vertex_count();
        let s: BTreeSet<usize> = subset(n, mask).into_iter().collect();
        let c = count_components(&g, &s);
        let tau = toughness(&g).unwrap().value;
        if c >= 2 {
            let bound = ExactRational::new(s.len() as i64, c as i64);
            match &tau {
                ToughnessValue::Finite(r) => prop_assert!(*r <= bound),
                ToughnessValue::Infinite => prop_assert!(false, "finite cutset but infinite toughness"),
            }
        }
    }

    #[test]
    fn connectivity_is_at_least_twice_toughness(g in graph_strategy(9)) {
        if let ToughnessValue::Finite(t) = toughness(&g).unwrap().value {
            let kappa = vertex_connectivity(&g) as i64;
            prop_assert!(ExactRational::from_integer(kappa) >= ExactRational::from_integer(2) * t);
        }
    }

    #[test]
    fn toughness_is_monotone_under_edge_addition(g in graph_strategy(9), u in 0usize..9, v in 0usize..9) {
        let n = g.vertex_count();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        let mut h = g.clone();
        h.add_edge(u, v);
        let before = toughness(&g).unwrap().value;
        let after = toughness(&h).unwrap().value;
        match (before, after) {
            (ToughnessValue::Finite(a), ToughnessValue::Finite(b)) => prop_assert!(a <= b),
            (ToughnessValue::Infinite, ToughnessValue::Finite(_)) => prop_assert!(false),
            _ => {}
        }
    }

    #[test]
    fn berge_formula(mg in multigraph_strategy(12)) {
        let m = max_matching(&mg);
        prop_assert!(m.is_valid_in(&mg));
        let df = deficiency(&mg);
        prop_assert_eq!(2 * m.len() + df.deficiency, mg.vertex_count());
        let odd = mg.components_without(&df.witness).iter().filter(|c| c.len() % 2 == 1).count();
        prop_assert_eq!(odd - df.witness.len(), df.deficiency);
    }

    #[test]
    fn merged_matching_covers_both_sides(mg in multigraph_strategy(10), x_mask in any::<u64>()) {
        let n = mg.vertex_count();
        let x: BTreeSet<usize> = subset(n, x_mask).into_iter().collect();
        let bx = build_bx(&mg, &x);
        let xs: BTreeSet<usize> = bx.x_vertices().collect();
        let ys: BTreeSet<usize> = (0..bx.components.len()).map(|i| bx.component_vertex(i)).collect();
        if let (Ok(m1), Ok(m2)) = (bipartite_cover_matching(&bx.graph, &xs), bipartite_cover_matching(&bx.graph, &ys)) {
            let m = merge_matchings(&bx.graph, &m1, &xs, &m2, &ys);
            prop_assert!(m.is_valid_in(&bx.graph));
            let covered = m.covered(&bx.graph);
            prop_assert!(xs.is_subset(&covered) && ys.is_subset(&covered));
        }
    }

    #[test]
    fn contraction_smoothing_and_splitting_keep_counts(mg in multigraph_strategy(10), pick in any::<u64>()) {
        let n = mg.vertex_count();
        let e = mg.edge_count();
        // contract the component of vertex 0 in the subgraph on `pick`
        let group: BTreeSet<usize> = subset(n, pick | 1).into_iter().collect();
        let (g1, _) = mg.delete_vertices(&BTreeSet::new());
        if let Some(comp) = g1.components_without(&(0..n).filter(|v| !group.contains(v)).collect()).into_iter().find(|c| c.contains(&0)) {
            let inner = mg.internal_edge_count(&comp);
            let (c, map) = mg.contract_groups(std::slice::from_ref(&comp)).unwrap();
            prop_assert_eq!(c.vertex_count(), n - comp.len() + 1);
            prop_assert_eq!(c.edge_count(), e - inner);
            // each new vertex records its origin; together they partition V
            prop_assert_eq!(map.images.len(), c.vertex_count());
            let origins: Vec<usize> = map.images.iter().flatten().copied().collect();
            prop_assert_eq!(origins.len(), n);
            prop_assert_eq!(origins.iter().collect::<BTreeSet<_>>().len(), n);
        }
        for v in 0..n {
            let ends: Vec<usize> = mg.incident(v).collect();
            if ends.len() == 2 && mg.other_end(ends[0], v) != mg.other_end(ends[1], v) {
                let (s, _, rec) = mg.smooth_degree2(v).unwrap();
                prop_assert_eq!(s.vertex_count(), n - 1);
                prop_assert_eq!(s.edge_count(), e - 1);
                prop_assert_ne!(rec.ends.0, rec.ends.1);
            }
            if ends.len() >= 2 {
                let groups: Vec<Vec<usize>> = ends.chunks(2).map(<[usize]>::to_vec).collect();
                let (s, carriers) = mg.split_vertex(v, &groups).unwrap();
                prop_assert_eq!(s.vertex_count(), n + groups.len() - 1);
                prop_assert_eq!(s.edge_count(), e);
                for (gi, c) in carriers.iter().enumerate() {
                    prop_assert_eq!(s.degree(*c), groups[gi].len());
                }
            }
        }
    }

    #[test]
    fn generated_triangulations_are_plane(n in 4usize..30, seed in any::<u64>(), flips in 0usize..60) {
        for (g, emb) in [apollonian(n, seed).unwrap(), random_flip_triangulation(n, seed, flips).unwrap()] {
            prop_assert_eq!(g.edge_count(), 3 * n - 6);
            prop_assert_eq!(emb.euler_residual(&g).unwrap(), 0);
            prop_assert!(emb.is_plane_triangulation(&g).unwrap());
            let faces = emb.faces().unwrap();
            prop_assert_eq!(faces.len(), 2 * n - 4);
            let mut darts = BTreeSet::new();
            for f in &faces {
                for i in 0..f.len() {
                    prop_assert!(darts.insert((f[i], f[(i + 1) % f.len()])));
                }
            }
            prop_assert_eq!(darts.len(), 2 * g.edge_count());
        }
    }

    #[test]
    fn generators_are_deterministic(n in 4usize..25, seed in any::<u64>(), flips in 0usize..40) {
        for kind in [GeneratorKind::Apollonian, GeneratorKind::RandomFlip { flips }, GeneratorKind::Stellation] {
            if kind == GeneratorKind::Stellation && n < 5 {
                continue;
            }
            let spec = GeneratorSpec { kind, n, seed, base: None };
            prop_assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
        }
    }

    #[test]
    fn stellation_degree_three_count(n in 4usize..16, seed in any::<u64>(), pick in any::<u64>()) {
        let (g, emb) = apollonian(n, seed).unwrap();
        let faces = emb.faces().unwrap();
        let chosen: Vec<usize> = (0..faces.len()).filter(|&f| pick >> (f % 64) & 1 == 1).collect();
        let cubic = |h: &Graph| (0..h.vertex_count()).filter(|&v| h.degree(v) == 3).count();
        let corners: BTreeSet<usize> = chosen
            .iter()
            .flat_map(|&f| faces[f].iter().copied())
            .filter(|&v| g.degree(v) == 3)
            .collect();
        let (h, hemb) = stellate(&g, &emb, &chosen).unwrap();
        prop_assert_eq!(cubic(&h), cubic(&g) + chosen.len() - corners.len());
        prop_assert!(hemb.is_plane_triangulation(&h).unwrap());
        prop_assert_eq!(h.edge_count(), g.edge_count() + 3 * chosen.len());
    }
}

#[test]
fn quota_matching_examples() {
    // three Y1 components, each attached to its own X vertex
    let mut b = Multigraph::new(6);
    for i in 0..3 {
        b.add_edge(i, 3 + i).unwrap();
    }
    let y1: BTreeSet<usize> = (3..6).collect();
    let m = cover_matching_with_quota(&b, &BTreeSet::new(), &y1, &BTreeSet::new()).unwrap();
    assert!(!m.is_empty());
    let empty = Multigraph::new(0);
    assert!(cover_matching_with_quota(&empty, &BTreeSet::new(), &BTreeSet::new(), &BTreeSet::new())
        .unwrap()
        .is_empty());
}

#[test]
fn stellating_named_bases() {
    let (k4, e4) = tutte_toughness::embedding::named::tetrahedron();
    let (g, _) = stellate(&k4, &e4, &[0, 1, 2, 3]).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (8, 18));
    let (oct, eo) = tutte_toughness::embedding::named::octahedron();
    let (g, _) = stellate(&oct, &eo, &(0..8).collect::<Vec<_>>()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (14, 36));
    match toughness(&g).unwrap().value {
        ToughnessValue::Finite(t) => assert!(t <= ExactRational::new(3, 4)),
        ToughnessValue::Infinite => panic!(),
    }
    assert_eq!(stellate(&k4, &e4, &[]).unwrap().0, k4);
    assert!(stellate(&k4, &e4, &[4]).is_err());
}
