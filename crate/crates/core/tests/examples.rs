mod common;

use std::collections::BTreeSet;

use brickcheck::analysis::{
    analyze, covers_cut, extremal_insertion_check, is_brick_elp, is_extremal, is_tight_cut,
    lemma1_brick_test, solid_status, AnalysisOptions, SolidRequest, SolidStatus,
};
use brickcheck::constructions::{
    build_family, build_g0, build_g_prime_t, build_g_t, canonical_matching, complete_graph, cycle,
    edges_by_labels, path, prism, s_subset, splice, triangle_insert, wheel, FamilyParams,
};
use brickcheck::graph::{
    is_isomorphic, read_graph, vertex_connectivity_at_least, write_dot, write_graph,
};
use brickcheck::matching::{
    count_perfect_matchings, enumerate_perfect_matchings, has_perfect_matching, matchings_through,
    solitary_edges,
};
use brickcheck::verifier::{verify_claims, verify_theorem};
use brickcheck::{EdgeId, Error, MultiGraph, VertexId};

fn top_layer(g: &MultiGraph, t: usize) -> BTreeSet<VertexId> {
    let mut names: Vec<String> = (1..=4).map(|j| format!("u_{t}^{j}")).collect();
    names.push("u".into());
    names
        .iter()
        .map(|n| g.vertex_by_label(n).unwrap())
        .collect()
}

#[test]
fn carrier_basics() {
    let mut g = MultiGraph::new();
    let a = g.add_vertex(Some("u'")).unwrap();
    let b = g.add_vertex(None).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (2, 0));
    assert_eq!(g.vertex_by_label("u'").unwrap(), a);
    let e1 = g.add_edge(a, b).unwrap();
    let e2 = g.add_edge(a, b).unwrap();
    assert_ne!(e1, e2);
    assert_eq!(g.multiplicity(a, b).unwrap(), 2);
    assert_eq!(g.add_edge(a, a), Err(Error::Loop(a)));
}

#[test]
fn cuts_and_contractions() {
    let k4 = complete_graph(4);
    assert_eq!(
        k4.edge_cut(&BTreeSet::from([VertexId(0)]))
            .unwrap()
            .edges
            .len(),
        3
    );
    let p = path(4);
    let cut = p
        .edge_cut(&BTreeSet::from([VertexId(0), VertexId(1)]))
        .unwrap();
    assert_eq!(cut.edges.len(), 1);
    let e = *cut.edges.iter().next().unwrap();
    assert_eq!(p.endpoints(e).unwrap(), (VertexId(1), VertexId(2)));

    let others: BTreeSet<VertexId> = (1..4).map(VertexId).collect();
    let (c, x) = k4.contract(&others, None).unwrap();
    assert_eq!(c.vertex_count(), 2);
    assert_eq!(c.multiplicity(x, VertexId(0)).unwrap(), 3);

    let rest = k4
        .delete_vertices(&BTreeSet::from([VertexId(0), VertexId(1)]))
        .unwrap();
    assert_eq!((rest.vertex_count(), rest.edge_count()), (2, 1));
    let w5 = wheel(5).unwrap();
    let rim = w5
        .delete_vertices(&BTreeSet::from([w5.vertex_by_label("h").unwrap()]))
        .unwrap();
    assert!(is_isomorphic(&rim, &cycle(5).unwrap()).unwrap().is_some());
}

#[test]
fn g_prime_1_top_layer() {
    let g = build_g_prime_t(1).unwrap();
    let side = top_layer(&g, 1);
    let cut = g.edge_cut(&side).unwrap();
    let m = edges_by_labels(
        &g,
        &[("u_0^1", "u_1^1"), ("u_0^4", "u_1^3"), ("u_1^2", "u'")],
    )
    .unwrap();
    assert!(m.is_subset(&cut.edges));
    // The contraction carries a triple spoke, so the wheel appears after
    // collapsing parallel edges.
    let (inner, _) = g.contract(&side, None).unwrap();
    assert!(is_isomorphic(&inner.simplify(), &wheel(5).unwrap())
        .unwrap()
        .is_some());
    assert!(!is_tight_cut(&g, &cut).unwrap());
    for t in 1..=3 {
        let g = build_g_prime_t(t).unwrap();
        let side = top_layer(&g, t);
        let outer: BTreeSet<VertexId> = g.vertices().filter(|v| !side.contains(v)).collect();
        let (w, hub) = g.contract(&outer, None).unwrap();
        let map = is_isomorphic(&w, &wheel(5).unwrap()).unwrap().expect("W5");
        assert_eq!(
            map.get(hub),
            Some(VertexId(0)),
            "contracted shore is the hub"
        );
        assert!(vertex_connectivity_at_least(&g, 3).unwrap());
    }
}

#[test]
fn bipartite_and_connectivity() {
    assert!(cycle(6).unwrap().is_bipartite());
    assert!(!complete_graph(4).is_bipartite());
    assert!(!build_family(18).unwrap().graph.is_bipartite());
    assert!(vertex_connectivity_at_least(&complete_graph(4), 3).unwrap());
    assert!(!vertex_connectivity_at_least(&cycle(6).unwrap(), 3).unwrap());
}

#[test]
fn isomorphism_and_io() {
    let k4 = complete_graph(4);
    assert!(is_isomorphic(&k4, &k4).unwrap().is_some());
    assert!(is_isomorphic(&k4, &cycle(4).unwrap()).unwrap().is_none());
    let (t, _) = triangle_insert(&k4, VertexId(2), None).unwrap();
    assert!(is_isomorphic(&t, &prism()).unwrap().is_some());

    let mut labelled = complete_graph(4);
    labelled.set_label(VertexId(1), Some("a")).unwrap();
    let back = read_graph(&write_graph(&labelled)).unwrap();
    assert!(is_isomorphic(&labelled, &back).unwrap().is_some());
    assert_eq!(back.vertex_by_label("a").unwrap(), VertexId(1));
    assert!(matches!(
        read_graph("2 1\nv 0\nv 3\ne 0 3 3\n"),
        Err(Error::Parse { .. })
    ));

    let dot = write_dot(&build_family(18).unwrap().graph);
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 29);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 18);
}

#[test]
fn matching_counts() {
    assert!(has_perfect_matching(&complete_graph(4)));
    assert!(!has_perfect_matching(&wheel(4).unwrap()));
    assert!(!has_perfect_matching(&path(3)));
    assert_eq!(count_perfect_matchings(&wheel(5).unwrap()).unwrap(), 5);
    assert_eq!(count_perfect_matchings(&build_g0().unwrap()).unwrap(), 9);
    assert_eq!(count_perfect_matchings(&complete_graph(4)).unwrap(), 3);
    assert_eq!(count_perfect_matchings(&MultiGraph::new()).unwrap(), 1);
    for (n, pm) in [(18, 12), (20, 13), (24, 15)] {
        assert_eq!(
            count_perfect_matchings(&build_family(n).unwrap().graph).unwrap(),
            pm,
            "n={n}"
        );
    }
}

#[test]
fn solitary_edges_examples() {
    let w5 = wheel(5).unwrap();
    let hub = w5.vertex_by_label("h").unwrap();
    let spokes: BTreeSet<EdgeId> = w5.incident_edges(hub).unwrap().clone();
    assert!(spokes.is_subset(&solitary_edges(&w5).unwrap()));
    for &s in &spokes {
        assert_eq!(matchings_through(&w5, s).unwrap().count, 1);
    }
    let k4 = complete_graph(4);
    assert_eq!(solitary_edges(&k4).unwrap().len(), 6);

    let f = build_family(22).unwrap();
    let uu = f.edge("u", "u'").unwrap();
    assert!(solitary_edges(&f.graph).unwrap().contains(&uu));

    let f = build_family(30).unwrap();
    let uu = f.edge("u", "u'").unwrap();
    let through = matchings_through(&f.graph, uu).unwrap();
    assert_eq!(through.count, 1);
    let mut expected = canonical_matching(&f).unwrap();
    expected.insert(uu);
    assert_eq!(through.matchings()[0].edge_set(), expected);
}

#[test]
fn solitary_uu_unique_matching() {
    for n in [22, 30, 38] {
        let f = build_family(n).unwrap();
        let g = f
            .graph
            .delete_vertices(&BTreeSet::from([
                f.vertex("u").unwrap(),
                f.vertex("u'").unwrap(),
            ]))
            .unwrap();
        let census = enumerate_perfect_matchings(&g).unwrap();
        assert_eq!(census.count, 1, "n={n}");
        assert_eq!(
            census.matchings()[0].edge_set(),
            canonical_matching(&f).unwrap(),
            "n={n}"
        );
    }
    assert_eq!(
        canonical_matching(&build_family(22).unwrap())
            .unwrap()
            .len(),
        10
    );
}

#[test]
fn brick_predicates() {
    for g in [complete_graph(4), wheel(5).unwrap(), build_g0().unwrap()] {
        assert!(is_brick_elp(&g));
        assert!(is_extremal(&g).unwrap());
    }
    assert!(!is_brick_elp(&cycle(6).unwrap()));
    assert!(!is_brick_elp(&common::cube()));
    assert!(is_extremal(&wheel(7).unwrap()).unwrap());
    for t in 1..=3 {
        assert!(is_brick_elp(&build_g_prime_t(t).unwrap()), "t={t}");
    }
}

#[test]
fn cover_pairs() {
    let g = build_g_prime_t(1).unwrap();
    let side = top_layer(&g, 1);
    let cut = g.edge_cut(&side).unwrap();
    for &x in &side {
        for y in g.vertices().filter(|y| !side.contains(y)) {
            assert!(!covers_cut(&g, &cut, x, y).unwrap());
        }
    }
    assert!(lemma1_brick_test(&g, &cut).unwrap());

    let k4 = complete_graph(4);
    let trivial = k4.edge_cut(&BTreeSet::from([VertexId(0)])).unwrap();
    assert!(covers_cut(&k4, &trivial, VertexId(0), VertexId(3)).unwrap());
}

#[test]
fn cover_pair_test_rejects_star_pair() {
    // Two K4s joined by three edges at a common vertex pair: the ends of the
    // cut on each side are single vertices, which cover it.
    let mut g = MultiGraph::new();
    let left: Vec<VertexId> = (0..4).map(|_| g.add_vertex(None).unwrap()).collect();
    let right: Vec<VertexId> = (0..4).map(|_| g.add_vertex(None).unwrap()).collect();
    for side in [&left, &right] {
        for i in 1..4 {
            for j in i + 1..4 {
                g.add_edge(side[i], side[j]).unwrap();
            }
        }
    }
    for i in 1..4 {
        g.add_edge(left[0], right[i]).unwrap();
        g.add_edge(right[0], left[i]).unwrap();
    }
    let cut = g
        .edge_cut(&BTreeSet::from([left[0], left[1], left[2], left[3]]))
        .unwrap();
    let verdict = lemma1_brick_test(&g, &cut);
    assert!(!matches!(verdict, Ok(true)), "{verdict:?}");
}

#[test]
fn insertion_checks() {
    let f18 = build_family(18).unwrap();
    assert!(extremal_insertion_check(&f18.graph, f18.vertex("u_1^2").unwrap()).unwrap());
    let h = f18.vertex("u_1^2").unwrap();
    let mut gone = f18.graph.neighbors(h).unwrap();
    gone.insert(h);
    let rest = f18.graph.delete_vertices(&gone).unwrap();
    let census = enumerate_perfect_matchings(&rest).unwrap();
    assert_eq!(census.count, 1);
    let mut pairs = brickcheck::constructions::canonical_matching_pairs(0);
    pairs.push(("u".into(), "u_1^4".into()));
    assert_eq!(
        census.matchings()[0].edge_set(),
        edges_by_labels(&rest, &pairs).unwrap()
    );

    let f22 = build_family(22).unwrap();
    assert!(extremal_insertion_check(&f22.graph, f22.vertex("u").unwrap()).unwrap());

    // A rim vertex of W5 and its neighbours leave one edge behind.
    let w5 = wheel(5).unwrap();
    let rim = w5.vertex_by_label("r_0").unwrap();
    let mut gone = w5.neighbors(rim).unwrap();
    gone.insert(rim);
    assert_eq!(
        count_perfect_matchings(&w5.delete_vertices(&gone).unwrap()).unwrap(),
        1
    );
    assert!(extremal_insertion_check(&w5, rim).unwrap());
}

#[test]
fn solidity() {
    assert_eq!(
        solid_status(&wheel(5).unwrap(), None).unwrap(),
        SolidStatus::Solid
    );
    assert_eq!(
        solid_status(&complete_graph(4), None).unwrap(),
        SolidStatus::Solid
    );
    let f = build_family(18).unwrap();
    let w = f.top_layer().unwrap();
    assert_eq!(
        solid_status(&f.graph, Some(&w)).unwrap(),
        SolidStatus::NonSolid(w)
    );
}

#[test]
fn generators() {
    assert!(is_isomorphic(&wheel(3).unwrap(), &complete_graph(4))
        .unwrap()
        .is_some());
    let w5 = wheel(5).unwrap();
    assert_eq!((w5.vertex_count(), w5.edge_count()), (6, 10));

    let k4 = complete_graph(4);
    let star_a: Vec<EdgeId> = k4
        .incident_edges(VertexId(0))
        .unwrap()
        .iter()
        .copied()
        .collect();
    let star_b: Vec<EdgeId> = k4
        .incident_edges(VertexId(1))
        .unwrap()
        .iter()
        .copied()
        .collect();
    for perm in [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ] {
        let theta: Vec<_> = (0..3).map(|i| (star_a[i], star_b[perm[i]])).collect();
        let s = splice(&k4, VertexId(0), &k4, VertexId(1), &theta).unwrap();
        assert!(
            is_isomorphic(&s.graph, &prism()).unwrap().is_some(),
            "{perm:?}"
        );
    }

    assert_eq!(build_g_t(1).unwrap().vertex_count(), 9);
    let g2 = build_g_t(2).unwrap();
    let deg2 = g2
        .vertices()
        .filter(|&v| g2.degree(v).unwrap() == 2)
        .count();
    let deg3 = g2
        .vertices()
        .filter(|&v| g2.degree(v).unwrap() == 3)
        .count();
    assert_eq!((deg2, deg3), (9, 4));
    for t in 1..=4 {
        assert_eq!(build_g_t(t).unwrap().vertex_count() % 2, 1);
        assert_eq!(s_subset(t, 4).unwrap().len(), 2 * t + 5);
        assert_eq!(s_subset(t, 1).unwrap().len(), 2 * t + 2);
        let diff: Vec<_> = s_subset(t, 3)
            .unwrap()
            .difference(&s_subset(t, 2).unwrap())
            .copied()
            .collect();
        let g = build_g_t(t).unwrap();
        assert_eq!(diff, vec![g.vertex_by_label(&format!("u_{t}^4")).unwrap()]);
    }
    let gp = build_g_prime_t(1).unwrap();
    assert_eq!((gp.vertex_count(), gp.edge_count()), (10, 17));

    let p = FamilyParams::from_n(18).unwrap();
    assert_eq!((p.t, p.i), (1, 2));
    assert_eq!(build_family(18).unwrap().triangles.len(), 4);
    let p = FamilyParams::from_n(40).unwrap();
    assert_eq!((p.t, p.i), (3, 8));

    let g0 = build_g0().unwrap();
    assert_eq!((g0.vertex_count(), g0.edge_count()), (14, 22));
}

#[test]
fn family_chain_example() {
    let f18 = build_family(18).unwrap();
    let (g20, _) = triangle_insert(&f18.graph, f18.vertex("u_1^2").unwrap(), None).unwrap();
    let map = brickcheck::graph::is_isomorphic_within(&build_family(20).unwrap().graph, &g20, 48)
        .unwrap();
    assert!(map.is_some());
}

#[test]
fn analyze_examples() {
    let opts = AnalysisOptions {
        tight_cuts: true,
        solid: SolidRequest::Exhaustive,
    };
    let r = analyze(
        &read_graph(&write_graph(&wheel(7).unwrap())).unwrap(),
        &opts,
    )
    .unwrap();
    assert!(r.is_brick && r.is_extremal);
    assert_eq!(r.pm_count, 7);
    assert_eq!(r.solid_status, Some(SolidStatus::Solid));

    let r = analyze(&path(4), &AnalysisOptions::default()).unwrap();
    assert!(!r.is_matching_covered);

    let g20 = read_graph(&write_graph(&build_family(20).unwrap().graph)).unwrap();
    let r = analyze(&g20, &AnalysisOptions::default()).unwrap();
    assert!(r.is_brick && r.is_extremal);
    assert_eq!(r.pm_count, 13);
}

#[test]
fn theorem_rows() {
    let rows = verify_theorem(18, 40).unwrap();
    assert_eq!(rows.len(), 12);
    let by_n = |n: usize| rows.iter().find(|r| r.n == n).unwrap();
    assert_eq!((by_n(18).pm_count, by_n(18).n_minus_1), (12, 17));
    assert!(by_n(26).is_brick && by_n(26).is_extremal);
    assert_eq!(by_n(26).pm_count, 17);
    assert_eq!(by_n(40).pm_count, 25);
    assert_eq!(rows, verify_theorem(18, 40).unwrap(), "deterministic");
}

#[test]
fn claims_report() {
    let report = verify_claims(3).unwrap();
    let failures: Vec<_> = report.failures().collect();
    assert!(failures.is_empty(), "{failures:#?}");
    let solitary: BTreeSet<&str> = report
        .checks
        .iter()
        .filter(|c| c.claim == "solitary uu'")
        .map(|c| c.instance.split(' ').next().unwrap())
        .collect();
    assert_eq!(solitary, BTreeSet::from(["G''_22", "G''_30", "G''_38"]));
}
