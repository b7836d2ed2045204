use std::collections::BTreeSet;

use pcube::family::*;
use pcube::graph::named::*;
use pcube::metric::{fundamental_sets, semicube, theta_partition};
use pcube::recognition::*;
use pcube::Graph;
use pcube_testkit::*;
use proptest::prelude::*;

#[test]
fn recognition_agrees_with_theta_and_rectangles_and_brute_force() {
    for g in connected_graphs(6) {
        let report = recognize(&g).unwrap();
        let brute = brute_force_hypercube(&g).is_some();
        assert_eq!(report.is_partial_cube, brute, "{g:?}");
        let via_theta = g.is_bipartite() && theta_partition(&g).unwrap().is_equivalence;
        assert_eq!(report.is_partial_cube, via_theta, "{g:?}");
        if g.is_bipartite() {
            assert_eq!(
                report.is_partial_cube,
                rectangle_check(&g).unwrap().is_none()
            );
        }
        match (&report.embedding, &report.failure_witness) {
            (Some(emb), None) => {
                assert!(report.is_partial_cube);
                assert!(verify_embedding(&g, emb).unwrap());
                assert_eq!(emb.labels.len(), theta_partition(&g).unwrap().len());
            }
            (None, Some(FailureWitness::NotBipartite { odd_walk })) => {
                assert_eq!(odd_walk.len() % 2, 1);
                for i in 0..odd_walk.len() {
                    assert!(g.has_edge(odd_walk[i], odd_walk[(i + 1) % odd_walk.len()]));
                }
            }
            (None, Some(FailureWitness::NonConvexSemicube { edge, x, y, z })) => {
                let w = semicube(&g, edge.0, edge.1).unwrap().w_ab;
                assert!(w.contains(x) && w.contains(y) && !w.contains(z));
                let d = floyd(&g);
                assert_eq!(d[*x][*z] + d[*z][*y], d[*x][*y]);
            }
            other => panic!("inconsistent report {other:?}"),
        }
    }
}

#[test]
fn label_bipartitions_are_semicube_pairs() {
    for g in connected_graphs(7) {
        let Ok(emb) = embed_hypercube(&g) else {
            continue;
        };
        assert!(emb.is_retracted());
        for &(p, q) in g.edges() {
            let diff: Vec<usize> = emb.assignment[p]
                .symmetric_difference(&emb.assignment[q])
                .copied()
                .collect();
            assert_eq!(diff.len(), 1);
            let with: BTreeSet<usize> = g
                .vertices()
                .filter(|&v| emb.assignment[v].contains(&diff[0]))
                .collect();
            let without: BTreeSet<usize> = g.vertices().filter(|v| !with.contains(v)).collect();
            let s = semicube(&g, p, q).unwrap();
            assert!((with == s.w_ab && without == s.w_ba) || (with == s.w_ba && without == s.w_ab));
        }
    }
}

#[test]
fn first_vertex_maps_to_empty_set() {
    for g in connected_graphs(6) {
        if let Ok(emb) = embed_hypercube(&g) {
            assert!(emb.assignment[0].is_empty());
        }
    }
}

/// Two hexagons sharing a path of length two.
fn glued_hexagons() -> Graph {
    let c6 = cycle(6);
    let map = pcube::constructions::PasteMap {
        pairs: vec![(0, 0), (1, 1), (2, 2)],
    };
    pcube::constructions::paste(&c6, &c6, &map).unwrap()
}

#[test]
fn matching_fundamental_set_does_not_imply_partial_cube() {
    let g = glued_hexagons();
    assert_eq!((g.vertex_count(), g.edge_count()), (9, 10));
    assert!(g.is_bipartite());
    assert!(!is_partial_cube(&g).unwrap());
    let fs = g
        .edges()
        .iter()
        .map(|&(a, b)| fundamental_sets(&g, a, b).unwrap())
        .find(|fs| {
            fs.f_ab.len() == 3
                && fs.matching_is_isomorphism(&g)
                && !(g.is_convex_subset(&fs.semicubes.w_ab).unwrap()
                    && g.is_convex_subset(&fs.semicubes.w_ba).unwrap())
        })
        .expect("a three-edge matching F_ab beside a non-convex semicube");
    assert_eq!((fs.u_ab.len(), fs.u_ba.len()), (3, 3));
}

/// Below seven vertices every such F_ab is a single edge.
#[test]
fn no_smaller_nontrivial_matching_witness() {
    for g in connected_graphs(6) {
        if !g.is_bipartite() || is_partial_cube(&g).unwrap() {
            continue;
        }
        for &(a, b) in g.edges() {
            let fs = fundamental_sets(&g, a, b).unwrap();
            assert!(fs.f_ab.len() == 1 || !fs.matching_is_isomorphism(&g));
        }
    }
}

fn family_from_masks(ground: usize, masks: &[u64]) -> SetFamily {
    let ground_labels = (0..ground).map(|i| format!("x{i}")).collect();
    let members = masks
        .iter()
        .map(|m| (0..ground).filter(|b| m >> b & 1 == 1).collect())
        .collect();
    SetFamily::from_indexed(ground_labels, members).unwrap()
}

fn masks_strategy() -> impl Strategy<Value = (usize, Vec<u64>)> {
    (1usize..5).prop_flat_map(|ground| {
        (
            Just(ground),
            proptest::collection::btree_set(0u64..1 << ground, 1..12)
                .prop_map(|s| s.into_iter().collect::<Vec<_>>()),
        )
    })
}

proptest! {
    #[test]
    fn local_well_gradedness_matches_sequence_definition((ground, masks) in masks_strategy()) {
        let fam = family_from_masks(ground, &masks);
        prop_assert_eq!(is_well_graded(&fam), well_graded_by_sequences(&masks));
    }

    #[test]
    fn family_graph_is_isometric_in_the_cube_iff_well_graded((ground, masks) in masks_strategy()) {
        let fam = family_from_masks(ground, &masks);
        let g = family_graph(&fam);
        let isometric = g.is_connected()
            && (0..fam.len()).all(|p| (0..fam.len()).all(|q| g.dist(p, q) == Some(fam.distance(p, q) as u32)));
        prop_assert_eq!(isometric, is_well_graded(&fam));
    }

    #[test]
    fn interval_is_metric_interval((ground, masks) in masks_strategy(), i: usize, j: usize) {
        let fam = family_from_masks(ground, &masks);
        let (p, q) = (i % fam.len(), j % fam.len());
        let metric: Vec<usize> = (0..fam.len())
            .filter(|&r| fam.distance(p, r) + fam.distance(r, q) == fam.distance(p, q))
            .collect();
        prop_assert_eq!(interval(&fam, p, q).unwrap(), metric);
    }

    #[test]
    fn retraction_is_an_isometry((ground, masks) in masks_strategy()) {
        let fam = family_from_masks(ground, &masks);
        let r = retraction(&fam).unwrap();
        prop_assert_eq!(r.len(), fam.len());
        for p in 0..fam.len() {
            for q in 0..fam.len() {
                prop_assert_eq!(r.distance(p, q), fam.distance(p, q));
            }
        }
        let union: BTreeSet<usize> = r.members().iter().flatten().copied().collect();
        prop_assert_eq!(union.len(), r.ground().len());
        let mut inter = r.members()[0].clone();
        for m in r.members() {
            inter.retain(|x| m.contains(x));
        }
        prop_assert!(inter.is_empty() || r.len() == 1 && r.members()[0].is_empty());
        // induced graphs are isomorphic under R -> R ∩ X'
        let (g, h) = (family_graph(&fam), family_graph(&r));
        prop_assert!(g.edges().iter().all(|&(u, v)| h.has_edge(u, v)));
        prop_assert_eq!(g.edge_count(), h.edge_count());
    }
}

#[test]
fn well_graded_families_induce_partial_cubes_of_dimension_ground() {
    // every partial cube's embedding is a retracted wg-family over its labels
    for g in connected_graphs(6) {
        let Ok(emb) = embed_hypercube(&g) else {
            continue;
        };
        let fam = SetFamily::from_indexed(emb.labels.clone(), emb.assignment.clone()).unwrap();
        assert!(is_well_graded(&fam));
        assert_eq!(retraction(&fam).unwrap(), fam);
        let h = family_graph(&fam);
        assert!(isomorphic(&g, &relabel(&h)));
        assert_eq!(
            pcube::dimensions::isometric_dimension(&h).unwrap(),
            fam.ground().len()
        );
    }
}

#[test]
fn example_path_in_the_cube_is_not_well_graded() {
    let sets: Vec<Vec<&str>> = vec![
        vec![],
        vec!["a"],
        vec!["a", "b"],
        vec!["a", "b", "c"],
        vec!["b", "c"],
    ];
    let fam = SetFamily::new(["a", "b", "c"], sets).unwrap();
    let (p, q) = well_graded_violation(&fam).unwrap();
    assert_eq!(
        (fam.member_name(p), fam.member_name(q)),
        ("{}".to_string(), "{b,c}".to_string())
    );
    let g = family_graph(&fam);
    assert!(isomorphic(&relabel(&g), &path(5)));
    // a path is a partial cube, just not on this ground set
    assert!(is_partial_cube(&g).unwrap());
}

#[test]
fn cube_subgraphs_from_random_families() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(21);
    for _ in 0..200 {
        let ground = rng.gen_range(1..6);
        let mut masks: Vec<u64> = (0..1u64 << ground).filter(|_| rng.gen_bool(0.5)).collect();
        if masks.is_empty() {
            masks.push(0);
        }
        let fam = family_from_masks(ground, &masks);
        let g: Graph = family_graph(&fam);
        if is_well_graded(&fam) {
            assert!(is_partial_cube(&g).unwrap());
        }
    }
}
