use std::collections::BTreeSet;

use pcube::constructions::*;
use pcube::dimensions::{isometric_dimension, lattice_dimension};
use pcube::family::{family_graph, SetFamily};
use pcube::graph::named::*;
use pcube::recognition::{embed_hypercube, is_partial_cube};
use pcube::{Error, Graph, VertexSet};
use pcube_testkit::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn small_cubes(max_n: usize) -> Vec<Graph> {
    connected_graphs(max_n)
        .into_iter()
        .filter(|g| is_partial_cube(g).unwrap())
        .collect()
}

fn random_cubes(seed: u64, count: usize, max_vertices: usize) -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_partial_cube(&mut rng, max_vertices))
        .collect()
}

fn dims(g: &Graph) -> (usize, usize) {
    (
        isometric_dimension(g).unwrap(),
        lattice_dimension(g).unwrap(),
    )
}

#[test]
fn products_are_partial_cubes_with_additive_dimensions() {
    let cubes = random_cubes(1, 40, 7);
    for pair in cubes.chunks(2) {
        let (g1, g2) = (&pair[0], &pair[1]);
        let p = cartesian_product(g1, g2);
        assert!(is_partial_cube(&p).unwrap());
        let ((i1, z1), (i2, z2)) = (dims(g1), dims(g2));
        assert_eq!(dims(&p), (i1 + i2, z1 + z2));
        let floyd1 = floyd(g1);
        let floyd2 = floyd(g2);
        let n2 = g2.vertex_count();
        for x in p.vertices() {
            for y in p.vertices() {
                let expected = floyd1[x / n2][y / n2] + floyd2[x % n2][y % n2];
                assert_eq!(p.dist(x, y), Some(expected));
            }
        }
    }
    let prism = cartesian_product(&path(2), &cycle(4));
    assert_eq!(isometric_dimension(&prism).unwrap(), 3);
    assert!(isomorphic(&relabel(&prism), &hypercube(3)));
    assert!(isomorphic(
        &relabel(&cartesian_product(&path(1), &cycle(6))),
        &cycle(6)
    ));
    assert_eq!(cartesian_product(&path(2), &path(2)).label(3), "(1|1)");
}

#[test]
fn pastings_are_partial_cubes_within_the_dimension_bounds() {
    let mut rng = StdRng::seed_from_u64(2);
    let cubes = random_cubes(3, 60, 8);
    for pair in cubes.chunks(2) {
        let (g1, g2) = (&pair[0], &pair[1]);
        let ((i1, z1), (i2, z2)) = (dims(g1), dims(g2));

        let a1 = rng.gen_range(0..g1.vertex_count());
        let a2 = rng.gen_range(0..g2.vertex_count());
        let v = vertex_paste(g1, a1, g2, a2).unwrap();
        assert!(is_partial_cube(&v).unwrap());
        let (iv, zv) = dims(&v);
        assert_eq!(iv, i1 + i2);
        assert!(z1.max(z2) <= zv && zv <= z1 + z2);

        if g1.edge_count() > 0 && g2.edge_count() > 0 {
            let (b1, c1) = g1.edges()[rng.gen_range(0..g1.edge_count())];
            let (b2, c2) = g2.edges()[rng.gen_range(0..g2.edge_count())];
            let e = edge_paste(g1, b1, c1, g2, b2, c2).unwrap();
            assert!(is_partial_cube(&e).unwrap());
            assert_eq!(e.edge_count(), g1.edge_count() + g2.edge_count() - 1);
            let (ie, ze) = dims(&e);
            assert_eq!(ie, i1 + i2 - 1);
            assert!(z1.max(z2) <= ze && ze <= z1 + z2);
        }
    }
}

#[test]
fn star_regimes() {
    // strict on both sides, equal to the maximum, equal to the sum
    let tree = edge_paste(&star(3), 1, 0, &star(3), 0, 2).unwrap();
    assert_eq!(tree.vertices().filter(|&v| tree.degree(v) == 1).count(), 4);
    assert_eq!(lattice_dimension(&tree).unwrap(), 2);

    let k16 = vertex_paste(&star(2), 0, &star(4), 0).unwrap();
    assert!(isomorphic(&relabel(&k16), &star(6)));
    assert_eq!(lattice_dimension(&k16).unwrap(), 3);

    let k15 = edge_paste(&star(3), 0, 1, &star(3), 0, 1).unwrap();
    assert!(isomorphic(&relabel(&k15), &star(5)));
    assert_eq!(lattice_dimension(&k15).unwrap(), 3);

    let k17 = edge_paste(&star(4), 0, 1, &star(4), 0, 1).unwrap();
    assert!(isomorphic(&relabel(&k17), &star(7)));
    assert_eq!(lattice_dimension(&k17).unwrap(), 4);

    let mut kn = path(2);
    for _ in 1..5 {
        kn = vertex_paste(&kn, 0, &path(2), 0).unwrap();
    }
    assert!(isomorphic(&relabel(&kn), &star(5)));
    assert_eq!(kn.label(0), "1:1:1:1:0");
}

fn blocks(g: &Graph) -> Vec<VertexSet> {
    // Hopcroft-Tarjan with an edge stack
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &Graph,
        u: usize,
        parent: usize,
        t: &mut usize,
        disc: &mut [usize],
        low: &mut [usize],
        stack: &mut Vec<(usize, usize)>,
        out: &mut Vec<VertexSet>,
    ) {
        *t += 1;
        disc[u] = *t;
        low[u] = *t;
        for &w in g.neighbors(u) {
            if disc[w] == 0 {
                stack.push((u, w));
                dfs(g, w, u, t, disc, low, stack, out);
                low[u] = low[u].min(low[w]);
                if low[w] >= disc[u] {
                    let mut block = VertexSet::new();
                    while let Some((x, y)) = stack.pop() {
                        block.insert(x);
                        block.insert(y);
                        if (x, y) == (u, w) {
                            break;
                        }
                    }
                    out.push(block);
                }
            } else if w != parent && disc[w] < disc[u] {
                stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
        }
    }
    let n = g.vertex_count();
    let (mut disc, mut low, mut out) = (vec![0; n], vec![0; n], Vec::new());
    dfs(
        g,
        0,
        usize::MAX,
        &mut 0,
        &mut disc,
        &mut low,
        &mut Vec::new(),
        &mut out,
    );
    out
}

#[test]
fn isometric_dimension_is_additive_over_blocks() {
    let mut rng = StdRng::seed_from_u64(4);
    let pieces = random_cubes(5, 60, 6);
    for chunk in pieces.chunks(3) {
        let mut g = chunk[0].clone();
        for h in &chunk[1..] {
            let a = rng.gen_range(0..g.vertex_count());
            let b = rng.gen_range(0..h.vertex_count());
            g = relabel(&vertex_paste(&g, a, h, b).unwrap());
        }
        let bs = blocks(&g);
        if g.edge_count() > 0 {
            let covered: usize = bs
                .iter()
                .map(|b| g.induced_subgraph(b).unwrap().edge_count())
                .sum();
            assert_eq!(covered, g.edge_count());
        }
        let sum: usize = bs
            .iter()
            .map(|b| isometric_dimension(&g.induced_subgraph(b).unwrap()).unwrap())
            .sum();
        assert_eq!(sum, isometric_dimension(&g).unwrap());
    }
}

fn all_valid_specs(g: &Graph) -> Vec<ExpansionSpec> {
    let n = g.vertex_count();
    let set = |mask: u32| -> VertexSet { (0..n).filter(|b| mask >> b & 1 == 1).collect() };
    let mut specs = Vec::new();
    for m1 in 1u32..1 << n {
        for m2 in 1u32..1 << n {
            if (m1 | m2) != (1 << n) - 1 || m1 & m2 == 0 {
                continue;
            }
            let spec = ExpansionSpec {
                v1: set(m1),
                v2: set(m2),
            };
            if spec.validate(g).is_ok() {
                specs.push(spec);
            }
        }
    }
    specs
}

/// Contracts along the matching edge of the first shared vertex.
fn undo(expanded: &Graph, spec: &ExpansionSpec) -> Graph {
    let x = *spec.v1.intersection(&spec.v2).next().unwrap();
    let one = spec.v1.iter().position(|&v| v == x).unwrap();
    let two = spec.v1.len() + spec.v2.iter().position(|&v| v == x).unwrap();
    contract(expanded, one, two).unwrap()
}

#[test]
fn contraction_undoes_every_expansion_of_small_partial_cubes() {
    for g in small_cubes(5) {
        for spec in all_valid_specs(&g) {
            let h = expand(&g, &spec).unwrap();
            assert_eq!(h.vertex_count(), spec.v1.len() + spec.v2.len());
            assert!(is_partial_cube(&h).unwrap());
            assert_eq!(
                isometric_dimension(&h).unwrap(),
                isometric_dimension(&g).unwrap() + 1
            );
            assert!(isomorphic(&relabel(&undo(&h, &spec)), &g), "{g:?} {spec:?}");
        }
    }
}

#[test]
fn contraction_undoes_random_expansions() {
    let mut rng = StdRng::seed_from_u64(6);
    for g in random_cubes(7, 200, 10) {
        let spec = random_expansion_spec(&mut rng, &g);
        let h = expand(&g, &spec).unwrap();
        assert!(is_partial_cube(&h).unwrap());
        assert!(isomorphic(&relabel(&undo(&h, &spec)), &g));
    }
}

#[test]
fn contraction_decrements_isometric_dimension() {
    for g in random_cubes(8, 100, 12) {
        for &(a, b) in g.edges() {
            let c = contract(&g, a, b).unwrap();
            assert!(is_partial_cube(&c).unwrap());
            assert_eq!(
                isometric_dimension(&c).unwrap() + 1,
                isometric_dimension(&g).unwrap()
            );
        }
    }
}

/// Expansion through the set-family side: members of the first side keep
/// their sets, members of the second side gain a fresh element.
fn family_expansion(g: &Graph, spec: &ExpansionSpec) -> Graph {
    let emb = embed_hypercube(g).unwrap();
    let fresh = emb.labels.len();
    let mut ground = emb.labels.clone();
    ground.push("fresh".into());
    let mut members: Vec<BTreeSet<usize>> =
        spec.v1.iter().map(|&v| emb.assignment[v].clone()).collect();
    members.extend(spec.v2.iter().map(|&v| {
        let mut s = emb.assignment[v].clone();
        s.insert(fresh);
        s
    }));
    family_graph(&SetFamily::from_indexed(ground, members).unwrap())
}

#[test]
fn expansion_matches_the_set_family_construction() {
    let mut rng = StdRng::seed_from_u64(9);
    for g in small_cubes(6).into_iter().chain(random_cubes(10, 100, 10)) {
        let spec = random_expansion_spec(&mut rng, &g);
        let h = expand(&g, &spec).unwrap();
        let oracle = family_expansion(&g, &spec);
        assert_eq!(h.edges().len(), oracle.edges().len());
        for &(u, v) in h.edges() {
            assert!(oracle.has_edge(u, v), "{g:?} {spec:?}");
        }
    }
}

#[test]
fn expansion_distances_across_sides() {
    let mut rng = StdRng::seed_from_u64(12);
    for g in random_cubes(13, 100, 9) {
        let spec = random_expansion_spec(&mut rng, &g);
        let h = expand(&g, &spec).unwrap();
        let n1 = spec.v1.len();
        for (i, &u) in spec.v1.iter().enumerate() {
            for (j, &v) in spec.v2.iter().enumerate() {
                assert_eq!(h.dist(i, n1 + j).unwrap(), g.dist(u, v).unwrap() + 1);
            }
        }
    }
}

#[test]
fn expansion_sequences_replay_to_the_input() {
    for g in small_cubes(6).into_iter().chain(random_cubes(14, 100, 12)) {
        let seq = expansion_sequence(&g).unwrap();
        assert_eq!(seq.len(), isometric_dimension(&g).unwrap());
        let graphs = seq.replay().unwrap();
        assert_eq!(graphs[0].vertex_count(), 1);
        for (step, graph) in seq.steps.iter().zip(&graphs[1..]) {
            assert_eq!(step.result_size, graph.vertex_count());
            assert_eq!(step.result_size, step.spec.v1.len() + step.spec.v2.len());
        }
        assert!(isomorphic(&relabel(graphs.last().unwrap()), &relabel(&g)));
    }
}

#[test]
fn known_constructions() {
    let c4 = cycle(4);
    let c6 = expand(&c4, &ExpansionSpec::new([0, 1, 2], [2, 3, 0])).unwrap();
    assert!(isomorphic(&relabel(&c6), &cycle(6)));
    let fig = expand(&c4, &ExpansionSpec::new([0, 1, 2], [0, 1, 2, 3])).unwrap();
    assert_eq!((fig.vertex_count(), fig.edge_count()), (7, 9));
    assert!(is_partial_cube(&fig).unwrap());
    let k2 = expand(&path(1), &ExpansionSpec::new([0], [0])).unwrap();
    assert!(isomorphic(&relabel(&k2), &path(2)));
    assert_eq!(k2.labels(), ["0^1", "0^2"]);

    for &(a, b) in cycle(6).edges() {
        assert!(isomorphic(
            &relabel(&contract(&cycle(6), a, b).unwrap()),
            &c4
        ));
    }
    assert_eq!(contract(&path(2), 0, 1).unwrap().vertex_count(), 1);
    let q3 = hypercube(3);
    for &(a, b) in q3.edges() {
        let c = contract(&q3, a, b).unwrap();
        assert!(isomorphic(&relabel(&c), &c4));
    }
    assert!(expansion_sequence(&path(1)).unwrap().is_empty());
    assert_eq!(expansion_sequence(&c4).unwrap().len(), 2);
    assert_eq!(expansion_sequence(&cycle(6)).unwrap().len(), 3);
}

#[test]
fn construction_errors() {
    let c4 = cycle(4);
    assert!(matches!(
        expand(&c4, &ExpansionSpec::new([0, 1], [2, 3])),
        Err(Error::NotCovering(_))
    ));
    assert!(matches!(
        expand(&c4, &ExpansionSpec::new([0, 2], [0, 1, 2, 3])),
        Err(Error::NotIsometricSubgraph)
    ));
    let p3 = path(3);
    assert!(matches!(
        expand(&p3, &ExpansionSpec::new([0, 1], [2])),
        Err(Error::NotCovering(_))
    ));
    assert!(matches!(contract(&c4, 0, 2), Err(Error::NotAnEdge(..))));
    assert!(matches!(
        contract(&cycle(5), 0, 1),
        Err(Error::NotAPartition(..))
    ));
    assert!(matches!(
        contract(&complete_bipartite(2, 3), 0, 2),
        Err(Error::NonConvexSemicube(..))
    ));
    assert!(matches!(
        vertex_paste(&c4, 9, &c4, 0),
        Err(Error::UnknownVertex(_))
    ));
    assert!(matches!(
        edge_paste(&c4, 0, 2, &c4, 0, 1),
        Err(Error::NotAnEdge(..))
    ));
    assert!(matches!(
        expansion_sequence(&cycle(5)),
        Err(Error::NotPartialCube)
    ));
}

#[test]
fn pasting_hexagons_along_a_two_edge_path_leaves_the_class() {
    let c6 = cycle(6);
    let paths: Vec<[usize; 3]> = (0..6)
        .flat_map(|s| [[s, (s + 1) % 6, (s + 2) % 6], [(s + 2) % 6, (s + 1) % 6, s]])
        .collect();
    let mut failures = 0;
    for p in &paths {
        for q in &paths {
            let map = PasteMap {
                pairs: p.iter().copied().zip(q.iter().copied()).collect(),
            };
            let g = paste(&c6, &c6, &map).unwrap();
            assert_eq!(g.vertex_count(), 9);
            if !is_partial_cube(&g).unwrap() {
                failures += 1;
            }
        }
    }
    assert_eq!(failures, paths.len() * paths.len());
    let pinned = paste(
        &c6,
        &c6,
        &PasteMap {
            pairs: vec![(0, 0), (1, 1), (2, 2)],
        },
    )
    .unwrap();
    assert!(!is_partial_cube(&pinned).unwrap());
    assert!(brute_force_hypercube(&pinned).is_none());
}
