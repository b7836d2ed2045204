//! Independent oracles and generators for the pcube test suites.
//!
//! Nothing in here calls the algorithm it is meant to check: distances come
//! from Floyd-Warshall, embeddability from exhaustive search, isomorphism
//! from individualization-refinement canonical forms.

use std::collections::{BTreeSet, HashSet, VecDeque};

use pcube::constructions::{expand, ExpansionSpec};
use pcube::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub const INF: u32 = u32::MAX / 4;

/// All-pairs distances by Floyd-Warshall on the raw edge list.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Semicube `W_ab` straight from the definition.
pub fn semicube_oracle(d: &[Vec<u32>], a: usize, b: usize) -> BTreeSet<usize> {
    (0..d.len()).filter(|&w| d[w][a] < d[w][b]).collect()
}

/// Θ straight from the definition.
pub fn winkler_oracle(d: &[Vec<u32>], (x, y): (usize, usize), (u, v): (usize, usize)) -> bool {
    d[x][u] + d[y][v] != d[x][v] + d[y][u]
}

/// θ straight from the definition.
pub fn djokovic_oracle(d: &[Vec<u32>], (x, y): (usize, usize), (u, v): (usize, usize)) -> bool {
    let near = |w: usize| d[w][x] < d[w][y];
    let far = |w: usize| d[w][y] < d[w][x];
    (near(u) && far(v)) || (far(u) && near(v))
}

/// Searches for sets (as bitmasks over `|E|` labels) whose Hamming distances
/// equal graph distances. Vertices are placed in BFS order; each new vertex
/// differs from its BFS parent in one label, and fresh labels are only ever
/// introduced in increasing order.
pub fn brute_force_hypercube(g: &Graph) -> Option<Vec<u64>> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(vec![]);
    }
    let d = floyd(g);
    if d[0].iter().any(|&x| x >= INF) {
        return None;
    }
    let labels = g.edge_count();
    assert!(
        labels <= 64,
        "label set too large for the brute-force oracle"
    );
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut q = VecDeque::from([0]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                order.push(w);
                q.push_back(w);
            }
        }
    }
    let mut assign = vec![0u64; n];

    fn rec(
        i: usize,
        used: usize,
        order: &[usize],
        parent: &[usize],
        d: &[Vec<u32>],
        labels: usize,
        assign: &mut Vec<u64>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let p = assign[parent[v]];
        for bit in 0..labels.min(used + 1) {
            let cand = p ^ (1u64 << bit);
            let ok = order[..i]
                .iter()
                .all(|&u| (assign[u] ^ cand).count_ones() == d[u][v]);
            if ok {
                assign[v] = cand;
                if rec(i + 1, used.max(bit + 1), order, parent, d, labels, assign) {
                    return true;
                }
            }
        }
        false
    }
    rec(1, 0, &order, &parent, &d, labels, &mut assign).then_some(assign)
}

/// Whether `g` embeds isometrically in `Z^dim` with the ℓ1 metric, by
/// exhaustive search over unit steps from BFS parents.
pub fn brute_force_lattice_embeddable(g: &Graph, dim: usize) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    if dim == 0 {
        return false;
    }
    let d = floyd(g);
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut q = VecDeque::from([0]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                order.push(w);
                q.push_back(w);
            }
        }
    }
    let mut coords = vec![vec![0i64; dim]; n];

    fn rec(
        i: usize,
        used: usize,
        order: &[usize],
        parent: &[usize],
        d: &[Vec<u32>],
        coords: &mut Vec<Vec<i64>>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let dim = coords[0].len();
        // axes beyond the first unused one are interchangeable
        for axis in 0..dim.min(used + 1) {
            for step in [1i64, -1] {
                if axis == used && step == -1 {
                    continue;
                }
                let mut c = coords[parent[v]].clone();
                c[axis] += step;
                let ok = order[..i].iter().all(|&u| {
                    coords[u]
                        .iter()
                        .zip(&c)
                        .map(|(a, b)| a.abs_diff(*b))
                        .sum::<u64>()
                        == d[u][v] as u64
                });
                if ok {
                    coords[v] = c;
                    if rec(i + 1, used.max(axis + 1), order, parent, d, coords) {
                        return true;
                    }
                }
            }
        }
        false
    }
    rec(1, 0, &order, &parent, &d, &mut coords)
}

/// Maximum matching size by exhaustive branch and bound.
pub fn brute_force_matching_size(n: usize, edges: &[(usize, usize)]) -> usize {
    fn rec(edges: &[(usize, usize)], i: usize, used: &mut [bool], size: usize, best: &mut usize) {
        if size + (edges.len() - i) <= *best {
            return;
        }
        if i == edges.len() {
            *best = size;
            return;
        }
        let (u, v) = edges[i];
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            rec(edges, i + 1, used, size + 1, best);
            used[u] = false;
            used[v] = false;
        }
        rec(edges, i + 1, used, size, best);
    }
    let mut best = 0;
    rec(edges, 0, &mut vec![false; n], 0, &mut best);
    best
}

/// Members as bitmasks; sequence-based well-gradedness: every pair is joined by
/// a chain of single-element steps inside the family of length `|P Δ Q|`.
pub fn well_graded_by_sequences(members: &[u64]) -> bool {
    let n = members.len();
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for w in 0..n {
                if dist[w] == usize::MAX && (members[u] ^ members[w]).count_ones() == 1 {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        if (0..n).any(|t| dist[t] != (members[s] ^ members[t]).count_ones() as usize) {
            return false;
        }
    }
    true
}

/// Canonical form: the lexicographically largest upper-triangle adjacency
/// string over all orderings reachable by individualization-refinement.
/// Two graphs are isomorphic iff their canonical forms are equal.
pub fn canonical_form(g: &Graph) -> (usize, Vec<bool>) {
    let n = g.vertex_count();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let mut best: Option<Vec<bool>> = None;
    let colors = refine(&adj, vec![0; n]);
    search(&adj, colors, &mut best);
    (n, best.unwrap_or_default())
}

fn refine(adj: &[Vec<bool>], mut colors: Vec<usize>) -> Vec<usize> {
    let n = adj.len();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[v][w]).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).unwrap())
            .collect();
        let classes_before = colors.iter().collect::<HashSet<_>>().len();
        colors = next;
        if distinct.len() == classes_before {
            return colors;
        }
    }
}

fn search(adj: &[Vec<bool>], colors: Vec<usize>, best: &mut Option<Vec<bool>>) {
    let n = adj.len();
    let mut counts = vec![0; n];
    for &c in &colors {
        counts[c] += 1;
    }
    match (0..n).find(|&c| counts[c] > 1) {
        None => {
            let mut order = vec![0; n];
            for v in 0..n {
                order[colors[v]] = v;
            }
            let code: Vec<bool> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| adj[order[i]][order[j]])
                .collect();
            if best.as_ref().is_none_or(|b| code > *b) {
                *best = Some(code);
            }
        }
        Some(cell) => {
            for v in (0..n).filter(|&v| colors[v] == cell) {
                let split: Vec<usize> = (0..n)
                    .map(|w| match colors[w].cmp(&cell) {
                        std::cmp::Ordering::Less => 2 * colors[w],
                        std::cmp::Ordering::Equal => 2 * cell + usize::from(w != v),
                        std::cmp::Ordering::Greater => 2 * colors[w],
                    })
                    .collect();
                search(adj, refine(adj, split), best);
            }
        }
    }
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && canonical_form(g) == canonical_form(h)
}

fn graph_from_edges(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_indexed((0..n).map(|i| i.to_string()).collect(), edges).expect("simple graph")
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices, for each `n` in `0..=max_n`.
pub fn all_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![graph_from_edges(0, vec![])]];
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        for g in &levels[n - 1] {
            for mask in 0u64..1 << (n - 1) {
                let mut edges = g.edges().to_vec();
                edges.extend(
                    (0..n - 1)
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| (b, n - 1)),
                );
                let h = graph_from_edges(n, edges);
                if seen.insert(canonical_form(&h)) {
                    level.push(h);
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// Connected graphs on `1..=max_n` vertices, one per isomorphism class.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    all_graphs(max_n)
        .into_iter()
        .skip(1)
        .flatten()
        .filter(Graph::is_connected)
        .collect()
}

/// Uniform random labeled tree on `n >= 1` vertices via a Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n <= 2 {
        return graph_from_edges(n, (1..n).map(|i| (0, i)).collect());
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    graph_from_edges(n, edges)
}

/// Random connected graph: a random tree plus each remaining pair with
/// probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let tree = random_tree(rng, n);
    let mut edges = tree.edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    graph_from_edges(n, edges)
}

fn isometric(g: &Graph, s: &VertexSet) -> bool {
    !s.is_empty() && matches!(g.is_isometric_subset(s), Ok(true))
}

/// Candidate isometric vertex sets for the next expansion of `g`.
fn isometric_candidates<R: Rng>(rng: &mut R, g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let all: VertexSet = (0..n).collect();
    let mut out = vec![all];
    for &(a, b) in g.edges() {
        for (x, y) in [(a, b), (b, a)] {
            let w: VertexSet = (0..n).filter(|&v| g.dist(v, x) < g.dist(v, y)).collect();
            out.push(w);
        }
    }
    for _ in 0..4 {
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let dxy = g.dist(x, y).unwrap();
        // a random geodesic from x to y
        let mut path = VertexSet::from([x]);
        let mut cur = x;
        while cur != y {
            let next: Vec<usize> = g
                .neighbors(cur)
                .iter()
                .copied()
                .filter(|&w| g.dist(w, y).unwrap() + 1 == g.dist(cur, y).unwrap())
                .collect();
            cur = *next.choose(rng).unwrap();
            path.insert(cur);
        }
        debug_assert_eq!(path.len() as u32, dxy + 1);
        out.push(path);
        // interval between x and y
        let interval: VertexSet = (0..n)
            .filter(|&z| g.dist(x, z).unwrap() + g.dist(z, y).unwrap() == dxy)
            .collect();
        out.push(interval);
        // ball around x
        let r = rng.gen_range(0..=2);
        out.push((0..n).filter(|&z| g.dist(x, z).unwrap() <= r).collect());
    }
    out.retain(|s| isometric(g, s));
    out
}

/// One random valid expansion spec for a connected graph `g`.
pub fn random_expansion_spec<R: Rng>(rng: &mut R, g: &Graph) -> ExpansionSpec {
    let n = g.vertex_count();
    let all: VertexSet = (0..n).collect();
    let candidates = isometric_candidates(rng, g);
    for _ in 0..16 {
        let a = candidates.choose(rng).unwrap().clone();
        // b must contain everything outside a plus enough of a's boundary
        let boundary: VertexSet = a
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().any(|w| !a.contains(w)))
            .collect();
        let mut b: VertexSet = all.difference(&a).copied().chain(boundary).collect();
        if b.is_empty() || b.is_disjoint(&a) || !isometric(g, &b) {
            b = candidates.choose(rng).unwrap().clone();
            if a.union(&b).count() != n {
                b = all.clone();
            }
        }
        let spec = if rng.gen_bool(0.5) {
            ExpansionSpec { v1: a, v2: b }
        } else {
            ExpansionSpec { v1: b, v2: a }
        };
        if spec.validate(g).is_ok() {
            return spec;
        }
    }
    ExpansionSpec {
        v1: all.clone(),
        v2: all,
    }
}

/// Random partial cube with at most `max_vertices` vertices, built by
/// random expansions starting from `K_1`.
pub fn random_partial_cube<R: Rng>(rng: &mut R, max_vertices: usize) -> Graph {
    let mut g = graph_from_edges(1, vec![]);
    let target = rng.gen_range(1..=max_vertices);
    loop {
        let spec = random_expansion_spec(rng, &g);
        if spec.v1.len() + spec.v2.len() > target {
            break;
        }
        g = expand(&g, &spec).expect("random spec is valid");
        g = relabel(&g);
    }
    g
}

/// Same graph with labels `0..n`.
pub fn relabel(g: &Graph) -> Graph {
    graph_from_edges(g.vertex_count(), g.edges().to_vec())
}
