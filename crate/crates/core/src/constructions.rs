//! Building graphs from graphs: Cartesian products, pasting, expansion and
//! contraction, and the decomposition of a partial cube into expansions
//! starting from a single vertex.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::metric::fundamental_sets;
use crate::recognition::require_partial_cube;

/// Cartesian product. Vertex `(x, y)` is labeled `(x|y)`; vertices are
/// ordered with the first factor major.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let n2 = g2.vertex_count();
    let id = |x: Vertex, y: Vertex| x * n2 + y;
    let labels = g1
        .vertices()
        .flat_map(|x| g2.vertices().map(move |y| (x, y)))
        .map(|(x, y)| format!("({}|{})", g1.label(x), g2.label(y)))
        .collect();
    let mut edges = Vec::with_capacity(g1.vertex_count() * g2.edge_count() + n2 * g1.edge_count());
    for x in g1.vertices() {
        edges.extend(g2.edges().iter().map(|&(u, v)| (id(x, u), id(x, v))));
    }
    for &(u, v) in g1.edges() {
        edges.extend(g2.vertices().map(|y| (id(u, y), id(v, y))));
    }
    let product = Graph::from_indexed(labels, edges).expect("product of simple graphs is simple");
    if cfg!(debug_assertions) {
        for x in 0..product.vertex_count() {
            for y in 0..product.vertex_count() {
                let (x1, x2, y1, y2) = (x / n2, x % n2, y / n2, y % n2);
                if let (Some(a), Some(b)) = (g1.dist(x1, y1), g2.dist(x2, y2)) {
                    debug_assert_eq!(product.dist(x, y), Some(a + b));
                }
            }
        }
    }
    product
}

/// Identifications `(vertex of G1, vertex of G2)` for pasting two graphs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PasteMap {
    pub pairs: Vec<(Vertex, Vertex)>,
}

/// Glues `g1` and `g2` by identifying each pair of `map`.
///
/// The map must be injective on both sides and an isomorphism between the
/// subgraphs it induces. G1 vertices become `1:x`, the remaining G2 vertices
/// `2:y`; identified vertices keep their G1 name. Edges of G2 that land on an
/// existing G1 edge appear once.
///
/// Pasting along a vertex or an edge preserves partial cubes; pasting along
/// larger subgraphs in general does not.
pub fn paste(g1: &Graph, g2: &Graph, map: &PasteMap) -> Result<Graph> {
    let mut to_g1 = vec![usize::MAX; g2.vertex_count()];
    let mut seen1 = HashSet::new();
    for &(x, y) in &map.pairs {
        if x >= g1.vertex_count() || y >= g2.vertex_count() {
            return Err(Error::InvalidPasteMap(format!(
                "pair ({x}, {y}) out of range"
            )));
        }
        if !seen1.insert(x) || to_g1[y] != usize::MAX {
            return Err(Error::InvalidPasteMap("map is not injective".into()));
        }
        to_g1[y] = x;
    }
    for &(x1, y1) in &map.pairs {
        for &(x2, y2) in &map.pairs {
            if g1.has_edge(x1, x2) != g2.has_edge(y1, y2) {
                return Err(Error::InvalidPasteMap(format!(
                    "{}-{} and {}-{} disagree on adjacency",
                    g1.label(x1),
                    g1.label(x2),
                    g2.label(y1),
                    g2.label(y2)
                )));
            }
        }
    }
    let mut labels: Vec<String> = g1.labels().iter().map(|l| format!("1:{l}")).collect();
    let mut index2 = vec![0; g2.vertex_count()];
    for y in g2.vertices() {
        index2[y] = if to_g1[y] != usize::MAX {
            to_g1[y]
        } else {
            labels.push(format!("2:{}", g2.label(y)));
            labels.len() - 1
        };
    }
    let mut edges: Vec<Edge> = g1.edges().to_vec();
    for &(u, v) in g2.edges() {
        if !(to_g1[u] != usize::MAX && to_g1[v] != usize::MAX) {
            edges.push((index2[u], index2[v]));
        }
    }
    Graph::from_indexed(labels, edges)
}

/// Identifies `a1` in `g1` with `a2` in `g2`.
pub fn vertex_paste(g1: &Graph, a1: Vertex, g2: &Graph, a2: Vertex) -> Result<Graph> {
    check_vertex(g1, a1)?;
    check_vertex(g2, a2)?;
    g1.require_connected()?;
    g2.require_connected()?;
    paste(
        g1,
        g2,
        &PasteMap {
            pairs: vec![(a1, a2)],
        },
    )
}

/// Identifies the edge `a1b1` of `g1` with `a2b2` of `g2`, `a1` with `a2`.
pub fn edge_paste(
    g1: &Graph,
    a1: Vertex,
    b1: Vertex,
    g2: &Graph,
    a2: Vertex,
    b2: Vertex,
) -> Result<Graph> {
    check_vertex(g1, a1)?;
    check_vertex(g1, b1)?;
    check_vertex(g2, a2)?;
    check_vertex(g2, b2)?;
    g1.require_edge(a1, b1)?;
    g2.require_edge(a2, b2)?;
    g1.require_connected()?;
    g2.require_connected()?;
    paste(
        g1,
        g2,
        &PasteMap {
            pairs: vec![(a1, a2), (b1, b2)],
        },
    )
}

fn check_vertex(g: &Graph, v: Vertex) -> Result<()> {
    if v < g.vertex_count() {
        Ok(())
    } else {
        Err(Error::UnknownVertex(v.to_string()))
    }
}

/// Two isometric subgraphs covering a graph, given by their vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionSpec {
    pub v1: VertexSet,
    pub v2: VertexSet,
}

impl ExpansionSpec {
    pub fn new(v1: impl IntoIterator<Item = Vertex>, v2: impl IntoIterator<Item = Vertex>) -> Self {
        ExpansionSpec {
            v1: v1.into_iter().collect(),
            v2: v2.into_iter().collect(),
        }
    }

    /// Resolves both sides from vertex labels.
    pub fn from_labels<S: AsRef<str>>(g: &Graph, v1: &[S], v2: &[S]) -> Result<Self> {
        let resolve = |side: &[S]| -> Result<VertexSet> {
            side.iter().map(|l| g.vertex(l.as_ref())).collect()
        };
        Ok(ExpansionSpec {
            v1: resolve(v1)?,
            v2: resolve(v2)?,
        })
    }

    /// Checks that the sides cover all vertices and edges, intersect, and
    /// induce isometric subgraphs.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.require_connected()?;
        for v in self.v1.iter().chain(&self.v2) {
            check_vertex(g, *v)?;
        }
        if let Some(v) = g
            .vertices()
            .find(|v| !self.v1.contains(v) && !self.v2.contains(v))
        {
            return Err(Error::NotCovering(format!(
                "vertex {:?} in neither side",
                g.label(v)
            )));
        }
        let only = |s: &VertexSet, t: &VertexSet, v: Vertex| s.contains(&v) && !t.contains(&v);
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| {
            (only(&self.v1, &self.v2, u) && only(&self.v2, &self.v1, v))
                || (only(&self.v2, &self.v1, u) && only(&self.v1, &self.v2, v))
        }) {
            return Err(Error::NotCovering(format!(
                "edge {:?}-{:?} in neither side",
                g.label(u),
                g.label(v)
            )));
        }
        if self.v1.is_disjoint(&self.v2) {
            return Err(Error::EmptyIntersection);
        }
        for side in [&self.v1, &self.v2] {
            match g.is_isometric_subset(side) {
                Ok(true) => {}
                Ok(false) | Err(Error::DisconnectedSubset) => {
                    return Err(Error::NotIsometricSubgraph)
                }
                Err(e) => return Err(e),
            }
        }
        Ok(())
    }
}

/// Expansion of `g` along `spec`.
///
/// Side-1 copies `x^1` come first in vertex order, then side-2 copies `x^2`.
/// The two sides keep their induced edges and each `x` in both sides gets
/// the edge `x^1 x^2`.
pub fn expand(g: &Graph, spec: &ExpansionSpec) -> Result<Graph> {
    spec.validate(g)?;
    let n1 = spec.v1.len();
    let mut id1 = vec![usize::MAX; g.vertex_count()];
    let mut id2 = vec![usize::MAX; g.vertex_count()];
    let mut labels = Vec::with_capacity(n1 + spec.v2.len());
    for (i, &x) in spec.v1.iter().enumerate() {
        id1[x] = i;
        labels.push(format!("{}^1", g.label(x)));
    }
    for (i, &x) in spec.v2.iter().enumerate() {
        id2[x] = n1 + i;
        labels.push(format!("{}^2", g.label(x)));
    }
    let mut edges = Vec::new();
    for ids in [&id1, &id2] {
        edges.extend(
            g.edges()
                .iter()
                .filter(|&&(u, v)| ids[u] != usize::MAX && ids[v] != usize::MAX)
                .map(|&(u, v)| (ids[u], ids[v])),
        );
    }
    edges.extend(spec.v1.intersection(&spec.v2).map(|&x| (id1[x], id2[x])));
    let expanded = Graph::from_indexed(labels, edges)?;
    if cfg!(debug_assertions) {
        for &u in &spec.v1 {
            for &v in &spec.v2 {
                debug_assert_eq!(expanded.dist(id1[u], id2[v]), Some(g.d(u, v) + 1));
            }
        }
    }
    Ok(expanded)
}

/// A contraction together with how it maps the original vertices.
#[derive(Debug, Clone)]
struct Contraction {
    graph: Graph,
    w_ab: VertexSet,
    w_ba: VertexSet,
    /// Original vertex to contracted vertex.
    image: Vec<Vertex>,
}

fn contraction(g: &Graph, a: Vertex, b: Vertex) -> Result<Contraction> {
    check_vertex(g, a)?;
    check_vertex(g, b)?;
    g.require_edge(a, b)?;
    let fs = fundamental_sets(g, a, b)?;
    let (la, lb) = (g.label(a).to_string(), g.label(b).to_string());
    if !fs.semicubes.is_partition(g.vertex_count()) {
        return Err(Error::NotAPartition(la, lb));
    }
    if !g.is_convex_subset(&fs.semicubes.w_ab)? || !g.is_convex_subset(&fs.semicubes.w_ba)? {
        return Err(Error::NonConvexSemicube(la, lb));
    }
    if !fs.matching_is_isomorphism(g) {
        return Err(Error::MatchingNotIsomorphism(la, lb));
    }
    let mut partner = vec![usize::MAX; g.vertex_count()];
    for &(u, v) in &fs.f_ab {
        partner[v] = u;
    }
    let mut image = vec![usize::MAX; g.vertex_count()];
    let mut labels = Vec::new();
    for v in g.vertices().filter(|v| !fs.u_ba.contains(v)) {
        image[v] = labels.len();
        labels.push(g.label(v).to_string());
    }
    for &v in &fs.u_ba {
        image[v] = image[partner[v]];
    }
    let f: HashSet<Edge> = fs.f_ab.iter().copied().collect();
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        if f.contains(&(u, v)) || f.contains(&(v, u)) {
            continue;
        }
        let (x, y) = (image[u], image[v]);
        if seen.insert((x.min(y), x.max(y))) {
            edges.push((x, y));
        }
    }
    Ok(Contraction {
        graph: Graph::from_indexed(labels, edges)?,
        w_ab: fs.semicubes.w_ab,
        w_ba: fs.semicubes.w_ba,
        image,
    })
}

/// Contracts `g` along the edge `ab`: the two semicubes are glued along
/// their boundaries using the matching formed by the θ-class of `ab`.
///
/// Checks that the semicubes partition the vertices and are convex, and that
/// the θ-class is a matching inducing an isomorphism of the boundaries.
/// Vertices of `W_ab` and the non-boundary part of `W_ba` keep their labels;
/// boundary vertices of `W_ba` merge into their partners.
pub fn contract(g: &Graph, a: Vertex, b: Vertex) -> Result<Graph> {
    Ok(contraction(g, a, b)?.graph)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionStep {
    /// Sides, as vertex sets of the graph the step is applied to.
    pub spec: ExpansionSpec,
    pub result_size: usize,
}

/// Expansions leading from a single vertex to a partial cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionSequence {
    /// Label of the single starting vertex.
    pub base: String,
    pub steps: Vec<ExpansionStep>,
}

impl ExpansionSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The starting `K_1` followed by the graph after each step.
    pub fn replay(&self) -> Result<Vec<Graph>> {
        let mut graphs = vec![Graph::from_indexed(vec![self.base.clone()], vec![])?];
        for step in &self.steps {
            let next = expand(graphs.last().unwrap(), &step.spec)?;
            graphs.push(next);
        }
        Ok(graphs)
    }
}

/// Decomposes a partial cube into expansions of `K_1`.
///
/// Contracts along the first edge in canonical order until one vertex is
/// left, then replays the contractions backwards as expansions. The
/// sequence has one step per θ-class, and replaying it yields a graph
/// isomorphic to `g`; the isomorphism is checked before returning.
pub fn expansion_sequence(g: &Graph) -> Result<ExpansionSequence> {
    require_partial_cube(g)?;
    let mut contractions = Vec::new();
    let mut current = g.clone();
    while let Some(&(a, b)) = current.edges().first() {
        let c = contraction(&current, a, b).map_err(|_| Error::NotPartialCube)?;
        current = c.graph.clone();
        contractions.push(c);
    }
    assert_eq!(
        current.vertex_count(),
        1,
        "partial cube contracted to a single vertex"
    );

    let mut replay = Graph::from_indexed(vec![current.label(0).to_string()], vec![])?;
    // replay vertex -> vertex of the graph at the same stage of contraction
    let mut to_stage: Vec<Vertex> = vec![0];
    let mut steps = Vec::with_capacity(contractions.len());
    for c in contractions.iter().rev() {
        let lift = |side: &VertexSet| -> Vec<(Vertex, Vertex)> {
            // (replay vertex, original vertex of the larger stage)
            let mut pairs = Vec::new();
            for (r, &s) in to_stage.iter().enumerate() {
                if let Some(&w) = side.iter().find(|&&w| c.image[w] == s) {
                    pairs.push((r, w));
                }
            }
            pairs
        };
        let side1 = lift(&c.w_ab);
        let side2 = lift(&c.w_ba);
        let spec = ExpansionSpec::new(side1.iter().map(|p| p.0), side2.iter().map(|p| p.0));
        replay = expand(&replay, &spec)?;
        to_stage = side1.iter().chain(&side2).map(|p| p.1).collect();
        steps.push(ExpansionStep {
            spec,
            result_size: replay.vertex_count(),
        });
    }
    assert!(
        is_isomorphism(&replay, g, &to_stage),
        "replayed expansions reproduce the input"
    );
    Ok(ExpansionSequence {
        base: current.label(0).to_string(),
        steps,
    })
}

fn is_isomorphism(h: &Graph, g: &Graph, map: &[Vertex]) -> bool {
    h.vertex_count() == g.vertex_count()
        && h.edge_count() == g.edge_count()
        && map.iter().collect::<BTreeSet<_>>().len() == map.len()
        && h.edges().iter().all(|&(u, v)| g.has_edge(map[u], map[v]))
}
