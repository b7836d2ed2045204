//! Finite simple undirected graphs with their shortest-path metric.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex index into a [`Graph`].
pub type Vertex = usize;

/// An edge as a pair of vertex indices. Edge identity is the unordered pair.
pub type Edge = (Vertex, Vertex);

pub type VertexSet = BTreeSet<Vertex>;

/// Hop distances between all vertex pairs, computed by BFS.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    fn compute(adj: &[Vec<Vertex>]) -> Self {
        let n = adj.len();
        let mut dist = vec![Self::UNREACHABLE; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in &adj[u] {
                    if row[w] == Self::UNREACHABLE {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, dist }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Distance between `u` and `v`, or `None` when they lie in different components.
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        match self.dist[u * self.n + v] {
            Self::UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Raw entry; [`DistanceMatrix::UNREACHABLE`] marks disconnected pairs.
    #[inline]
    pub fn raw(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for u in 0..self.n {
            list.entry(&self.row(u));
        }
        list.finish()
    }
}

/// A finite simple undirected graph over opaque string labels.
///
/// Labels are mapped to dense indices in input order. Edges keep their input
/// order, which is the canonical edge order used throughout the crate. The
/// distance matrix is computed once at construction.
#[derive(Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
    edge_ids: HashMap<Edge, usize>,
    dist: DistanceMatrix,
}

fn key(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph from labels and label pairs.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let mut idx_edges = Vec::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *index
                .get(a)
                .ok_or_else(|| Error::UnknownEndpoint(a.to_string()))?;
            let v = *index
                .get(b)
                .ok_or_else(|| Error::UnknownEndpoint(b.to_string()))?;
            idx_edges.push((u, v));
        }
        Self::from_indexed(labels, idx_edges)
    }

    /// Builds a graph from labels and edges given as index pairs.
    pub fn from_indexed(labels: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let mut adj = vec![Vec::new(); n];
        let mut edge_ids = HashMap::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n {
                return Err(Error::UnknownEndpoint(u.to_string()));
            }
            if v >= n {
                return Err(Error::UnknownEndpoint(v.to_string()));
            }
            if u == v {
                return Err(Error::SelfLoop(labels[u].clone()));
            }
            if edge_ids.insert(key(u, v), i).is_some() {
                return Err(Error::DuplicateEdge(labels[u].clone(), labels[v].clone()));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        let dist = DistanceMatrix::compute(&adj);
        Ok(Graph {
            labels,
            index,
            adj,
            edges,
            edge_ids,
            dist,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.labels.len()
    }

    /// Edges in canonical (input) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Result<Vertex> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_ids.contains_key(&key(u, v))
    }

    /// Position of the edge `uv` in canonical order.
    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edge_ids.get(&key(u, v)).copied()
    }

    /// Resolves an edge, failing with [`Error::NotAnEdge`].
    pub fn require_edge(&self, u: Vertex, v: Vertex) -> Result<usize> {
        self.edge_id(u, v)
            .ok_or_else(|| Error::NotAnEdge(self.labels[u].clone(), self.labels[v].clone()))
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// Distance between two vertices, `None` if unreachable.
    pub fn dist(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.dist.get(u, v)
    }

    /// Distance between two vertices of a connected graph.
    #[inline]
    pub(crate) fn d(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist.raw(u, v)
    }

    pub fn is_connected(&self) -> bool {
        self.labels.is_empty()
            || self
                .dist
                .row(0)
                .iter()
                .all(|&d| d != DistanceMatrix::UNREACHABLE)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Two-colors the graph. On failure returns an odd closed walk.
    pub fn bipartition(&self) -> std::result::Result<Vec<bool>, Vec<Vertex>> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            parent[w] = u;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return Err(self.odd_walk(&parent, u, w)),
                        _ => {}
                    }
                }
            }
        }
        Ok(color.into_iter().map(Option::unwrap).collect())
    }

    /// Closes the BFS-tree paths from `u` and `w` to their common ancestor
    /// with the edge `uw`. Both endpoints have equal color, so the cycle is odd.
    fn odd_walk(&self, parent: &[usize], u: Vertex, w: Vertex) -> Vec<Vertex> {
        let path_to_root = |mut x: Vertex| {
            let mut p = vec![x];
            while parent[x] != usize::MAX {
                x = parent[x];
                p.push(x);
            }
            p
        };
        let mut pu = path_to_root(u);
        let mut pw = path_to_root(w);
        while pu.len() > 1 && pw.len() > 1 && pu[pu.len() - 2] == pw[pw.len() - 2] {
            pu.pop();
            pw.pop();
        }
        // pu and pw now end at the same lowest common ancestor
        pw.pop();
        pu.extend(pw.into_iter().rev());
        pu
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    fn resolve_set(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&&v| v >= self.vertex_count()) {
            Some(v) => Err(Error::UnknownVertex(v.to_string())),
            None => Ok(()),
        }
    }

    /// The subgraph induced by `keep`, vertices in the original relative order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph> {
        self.resolve_set(keep)?;
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        let mut labels = Vec::with_capacity(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
            labels.push(self.labels[v].clone());
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep.contains(&u) && keep.contains(&v))
            .map(|&(u, v)| (new_index[u], new_index[v]))
            .collect();
        Graph::from_indexed(labels, edges)
    }

    /// Whether `set` induces a subgraph whose own metric agrees with this graph's.
    ///
    /// The induced subgraph must be connected.
    pub fn is_isometric_subset(&self, set: &VertexSet) -> Result<bool> {
        let sub = self.induced_subgraph(set)?;
        if !sub.is_connected() {
            return Err(Error::DisconnectedSubset);
        }
        let members: Vec<Vertex> = set.iter().copied().collect();
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if sub.dist.raw(i, j) != self.dist.raw(u, v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether every vertex lying on a shortest path between two members is a member.
    pub fn is_convex_subset(&self, set: &VertexSet) -> Result<bool> {
        self.resolve_set(set)?;
        let mut mask = vec![false; self.vertex_count()];
        for &v in set {
            mask[v] = true;
        }
        Ok(self.convexity_violation(&mask).is_none())
    }

    /// Finds `(x, y, z)` with `x, y` in the set, `z` outside it and
    /// `d(x,z) + d(z,y) = d(x,y)`.
    ///
    /// For each source `x` the vertices on geodesics from `x` to the set are
    /// collected by sweeping BFS layers outward-in, so a pass costs `O(|E|)`.
    pub(crate) fn convexity_violation(&self, mask: &[bool]) -> Option<(Vertex, Vertex, Vertex)> {
        let n = self.vertex_count();
        let mut order: Vec<Vertex> = Vec::with_capacity(n);
        let mut on_geodesic = vec![false; n];
        for x in (0..n).filter(|&x| mask[x]) {
            let row = self.dist.row(x);
            order.clear();
            order.extend((0..n).filter(|&v| row[v] != DistanceMatrix::UNREACHABLE));
            order.sort_unstable_by_key(|&v| std::cmp::Reverse(row[v]));
            for &z in &order {
                on_geodesic[z] = mask[z]
                    || self.adj[z]
                        .iter()
                        .any(|&w| row[w] == row[z] + 1 && on_geodesic[w]);
            }
            let bad = order.iter().copied().find(|&z| !mask[z] && on_geodesic[z]);
            on_geodesic.iter_mut().for_each(|b| *b = false);
            if let Some(z) = bad {
                let y = (0..n)
                    .find(|&y| mask[y] && row[z] + self.dist.raw(z, y) == row[y])
                    .expect("geodesic sweep found a vertex between members");
                return Some((x, y, z));
            }
        }
        None
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|&(u, v)| (self.label(u), self.label(v)))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

/// Graphs are equal when they have the same labels in the same order and the
/// same edge set.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.edges.len() == other.edges.len()
            && self.edge_ids.keys().all(|k| other.edge_ids.contains_key(k))
    }
}

impl Eq for Graph {}

/// Small named graphs used as building blocks and in examples.
pub mod named {
    use super::Graph;

    fn numbered(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    /// Path on `n` vertices labeled `0..n`.
    pub fn path(n: usize) -> Graph {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_indexed(numbered(n), edges).expect("valid path")
    }

    /// Cycle on `n >= 3` vertices labeled `0..n`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_indexed(numbered(n), edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::from_indexed(numbered(n), edges).expect("valid complete graph")
    }

    /// `K_{m,n}` with sides labeled `a0..` and `b0..`.
    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        let labels = (0..m)
            .map(|i| format!("a{i}"))
            .chain((0..n).map(|j| format!("b{j}")))
            .collect();
        let edges = (0..m)
            .flat_map(|i| (0..n).map(move |j| (i, m + j)))
            .collect();
        Graph::from_indexed(labels, edges).expect("valid complete bipartite graph")
    }

    /// Star `K_{1,n}` with center `c` and leaves `l0..`.
    pub fn star(n: usize) -> Graph {
        let labels = std::iter::once("c".to_string())
            .chain((0..n).map(|i| format!("l{i}")))
            .collect();
        let edges = (1..=n).map(|i| (0, i)).collect();
        Graph::from_indexed(labels, edges).expect("valid star")
    }

    /// Hypercube `Q_d` on bit strings of length `d`.
    pub fn hypercube(d: usize) -> Graph {
        let n = 1usize << d;
        let labels = (0..n)
            .map(|i| {
                if d == 0 {
                    "e".to_string()
                } else {
                    format!("{i:0d$b}")
                }
            })
            .collect();
        let edges = (0..n)
            .flat_map(|i| (0..d).map(move |b| (i, i ^ (1 << b))))
            .filter(|&(i, j)| i < j)
            .collect();
        Graph::from_indexed(labels, edges).expect("valid hypercube")
    }
}
