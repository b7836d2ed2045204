//! Semicubes, the Djoković relation θ, the Winkler relation Θ and the
//! fundamental sets attached to an edge.

use crate::error::Result;
use crate::graph::{Edge, Graph, Vertex, VertexSet};

/// Which side of an edge `xy` a vertex falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Strictly closer to `x`: a member of `W_xy`.
    Near,
    /// Strictly closer to `y`: a member of `W_yx`.
    Far,
    /// Equidistant; only possible in non-bipartite graphs.
    Neither,
}

/// The two opposite semicubes of a directed edge `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemicubePair {
    pub a: Vertex,
    pub b: Vertex,
    /// Vertices strictly closer to `a` than to `b`.
    pub w_ab: VertexSet,
    /// Vertices strictly closer to `b` than to `a`.
    pub w_ba: VertexSet,
}

impl SemicubePair {
    pub fn is_partition(&self, n: usize) -> bool {
        self.w_ab.len() + self.w_ba.len() == n
    }
}

fn side_of(g: &Graph, x: Vertex, y: Vertex, w: Vertex) -> Side {
    let (dx, dy) = (g.d(w, x), g.d(w, y));
    match dx.cmp(&dy) {
        std::cmp::Ordering::Less => Side::Near,
        std::cmp::Ordering::Greater => Side::Far,
        std::cmp::Ordering::Equal => Side::Neither,
    }
}

/// Semicubes `W_ab` and `W_ba` of the edge `ab`.
pub fn semicube(g: &Graph, a: Vertex, b: Vertex) -> Result<SemicubePair> {
    g.require_connected()?;
    g.require_edge(a, b)?;
    let mut w_ab = VertexSet::new();
    let mut w_ba = VertexSet::new();
    for w in g.vertices() {
        match side_of(g, a, b, w) {
            Side::Near => {
                assert_eq!(
                    g.d(w, b),
                    g.d(w, a) + 1,
                    "closer-to-a vertex not one step nearer"
                );
                w_ab.insert(w);
            }
            Side::Far => {
                assert_eq!(
                    g.d(w, a),
                    g.d(w, b) + 1,
                    "closer-to-b vertex not one step nearer"
                );
                w_ba.insert(w);
            }
            Side::Neither => {}
        }
    }
    Ok(SemicubePair { a, b, w_ab, w_ba })
}

/// Side assignments for every edge of a connected graph, oriented as the
/// edge is stored. This is the opt-in cache of all `2|E|` semicubes.
#[derive(Debug, Clone)]
pub struct SemicubeTable {
    n: usize,
    sides: Vec<Side>,
}

impl SemicubeTable {
    pub fn new(g: &Graph) -> Result<Self> {
        g.require_connected()?;
        let n = g.vertex_count();
        let mut sides = Vec::with_capacity(n * g.edge_count());
        for &(x, y) in g.edges() {
            sides.extend(g.vertices().map(|w| side_of(g, x, y, w)));
        }
        Ok(SemicubeTable { n, sides })
    }

    /// Side of `w` relative to the edge with canonical index `edge`.
    #[inline]
    pub fn side(&self, edge: usize, w: Vertex) -> Side {
        self.sides[edge * self.n + w]
    }

    pub fn sides(&self, edge: usize) -> &[Side] {
        &self.sides[edge * self.n..(edge + 1) * self.n]
    }

    /// Whether edge `f = uv` joins the two semicubes of edge `e`.
    #[inline]
    pub fn related(&self, e: usize, (u, v): Edge) -> bool {
        matches!(
            (self.side(e, u), self.side(e, v)),
            (Side::Near, Side::Far) | (Side::Far, Side::Near)
        )
    }
}

/// Djoković's relation: `f` joins a vertex of `W_xy` with a vertex of `W_yx`.
pub fn djokovic_related(g: &Graph, (x, y): Edge, (u, v): Edge) -> Result<bool> {
    g.require_edge(x, y)?;
    g.require_edge(u, v)?;
    g.require_connected()?;
    Ok(matches!(
        (side_of(g, x, y, u), side_of(g, x, y, v)),
        (Side::Near, Side::Far) | (Side::Far, Side::Near)
    ))
}

fn winkler_raw(g: &Graph, (x, y): Edge, (u, v): Edge) -> bool {
    g.d(x, u) + g.d(y, v) != g.d(x, v) + g.d(y, u)
}

/// Winkler's relation: `d(x,u) + d(y,v) != d(x,v) + d(y,u)`.
pub fn winkler_related(g: &Graph, e: Edge, f: Edge) -> Result<bool> {
    g.require_edge(e.0, e.1)?;
    g.require_edge(f.0, f.1)?;
    g.require_connected()?;
    let r = winkler_raw(g, e, f);
    debug_assert_eq!(r, winkler_raw(g, (e.1, e.0), f));
    debug_assert_eq!(r, winkler_raw(g, e, (f.1, f.0)));
    Ok(r)
}

/// Partition of the edge set into classes of the transitive closure of θ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPartition {
    /// Edge indices per class. Classes are ordered by their smallest edge and
    /// each class is sorted.
    pub classes: Vec<Vec<usize>>,
    /// True iff θ itself was already transitive, so no pairs had to be added.
    pub is_equivalence: bool,
    class_of: Vec<usize>,
}

impl ThetaPartition {
    /// Class index of the edge with canonical index `edge`.
    pub fn class_of(&self, edge: usize) -> usize {
        self.class_of[edge]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// θ-classes of a connected graph.
pub fn theta_partition(g: &Graph) -> Result<ThetaPartition> {
    let table = SemicubeTable::new(g)?;
    Ok(theta_partition_with(g, &table))
}

pub(crate) fn theta_partition_with(g: &Graph, table: &SemicubeTable) -> ThetaPartition {
    let edges = g.edges();
    let m = edges.len();
    let mut related = vec![false; m * m];
    let mut parent: Vec<usize> = (0..m).collect();
    for i in 0..m {
        for j in 0..m {
            if table.related(i, edges[j]) {
                related[i * m + j] = true;
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_class = vec![usize::MAX; m];
    let class_of: Vec<usize> = (0..m)
        .map(|e| {
            let r = find(&mut parent, e);
            if root_class[r] == usize::MAX {
                root_class[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[root_class[r]].push(e);
            root_class[r]
        })
        .collect();
    let is_equivalence = classes
        .iter()
        .all(|c| c.iter().all(|&i| c.iter().all(|&j| related[i * m + j])));
    ThetaPartition {
        classes,
        is_equivalence,
        class_of,
    }
}

/// The semicubes of `ab` together with `F_ab`, `U_ab` and `U_ba`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalSets {
    pub semicubes: SemicubePair,
    /// Edges θ-related to `ab`, each oriented from `W_ab` to `W_ba`, in
    /// canonical edge order.
    pub f_ab: Vec<Edge>,
    /// Members of `W_ab` with a neighbor in `W_ba`.
    pub u_ab: VertexSet,
    /// Members of `W_ba` with a neighbor in `W_ab`.
    pub u_ba: VertexSet,
}

impl FundamentalSets {
    /// Whether `F_ab` is a matching whose pairing is an isomorphism
    /// `<U_ab> -> <U_ba>`.
    pub fn matching_is_isomorphism(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let mut partner = vec![usize::MAX; n];
        for &(u, v) in &self.f_ab {
            if partner[u] != usize::MAX || partner[v] != usize::MAX {
                return false;
            }
            partner[u] = v;
            partner[v] = u;
        }
        self.u_ab.iter().all(|&x| {
            self.u_ab
                .iter()
                .all(|&y| g.has_edge(x, y) == g.has_edge(partner[x], partner[y]))
        })
    }
}

pub fn fundamental_sets(g: &Graph, a: Vertex, b: Vertex) -> Result<FundamentalSets> {
    let semicubes = semicube(g, a, b)?;
    let mut f_ab = Vec::new();
    let mut u_ab = VertexSet::new();
    let mut u_ba = VertexSet::new();
    for &(u, v) in g.edges() {
        let (u, v) = if semicubes.w_ab.contains(&v) {
            (v, u)
        } else {
            (u, v)
        };
        if semicubes.w_ab.contains(&u) && semicubes.w_ba.contains(&v) {
            f_ab.push((u, v));
            u_ab.insert(u);
            u_ba.insert(v);
        }
    }
    Ok(FundamentalSets {
        semicubes,
        f_ab,
        u_ab,
        u_ba,
    })
}
