//! Isometric and lattice dimension of partial cubes.
//!
//! The isometric dimension is the number of θ-classes. The lattice dimension
//! is the isometric dimension minus the size of a maximum matching in the
//! semicube graph, which links two semicubes when together they cover every
//! vertex and they share at least one. Maximum matchings are computed with
//! Edmonds' blossom algorithm (see [`crate::matching`]).
//!
//! An explicit lattice embedding is read off the matching. A link between
//! semicubes `A` and `B` means the complement of `A` is properly contained in
//! `B`, so following links strings semicubes into strictly increasing
//! chains `C_1 ⊂ C_2 ⊂ ... ⊂ C_k`. Each chain contributes one coordinate,
//! the number of its semicubes containing the vertex.

use std::collections::HashMap;

use log::warn;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::matching::maximum_matching as blossom;
use crate::metric::{theta_partition_with, SemicubeTable, Side};
use crate::recognition::require_partial_cube;

/// A semicube as a vertex of the semicube graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemicubeNode {
    pub vertices: VertexSet,
    /// Every directed edge `(a, b)` with `W_ab` equal to `vertices`.
    pub edges: Vec<Edge>,
    /// θ-class of the defining edges.
    pub class: usize,
}

/// Semicubes of a partial cube and the links between them.
///
/// Node `2k` is the semicube of class `k` not containing the first vertex,
/// node `2k + 1` its opposite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemicubeGraph {
    pub nodes: Vec<SemicubeNode>,
    /// Pairs `(i, j)`, `i < j`, of linked nodes in lexicographic order.
    pub links: Vec<(usize, usize)>,
    vertex_count: usize,
}

impl SemicubeGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Index of the semicube opposite to node `i`.
    pub fn opposite(&self, i: usize) -> usize {
        i ^ 1
    }

    /// Whether nodes `i` and `j` cover all vertices and intersect.
    pub fn covers_and_meets(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.nodes[i].vertices, &self.nodes[j].vertices);
        let common = a.intersection(b).count();
        common > 0 && a.len() + b.len() - common == self.vertex_count
    }

    /// The nested form of the link condition: `W_ba ⊂ W_cd ⇔ W_dc ⊂ W_ab`
    /// with proper inclusions, evaluated for nodes `W_ab = i`, `W_cd = j`.
    /// Both sides are reported.
    pub fn nested(&self, i: usize, j: usize) -> (bool, bool) {
        let proper = |x: &VertexSet, y: &VertexSet| x.len() < y.len() && x.is_subset(y);
        let ba = &self.nodes[self.opposite(i)].vertices;
        let dc = &self.nodes[self.opposite(j)].vertices;
        (
            proper(ba, &self.nodes[j].vertices),
            proper(dc, &self.nodes[i].vertices),
        )
    }
}

/// A set of vertex-disjoint links of a semicube graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Isometric embedding into `Z^dimension` with the ℓ1 metric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeEmbedding {
    pub dimension: usize,
    pub coords: Vec<Vec<i64>>,
    /// Set when the chain construction on the first matching failed
    /// verification and another matching was used.
    pub diagnostic: Option<String>,
}

impl LatticeEmbedding {
    pub fn l1(&self, u: Vertex, v: Vertex) -> u64 {
        self.coords[u]
            .iter()
            .zip(&self.coords[v])
            .map(|(a, b)| a.abs_diff(*b))
            .sum()
    }

    /// Whether ℓ1 distances reproduce graph distances and every vector has
    /// `dimension` entries.
    pub fn is_isometric(&self, g: &Graph) -> bool {
        self.coords.len() == g.vertex_count()
            && self.coords.iter().all(|c| c.len() == self.dimension)
            && g.vertices().all(|u| {
                (u + 1..g.vertex_count()).all(|v| g.dist(u, v) == Some(self.l1(u, v) as u32))
            })
    }
}

/// Number of θ-classes of a partial cube.
pub fn isometric_dimension(g: &Graph) -> Result<usize> {
    require_partial_cube(g)?;
    let table = SemicubeTable::new(g)?;
    Ok(theta_partition_with(g, &table).len())
}

pub fn semicube_graph(g: &Graph) -> Result<SemicubeGraph> {
    require_partial_cube(g)?;
    let table = SemicubeTable::new(g)?;
    let theta = theta_partition_with(g, &table);
    let n = g.vertex_count();

    // key each semicube by its vertex set; θ-related edges collapse together
    let mut by_set: HashMap<VertexSet, usize> = HashMap::new();
    let mut nodes: Vec<Option<SemicubeNode>> = vec![None; 2 * theta.len()];
    for (i, &(x, y)) in g.edges().iter().enumerate() {
        let class = theta.class_of(i);
        for (side, edge) in [(Side::Near, (x, y)), (Side::Far, (y, x))] {
            let vertices: VertexSet = (0..n).filter(|&w| table.side(i, w) == side).collect();
            let slot = 2 * class + usize::from(vertices.contains(&0));
            if let Some(&existing) = by_set.get(&vertices) {
                assert_eq!(existing, slot, "equal semicubes from different classes");
            } else {
                by_set.insert(vertices.clone(), slot);
            }
            nodes[slot]
                .get_or_insert_with(|| SemicubeNode {
                    vertices,
                    edges: Vec::new(),
                    class,
                })
                .edges
                .push(edge);
        }
    }
    let nodes: Vec<SemicubeNode> = nodes
        .into_iter()
        .map(|node| node.expect("each class has two semicubes"))
        .collect();
    let mut sg = SemicubeGraph {
        nodes,
        links: Vec::new(),
        vertex_count: n,
    };
    for i in 0..sg.nodes.len() {
        for j in i + 1..sg.nodes.len() {
            if sg.covers_and_meets(i, j) {
                sg.links.push((i, j));
            }
        }
    }
    Ok(sg)
}

/// Maximum matching among the links of `sg`.
pub fn maximum_matching(sg: &SemicubeGraph) -> Matching {
    Matching {
        pairs: blossom(sg.nodes.len(), &sg.links),
    }
}

pub fn lattice_dimension(g: &Graph) -> Result<usize> {
    let sg = semicube_graph(g)?;
    Ok(sg.nodes.len() / 2 - maximum_matching(&sg).len())
}

/// Explicit ℓ1 embedding with [`lattice_dimension`] coordinates.
///
/// The result is verified before it is returned. If the chains built from
/// the blossom matching do not verify, other maximum matchings are tried and
/// the result carries a diagnostic.
pub fn lattice_embedding(g: &Graph) -> Result<LatticeEmbedding> {
    let sg = semicube_graph(g)?;
    let matching = maximum_matching(&sg);
    let dimension = sg.nodes.len() / 2 - matching.len();
    if let Some(emb) = chain_embedding(g, &sg, &matching).filter(|e| e.dimension == dimension) {
        return Ok(emb);
    }
    warn!("chain construction failed on the blossom matching; searching other maximum matchings");
    let mut tried = 0usize;
    let mut found = None;
    enumerate_matchings(&sg, matching.len(), &mut |m| {
        tried += 1;
        found = chain_embedding(g, &sg, m).filter(|e| e.dimension == dimension);
        found.is_none() && tried < FALLBACK_LIMIT
    });
    match found {
        Some(mut emb) => {
            emb.diagnostic = Some(format!(
                "chain construction on the first maximum matching did not verify; \
                 succeeded on alternative matching #{tried}"
            ));
            Ok(emb)
        }
        None => Err(Error::EmbeddingVerificationFailed(format!(
            "no verified chain embedding among {tried} maximum matchings"
        ))),
    }
}

const FALLBACK_LIMIT: usize = 100_000;

/// Builds chains from `matching` and checks the result. `None` when the
/// links do not string into strictly nested chains or the coordinates are
/// not an ℓ1-isometry.
fn chain_embedding(g: &Graph, sg: &SemicubeGraph, matching: &Matching) -> Option<LatticeEmbedding> {
    let k = sg.nodes.len();
    let mut next = vec![usize::MAX; k];
    let mut prev = vec![usize::MAX; k];
    for &(a, b) in &matching.pairs {
        for (from, to) in [(sg.opposite(a), b), (sg.opposite(b), a)] {
            if next[from] != usize::MAX || prev[to] != usize::MAX {
                return None;
            }
            next[from] = to;
            prev[to] = from;
        }
    }
    let mut covered = vec![false; k / 2];
    let mut coords = vec![Vec::new(); g.vertex_count()];
    for class in 0..k / 2 {
        if covered[class] {
            continue;
        }
        let mut start = 2 * class;
        let mut steps = 0;
        while prev[start] != usize::MAX {
            start = prev[start];
            steps += 1;
            if steps > k {
                return None;
            }
        }
        let mut chain = vec![start];
        while next[*chain.last().unwrap()] != usize::MAX {
            chain.push(next[*chain.last().unwrap()]);
            if chain.len() > k {
                return None;
            }
        }
        for w in chain.windows(2) {
            let (small, big) = (&sg.nodes[w[0]].vertices, &sg.nodes[w[1]].vertices);
            if !(small.len() < big.len() && small.is_subset(big)) {
                return None;
            }
        }
        for &node in &chain {
            let c = sg.nodes[node].class;
            if covered[c] {
                return None;
            }
            covered[c] = true;
        }
        for (v, coord) in coords.iter_mut().enumerate() {
            let count = chain
                .iter()
                .filter(|&&node| sg.nodes[node].vertices.contains(&v))
                .count();
            coord.push(count as i64);
        }
    }
    let emb = LatticeEmbedding {
        dimension: coords.first().map_or(k / 2 - matching.len(), Vec::len),
        coords,
        diagnostic: None,
    };
    emb.is_isometric(g).then_some(emb)
}

/// Calls `visit` on maximum matchings of `size` links until it returns false.
fn enumerate_matchings(sg: &SemicubeGraph, size: usize, visit: &mut dyn FnMut(&Matching) -> bool) {
    fn rec(
        links: &[(usize, usize)],
        from: usize,
        used: &mut Vec<bool>,
        current: &mut Matching,
        size: usize,
        visit: &mut dyn FnMut(&Matching) -> bool,
    ) -> bool {
        if current.len() == size {
            return visit(current);
        }
        for i in from..links.len() {
            if current.len() + (links.len() - i) < size {
                break;
            }
            let (a, b) = links[i];
            if used[a] || used[b] {
                continue;
            }
            used[a] = true;
            used[b] = true;
            current.pairs.push((a, b));
            let go_on = rec(links, i + 1, used, current, size, visit);
            current.pairs.pop();
            used[a] = false;
            used[b] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut used = vec![false; sg.nodes.len()];
    rec(
        &sg.links,
        0,
        &mut used,
        &mut Matching::default(),
        size,
        visit,
    );
}
